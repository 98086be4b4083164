#include "conelink/report.hpp"

#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace conelink {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::set<std::string>& known_kinds() {
    static const std::set<std::string> kinds = {
        "betti",      "link",       "invert",          "bp-fingerprint", "bp-verdict",
        "table-row",  "selftest",   "compare-cones",   "torsion-surface"};
    return kinds;
}

ordered_json decimal_array(const std::vector<BigInt>& values) {
    ordered_json arr = ordered_json::array();
    for (const BigInt& v : values) arr.push_back(to_decimal(v));
    return arr;
}

ordered_json long_array(const std::vector<long>& values) {
    ordered_json arr = ordered_json::array();
    for (long v : values) arr.push_back(v);
    return arr;
}

// "a;b;c" for CSV cells, "[a, b, c]" for plain text.
std::string join(const ordered_json& array, const std::string& sep) {
    std::ostringstream out;
    bool first = true;
    for (const auto& item : array) {
        if (!first) out << sep;
        first = false;
        if (item.is_string()) {
            out << item.get<std::string>();
        } else {
            out << item.dump();
        }
    }
    return out.str();
}

std::string bracket(const ordered_json& array) { return "[" + join(array, ", ") + "]"; }

ordered_json fingerprint_fields(const bp::Fingerprint& f) {
    ordered_json obj;
    obj["n"] = f.ambient_dim;
    obj["a"] = f.tangent_degree;
    obj["k"] = f.tangent_count;
    obj["multiplicity"] = f.multiplicity;
    obj["sing_dim"] = f.singular_dim;
    return obj;
}

std::string fingerprint_plain(const ordered_json& f) {
    std::ostringstream out;
    out << "n=" << f.at("n") << " a=" << f.at("a") << " k=" << f.at("k")
        << " multiplicity=" << f.at("multiplicity") << " sing_dim=" << f.at("sing_dim");
    return out.str();
}

std::string csv_two_rows(const std::vector<std::string>& header,
                         const std::vector<std::string>& row) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    return out.str();
}

std::string render_csv(const OutputRecord& record);
std::string render_plain(const OutputRecord& record);

std::string render_csv(const OutputRecord& record) {
    const ordered_json& f = record.fields;
    const std::string kind = record.kind();
    if (kind == "betti") {
        return csv_two_rows({"n", "d", "betti"},
                            {f.at("n").dump(), f.at("d").dump(), join(f.at("betti"), ";")});
    }
    if (kind == "link") {
        std::vector<std::string> header, row;
        if (f.contains("exponents")) {
            header.push_back("exponents");
            row.push_back(join(f.at("exponents"), ";"));
        }
        if (f.contains("n")) {
            header.push_back("n");
            row.push_back(f.at("n").dump());
            header.push_back("d");
            row.push_back(f.at("d").dump());
        }
        if (f.contains("base")) {
            header.push_back("base");
            row.push_back(join(f.at("base"), ";"));
        }
        header.push_back("link");
        row.push_back(join(f.at("link"), ";"));
        return csv_two_rows(header, row);
    }
    if (kind == "invert") {
        return csv_two_rows({"n", "b", "candidates"},
                            {f.at("n").dump(), f.at("b").get<std::string>(),
                             join(f.at("candidates"), ";")});
    }
    if (kind == "compare-cones") {
        return csv_two_rows({"n", "p", "r", "distinguished", "left", "right"},
                            {f.at("n").dump(), f.at("p").dump(), f.at("r").dump(),
                             f.at("distinguished").get<bool>() ? "true" : "false",
                             join(f.at("left"), ";"), join(f.at("right"), ";")});
    }
    if (kind == "bp-fingerprint") {
        return csv_two_rows({"exponents", "n", "a", "k", "multiplicity", "sing_dim"},
                            {join(f.at("exponents"), ";"), f.at("n").dump(), f.at("a").dump(),
                             f.at("k").dump(), f.at("multiplicity").dump(),
                             f.at("sing_dim").dump()});
    }
    if (kind == "bp-verdict") {
        return csv_two_rows({"left", "right", "outcome", "reason"},
                            {join(f.at("left"), ";"), join(f.at("right"), ";"),
                             f.at("outcome").get<std::string>(),
                             f.at("reason").get<std::string>()});
    }
    if (kind == "torsion-surface") {
        return csv_two_rows({"d", "torsion"}, {f.at("d").dump(), f.at("torsion").get<std::string>()});
    }
    if (kind == "table-row") {
        std::ostringstream out;
        out << f.at("n") << "," << f.at("d") << "," << f.at("middle").get<std::string>() << ","
            << f.at("chi").get<std::string>() << "," << join(f.at("link"), ";");
        return out.str();
    }
    if (kind == "selftest") {
        std::ostringstream out;
        out << "name,pass,cases";
        for (const auto& prop : f.at("properties")) {
            out << "\n"
                << prop.at("name").get<std::string>() << ","
                << (prop.at("pass").get<bool>() ? "true" : "false") << "," << prop.at("cases");
        }
        return out.str();
    }
    throw std::invalid_argument("unknown record kind '" + kind + "'");
}

std::string render_plain(const OutputRecord& record) {
    const ordered_json& f = record.fields;
    const std::string kind = record.kind();
    std::ostringstream out;
    if (kind == "betti") {
        out << "betti(n=" << f.at("n") << ", d=" << f.at("d") << ") = " << bracket(f.at("betti"));
        return out.str();
    }
    if (kind == "link") {
        out << "link(";
        bool first = true;
        if (f.contains("exponents")) {
            out << "exponents=" << bracket(f.at("exponents"));
            first = false;
        }
        if (f.contains("n")) {
            out << (first ? "" : ", ") << "n=" << f.at("n") << ", d=" << f.at("d");
            first = false;
        }
        if (f.contains("base")) {
            out << (first ? "" : ", ") << "base=" << bracket(f.at("base"));
        }
        out << ") = " << bracket(f.at("link"));
        return out.str();
    }
    if (kind == "invert") {
        out << "candidates(n=" << f.at("n") << ", b=" << f.at("b").get<std::string>()
            << ") = " << bracket(f.at("candidates"));
        return out.str();
    }
    if (kind == "compare-cones") {
        out << "compare-cones(n=" << f.at("n") << ", p=" << f.at("p") << ", r=" << f.at("r")
            << "): "
            << (f.at("distinguished").get<bool>() ? "distinguished"
                                                  : "not distinguished (link Betti numbers agree)")
            << "\n  left link:  " << bracket(f.at("left"))
            << "\n  right link: " << bracket(f.at("right"));
        return out.str();
    }
    if (kind == "bp-fingerprint") {
        out << "fingerprint(exponents=" << bracket(f.at("exponents"))
            << "): " << fingerprint_plain(f);
        return out.str();
    }
    if (kind == "bp-verdict") {
        out << f.at("outcome").get<std::string>();
        if (f.at("reason").get<std::string>() != "None") {
            out << " (reason: " << f.at("reason").get<std::string>() << ")";
        } else {
            out << " (these invariants agree; inconclusive)";
        }
        out << "\n  left:  exponents=" << bracket(f.at("left")) << " "
            << fingerprint_plain(f.at("left_fingerprint"));
        out << "\n  right: exponents=" << bracket(f.at("right")) << " "
            << fingerprint_plain(f.at("right_fingerprint"));
        return out.str();
    }
    if (kind == "torsion-surface") {
        out << "torsion(d=" << f.at("d") << ") = Z/" << f.at("torsion").get<std::string>() << "Z";
        return out.str();
    }
    if (kind == "table-row") {
        return render_csv(record);
    }
    if (kind == "selftest") {
        bool first = true;
        for (const auto& prop : f.at("properties")) {
            if (!first) out << "\n";
            first = false;
            const auto cases = prop.at("cases").get<long>();
            out << (prop.at("pass").get<bool>() ? "[PASS] " : "[FAIL] ")
                << prop.at("name").get<std::string>() << " (" << cases
                << (cases == 1 ? " case)" : " cases)");
            const std::string detail = prop.at("detail").get<std::string>();
            if (!detail.empty()) out << " -- " << detail;
        }
        std::size_t passed = 0, total = 0;
        for (const auto& prop : f.at("properties")) {
            ++total;
            if (prop.at("pass").get<bool>()) ++passed;
        }
        out << "\nselftest: " << (passed == total ? "PASS" : "FAIL") << " (" << passed << "/"
            << total << " properties)";
        return out.str();
    }
    throw std::invalid_argument("unknown record kind '" + kind + "'");
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::Plain;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw usage_error("bad-argument", "unknown format '" + name + "' (expected plain, json or csv)");
}

std::string render_json(const OutputRecord& record) { return record.fields.dump(); }

OutputRecord parse_record(const std::string& json_line) {
    ordered_json fields;
    try {
        fields = ordered_json::parse(json_line);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("not a JSON record: ") + e.what());
    }
    if (!fields.is_object() || !fields.contains("kind") || !fields.at("kind").is_string()) {
        throw std::invalid_argument("a record is a JSON object with a string 'kind' field");
    }
    const std::string kind = fields.at("kind").get<std::string>();
    if (known_kinds().count(kind) == 0) {
        throw std::invalid_argument("unknown record kind '" + kind + "'");
    }
    return OutputRecord{std::move(fields)};
}

std::string render(const OutputRecord& record, Format format) {
    switch (format) {
        case Format::Json: return render_json(record);
        case Format::Csv: return render_csv(record);
        case Format::Plain: return render_plain(record);
    }
    return render_json(record);
}

OutputRecord betti_record(const HypersurfaceClass& h, const BettiVector& b) {
    OutputRecord r;
    r.fields["kind"] = "betti";
    r.fields["n"] = h.dim();
    r.fields["d"] = h.degree();
    r.fields["betti"] = decimal_array(b.values());
    return r;
}

OutputRecord link_record(const HypersurfaceClass& h, const LinkBettiVector& l) {
    OutputRecord r;
    r.fields["kind"] = "link";
    r.fields["n"] = h.dim();
    r.fields["d"] = h.degree();
    r.fields["link"] = decimal_array(l.values());
    return r;
}

OutputRecord link_record_from_base(const BettiVector& base, const LinkBettiVector& l) {
    OutputRecord r;
    r.fields["kind"] = "link";
    r.fields["base"] = decimal_array(base.values());
    r.fields["link"] = decimal_array(l.values());
    return r;
}

OutputRecord link_record_from_exponents(const bp::ExponentTuple& t, const HypersurfaceClass& base,
                                        const LinkBettiVector& l) {
    OutputRecord r;
    r.fields["kind"] = "link";
    r.fields["exponents"] = long_array(t.exponents());
    r.fields["n"] = base.dim();
    r.fields["d"] = base.degree();
    r.fields["link"] = decimal_array(l.values());
    return r;
}

OutputRecord invert_record(int n, const BigInt& b, const DegreeCandidates& candidates) {
    OutputRecord r;
    r.fields["kind"] = "invert";
    r.fields["n"] = n;
    r.fields["b"] = to_decimal(b);
    r.fields["candidates"] = long_array(candidates.matches);
    return r;
}

OutputRecord compare_record(int n, long p, long r_deg, bool distinguished,
                            const LinkBettiVector& left, const LinkBettiVector& right) {
    OutputRecord r;
    r.fields["kind"] = "compare-cones";
    r.fields["n"] = n;
    r.fields["p"] = p;
    r.fields["r"] = r_deg;
    r.fields["distinguished"] = distinguished;
    r.fields["left"] = decimal_array(left.values());
    r.fields["right"] = decimal_array(right.values());
    return r;
}

OutputRecord fingerprint_record(const bp::ExponentTuple& t, const bp::Fingerprint& f) {
    OutputRecord r;
    r.fields["kind"] = "bp-fingerprint";
    r.fields["exponents"] = long_array(t.exponents());
    const ordered_json fp = fingerprint_fields(f);
    for (const auto& [key, value] : fp.items()) r.fields[key] = value;
    return r;
}

OutputRecord verdict_record(const bp::ExponentTuple& left, const bp::ExponentTuple& right,
                            const bp::Verdict& v) {
    OutputRecord r;
    r.fields["kind"] = "bp-verdict";
    r.fields["left"] = long_array(left.exponents());
    r.fields["right"] = long_array(right.exponents());
    r.fields["outcome"] = bp::to_string(v.outcome);
    r.fields["reason"] = bp::to_string(v.reason);
    r.fields["left_fingerprint"] = fingerprint_fields(v.left);
    r.fields["right_fingerprint"] = fingerprint_fields(v.right);
    return r;
}

OutputRecord torsion_record(long d, long torsion) {
    OutputRecord r;
    r.fields["kind"] = "torsion-surface";
    r.fields["d"] = d;
    r.fields["torsion"] = std::to_string(torsion);
    return r;
}

OutputRecord table_row_record(int n, long d, const BigInt& middle, const BigInt& chi,
                              const LinkBettiVector& link) {
    OutputRecord r;
    r.fields["kind"] = "table-row";
    r.fields["n"] = n;
    r.fields["d"] = d;
    r.fields["middle"] = to_decimal(middle);
    r.fields["chi"] = to_decimal(chi);
    r.fields["link"] = decimal_array(link.values());
    return r;
}

std::string table_csv_header() { return "n,d,b_n,chi,link"; }

} // namespace conelink
