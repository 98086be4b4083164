#include "conelink/sweep.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "conelink/brieskorn.hpp"
#include "conelink/oracles.hpp"

namespace conelink::sweep {

namespace {

// Counts failures of `ok` over case indices [0, total). The serial loop is
// the reference; the OpenMP kernel must produce the same counts and the
// same first failing index.
PropertyResult sweep_cases(std::string name, long total, const std::function<bool(long)>& ok,
                           const std::function<std::string(long)>& describe, Mode mode) {
    long failures = 0;
    long first_bad = total;
    if (mode == Mode::Parallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : failures) reduction(min : first_bad)
        for (long i = 0; i < total; ++i) {
            if (!ok(i)) {
                ++failures;
                if (i < first_bad) first_bad = i;
            }
        }
    } else {
        for (long i = 0; i < total; ++i) {
            if (!ok(i)) {
                ++failures;
                if (i < first_bad) first_bad = i;
            }
        }
    }
    PropertyResult result;
    result.name = std::move(name);
    result.cases = total;
    result.pass = (failures == 0);
    if (!result.pass) {
        result.detail =
            std::to_string(failures) + " failure(s), first at " + describe(first_bad);
    }
    return result;
}

struct Grid {
    int max_dim;     // n in [0, max_dim]
    long max_degree; // d in [1, max_degree]

    long total() const { return static_cast<long>(max_dim + 1) * max_degree; }
    int n_of(long i) const { return static_cast<int>(i / max_degree); }
    long d_of(long i) const { return 1 + i % max_degree; }
    std::string describe(long i) const {
        return "n=" + std::to_string(n_of(i)) + " d=" + std::to_string(d_of(i));
    }
};

PropertyResult grid_property(const std::string& name, const Grid& grid,
                             const std::function<bool(int, long)>& ok, Mode mode) {
    return sweep_cases(
        name, grid.total(), [&](long i) { return ok(grid.n_of(i), grid.d_of(i)); },
        [&](long i) { return grid.describe(i); }, mode);
}

std::vector<bp::ExponentTuple> random_tuples(std::size_t count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> length_dist(1, 6);
    std::uniform_int_distribution<long> entry_dist(2, 9);
    std::vector<bp::ExponentTuple> tuples;
    tuples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<long> raw(static_cast<std::size_t>(length_dist(rng)));
        for (long& a : raw) a = entry_dist(rng);
        tuples.emplace_back(std::move(raw));
    }
    return tuples;
}

std::string tuple_text(const bp::ExponentTuple& t) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < t.exponents().size(); ++i) {
        out << (i ? "," : "") << t.exponents()[i];
    }
    out << ")";
    return out.str();
}

void validate_spec(const TableSpec& spec) {
    if (spec.dim_lo > spec.dim_hi || spec.deg_lo > spec.deg_hi) {
        throw usage_error("bad-range", "empty sweep range");
    }
    if (spec.dim_lo < 0 || spec.dim_hi > kMaxTableDim) {
        throw usage_error("bad-range", "dimension range must lie within [0, " +
                                           std::to_string(kMaxTableDim) + "]");
    }
    if (spec.deg_lo < 1 || spec.deg_hi > kMaxTableDegree) {
        throw usage_error("bad-range", "degree range must lie within [1, " +
                                           std::to_string(kMaxTableDegree) + "]");
    }
}

TableRow compute_row(const TableSpec& spec, long idx) {
    const long degs = spec.deg_hi - spec.deg_lo + 1;
    const int n = spec.dim_lo + static_cast<int>(idx / degs);
    const long d = spec.deg_lo + idx % degs;
    const BettiVector base = hypersurface_betti(HypersurfaceClass(n, d));
    return TableRow{n, d, base.values()[static_cast<std::size_t>(n)],
                    euler_characteristic(base), link_betti_from_base(base)};
}

void append_decimal_list(std::string& buf, const std::vector<BigInt>& values, char sep) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) buf += sep;
        buf += values[i].get_str();
    }
}

void append_row_csv(std::string& buf, const TableRow& row) {
    buf += std::to_string(row.n);
    buf += ',';
    buf += std::to_string(row.d);
    buf += ',';
    buf += row.middle.get_str();
    buf += ',';
    buf += row.chi.get_str();
    buf += ',';
    append_decimal_list(buf, row.link.values(), ';');
    buf += '\n';
}

// Matches render_json(table_row_record(...)) byte for byte; all values are
// digits, so no escaping is needed.
void append_row_jsonl(std::string& buf, const TableRow& row) {
    buf += "{\"kind\":\"table-row\",\"n\":";
    buf += std::to_string(row.n);
    buf += ",\"d\":";
    buf += std::to_string(row.d);
    buf += ",\"middle\":\"";
    buf += row.middle.get_str();
    buf += "\",\"chi\":\"";
    buf += row.chi.get_str();
    buf += "\",\"link\":[";
    const std::vector<BigInt>& link = row.link.values();
    for (std::size_t i = 0; i < link.size(); ++i) {
        if (i != 0) buf += ',';
        buf += '"';
        buf += link[i].get_str();
        buf += '"';
    }
    buf += "]}\n";
}

// One render buffer per thread, padded so appends never share a cache line.
struct alignas(64) RenderBuffer {
    std::string text;
};

constexpr long kBlockRows = 8192;

} // namespace

void write_table(const TableSpec& spec, Mode mode, TableLayout layout, std::ostream& out) {
    validate_spec(spec);
    const long degs = spec.deg_hi - spec.deg_lo + 1;
    const long total = static_cast<long>(spec.dim_hi - spec.dim_lo + 1) * degs;

    const auto append_row = (layout == TableLayout::Csv) ? append_row_csv : append_row_jsonl;
    if (layout == TableLayout::Csv) out << table_csv_header() << "\n";

    int max_threads = 1;
#ifdef _OPENMP
    if (mode == Mode::Parallel) max_threads = omp_get_max_threads();
#endif
    std::vector<RenderBuffer> parts(static_cast<std::size_t>(max_threads));

    for (long start = 0; start < total; start += kBlockRows) {
        const long count = std::min(kBlockRows, total - start);
        int used = 1;
        if (mode == Mode::Parallel && max_threads > 1) {
#pragma omp parallel
            {
#ifdef _OPENMP
                const int thread = omp_get_thread_num();
                const int team = omp_get_num_threads();
#else
                const int thread = 0;
                const int team = 1;
#endif
#pragma omp single
                used = team;
                const long lo = count * thread / team;
                const long hi = count * (thread + 1) / team;
                std::string& buf = parts[static_cast<std::size_t>(thread)].text;
                buf.clear();
                for (long j = lo; j < hi; ++j) {
                    append_row(buf, compute_row(spec, start + j));
                }
            }
        } else {
            std::string& buf = parts[0].text;
            buf.clear();
            for (long j = 0; j < count; ++j) {
                append_row(buf, compute_row(spec, start + j));
            }
        }
        for (int t = 0; t < used; ++t) {
            out << parts[static_cast<std::size_t>(t)].text;
        }
    }
}

std::vector<TableRow> table_rows(const TableSpec& spec, Mode mode) {
    validate_spec(spec);
    const long degs = spec.deg_hi - spec.deg_lo + 1;
    const long total = static_cast<long>(spec.dim_hi - spec.dim_lo + 1) * degs;
    std::vector<std::optional<TableRow>> slots(static_cast<std::size_t>(total));

    if (mode == Mode::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long idx = 0; idx < total; ++idx) {
            slots[static_cast<std::size_t>(idx)] = compute_row(spec, idx);
        }
    } else {
        for (long idx = 0; idx < total; ++idx) {
            slots[static_cast<std::size_t>(idx)] = compute_row(spec, idx);
        }
    }

    std::vector<TableRow> rows;
    rows.reserve(slots.size());
    for (auto& slot : slots) rows.push_back(std::move(*slot));
    return rows;
}

bool SelftestReport::all_pass() const {
    for (const PropertyResult& p : properties) {
        if (!p.pass) return false;
    }
    return true;
}

SelftestReport run_selftest(const SelftestBounds& bounds, Mode mode) {
    SelftestReport report;
    report.bounds = bounds;

    const Grid grid{bounds.max_dim, bounds.max_degree};
    const int sep_dim = std::min(bounds.max_dim, 10);
    const long sep_degree = std::min(bounds.max_degree, 60L);

    // d | (d-1)^{n+2} + (-1)^{n+1}: the closed form never needs rounding.
    report.properties.push_back(grid_property(
        "divisibility", grid,
        [](int n, long d) {
            const BigInt numerator =
                pow_big(BigInt(d) - 1, static_cast<unsigned long>(n) + 2) +
                ((n % 2 == 0) ? -1 : 1);
            return numerator % d == 0;
        },
        mode));

    report.properties.push_back(grid_property(
        "middle-nonnegative", grid, [](int n, long d) { return middle_betti(n, d) >= 0; },
        mode));

    // The exact rational growth value is an integer at every integer x, and
    // the middle Betti number is that integer plus the parity constant.
    report.properties.push_back(grid_property(
        "growth-consistency", grid,
        [](int n, long d) {
            const Rational g = middle_betti_growth(n, d);
            if (g.get_den() != 1) return false;
            return middle_betti(n, d) == g.get_num() + ((n % 2 == 0) ? 2 : -1);
        },
        mode));

    report.properties.push_back(grid_property(
        "euler-oracle-agreement", grid,
        [](int n, long d) {
            return oracle::euler_chern(n, d) ==
                   euler_characteristic(hypersurface_betti(HypersurfaceClass(n, d)));
        },
        mode));

    report.properties.push_back(sweep_cases(
        "genus-oracle-agreement", bounds.max_degree,
        [](long i) { return oracle::genus_curve(i + 1) == middle_betti(1, i + 1); },
        [](long i) { return "d=" + std::to_string(i + 1); }, mode));

    // Strictly increasing on integers x >= 2; at x = 1 strict for even n and
    // an exact tie for odd n.
    {
        const long steps = std::max(bounds.max_degree - 1, 1L);
        report.properties.push_back(sweep_cases(
            "growth-monotonicity", static_cast<long>(bounds.max_dim + 1) * steps,
            [&](long i) {
                const int n = static_cast<int>(i / steps);
                const long x = 1 + i % steps;
                const Rational lo = middle_betti_growth(n, x);
                const Rational hi = middle_betti_growth(n, x + 1);
                if (x == 1 && n % 2 != 0) return lo == hi;
                return hi > lo;
            },
            [&](long i) {
                return "n=" + std::to_string(static_cast<int>(i / steps)) +
                       " x=" + std::to_string(1 + i % steps);
            },
            mode));
    }

    {
        const Grid inv{bounds.max_dim - 1, bounds.max_degree}; // n in [1, max_dim]
        report.properties.push_back(sweep_cases(
            "inversion-roundtrip", inv.total(),
            [&](long i) {
                const int n = 1 + inv.n_of(i);
                const long d = inv.d_of(i);
                const DegreeCandidates c = degree_from_middle_betti(n, middle_betti(n, d));
                if (n % 2 != 0 && d <= 2) return c.matches == std::vector<long>{1, 2};
                return c.matches == std::vector<long>{d};
            },
            [&](long i) {
                return "n=" + std::to_string(1 + inv.n_of(i)) +
                       " d=" + std::to_string(inv.d_of(i));
            },
            mode));

        report.properties.push_back(sweep_cases(
            "inversion-scan-agreement", inv.total(),
            [&](long i) {
                const int n = 1 + inv.n_of(i);
                const long d = inv.d_of(i);
                const BigInt b = middle_betti(n, d);
                return degree_from_middle_betti(n, b) ==
                       oracle::invert_scan(n, b, bounds.max_degree + 2);
            },
            [&](long i) {
                return "n=" + std::to_string(1 + inv.n_of(i)) +
                       " d=" + std::to_string(inv.d_of(i));
            },
            mode));
    }

    // Random targets, mostly not middle Betti numbers at all; the scan and
    // the early-terminating inversion must agree on those too.
    {
        struct Query {
            int n;
            long b;
        };
        std::vector<Query> queries;
        std::mt19937 rng(0xC0FFEE);
        std::uniform_int_distribution<int> n_dist(1, std::max(1, std::min(bounds.max_dim, 8)));
        std::uniform_int_distribution<long> b_dist(0, 100000);
        for (int i = 0; i < 200; ++i) queries.push_back({n_dist(rng), b_dist(rng)});
        report.properties.push_back(sweep_cases(
            "inversion-random-agreement", static_cast<long>(queries.size()),
            [&](long i) {
                const Query& q = queries[static_cast<std::size_t>(i)];
                return degree_from_middle_betti(q.n, BigInt(q.b)) ==
                       oracle::invert_scan(q.n, BigInt(q.b), 1200);
            },
            [&](long i) {
                const Query& q = queries[static_cast<std::size_t>(i)];
                return "n=" + std::to_string(q.n) + " b=" + std::to_string(q.b);
            },
            mode));
    }

    report.properties.push_back(grid_property(
        "link-duality", grid,
        [](int n, long d) {
            return oracle::duality_check(link_betti_of_cone(HypersurfaceClass(n, d)));
        },
        mode));

    report.properties.push_back(grid_property(
        "link-euler-zero", grid,
        [](int n, long d) {
            return euler_characteristic(link_betti_of_cone(HypersurfaceClass(n, d))) == 0;
        },
        mode));

    report.properties.push_back(grid_property(
        "link-valid-base", grid,
        [](int n, long d) {
            try {
                link_betti_of_cone(HypersurfaceClass(n, d));
                return true;
            } catch (const invalid_base_error&) {
                return false;
            }
        },
        mode));

    // Distinct degrees >= 2 always separate; degree 1 vs 2 in odd dimension
    // is the known rational blind spot.
    {
        struct Pair {
            long p;
            long r;
        };
        std::vector<Pair> pairs;
        for (long p = 2; p <= sep_degree; ++p) {
            for (long r = p + 1; r <= sep_degree; ++r) pairs.push_back({p, r});
        }
        const long total = static_cast<long>(pairs.size()) * std::max(sep_dim, 0);
        report.properties.push_back(sweep_cases(
            "degree-separation", total,
            [&](long i) {
                const int n = 1 + static_cast<int>(i / static_cast<long>(pairs.size()));
                const Pair& pr = pairs[static_cast<std::size_t>(i % static_cast<long>(pairs.size()))];
                return cone_degree_separation(n, pr.p, pr.r);
            },
            [&](long i) {
                const int n = 1 + static_cast<int>(i / static_cast<long>(pairs.size()));
                const Pair& pr = pairs[static_cast<std::size_t>(i % static_cast<long>(pairs.size()))];
                return "n=" + std::to_string(n) + " p=" + std::to_string(pr.p) +
                       " r=" + std::to_string(pr.r);
            },
            mode));
    }

    report.properties.push_back(sweep_cases(
        "separation-blind-spot", 1, [](long) { return !cone_degree_separation(1, 1, 2); },
        [](long) { return std::string("n=1 p=1 r=2"); }, mode));

    {
        const auto left = random_tuples(500, 0x5EED01);
        const auto right = random_tuples(500, 0x5EED02);
        report.properties.push_back(sweep_cases(
            "bp-verdict-laws", static_cast<long>(left.size()),
            [&](long i) {
                const bp::ExponentTuple& s = left[static_cast<std::size_t>(i)];
                const bp::ExponentTuple& t = right[static_cast<std::size_t>(i)];
                const bp::Verdict forward = bp::bilipschitz_verdict(s, t);
                const bp::Verdict backward = bp::bilipschitz_verdict(t, s);
                if (forward.outcome != backward.outcome || forward.reason != backward.reason) {
                    return false;
                }
                if (bp::bilipschitz_verdict(s, s).outcome != bp::Outcome::NotDistinguished) {
                    return false;
                }
                if (forward.outcome == bp::Outcome::NotDistinguished &&
                    bp::multiplicity(s) != bp::multiplicity(t)) {
                    return false;
                }
                return true;
            },
            [&](long i) {
                return tuple_text(left[static_cast<std::size_t>(i)]) + " vs " +
                       tuple_text(right[static_cast<std::size_t>(i)]);
            },
            mode));
    }

    // For fixed k >= 3 the link Betti vector determines the common exponent.
    {
        const long a_max = std::max(3L, std::min(50L, bounds.max_degree));
        report.properties.push_back(sweep_cases(
            "fermat-injectivity", 6,
            [&](long i) {
                const int k = 3 + static_cast<int>(i);
                std::vector<LinkBettiVector> links;
                for (long a = 2; a <= a_max; ++a) {
                    links.push_back(bp::link_betti(
                        bp::ExponentTuple(std::vector<long>(static_cast<std::size_t>(k), a))));
                }
                for (std::size_t x = 0; x < links.size(); ++x) {
                    for (std::size_t y = x + 1; y < links.size(); ++y) {
                        if (links[x] == links[y]) return false;
                    }
                }
                return true;
            },
            [](long i) { return "k=" + std::to_string(3 + i); }, mode));
    }

    return report;
}

OutputRecord selftest_record(const SelftestReport& report) {
    OutputRecord r;
    r.fields["kind"] = "selftest";
    nlohmann::ordered_json bounds;
    bounds["max_dim"] = report.bounds.max_dim;
    bounds["max_degree"] = report.bounds.max_degree;
    r.fields["bounds"] = bounds;
    nlohmann::ordered_json properties = nlohmann::ordered_json::array();
    for (const PropertyResult& p : report.properties) {
        nlohmann::ordered_json item;
        item["name"] = p.name;
        item["pass"] = p.pass;
        item["cases"] = p.cases;
        item["detail"] = p.detail;
        properties.push_back(item);
    }
    r.fields["properties"] = properties;
    r.fields["pass"] = report.all_pass();
    return r;
}

} // namespace conelink::sweep
