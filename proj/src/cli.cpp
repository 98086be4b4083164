#include "conelink/cli.hpp"

#include <climits>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "conelink/brieskorn.hpp"
#include "conelink/invariants.hpp"
#include "conelink/report.hpp"
#include "conelink/sweep.hpp"

namespace conelink {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

long parse_long_strict(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long value = std::stol(text, &used);
        if (used != text.size()) {
            throw usage_error("bad-argument", what + ": '" + text + "' is not an integer");
        }
        return value;
    } catch (const std::invalid_argument&) {
        throw usage_error("bad-argument", what + ": '" + text + "' is not an integer");
    } catch (const std::out_of_range&) {
        throw usage_error("bad-argument", what + ": '" + text + "' is out of range");
    }
}

std::vector<long> parse_long_list(const std::string& text, const std::string& what) {
    std::vector<long> values;
    for (const std::string& part : split(text, ',')) {
        values.push_back(parse_long_strict(part, what));
    }
    return values;
}

std::vector<BigInt> parse_bigint_list(const std::string& text) {
    std::vector<BigInt> values;
    for (const std::string& part : split(text, ',')) {
        values.push_back(parse_decimal(part));
    }
    return values;
}

// "A..B" inclusive, or a single value "A" meaning A..A.
std::pair<long, long> parse_range(const std::string& text, const std::string& what) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        const long v = parse_long_strict(text, what);
        return {v, v};
    }
    const long lo = parse_long_strict(text.substr(0, pos), what);
    const long hi = parse_long_strict(text.substr(pos + 2), what);
    return {lo, hi};
}

struct CliState {
    std::ostream& out;
    std::ostream& err;
    Format format = Format::Plain;
    bool quiet = false;
    sweep::Mode mode = sweep::Mode::Parallel;

    void emit(const OutputRecord& record) const { out << render(record, format) << "\n"; }

    void warn(const std::string& code, const std::string& message) const {
        if (!quiet) err << "warning[" << code << "]: " << message << "\n";
    }
};

int run_table(const CliState& cli, const std::string& dim_range, const std::string& degree_range,
              const std::string& out_path) {
    const auto [dim_lo, dim_hi] = parse_range(dim_range, "--dim-range");
    const auto [deg_lo, deg_hi] = parse_range(degree_range, "--degree-range");
    if (dim_lo < INT_MIN || dim_hi > INT_MAX) {
        throw usage_error("bad-range", "dimension range out of range");
    }
    const sweep::TableSpec spec{static_cast<int>(dim_lo), static_cast<int>(dim_hi), deg_lo, deg_hi};
    const sweep::TableLayout layout = (cli.format == Format::Json)
                                          ? sweep::TableLayout::JsonLines
                                          : sweep::TableLayout::Csv;

    std::ofstream file;
    std::ostream* sink = &cli.out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw coded_error("io", "cannot open '" + out_path + "' for writing");
        sink = &file;
    }
    sweep::write_table(spec, cli.mode, layout, *sink);
    if (sink == &file && !file) {
        throw coded_error("io", "write to '" + out_path + "' failed");
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Betti-number and bi-Lipschitz invariants of projective cones "
                 "and Brieskorn-Pham hypersurfaces"};
    app.name("conelink");
    app.require_subcommand(1);

    std::string format_name = "plain";
    bool quiet = false;
    bool serial = false;
    app.add_option("--format", format_name, "output format: plain, json or csv")
        ->capture_default_str();
    app.add_flag("--quiet", quiet, "suppress warnings on the diagnostic stream");
    app.add_flag("--serial", serial, "run sweeps on the serial reference kernels");

    int dim = 0;
    long degree = 0;
    std::string base_list, exponent_list, left_list, right_list;
    long deg_left = 0, deg_right = 0;
    std::string betti_target;
    std::string dim_range, degree_range, out_path;
    bool quick = false;
    int selftest_dim = 10;
    long selftest_degree = 50;

    CLI::App* cmd_betti = app.add_subcommand("betti", "Betti vector of a smooth hypersurface");
    cmd_betti->add_option("--dim", dim, "complex dimension n")->required();
    cmd_betti->add_option("--degree", degree, "degree d")->required();

    CLI::App* cmd_link = app.add_subcommand("link", "link Betti vector of a cone");
    CLI::Option* link_dim = cmd_link->add_option("--dim", dim, "complex dimension of the base");
    CLI::Option* link_degree = cmd_link->add_option("--degree", degree, "degree of the base");
    CLI::Option* link_base =
        cmd_link->add_option("--base", base_list, "comma-separated base Betti numbers");
    link_base->excludes(link_dim)->excludes(link_degree);

    CLI::App* cmd_invert =
        app.add_subcommand("invert", "degrees matching a middle Betti number");
    cmd_invert->add_option("--dim", dim, "complex dimension n")->required();
    cmd_invert->add_option("--betti", betti_target, "middle Betti number (decimal)")->required();

    CLI::App* cmd_compare =
        app.add_subcommand("compare-cones", "separate two cones by link Betti numbers");
    cmd_compare->add_option("--dim", dim, "complex dimension of the bases")->required();
    cmd_compare->add_option("--deg-left", deg_left, "degree of the first cone")->required();
    cmd_compare->add_option("--deg-right", deg_right, "degree of the second cone")->required();

    CLI::App* cmd_fingerprint =
        app.add_subcommand("bp-fingerprint", "bi-Lipschitz fingerprint of a Brieskorn-Pham germ");
    cmd_fingerprint->add_option("--exponents", exponent_list, "comma-separated exponents, each >= 2")
        ->required();

    CLI::App* cmd_verdict =
        app.add_subcommand("bp-verdict", "compare two Brieskorn-Pham germs");
    cmd_verdict->add_option("--left", left_list, "exponents of the first germ")->required();
    cmd_verdict->add_option("--right", right_list, "exponents of the second germ")->required();

    CLI::App* cmd_bp_link =
        app.add_subcommand("bp-link", "link Betti vector of the tangent-cone factor");
    cmd_bp_link->add_option("--exponents", exponent_list, "comma-separated exponents, each >= 2")
        ->required();

    CLI::App* cmd_torsion =
        app.add_subcommand("torsion-surface", "torsion of H^2 of a punctured surface cone");
    cmd_torsion->add_option("--degree", degree, "degree of the homogeneous surface")->required();

    CLI::App* cmd_table = app.add_subcommand("table", "sweep a (dimension, degree) grid");
    cmd_table->add_option("--dim-range", dim_range, "dimensions, e.g. 1..4")->required();
    cmd_table->add_option("--degree-range", degree_range, "degrees, e.g. 1..100")->required();
    cmd_table->add_option("--out", out_path, "write to a file instead of stdout");

    CLI::App* cmd_selftest =
        app.add_subcommand("selftest", "run the oracle-agreement and invariant sweeps");
    cmd_selftest->add_flag("--quick", quick, "reduced bounds");
    CLI::Option* opt_st_dim =
        cmd_selftest->add_option("--max-dim", selftest_dim, "largest dimension swept");
    CLI::Option* opt_st_degree =
        cmd_selftest->add_option("--max-degree", selftest_degree, "largest degree swept");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error[usage]: " << e.what() << "\n";
        return 2;
    }

    try {
        CliState cli{out, err, parse_format(format_name), quiet,
                     serial ? sweep::Mode::Serial : sweep::Mode::Parallel};

        if (cmd_betti->parsed()) {
            const HypersurfaceClass h(dim, degree);
            cli.emit(betti_record(h, hypersurface_betti(h)));
            return 0;
        }

        if (cmd_link->parsed()) {
            if (link_base->count() > 0) {
                const BettiVector base(parse_bigint_list(base_list));
                cli.emit(link_record_from_base(base, link_betti_from_base(base)));
                return 0;
            }
            if (link_dim->count() == 0 || link_degree->count() == 0) {
                throw usage_error("bad-argument",
                                  "link needs either --base or both --dim and --degree");
            }
            const HypersurfaceClass h(dim, degree);
            cli.emit(link_record(h, link_betti_of_cone(h)));
            return 0;
        }

        if (cmd_invert->parsed()) {
            const BigInt b = parse_decimal(betti_target);
            const DegreeCandidates candidates = degree_from_middle_betti(dim, b);
            if (candidates.matches.size() == 2) {
                cli.warn("degree-tie", "degrees 1 and 2 share this middle Betti number in odd "
                                       "dimension; both are reported");
            }
            cli.emit(invert_record(dim, b, candidates));
            return 0;
        }

        if (cmd_compare->parsed()) {
            const bool distinguished = cone_degree_separation(dim, deg_left, deg_right);
            cli.emit(compare_record(dim, deg_left, deg_right, distinguished,
                                    link_betti_of_cone(HypersurfaceClass(dim, deg_left)),
                                    link_betti_of_cone(HypersurfaceClass(dim, deg_right))));
            return 0;
        }

        if (cmd_fingerprint->parsed()) {
            const bp::ExponentTuple t(parse_long_list(exponent_list, "--exponents"));
            cli.emit(fingerprint_record(t, bp::fingerprint(t)));
            return 0;
        }

        if (cmd_verdict->parsed()) {
            const bp::ExponentTuple s(parse_long_list(left_list, "--left"));
            const bp::ExponentTuple t(parse_long_list(right_list, "--right"));
            cli.emit(verdict_record(s, t, bp::bilipschitz_verdict(s, t)));
            return 0;
        }

        if (cmd_bp_link->parsed()) {
            const bp::ExponentTuple t(parse_long_list(exponent_list, "--exponents"));
            const bp::TangentCone cone = bp::tangent_cone(t);
            const LinkBettiVector link = bp::link_betti(t);
            cli.emit(link_record_from_exponents(
                t, HypersurfaceClass(cone.count - 2, cone.degree), link));
            return 0;
        }

        if (cmd_torsion->parsed()) {
            cli.emit(torsion_record(degree, torsion_h2_surface(degree)));
            return 0;
        }

        if (cmd_table->parsed()) {
            return run_table(cli, dim_range, degree_range, out_path);
        }

        if (cmd_selftest->parsed()) {
            sweep::SelftestBounds bounds;
            if (quick) bounds = {5, 20};
            if (opt_st_dim->count() > 0) bounds.max_dim = selftest_dim;
            if (opt_st_degree->count() > 0) bounds.max_degree = selftest_degree;
            if (bounds.max_dim < 0 || bounds.max_degree < 1) {
                throw usage_error("bad-range", "selftest bounds must satisfy max-dim >= 0 and "
                                               "max-degree >= 1");
            }
            const sweep::SelftestReport report = sweep::run_selftest(bounds, cli.mode);
            cli.emit(sweep::selftest_record(report));
            return report.all_pass() ? 0 : 1;
        }

        err << "error[usage]: no subcommand given\n";
        return 2;
    } catch (const usage_error& e) {
        err << "error[" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error[" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const coded_error& e) {
        err << "error[" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error[bad-argument]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error[internal]: " << e.what() << "\n";
        return 1;
    }
}

} // namespace conelink
