#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "conelink/cli.hpp"
#include "conelink/invariants.hpp"
#include "conelink/report.hpp"

using namespace conelink;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("conelink");
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("betti subcommand emits the documented JSON line") {
    const CliResult r = run({"betti", "--dim", "2", "--degree", "4", "--format", "json"});
    CHECK(r.status == 0);
    CHECK(r.out == "{\"kind\":\"betti\",\"n\":2,\"d\":4,\"betti\":[\"1\",\"0\",\"22\",\"0\",\"1\"]}\n");
    CHECK(r.err.empty());
}

TEST_CASE("JSON output parses back to the exact values") {
    const CliResult r = run({"betti", "--dim", "3", "--degree", "7", "--format", "json"});
    REQUIRE(r.status == 0);
    const OutputRecord record = parse_record(r.out.substr(0, r.out.size() - 1));
    const BettiVector expected = hypersurface_betti({3, 7});
    const auto& entries = record.fields.at("betti");
    REQUIRE(entries.size() == expected.values().size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(parse_decimal(entries.at(i).get<std::string>()) == expected.values()[i]);
    }
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::vector<std::vector<std::string>> invocations = {
        {"betti", "--dim", "4", "--degree", "9", "--format", "json"},
        {"table", "--dim-range", "0..3", "--degree-range", "1..10"},
        {"selftest", "--quick"},
        {"bp-verdict", "--left", "2,3", "--right", "3,4", "--format", "csv"},
    };
    for (const auto& argv : invocations) {
        const CliResult a = run(argv);
        const CliResult b = run(argv);
        CHECK(a.status == b.status);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("exit status 0 on success for every subcommand") {
    CHECK(run({"betti", "--dim", "2", "--degree", "4"}).status == 0);
    CHECK(run({"link", "--dim", "2", "--degree", "2"}).status == 0);
    CHECK(run({"link", "--base", "1,0,2,0,1"}).status == 0);
    CHECK(run({"invert", "--dim", "2", "--betti", "22"}).status == 0);
    CHECK(run({"compare-cones", "--dim", "2", "--deg-left", "3", "--deg-right", "4"}).status == 0);
    CHECK(run({"bp-fingerprint", "--exponents", "2,3"}).status == 0);
    CHECK(run({"bp-verdict", "--left", "2,3", "--right", "3,4"}).status == 0);
    CHECK(run({"bp-link", "--exponents", "3,3,3"}).status == 0);
    CHECK(run({"torsion-surface", "--degree", "3"}).status == 0);
    CHECK(run({"table", "--dim-range", "2", "--degree-range", "1..4"}).status == 0);
    CHECK(run({"selftest", "--quick"}).status == 0);
}

TEST_CASE("exit status 1 on domain errors, with a stable code on stderr") {
    const CliResult betti = run({"betti", "--dim", "2", "--degree", "0"});
    CHECK(betti.status == 1);
    CHECK(betti.err.find("error[bad-hypersurface]") == 0);

    const CliResult link = run({"link", "--base", "1,0,0,0,1"});
    CHECK(link.status == 1);
    CHECK(link.err.find("error[invalid-base]") == 0);

    const CliResult shape = run({"link", "--base", "1,0,2,0"});
    CHECK(shape.status == 1);
    CHECK(shape.err.find("error[bad-betti-vector]") == 0);

    const CliResult invert = run({"invert", "--dim", "0", "--betti", "5"});
    CHECK(invert.status == 1);
    CHECK(invert.err.find("error[bad-dimension]") == 0);

    const CliResult compare = run({"compare-cones", "--dim", "0", "--deg-left", "1",
                                   "--deg-right", "2"});
    CHECK(compare.status == 1);

    const CliResult fingerprint = run({"bp-fingerprint", "--exponents", "1,2"});
    CHECK(fingerprint.status == 1);
    CHECK(fingerprint.err.find("error[bad-exponent]") == 0);

    const CliResult verdict = run({"bp-verdict", "--left", "2,1", "--right", "2,3"});
    CHECK(verdict.status == 1);
    CHECK(verdict.err.find("error[bad-exponent]") == 0);

    const CliResult bp_link = run({"bp-link", "--exponents", "2,3,4"});
    CHECK(bp_link.status == 1);
    CHECK(bp_link.err.find("error[k-too-small]") == 0);

    const CliResult torsion = run({"torsion-surface", "--degree", "0"});
    CHECK(torsion.status == 1);
    CHECK(torsion.err.find("error[bad-hypersurface]") == 0);
}

TEST_CASE("exit status 2 on usage errors") {
    CHECK(run({}).status == 2);
    CHECK(run({"unknown-subcommand"}).status == 2);
    CHECK(run({"betti", "--dim", "2"}).status == 2);                      // missing --degree
    CHECK(run({"betti", "--dim", "x", "--degree", "3"}).status == 2);
    CHECK(run({"betti", "--dim", "2", "--degree", "3", "--nope"}).status == 2);
    CHECK(run({"betti", "--dim", "2", "--degree", "3", "--format", "yaml"}).status == 2);
    CHECK(run({"link", "--dim", "2"}).status == 2);                       // missing --degree
    CHECK(run({"link", "--base", "1,0,1", "--dim", "1"}).status == 2);    // exclusive flags
    CHECK(run({"invert", "--dim", "1", "--betti", "2x"}).status == 2);
    CHECK(run({"bp-fingerprint", "--exponents", "2,,3"}).status == 2);
    CHECK(run({"bp-fingerprint", "--exponents", "2,a"}).status == 2);
    CHECK(run({"table", "--dim-range", "4..1", "--degree-range", "1..4"}).status == 2);
    CHECK(run({"table", "--dim-range", "0..65", "--degree-range", "1..4"}).status == 2);
    CHECK(run({"table", "--dim-range", "0..2", "--degree-range", "1..10001"}).status == 2);
    CHECK(run({"table", "--dim-range", "0..2", "--degree-range", "0..4"}).status == 2);
    CHECK(run({"selftest", "--max-degree", "0"}).status == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("the {1,2} tie warns on stderr unless silenced") {
    const CliResult tie = run({"invert", "--dim", "1", "--betti", "0"});
    CHECK(tie.status == 0);
    CHECK(tie.out == "candidates(n=1, b=0) = [1, 2]\n");
    CHECK(tie.err.find("warning[degree-tie]") == 0);

    const CliResult quiet = run({"--quiet", "invert", "--dim", "1", "--betti", "0"});
    CHECK(quiet.status == 0);
    CHECK(quiet.err.empty());

    const CliResult unique = run({"invert", "--dim", "2", "--betti", "22"});
    CHECK(unique.status == 0);
    CHECK(unique.err.empty());
    CHECK(unique.out == "candidates(n=2, b=22) = [4]\n");
}

TEST_CASE("no matching degree yields an empty candidate list and success") {
    const CliResult r = run({"invert", "--dim", "2", "--betti", "5", "--format", "json"});
    CHECK(r.status == 0);
    CHECK(r.out == "{\"kind\":\"invert\",\"n\":2,\"b\":\"5\",\"candidates\":[]}\n");
}

TEST_CASE("table output is identical on stdout and in a file") {
    const CliResult direct = run({"table", "--dim-range", "1..2", "--degree-range", "1..5"});
    REQUIRE(direct.status == 0);
    CHECK(direct.out.find("n,d,b_n,chi,link\n") == 0);
    CHECK(direct.out.back() == '\n');

    const std::string path = "cli_table_test_output.csv";
    const CliResult filed = run({"table", "--dim-range", "1..2", "--degree-range", "1..5",
                                 "--out", path});
    REQUIRE(filed.status == 0);
    CHECK(filed.out.empty());

    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    file.close();
    std::remove(path.c_str());
    CHECK(content.str() == direct.out);
    CHECK(content.str().find("\r") == std::string::npos);
}

TEST_CASE("unwritable output paths exit 1 with an io code") {
    const CliResult r = run({"table", "--dim-range", "0..1", "--degree-range", "1..2", "--out",
                             "no-such-directory/table.csv"});
    CHECK(r.status == 1);
    CHECK(r.err.find("error[io]") == 0);
}

TEST_CASE("table rows as JSON lines") {
    const CliResult r =
        run({"table", "--dim-range", "2", "--degree-range", "2..3", "--format", "json"});
    REQUIRE(r.status == 0);
    CHECK(r.out ==
          "{\"kind\":\"table-row\",\"n\":2,\"d\":2,\"middle\":\"2\",\"chi\":\"4\","
          "\"link\":[\"1\",\"0\",\"1\",\"1\",\"0\",\"1\"]}\n"
          "{\"kind\":\"table-row\",\"n\":2,\"d\":3,\"middle\":\"7\",\"chi\":\"9\","
          "\"link\":[\"1\",\"0\",\"6\",\"6\",\"0\",\"1\"]}\n");
}

TEST_CASE("serial flag leaves every output unchanged") {
    const CliResult parallel = run({"table", "--dim-range", "0..4", "--degree-range", "1..20"});
    const CliResult serial =
        run({"--serial", "table", "--dim-range", "0..4", "--degree-range", "1..20"});
    CHECK(parallel.status == 0);
    CHECK(serial.status == 0);
    CHECK(parallel.out == serial.out);

    const CliResult st_parallel = run({"selftest", "--quick", "--format", "json"});
    const CliResult st_serial = run({"--serial", "selftest", "--quick", "--format", "json"});
    CHECK(st_parallel.out == st_serial.out);
}

TEST_CASE("selftest reports pass per property and exits 0") {
    const CliResult r = run({"selftest", "--quick"});
    CHECK(r.status == 0);
    CHECK(r.out.find("[PASS] divisibility") != std::string::npos);
    CHECK(r.out.find("[PASS] euler-oracle-agreement") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("selftest: PASS") != std::string::npos);
}
