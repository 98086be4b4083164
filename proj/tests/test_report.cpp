#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "conelink/oracles.hpp"
#include "conelink/report.hpp"
#include "test_support.hpp"

using namespace conelink;
using test_support::big;

namespace {

std::vector<OutputRecord> sample_records() {
    std::vector<OutputRecord> records;

    const HypersurfaceClass quartic(2, 4);
    records.push_back(betti_record(quartic, hypersurface_betti(quartic)));

    // entries far beyond 53 bits
    const HypersurfaceClass huge(20, 100);
    records.push_back(betti_record(huge, hypersurface_betti(huge)));

    const HypersurfaceClass quadric(2, 2);
    records.push_back(link_record(quadric, link_betti_of_cone(quadric)));

    const BettiVector base(big({1, 0, 2, 0, 1}));
    records.push_back(link_record_from_base(base, link_betti_from_base(base)));

    const bp::ExponentTuple fermat(std::vector<long>{2, 2, 2, 2, 5});
    records.push_back(
        link_record_from_exponents(fermat, HypersurfaceClass(2, 2), bp::link_betti(fermat)));

    records.push_back(invert_record(1, 0, degree_from_middle_betti(1, 0)));
    records.push_back(compare_record(2, 3, 4, true, link_betti_of_cone({2, 3}),
                                     link_betti_of_cone({2, 4})));

    const bp::ExponentTuple cusp(std::vector<long>{2, 3});
    records.push_back(fingerprint_record(cusp, bp::fingerprint(cusp)));

    const bp::ExponentTuple other(std::vector<long>{3, 4});
    records.push_back(verdict_record(cusp, other, bp::bilipschitz_verdict(cusp, other)));

    records.push_back(torsion_record(7, torsion_h2_surface(7)));

    records.push_back(table_row_record(2, 4, middle_betti(2, 4), oracle::euler_chern(2, 4),
                                       link_betti_of_cone({2, 4})));
    return records;
}

} // namespace

TEST_CASE("betti record serializes to the documented JSON line") {
    const HypersurfaceClass h(2, 4);
    const OutputRecord record = betti_record(h, hypersurface_betti(h));
    CHECK(render_json(record) ==
          R"({"kind":"betti","n":2,"d":4,"betti":["1","0","22","0","1"]})");
}

TEST_CASE("every record kind round-trips losslessly through JSON") {
    for (const OutputRecord& record : sample_records()) {
        const std::string line = render_json(record);
        const OutputRecord back = parse_record(line);
        CHECK(back == record);
        CHECK(render_json(back) == line);
    }
}

TEST_CASE("big integers survive serialization exactly") {
    const HypersurfaceClass huge(20, 100);
    const BigInt middle = middle_betti(20, 100);
    CHECK(middle > pow_big(BigInt(2), 53)); // a 53-bit consumer would truncate it

    const OutputRecord back = parse_record(render_json(betti_record(huge, hypersurface_betti(huge))));
    const std::string text = back.fields.at("betti").at(20).get<std::string>();
    CHECK(parse_decimal(text) == middle);
}

TEST_CASE("parse_record rejects malformed input") {
    CHECK_THROWS_AS(parse_record("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_record("[1,2,3]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_record(R"({"n":2})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_record(R"({"kind":"mystery"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_record(R"({"kind":17})"), std::invalid_argument);
}

TEST_CASE("csv and plain renderings") {
    const HypersurfaceClass h(2, 4);
    const OutputRecord record = betti_record(h, hypersurface_betti(h));
    CHECK(render(record, Format::Csv) == "n,d,betti\n2,4,1;0;22;0;1");
    CHECK(render(record, Format::Plain) == "betti(n=2, d=4) = [1, 0, 22, 0, 1]");

    const OutputRecord row = table_row_record(2, 4, middle_betti(2, 4), oracle::euler_chern(2, 4),
                                              link_betti_of_cone({2, 4}));
    CHECK(render(row, Format::Csv) == "2,4,22,24,1;0;21;21;0;1");
    CHECK(table_csv_header() == "n,d,b_n,chi,link");

    const OutputRecord torsion = torsion_record(3, 3);
    CHECK(render(torsion, Format::Plain) == "torsion(d=3) = Z/3Z");
}

TEST_CASE("format names") {
    CHECK(parse_format("plain") == Format::Plain);
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK_THROWS_AS(parse_format("yaml"), usage_error);
}
