#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conelink/brieskorn.hpp"
#include "test_support.hpp"

using namespace conelink;
using test_support::big;

namespace {

bp::ExponentTuple tuple(std::initializer_list<long> values) {
    return bp::ExponentTuple(std::vector<long>(values));
}

std::vector<bp::ExponentTuple> random_tuples(std::size_t count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> length_dist(1, 6);
    std::uniform_int_distribution<long> entry_dist(2, 9);
    std::vector<bp::ExponentTuple> tuples;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<long> raw(static_cast<std::size_t>(length_dist(rng)));
        for (long& a : raw) a = entry_dist(rng);
        tuples.emplace_back(std::move(raw));
    }
    return tuples;
}

} // namespace

TEST_CASE("exponent tuples sort on construction and reject bad entries") {
    CHECK(tuple({3, 2, 2}).exponents() == std::vector<long>{2, 2, 3});
    CHECK(tuple({2}).exponents() == std::vector<long>{2});
    CHECK(tuple({4, 3}).exponents() == std::vector<long>{3, 4});
    CHECK_THROWS_AS(bp::ExponentTuple(std::vector<long>{}), domain_error);
    CHECK_THROWS_AS(tuple({2, 1, 3}), domain_error);
    CHECK_THROWS_AS(tuple({0}), domain_error);
    CHECK_THROWS_AS(tuple({-2, 3}), domain_error);
}

TEST_CASE("multiplicity is the minimal exponent") {
    CHECK(bp::multiplicity(tuple({2, 3})) == 2);
    CHECK(bp::multiplicity(tuple({3, 4})) == 3);
    CHECK(bp::multiplicity(tuple({5, 5, 5})) == 5);
}

TEST_CASE("tangent cone collects the minimal exponents") {
    CHECK(bp::tangent_cone(tuple({2, 2, 3})) == bp::TangentCone{2, 2});
    CHECK(bp::tangent_cone(tuple({3, 3, 3})) == bp::TangentCone{3, 3});
    CHECK(bp::tangent_cone(tuple({2, 5, 7, 7})) == bp::TangentCone{2, 1});
}

TEST_CASE("singular set dimension of the tangent cone") {
    CHECK(bp::singular_set_dim(tuple({2, 2, 3})) == 1);
    CHECK(bp::singular_set_dim(tuple({2, 2})) == 0);
    CHECK(bp::singular_set_dim(tuple({2, 3, 4, 5})) == 3);
}

TEST_CASE("singular dimension and minimal-exponent count always sum to n") {
    for (const bp::ExponentTuple& t : random_tuples(200, 0xABCDEF)) {
        CHECK(bp::singular_set_dim(t) + bp::tangent_cone(t).count == t.ambient_dim());
    }
}

TEST_CASE("fingerprints") {
    CHECK(bp::fingerprint(tuple({2, 3})) == bp::Fingerprint{2, 2, 1, 2, 1});
    CHECK(bp::fingerprint(tuple({2, 2})) == bp::Fingerprint{2, 2, 2, 2, 0});
    CHECK(bp::fingerprint(tuple({3, 3, 7})) == bp::Fingerprint{3, 3, 2, 3, 1});
    // permutation invariance comes from sorting at construction
    CHECK(bp::fingerprint(tuple({7, 3, 3})) == bp::fingerprint(tuple({3, 7, 3})));
}

TEST_CASE("verdicts report the first failing invariant") {
    const bp::Verdict cusp = bp::bilipschitz_verdict(tuple({2, 3}), tuple({3, 4}));
    CHECK(cusp.outcome == bp::Outcome::Distinguished);
    CHECK(cusp.reason == bp::Reason::TangentConeDegree);

    const bp::Verdict sing = bp::bilipschitz_verdict(tuple({2, 2, 5}), tuple({2, 3, 3}));
    CHECK(sing.outcome == bp::Outcome::Distinguished);
    CHECK(sing.reason == bp::Reason::SingularSetDimension);

    const bp::Verdict same = bp::bilipschitz_verdict(tuple({3, 4, 5}), tuple({3, 4, 5}));
    CHECK(same.outcome == bp::Outcome::NotDistinguished);
    CHECK(same.reason == bp::Reason::None);

    const bp::Verdict dims = bp::bilipschitz_verdict(tuple({2, 2}), tuple({2, 2, 2}));
    CHECK(dims.outcome == bp::Outcome::Distinguished);
    CHECK(dims.reason == bp::Reason::DimensionMismatch);
}

TEST_CASE("verdict laws over random tuple pairs") {
    const auto left = random_tuples(300, 0x11111);
    const auto right = random_tuples(300, 0x22222);
    for (std::size_t i = 0; i < left.size(); ++i) {
        const bp::Verdict forward = bp::bilipschitz_verdict(left[i], right[i]);
        const bp::Verdict backward = bp::bilipschitz_verdict(right[i], left[i]);
        CHECK(forward.outcome == backward.outcome);
        CHECK(forward.reason == backward.reason);
        CHECK(bp::bilipschitz_verdict(left[i], left[i]).outcome ==
              bp::Outcome::NotDistinguished);
        if (forward.outcome == bp::Outcome::NotDistinguished) {
            CHECK(bp::multiplicity(left[i]) == bp::multiplicity(right[i]));
        }
    }
}

TEST_CASE("link Betti numbers of the tangent-cone factor") {
    CHECK(bp::link_betti(tuple({2, 2, 2, 2, 5})).values() == big({1, 0, 1, 1, 0, 1}));
    CHECK(bp::link_betti(tuple({3, 3, 3})).values() == big({1, 2, 2, 1}));
    CHECK_THROWS_AS(bp::link_betti(tuple({2, 3, 4})), k_too_small_error);  // k = 1
    CHECK_THROWS_AS(bp::link_betti(tuple({2, 2, 3})), k_too_small_error);  // k = 2
}

TEST_CASE("link Betti vectors separate exponents for fixed k") {
    for (int k = 3; k <= 5; ++k) {
        std::vector<LinkBettiVector> links;
        for (long a = 2; a <= 30; ++a) {
            links.push_back(
                bp::link_betti(bp::ExponentTuple(std::vector<long>(std::size_t(k), a))));
        }
        for (std::size_t x = 0; x < links.size(); ++x) {
            for (std::size_t y = x + 1; y < links.size(); ++y) {
                CHECK(!(links[x] == links[y]));
            }
        }
    }
}

TEST_CASE("verdict and reason names") {
    CHECK(std::string(bp::to_string(bp::Outcome::Distinguished)) == "Distinguished");
    CHECK(std::string(bp::to_string(bp::Outcome::NotDistinguished)) == "NotDistinguished");
    CHECK(std::string(bp::to_string(bp::Reason::DimensionMismatch)) == "DimensionMismatch");
    CHECK(std::string(bp::to_string(bp::Reason::SingularSetDimension)) == "SingularSetDimension");
    CHECK(std::string(bp::to_string(bp::Reason::TangentConeDegree)) == "TangentConeDegree");
    CHECK(std::string(bp::to_string(bp::Reason::None)) == "None");
}
