#include "sdc/enumerator.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace sdc;

namespace {

const EnumeratorMatch* find(const std::vector<EnumeratorMatch>& ms, const std::string& id) {
    for (const auto& m : ms)
        if (m.family == id) return &m;
    return nullptr;
}

}  // namespace

TEST_SUITE("enumerator") {

TEST_CASE("length 60 with beta 0") {
    const auto ms = classify_enumerator(60, 2555, std::nullopt);
    const auto* m = find(ms, "W60,2");
    REQUIRE(m);
    CHECK(m->beta == 0);
    CHECK(m->warnings.empty());
    CHECK_FALSE(find(ms, "W60,1"));
}

TEST_CASE("length 60 first family has no parameter") {
    const auto ms = classify_enumerator(60, 3451, 24128);
    const auto* m = find(ms, "W60,1");
    REQUIRE(m);
    CHECK_FALSE(m->beta);
    CHECK_FALSE(m->gamma);
}

TEST_CASE("length 64 both families share A12") {
    const auto ms = classify_enumerator(64, 1536, 21120);
    const auto* m = find(ms, "W64,1");
    REQUIRE(m);
    CHECK(m->beta == 14);
    CHECK_FALSE(find(ms, "W64,2"));
    // A12 alone cannot tell the two apart
    const auto loose = classify_enumerator(64, 1536, std::nullopt);
    CHECK(find(loose, "W64,1"));
    CHECK(find(loose, "W64,2"));
}

TEST_CASE("length 66") {
    const auto ms = classify_enumerator(66, 1026, 17662);
    const auto* m = find(ms, "W66,3");
    REQUIRE(m);
    CHECK(m->beta == 21);
    CHECK_FALSE(find(ms, "W66,1"));
    const auto two = classify_enumerator(66, 1690, 7990);
    CHECK(find(two, "W66,2"));
}

TEST_CASE("length 68 second family resolves gamma") {
    const auto ms = classify_enumerator(68, 710, 13912);
    const auto* m = find(ms, "W68,2");
    REQUIRE(m);
    CHECK(m->beta == 67);
    CHECK(m->gamma == 2);
    CHECK_FALSE(find(ms, "W68,1"));
}

TEST_CASE("length 68 first family") {
    const auto ms = classify_enumerator(68, 442 + 4 * 30, 10864 - 8 * 30);
    const auto* m = find(ms, "W68,1");
    REQUIRE(m);
    CHECK(m->beta == 30);
}

TEST_CASE("counts off the beta lattice give no match") {
    CHECK(classify_enumerator(60, 2556, std::nullopt).empty());
    CHECK(classify_enumerator(68, 443, std::nullopt).empty());
}

TEST_CASE("round trip through the family formulas") {
    for (const auto& f : enumerator_families()) {
        CAPTURE(f.id);
        const int beta = f.has_beta ? f.beta_min.value_or(0) + 1 : 0;
        const int gamma = f.has_gamma ? f.gamma_min.value_or(0) + 1 : 0;
        const auto a12 = f.base12 + f.beta_12 * beta;
        const auto a14 = f.base14 + f.beta_14 * beta + f.gamma_14 * gamma;
        const auto ms = classify_enumerator(f.n, a12, a14);
        const auto* m = find(ms, f.id);
        REQUIRE(m);
        if (f.has_beta) CHECK(m->beta == beta);
        if (f.has_gamma) CHECK(m->gamma == gamma);
    }
}

TEST_CASE("inconsistent A14 gives no match") {
    CHECK(classify_enumerator(66, 1690, 7991).empty());
}

TEST_CASE("out of range parameters carry a warning") {
    const auto high = classify_enumerator(66, 858 + 8 * 5000, 18166 - 24 * 5000);
    REQUIRE(high.size() == 1);
    CHECK(high[0].family == "W66,3");
    CHECK(high[0].warnings.size() == 1);
    const auto low = classify_enumerator(66, 858 + 8 * 2, 18166 - 24 * 2);
    REQUIRE(low.size() == 1);
    CHECK(low[0].warnings.size() == 1);
    const auto gamma = classify_enumerator(68, 442, 14960 - 256 * 12);
    const auto* m = find(gamma, "W68,2");
    REQUIRE(m);
    CHECK(m->gamma == 12);
    CHECK_FALSE(m->warnings.empty());
}

TEST_CASE("unknown length throws") {
    CHECK_THROWS_AS(classify_enumerator(62, 0, 0), std::invalid_argument);
}

}
