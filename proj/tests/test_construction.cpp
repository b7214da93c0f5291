#include "fixtures.hpp"
#include "oracles.hpp"

#include "sdc/construction.hpp"
#include "sdc/report.hpp"
#include "sdc/search.hpp"

#include <doctest.h>

using namespace sdc;

namespace {

ConstructionSpec zero_spec(Ring r, int p) {
    const RingVector z(r, static_cast<std::size_t>(p));
    return {p, r, {QRSpec::zero(r, p), QRSpec::zero(r, p), QRSpec::zero(r, p)}, {z, z, z}};
}

// Blocks of M M^T as dense matrices, cut from the dense product.
bool mmT_matches_dense(const ConstructionSpec& s) {
    const auto m = oracle::construction_matrix(s);
    const auto prod = oracle::product(m, oracle::transpose(m));
    const auto blocks = mmT(s);
    const auto P = static_cast<std::size_t>(s.p);
    for (std::size_t br = 0; br < 3; ++br)
        for (std::size_t bc = 0; bc < 3; ++bc) {
            const auto& blk = blocks.blocks[(bc + 3 - br) % 3];
            for (std::size_t i = 0; i < P; ++i)
                for (std::size_t j = 0; j < P; ++j)
                    if (prod[br * P + i][bc * P + j] != oracle::encode(blk.at(static_cast<int>(i), static_cast<int>(j)))) return false;
        }
    return true;
}

}  // namespace

TEST_SUITE("construction") {

TEST_CASE("identity example") {
    auto s = zero_spec(Ring::F2, 3);
    s.q[0] = QRSpec(3, Element::one(Ring::F2), Element::zero(Ring::F2), Element::zero(Ring::F2));
    const Code c = build(s);
    REQUIRE(c.generators().size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
        const auto& g = c.generators()[i];
        REQUIRE(g.size() == 18);
        for (std::size_t j = 0; j < 18; ++j) CHECK(g.at(j) == Element(Ring::F2, i == j));
    }
}

TEST_CASE("all-zero spec") {
    for (Ring r : {Ring::F2, Ring::F2U}) {
        const auto s = zero_spec(r, 5);
        CHECK(mmT(s).is_zero());
        CHECK(check_theorem_4_conditions(s));
        CHECK_FALSE(sum_q_invertible(s));
        CHECK_FALSE(is_self_dual_construction(s));
    }
}

TEST_CASE("sum of Q equal to the identity is invertible") {
    auto s = zero_spec(Ring::F2U, 7);
    s.q[1] = QRSpec(7, Element::one(Ring::F2U), Element::u(), Element::u());
    s.q[2] = QRSpec(7, Element::zero(Ring::F2U), Element::u(), Element::u());
    CHECK(sum_q_invertible(s));
}

TEST_CASE("length 60 spec") {
    const auto s = fixture::length60_spec();
    CHECK(mmT(s).is_zero());
    CHECK(check_theorem_4_conditions(s));
    CHECK(sum_q_invertible(s));
    CHECK(is_self_dual_construction(s));
    const Code c = build(s);
    CHECK(c.rank_info().free);
    CHECK(c.rank_info().rank == 15);
    CHECK(is_self_dual(c));
    const Code g = binary_image(c);
    CHECK(g.length() == 60);
    CHECK(g.rank_info().rank == 30);
}

TEST_CASE("flipping one entry of an A row breaks the conditions exactly when M M^T becomes nonzero") {
    const auto base = fixture::length60_spec();
    int broken = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            for (Element e : Element::all(Ring::F2U)) {
                auto s = base;
                s.a_rows[i].set(j, s.a_rows[i].at(j) + e);
                const bool zero = oracle::is_zero(oracle::product(oracle::construction_matrix(s), oracle::transpose(oracle::construction_matrix(s))));
                CHECK(check_theorem_4_conditions(s) == zero);
                broken += !zero;
            }
    CHECK(broken > 0);
}

TEST_CASE("build agrees with block-by-block assembly") {
    for (int p : {3, 5, 7, 11}) {
        for (Ring r : {Ring::F2, Ring::F2U}) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(p) * 7 + (r == Ring::F2U));
            for (int t = 0; t < 10; ++t) {
                const auto s = random_spec(p, r, rng);
                const Code c = build(s);
                CHECK(c.generators().size() == static_cast<std::size_t>(3 * p));
                CHECK(c.length() == static_cast<std::size_t>(6 * p));
                CHECK(oracle::from_code(c) == oracle::construction_matrix(s));
                CHECK(mmT_matches_dense(s));
            }
        }
    }
}

TEST_CASE("conditions agree with M M^T on random specs") {
    for (int p : {3, 5, 7, 11, 13})
        for (Ring r : {Ring::F2, Ring::F2U}) {
            std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(p));
            for (int t = 0; t < 200; ++t) {
                const auto s = random_spec(p, r, rng);
                CHECK(check_theorem_4_conditions(s) == mmT(s).is_zero());
            }
        }
}

TEST_CASE("self-dual constructions have full free rank and invertible sum when p = 1 mod 4") {
    std::mt19937_64 rng(77);
    int hits = 0;
    for (int t = 0; t < 20000 && hits < 10; ++t) {
        const auto s = random_spec(5, Ring::F2, rng);
        if (!is_self_dual_construction(s)) continue;
        ++hits;
        const Code c = build(s);
        CHECK(c.rank_info().rank == 15);
        CHECK(c.rank_info().free);
        CHECK(is_self_dual(c));
        CHECK(sum_q_invertible(s));
    }
    CHECK(hits == 10);
}

TEST_CASE("self-dual constructions over F2+uF2 with p = 3 have an invertible sum") {
    std::mt19937_64 rng(78);
    int hits = 0;
    for (int t = 0; t < 100000 && hits < 20; ++t) {
        const auto s = random_spec(3, Ring::F2U, rng);
        if (!is_self_dual_construction(s)) continue;
        ++hits;
        CHECK(sum_q_invertible(s));
    }
    CHECK(hits == 20);
}

TEST_CASE("circulant invertibility") {
    CHECK(circulant_invertible(Circulant::identity(Ring::F2, 7)));
    CHECK_FALSE(circulant_invertible(Circulant::zero(Ring::F2, 7)));
    // all-ones row: X^p - 1 shares the factor 1 + X + ... + X^(p-1)
    CHECK_FALSE(circulant_invertible(Circulant(RingVector::parse(Ring::F2, "11111"))));
    // X + 1 divides X^p - 1
    CHECK_FALSE(circulant_invertible(Circulant(RingVector::parse(Ring::F2, "11000"))));
    CHECK(circulant_invertible(Circulant(RingVector::parse(Ring::F2U, "1u000"))));
    CHECK_FALSE(circulant_invertible(Circulant(RingVector::parse(Ring::F2U, "uu000"))));
}

TEST_CASE("invertibility agrees with the existence of an inverse") {
    // exhaustive over binary circulants of order 5 and 7
    for (int p : {5, 7}) {
        std::vector<RingVector> all;
        for (unsigned m = 0; m < (1u << p); ++m) {
            RingVector v(Ring::F2, static_cast<std::size_t>(p));
            for (int i = 0; i < p; ++i)
                if (m >> i & 1) v.set(static_cast<std::size_t>(i), Element::one(Ring::F2));
            all.push_back(v);
        }
        const Circulant id = Circulant::identity(Ring::F2, p);
        for (const auto& a : all) {
            bool has_inverse = false;
            for (const auto& b : all)
                if (Circulant(a) * Circulant(b) == id) has_inverse = true;
            CHECK(circulant_invertible(Circulant(a)) == has_inverse);
        }
    }
}

}
