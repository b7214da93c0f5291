#include "oracles.hpp"

#include "sdc/circulant.hpp"

#include <doctest.h>

#include <random>

using namespace sdc;

namespace {

Element el(Ring r, int v) { return oracle::decode(r, v); }

Circulant circ(const std::string& s, Ring r = Ring::F2U) { return Circulant(RingVector::parse(r, s)); }

Circulant random_circulant(std::mt19937_64& rng, Ring r, int p) {
    RingVector v(r, static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) v.set(static_cast<std::size_t>(i), el(r, static_cast<int>(rng() % (r == Ring::F2 ? 2 : 4))));
    return Circulant(v);
}

QRSpec random_qr(std::mt19937_64& rng, Ring r, int p) {
    const int m = r == Ring::F2 ? 2 : 4;
    return {p, el(r, static_cast<int>(rng() % m)), el(r, static_cast<int>(rng() % m)), el(r, static_cast<int>(rng() % m))};
}

oracle::Matrix dense(const Circulant& c) { return oracle::circulant(oracle::row_of(c.first_row())); }

}  // namespace

TEST_SUITE("circulant") {

TEST_CASE("quadratic residues") {
    CHECK(quadratic_residues(5) == std::vector<int>{1, 4});
    CHECK(quadratic_residues(7) == std::vector<int>{1, 2, 4});
    CHECK(quadratic_residues(3) == std::vector<int>{1});
    CHECK_THROWS(quadratic_residues(9));
    CHECK_THROWS(quadratic_residues(2));
    for (int p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        const auto q = quadratic_residues(p);
        const auto want = oracle::residues_by_squaring(p);
        CHECK(std::set<int>(q.begin(), q.end()) == want);
        CHECK(q.size() == static_cast<std::size_t>((p - 1) / 2));
        bool symmetric = true;
        for (int x : q) symmetric &= want.count(p - x) > 0;
        CHECK(symmetric == (p % 4 == 1));
    }
}

TEST_CASE("expansion rule") {
    // a = 1, b = u, c = 1+u keep the three positions distinguishable.
    const Element a = Element::one(Ring::F2U), b = Element::u(), c = Element::one_plus_u();
    CHECK(expand(QRSpec(5, a, b, c)).first_row().to_string() == "1u33u");
    CHECK(expand(QRSpec(7, a, b, c)).first_row().to_string() == "1uu3u33");
    CHECK(expand(QRSpec(5, Element::one(Ring::F2), Element::zero(Ring::F2), Element::zero(Ring::F2))) ==
          Circulant::identity(Ring::F2, 5));
}

TEST_CASE("expansion is aI + bQ + cN") {
    std::mt19937_64 rng(3);
    for (int p : {3, 5, 7, 11, 13}) {
        const Ring r = Ring::F2U;
        const auto Q = expand(QRSpec(p, el(r, 0), el(r, 1), el(r, 0)));
        const auto N = expand(QRSpec(p, el(r, 0), el(r, 0), el(r, 1)));
        for (int t = 0; t < 20; ++t) {
            const QRSpec s = random_qr(rng, r, p);
            Circulant sum = Circulant(Circulant::identity(r, p).first_row().scaled(s.a()));
            sum += Circulant(Q.first_row().scaled(s.b()));
            sum += Circulant(N.first_row().scaled(s.c()));
            CHECK(expand(s) == sum);
        }
    }
}

TEST_CASE("circ_mul examples") {
    std::mt19937_64 rng(5);
    const auto y = random_circulant(rng, Ring::F2U, 7);
    CHECK(circ_mul(Circulant::identity(Ring::F2U, 7), y) == y);
    CHECK(circ_mul(y, Circulant::zero(Ring::F2U, 7)).is_zero());
    const auto q = expand(QRSpec(5, el(Ring::F2, 0), el(Ring::F2, 1), el(Ring::F2, 0)));
    CHECK(circ_mul(q, q).first_row().to_string() == "00110");
}

TEST_CASE("circ_mul and transpose agree with dense matrices") {
    std::mt19937_64 rng(8);
    for (Ring r : {Ring::F2, Ring::F2U})
        for (int p : {3, 5, 7, 11, 13})
            for (int t = 0; t < 20; ++t) {
                const auto x = random_circulant(rng, r, p), y = random_circulant(rng, r, p);
                CHECK(dense(circ_mul(x, y)) == oracle::product(dense(x), dense(y)));
                CHECK(dense(circ_transpose(x)) == oracle::transpose(dense(x)));
                CHECK(circ_mul(x, y) == circ_mul(y, x));
                CHECK(circ_transpose(circ_transpose(x)) == x);
            }
}

TEST_CASE("transpose examples") {
    CHECK(circ_transpose(circ("1u33u")).first_row().to_string() == "1u33u");
    CHECK(circ_transpose(circ("010", Ring::F2)).first_row().to_string() == "001");
}

TEST_CASE("qr_product examples") {
    const Ring r = Ring::F2U;
    const Element a = el(r, 1), b = el(r, 2), c = el(r, 3);
    // p = 5: Q5(a, b, c) Q5(a, b, c)^T = Q5(a^2, c^2, b^2)
    CHECK(qr_product(QRSpec(5, a, b, c), QRSpec(5, a, b, c)) == QRSpec(5, a * a, c * c, b * b));
    const Ring f = Ring::F2;
    CHECK(qr_product(QRSpec(5, el(f, 0), el(f, 1), el(f, 0)), QRSpec(5, el(f, 0), el(f, 1), el(f, 0))) ==
          QRSpec(5, el(f, 0), el(f, 0), el(f, 1)));
    // p = 7 over F2 on every triple: (a+b+c, ab+ac+bc+b+c, ab+ac+bc+b+c).
    for (int m = 0; m < 8; ++m) {
        const Element x = el(f, m & 1), y = el(f, (m >> 1) & 1), z = el(f, (m >> 2) & 1);
        const Element s = x * y + x * z + y * z + y * y + z * z;
        CHECK(qr_product(QRSpec(7, x, y, z), QRSpec(7, x, y, z)) == QRSpec(7, x * x + y * y + z * z, s, s));
    }
    CHECK_THROWS(qr_product(QRSpec(5, a, b, c), QRSpec(7, a, b, c)));
}

TEST_CASE("qr_product equals the dense product") {
    std::mt19937_64 rng(13);
    for (Ring r : {Ring::F2, Ring::F2U})
        for (int p : {3, 5, 7, 11, 13, 17, 19})
            for (int t = 0; t < 100; ++t) {
                const QRSpec i = random_qr(rng, r, p), j = random_qr(rng, r, p);
                const auto want = oracle::product(dense(expand(i)), oracle::transpose(dense(expand(j))));
                CHECK(dense(expand(qr_product(i, j))) == want);
            }
}

TEST_CASE("identities for Q and N") {
    for (int p : {3, 5, 7, 11, 13}) {
        const Ring r = Ring::F2;
        const auto Q = dense(expand(QRSpec(p, el(r, 0), el(r, 1), el(r, 0))));
        const auto N = dense(expand(QRSpec(p, el(r, 0), el(r, 0), el(r, 1))));
        const auto I = dense(Circulant::identity(r, p));
        const int k = (p / 4) % 2;
        auto lin = [&](int i, int q, int n) {
            oracle::Matrix m(Q.size(), std::vector<int>(Q.size()));
            for (std::size_t x = 0; x < Q.size(); ++x)
                for (std::size_t y = 0; y < Q.size(); ++y) m[x][y] = (i * I[x][y] + q * Q[x][y] + n * N[x][y]) % 2;
            return m;
        };
        const auto T = [](const oracle::Matrix& m) { return oracle::transpose(m); };
        if (p % 4 == 1) {
            CHECK(Q == T(Q));
            CHECK(N == T(N));
            CHECK(oracle::product(Q, T(Q)) == lin(0, k + 1, k));
            CHECK(oracle::product(Q, T(N)) == lin(0, k, k));
            CHECK(oracle::product(N, T(N)) == lin(0, k, k + 1));
        } else {
            CHECK(Q == T(N));
            CHECK(oracle::product(Q, T(Q)) == lin(1, k, k));
            CHECK(oracle::product(N, T(N)) == lin(1, k, k));
            CHECK(oracle::product(Q, T(N)) == lin(0, k, k + 1));
            CHECK(oracle::product(N, T(Q)) == lin(0, k + 1, k));
        }
    }
}

}
