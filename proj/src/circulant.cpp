#include "sdc/circulant.hpp"

#include <algorithm>
#include <set>

namespace sdc {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::vector<int> quadratic_residues(int p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("quadratic residues need an odd prime, got " + std::to_string(p));
    std::set<int> r;
    for (long long x = 1; x < p; ++x) r.insert(static_cast<int>((x * x) % p));
    return {r.begin(), r.end()};
}

Circulant::Circulant(RingVector first_row) : row_(std::move(first_row)) {
    if (row_.size() == 0) throw std::invalid_argument("circulant of order 0");
}

Circulant Circulant::identity(Ring r, int p) {
    RingVector v(r, static_cast<std::size_t>(p));
    v.set(0, Element::one(r));
    return Circulant(std::move(v));
}

Element Circulant::at(int i, int j) const {
    const int p = order();
    return row_.at(static_cast<std::size_t>(((j - i) % p + p) % p));
}

RingVector Circulant::row(int i) const {
    const int p = order();
    RingVector v(ring(), static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) v.set(static_cast<std::size_t>(j), at(i, j));
    return v;
}

Circulant& Circulant::operator+=(const Circulant& o) {
    if (o.order() != order()) throw std::invalid_argument("circulant order mismatch");
    row_ += o.row_;
    return *this;
}

Circulant circ_mul(const Circulant& x, const Circulant& y) {
    if (x.order() != y.order()) throw std::invalid_argument("circulant order mismatch");
    if (x.ring() != y.ring()) throw ring_mismatch();
    const int p = x.order();
    const Ring r = x.ring();
    // (XY)[0][j] = sum_l x_l y_{j-l mod p}
    RingVector out(r, static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) {
        Element s = Element::zero(r);
        for (int l = 0; l < p; ++l) s = s + x.first_row().at(l) * y.first_row().at(static_cast<std::size_t>((j - l + p) % p));
        out.set(static_cast<std::size_t>(j), s);
    }
    return Circulant(std::move(out));
}

Circulant circ_transpose(const Circulant& x) {
    const int p = x.order();
    RingVector out(x.ring(), static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) out.set(static_cast<std::size_t>(j), x.first_row().at(static_cast<std::size_t>((p - j) % p)));
    return Circulant(std::move(out));
}

QRSpec::QRSpec(int p, Element a, Element b, Element c) : p_(p), a_(a), b_(b), c_(c) {
    if (!is_odd_prime(p)) throw std::invalid_argument("QR circulant order must be an odd prime, got " + std::to_string(p));
    if (a.ring() != b.ring() || a.ring() != c.ring()) throw ring_mismatch();
}

QRSpec& QRSpec::operator+=(const QRSpec& o) {
    if (o.p_ != p_) throw std::invalid_argument("QR circulant order mismatch");
    a_ = a_ + o.a_;
    b_ = b_ + o.b_;
    c_ = c_ + o.c_;
    return *this;
}

Circulant expand(const QRSpec& spec) {
    const int p = spec.p();
    const auto res = quadratic_residues(p);
    RingVector row(spec.ring(), static_cast<std::size_t>(p));
    row.set(0, spec.a());
    for (int i = 1; i < p; ++i)
        row.set(static_cast<std::size_t>(i), std::binary_search(res.begin(), res.end(), i) ? spec.b() : spec.c());
    return Circulant(std::move(row));
}

QRSpec qr_product(const QRSpec& i, const QRSpec& j) {
    if (i.p() != j.p()) throw std::invalid_argument("QR circulant order mismatch");
    if (i.ring() != j.ring()) throw ring_mismatch();
    const Ring r = i.ring();
    // Integer multiples reduce mod 2 in characteristic 2.
    const Element k = (i.k() % 2) ? Element::one(r) : Element::zero(r);
    const Element k1 = k + Element::one(r);
    const Element ai = i.a(), bi = i.b(), ci = i.c();
    const Element aj = j.a(), bj = j.b(), cj = j.c();

    if (i.is_one_mod_four()) {
        // Q = Q^T, N = N^T, QQ^T = (k+1)Q + kN, QN^T = k(Q+N), NN^T = kQ + (k+1)N
        const Element a = ai * aj;
        const Element b = ai * bj + bi * aj + k1 * bi * bj + k * (bi * cj + ci * bj) + k * ci * cj;
        const Element c = ai * cj + ci * aj + k * bi * bj + k * (bi * cj + ci * bj) + k1 * ci * cj;
        return {i.p(), a, b, c};
    }
    // Q = N^T, QQ^T = NN^T = I + kQ + kN, QN^T = kQ + (k+1)N, NQ^T = (k+1)Q + kN
    const Element a = ai * aj + bi * bj + ci * cj;
    const Element b = ai * cj + bi * aj + k * (bi * bj + ci * cj) + k * bi * cj + k1 * ci * bj;
    const Element c = ai * bj + ci * aj + k * (bi * bj + ci * cj) + k1 * bi * cj + k * ci * bj;
    return {i.p(), a, b, c};
}

}  // namespace sdc
