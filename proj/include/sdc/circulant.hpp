#pragma once

// Circulant and quadratic-residue circulant matrices over F2 / F2+uF2.
//
// A circulant is stored by its first row; row i is the first row cyclically
// shifted right by i. Q_p(a,b,c) places a at position 0, b at the nonzero
// quadratic residues mod p and c at the non-residues.

#include "sdc/ring.hpp"

#include <vector>

namespace sdc {

bool is_odd_prime(int p);

// Nonzero quadratic residues mod p, ascending. Throws unless p is an odd prime.
std::vector<int> quadratic_residues(int p);

class Circulant {
public:
    Circulant() = default;
    explicit Circulant(RingVector first_row);
    static Circulant zero(Ring r, int p) { return Circulant(RingVector(r, static_cast<std::size_t>(p))); }
    static Circulant identity(Ring r, int p);

    Ring ring() const { return row_.ring(); }
    int order() const { return static_cast<int>(row_.size()); }
    const RingVector& first_row() const { return row_; }
    Element at(int i, int j) const;
    // Row i as a vector.
    RingVector row(int i) const;
    bool is_zero() const { return row_.is_zero(); }

    Circulant& operator+=(const Circulant& o);
    friend Circulant operator+(Circulant x, const Circulant& y) { return x += y; }
    bool operator==(const Circulant&) const = default;

private:
    RingVector row_;
};

// Matrix product via cyclic convolution of first rows.
Circulant circ_mul(const Circulant& x, const Circulant& y);
Circulant circ_transpose(const Circulant& x);
inline Circulant operator*(const Circulant& x, const Circulant& y) { return circ_mul(x, y); }

// Q_p(a, b, c). Only k mod 2 influences arithmetic, k is kept for the p = 4k+1 / 4k+3 split.
class QRSpec {
public:
    QRSpec(int p, Element a, Element b, Element c);
    static QRSpec zero(Ring r, int p) { return {p, Element::zero(r), Element::zero(r), Element::zero(r)}; }

    int p() const { return p_; }
    int k() const { return p_ / 4; }
    bool is_one_mod_four() const { return p_ % 4 == 1; }
    Ring ring() const { return a_.ring(); }
    Element a() const { return a_; }
    Element b() const { return b_; }
    Element c() const { return c_; }

    QRSpec& operator+=(const QRSpec& o);
    friend QRSpec operator+(QRSpec x, const QRSpec& y) { return x += y; }
    bool operator==(const QRSpec&) const = default;

private:
    int p_;
    Element a_, b_, c_;
};

Circulant expand(const QRSpec& spec);

// Closed form for Q_p(a_i,b_i,c_i) * Q_p(a_j,b_j,c_j)^T, itself a QR circulant.
QRSpec qr_product(const QRSpec& i, const QRSpec& j);

}  // namespace sdc
