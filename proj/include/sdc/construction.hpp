#pragma once

// Generator matrices built from three QR circulants Q_i = Q_p(a_i,b_i,c_i) and
// three circulants A_i:
//
//     ( Q0 Q1 Q2 | A0 A1 A2 )
//     ( Q2 Q0 Q1 | A2 A0 A1 )
//     ( Q1 Q2 Q0 | A1 A2 A0 )
//
// Block row r, block column c holds index (c - r) mod 3.

#include "sdc/circulant.hpp"
#include "sdc/code.hpp"

#include <array>

namespace sdc {

struct ConstructionSpec {
    int p = 0;
    Ring ring = Ring::F2;
    std::array<QRSpec, 3> q;
    std::array<RingVector, 3> a_rows;

    ConstructionSpec(int p, Ring ring, std::array<QRSpec, 3> q, std::array<RingVector, 3> a_rows);
    Circulant q_block(int i) const { return expand(q[static_cast<std::size_t>(i)]); }
    Circulant a_block(int i) const { return Circulant(a_rows[static_cast<std::size_t>(i)]); }
    bool operator==(const ConstructionSpec&) const = default;
};

// 3p x 6p generator.
Code build(const ConstructionSpec& spec);

// M M^T is block circulant; these are the blocks of its first block row.
struct BlockCirculant3 {
    std::array<Circulant, 3> blocks;
    bool is_zero() const { return blocks[0].is_zero() && blocks[1].is_zero() && blocks[2].is_zero(); }
};

BlockCirculant3 mmT(const ConstructionSpec& spec);

// Self-orthogonality from the closed forms:
//   sum A_i A_i^T         == sum Q_i Q_i^T
//   sum A_i A_{i+2}^T     == sum Q_i Q_{i+2}^T      (indices mod 3)
// with the Q side evaluated through qr_product.
bool check_theorem_4_conditions(const ConstructionSpec& spec);

// Self-orthogonal and of free rank 3p.
bool is_self_dual_construction(const ConstructionSpec& spec);

// Invertibility of Q0 + Q1 + Q2 over the ring, decided on its mod-u reduction:
// a binary circulant with representer f(X) is invertible iff gcd(f, X^p - 1) = 1.
bool sum_q_invertible(const ConstructionSpec& spec);

// Circulant invertibility over its ring (mod-u reduction decides it).
bool circulant_invertible(const Circulant& c);

}  // namespace sdc
