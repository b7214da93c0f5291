#include "sdc/construction.hpp"

namespace sdc {

ConstructionSpec::ConstructionSpec(int p_, Ring ring_, std::array<QRSpec, 3> q_, std::array<RingVector, 3> a_)
    : p(p_), ring(ring_), q(std::move(q_)), a_rows(std::move(a_)) {
    if (!is_odd_prime(p)) throw std::invalid_argument("block order must be an odd prime, got " + std::to_string(p));
    for (const auto& t : q) {
        if (t.p() != p) throw std::invalid_argument("QR triple order differs from p");
        if (t.ring() != ring) throw ring_mismatch();
    }
    for (const auto& r : a_rows) {
        if (r.size() != static_cast<std::size_t>(p)) throw std::invalid_argument("circulant row length differs from p");
        if (r.ring() != ring) throw ring_mismatch();
    }
}

Code build(const ConstructionSpec& spec) {
    const int p = spec.p;
    std::array<Circulant, 3> q, a;
    for (int i = 0; i < 3; ++i) {
        q[static_cast<std::size_t>(i)] = spec.q_block(i);
        a[static_cast<std::size_t>(i)] = spec.a_block(i);
    }
    std::vector<RingVector> rows;
    rows.reserve(static_cast<std::size_t>(3 * p));
    for (int br = 0; br < 3; ++br) {
        for (int i = 0; i < p; ++i) {
            RingVector row(spec.ring, static_cast<std::size_t>(6 * p));
            for (int bc = 0; bc < 3; ++bc) {
                const auto idx = static_cast<std::size_t>(((bc - br) % 3 + 3) % 3);
                for (int j = 0; j < p; ++j) {
                    row.set(static_cast<std::size_t>(bc * p + j), q[idx].at(i, j));
                    row.set(static_cast<std::size_t>(3 * p + bc * p + j), a[idx].at(i, j));
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return {spec.ring, static_cast<std::size_t>(6 * p), std::move(rows)};
}

BlockCirculant3 mmT(const ConstructionSpec& spec) {
    std::array<Circulant, 3> q, a;
    for (int i = 0; i < 3; ++i) {
        q[static_cast<std::size_t>(i)] = spec.q_block(i);
        a[static_cast<std::size_t>(i)] = spec.a_block(i);
    }
    // Block (0, s) = sum_i X_i X_{i-s}^T over X in {Q, A} (block row s is block row 0 shifted by s).
    BlockCirculant3 out;
    for (int s = 0; s < 3; ++s) {
        Circulant acc = Circulant::zero(spec.ring, spec.p);
        for (int i = 0; i < 3; ++i) {
            const auto j = static_cast<std::size_t>((i - s + 3) % 3);
            const auto ii = static_cast<std::size_t>(i);
            acc += circ_mul(q[ii], circ_transpose(q[j]));
            acc += circ_mul(a[ii], circ_transpose(a[j]));
        }
        out.blocks[static_cast<std::size_t>(s)] = std::move(acc);
    }
    return out;
}

bool check_theorem_4_conditions(const ConstructionSpec& spec) {
    for (int shift : {0, 2}) {
        QRSpec q_side = QRSpec::zero(spec.ring, spec.p);
        Circulant a_side = Circulant::zero(spec.ring, spec.p);
        for (int i = 0; i < 3; ++i) {
            const auto ii = static_cast<std::size_t>(i);
            const auto j = static_cast<std::size_t>((i + shift) % 3);
            q_side += qr_product(spec.q[ii], spec.q[j]);
            a_side += circ_mul(spec.a_block(i), circ_transpose(spec.a_block(static_cast<int>(j))));
        }
        if (!(a_side == expand(q_side))) return false;
    }
    return true;
}

bool is_self_dual_construction(const ConstructionSpec& spec) {
    if (!check_theorem_4_conditions(spec)) return false;
    const auto& info = build(spec).rank_info();
    return info.rank == static_cast<std::size_t>(3 * spec.p) && info.free;
}

namespace {

// Binary polynomials as bit vectors, coefficient of X^i at bit i.
int degree(const BitVec& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f.get(i)) return static_cast<int>(i);
    return -1;
}

BitVec poly_mod(BitVec f, const BitVec& g) {
    const int dg = degree(g);
    for (int df = degree(f); df >= dg; df = degree(f))
        for (int i = 0; i <= dg; ++i)
            if (g.get(static_cast<std::size_t>(i))) f.flip(static_cast<std::size_t>(df - dg + i));
    return f;
}

}  // namespace

bool circulant_invertible(const Circulant& c) {
    const int p = c.order();
    BitVec f(static_cast<std::size_t>(p) + 1);
    BitVec g(static_cast<std::size_t>(p) + 1);
    for (int i = 0; i < p; ++i) f.set(static_cast<std::size_t>(i), c.first_row().unit_plane().get(static_cast<std::size_t>(i)));
    g.set(0);
    g.set(static_cast<std::size_t>(p));
    if (degree(f) < 0) return false;
    while (degree(f) >= 0) {
        g = poly_mod(std::move(g), f);
        std::swap(f, g);
    }
    return degree(g) == 0;
}

bool sum_q_invertible(const ConstructionSpec& spec) {
    return circulant_invertible(expand(spec.q[0] + spec.q[1] + spec.q[2]));
}

}  // namespace sdc
