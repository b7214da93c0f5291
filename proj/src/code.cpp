#include "sdc/code.hpp"

#include <numeric>

namespace sdc {

Echelon echelon(std::vector<BitVec> rows, std::size_t n, std::span<const std::size_t> column_order) {
    std::vector<std::size_t> order;
    if (column_order.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        column_order = order;
    }
    Echelon e;
    std::size_t top = 0;
    for (std::size_t col : column_order) {
        std::size_t r = top;
        while (r < rows.size() && !rows[r].get(col)) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[top], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != top && rows[i].get(col)) rows[i] ^= rows[top];
        e.pivots.push_back(col);
        ++top;
        if (top == rows.size()) break;
    }
    rows.resize(top);
    e.rows = std::move(rows);
    return e;
}

BitVec reduce(const Echelon& e, BitVec v) {
    for (std::size_t i = 0; i < e.rows.size(); ++i)
        if (v.get(e.pivots[i])) v ^= e.rows[i];
    return v;
}

Code::Code(Ring ring, std::size_t n, std::vector<RingVector> generators) : ring_(ring), n_(n), gen_(std::move(generators)) {
    std::vector<BitVec> mod_u;
    std::vector<BitVec> additive;  // (a-plane | b-plane) images of r and u*r
    mod_u.reserve(gen_.size());
    for (const auto& g : gen_) {
        if (g.ring() != ring_) throw ring_mismatch();
        if (g.size() != n_) throw std::invalid_argument("generator row of length " + std::to_string(g.size()) +
                                                        " in a code of length " + std::to_string(n_));
        mod_u.push_back(g.unit_plane());
        if (ring_ == Ring::F2U) {
            additive.push_back(g.unit_plane().concat(g.nil_plane()));
            additive.push_back(BitVec(n_).concat(g.unit_plane()));
        }
    }
    basis_ = echelon(std::move(mod_u), n_);
    info_.rank = basis_.rows.size();
    info_.pivots = basis_.pivots;
    if (ring_ == Ring::F2) {
        info_.log2_size = info_.rank;
        info_.free = true;
    } else {
        info_.log2_size = echelon(std::move(additive), 2 * n_).rows.size();
        info_.free = info_.log2_size == 2 * info_.rank;
    }
}

Code Code::binary(std::size_t n, std::vector<BitVec> rows) {
    std::vector<RingVector> g;
    g.reserve(rows.size());
    for (auto& r : rows) g.push_back(RingVector::binary(std::move(r)));
    return {Ring::F2, n, std::move(g)};
}

std::vector<BitVec> Code::binary_rows() const {
    std::vector<BitVec> out;
    out.reserve(gen_.size());
    for (const auto& g : gen_) out.push_back(g.unit_plane());
    return out;
}

bool Code::contains(const BitVec& v) const {
    if (ring_ != Ring::F2) throw std::invalid_argument("membership test is implemented for binary codes");
    return reduce(basis_, v).is_zero();
}

const RankInfo& rank_and_pivots(const Code& code) { return code.rank_info(); }

bool is_self_orthogonal(const Code& code) {
    const auto& g = code.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j)
            if (!dot(g[i], g[j]).is_zero()) return false;
    return true;
}

std::optional<std::string> self_dual_violation(const Code& code) {
    const std::size_t n = code.length();
    if (n % 2) return "odd length " + std::to_string(n);
    if (!is_self_orthogonal(code)) return "generator is not self-orthogonal";
    const auto& info = code.rank_info();
    if (info.rank != n / 2)
        return "rank " + std::to_string(info.rank) + " differs from n/2 = " + std::to_string(n / 2);
    if (!info.free) return "code is not free of rank " + std::to_string(info.rank);
    return std::nullopt;
}

bool is_doubly_even(const Code& code) {
    if (code.ring() != Ring::F2) throw std::invalid_argument("doubly-even test needs a binary code");
    if (!is_self_orthogonal(code)) throw std::invalid_argument("doubly-even test needs a self-orthogonal code");
    for (const auto& g : code.generators())
        if (g.unit_plane().weight() % 4) return false;
    return true;
}

Code gray_image(const Code& code) {
    if (code.ring() != Ring::F2U) throw std::invalid_argument("Gray image needs a code over F2+uF2");
    std::vector<BitVec> rows;
    rows.reserve(2 * code.generators().size());
    const Element u = Element::u();
    for (const auto& g : code.generators()) {
        rows.push_back(gray(g));
        rows.push_back(gray(g.scaled(u)));
    }
    return Code::binary(2 * code.length(), std::move(rows));
}

int extremal_bound(int n, CodeType type) {
    const int base = 4 * (n / 24) + 4;
    if (type == CodeType::I && n % 24 == 22) return base + 2;
    return base;
}

}  // namespace sdc
