#pragma once

// Linear codes over F2 and F2+uF2 given by generator rows.

#include "sdc/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sdc {

// Reduced row echelon form of a binary row set.
struct Echelon {
    std::vector<BitVec> rows;         // rows[i] has a leading 1 in column pivots[i], zeros in other pivot columns
    std::vector<std::size_t> pivots;
};

// Gaussian elimination. Columns are scanned in `column_order` (default 0..n-1) and the
// first row holding a 1 in the scanned column becomes its pivot row.
Echelon echelon(std::vector<BitVec> rows, std::size_t n, std::span<const std::size_t> column_order = {});

// Reduce v against an echelon basis; returns the residue (zero iff v is in the span).
BitVec reduce(const Echelon& e, BitVec v);

struct RankInfo {
    std::size_t rank = 0;               // rank of the generator reduced mod u (the binary rank for F2)
    std::vector<std::size_t> pivots;    // pivot columns of that reduction
    std::size_t log2_size = 0;          // log2 |C| (for F2U: dimension of the additive group over F2)
    bool free = true;                   // C is free of rank `rank`: |C| = |R|^rank
};

class Code {
public:
    Code(Ring ring, std::size_t n, std::vector<RingVector> generators);
    static Code binary(std::size_t n, std::vector<BitVec> rows);

    Ring ring() const { return ring_; }
    std::size_t length() const { return n_; }
    const std::vector<RingVector>& generators() const { return gen_; }
    // Unit planes of the generators; for F2 codes these are the generator rows.
    std::vector<BitVec> binary_rows() const;
    const RankInfo& rank_info() const { return info_; }
    // Echelon basis of the mod-u reduction (the code itself for F2).
    const Echelon& reduced_basis() const { return basis_; }

    // Membership of a binary vector (F2 codes only).
    bool contains(const BitVec& v) const;

private:
    Ring ring_;
    std::size_t n_;
    std::vector<RingVector> gen_;
    Echelon basis_;
    RankInfo info_;
};

const RankInfo& rank_and_pivots(const Code& code);

bool is_self_orthogonal(const Code& code);

// Returns an explanation when the code is not self-dual, nullopt otherwise.
std::optional<std::string> self_dual_violation(const Code& code);
inline bool is_self_dual(const Code& code) { return !self_dual_violation(code).has_value(); }

// All generator weights are 0 mod 4. Requires a self-orthogonal binary code.
bool is_doubly_even(const Code& code);

// Binary image generated by gray(r) and gray(u*r) for every generator r.
Code gray_image(const Code& code);

enum class CodeType { I, II };

// Upper bound on minimum distance of a binary self-dual code of length n.
int extremal_bound(int n, CodeType type);

}  // namespace sdc
