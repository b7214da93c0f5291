#pragma once

// Extensions by two coordinates and neighbours of self-dual codes.

#include "sdc/code.hpp"

#include <string>
#include <vector>

namespace sdc {

struct ExtensionSpec {
    RingVector x;   // <x, x> = 1
    Element c;      // unit with c^2 = 1
};

// Rows (1, 0, X) and (y_i, c*y_i, r_i) with y_i = <r_i, X>. With c = 1 over F2 this is
// the classical two-coordinate extension. Throws std::invalid_argument on a violated
// precondition and std::logic_error if the result fails the self-duality check.
Code extend(const Code& code, const ExtensionSpec& spec);

struct NeighbourResult {
    Code code;
    bool degenerate = false;  // x was already in the code; code is returned unchanged
};

// D = < <x>^perp ∩ C, x > for a binary self-dual C and an even-weight x.
NeighbourResult neighbour(const Code& code, const BitVec& x);

class chain_error : public std::invalid_argument {
public:
    chain_error(std::size_t index, const std::string& what)
        : std::invalid_argument("neighbour " + std::to_string(index) + ": " + what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

// N_(i+1) = < <x_i>^perp ∩ N_(i), x_i >. Element i of the result is N_(i+1).
std::vector<Code> neighbour_chain(const Code& code, const std::vector<BitVec>& xs);

}  // namespace sdc
