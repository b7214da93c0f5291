#pragma once

// Arithmetic over F2 and F2+uF2 (u^2 = 0) and the Gray map to binary vectors.
//
// Text alphabet: '0', '1', 'u', '3' where '3' stands for 1+u.

#include "sdc/bitvec.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sdc {

enum class Ring : std::uint8_t { F2, F2U };

std::string_view ring_name(Ring r);
Ring parse_ring(std::string_view s);

class ring_mismatch : public std::invalid_argument {
public:
    ring_mismatch() : std::invalid_argument("operands belong to different rings") {}
};

// a + b*u. For F2 the u-part is always zero.
class Element {
public:
    constexpr Element() = default;
    constexpr Element(Ring ring, bool a, bool b = false) : ring_(ring), a_(a), b_(ring == Ring::F2U && b) {
        if (ring == Ring::F2 && b) throw std::invalid_argument("F2 element cannot carry a u-part");
    }
    static constexpr Element zero(Ring r) { return {r, false, false}; }
    static constexpr Element one(Ring r) { return {r, true, false}; }
    static constexpr Element u() { return {Ring::F2U, false, true}; }
    static constexpr Element one_plus_u() { return {Ring::F2U, true, true}; }
    // All elements of the ring, in alphabet order 0, 1, u, 1+u.
    static std::span<const Element> all(Ring r);

    static Element from_char(Ring r, char c);
    char to_char() const;

    constexpr Ring ring() const { return ring_; }
    constexpr bool unit_part() const { return a_; }
    constexpr bool nil_part() const { return b_; }
    constexpr bool is_zero() const { return !a_ && !b_; }

    constexpr bool operator==(const Element&) const = default;

private:
    Ring ring_ = Ring::F2;
    bool a_ = false;
    bool b_ = false;
};

Element add(Element x, Element y);
Element mul(Element x, Element y);
bool is_unit(Element x);

inline Element operator+(Element x, Element y) { return add(x, y); }
inline Element operator*(Element x, Element y) { return mul(x, y); }

// Gray image of a single element: phi(a+bu) = (b, a+b).
std::array<bool, 2> gray(Element x);

// Vector over a ring stored as two bit planes: unit part (a) and u-part (b).
// For F2 the u-plane is identically zero.
class RingVector {
public:
    RingVector() = default;
    RingVector(Ring ring, std::size_t n) : ring_(ring), a_(n), b_(n) {}
    RingVector(Ring ring, BitVec a, BitVec b);
    static RingVector binary(BitVec a) { BitVec b(a.size()); return {Ring::F2, std::move(a), std::move(b)}; }
    static RingVector parse(Ring ring, std::string_view text);

    Ring ring() const { return ring_; }
    std::size_t size() const { return a_.size(); }
    const BitVec& unit_plane() const { return a_; }
    const BitVec& nil_plane() const { return b_; }

    Element at(std::size_t i) const { return {ring_, a_.get(i), b_.get(i)}; }
    void set(std::size_t i, Element x);

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    // Hamming weight (number of nonzero coordinates).
    std::size_t hamming_weight() const { return (a_ | b_).weight(); }

    RingVector& operator+=(const RingVector& o);
    friend RingVector operator+(RingVector x, const RingVector& y) { return x += y; }
    RingVector scaled(Element c) const;
    // Prepend coordinates.
    RingVector prepend(std::span<const Element> head) const;
    RingVector embed(std::size_t n, std::size_t offset) const;

    bool operator==(const RingVector&) const = default;
    std::string to_string() const;

private:
    Ring ring_ = Ring::F2;
    BitVec a_, b_;
};

// Euclidean inner product sum x_i y_i in the ring.
Element dot(const RingVector& x, const RingVector& y);

// Binary image of length 2n, laid out plane-major: (b_1..b_n, (a+b)_1..(a+b)_n).
BitVec gray(const RingVector& v);

}  // namespace sdc
