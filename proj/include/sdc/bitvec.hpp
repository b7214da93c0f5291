#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

using word_t = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + word_bits - 1) / word_bits; }

// Fixed-length packed bit vector. Bits beyond size() are always zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_(words_for(n), 0) {}

    static BitVec from_string(std::string_view bits);  // '0'/'1' characters
    static BitVec ones(std::size_t n);

    std::size_t size() const { return n_; }
    std::size_t num_words() const { return w_.size(); }
    std::span<const word_t> words() const { return w_; }
    std::span<word_t> words() { return w_; }

    bool get(std::size_t i) const { return (w_[i / word_bits] >> (i % word_bits)) & 1u; }
    void set(std::size_t i, bool v = true) {
        const word_t m = word_t{1} << (i % word_bits);
        if (v) w_[i / word_bits] |= m; else w_[i / word_bits] &= ~m;
    }
    void flip(std::size_t i) { w_[i / word_bits] ^= word_t{1} << (i % word_bits); }

    std::size_t weight() const;
    bool is_zero() const;
    // parity of popcount(this & other)
    bool dot(const BitVec& other) const;
    // first set bit at or after `from`, or size() if none
    std::size_t find_next(std::size_t from) const;

    BitVec& operator^=(const BitVec& o);
    BitVec& operator&=(const BitVec& o);
    BitVec& operator|=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    bool operator==(const BitVec&) const = default;

    // Concatenation and sub-range copies.
    BitVec concat(const BitVec& tail) const;
    BitVec slice(std::size_t from, std::size_t len) const;
    // Copy of this vector placed at `offset` within a zero vector of length n.
    BitVec embed(std::size_t n, std::size_t offset) const;

    std::string to_string() const;

private:
    void check_same(const BitVec& o) const;

    std::size_t n_ = 0;
    std::vector<word_t> w_;
};

}  // namespace sdc
