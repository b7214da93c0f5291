#include "sdc/bitvec.hpp"

#include <stdexcept>

namespace sdc {

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i);
        else if (bits[i] != '0') throw std::invalid_argument("bit string contains '" + std::string(1, bits[i]) + "'");
    }
    return v;
}

BitVec BitVec::ones(std::size_t n) {
    BitVec v(n);
    for (auto& w : v.w_) w = ~word_t{0};
    if (n % word_bits) v.w_.back() = (word_t{1} << (n % word_bits)) - 1;
    return v;
}

std::size_t BitVec::weight() const {
    std::size_t s = 0;
    for (word_t w : w_) s += static_cast<std::size_t>(std::popcount(w));
    return s;
}

bool BitVec::is_zero() const {
    for (word_t w : w_)
        if (w) return false;
    return true;
}

bool BitVec::dot(const BitVec& o) const {
    check_same(o);
    word_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

std::size_t BitVec::find_next(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from / word_bits;
    word_t w = w_[wi] & (~word_t{0} << (from % word_bits));
    while (true) {
        if (w) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
        if (++wi == w_.size()) return n_;
        w = w_[wi];
    }
}

void BitVec::check_same(const BitVec& o) const {
    if (o.n_ != n_) throw std::invalid_argument("bit vector length mismatch");
}

BitVec& BitVec::operator^=(const BitVec& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

BitVec BitVec::concat(const BitVec& tail) const {
    BitVec out(n_ + tail.n_);
    std::copy(w_.begin(), w_.end(), out.w_.begin());
    for (std::size_t i = tail.find_next(0); i < tail.n_; i = tail.find_next(i + 1)) out.set(n_ + i);
    return out;
}

BitVec BitVec::slice(std::size_t from, std::size_t len) const {
    if (from + len > n_) throw std::out_of_range("slice beyond vector end");
    BitVec out(len);
    for (std::size_t i = 0; i < len; ++i)
        if (get(from + i)) out.set(i);
    return out;
}

BitVec BitVec::embed(std::size_t n, std::size_t offset) const {
    if (offset + n_ > n) throw std::out_of_range("embedded vector does not fit");
    BitVec out(n);
    for (std::size_t i = find_next(0); i < n_; i = find_next(i + 1)) out.set(offset + i);
    return out;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

}  // namespace sdc
