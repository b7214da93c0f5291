#include "sdc/ring.hpp"

namespace sdc {

std::string_view ring_name(Ring r) { return r == Ring::F2 ? "F2" : "F2U"; }

Ring parse_ring(std::string_view s) {
    if (s == "F2") return Ring::F2;
    if (s == "F2U" || s == "F2+uF2") return Ring::F2U;
    throw std::invalid_argument("unknown ring '" + std::string(s) + "'");
}

std::span<const Element> Element::all(Ring r) {
    static constexpr std::array<Element, 2> f2{Element::zero(Ring::F2), Element::one(Ring::F2)};
    static constexpr std::array<Element, 4> f2u{Element::zero(Ring::F2U), Element::one(Ring::F2U), Element::u(),
                                                Element::one_plus_u()};
    if (r == Ring::F2) return f2;
    return f2u;
}

Element Element::from_char(Ring r, char c) {
    switch (c) {
    case '0': return zero(r);
    case '1': return one(r);
    case 'u':
        if (r == Ring::F2) break;
        return u();
    case '3':
        if (r == Ring::F2) break;
        return one_plus_u();
    default: break;
    }
    throw std::invalid_argument("symbol '" + std::string(1, c) + "' is not an element of " + std::string(ring_name(r)));
}

char Element::to_char() const {
    static constexpr char sym[4] = {'0', '1', 'u', '3'};
    return sym[(a_ ? 1 : 0) | (b_ ? 2 : 0)];
}

Element add(Element x, Element y) {
    if (x.ring() != y.ring()) throw ring_mismatch();
    return {x.ring(), x.unit_part() != y.unit_part(), x.nil_part() != y.nil_part()};
}

Element mul(Element x, Element y) {
    if (x.ring() != y.ring()) throw ring_mismatch();
    // (a+bu)(c+du) = ac + (ad+bc)u
    const bool a = x.unit_part() && y.unit_part();
    const bool b = (x.unit_part() && y.nil_part()) != (x.nil_part() && y.unit_part());
    return {x.ring(), a, b};
}

bool is_unit(Element x) { return x.unit_part(); }

std::array<bool, 2> gray(Element x) {
    if (x.ring() != Ring::F2U) throw std::invalid_argument("Gray map is defined on F2+uF2 only");
    return {x.nil_part(), x.unit_part() != x.nil_part()};
}

RingVector::RingVector(Ring ring, BitVec a, BitVec b) : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) throw std::invalid_argument("bit plane length mismatch");
    if (ring_ == Ring::F2 && !b_.is_zero()) throw std::invalid_argument("F2 vector cannot carry a u-plane");
}

RingVector RingVector::parse(Ring ring, std::string_view text) {
    RingVector v(ring, text.size());
    for (std::size_t i = 0; i < text.size(); ++i) v.set(i, Element::from_char(ring, text[i]));
    return v;
}

void RingVector::set(std::size_t i, Element x) {
    if (x.ring() != ring_) throw ring_mismatch();
    a_.set(i, x.unit_part());
    b_.set(i, x.nil_part());
}

RingVector& RingVector::operator+=(const RingVector& o) {
    if (o.ring_ != ring_) throw ring_mismatch();
    a_ ^= o.a_;
    b_ ^= o.b_;
    return *this;
}

RingVector RingVector::scaled(Element c) const {
    if (c.ring() != ring_) throw ring_mismatch();
    // (c0 + c1 u)(a + b u) = c0 a + (c0 b + c1 a) u
    RingVector out(ring_, size());
    if (c.unit_part()) {
        out.a_ = a_;
        out.b_ = b_;
    }
    if (c.nil_part()) out.b_ ^= a_;
    return out;
}

RingVector RingVector::prepend(std::span<const Element> head) const {
    RingVector out(ring_, head.size() + size());
    for (std::size_t i = 0; i < head.size(); ++i) out.set(i, head[i]);
    for (std::size_t i = 0; i < size(); ++i) out.set(head.size() + i, at(i));
    return out;
}

RingVector RingVector::embed(std::size_t n, std::size_t offset) const {
    return {ring_, a_.embed(n, offset), b_.embed(n, offset)};
}

std::string RingVector::to_string() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i) s[i] = at(i).to_char();
    return s;
}

Element dot(const RingVector& x, const RingVector& y) {
    if (x.ring() != y.ring()) throw ring_mismatch();
    const bool a = x.unit_plane().dot(y.unit_plane());
    if (x.ring() == Ring::F2) return {Ring::F2, a};
    const bool b = x.unit_plane().dot(y.nil_plane()) != x.nil_plane().dot(y.unit_plane());
    return {Ring::F2U, a, b};
}

BitVec gray(const RingVector& v) {
    if (v.ring() != Ring::F2U) throw std::invalid_argument("Gray map is defined on F2+uF2 only");
    return v.nil_plane().concat(v.unit_plane() ^ v.nil_plane());
}

}  // namespace sdc
