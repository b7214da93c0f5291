#include "sdc/transforms.hpp"

#include <array>
#include <stdexcept>

namespace sdc {

Code extend(const Code& code, const ExtensionSpec& spec) {
    const Ring r = code.ring();
    if (spec.x.ring() != r || spec.c.ring() != r) throw ring_mismatch();
    if (spec.x.size() != code.length()) throw std::invalid_argument("extension vector length differs from code length");
    if (dot(spec.x, spec.x) != Element::one(r)) throw std::invalid_argument("extension vector must satisfy <X,X> = 1");
    if (spec.c * spec.c != Element::one(r)) throw std::invalid_argument("extension unit must satisfy c^2 = 1");
    if (auto why = self_dual_violation(code)) throw std::invalid_argument("extension needs a self-dual code: " + *why);

    std::vector<RingVector> rows;
    rows.reserve(code.generators().size() + 1);
    const std::array<Element, 2> head{Element::one(r), Element::zero(r)};
    rows.push_back(spec.x.prepend(head));
    for (const auto& g : code.generators()) {
        const Element y = dot(g, spec.x);
        const std::array<Element, 2> h{y, spec.c * y};
        rows.push_back(g.prepend(h));
    }
    Code out(r, code.length() + 2, std::move(rows));
    if (auto why = self_dual_violation(out)) throw std::logic_error("extended code is not self-dual: " + *why);
    return out;
}

NeighbourResult neighbour(const Code& code, const BitVec& x) {
    if (code.ring() != Ring::F2) throw std::invalid_argument("neighbours are built for binary codes");
    if (x.size() != code.length()) throw std::invalid_argument("neighbour vector length differs from code length");
    if (x.weight() % 2) throw std::invalid_argument("neighbour vector must have even weight");
    if (auto why = self_dual_violation(code)) throw std::invalid_argument("neighbour needs a self-dual code: " + *why);

    const auto& basis = code.reduced_basis().rows;
    std::vector<BitVec> rows;
    rows.reserve(basis.size());
    const BitVec* pivot = nullptr;
    for (const auto& r : basis) {
        if (!r.dot(x)) {
            rows.push_back(r);
        } else if (!pivot) {
            pivot = &r;
        } else {
            rows.push_back(r ^ *pivot);
        }
    }
    // Self-dual C: x orthogonal to all of C means x lies in C.
    if (!pivot) return {code, true};
    rows.push_back(x);
    return {Code::binary(code.length(), std::move(rows)), false};
}

std::vector<Code> neighbour_chain(const Code& code, const std::vector<BitVec>& xs) {
    std::vector<Code> out;
    out.reserve(xs.size());
    const Code* current = &code;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        try {
            auto step = neighbour(*current, xs[i]);
            if (step.degenerate) throw std::invalid_argument("vector already lies in the code");
            out.push_back(std::move(step.code));
        } catch (const std::invalid_argument& e) {
            throw chain_error(i, e.what());
        }
        current = &out.back();
    }
    return out;
}

}  // namespace sdc
