#include "sdc/enumerator.hpp"

#include <array>
#include <stdexcept>

namespace sdc {

namespace {

// clang-format off
const std::array<EnumeratorFamily, 9> families{{
    {60, "W60,1", 3451, 0, 24128, 0, 0, false, false, {}, {}, {}, {}},
    {60, "W60,2", 2555, 64, 33600, -384, 0, true, false, 0, 10, {}, {}},
    {64, "W64,1", 1312, 16, 22016, -64, 0, true, false, 14, 284, {}, {}},
    {64, "W64,2", 1312, 16, 23040, -64, 0, true, false, 0, 277, {}, {}},
    {66, "W66,1", 858, 8, 18678, -24, 0, true, false, 0, 778, {}, {}},
    {66, "W66,2", 1690, 0, 7990, 0, 0, false, false, {}, {}, {}, {}},
    {66, "W66,3", 858, 8, 18166, -24, 0, true, false, 14, 756, {}, {}},
    {68, "W68,1", 442, 4, 10864, -8, 0, true, false, {}, {}, {}, {}},
    {68, "W68,2", 442, 4, 14960, -8, -256, true, true, {}, {}, 0, 9},
}};
// clang-format on

std::optional<std::int64_t> exact_quotient(std::int64_t num, std::int64_t den) {
    if (num % den) return std::nullopt;
    return num / den;
}

void range_warning(EnumeratorMatch& m, const char* name, std::int64_t v, std::optional<int> lo, std::optional<int> hi) {
    if ((lo && v < *lo) || (hi && v > *hi) || v < 0)
        m.warnings.push_back(std::string(name) + " = " + std::to_string(v) + " is outside the published range");
}

}  // namespace

std::span<const EnumeratorFamily> enumerator_families() { return families; }

std::vector<const EnumeratorFamily*> families_for_length(int n) {
    std::vector<const EnumeratorFamily*> out;
    for (const auto& f : families)
        if (f.n == n) out.push_back(&f);
    return out;
}

std::vector<EnumeratorMatch> classify_enumerator(int n, std::int64_t a12, std::optional<std::int64_t> a14) {
    const auto fams = families_for_length(n);
    if (fams.empty()) throw std::invalid_argument("no weight-enumerator families known for length " + std::to_string(n));

    std::vector<EnumeratorMatch> out;
    for (const EnumeratorFamily* f : fams) {
        EnumeratorMatch m{f->id, {}, {}, {}};
        std::int64_t beta = 0;
        if (f->has_beta) {
            auto b = exact_quotient(a12 - f->base12, f->beta_12);
            if (!b) continue;
            beta = *b;
            m.beta = static_cast<int>(beta);
            range_warning(m, "beta", beta, f->beta_min, f->beta_max);
        } else if (a12 != f->base12) {
            continue;
        }
        if (a14) {
            const std::int64_t rest = *a14 - f->base14 - f->beta_14 * beta;
            if (f->has_gamma) {
                auto g = exact_quotient(rest, f->gamma_14);
                if (!g) continue;
                m.gamma = static_cast<int>(*g);
                range_warning(m, "gamma", *g, f->gamma_min, f->gamma_max);
            } else if (rest != 0) {
                continue;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace sdc
