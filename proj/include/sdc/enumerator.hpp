#pragma once

// Weight-enumerator families of extremal Type I self-dual codes of lengths
// 60, 64, 66 and 68, written through their y^12 and y^14 coefficients:
//
//   A12 = base12 + beta_12 * beta
//   A14 = base14 + beta_14 * beta + gamma_14 * gamma

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sdc {

struct EnumeratorFamily {
    int n;
    std::string id;  // e.g. "W68,2"
    std::int64_t base12, beta_12;
    std::int64_t base14, beta_14, gamma_14;
    bool has_beta, has_gamma;
    std::optional<int> beta_min, beta_max;
    std::optional<int> gamma_min, gamma_max;
};

std::span<const EnumeratorFamily> enumerator_families();
std::vector<const EnumeratorFamily*> families_for_length(int n);

struct EnumeratorMatch {
    std::string family;
    std::optional<int> beta;
    std::optional<int> gamma;
    std::vector<std::string> warnings;  // parameter outside the published range

    bool operator==(const EnumeratorMatch&) const = default;
};

// Every family of length n consistent with the given counts. Without a14 only
// the y^12 coefficient constrains the match (gamma then stays unresolved).
// Throws std::invalid_argument for lengths without known families.
std::vector<EnumeratorMatch> classify_enumerator(int n, std::int64_t a12, std::optional<std::int64_t> a14);

}  // namespace sdc
