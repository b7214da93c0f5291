#pragma once

// Lists of enumerator parameters for which codes were already known.
//
// One list per line:  <family> [gamma=<g>] <items>
// where an item is b, a..b, a..b/step, or !b (exclusion, applied after all
// inclusions of that family/gamma). Several lines for the same key accumulate.

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace sdc {

class KnownParameters {
public:
    static KnownParameters parse(std::istream& in);
    static KnownParameters load(const std::string& path);

    // nullptr when no list exists for the family / gamma.
    const std::set<int>* known(const std::string& family, std::optional<int> gamma) const;

    // nullopt when no list applies; otherwise whether beta is absent from it.
    std::optional<bool> is_new(const std::string& family, std::optional<int> beta, std::optional<int> gamma) const;

private:
    std::map<std::pair<std::string, int>, std::set<int>> lists_;  // gamma -1 = family without gamma
};

}  // namespace sdc
