#include "sdc/novelty.hpp"

#include "sdc/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace sdc {

namespace {

int to_int(const std::string& s, std::size_t line) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, "bad number '" + s + "'");
    }
}

void add_item(std::set<int>& to, const std::string& item, std::size_t line) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
        to.insert(to_int(item, line));
        return;
    }
    const int lo = to_int(item.substr(0, dots), line);
    std::string rest = item.substr(dots + 2);
    int step = 1;
    if (const auto slash = rest.find('/'); slash != std::string::npos) {
        step = to_int(rest.substr(slash + 1), line);
        rest = rest.substr(0, slash);
    }
    const int hi = to_int(rest, line);
    if (step <= 0 || hi < lo) throw parse_error(line, "bad range '" + item + "'");
    for (int v = lo; v <= hi; v += step) to.insert(v);
}

}  // namespace

KnownParameters KnownParameters::parse(std::istream& in) {
    KnownParameters out;
    std::map<std::pair<std::string, int>, std::set<int>> excluded;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream is(line);
        std::string family;
        if (!(is >> family) || family[0] == '#') continue;
        std::vector<std::string> items;
        int gamma = -1;
        for (std::string tok; is >> tok;) {
            if (tok.rfind("gamma=", 0) == 0)
                gamma = to_int(tok.substr(6), line_no);
            else
                items.push_back(tok);
        }
        if (items.empty()) throw parse_error(line_no, "no values listed for " + family);
        const auto key = std::make_pair(family, gamma);
        auto& set = out.lists_[key];
        for (const auto& item : items) {
            if (item[0] == '!')
                excluded[key].insert(to_int(item.substr(1), line_no));
            else
                add_item(set, item, line_no);
        }
    }
    for (const auto& [key, values] : excluded)
        for (int v : values) out.lists_[key].erase(v);
    return out;
}

KnownParameters KnownParameters::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse(in);
}

const std::set<int>* KnownParameters::known(const std::string& family, std::optional<int> gamma) const {
    const auto it = lists_.find({family, gamma.value_or(-1)});
    return it == lists_.end() ? nullptr : &it->second;
}

std::optional<bool> KnownParameters::is_new(const std::string& family, std::optional<int> beta,
                                            std::optional<int> gamma) const {
    if (!beta) return std::nullopt;
    const auto* list = known(family, gamma);
    if (!list) return std::nullopt;
    return !list->count(*beta);
}

}  // namespace sdc
