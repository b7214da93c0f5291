#include "sdc/report.hpp"

#include "sdc/io.hpp"

#include <sstream>

namespace sdc {

Code binary_image(const Code& code) { return code.ring() == Ring::F2 ? code : gray_image(code); }

Analysis analyze(const Code& code, int w_max, int threads) {
    if (auto why = self_dual_violation(code)) throw not_self_dual(*why);
    Code bin = binary_image(code);
    if (auto why = self_dual_violation(bin)) throw not_self_dual("binary image: " + *why);
    Analysis a;
    a.ring = code.ring();
    a.length = code.length();
    a.binary_length = bin.length();
    a.type = is_doubly_even(bin) ? CodeType::II : CodeType::I;
    a.weights = partial_weights(bin, w_max, threads);
    return a;
}

namespace {

const char* type_name(CodeType t) { return t == CodeType::I ? "I" : "II"; }

CodeType parse_type(const std::string& s) {
    if (s == "I") return CodeType::I;
    if (s == "II") return CodeType::II;
    throw std::invalid_argument("unknown code type '" + s + "'");
}

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<int> opt_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<int>();
}

int to_int(const std::string& s) {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return v;
}

}  // namespace

nlohmann::json weight_report_json(const WeightReport& r) {
    nlohmann::json fam = nlohmann::json::array();
    for (const auto& m : r.families)
        fam.push_back({{"family", m.family}, {"beta", opt(m.beta)}, {"gamma", opt(m.gamma)}, {"warnings", m.warnings}});
    return {{"n", r.n}, {"w_max", r.w_max}, {"d", opt(r.d)}, {"counts", r.counts}, {"families", fam}};
}

WeightReport weight_report_from_json(const nlohmann::json& j) {
    WeightReport r;
    r.n = j.at("n").get<std::size_t>();
    r.w_max = j.at("w_max").get<int>();
    r.d = opt_int(j, "d");
    r.counts = j.at("counts").get<std::vector<std::uint64_t>>();
    for (const auto& f : j.at("families")) {
        EnumeratorMatch m;
        m.family = f.at("family").get<std::string>();
        m.beta = opt_int(f, "beta");
        m.gamma = opt_int(f, "gamma");
        m.warnings = f.at("warnings").get<std::vector<std::string>>();
        r.families.push_back(std::move(m));
    }
    return r;
}

nlohmann::json analysis_json(const Analysis& a) {
    return {{"ring", std::string(ring_name(a.ring))},
            {"length", a.length},
            {"binary_length", a.binary_length},
            {"type", type_name(a.type)},
            {"weights", weight_report_json(a.weights)}};
}

Analysis analysis_from_json(const nlohmann::json& j) {
    Analysis a;
    a.ring = parse_ring(j.at("ring").get<std::string>());
    a.length = j.at("length").get<std::size_t>();
    a.binary_length = j.at("binary_length").get<std::size_t>();
    a.type = parse_type(j.at("type").get<std::string>());
    a.weights = weight_report_from_json(j.at("weights"));
    return a;
}

std::string analysis_text(const Analysis& a) {
    std::ostringstream os;
    const auto& w = a.weights;
    os << "ring=" << ring_name(a.ring) << " length=" << a.length << " binary_length=" << a.binary_length
       << " type=" << type_name(a.type) << '\n';
    os << "w_max=" << w.w_max << " d=";
    if (w.d) os << *w.d; else os << "none";
    os << '\n';
    for (std::size_t i = 0; i < w.counts.size(); ++i) os << 'A' << i << '=' << w.counts[i] << '\n';
    for (const auto& m : w.families) {
        os << "family=" << m.family;
        if (m.beta) os << " beta=" << *m.beta;
        if (m.gamma) os << " gamma=" << *m.gamma;
        os << '\n';
        for (const auto& warn : m.warnings) os << "warning=" << warn << '\n';
    }
    return os.str();
}

Analysis parse_analysis_text(const std::string& text) {
    Analysis a;
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    try {
        while (std::getline(is, line)) {
            ++line_no;
            if (line.empty()) continue;
            if (line.rfind("warning=", 0) == 0) {
                if (a.weights.families.empty()) throw std::invalid_argument("warning before any family");
                a.weights.families.back().warnings.push_back(line.substr(8));
                continue;
            }
            std::istringstream ls(line);
            std::string tok;
            ls >> tok;
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("expected key=value");
            const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "ring") {
                a.ring = parse_ring(val);
                auto rest = parse_fields(line.substr(tok.size()), line_no);
                a.length = static_cast<std::size_t>(std::stoull(rest.at("length")));
                a.binary_length = static_cast<std::size_t>(std::stoull(rest.at("binary_length")));
                a.type = parse_type(rest.at("type"));
                a.weights.n = a.binary_length;
                header = true;
            } else if (key == "w_max") {
                a.weights.w_max = to_int(val);
                auto rest = parse_fields(line.substr(tok.size()), line_no);
                const auto& d = rest.at("d");
                if (d != "none") a.weights.d = to_int(d);
            } else if (key[0] == 'A') {
                if (static_cast<std::size_t>(to_int(key.substr(1))) != a.weights.counts.size())
                    throw std::invalid_argument("weight counts out of order");
                a.weights.counts.push_back(std::stoull(val));
            } else if (key == "family") {
                EnumeratorMatch m;
                m.family = val;
                for (auto& [k, v] : parse_fields(line.substr(tok.size()), line_no)) {
                    if (k == "beta") m.beta = to_int(v);
                    else if (k == "gamma") m.gamma = to_int(v);
                    else throw std::invalid_argument("unknown field '" + k + "'");
                }
                a.weights.families.push_back(std::move(m));
            } else {
                throw std::invalid_argument("unknown field '" + key + "'");
            }
        }
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception& e) {
        throw parse_error(line_no, e.what());
    }
    if (!header) throw parse_error(line_no, "missing header line");
    return a;
}

}  // namespace sdc
