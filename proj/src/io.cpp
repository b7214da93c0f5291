#include "sdc/io.hpp"

#include <fstream>
#include <sstream>

namespace sdc {

namespace {

bool skip_line(const std::string& line) {
    const auto p = line.find_first_not_of(" \t\r");
    return p == std::string::npos || line[p] == '#';
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    return out;
}

std::size_t to_size(const std::string& v, std::size_t line, const char* what) {
    try {
        std::size_t pos = 0;
        const auto x = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return static_cast<std::size_t>(x);
    } catch (const std::exception&) {
        throw parse_error(line, std::string("bad ") + what + " '" + v + "'");
    }
}

// An (a,b,c) triple written as three symbols, possibly parenthesised / comma separated: "uu1" or "(u,u,1)".
QRSpec parse_triple(int p, Ring ring, const std::string& s, std::size_t line) {
    std::string sym;
    for (char ch : s)
        if (ch != '(' && ch != ')' && ch != ',' && ch != ' ') sym.push_back(ch);
    if (sym.size() != 3) throw parse_error(line, "QR triple '" + s + "' must have three entries");
    try {
        return {p, Element::from_char(ring, sym[0]), Element::from_char(ring, sym[1]), Element::from_char(ring, sym[2])};
    } catch (const std::invalid_argument& e) {
        throw parse_error(line, e.what());
    }
}

std::string triple_text(const QRSpec& q) { return {q.a().to_char(), q.b().to_char(), q.c().to_char()}; }

ConstructionSpec make_spec(int p, Ring ring, const std::vector<std::string>& q, const std::vector<std::string>& a,
                           std::size_t line) {
    if (q.size() != 3 || a.size() != 3) throw parse_error(line, "construction needs three QR triples and three circulant rows");
    try {
        return {p,
                ring,
                {parse_triple(p, ring, q[0], line), parse_triple(p, ring, q[1], line), parse_triple(p, ring, q[2], line)},
                {RingVector::parse(ring, a[0]), RingVector::parse(ring, a[1]), RingVector::parse(ring, a[2])}};
    } catch (const parse_error&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw parse_error(line, e.what());
    }
}

}  // namespace

std::map<std::string, std::string> parse_fields(const std::string& line, std::size_t line_no) {
    std::map<std::string, std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        const auto eq = tok.find('=');
        std::string key = eq == std::string::npos ? "" : tok.substr(0, eq);
        std::string val = eq == std::string::npos ? tok : tok.substr(eq + 1);
        if (out.count(key)) throw parse_error(line_no, "duplicate field '" + key + "'");
        out.emplace(std::move(key), std::move(val));
    }
    return out;
}

Code read_code(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<Ring> ring;
    std::size_t n = 0, k = 0;
    std::vector<RingVector> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (skip_line(line)) continue;
        if (!ring) {
            auto f = parse_fields(line, line_no);
            if (!f.count("ring") || !f.count("n") || !f.count("k"))
                throw parse_error(line_no, "header must read 'ring=<F2|F2U> n=<len> k=<rows>'");
            try {
                ring = parse_ring(f["ring"]);
            } catch (const std::invalid_argument& e) {
                throw parse_error(line_no, e.what());
            }
            n = to_size(f["n"], line_no, "length");
            k = to_size(f["k"], line_no, "row count");
            continue;
        }
        const std::string row = trim(line);
        if (row.size() != n)
            throw parse_error(line_no, "row has length " + std::to_string(row.size()) + ", expected " + std::to_string(n));
        try {
            rows.push_back(RingVector::parse(*ring, row));
        } catch (const std::invalid_argument& e) {
            throw parse_error(line_no, e.what());
        }
    }
    if (!ring) throw parse_error(line_no, "missing code header");
    if (rows.size() != k)
        throw parse_error(line_no, "expected " + std::to_string(k) + " rows, found " + std::to_string(rows.size()));
    return {*ring, n, std::move(rows)};
}

void write_code(std::ostream& out, const Code& code) {
    out << "ring=" << ring_name(code.ring()) << " n=" << code.length() << " k=" << code.generators().size() << '\n';
    for (const auto& r : code.generators()) out << r.to_string() << '\n';
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Code load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_code(in);
}

void save_code(const std::string& path, const Code& code) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_code(out, code);
}

ConstructionSpec parse_construction_spec(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return construction_spec_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(1, e.what());
        }
    }
    std::map<std::string, std::pair<std::string, std::size_t>> fields;
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (skip_line(line)) continue;
        for (auto& [k, v] : parse_fields(line, line_no)) {
            if (k.empty()) throw parse_error(line_no, "expected key=value, got '" + v + "'");
            if (fields.count(k)) throw parse_error(line_no, "duplicate field '" + k + "'");
            fields[k] = {v, line_no};
        }
    }
    for (const char* key : {"p", "ring", "q", "a"})
        if (!fields.count(key)) throw parse_error(line_no, std::string("construction spec lacks '") + key + "'");
    const auto& [ps, pl] = fields["p"];
    const int p = static_cast<int>(to_size(ps, pl, "prime"));
    Ring ring;
    try {
        ring = parse_ring(fields["ring"].first);
    } catch (const std::invalid_argument& e) {
        throw parse_error(fields["ring"].second, e.what());
    }
    if (!is_odd_prime(p)) throw parse_error(pl, "p = " + ps + " is not an odd prime");
    return make_spec(p, ring, split(fields["q"].first, ','), split(fields["a"].first, ','), fields["a"].second);
}

std::string construction_spec_text(const ConstructionSpec& spec) {
    std::ostringstream os;
    os << "p=" << spec.p << "\nring=" << ring_name(spec.ring) << "\nq=" << triple_text(spec.q[0]) << ','
       << triple_text(spec.q[1]) << ',' << triple_text(spec.q[2]) << "\na=" << spec.a_rows[0].to_string() << ','
       << spec.a_rows[1].to_string() << ',' << spec.a_rows[2].to_string() << '\n';
    return os.str();
}

nlohmann::json construction_spec_json(const ConstructionSpec& spec) {
    nlohmann::json j;
    j["p"] = spec.p;
    j["ring"] = std::string(ring_name(spec.ring));
    j["q"] = {triple_text(spec.q[0]), triple_text(spec.q[1]), triple_text(spec.q[2])};
    j["a"] = {spec.a_rows[0].to_string(), spec.a_rows[1].to_string(), spec.a_rows[2].to_string()};
    return j;
}

ConstructionSpec construction_spec_from_json(const nlohmann::json& j) {
    const int p = j.at("p").get<int>();
    if (!is_odd_prime(p)) throw parse_error(1, "p = " + std::to_string(p) + " is not an odd prime");
    Ring ring;
    try {
        ring = parse_ring(j.at("ring").get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw parse_error(1, e.what());
    }
    return make_spec(p, ring, j.at("q").get<std::vector<std::string>>(), j.at("a").get<std::vector<std::string>>(), 1);
}

ExtensionSpec read_extension_spec(std::istream& in, Ring ring, std::size_t n) {
    std::string line, x_text;
    std::size_t line_no = 0, x_line = 0, offset = 0;
    Element c = Element::one(ring);
    while (std::getline(in, line)) {
        ++line_no;
        if (skip_line(line)) continue;
        for (auto& [k, v] : parse_fields(line, line_no)) {
            try {
                if (k == "c") {
                    if (v == "1+u") v = "3";
                    if (v.size() != 1) throw std::invalid_argument("unit '" + v + "' is not a ring symbol");
                    c = Element::from_char(ring, v[0]);
                } else if (k == "X" || k == "x" || k.empty()) {
                    x_text = v;
                    x_line = line_no;
                } else if (k == "offset") {
                    offset = to_size(v, line_no, "offset");
                } else {
                    throw std::invalid_argument("unknown field '" + k + "'");
                }
            } catch (const std::invalid_argument& e) {
                throw parse_error(line_no, e.what());
            }
        }
    }
    if (x_text.empty()) throw parse_error(line_no, "extension spec lacks X");
    try {
        return {RingVector::parse(ring, x_text).embed(n, offset), c};
    } catch (const std::exception& e) {
        throw parse_error(x_line, e.what());
    }
}

std::vector<BitVec> read_vector_list(std::istream& in, std::size_t n) {
    std::vector<BitVec> out;
    std::string line;
    std::size_t line_no = 0, offset = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skip_line(line)) continue;
        for (auto& [k, v] : parse_fields(line, line_no)) {
            if (k == "offset") {
                offset = to_size(v, line_no, "offset");
                continue;
            }
            if (!k.empty() && k != "x") throw parse_error(line_no, "unknown field '" + k + "'");
            try {
                out.push_back(BitVec::from_string(v).embed(n, offset));
            } catch (const std::exception& e) {
                throw parse_error(line_no, e.what());
            }
        }
    }
    return out;
}

}  // namespace sdc
