#include "sdc/search.hpp"

#include "sdc/io.hpp"

#include <array>
#include <map>
#include <sstream>
#include <tuple>

#include <omp.h>

namespace sdc {

// ---------------------------------------------------------------- provenance

Code replay(const Provenance& p) {
    if (!p.construction) throw std::invalid_argument("provenance has no construction");
    Code code = build(*p.construction);
    for (const auto& step : p.extensions) {
        if (step.binary) code = binary_image(code);
        code = extend(code, {step.x, step.c});
    }
    if (!p.neighbours.empty()) {
        const auto chain = neighbour_chain(binary_image(code), p.neighbours);
        code = chain.back();
    }
    return code;
}

namespace {

std::string triple_text(const QRSpec& q) { return {q.a().to_char(), q.b().to_char(), q.c().to_char()}; }

Element parse_unit(Ring r, const std::string& s) {
    if (s == "1+u") return Element::one_plus_u();
    if (s.size() != 1) throw std::invalid_argument("bad unit '" + s + "'");
    return Element::from_char(r, s[0]);
}

// The ring each successive extension works over.
Ring step_ring(Ring current, bool binary) { return binary ? Ring::F2 : current; }

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Construct: return "construct";
        case Phase::Extend: return "extend";
        case Phase::NeighbourChain: return "neighbour-chain";
    }
    return "";
}

Phase parse_phase(const std::string& s) {
    if (s == "construct") return Phase::Construct;
    if (s == "extend") return Phase::Extend;
    if (s == "neighbour-chain" || s == "neighbor-chain") return Phase::NeighbourChain;
    throw std::invalid_argument("unknown phase '" + s + "'");
}

}  // namespace

nlohmann::json provenance_json(const Provenance& p) {
    nlohmann::json j;
    if (p.construction) {
        const auto& s = *p.construction;
        j["p"] = s.p;
        j["ring"] = std::string(ring_name(s.ring));
        j["q_triples"] = {triple_text(s.q[0]), triple_text(s.q[1]), triple_text(s.q[2])};
        j["a_rows"] = {s.a_rows[0].to_string(), s.a_rows[1].to_string(), s.a_rows[2].to_string()};
    } else {
        j["p"] = nullptr;
    }
    j["extensions"] = nlohmann::json::array();
    for (const auto& e : p.extensions)
        j["extensions"].push_back({{"X", e.x.to_string()}, {"c", std::string(1, e.c.to_char())}, {"binary", e.binary}});
    j["neighbours"] = nlohmann::json::array();
    for (const auto& x : p.neighbours) j["neighbours"].push_back(x.to_string());
    return j;
}

Provenance provenance_from_json(const nlohmann::json& j) {
    Provenance p;
    Ring ring = Ring::F2;
    if (j.contains("p") && !j.at("p").is_null()) {
        nlohmann::json spec{{"p", j.at("p")}, {"ring", j.at("ring")}, {"q", j.at("q_triples")}, {"a", j.at("a_rows")}};
        p.construction = construction_spec_from_json(spec);
        ring = p.construction->ring;
    }
    if (j.contains("extensions"))
        for (const auto& e : j.at("extensions")) {
            const bool binary = e.value("binary", false);
            ring = step_ring(ring, binary);
            p.extensions.push_back({RingVector::parse(ring, e.at("X").get<std::string>()),
                                    parse_unit(ring, e.at("c").get<std::string>()), binary});
        }
    if (j.contains("neighbours"))
        for (const auto& x : j.at("neighbours")) p.neighbours.push_back(BitVec::from_string(x.get<std::string>()));
    return p;
}

// ---------------------------------------------------------------- config

SearchConfig search_config_from_json(const nlohmann::json& j) {
    SearchConfig c;
    c.p = j.value("p", c.p);
    if (j.contains("ring")) c.ring = parse_ring(j.at("ring").get<std::string>());
    c.target_length = j.value("target_length", c.target_length);
    c.w_max = j.value("w_max", c.w_max);
    c.seed = j.value("seed", c.seed);
    c.max_trials = j.value("max_trials", c.max_trials);
    if (j.contains("phase")) c.phase = parse_phase(j.at("phase").get<std::string>());
    if (j.contains("seed_specs"))
        for (const auto& s : j.at("seed_specs")) c.seed_specs.push_back(construction_spec_from_json(s));
    if (j.contains("base")) c.base = provenance_from_json(j.at("base"));
    c.binary_extension = j.value("binary_extension", c.binary_extension);
    c.chain_length = j.value("chain_length", c.chain_length);
    if (j.contains("neighbour_offset") && !j.at("neighbour_offset").is_null())
        c.neighbour_offset = j.at("neighbour_offset").get<std::size_t>();
    c.known_parameters = j.value("known_parameters", c.known_parameters);
    c.threads = j.value("threads", c.threads);
    return c;
}

nlohmann::json search_config_json(const SearchConfig& c) {
    nlohmann::json specs = nlohmann::json::array();
    for (const auto& s : c.seed_specs) specs.push_back(construction_spec_json(s));
    return {{"p", c.p},
            {"ring", std::string(ring_name(c.ring))},
            {"target_length", c.target_length},
            {"w_max", c.w_max},
            {"seed", c.seed},
            {"max_trials", c.max_trials},
            {"phase", phase_name(c.phase)},
            {"seed_specs", specs},
            {"base", provenance_json(c.base)},
            {"binary_extension", c.binary_extension},
            {"chain_length", c.chain_length},
            {"neighbour_offset", c.neighbour_offset ? nlohmann::json(*c.neighbour_offset) : nlohmann::json(nullptr)},
            {"known_parameters", c.known_parameters},
            {"threads", c.threads}};
}

void validate(const SearchConfig& c) {
    if (c.w_max < 1) throw std::invalid_argument("w_max must be positive");
    if (c.phase == Phase::Construct) {
        if (!is_odd_prime(c.p)) throw std::invalid_argument("p must be an odd prime");
        for (const auto& s : c.seed_specs)
            if (s.p != c.p || s.ring != c.ring) throw std::invalid_argument("seed spec differs from p / ring of the search");
        const std::size_t len = static_cast<std::size_t>(6 * c.p) * (c.ring == Ring::F2U ? 2 : 1);
        if (c.target_length && c.target_length != len)
            throw std::invalid_argument("constructions with p = " + std::to_string(c.p) + " have binary length " +
                                        std::to_string(len));
        return;
    }
    if (!c.base.construction) throw std::invalid_argument("extend and neighbour phases need a base provenance");
    if (c.phase == Phase::NeighbourChain && c.chain_length == 0) throw std::invalid_argument("chain_length must be positive");
}

// ---------------------------------------------------------------- randomness

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
    const auto t = static_cast<std::uint64_t>(trial);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
    return std::mt19937_64(seq);
}

namespace {

// Raw bits from the generator; no distributions, so streams are identical everywhere.
class Bits {
public:
    explicit Bits(std::mt19937_64& rng) : rng_(rng) {}
    bool bit() {
        if (left_ == 0) {
            buf_ = rng_();
            left_ = 64;
        }
        const bool b = buf_ & 1u;
        buf_ >>= 1;
        --left_;
        return b;
    }
    Element element(Ring r) {
        const bool a = bit();
        return {r, a, r == Ring::F2U && bit()};
    }

private:
    std::mt19937_64& rng_;
    std::uint64_t buf_ = 0;
    int left_ = 0;
};

RingVector random_vector(Bits& bits, Ring r, std::size_t n) {
    RingVector v(r, n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, bits.element(r));
    return v;
}

constexpr int max_resamples = 256;

ExtensionStep random_extension(Bits& bits, Ring r, std::size_t n, bool binary) {
    for (int attempt = 0; attempt < max_resamples; ++attempt) {
        RingVector x = random_vector(bits, r, n);
        if (dot(x, x) != Element::one(r)) continue;
        const Element c = r == Ring::F2U && bits.bit() ? Element::one_plus_u() : Element::one(r);
        return {std::move(x), c, binary};
    }
    throw std::runtime_error("could not sample an extension vector");
}

std::optional<BitVec> random_neighbour_vector(Bits& bits, const Code& code, std::size_t offset) {
    const std::size_t n = code.length();
    for (int attempt = 0; attempt < max_resamples; ++attempt) {
        BitVec x(n);
        for (std::size_t i = offset; i < n; ++i) x.set(i, bits.bit());
        if (x.weight() % 2 == 0 && !code.contains(x)) return x;
    }
    return std::nullopt;
}

}  // namespace

ConstructionSpec random_spec(int p, Ring ring, std::mt19937_64& rng) {
    Bits bits(rng);
    std::array<QRSpec, 3> q{QRSpec::zero(ring, p), QRSpec::zero(ring, p), QRSpec::zero(ring, p)};
    for (auto& t : q) {
        const Element a = bits.element(ring), b = bits.element(ring), c = bits.element(ring);
        t = QRSpec(p, a, b, c);
    }
    std::array<RingVector, 3> a;
    for (auto& row : a) row = random_vector(bits, ring, static_cast<std::size_t>(p));
    return {p, ring, q, a};
}

// ---------------------------------------------------------------- search

namespace {

struct TrialContext {
    const SearchConfig& cfg;
    const KnownParameters* known;
    std::optional<Code> base;  // extend: the code to extend; chains: binary start
};

std::optional<Discovery> evaluate(const TrialContext& ctx, std::size_t trial, const Provenance& prov, const Code& code) {
    Analysis a = analyze(code, ctx.cfg.w_max, 1);
    if (!a.weights.d) return std::nullopt;
    if (ctx.cfg.target_length && a.binary_length != ctx.cfg.target_length) return std::nullopt;
    Discovery d;
    d.seed = ctx.cfg.seed;
    d.trial = trial;
    d.provenance = prov;
    for (const auto& g : code.generators()) d.generator.push_back(g.to_string());
    d.analysis = std::move(a);
    if (const auto* f = d.family(); f && ctx.known) d.is_new = ctx.known->is_new(f->family, f->beta, f->gamma);
    return d;
}

std::vector<Discovery> run_trial(const TrialContext& ctx, std::size_t trial) {
    const auto& cfg = ctx.cfg;
    auto rng = trial_rng(cfg.seed, trial);
    std::vector<Discovery> out;
    switch (cfg.phase) {
        case Phase::Construct: {
            ConstructionSpec spec = trial < cfg.seed_specs.size() ? cfg.seed_specs[trial] : random_spec(cfg.p, cfg.ring, rng);
            if (!is_self_dual_construction(spec)) break;
            Provenance prov;
            prov.construction = spec;
            if (auto d = evaluate(ctx, trial, prov, build(spec))) out.push_back(std::move(*d));
            break;
        }
        case Phase::Extend: {
            Bits bits(rng);
            const Code& base = *ctx.base;
            Provenance prov = cfg.base;
            prov.extensions.push_back(random_extension(bits, base.ring(), base.length(), cfg.binary_extension));
            const Code code = extend(base, {prov.extensions.back().x, prov.extensions.back().c});
            if (auto d = evaluate(ctx, trial, prov, code)) out.push_back(std::move(*d));
            break;
        }
        case Phase::NeighbourChain: {
            Bits bits(rng);
            Provenance prov = cfg.base;
            Code current = *ctx.base;
            const std::size_t offset = cfg.neighbour_offset.value_or(current.length() / 2);
            for (std::size_t step = 0; step < cfg.chain_length; ++step) {
                auto x = random_neighbour_vector(bits, current, offset);
                if (!x) break;
                auto next = neighbour(current, *x);
                prov.neighbours.push_back(std::move(*x));
                current = std::move(next.code);
                if (auto d = evaluate(ctx, trial, prov, current)) out.push_back(std::move(*d));
            }
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<Discovery> run_search(const SearchConfig& cfg) {
    validate(cfg);
    std::optional<KnownParameters> known;
    if (!cfg.known_parameters.empty()) known = KnownParameters::load(cfg.known_parameters);
    TrialContext ctx{cfg, known ? &*known : nullptr, std::nullopt};
    if (cfg.phase == Phase::Extend) {
        Code base = replay(cfg.base);
        ctx.base = cfg.binary_extension ? binary_image(base) : base;
    } else if (cfg.phase == Phase::NeighbourChain) {
        ctx.base = binary_image(replay(cfg.base));
    }

    const auto trials = static_cast<std::ptrdiff_t>(cfg.max_trials);
    std::vector<std::vector<Discovery>> per_trial(cfg.max_trials);
    std::vector<std::string> errors(cfg.max_trials);
#pragma omp parallel for schedule(dynamic) num_threads(cfg.threads > 0 ? cfg.threads : omp_get_max_threads())
    for (std::ptrdiff_t t = 0; t < trials; ++t) {
        const auto i = static_cast<std::size_t>(t);
        try {
            per_trial[i] = run_trial(ctx, i);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty()) throw std::runtime_error("trial " + std::to_string(i) + ": " + errors[i]);

    using Key = std::tuple<std::size_t, int, std::string, int, int>;
    std::map<Key, std::size_t> seen;
    std::vector<Discovery> out;
    for (auto& batch : per_trial)
        for (auto& d : batch) {
            const auto* f = d.family();
            const Key key{d.analysis.binary_length, d.analysis.weights.d.value_or(-1), f ? f->family : "",
                          f && f->beta ? *f->beta : -1, f && f->gamma ? *f->gamma : -1};
            d.invariant_duplicate = seen.count(key) > 0;
            seen.emplace(key, out.size());
            out.push_back(std::move(d));
        }
    return out;
}

// ---------------------------------------------------------------- records

namespace {

nlohmann::json opt_json(const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

const char* novelty_word(const std::optional<bool>& v) { return !v ? "unknown" : *v ? "yes" : "no"; }

std::optional<bool> parse_novelty(const std::string& s) {
    if (s == "unknown") return std::nullopt;
    if (s == "yes") return true;
    if (s == "no") return false;
    throw std::invalid_argument("bad novelty flag '" + s + "'");
}

}  // namespace

nlohmann::json discovery_json(const Discovery& d) {
    const auto* f = d.family();
    nlohmann::json j;
    j["schema"] = discovery_schema_version;
    j["n"] = d.analysis.binary_length;
    j["ring"] = std::string(ring_name(d.analysis.ring));
    j["d"] = opt_json(d.analysis.weights.d);
    j["family"] = f ? nlohmann::json(f->family) : nlohmann::json(nullptr);
    j["beta"] = f ? opt_json(f->beta) : nlohmann::json(nullptr);
    j["gamma"] = f ? opt_json(f->gamma) : nlohmann::json(nullptr);
    j["new"] = d.is_new ? nlohmann::json(*d.is_new) : nlohmann::json(nullptr);
    j["invariant_duplicate"] = d.invariant_duplicate;
    j["analysis"] = analysis_json(d.analysis);
    j["generator"] = d.generator;
    j["provenance"] = provenance_json(d.provenance);
    j["seed"] = d.seed;
    j["trial"] = d.trial;
    return j;
}

Discovery discovery_from_json(const nlohmann::json& j) {
    if (j.at("schema").get<int>() != discovery_schema_version)
        throw std::invalid_argument("unsupported discovery schema " + j.at("schema").dump());
    Discovery d;
    d.analysis = analysis_from_json(j.at("analysis"));
    d.generator = j.at("generator").get<std::vector<std::string>>();
    d.provenance = provenance_from_json(j.at("provenance"));
    d.seed = j.at("seed").get<std::uint64_t>();
    d.trial = j.at("trial").get<std::size_t>();
    if (!j.at("new").is_null()) d.is_new = j.at("new").get<bool>();
    d.invariant_duplicate = j.at("invariant_duplicate").get<bool>();
    return d;
}

std::string discovery_text(const Discovery& d) {
    std::ostringstream os;
    os << "discovery trial=" << d.trial << " seed=" << d.seed << " new=" << novelty_word(d.is_new)
       << " duplicate=" << (d.invariant_duplicate ? "yes" : "no") << '\n';
    if (const auto& s = d.provenance.construction) {
        os << "construction p=" << s->p << " ring=" << ring_name(s->ring) << " q=" << triple_text(s->q[0]) << ','
           << triple_text(s->q[1]) << ',' << triple_text(s->q[2]) << " a=" << s->a_rows[0].to_string() << ','
           << s->a_rows[1].to_string() << ',' << s->a_rows[2].to_string() << '\n';
    }
    for (const auto& e : d.provenance.extensions)
        os << "extension binary=" << (e.binary ? 1 : 0) << " c=" << e.c.to_char() << " X=" << e.x.to_string() << '\n';
    for (const auto& x : d.provenance.neighbours) os << "neighbour x=" << x.to_string() << '\n';
    for (const auto& g : d.generator) os << "generator " << g << '\n';
    os << analysis_text(d.analysis) << "end\n";
    return os.str();
}

std::vector<Discovery> parse_discoveries_text(const std::string& text) {
    std::vector<Discovery> out;
    std::istringstream is(text);
    std::string line, analysis;
    std::size_t line_no = 0;
    std::optional<Discovery> cur;
    Ring ring = Ring::F2;
    try {
        while (std::getline(is, line)) {
            ++line_no;
            if (line.empty()) continue;
            const auto sp = line.find(' ');
            const std::string head = line.substr(0, sp);
            const std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
            if (head == "discovery") {
                if (cur) throw std::invalid_argument("discovery block not closed");
                cur.emplace();
                auto f = parse_fields(rest, line_no);
                cur->trial = static_cast<std::size_t>(std::stoull(f.at("trial")));
                cur->seed = std::stoull(f.at("seed"));
                cur->is_new = parse_novelty(f.at("new"));
                cur->invariant_duplicate = f.at("duplicate") == "yes";
                ring = Ring::F2;
                analysis.clear();
                continue;
            }
            if (!cur) throw std::invalid_argument("expected a discovery line");
            if (head == "construction") {
                auto f = parse_fields(rest, line_no);
                cur->provenance.construction = parse_construction_spec("p=" + f.at("p") + "\nring=" + f.at("ring") +
                                                                       "\nq=" + f.at("q") + "\na=" + f.at("a") + "\n");
                ring = cur->provenance.construction->ring;
            } else if (head == "extension") {
                auto f = parse_fields(rest, line_no);
                const bool binary = f.at("binary") == "1";
                ring = step_ring(ring, binary);
                cur->provenance.extensions.push_back({RingVector::parse(ring, f.at("X")), parse_unit(ring, f.at("c")), binary});
            } else if (head == "neighbour") {
                cur->provenance.neighbours.push_back(BitVec::from_string(parse_fields(rest, line_no).at("x")));
            } else if (head == "generator") {
                cur->generator.push_back(rest);
            } else if (head == "end") {
                cur->analysis = parse_analysis_text(analysis);
                out.push_back(std::move(*cur));
                cur.reset();
            } else {
                analysis += line + '\n';
            }
        }
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception& e) {
        throw parse_error(line_no, e.what());
    }
    if (cur) throw parse_error(line_no, "discovery block not closed");
    return out;
}

Discovery parse_discovery_text(const std::string& text) {
    auto all = parse_discoveries_text(text);
    if (all.empty()) throw parse_error(0, "no discovery in text");
    return std::move(all.front());
}

}  // namespace sdc
