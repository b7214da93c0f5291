#pragma once

// Seeded random search over construction specs, extension vectors and
// neighbour chains. Trial t draws from its own generator seeded by (seed, t),
// so results do not depend on the thread count or on scheduling.

#include "sdc/construction.hpp"
#include "sdc/novelty.hpp"
#include "sdc/report.hpp"
#include "sdc/transforms.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

namespace sdc {

inline constexpr int discovery_schema_version = 1;

struct ExtensionStep {
    RingVector x;
    Element c;
    bool binary = false;  // applied to the binary image of the previous code

    bool operator==(const ExtensionStep&) const = default;
};

// Everything needed to rebuild a code: the construction, then the extensions
// in order, then neighbours of the binary image in order.
struct Provenance {
    std::optional<ConstructionSpec> construction;
    std::vector<ExtensionStep> extensions;
    std::vector<BitVec> neighbours;

    bool operator==(const Provenance&) const = default;
};

Code replay(const Provenance& p);

nlohmann::json provenance_json(const Provenance& p);
Provenance provenance_from_json(const nlohmann::json& j);

enum class Phase { Construct, Extend, NeighbourChain };

struct SearchConfig {
    int p = 5;
    Ring ring = Ring::F2U;
    std::size_t target_length = 0;  // binary length of emitted codes; 0 accepts any
    int w_max = 14;
    std::uint64_t seed = 0;
    std::size_t max_trials = 0;
    Phase phase = Phase::Construct;
    std::vector<ConstructionSpec> seed_specs;  // construct: tried as the first trials
    Provenance base;                           // extend / neighbour-chain: starting code
    bool binary_extension = false;             // extend the binary image instead of the ring code
    std::size_t chain_length = 1;
    std::optional<std::size_t> neighbour_offset;  // neighbour support starts here (default n/2)
    std::string known_parameters;                 // path to the known-parameter lists, optional
    int threads = 0;
};

SearchConfig search_config_from_json(const nlohmann::json& j);
nlohmann::json search_config_json(const SearchConfig& c);
// Throws std::invalid_argument describing the first problem.
void validate(const SearchConfig& c);

struct Discovery {
    std::uint64_t seed = 0;
    std::size_t trial = 0;
    Provenance provenance;
    std::vector<std::string> generator;  // rows of the final code over its ring
    Analysis analysis;
    std::optional<bool> is_new;
    bool invariant_duplicate = false;

    const EnumeratorMatch* family() const {
        return analysis.weights.families.empty() ? nullptr : &analysis.weights.families.front();
    }
    bool operator==(const Discovery&) const = default;
};

// Generator for trial `trial` of a search seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial);

// Uniform random construction spec over the config's p and ring.
ConstructionSpec random_spec(int p, Ring ring, std::mt19937_64& rng);

std::vector<Discovery> run_search(const SearchConfig& cfg);

// Both renderings carry the same fields and parse back to an equal Discovery.
nlohmann::json discovery_json(const Discovery& d);
Discovery discovery_from_json(const nlohmann::json& j);
std::string discovery_text(const Discovery& d);
// Reads the first discovery block of `text`.
Discovery parse_discovery_text(const std::string& text);
// Splits a concatenation of discovery_text blocks.
std::vector<Discovery> parse_discoveries_text(const std::string& text);

}  // namespace sdc
