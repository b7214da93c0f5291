#pragma once

// Analysis of a self-dual code and its text / JSON renderings. Both renderings
// carry the same information and parse back to an equal Analysis.

#include "sdc/code.hpp"
#include "sdc/weights.hpp"

#include <string>

#include <json.hpp>

namespace sdc {

struct Analysis {
    Ring ring = Ring::F2;
    std::size_t length = 0;         // length over the code's ring
    std::size_t binary_length = 0;  // length of the binary (Gray) image
    CodeType type = CodeType::I;
    WeightReport weights;           // of the binary image

    bool operator==(const Analysis&) const = default;
};

class not_self_dual : public std::invalid_argument {
public:
    explicit not_self_dual(const std::string& why) : std::invalid_argument("not self-dual: " + why) {}
};

// Binary image of an F2+uF2 code, the code itself when binary.
Code binary_image(const Code& code);

// Throws not_self_dual for codes that are not self-dual.
Analysis analyze(const Code& code, int w_max, int threads = 0);

nlohmann::json weight_report_json(const WeightReport& r);
WeightReport weight_report_from_json(const nlohmann::json& j);

nlohmann::json analysis_json(const Analysis& a);
Analysis analysis_from_json(const nlohmann::json& j);
std::string analysis_text(const Analysis& a);
Analysis parse_analysis_text(const std::string& text);

}  // namespace sdc
