#pragma once

// Text and JSON formats.
//
// Code file:
//     ring=<F2|F2U> n=<len> k=<rows>
//     <row over {0,1} or {0,1,u,3}>      (k lines)
//
// Construction spec (text):            or JSON:
//     p=5                                  {"p":5,"ring":"F2U",
//     ring=F2U                              "q":["uuu","uu1","1u0"],
//     q=uuu,uu1,1u0                         "a":["uuuu0","u00u1","u33u0"]}
//     a=uuuu0,u00u1,u33u0
//
// Extension spec:  c=<unit>  X=<vector>  [offset=<i>]   (one per line or space separated)
// Vector lists:    one vector per line; a line "offset=<i>" places later vectors at
//                  coordinate i of a zero vector of the code length.
//
// Blank lines and lines starting with '#' are ignored everywhere.

#include "sdc/code.hpp"
#include "sdc/construction.hpp"
#include "sdc/transforms.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace sdc {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// key=value tokens separated by whitespace. Tokens without '=' are stored under "".
std::map<std::string, std::string> parse_fields(const std::string& line, std::size_t line_no = 0);

Code read_code(std::istream& in);
void write_code(std::ostream& out, const Code& code);
Code load_code(const std::string& path);
void save_code(const std::string& path, const Code& code);

ConstructionSpec parse_construction_spec(const std::string& text);
std::string construction_spec_text(const ConstructionSpec& spec);
nlohmann::json construction_spec_json(const ConstructionSpec& spec);
ConstructionSpec construction_spec_from_json(const nlohmann::json& j);

// The vector is placed at `offset` inside a zero vector of length n (n = code length).
ExtensionSpec read_extension_spec(std::istream& in, Ring ring, std::size_t n);
std::vector<BitVec> read_vector_list(std::istream& in, std::size_t n);

std::string read_file(const std::string& path);

}  // namespace sdc
