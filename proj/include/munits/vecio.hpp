#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "munits/cyclofield.hpp"
#include "munits/unitvec.hpp"

namespace munits {

// Raised for malformed vector files; carries a human-readable reason that
// names the offending entry where possible.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VectorFile {
    Level level;
    ExponentVector vec;
    std::vector<std::string> warnings;
};

// Schema: {"level": {"p": int, "f": int},
//          "entries": [{"r": int, "s": int, "m": int}, ...]}
VectorFile parse_vector_json(const nlohmann::json& j);
VectorFile load_vector_file(const std::string& path);

nlohmann::json level_to_json(const Level& level);
nlohmann::json vector_to_json(const ExponentVector& v);

// Coefficients as explicit "num/den" strings, constant term first.
std::vector<std::string> cyc_to_strings(const CycNumber& x);

}  // namespace munits
