#pragma once
// Strict JSON map-configuration loader. Schema (complex numbers are a plain
// number or [re, im]):
//   {"family":"henon","stages":[{"p":[c0,c1,...],"a":A}, ...]}
//   {"family":"fw_h1","P":[[..3x3..]],"Q":[q0,q1,q2],"a":A}
//   {"family":"fw_h2","P":[[..3x3..]],"Q":[q0,q1,q2],"a":A,"b":B}
//   {"family":"shift_like","n":N,"p":[c0,c1,...],"a":A}
// Unknown keys, missing keys, and wrong types are errors; diagnostics name
// the offending field (and the line for parse errors).

#include <filesystem>
#include <stdexcept>
#include <string>

#include "regal/map.hpp"

namespace regal {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

MapSpec load_map_config(const std::filesystem::path& path);
MapSpec parse_map_config(const std::string& json_text, const std::string& origin = "<string>");

}  // namespace regal
