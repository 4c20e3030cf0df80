#include "regal/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace regal {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ConfigError(origin + ": " + what);
}

int line_of_offset(const std::string& text, size_t byte) {
  int line = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

Cplx parse_cplx(const json& v, const std::string& origin, const std::string& field) {
  if (v.is_number()) return Cplx(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Cplx(v[0].get<double>(), v[1].get<double>());
  fail(origin, "field \"" + field + "\" must be a number or [re, im]");
}

Poly1 parse_poly(const json& v, const std::string& origin, const std::string& field) {
  if (!v.is_array() || v.empty())
    fail(origin, "field \"" + field + "\" must be a nonempty coefficient array (ascending)");
  std::vector<Cplx> coeffs;
  for (size_t i = 0; i < v.size(); ++i)
    coeffs.push_back(parse_cplx(v[i], origin, field + "[" + std::to_string(i) + "]"));
  try {
    return Poly1(std::move(coeffs));
  } catch (const std::exception& e) {
    fail(origin, "field \"" + field + "\": " + e.what());
  }
}

const json& require(const json& obj, const std::string& key, const std::string& origin) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(origin, "missing required field \"" + key + "\"");
  return *it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& origin, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) fail(origin, "unknown field \"" + it.key() + "\" in " + where);
  }
}

MapSpec parse_henon(const json& j, const std::string& origin) {
  reject_unknown(j, {"family", "stages"}, origin, "henon config");
  const json& stages = require(j, "stages", origin);
  if (!stages.is_array() || stages.empty())
    fail(origin, "field \"stages\" must be a nonempty array");
  std::vector<HenonStage> out;
  for (size_t i = 0; i < stages.size(); ++i) {
    const std::string where = "stages[" + std::to_string(i) + "]";
    if (!stages[i].is_object()) fail(origin, where + " must be an object");
    reject_unknown(stages[i], {"p", "a"}, origin, where);
    HenonStage st{parse_poly(require(stages[i], "p", origin), origin, where + ".p"),
                  parse_cplx(require(stages[i], "a", origin), origin, where + ".a")};
    out.push_back(std::move(st));
  }
  try {
    return MapSpec::build_henon_composition(std::move(out));
  } catch (const std::exception& e) {
    fail(origin, std::string("invalid henon config: ") + e.what());
  }
}

MapSpec parse_fw(const json& j, int form, const std::string& origin) {
  reject_unknown(j, {"family", "P", "Q", "a", "b"}, origin, "fornaess-wu config");
  const json& P = require(j, "P", origin);
  if (!P.is_array() || P.size() != 3) fail(origin, "field \"P\" must be a 3x3 array");
  std::vector<std::vector<Cplx>> table(3, std::vector<Cplx>(3));
  for (size_t i = 0; i < 3; ++i) {
    if (!P[i].is_array() || P[i].size() != 3) fail(origin, "field \"P\" must be a 3x3 array");
    for (size_t k = 0; k < 3; ++k)
      table[i][k] = parse_cplx(P[i][k], origin,
                               "P[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  const Poly1 Q = parse_poly(require(j, "Q", origin), origin, "Q");
  const Cplx a = parse_cplx(require(j, "a", origin), origin, "a");
  Cplx b(0.0, 0.0);
  if (form == 2)
    b = parse_cplx(require(j, "b", origin), origin, "b");
  else if (j.contains("b"))
    fail(origin, "field \"b\" is only valid for fw_h2");
  try {
    return MapSpec::build_fornaess_wu(form, table, Q, a, b);
  } catch (const std::exception& e) {
    fail(origin, std::string("invalid fornaess-wu config: ") + e.what());
  }
}

MapSpec parse_shift(const json& j, const std::string& origin) {
  reject_unknown(j, {"family", "n", "p", "a"}, origin, "shift-like config");
  const json& nj = require(j, "n", origin);
  if (!nj.is_number_integer()) fail(origin, "field \"n\" must be an integer");
  const int n = nj.get<int>();
  const Poly1 p = parse_poly(require(j, "p", origin), origin, "p");
  const Cplx a = parse_cplx(require(j, "a", origin), origin, "a");
  try {
    return MapSpec::build_shift_like(n, p, a);
  } catch (const std::exception& e) {
    fail(origin, std::string("invalid shift-like config: ") + e.what());
  }
}

}  // namespace

MapSpec parse_map_config(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, "JSON parse error at line " + std::to_string(line_of_offset(text, e.byte)) +
                     ": " + e.what());
  }
  if (!j.is_object()) fail(origin, "top level must be an object");
  const json& fam = require(j, "family", origin);
  if (!fam.is_string()) fail(origin, "field \"family\" must be a string");
  const std::string f = fam.get<std::string>();
  if (f == "henon") return parse_henon(j, origin);
  if (f == "fw_h1") return parse_fw(j, 1, origin);
  if (f == "fw_h2") return parse_fw(j, 2, origin);
  if (f == "shift_like") return parse_shift(j, origin);
  fail(origin, "unknown family \"" + f + "\" (expected henon, fw_h1, fw_h2, shift_like)");
}

MapSpec load_map_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_map_config(ss.str(), path.string());
}

}  // namespace regal
