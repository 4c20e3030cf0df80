// Serialization and configuration loading: double formatting, CSV/PGM bytes,
// content hashing, manifests, and the strict JSON config parser.
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "regal/config.hpp"
#include "regal/io.hpp"
#include "regal/rng.hpp"

namespace {

namespace fs = std::filesystem;

fs::path tmp_dir() {
  const fs::path dir = fs::temp_directory_path() / "regal-io-tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void dump(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

// Straight-line FNV-1a 64 reference, kept independent of the library code.
uint64_t fnv_reference(const std::string& s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

TEST_CASE("fmt_double round-trips doubles bitwise") {
  std::vector<double> values{0.0,          1.0,    -1.0,   0.1,      1.0 / 3.0, 6.02e23,
                             -2.5e-308,    5e-324, 1e308,  123456.75, 0.3,       -0.0};
  regal::CounterRng rng(7, 99);
  for (uint64_t i = 0; i < 1000; ++i)
    values.push_back((rng.uniform01(2 * i) - 0.5) *
                     std::pow(10.0, 300.0 * (rng.uniform01(2 * i + 1) - 0.5)));
  for (double x : values) {
    const std::string s = regal::fmt_double(x);
    const double back = std::strtod(s.c_str(), nullptr);
    CHECK(std::memcmp(&back, &x, sizeof x) == 0);
  }
}

TEST_CASE("fmt_cplx spells the re/im pair compactly") {
  CHECK(regal::fmt_cplx({1.5, -2.25}) == "1.5-2.25j");
  CHECK(regal::fmt_cplx({0.5, 0.25}) == "0.5+0.25j");
  CHECK(regal::fmt_cplx({-3.0, 0.0}) == "-3+0j");
}

TEST_CASE("write_csv emits exactly the requested bytes") {
  const fs::path p = tmp_dir() / "t.csv";
  regal::write_csv(p, {"a", "b"}, {{"1", "2"}, {"3.5", "x"}});
  CHECK(slurp(p) == "a,b\n1,2\n3.5,x\n");

  regal::write_csv(p, {"only"}, {});
  CHECK(slurp(p) == "only\n");

  CHECK_THROWS_AS(regal::write_csv(p, {"a", "b"}, {{"lonely"}}), std::invalid_argument);
}

TEST_CASE("write_pgm emits the P5 header and raw pixels") {
  const fs::path p = tmp_dir() / "t.pgm";
  const std::vector<uint8_t> pix{0, 1, 2, 3, 4, 255};
  regal::write_pgm(p, 2, 3, pix);
  const std::string got = slurp(p);
  const std::string header = "P5\n2 3\n255\n";
  REQUIRE(got.size() == header.size() + pix.size());
  CHECK(got.substr(0, header.size()) == header);
  for (size_t i = 0; i < pix.size(); ++i)
    CHECK(static_cast<uint8_t>(got[header.size() + i]) == pix[i]);

  CHECK_THROWS_AS(regal::write_pgm(p, 2, 2, pix), std::invalid_argument);
  CHECK_THROWS_AS(regal::write_pgm(p, 0, 6, pix), std::invalid_argument);
}

TEST_CASE("fnv1a64 matches the reference and the published vectors") {
  CHECK(regal::fnv1a64("", 0) == 14695981039346656037ull);           // offset basis
  CHECK(regal::fnv1a64("a", 1) == 0xaf63dc4c8601ec8cull);
  CHECK(regal::fnv1a64("foobar", 6) == 0x85944171f73967e8ull);
  for (const std::string s : {std::string("regal"), std::string(1000, 'q')})
    CHECK(regal::fnv1a64(s.data(), s.size()) == fnv_reference(s));

  CHECK(regal::hex64(0) == "0000000000000000");
  CHECK(regal::hex64(0xcbf29ce484222325ull) == "cbf29ce484222325");
}

TEST_CASE("file hashing agrees with buffer hashing across chunk boundaries") {
  regal::CounterRng rng(3, 11);
  std::string blob;
  blob.reserve(200000);
  for (uint64_t i = 0; i < 200000; ++i) blob.push_back(static_cast<char>(rng.bits(i) & 0xff));
  const fs::path p = tmp_dir() / "blob.bin";
  dump(p, blob);
  CHECK(regal::fnv1a64_file(p) == regal::fnv1a64(blob.data(), blob.size()));

  const fs::path exact = tmp_dir() / "exact64k.bin";
  dump(exact, blob.substr(0, 1 << 16));
  CHECK(regal::fnv1a64_file(exact) == regal::fnv1a64(blob.data(), 1 << 16));

  CHECK_THROWS_AS(regal::fnv1a64_file(tmp_dir() / "nope.bin"), std::runtime_error);
}

TEST_CASE("manifest JSON round-trips and hashes its artifacts") {
  const fs::path dir = tmp_dir();
  dump(dir / "one.csv", "k,v\n1,2\n");
  dump(dir / "two.pgm", "P5\n1 1\n255\nz");

  regal::Manifest man;
  man.tool = "regal";
  man.version = "0.0-test";
  man.subcommand = "selftest";
  man.config_hash = "-";
  man.seed = 42;
  man.workers = 3;
  man.add_artifact(dir, "one.csv");
  man.add_artifact(dir, "two.pgm");
  man.write(dir / "manifest.json");

  const auto j = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(j.at("tool") == "regal");
  CHECK(j.at("subcommand") == "selftest");
  CHECK(j.at("seed") == 42);
  CHECK(j.at("workers") == 3);
  REQUIRE(j.at("artifacts").size() == 2);
  CHECK(j.at("artifacts")[0].at("name") == "one.csv");
  CHECK(j.at("artifacts")[0].at("hash") == regal::hex64(fnv_reference("k,v\n1,2\n")));
  CHECK(j.at("artifacts")[0].at("bytes") == 8);

  CHECK_THROWS_AS(man.add_artifact(dir, "missing.csv"), std::runtime_error);
}

TEST_CASE("config parser accepts every family") {
  const auto henon = regal::parse_map_config(
      R"({"family":"henon","stages":[{"p":[-6,0,1],"a":1},{"p":[0.5,0,1],"a":[0.5,0.25]}]})");
  CHECK(henon.family() == regal::Family::HenonComposition);
  CHECK(henon.n() == 2);
  CHECK(henon.degree() == 4);
  REQUIRE(henon.stages().size() == 2);
  CHECK(henon.stages()[1].a == regal::Cplx(0.5, 0.25));
  CHECK(henon.stages()[0].p.coeffs()[0] == regal::Cplx(-6.0, 0.0));

  const std::string ptab = R"([[0.1,-0.4,0.7],[0.2,0.3,0],[1,0,0]])";
  const auto h1 = regal::parse_map_config(
      R"({"family":"fw_h1","P":)" + ptab + R"(,"Q":[-0.8,0.2,1],"a":[1.1,-0.3]})");
  CHECK(h1.family() == regal::Family::FornaessWuH1);
  CHECK(h1.n() == 3);
  CHECK(h1.degree() == 2);
  CHECK(h1.inverse_degree() == 4);

  const auto h2 = regal::parse_map_config(
      R"({"family":"fw_h2","P":)" + ptab + R"(,"Q":[-0.8,0.2,1],"a":0.9,"b":0.7})");
  CHECK(h2.family() == regal::Family::FornaessWuH2);
  CHECK(h2.param_b() == regal::Cplx(0.7, 0.0));

  const auto shift = regal::parse_map_config(
      R"({"family":"shift_like","n":3,"p":[-0.9,0,1],"a":0.8})");
  CHECK(shift.family() == regal::Family::ShiftLike);
  CHECK(shift.n() == 3);
}

TEST_CASE("config diagnostics name the offending line or field") {
  auto message_of = [](const std::string& text) {
    try {
      regal::parse_map_config(text, "cfg.json");
    } catch (const regal::ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("<no error>");
  };

  const std::string parse_err = message_of("{\n  \"family\": \"henon\",\n  oops\n}");
  CHECK(parse_err.find("cfg.json") != std::string::npos);
  CHECK(parse_err.find("line 3") != std::string::npos);

  CHECK(message_of(R"({"family":"nope"})").find("unknown family") != std::string::npos);
  CHECK(message_of(R"({"family":"henon","stages":[{"p":[0,0,1],"a":1}],"zz":0})")
            .find("\"zz\"") != std::string::npos);
  CHECK(message_of(R"({"family":"henon"})").find("missing required field \"stages\"") !=
        std::string::npos);
  CHECK(message_of(R"({"family":"henon","stages":[{"p":[0,0,1],"a":"x"}]})")
            .find("stages[0].a") != std::string::npos);
  CHECK(message_of(R"({"family":"henon","stages":[{"p":[],"a":1}]})")
            .find("nonempty coefficient array") != std::string::npos);
  CHECK(message_of(R"({"family":"henon","stages":[{"p":[0,0,1],"a":0}]})")
            .find("invalid henon config") != std::string::npos);
  CHECK(message_of(R"({"family":"fw_h1","P":[[0]],"Q":[-0.8,0.2,1],"a":1})")
            .find("3x3") != std::string::npos);
  const std::string ptab = R"([[0.1,-0.4,0.7],[0.2,0.3,0],[1,0,0]])";
  CHECK(message_of(R"({"family":"fw_h1","P":)" + ptab +
                   R"(,"Q":[-0.8,0.2,1],"a":1,"b":2})")
            .find("only valid for fw_h2") != std::string::npos);
  CHECK(message_of(R"({"family":"shift_like","n":2.5,"p":[0,0,1],"a":1})")
            .find("\"n\" must be an integer") != std::string::npos);
  CHECK(message_of(R"([1,2,3])").find("top level") != std::string::npos);
}

TEST_CASE("config file loading reports the path and round-trips") {
  const fs::path p = tmp_dir() / "map.json";
  dump(p, R"({"family":"henon","stages":[{"p":[-6,0,1],"a":0.3}]})");
  const auto from_file = regal::load_map_config(p);
  const auto from_text = regal::parse_map_config(slurp(p));
  CHECK(from_file.describe() == from_text.describe());
  CHECK(from_file.det_df() == regal::Cplx(0.3, 0.0));

  try {
    regal::load_map_config(tmp_dir() / "absent.json");
    CHECK(false);
  } catch (const regal::ConfigError& e) {
    CHECK(std::string(e.what()).find("absent.json") != std::string::npos);
    CHECK(std::string(e.what()).find("cannot open") != std::string::npos);
  }
}
