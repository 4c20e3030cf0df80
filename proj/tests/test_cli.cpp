// End-to-end checks of the installed command-line tool: exit codes,
// diagnostics, artifact determinism, and manifest completeness.
#include <doctest.h>

#ifdef REGAL_CLI_PATH

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include <sys/wait.h>

#include "regal/io.hpp"

namespace {

namespace fs = std::filesystem;

const std::string kCli = REGAL_CLI_PATH;

int run(const std::string& args) {
  const int status = std::system((kCli + " " + args).c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "regal-cli-tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const fs::path p = dir / "map.json";
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p;
}

const std::string kHorseshoe = R"({"family":"henon","stages":[{"p":[-6,0,1],"a":1}]})";

// Every artifact listed must exist with a matching hash, and every file in
// the directory (other than the manifest itself) must be listed.
void check_manifest_complete(const fs::path& dir) {
  const auto j = nlohmann::json::parse(slurp(dir / "manifest.json"));
  std::set<std::string> listed;
  for (const auto& a : j.at("artifacts")) {
    const std::string name = a.at("name");
    listed.insert(name);
    REQUIRE(fs::exists(dir / name));
    CHECK(a.at("hash") == regal::hex64(regal::fnv1a64_file(dir / name)));
    CHECK(a.at("bytes") == static_cast<uint64_t>(fs::file_size(dir / name)));
  }
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name == "manifest.json") continue;
    CHECK(listed.count(name) == 1);
  }
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("definitely-not-a-subcommand >/dev/null 2>&1") == 2);
  CHECK(run(">/dev/null 2>&1") == 2);  // a subcommand is required
  CHECK(run("--help >/dev/null 2>&1") == 0);
}

TEST_CASE("malformed configs exit with code 1 and a line diagnostic") {
  const fs::path dir = fresh_dir("badcfg");
  const fs::path cfg = write_config(dir, "{\n\"family\": \"henon\",\n!!!\n}");
  const fs::path err = dir / "stderr.txt";
  const int code = run("info --config '" + cfg.string() + "' --out '" + (dir / "out").string() +
                       "' >/dev/null 2>'" + err.string() + "'");
  CHECK(code == 1);
  const std::string text = slurp(err);
  CHECK(text.find("config error:") != std::string::npos);
  CHECK(text.find("line 3") != std::string::npos);

  const int code2 = run("info --config '" + (dir / "absent.json").string() + "' --out '" +
                        (dir / "out2").string() + "' >/dev/null 2>'" + err.string() + "'");
  CHECK(code2 == 1);
  CHECK(slurp(err).find("cannot open") != std::string::npos);
}

TEST_CASE("numerical-hypothesis failures surface as exit code 1") {
  const fs::path dir = fresh_dir("numfail");
  const fs::path cfg = write_config(dir, kHorseshoe);
  const fs::path err = dir / "stderr.txt";
  const int code = run("green --config '" + cfg.string() + "' --out '" + (dir / "out").string() +
                       "' --budget 0 >/dev/null 2>'" + err.string() + "'");
  CHECK(code == 1);
  CHECK(slurp(err).find("error:") != std::string::npos);
}

TEST_CASE("info writes its table and a complete manifest") {
  const fs::path dir = fresh_dir("info");
  const fs::path cfg = write_config(dir, kHorseshoe);
  const fs::path out = dir / "out";
  CHECK(run("info --config '" + cfg.string() + "' --out '" + out.string() + "' >/dev/null 2>&1") ==
        0);
  CHECK(fs::exists(out / "info.csv"));
  CHECK(fs::exists(out / "manifest.json"));
  check_manifest_complete(out);

  const auto j = nlohmann::json::parse(slurp(out / "manifest.json"));
  CHECK(j.at("subcommand") == "info");
  CHECK(j.at("config_hash") != "-");
}

TEST_CASE("repeat runs with one seed produce byte-identical artifacts") {
  const fs::path dir = fresh_dir("repeat");
  const fs::path cfg = write_config(dir, kHorseshoe);
  const fs::path out1 = dir / "a", out2 = dir / "b";
  const std::string tail = " --res 32 --budget 120 --seed 9 >/dev/null 2>&1";
  REQUIRE(run("classify-grid --config '" + cfg.string() + "' --out '" + out1.string() + "'" +
              tail) == 0);
  REQUIRE(run("classify-grid --config '" + cfg.string() + "' --out '" + out2.string() + "'" +
              tail) == 0);
  CHECK(slurp(out1 / "classify.csv") == slurp(out2 / "classify.csv"));
  CHECK(slurp(out1 / "classify.pgm") == slurp(out2 / "classify.pgm"));
  check_manifest_complete(out1);
}

#endif  // REGAL_CLI_PATH
