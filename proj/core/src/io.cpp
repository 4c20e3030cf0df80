#include "regal/io.hpp"

#include <complex>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace regal {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_cplx(const std::complex<double>& z) {
  return fmt_double(z.real()) + (z.imag() < 0 ? "" : "+") + fmt_double(z.imag()) + "j";
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);  // binary: no newline translation
  if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());
  for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size())
      throw std::invalid_argument("write_csv: row width mismatch in " + path.string());
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: write failed for " + path.string());
}

void write_pgm(const std::filesystem::path& path, int width, int height,
               const std::vector<uint8_t>& pixels) {
  if (width < 1 || height < 1 ||
      pixels.size() != static_cast<size_t>(width) * static_cast<size_t>(height))
    throw std::invalid_argument("write_pgm: pixel buffer does not match dimensions");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_pgm: cannot open " + path.string());
  out << "P5\n" << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
  if (!out) throw std::runtime_error("write_pgm: write failed for " + path.string());
}

uint64_t fnv1a64(const void* data, size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = 14695981039346656037ull;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t fnv1a64_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("fnv1a64_file: cannot open " + path.string());
  uint64_t h = 14695981039346656037ull;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
    if (got < static_cast<std::streamsize>(sizeof buf)) break;
  }
  return h;
}

std::string hex64(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void Manifest::add_artifact(const std::filesystem::path& dir, const std::string& name) {
  ManifestEntry e;
  e.name = name;
  const std::filesystem::path file = dir / name;
  e.hash = hex64(fnv1a64_file(file));
  e.bytes = static_cast<uint64_t>(std::filesystem::file_size(file));
  artifacts.push_back(std::move(e));
}

void Manifest::write(const std::filesystem::path& path) const {
  nlohmann::json j;
  j["tool"] = tool;
  j["version"] = version;
  j["subcommand"] = subcommand;
  j["config_hash"] = config_hash;
  j["seed"] = seed;
  j["workers"] = workers;
  j["artifacts"] = nlohmann::json::array();
  for (const ManifestEntry& e : artifacts)
    j["artifacts"].push_back({{"name", e.name}, {"hash", e.hash}, {"bytes", e.bytes}});
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("manifest: cannot open " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace regal
