#pragma once
// Artifact serialization: CSV tables with shortest-roundtrip doubles, binary
// 8-bit graymaps, FNV-1a content hashes, and run manifests.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace regal {

// %.17g: round-trips every double bit-exactly, keeping artifacts
// byte-comparable across runs.
std::string fmt_double(double x);
std::string fmt_cplx(const std::complex<double>& z);  // "re+imj" style pair column helper

// Writes header + rows; every field is emitted verbatim (caller formats).
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Binary 8-bit portable graymap, row-major, top-left origin.
void write_pgm(const std::filesystem::path& path, int width, int height,
               const std::vector<uint8_t>& pixels);

uint64_t fnv1a64(const void* data, size_t len);
uint64_t fnv1a64_file(const std::filesystem::path& path);
std::string hex64(uint64_t h);

struct ManifestEntry {
  std::string name;  // file name relative to the manifest
  std::string hash;  // fnv1a-64 hex
  uint64_t bytes = 0;
};

struct Manifest {
  std::string tool;
  std::string version;
  std::string subcommand;
  std::string config_hash;  // fnv1a-64 hex of the raw config bytes ("-" if none)
  uint64_t seed = 0;
  int workers = 1;
  std::vector<ManifestEntry> artifacts;

  // Adds the file's hash entry (file must exist).
  void add_artifact(const std::filesystem::path& dir, const std::string& name);
  void write(const std::filesystem::path& path) const;  // JSON
};

}  // namespace regal
