#pragma once

// Persistent Green-polynomial cache: <dir>/green_n<N>.json holds every Q^lambda_rho
// with |lambda| <= N as an integer coefficient array. Each entry carries an
// FNV-1a checksum; entries that fail to parse or to match it are dropped and
// recomputed. Writes go to a temporary file that is renamed into place.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "dlcf/cli/json_io.hpp"
#include "dlcf/combinat/green.hpp"

namespace dlcf::cli {

inline constexpr const char* kCacheEnv = "DLCF_CACHE_DIR";
inline constexpr const char* kCacheFormat = "dlcf-green-cache";

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string green_entry_checksum(const Partition& lambda, const Partition& rho, const std::vector<std::int64_t>& coeffs) {
  std::string s = lambda.to_string() + "|" + rho.to_string() + "|";
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(coeffs[i]);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(s)));
  return buf;
}

inline std::filesystem::path green_cache_path(const std::filesystem::path& dir, int n_bound) {
  return dir / ("green_n" + std::to_string(n_bound) + ".json");
}

/// Flag value if given, else the environment variable, else nothing.
inline std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv(kCacheEnv); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

struct CacheLoad {
  bool file_found = false;
  std::size_t loaded = 0, rejected = 0;
};

inline CacheLoad load_green_cache(const std::filesystem::path& dir, int n_bound, GreenCache& cache) {
  CacheLoad r;
  std::ifstream in(green_cache_path(dir, n_bound));
  if (!in) return r;
  r.file_found = true;
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception&) {
    r.rejected = 1;
    return r;
  }
  if (!doc.is_object() || doc.value("format", "") != kCacheFormat || !doc.contains("entries") || !doc["entries"].is_array()) {
    r.rejected = 1;
    return r;
  }
  for (const auto& e : doc["entries"]) {
    try {
      const Partition lambda(e.at("lambda").get<std::vector<int>>());
      const Partition rho(e.at("rho").get<std::vector<int>>());
      const auto coeffs = e.at("coeffs").get<std::vector<std::int64_t>>();
      if (lambda.weight() > n_bound || e.at("checksum").get<std::string>() != green_entry_checksum(lambda, rho, coeffs) ||
          !cache.insert(lambda, rho, IntPolynomial(coeffs))) {
        ++r.rejected;
        continue;
      }
      ++r.loaded;
    } catch (const std::exception&) {
      ++r.rejected;
    }
  }
  return r;
}

inline std::size_t cache_entries(const GreenCache& cache, int n_bound) {
  std::size_t k = 0;
  for (const auto& [key, poly] : cache.snapshot())
    if (key.first.weight() <= n_bound) ++k;
  return k;
}

/// Writes every cached entry of weight <= n_bound; a reader sees the old file or the new one.
inline void save_green_cache(const std::filesystem::path& dir, int n_bound, const GreenCache& cache) {
  Json doc;
  doc["format"] = kCacheFormat;
  doc["version"] = 1;
  doc["n_bound"] = n_bound;
  Json entries = Json::array();
  for (const auto& [key, poly] : cache.snapshot()) {
    const auto& [lambda, rho] = key;
    if (lambda.weight() > n_bound) continue;
    Json e;
    e["lambda"] = lambda.parts();
    e["rho"] = rho.parts();
    e["coeffs"] = poly.coeffs();
    e["checksum"] = green_entry_checksum(lambda, rho, poly.coeffs());
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);

  std::filesystem::create_directories(dir);
  const auto target = green_cache_path(dir, n_bound);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump(1) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace dlcf::cli
