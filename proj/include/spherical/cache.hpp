#pragma once

// Persistent store of computed K_{lambda mu}(q), one JSON record per line:
//   {"key": "...", "qpoly": [[exp, coeff], ...], "version": N}
// Lines that fail to parse or carry another version are ignored.

#include "spherical/laurent.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace spherical {

inline constexpr int kKostkaCacheVersion = 1;

class KostkaDiskCache {
 public:
  explicit KostkaDiskCache(std::filesystem::path dir);

  std::optional<QPoly> find(const std::string& key) const;
  void store(const std::string& key, const QPoly& value);

  std::size_t size() const;
  std::size_t ignored_lines() const { return ignored_; }
  const std::filesystem::path& file() const { return file_; }
  void clear();
  // Canonical dump: one record per line, sorted by key.
  void export_to(std::ostream& out) const;
  // Merges valid records from in; returns how many were accepted.
  std::size_t import_from(std::istream& in);

  // Cache directory from the environment, or empty when unset.
  static std::filesystem::path default_dir();

 private:
  void load();
  void rewrite() const;

  std::filesystem::path file_;
  mutable std::mutex mu_;
  std::map<std::string, QPoly> entries_;
  std::size_t ignored_ = 0;
};

std::string kostka_cache_key(const std::string& fingerprint, const std::string& lambda,
                             const std::string& mu);

}  // namespace spherical
