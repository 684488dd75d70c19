#include "spherical/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>

namespace spherical {

namespace {

using nlohmann::json;

std::optional<std::pair<std::string, QPoly>> parse_record(const std::string& line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (!j.contains("version") || !j["version"].is_number_integer() ||
      j["version"].get<int>() != kKostkaCacheVersion)
    return std::nullopt;
  if (!j.contains("key") || !j["key"].is_string()) return std::nullopt;
  if (!j.contains("qpoly") || !j["qpoly"].is_array()) return std::nullopt;
  QPoly p;
  for (auto& term : j["qpoly"]) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) return std::nullopt;
    BigInt c;
    if (term[1].is_number_integer())
      c = term[1].get<long long>();
    else if (term[1].is_string())
      try {
        c = BigInt(term[1].get<std::string>());
      } catch (...) {
        return std::nullopt;
      }
    else
      return std::nullopt;
    p += QPoly::monomial(c, term[0].get<int>());
  }
  return std::make_pair(j["key"].get<std::string>(), p);
}

std::string format_record(const std::string& key, const QPoly& p) {
  json terms = json::array();
  for (auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      terms.push_back({e, c.convert_to<long long>()});
    else
      terms.push_back({e, c.str()});
  }
  json j = {{"key", key}, {"qpoly", terms}, {"version", kKostkaCacheVersion}};
  return j.dump();
}

}  // namespace

std::string kostka_cache_key(const std::string& fingerprint, const std::string& lambda,
                             const std::string& mu) {
  return fingerprint + "#" + lambda + "#" + mu;
}

KostkaDiskCache::KostkaDiskCache(std::filesystem::path dir) {
  std::filesystem::create_directories(dir);
  file_ = dir / "kostka.jsonl";
  load();
}

std::filesystem::path KostkaDiskCache::default_dir() {
  if (const char* env = std::getenv("SPHERICAL_CACHE_DIR"); env && *env) return env;
  return {};
}

void KostkaDiskCache::load() {
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (auto rec = parse_record(line))
      entries_.insert_or_assign(rec->first, rec->second);
    else
      ++ignored_;
  }
}

std::optional<QPoly> KostkaDiskCache::find(const std::string& key) const {
  std::lock_guard lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void KostkaDiskCache::store(const std::string& key, const QPoly& value) {
  std::lock_guard lock(mu_);
  if (!entries_.emplace(key, value).second) return;
  std::ofstream out(file_, std::ios::app);
  out << format_record(key, value) << '\n';
}

std::size_t KostkaDiskCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

void KostkaDiskCache::clear() {
  std::lock_guard lock(mu_);
  entries_.clear();
  ignored_ = 0;
  std::filesystem::remove(file_);
}

void KostkaDiskCache::export_to(std::ostream& out) const {
  std::lock_guard lock(mu_);
  for (auto& [k, p] : entries_) out << format_record(k, p) << '\n';
}

std::size_t KostkaDiskCache::import_from(std::istream& in) {
  std::lock_guard lock(mu_);
  std::size_t accepted = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (auto rec = parse_record(line)) {
      entries_.insert_or_assign(rec->first, rec->second);
      ++accepted;
    }
  }
  rewrite();
  return accepted;
}

void KostkaDiskCache::rewrite() const {
  std::ofstream out(file_, std::ios::trunc);
  for (auto& [k, p] : entries_) out << format_record(k, p) << '\n';
}

}  // namespace spherical
