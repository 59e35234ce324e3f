#include "pg/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "pg/errors.hpp"
#include "pg/version.hpp"

namespace pg {

namespace {

// Spec strings contain parentheses and dots; key files by a content hash.
std::string record_name(const std::string& spec) {
  uint64_t h = 1469598103934665603ull;
  for (char c : spec) {
    h ^= static_cast<uint8_t>(c);
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf) + ".json";
}

}  // namespace

std::optional<CacheRecord> cache_load(const std::string& dir, const std::string& spec) {
  if (dir.empty()) return std::nullopt;
  std::ifstream in(dir + "/" + record_name(spec));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    CacheRecord rec;
    rec.spec = j.at("spec").get<std::string>();
    rec.order = j.at("order").get<uint64_t>();
    for (const auto& v : j.at("mu")) rec.mu.insert(v.get<uint64_t>());
    rec.strategy = j.at("strategy").get<std::string>();
    rec.tool_version = j.at("tool_version").get<std::string>();
    if (rec.spec != spec || rec.tool_version != kToolVersion) return std::nullopt;
    return rec;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable record counts as a miss
  }
}

void cache_store(const std::string& dir, const CacheRecord& record) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  nlohmann::ordered_json j;
  j["spec"] = record.spec;
  j["order"] = record.order;
  j["mu"] = record.mu;
  j["strategy"] = record.strategy;
  j["tool_version"] = record.tool_version;
  const std::string final_path = dir + "/" + record_name(record.spec);
  const std::string tmp_path = final_path + ".tmp";
  {
    std::ofstream out(tmp_path);
    if (!out) throw Error("cannot write cache record: " + tmp_path);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) throw Error("cache rename failed: " + ec.message());
}

}  // namespace pg
