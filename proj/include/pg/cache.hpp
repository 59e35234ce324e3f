#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

namespace pg {

/// One cached spectrum record per group spec. Stored as a single JSON object;
/// writes go through a temp file and an atomic rename.
struct CacheRecord {
  std::string spec;
  uint64_t order = 0;
  std::set<uint64_t> mu;
  std::string strategy;
  std::string tool_version;
};

std::optional<CacheRecord> cache_load(const std::string& dir, const std::string& spec);
void cache_store(const std::string& dir, const CacheRecord& record);

}  // namespace pg
