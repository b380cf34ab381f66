#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dormant::cli {

inline constexpr const char* kLibraryVersion = "1.0.0";

// One stored degree computation.  Radii empty means the unrestricted total.
struct CatalogEntry {
  long long p = 0;
  int level = 0;
  int genus = 0;
  int marked = 0;
  std::vector<long long> radii;
  std::string count;
  std::string method;
  std::string timestamp;
  std::string version;
};

struct Catalog {
  std::string path;
  std::vector<CatalogEntry> entries;
  bool corrupted = false;
};

std::uint64_t fnv1a(const std::string& data);

nlohmann::json entry_payload(const CatalogEntry& e);
std::string entry_line(const CatalogEntry& e);

// Reads the catalog under dir, dropping lines whose checksum fails; when any
// line was dropped the file is rewritten from the surviving entries.
Catalog load_catalog(const std::string& dir);

void append_entry(const std::string& dir, const CatalogEntry& e);

}  // namespace dormant::cli
