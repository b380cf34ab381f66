#include "catalog.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace dormant::cli {

namespace {

std::string catalog_path(const std::string& dir) {
  return (std::filesystem::path(dir) / "catalog.jsonl").string();
}

std::string crc_hex(const std::string& data) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a(data);
  return out.str();
}

}  // namespace

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

nlohmann::json entry_payload(const CatalogEntry& e) {
  return nlohmann::json{{"p", e.p},         {"level", e.level},
                        {"genus", e.genus}, {"marked", e.marked},
                        {"radii", e.radii}, {"count", e.count},
                        {"method", e.method}, {"timestamp", e.timestamp},
                        {"version", e.version}};
}

std::string entry_line(const CatalogEntry& e) {
  const std::string payload = entry_payload(e).dump();
  nlohmann::json line{{"entry", nlohmann::json::parse(payload)},
                      {"crc", crc_hex(payload)}};
  return line.dump();
}

Catalog load_catalog(const std::string& dir) {
  Catalog cat;
  cat.path = catalog_path(dir);
  std::ifstream in(cat.path);
  if (!in) return cat;

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const nlohmann::json parsed = nlohmann::json::parse(line);
      const std::string payload = parsed.at("entry").dump();
      if (parsed.at("crc").get<std::string>() != crc_hex(payload)) {
        cat.corrupted = true;
        continue;
      }
      const nlohmann::json& j = parsed.at("entry");
      CatalogEntry e;
      e.p = j.at("p").get<long long>();
      e.level = j.at("level").get<int>();
      e.genus = j.at("genus").get<int>();
      e.marked = j.at("marked").get<int>();
      e.radii = j.at("radii").get<std::vector<long long>>();
      e.count = j.at("count").get<std::string>();
      e.method = j.at("method").get<std::string>();
      e.timestamp = j.at("timestamp").get<std::string>();
      e.version = j.at("version").get<std::string>();
      cat.entries.push_back(std::move(e));
    } catch (const nlohmann::json::exception&) {
      cat.corrupted = true;
    }
  }
  in.close();

  if (cat.corrupted) {
    std::ofstream out(cat.path, std::ios::trunc);
    for (const CatalogEntry& e : cat.entries) out << entry_line(e) << "\n";
  }
  return cat;
}

void append_entry(const std::string& dir, const CatalogEntry& e) {
  std::filesystem::create_directories(dir);
  std::ofstream out(catalog_path(dir), std::ios::app);
  out << entry_line(e) << "\n";
}

}  // namespace dormant::cli
