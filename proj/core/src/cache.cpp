#include "wangsun/cache.hpp"

#include <ctime>
#include <fstream>

#include <nlohmann/json.hpp>

#include "wangsun/errors.hpp"

namespace wangsun {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

std::string cache_record_to_json(const CacheRecord& record) {
  ordered_json j;
  j["kind"] = record.kind;
  j["parameter"] = record.parameter;
  j["root_exponent"] = record.root_exponent;
  j["value"] = record.value;
  j["tool_version"] = record.tool_version;
  j["timestamp"] = record.timestamp;
  return j.dump();
}

CacheRecord cache_record_from_json(const std::string& line) {
  const ordered_json j = ordered_json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object())
    throw CacheError("cache record is not a JSON object");
  CacheRecord r;
  try {
    r.kind = j.at("kind").get<std::string>();
    r.parameter = j.at("parameter").get<long long>();
    r.root_exponent = j.at("root_exponent").get<long long>();
    r.value = j.at("value").get<std::string>();
    r.tool_version = j.at("tool_version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
  } catch (const ordered_json::exception& e) {
    throw CacheError(std::string("cache record is missing a field: ") + e.what());
  }
  return r;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

std::optional<CacheRecord> ResultCache::get(const std::string& kind, long long parameter,
                                            long long root_exponent) const {
  std::ifstream in(path_);
  if (!in.is_open()) {
    if (!std::filesystem::exists(path_)) return std::nullopt;  // empty cache
    throw CacheError("cannot open cache file: " + path_.string());
  }
  std::optional<CacheRecord> newest;
  std::string line;
  for (long long line_no = 1; std::getline(in, line); ++line_no) {
    if (line.empty()) continue;
    CacheRecord r;
    try {
      r = cache_record_from_json(line);
    } catch (const CacheError& e) {
      throw CacheError(path_.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (r.kind == kind && r.parameter == parameter && r.root_exponent == root_exponent)
      newest = std::move(r);  // later lines win
  }
  return newest;
}

void ResultCache::put(const CacheRecord& record) {
  const std::optional<CacheRecord> existing =
      get(record.kind, record.parameter, record.root_exponent);
  if (existing && existing->value != record.value)
    throw CacheIntegrityError("cache integrity failure for key (" + record.kind + ", " +
                              std::to_string(record.parameter) + ", " +
                              std::to_string(record.root_exponent) + "): stored value " +
                              existing->value + " != new value " + record.value);
  std::ofstream out(path_, std::ios::app);
  if (!out.is_open()) throw CacheError("cannot open cache file for append: " + path_.string());
  out << cache_record_to_json(record) << '\n';
  if (!out) throw CacheError("write failed: " + path_.string());
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace wangsun
