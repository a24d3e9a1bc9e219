#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace wangsun {

/// One journal entry. (kind, parameter, root_exponent) is the key; value
/// is the serialized rational.
struct CacheRecord {
  std::string kind;
  long long parameter = 0;
  long long root_exponent = 1;
  std::string value;
  std::string tool_version;
  std::string timestamp;  // ISO 8601 UTC

  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

std::string cache_record_to_json(const CacheRecord& record);
CacheRecord cache_record_from_json(const std::string& line);

/// Append-only JSONL journal of computed results. One JSON object per
/// line, UTF-8. The newest record for a key wins; putting a value that
/// conflicts with the stored one is an integrity failure, never an
/// overwrite.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }

  /// Newest record for the key, or nullopt. Throws CacheError (naming the
  /// offending line) if the journal is unreadable or corrupt.
  std::optional<CacheRecord> get(const std::string& kind, long long parameter,
                                 long long root_exponent) const;

  /// Appends. Throws CacheIntegrityError if a record with the same key and
  /// a different value already exists.
  void put(const CacheRecord& record);

 private:
  std::filesystem::path path_;
};

/// Current time as an ISO 8601 UTC string.
std::string utc_timestamp();

}  // namespace wangsun
