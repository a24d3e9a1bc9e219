#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wangsun {

struct OeisMatch {
  std::string sequence_id;  // e.g. "A054785"
  std::string name;
  int matched_prefix_length = 0;  // longest query prefix found in the sequence data
};

/// Read-only client for the OEIS search endpoint. In offline mode only the
/// bundled fixture snapshots are served and no network I/O happens at all.
class OeisClient {
 public:
  struct Options {
    std::string base_url = "https://oeis.org";
    bool offline = false;
    int timeout_seconds = 10;
    int retries = 1;            // single retry with exponential backoff
    int backoff_initial_ms = 500;
  };

  struct HttpResponse {
    int status = 0;
    std::string body;
  };

  /// Issues GET <base_url><path_and_query>; throws OeisNetworkError on
  /// transport failure. Injectable for tests.
  using Transport = std::function<HttpResponse(const std::string& base_url,
                                               const std::string& path_and_query)>;

  explicit OeisClient(Options options = {});
  OeisClient(Options options, Transport transport);

  /// Searches for the comma-joined terms (1..64 of them). Matches keep the
  /// order the endpoint returned.
  std::vector<OeisMatch> search(const std::vector<long long>& terms) const;

  /// The query string "a,b,c" sent for the given terms.
  static std::string query_string(const std::vector<long long>& terms);

  /// Parses an OEIS fmt=json payload (either a bare result array or an
  /// object with a "results" key). Throws OeisParseError with the raw
  /// payload attached.
  static std::vector<OeisMatch> parse_response(const std::string& body,
                                               const std::vector<long long>& terms);

 private:
  Options options_;
  Transport transport_;
};

}  // namespace wangsun
