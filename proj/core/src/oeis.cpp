#include "wangsun/oeis.hpp"

#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "wangsun/errors.hpp"

namespace wangsun {

namespace {

using nlohmann::json;

// Bundled fixture snapshots, keyed by query string. These serve offline
// mode; uncovered queries fail with OeisOfflineMissError before any
// network I/O could happen.
const std::map<std::string, std::string>& fixtures() {
  static const std::map<std::string, std::string> table = {
      {"4,8,8,12",
       R"({"results":[{"number":54785,)"
       R"("data":"2,4,8,8,12,16,16,16,26,24,24,32,28,32,48,32,36,52,40,48",)"
       R"("name":"a(n) = sigma(2*n) - sigma(n)."}],"count":1})"},
  };
  return table;
}

OeisClient::HttpResponse default_transport(const std::string& base_url,
                                           const std::string& path_and_query,
                                           int timeout_seconds) {
  httplib::Client client(base_url);
  client.set_connection_timeout(timeout_seconds, 0);
  client.set_read_timeout(timeout_seconds, 0);
  client.set_follow_location(true);
  httplib::Result res = client.Get(path_and_query);
  if (!res)
    throw OeisNetworkError("OEIS request failed: " + httplib::to_string(res.error()) +
                           " (url: " + base_url + path_and_query + ")");
  return {res->status, res->body};
}

int matched_prefix_length(const std::string& data, const std::vector<long long>& terms) {
  std::vector<std::string> seq_terms;
  std::string cur;
  for (char c : data) {
    if (c == ',') {
      if (!cur.empty()) seq_terms.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) seq_terms.push_back(cur);

  std::vector<std::string> query_terms;
  for (long long t : terms) query_terms.push_back(std::to_string(t));

  int best = 0;
  for (std::size_t start = 0; start < seq_terms.size(); ++start) {
    int len = 0;
    while (len < static_cast<int>(query_terms.size()) &&
           start + len < seq_terms.size() && seq_terms[start + len] == query_terms[len])
      ++len;
    best = std::max(best, len);
  }
  return best;
}

}  // namespace

OeisClient::OeisClient(Options options) : options_(std::move(options)) {
  transport_ = [timeout = options_.timeout_seconds](const std::string& base,
                                                    const std::string& path) {
    return default_transport(base, path, timeout);
  };
}

OeisClient::OeisClient(Options options, Transport transport)
    : options_(std::move(options)), transport_(std::move(transport)) {}

std::string OeisClient::query_string(const std::vector<long long>& terms) {
  std::string q;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) q += ',';
    q += std::to_string(terms[i]);
  }
  return q;
}

std::vector<OeisMatch> OeisClient::parse_response(const std::string& body,
                                                  const std::vector<long long>& terms) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded())
    throw OeisParseError("OEIS response is not valid JSON", body);

  json results;
  if (doc.is_array()) {
    results = doc;
  } else if (doc.is_object() && doc.contains("results")) {
    results = doc["results"];
    if (results.is_null()) results = json::array();  // OEIS sends null for "no hits"
  } else {
    throw OeisParseError("OEIS response has no result list", body);
  }
  if (!results.is_array())
    throw OeisParseError("OEIS result list is not an array", body);

  std::vector<OeisMatch> matches;
  for (const json& hit : results) {
    if (!hit.is_object() || !hit.contains("number") || !hit["number"].is_number_integer())
      throw OeisParseError("OEIS hit lacks a sequence number", body);
    const long long number = hit["number"].get<long long>();
    char id[16];
    std::snprintf(id, sizeof(id), "A%06lld", number);
    OeisMatch m;
    m.sequence_id = id;
    if (hit.contains("name") && hit["name"].is_string()) m.name = hit["name"].get<std::string>();
    if (hit.contains("data") && hit["data"].is_string())
      m.matched_prefix_length = matched_prefix_length(hit["data"].get<std::string>(), terms);
    matches.push_back(std::move(m));
  }
  return matches;
}

std::vector<OeisMatch> OeisClient::search(const std::vector<long long>& terms) const {
  if (terms.empty() || terms.size() > 64)
    throw std::invalid_argument("OeisClient::search: need between 1 and 64 terms");
  const std::string query = query_string(terms);

  if (options_.offline) {
    const auto it = fixtures().find(query);
    if (it == fixtures().end())
      throw OeisOfflineMissError("offline mode: no fixture for query '" + query + "'");
    return parse_response(it->second, terms);
  }

  const std::string path = "/search?q=" + query + "&fmt=json";
  int backoff_ms = options_.backoff_initial_ms;
  for (int attempt = 0;; ++attempt) {
    try {
      const HttpResponse res = transport_(options_.base_url, path);
      if (res.status != 200)
        throw OeisNetworkError("OEIS returned HTTP " + std::to_string(res.status));
      return parse_response(res.body, terms);
    } catch (const OeisNetworkError&) {
      if (attempt >= options_.retries) throw;
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
      backoff_ms *= 2;
    }
  }
}

}  // namespace wangsun
