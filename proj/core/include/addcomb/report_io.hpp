#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addcomb/search.hpp"

namespace addcomb {

/// k,t,c,b,mu,observed_max_vol,attained,witness,violations
std::string report_csv_header();
/// One CSV line (no newline). Set lists are ';'-separated and quoted.
std::string report_csv_row(const SearchReport& r);

/// Compact JSON object of every field except the elapsed time.
std::string report_to_json(const SearchReport& r);
/// Inverse of report_to_json; throws DomainError on malformed input.
SearchReport report_from_json(std::string_view text);

/// Content-addressed store of completed reports, keyed by (k, t, bound).
/// Entries are written once and never modified.
class ReportCache {
 public:
  explicit ReportCache(std::string dir) : dir_(std::move(dir)) {}

  std::optional<SearchReport> load(int k, Int t, Int bound) const;
  void store(const SearchReport& r) const;
  std::string path_for(int k, Int t, Int bound) const;

 private:
  std::string dir_;
};

/// Hex FNV-1a 64 of `text`.
std::string content_key(std::string_view text);

}  // namespace addcomb
