#include "addcomb/report_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "addcomb/errors.hpp"
#include "json.hpp"

namespace addcomb {

using json = nlohmann::ordered_json;

namespace {

std::string join_sets(const std::vector<NormalSet>& sets) {
  std::string out;
  for (const auto& s : sets) {
    if (!out.empty()) out += ';';
    out += s.str();
  }
  return out;
}

json sets_to_json(const std::vector<NormalSet>& sets) {
  json arr = json::array();
  for (const auto& s : sets) {
    json e = json::array();
    for (Int v : s.elements()) e.push_back(v);
    arr.push_back(std::move(e));
  }
  return arr;
}

std::vector<NormalSet> sets_from_json(const json& arr) {
  std::vector<NormalSet> out;
  for (const auto& e : arr) {
    out.emplace_back(IntSet(e.get<std::vector<Int>>()));
  }
  return out;
}

}  // namespace

std::string report_csv_header() {
  return "k,t,c,b,mu,observed_max_vol,attained,witness,violations";
}

std::string report_csv_row(const SearchReport& r) {
  std::ostringstream os;
  os << r.k << ',' << r.t << ',' << r.c << ',' << r.b << ',' << r.mu << ','
     << r.observed_max_vol << ',' << (r.attained ? "true" : "false") << ",\""
     << join_sets(r.witnesses) << "\",\"" << join_sets(r.violations) << '"';
  return os.str();
}

std::string report_to_json(const SearchReport& r) {
  json j;
  j["k"] = r.k;
  j["t"] = r.t;
  j["c"] = r.c;
  j["b"] = r.b;
  j["mu"] = r.mu;
  j["search_bound"] = r.search_bound;
  j["scope"] = "one-dimensional sets only";
  j["observed_max_vol"] = r.observed_max_vol;
  j["attained"] = r.attained;
  j["witnesses"] = sets_to_json(r.witnesses);
  j["violations"] = sets_to_json(r.violations);
  return j.dump();
}

SearchReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    SearchReport r;
    r.k = j.at("k").get<int>();
    r.t = j.at("t").get<Int>();
    r.c = j.at("c").get<int>();
    r.b = j.at("b").get<int>();
    r.mu = j.at("mu").get<Int>();
    r.search_bound = j.at("search_bound").get<Int>();
    r.observed_max_vol = j.at("observed_max_vol").get<Int>();
    r.attained = j.at("attained").get<bool>();
    r.witnesses = sets_from_json(j.at("witnesses"));
    r.violations = sets_from_json(j.at("violations"));
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

std::string content_key(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ReportCache::path_for(int k, Int t, Int bound) const {
  const std::string key = "vol1/v1;k=" + std::to_string(k) + ";t=" +
                          std::to_string(t) + ";bound=" + std::to_string(bound);
  return (std::filesystem::path(dir_) / ("vol1-" + content_key(key) + ".json"))
      .string();
}

std::optional<SearchReport> ReportCache::load(int k, Int t, Int bound) const {
  std::ifstream in(path_for(k, t, bound));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    SearchReport r = report_from_json(buf.str());
    if (r.k != k || r.t != t || r.search_bound != bound) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ReportCache::store(const SearchReport& r) const {
  std::filesystem::create_directories(dir_);
  const std::string path = path_for(r.k, r.t, r.search_bound);
  if (std::filesystem::exists(path)) return;
  // Write then rename so a concurrent reader never sees a partial file.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << report_to_json(r) << '\n';
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace addcomb
