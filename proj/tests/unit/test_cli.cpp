#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;
namespace cli = addcomb::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "addcomb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  auto parsed = cli::parse_args(static_cast<int>(argv.size()), argv.data(), out, err);
  if (!parsed.config) return {parsed.exit_code, out.str(), err.str()};
  const int code = cli::run(*parsed.config, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("mu and dim") {
  auto r = invoke({"mu", "--k", "5", "--t", "12"});
  CHECK(r.code == cli::kExitOk);
  CHECK(json::parse(r.out) == json{{"c", 3}, {"b", 1}, {"mu", 8}});
  r = invoke({"dim", "--set", "{0,1,2,5}"});
  CHECK(json::parse(r.out) == json{{"lambda", 1}, {"dim", 2}});
  r = invoke({"mu", "--k", "5", "--t", "13"});
  CHECK(r.code == cli::kExitUsage);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("decompose") {
  auto r = invoke({"decompose", "--set", "{0,2,4,5,6}"});
  CHECK(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("a1") == json::array({0, 2, 4}));
  CHECK(j.at("p_len") == 3);
  r = invoke({"decompose", "--set", "{0,1,3,4,5}"});
  CHECK(json::parse(r.out).at("error") == "not_decomposable");
  // Doubling above 3k - 4 is a usage error.
  r = invoke({"decompose", "--set", "{0,1,2,4,8}"});
  CHECK(r.code == cli::kExitUsage);
}

TEST_CASE("chain subcommands") {
  auto r = invoke({"chain-check", "--set", "{0,3,4,6,7,8}"});
  CHECK(r.code == cli::kExitOk);
  CHECK(json::parse(r.out).at("chain") == false);
  r = invoke({"chain-check", "--set", "{0,4,6,7,8}"});
  const auto j = json::parse(r.out);
  CHECK(j.at("chain") == true);
  CHECK(j.at("vol") == 9);
  r = invoke({"chain-enum", "--k", "5"});
  const auto recs = lines(r.out);
  CHECK(recs.size() == 7);
  CHECK(recs.back().at("set") == json::array({0, 4, 6, 7, 8}));
  r = invoke({"chain-enum", "--k", "5", "--strict"});
  CHECK(lines(r.out).size() < 7);
}

TEST_CASE("factorize and fiso") {
  auto r = invoke({"factorize", "--set", "{0,4,5,6,8}"});
  CHECK(r.code == cli::kExitOk);
  CHECK(json::parse(r.out).contains("steps"));
  r = invoke({"fiso", "--set", "{0,1,2,4,8}", "--other", "{0,4,6,7,8}"});
  CHECK(json::parse(r.out).at("isomorphic") == true);
  r = invoke({"fiso", "--set", "{0,1,2}", "--other", "{0,1,3}"});
  CHECK(json::parse(r.out).at("isomorphic") == false);
}

TEST_CASE("search output and sidecar") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("addcomb-cli-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string out = (dir / "k5.csv").string();
  auto r = invoke({"search", "--k", "5", "--no-cache", "--out", out});
  CHECK(r.code == cli::kExitOk);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("k,t,c,b,mu", 0) == 0);
  int rows = 0;
  for (std::string line; std::getline(in, line);) rows += !line.empty();
  CHECK(rows == 4);
  std::ifstream meta_in(out + ".meta.json");
  const auto meta = json::parse(meta_in);
  CHECK(meta.at("exit_code") == 0);

  r = invoke({"search", "--k", "5", "--t", "12", "--format", "json",
              "--cache-dir", (dir / "cache").string()});
  const auto reports = json::parse(r.out);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].at("observed_max_vol") == 9);
  CHECK(std::filesystem::exists(dir / "cache"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors") {
  CHECK(invoke({"dim", "--set", "0,1"}).code == cli::kExitUsage);
  CHECK(invoke({"nonsense"}).code == cli::kExitUsage);
  CHECK(invoke({"search", "--k", "5", "--bound", "500", "--no-cache"}).code ==
        cli::kExitUsage);
  CHECK(invoke({"--help"}).code == cli::kExitOk);
}

TEST_CASE("verify passes for k = 4") {
  auto r = invoke({"verify", "--k", "4", "--no-cache"});
  CHECK(r.code == cli::kExitOk);
}
