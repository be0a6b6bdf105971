#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "addcomb/chains.hpp"
#include "addcomb/dimension.hpp"
#include "addcomb/doubling.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/lemmas.hpp"
#include "addcomb/operators.hpp"
#include "addcomb/report_io.hpp"
#include "addcomb/search.hpp"
#include "addcomb/stable.hpp"
#include "json.hpp"

namespace addcomb::cli {

using json = nlohmann::ordered_json;

namespace {

json to_json(const IntSet& s) {
  json a = json::array();
  for (Int v : s.elements()) a.push_back(v);
  return a;
}

json to_json(const Factorization& f) {
  json steps = json::array();
  for (const auto& st : f.steps) {
    json s;
    s["variant"] = std::string(variant_name(st.variant));
    s["x"] = st.x ? json(*st.x) : json(nullptr);
    steps.push_back(std::move(s));
  }
  json j;
  j["base"] = to_json(f.base);
  j["steps"] = std::move(steps);
  j["b_prime_case"] = f.b_prime_case;
  if (f.core) j["core"] = to_json(*f.core);
  return j;
}

json to_json(const ChainRecord& r) {
  json j;
  j["set"] = to_json(r.set);
  j["t"] = r.profile.t;
  j["c"] = r.profile.c;
  j["b"] = r.profile.b;
  j["mu"] = r.profile.mu;
  j["vol"] = r.volume;
  try {
    j["factorization"] = to_json(factorize(r.set));
  } catch (const FactorizationFailed& e) {
    j["factorization"] = json{{"error", e.what()}};
  }
  return j;
}

json to_json(const ExtensionCheck& c) {
  json j;
  j["x"] = c.x;
  j["t"] = c.t;
  j["t_x"] = c.t_x;
  j["delta_t"] = c.delta_t;
  j["overlap"] = c.overlap;
  j["c_before"] = c.c_before;
  j["c_after"] = c.c_after;
  j["crossing"] = c.crossing;
  j["violations"] = c.violations;
  return j;
}

int need(const std::optional<int>& v, const char* name) {
  if (!v) throw DomainError(std::string("missing --") + name);
  return *v;
}

Int need(const std::optional<long long>& v, const char* name) {
  if (!v) throw DomainError(std::string("missing --") + name);
  return *v;
}

IntSet need_set(const std::string& text, const char* name) {
  if (text.empty()) throw DomainError(std::string("missing --") + name);
  return parse_int_set(text);
}

SearchOptions search_options(const RunConfig& c) {
  SearchOptions o;
  o.threads = c.threads;
  if (c.bound) o.bound = *c.bound;
  o.force = c.force;
  if (c.use_cache) {
    if (!c.cache_dir.empty()) {
      o.cache_dir = c.cache_dir;
    } else if (const char* env = std::getenv("ADDCOMB_CACHE_DIR")) {
      o.cache_dir = env;
    } else {
      o.cache_dir = ".addcomb-cache";
    }
  }
  return o;
}

struct Emitted {
  std::string data;
  int exit_code = kExitOk;
};

Emitted cmd_mu(const RunConfig& c) {
  const auto p = profile(need(c.k, "k"), need(c.t, "t"));
  json j;
  j["c"] = p.c;
  j["b"] = p.b;
  j["mu"] = p.mu;
  return {j.dump() + "\n"};
}

Emitted cmd_dim(const RunConfig& c) {
  const IntSet a = need_set(c.set_text, "set");
  const int d = additive_dim(a);
  json j;
  j["lambda"] = a.k() - 1 - d;
  j["dim"] = d;
  return {j.dump() + "\n"};
}

Emitted cmd_decompose(const RunConfig& c) {
  const NormalSet a = normalize(need_set(c.set_text, "set")).set;
  json j;
  try {
    const auto d = stable_decompose(a);
    j["a1"] = to_json(d.a1);
    j["p_len"] = d.p_len;
    j["a2"] = to_json(d.a2);
  } catch (const NotDecomposable&) {
    j["error"] = "not_decomposable";
  } catch (const AmbiguousDecomposition&) {
    j["error"] = "ambiguous";
  }
  return {j.dump() + "\n"};
}

Emitted cmd_chain_check(const RunConfig& c) {
  const IntSet a = need_set(c.set_text, "set");
  ChainRules rules{c.strict_chains};
  json j;
  const auto cert = is_chain(a, rules);
  j["chain"] = cert.has_value();
  if (cert) {
    json levels = json::array();
    for (const auto& s : cert->sets) levels.push_back(to_json(s));
    j["levels"] = std::move(levels);
    j["t"] = doubling(a);
    j["vol"] = cert->volume;
    j["mu"] = cert->profiles.back().mu;
    if (cert->factorization) {
      j["factorization"] = to_json(*cert->factorization);
    } else {
      j["factorization"] = json{{"error", cert->factorization_error}};
    }
  }
  return {j.dump() + "\n"};
}

Emitted cmd_chain_enum(const RunConfig& c) {
  ChainEnumOptions o;
  o.threads = c.threads;
  o.rules.strict_doubling_cap = c.strict_chains;
  std::string data;
  for (const auto& r : enumerate_chains(need(c.k, "k"), o)) {
    data += to_json(r).dump() + "\n";
  }
  return {data};
}

Emitted cmd_factorize(const RunConfig& c) {
  const NormalSet a = normalize(need_set(c.set_text, "set")).set;
  return {to_json(factorize(a)).dump() + "\n"};
}

Emitted cmd_fiso(const RunConfig& c) {
  const IntSet a = need_set(c.set_text, "set");
  const IntSet b = need_set(c.other_text, "other");
  const auto map = f_isomorphic(a, b);
  json j;
  j["isomorphic"] = map.has_value();
  if (map) {
    json pairs = json::array();
    for (const auto& [x, y] : *map) pairs.push_back(json::array({x, y}));
    j["map"] = std::move(pairs);
  }
  return {j.dump() + "\n"};
}

std::string emit_reports(const std::vector<SearchReport>& reports, Format f) {
  std::string data;
  switch (f) {
    case Format::Csv:
      data = report_csv_header() + "\n";
      for (const auto& r : reports) data += report_csv_row(r) + "\n";
      break;
    case Format::Jsonl:
      for (const auto& r : reports) data += report_to_json(r) + "\n";
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(json::parse(report_to_json(r)));
      data = arr.dump(2) + "\n";
      break;
    }
  }
  return data;
}

bool any_violation(const std::vector<SearchReport>& reports) {
  for (const auto& r : reports)
    if (!r.violations.empty()) return true;
  return false;
}

Emitted cmd_search(const RunConfig& c) {
  const int k = need(c.k, "k");
  const SearchOptions o = search_options(c);
  std::vector<SearchReport> reports;
  if (c.t) {
    reports.push_back(vol1_oracle(k, *c.t, o));
  } else {
    reports = verify_conjecture(k, o);
  }
  Emitted e{emit_reports(reports, c.format.value_or(Format::Csv))};
  if (any_violation(reports)) e.exit_code = kExitCounterexample;
  return e;
}

Emitted cmd_verify(const RunConfig& c) {
  const int k = need(c.k, "k");
  SearchOptions o = search_options(c);
  o.bound.reset();
  bool failed = false;
  json j;
  j["k"] = k;
  j["scope"] = "one-dimensional sets only";

  const auto reports = verify_conjecture(k, o);
  json conj = json::array();
  for (const auto& r : reports) {
    json row;
    row["t"] = r.t;
    row["mu"] = r.mu;
    row["observed_max_vol"] = r.observed_max_vol;
    row["attained"] = r.attained;
    row["violations"] = r.violations.size();
    row["pass"] = r.conjecture_holds() && r.attained;
    failed |= !row["pass"].get<bool>();
    conj.push_back(std::move(row));
  }
  j["conjecture"] = std::move(conj);

  Vol1Table table(o);
  // Extremality of the extended sets needs the k + 1 table; skip that part
  // when it is over budget.
  Vol1Table* ext_table = &table;
  try {
    table.reports(k + 1);
  } catch (const CapacityError&) {
    ext_table = nullptr;
  }
  const auto sweep = sweep_extension_lemmas(k, c.threads, ext_table);
  json ext;
  ext["sets"] = sweep.sets;
  ext["extensions"] = sweep.extensions;
  ext["lower_bound_checked"] = sweep.lower_bound_checked;
  ext["crossing_shape_checked"] = sweep.crossing_shape_checked;
  json fails = json::array();
  for (const auto& [set, chk] : sweep.failures) {
    json f = to_json(chk);
    f["set"] = to_json(set);
    fails.push_back(std::move(f));
  }
  failed |= !sweep.failures.empty();
  ext["failures"] = std::move(fails);
  j["extension_sweep"] = std::move(ext);

  ChainEnumOptions co;
  co.threads = c.threads;
  const auto chains = enumerate_chains(k, co);
  json chain_j;
  chain_j["count"] = chains.size();
  json theorem_fail = json::array();
  json uniq = json::array();
  ChainRecognizer recognizer;
  for (const auto& rec : chains) {
    const auto cert = recognizer.certify(rec.set);
    if (!cert) {
      theorem_fail.push_back({{"set", to_json(rec.set)}, {"error", "not certified"}});
      failed = true;
      continue;
    }
    const auto rep = verify_main_theorem(*cert);
    if (!rep.pass()) {
      theorem_fail.push_back({{"set", to_json(rec.set)}, {"failures", rep.failures}});
      failed = true;
    }
    json u;
    u["set"] = to_json(rec.set);
    try {
      const auto ur = check_uniqueness_lemmas(rec.set, table);
      json checked = json::array();
      for (const auto& l : ur.checked) {
        checked.push_back({{"lemma", l.lemma}, {"pass", l.pass}, {"notes", l.notes}});
      }
      u["checked"] = std::move(checked);
      u["skipped"] = ur.skipped;
      failed |= !ur.pass();
    } catch (const CapacityError& e) {
      u["skipped"] = json::array({std::string("all: ") + e.what()});
    }
    uniq.push_back(std::move(u));
  }
  chain_j["theorem_failures"] = std::move(theorem_fail);
  j["chains"] = std::move(chain_j);
  j["uniqueness"] = std::move(uniq);
  j["pass"] = !failed;
  return {j.dump(2) + "\n", failed ? kExitCounterexample : kExitOk};
}

Emitted dispatch(const RunConfig& c) {
  const std::string& s = c.subcommand;
  if (s == "mu") return cmd_mu(c);
  if (s == "dim") return cmd_dim(c);
  if (s == "decompose") return cmd_decompose(c);
  if (s == "chain-check") return cmd_chain_check(c);
  if (s == "chain-enum") return cmd_chain_enum(c);
  if (s == "factorize") return cmd_factorize(c);
  if (s == "fiso") return cmd_fiso(c);
  if (s == "search") return cmd_search(c);
  if (s == "verify") return cmd_verify(c);
  throw DomainError("unknown subcommand \"" + s + "\"");
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_outputs(const RunConfig& c, const std::string& data, double elapsed,
                   int exit_code) {
  {
    std::ofstream f(c.out_path, std::ios::binary);
    f << data;
    if (!f) throw std::runtime_error("cannot write " + c.out_path);
  }
  json meta;
  meta["subcommand"] = c.subcommand;
  meta["finished_at"] = utc_now();
  meta["elapsed_seconds"] = elapsed;
  meta["exit_code"] = exit_code;
  std::ofstream m(c.out_path + ".meta.json");
  m << meta.dump(2) << "\n";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  try {
    Emitted e = dispatch(config);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (config.out_path.empty()) {
      out << e.data;
    } else {
      write_outputs(config, e.data, elapsed, e.exit_code);
    }
    if (e.exit_code == kExitCounterexample) {
      err << "counterexample found; see the report\n";
    }
    return e.exit_code;
  } catch (const CounterexampleError& e) {
    err << "counterexample: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"Computations with integer sets of small doubling"};
  app.require_subcommand(1);
  RunConfig c;
  std::optional<int> k;
  std::optional<long long> t, bound;
  std::string format;

  auto add_set = [&](CLI::App* sub) {
    sub->add_option("--set", c.set_text, "Set literal, e.g. \"{0,1,2,4}\"")
        ->required();
  };
  auto add_k = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--k", k, "Cardinality");
    if (required) o->required();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", c.out_path, "Output file (default stdout)");
    sub->add_option("--threads", c.threads, "Worker threads (0: all cores)");
  };

  auto* mu_cmd = app.add_subcommand("mu", "Parameters c, b and mu for (k, T)");
  add_k(mu_cmd, true);
  mu_cmd->add_option("--t", t, "Doubling |2A|")->required();

  add_set(app.add_subcommand("dim", "Additive dimension"));
  add_set(app.add_subcommand("decompose", "Stable decomposition"));
  add_set(app.add_subcommand("factorize", "Growth-step factorization"));

  auto* check = app.add_subcommand("chain-check", "Chain recognition");
  add_set(check);
  check->add_flag("--strict", c.strict_chains, "Cap doublings at C(i,2)+1");

  auto* fiso = app.add_subcommand("fiso", "Freiman isomorphism test");
  add_set(fiso);
  fiso->add_option("--other", c.other_text, "Second set literal")->required();

  auto* chain_enum = app.add_subcommand("chain-enum", "Enumerate chains (JSONL)");
  add_k(chain_enum, true);
  add_out(chain_enum);
  chain_enum->add_flag("--strict", c.strict_chains, "Cap doublings at C(i,2)+1");

  auto add_search_flags = [&](CLI::App* sub) {
    add_out(sub);
    sub->add_flag("--force", c.force, "Run sweeps over the budget");
    sub->add_flag("!--no-cache", c.use_cache, "Ignore and do not write the cache");
    sub->add_option("--cache-dir", c.cache_dir,
                    "Cache directory (default $ADDCOMB_CACHE_DIR or .addcomb-cache)");
  };
  auto* search = app.add_subcommand("search", "One-dimensional volume oracle");
  add_k(search, true);
  search->add_option("--t", t, "Single doubling (default: all legal T)");
  search->add_option("--bound", bound, "Largest normal-form max swept");
  search->add_option("--format", format, "csv, json or jsonl")
      ->check(CLI::IsMember({"csv", "json", "jsonl"}));
  add_search_flags(search);

  auto* verify = app.add_subcommand("verify", "Conjecture and lemma suite");
  add_k(verify, true);
  add_search_flags(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitUsage};
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  c.k = k;
  c.t = t;
  c.bound = bound;
  if (format == "csv") c.format = Format::Csv;
  if (format == "json") c.format = Format::Json;
  if (format == "jsonl") c.format = Format::Jsonl;
  return {c, kExitOk};
}

}  // namespace addcomb::cli
