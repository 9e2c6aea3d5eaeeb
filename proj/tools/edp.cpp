// edp: essential p-dimension of tori and finite multiplicative groups from their character modules.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "edp/catalog.hpp"
#include "edp/ed_solver.hpp"
#include "edp/error.hpp"
#include "edp/io.hpp"
#include "edp/verify.hpp"

namespace {

using namespace edp;

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kMismatch = 3;

struct Job {
  unsigned prime = 0;
  std::vector<std::string> inputs;
  std::vector<std::string> catalog;
  std::optional<unsigned> max_r;
  std::uint64_t budget = 1'000'000;
  bool oracle = false;
  std::uint64_t seed = 0x5eed;
  bool json = false;
};

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(const Job& job) {
  if (!is_prime(job.prime)) throw ValidationError("--prime must be a prime, got " + std::to_string(job.prime));
}

struct NamedModule {
  std::string name;
  GaloisModule module;
};

std::vector<NamedModule> load_modules(const Job& job) {
  std::vector<NamedModule> out;
  for (const auto& path : job.inputs) out.push_back({path, module_from_json(read_json_file(path))});
  for (const auto& key : job.catalog) out.push_back({key, catalog_entry(key).module});
  return out;
}

std::string describe(const CoverSummand& s) {
  std::string elems;
  for (std::size_t i = 0; i < s.subgroup.representative.size(); ++i)
    elems += (i ? "," : "") + std::to_string(s.subgroup.representative[i]);
  return "Z[G/H] rank " + std::to_string(s.subgroup.index) + " H={" + elems + "} generator=" + to_string(s.generator);
}

int run_ed(const Job& job) {
  require_prime(job);
  const auto modules = load_modules(job);
  if (modules.empty()) throw ValidationError("ed needs --input or --catalog");
  int status = kOk;
  Json out = Json::array();
  for (const auto& [name, m] : modules) {
    const EdResult r = essential_p_dimension(m, job.prime);
    Json j = result_to_json(r);
    std::optional<std::size_t> oracle_rank;
    if (job.oracle) {
      const auto slow = brute_force_min_rank(m, job.prime, 64, job.budget);
      if (!slow) throw ValidationError(name + ": oracle exceeded its rank budget");
      oracle_rank = slow->min_rank;
      j["oracle"] = Json{{"min_rank", slow->min_rank}, {"agree", slow->min_rank == r.min_rank}};
      if (slow->min_rank != r.min_rank) status = kMismatch;
    }
    if (!r.verified) status = kMismatch;
    if (job.json) {
      out.push_back(Json{{"input", name}, {"result", j}});
      continue;
    }
    if (modules.size() > 1) std::cout << name << ": ";
    std::cout << "min_rank=" << r.min_rank << " ed=" << r.ed << "\n";
    for (const auto& s : r.certificate.summands) std::cout << "  " << describe(s) << "\n";
    if (oracle_rank)
      std::cout << "  oracle min_rank=" << *oracle_rank << (*oracle_rank == r.min_rank ? " (agrees)" : " (DISAGREES)")
                << "\n";
    for (const auto& d : r.diagnostics) std::cout << "  note: " << d << "\n";
  }
  if (job.json) std::cout << out.dump(2) << "\n";
  return status;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.resize(width, ' ');
  return s;
}

int run_table(const Job& job) {
  require_prime(job);
  const auto table = expected_table(job.prime);
  int status = kOk;
  Json rows = Json::array();
  if (!job.json)
    std::cout << "family  r   rank(exp/got)  ed(exp/got)  status\n";
  for (const auto& row : table) {
    const std::string fam = family_name(row.family);
    const auto [lo, hi] = r_range(row.family, job.prime);
    std::vector<std::optional<unsigned>> rs;
    if (!family_has_r(row.family)) {
      rs.push_back(std::nullopt);
    } else {
      for (unsigned r = lo; r <= hi && (!job.max_r || r <= *job.max_r); ++r) rs.push_back(r);
    }
    if (rs.empty()) {
      if (job.json)
        rows.push_back(Json{{"family", fam}, {"r", nullptr}, {"status", "N/A (range empty)"}});
      else
        std::cout << pad(fam, 8) << "-   N/A (range empty)\n";
      continue;
    }
    for (const auto& r : rs) {
      const CatalogEntry e = build_list_L(row.family, job.prime, r);
      const EdResult res = essential_p_dimension(e.module, job.prime);
      const bool match = res.ed == row.ed && e.module.free_rank() == row.rank && res.verified;
      if (!match) status = kMismatch;
      if (job.json) {
        rows.push_back(Json{{"family", fam},
                            {"r", r ? Json(*r) : Json(nullptr)},
                            {"expected_rank", row.rank},
                            {"rank", e.module.free_rank()},
                            {"expected_ed", row.ed},
                            {"ed", res.ed},
                            {"min_rank", res.min_rank},
                            {"status", match ? "MATCH" : "MISMATCH"}});
        continue;
      }
      char line[128];
      std::snprintf(line, sizeof line, "%-7s %-3s %5zu/%-5zu     %3ld/%-3ld     %s\n", fam.c_str(),
                    r ? std::to_string(*r).c_str() : "-", row.rank, e.module.free_rank(), row.ed, res.ed,
                    match ? "MATCH" : "MISMATCH");
      std::cout << line;
      for (const auto& d : e.diagnostics) std::cout << "  note: " << d << "\n";
    }
  }
  if (job.json) std::cout << Json{{"p", job.prime}, {"rows", rows}}.dump(2) << "\n";
  return status;
}

int run_genus(const Job& job) {
  require_prime(job);
  const auto modules = load_modules(job);
  if (modules.size() != 2) throw ValidationError("genus needs exactly two modules (--input/--catalog)");
  GenusOptions o;
  o.budget = job.budget;
  o.seed = job.seed;
  const GenusAnswer a = genus_equal(modules[0].module, modules[1].module, job.prime, o);
  if (job.json)
    std::cout << Json{{"l", modules[0].name}, {"m", modules[1].name}, {"genus_equal", to_string(a)}}.dump(2) << "\n";
  else
    std::cout << "genus_equal=" << to_string(a) << "\n";
  return kOk;
}

int run_classify(const Job& job) {
  require_prime(job);
  if (job.inputs.empty()) throw ValidationError("classify needs --input with a presentation");
  int status = kOk;
  Json out = Json::array();
  for (const auto& path : job.inputs) {
    const Presentation pres = presentation_from_json(read_json_file(path));
    const int cls = classify_ed_le_one(pres, job.prime);
    const EdResult r = essential_p_dimension(presentation_module(pres, job.prime), job.prime);
    const bool agree = r.ed == cls;
    if (!agree) status = kMismatch;
    if (job.json) {
      out.push_back(Json{{"input", path}, {"class", cls}, {"ed", r.ed}, {"agree", agree}});
    } else {
      if (job.inputs.size() > 1) std::cout << path << ": ";
      std::cout << "class=" << cls << " solver_ed=" << r.ed << (agree ? " MATCH" : " MISMATCH") << "\n";
    }
  }
  if (job.json) std::cout << out.dump(2) << "\n";
  return status;
}

int run_verify(const Job& job) {
  require_prime(job);
  VerifyOptions o;
  o.p = job.prime;
  o.budget = job.budget;
  o.seed = job.seed;
  o.max_r = job.max_r;
  std::vector<CheckReport> reports;
  reports.push_back(check_oracle_equivalence(o));
  reports.push_back(check_additivity(o));
  reports.push_back(check_genus_invariance(o));
  reports.push_back(check_trivial_restriction(o));
  reports.push_back(check_rank_c(o));
  if (job.inputs.empty()) {
    reports.push_back(check_table(o, table_fixture(job.prime)));
  } else {
    for (const auto& path : job.inputs) {
      CheckReport r = check_table(o, load_table_fixture(path));
      r.name = "table[" + path + "]";
      reports.push_back(std::move(r));
    }
  }
  bool ok = true;
  Json out = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    if (job.json) {
      out.push_back(Json{{"check", r.name},
                         {"passed", r.passed},
                         {"total", r.total},
                         {"skipped", r.skipped},
                         {"ok", r.ok()},
                         {"failures", r.failures}});
      continue;
    }
    std::cout << r.summary() << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  }
  if (job.json) std::cout << Json{{"p", job.prime}, {"checks", out}}.dump(2) << "\n";
  return ok ? kOk : kMismatch;
}

int run_catalog(const Job& job) {
  if (!job.catalog.empty()) {
    Json out = Json::array();
    for (const auto& key : job.catalog) {
      const CatalogEntry e = catalog_entry(key);
      Json j{{"key", e.key},
             {"expected_rank", e.expected_rank},
             {"expected_ed", e.expected_ed ? Json(*e.expected_ed) : Json(nullptr)},
             {"module", module_to_json(e.module)}};
      if (!e.diagnostics.empty()) j["diagnostics"] = e.diagnostics;
      out.push_back(std::move(j));
    }
    std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
    return kOk;
  }
  require_prime(job);
  const auto entries = list_L_entries(job.prime, job.max_r);
  if (job.json) {
    Json out = Json::array();
    for (const auto& e : entries)
      out.push_back(Json{{"key", e.key}, {"rank", e.module.free_rank()}, {"expected_ed", *e.expected_ed}});
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  for (const auto& e : entries)
    std::cout << e.key << "  rank=" << e.module.free_rank() << " expected_ed=" << *e.expected_ed << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Essential p-dimension of tori and diagonalizable groups via permutation lattices"};
  app.require_subcommand(1);
  Job job;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-p,--prime", job.prime, "working prime");
    sub->add_option("-i,--input", job.inputs, "JSON file (repeatable)");
    sub->add_option("-c,--catalog", job.catalog, "catalog key such as M11r@p=3,r=1 (repeatable)");
    sub->add_option("--max-r", job.max_r, "largest r to instantiate for r-families");
    sub->add_option("--budget", job.budget, "exhaustive search cap (genus test, brute-force oracle)");
    sub->add_flag("--oracle", job.oracle, "cross-check with the brute-force oracle");
    sub->add_option("--seed", job.seed, "seed for randomized genus sampling and random modules");
    sub->add_flag("--json", job.json, "machine-readable output");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Job&);
  };
  const Command commands[] = {
      {"ed", "minimal permutation rank and essential p-dimension of a module", run_ed},
      {"table", "recompute the C_{p^2} table and diff it against the expected values", run_table},
      {"genus", "test whether two lattices lie in the same genus at p", run_genus},
      {"classify", "ed <= 1 classifier on a Z[Lambda]/<m> presentation, cross-checked", run_classify},
      {"verify", "oracle, additivity, genus, restriction and table checks", run_verify},
      {"catalog", "list catalog entries at p, or dump entries given by key", run_catalog},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Job&)>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    subs.emplace_back(sub, c.run);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    for (const auto& [sub, run] : subs)
      if (sub->parsed()) return run(job);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
