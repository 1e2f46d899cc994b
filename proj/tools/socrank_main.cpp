#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "socrank/axioms.hpp"
#include "socrank/fixtures.hpp"
#include "socrank/parse.hpp"
#include "socrank/solutions.hpp"
#include "socrank/sums.hpp"

using json = nlohmann::ordered_json;
using namespace socrank;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Default roster for audits: x, y, z, w, then v, u, t, ...
Roster default_roster(int n) {
  static const std::vector<std::string> names = {"x", "y", "z", "w",
                                                 "v", "u", "t", "s"};
  if (n < 1 || n > static_cast<int>(names.size()))
    throw std::runtime_error("--roster-size must be between 1 and 8");
  return Roster::of(std::vector<std::string>(names.begin(), names.begin() + n));
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<SrsId> parse_srs_list(const std::string& csv) {
  if (csv == "all" || csv == "ALL") {
    auto span = all_srs();
    return {span.begin(), span.end()};
  }
  std::vector<SrsId> out;
  for (const std::string& name : split_list(csv)) {
    auto id = srs_from_name(name);
    if (!id) throw std::runtime_error("unknown SRS '" + name + "'");
    out.push_back(*id);
  }
  return out;
}

std::vector<AxiomId> parse_axiom_list(const std::string& csv) {
  if (csv == "all" || csv == "ALL") {
    auto span = all_axioms();
    return {span.begin(), span.end()};
  }
  std::vector<AxiomId> out;
  for (const std::string& name : split_list(csv)) {
    auto id = axiom_from_name(name);
    if (!id) throw std::runtime_error("unknown axiom '" + name + "'");
    out.push_back(*id);
  }
  return out;
}

json witness_json(const Roster& roster, const Witness& w) {
  json out;
  out["srs"] = std::string(srs_name(w.srs));
  out["axiom"] = std::string(axiom_name(w.axiom));
  json rankings = json::array();
  for (const auto& r : w.rankings) rankings.push_back(render_ranking(roster, r));
  out["rankings"] = std::move(rankings);
  if (w.sum) out["sum"] = render_ranking(roster, *w.sum);
  if (w.sigma) {
    json sigma = json::array();
    for (int i : *w.sigma) sigma.push_back(roster.name(i));
    out["sigma"] = std::move(sigma);
  }
  if (w.pi) {
    json pi = json::object();
    for (uint32_t bits = 1; bits < w.pi->size(); ++bits)
      if ((*w.pi)[bits] != bits)
        pi[render_coalition(roster, Coalition(bits))] =
            render_coalition(roster, Coalition((*w.pi)[bits]));
    out["pi"] = std::move(pi);
  }
  out["x"] = roster.name(w.x);
  out["y"] = roster.name(w.y);
  if (w.clause) out["clause"] = w.clause;
  out["observed"] = w.observed;
  return out;
}

json bounds_json(const SearchBounds& b) {
  json out;
  out["roster_size"] = b.roster_size;
  out["max_domain"] = b.max_domain;
  out["max_classes"] = b.max_classes;
  out["mode"] = b.mode == SearchMode::Exhaustive ? "exhaustive" : "sampled";
  out["max_combined_domain"] = b.combined_cap();
  if (b.min_combined_domain) out["min_combined_domain"] = b.min_combined_domain;
  if (b.mode == SearchMode::Sampled) out["trials"] = b.trials;
  return out;
}

json audit_json(const Roster& roster, const AuditResult& a) {
  json out;
  out["srs"] = std::string(srs_name(a.srs));
  out["axiom"] = std::string(axiom_name(a.axiom));
  out["status"] = std::string(audit_status_name(a.status));
  if (a.witness) out["witness"] = witness_json(roster, *a.witness);
  out["bounds"] = bounds_json(a.bounds);
  out["seed"] = a.bounds.seed;
  out["instances"] = a.instances;
  out["elapsed_ms"] = a.elapsed_ms;
  return out;
}

int cmd_rank(const std::string& srs_csv, const std::string& file) {
  auto id = srs_from_name(srs_csv);
  if (!id) {
    std::cerr << "error: unknown SRS '" << srs_csv << "'\n";
    return 2;
  }
  ParsedInput input = parse_input(slurp(file));
  for (const auto& r : input.rankings) {
    std::string rendered = render_relation(input.roster, apply(*id, input.roster, r));
    std::cout << rendered;
    if (rendered.empty() || rendered.back() != '\n') std::cout << '\n';
  }
  return 0;
}

int cmd_sum(const std::string& kind, const std::string& file1,
            const std::string& file2) {
  ParsedInput a = parse_input(slurp(file1));
  ParsedInput b = file2.empty() ? a : parse_input(slurp(file2));
  const CoalitionalRanking* r1 = nullptr;
  const CoalitionalRanking* r2 = nullptr;
  if (file2.empty()) {
    if (a.rankings.size() != 2)
      throw std::runtime_error("expected exactly two rankings in the input");
    r1 = &a.rankings[0];
    r2 = &a.rankings[1];
  } else {
    if (a.rankings.size() != 1 || b.rankings.size() != 1)
      throw std::runtime_error("expected one ranking per input file");
    r1 = &a.rankings[0];
    r2 = &b.rankings[0];
  }
  const Roster& roster = a.roster;
  if (kind == "concat") {
    std::cout << render_ranking(roster, concat_sum(*r1, *r2)) << "\n";
  } else if (kind == "top") {
    std::cout << render_ranking(roster, top_aligned_sum(*r1, *r2)) << "\n";
  } else if (kind == "bottom") {
    std::cout << render_ranking(roster, bottom_aligned_sum(*r1, *r2)) << "\n";
  } else if (kind == "all") {
    int count = 0;
    for_each_sum(*r1, *r2, [&](const CoalitionalRanking& s) {
      std::cout << render_ranking(roster, s) << "\n";
      ++count;
      return true;
    });
    std::cout << "count=" << count << "\n";
  } else {
    std::cerr << "error: unknown sum kind '" << kind << "'\n";
    return 2;
  }
  return 0;
}

int cmd_audit(const std::string& srs_csv, const std::string& axiom_csv,
              SearchBounds bounds, bool as_json) {
  std::vector<SrsId> srs_list = parse_srs_list(srs_csv);
  std::vector<AxiomId> axiom_list = parse_axiom_list(axiom_csv);
  Roster roster = default_roster(bounds.roster_size);
  std::vector<AuditResult> results =
      audit_matrix(srs_list, axiom_list, roster, bounds);
  if (as_json) {
    json report = json::array();
    for (const auto& a : results) report.push_back(audit_json(roster, a));
    std::cout << report.dump(2) << "\n";
    return 0;
  }
  for (const auto& a : results) {
    std::cout << srs_name(a.srs) << " x " << axiom_name(a.axiom) << ": "
              << audit_status_name(a.status) << " (" << a.instances
              << " instances, " << a.elapsed_ms << " ms)\n";
    if (a.witness) {
      std::cout << "  witness: " << a.witness->observed << "\n";
      for (const auto& r : a.witness->rankings)
        std::cout << "    ranking: " << render_ranking(roster, r) << "\n";
      if (a.witness->sum)
        std::cout << "    sum: " << render_ranking(roster, *a.witness->sum)
                  << "\n";
    }
  }
  return 0;
}

int cmd_repro(bool as_json) {
  FixtureReport report = run_fixture_suite();
  if (as_json) {
    json out;
    json entries = json::array();
    for (const auto& e : report.entries) {
      json entry;
      entry["id"] = e.id;
      entry["disputed"] = e.disputed;
      entry["passed"] = e.passed;
      entry["assertions"] = e.assertions;
      if (!e.failures.empty()) entry["failures"] = e.failures;
      entries.push_back(std::move(entry));
    }
    out["fixtures"] = std::move(entries);
    out["assertions"] = report.assertion_count();
    out["disputed"] = report.disputed_count();
    out["ok"] = report.ok();
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : report.entries) {
      std::cout << (e.passed ? "PASS" : "FAIL") << (e.disputed ? " DISPUTED" : "")
                << "  " << e.id << " (" << e.assertions << " assertions)\n";
      for (const auto& f : e.failures) std::cout << "    failed: " << f << "\n";
    }
    std::cout << "fixtures: " << report.entries.size()
              << ", disputed: " << report.disputed_count()
              << ", assertions: " << report.assertion_count() << ", "
              << (report.ok() ? "all non-disputed assertions hold"
                              : "FAILURES present")
              << "\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Social ranking solutions over coalitional rankings"};
  app.require_subcommand(1);

  std::string srs = "all", axiom = "all", file, file2, kind = "concat";
  SearchBounds bounds;
  std::string mode = "exhaustive";
  bool as_json = false;

  CLI::App* rank = app.add_subcommand("rank", "Apply an SRS to ranking inputs");
  rank->add_option("--srs", srs, "SRS name")->required();
  rank->add_option("file", file, "input file ('-' for stdin)")->required();

  CLI::App* sum = app.add_subcommand("sum", "Build sums of two disjoint rankings");
  sum->add_option("--kind", kind, "concat|top|bottom|all");
  sum->add_option("file1", file, "first input")->required();
  sum->add_option("file2", file2, "second input (optional if file1 has both)");

  CLI::App* audit = app.add_subcommand("audit", "Audit SRSs against axioms");
  audit->add_option("--srs", srs, "comma-separated SRS names or 'all'");
  audit->add_option("--axiom", axiom, "comma-separated axiom names or 'all'");
  audit->add_option("--roster-size", bounds.roster_size, "individuals");
  audit->add_option("--max-domain", bounds.max_domain, "per-ranking domain cap");
  audit->add_option("--max-classes", bounds.max_classes, "class-count cap");
  audit->add_option("--max-combined-domain", bounds.max_combined_domain,
                    "pair-audit cap on |D1|+|D2| (0 = 2*max-domain)");
  audit->add_option("--mode", mode, "exhaustive|sampled");
  audit->add_option("--seed", bounds.seed, "sampled-mode seed");
  audit->add_option("--trials", bounds.trials, "sampled-mode trials");
  audit->add_flag("--json", as_json, "emit a JSON report");

  CLI::App* repro = app.add_subcommand("repro", "Run the reproduction suite");
  repro->add_flag("--json", as_json, "emit a JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rank->parsed()) return cmd_rank(srs, file);
    if (sum->parsed()) return cmd_sum(kind, file, file2);
    if (audit->parsed()) {
      if (mode == "sampled")
        bounds.mode = SearchMode::Sampled;
      else if (mode != "exhaustive")
        throw std::runtime_error("--mode must be exhaustive or sampled");
      return cmd_audit(srs, axiom, bounds, as_json);
    }
    return cmd_repro(as_json);
  } catch (const NotDisjointError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
