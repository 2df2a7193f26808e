// fragmerge: distance-based merging over propositional fragments, fragment
// closures, knowledge-distribution constructions, and the bounded searcher.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>

#include "fragmerge/distribute.hpp"
#include "fragmerge/error.hpp"
#include "fragmerge/render.hpp"
#include "fragmerge/report.hpp"
#include "fragmerge/text_io.hpp"
#include "fragmerge/witness_io.hpp"

using namespace fragmerge;
using nlohmann::json;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct CommonOpts {
  std::string atoms;
  bool as_json = false;
};

AtomUniverse universe_of(const CommonOpts& c) {
  if (c.atoms.empty()) fail(Errc::Usage, "--atoms is required");
  return parse_universe(c.atoms);
}

KnowledgeBase load_kb(const std::string& path, const AtomUniverse& u) {
  try {
    return parse_kb(read_file(path), u);
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

ModelSet load_models(const std::string& path, const AtomUniverse& u) {
  try {
    return parse_model_set(read_file(path), u);
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

Profile load_profile(const std::vector<std::string>& paths, const AtomUniverse& u) {
  std::vector<KnowledgeBase> bases;
  for (const auto& p : paths) bases.push_back(load_kb(p, u));
  return Profile{std::move(bases)};
}

std::uint64_t node_budget_default() {
  if (const char* env = std::getenv("FRAGMERGE_NODE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    fail(Errc::Usage, "FRAGMERGE_NODE_BUDGET must be a positive integer");
  }
  return 100'000'000;
}

void emit(const json& doc, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << text;
}

json witness_json(const DistributionWitness& w) {
  json doc;
  doc["construction"] = w.construction;
  if (!w.detail.empty()) doc["detail"] = w.detail;
  doc["fragment"] = std::string(to_string(w.fragment));
  doc["distance"] = std::string(to_string(w.distance));
  json aggs = json::array();
  for (Aggregation a : w.aggregations) aggs.push_back(std::string(to_string(a)));
  doc["aggregations"] = aggs;
  doc["universe"] = w.profile.universe().names();
  doc["fresh_atoms"] = w.fresh_atoms;
  json profile = json::array();
  for (std::size_t i = 0; i < w.profile.size(); ++i) profile.push_back(format_kb(w.profile[i]));
  doc["profile"] = profile;
  doc["constraint"] = format_kb(w.constraint);
  doc["verified"] = w.verified;
  return doc;
}

std::string witness_text(const DistributionWitness& w) {
  std::string out = "# construction: " + w.construction;
  if (!w.detail.empty()) out += " " + w.detail;
  out += '\n';
  out += "# universe:";
  for (const auto& n : w.profile.universe().names()) out += " " + n;
  out += '\n';
  for (std::size_t i = 0; i < w.profile.size(); ++i) {
    out += "# profile member " + std::to_string(i + 1) + ":\n";
    out += format_kb(w.profile[i]);
  }
  out += "# constraint:\n";
  out += format_kb(w.constraint);
  out += "# verified: ";
  out += w.verified ? "yes" : "no";
  out += " (";
  out += to_string(w.distance);
  out += ";";
  for (std::size_t i = 0; i < w.aggregations.size(); ++i)
    out += std::string(i ? "," : " ") + std::string(to_string(w.aggregations[i]));
  out += ")\n";
  return out;
}

int run_distribution(const DistributionTask& task, const std::string& method, int jobs,
                     const std::string& out_dir, bool as_json) {
  const auto started = std::chrono::steady_clock::now();
  std::optional<DistributionWitness> witness;
  std::optional<ExhaustionCertificate> cert;

  if (method == "auto") {
    SearchOutcome outcome = distribute_auto(task, jobs);
    witness = std::move(outcome.witness);
    if (!witness) cert = outcome.certificate;
  } else if (method == "search") {
    SearchOutcome outcome = search(task, jobs);
    witness = std::move(outcome.witness);
    if (!witness) cert = outcome.certificate;
  } else if (method == "drastic") {
    witness = distribute_drastic(task.target, task.fragment);
  } else if (method == "gmin") {
    witness = distribute_gmin_equidistant(task.target, task.fragment, task.spec.distance);
  } else if (method == "krom") {
    witness = simplify_krom(task.target);
  } else if (method == "horn2") {
    witness = simplify_horn_two_models(task.target);
  } else if (method == "horn3") {
    witness = distribute_horn_three_models(task.target);
  } else if (method == "1cnf-gmax") {
    witness = distribute_1cnf_gmax_two_models(task.target);
  } else {
    fail(Errc::Usage, "unknown method '" + method + "'");
  }

  const auto elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();

  if (witness) {
    if (!out_dir.empty()) write_witness(out_dir, *witness);
    json doc = witness_json(*witness);
    doc["bounds"] = {{"max_profile_len", task.bounds.max_profile_len},
                     {"fresh_atoms", task.bounds.fresh_atoms}};
    doc["elapsed_ms"] = elapsed_ms;
    emit(doc, as_json, witness_text(*witness));
    return witness->verified ? 0 : kExitError;
  }

  std::string line = "UNDISTRIBUTABLE within bounds len=" +
                     std::to_string(cert->max_profile_len) +
                     " fresh=" + std::to_string(cert->fresh_atoms) + "\n";
  if (task.bounds.fresh_atoms > 0)
    line += "# note: fresh-atom search fixes the constraint to the closure with "
            "auxiliary atoms false; sound but possibly incomplete\n";
  json doc;
  doc["undistributable"] = true;
  doc["certificate"] = {{"universe_size", cert->universe_size},
                        {"fresh_atoms", cert->fresh_atoms},
                        {"max_profile_len", cert->max_profile_len},
                        {"candidates", cert->candidates},
                        {"profiles_examined", cert->profiles_examined}};
  if (task.bounds.fresh_atoms > 0)
    doc["caveat"] =
        "fresh-atom search fixes the constraint to the closure with auxiliary "
        "atoms false; sound but possibly incomplete";
  doc["elapsed_ms"] = elapsed_ms;
  emit(doc, as_json, line);
  return kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"belief merging and knowledge distribution over propositional fragments"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string fragment_name = "horn", distance_name = "hamming", agg_name = "sum";
  std::string kb_path, models_path, constraint_path, witness_dir, out_dir;
  std::vector<std::string> profile_paths;
  std::string method = "auto", mode_name = "distribute";
  std::string w1_text, w2_text;
  int max_len = 1, fresh_atoms = 0, jobs = 1, max_atoms = 3, pairs = 50;
  unsigned seed = 0;
  std::uint64_t node_budget = node_budget_default();
  bool show_matrix = false;

  auto add_common = [&](CLI::App* cmd, bool needs_atoms = true) {
    if (needs_atoms) cmd->add_option("--atoms", common.atoms, "comma-separated atom names");
    cmd->add_flag("--json", common.as_json, "machine-readable output");
  };

  auto* models_cmd = app.add_subcommand("models", "print the models of a KB");
  models_cmd->add_option("--kb", kb_path, "KB file")->required();
  add_common(models_cmd);

  auto* closure_cmd = app.add_subcommand("closure", "close a model set under a fragment");
  closure_cmd->add_option("--fragment", fragment_name, "full|horn|krom|1cnf");
  closure_cmd->add_option("--models", models_path, "model-set file")->required();
  add_common(closure_cmd);

  auto* expressible_cmd =
      app.add_subcommand("expressible", "is a model set expressible in a fragment");
  expressible_cmd->add_option("--fragment", fragment_name, "full|horn|krom|1cnf");
  expressible_cmd->add_option("--models", models_path, "model-set file")->required();
  add_common(expressible_cmd);

  auto* synthesize_cmd = app.add_subcommand("synthesize", "build a fragment KB for a closed set");
  synthesize_cmd->add_option("--fragment", fragment_name, "full|horn|krom|1cnf");
  synthesize_cmd->add_option("--models", models_path, "model-set file, must be closed")->required();
  add_common(synthesize_cmd);

  auto* distances_cmd = app.add_subcommand("distances", "distance table for a profile");
  distances_cmd->add_option("--distance", distance_name, "drastic|hamming");
  distances_cmd->add_option("--agg", agg_name, "sum|gmax|gmin");
  distances_cmd->add_option("--profile", profile_paths, "KB files, one per base")->required();
  distances_cmd->add_option("--constraint", constraint_path, "KB file")->required();
  add_common(distances_cmd);

  auto* merge_cmd = app.add_subcommand("merge", "merge a profile under a constraint");
  merge_cmd->add_option("--distance", distance_name, "drastic|hamming");
  merge_cmd->add_option("--agg", agg_name, "sum|gmax|gmin");
  merge_cmd->add_option("--profile", profile_paths, "KB files, one per base")->required();
  merge_cmd->add_option("--constraint", constraint_path, "KB file")->required();
  merge_cmd->add_flag("--show-matrix", show_matrix, "append the distance table");
  add_common(merge_cmd);

  auto* distribute_cmd = app.add_subcommand("distribute", "find a fragment profile merging to a KB");
  distribute_cmd->add_option("--fragment", fragment_name, "full|horn|krom|1cnf");
  distribute_cmd->add_option("--distance", distance_name, "drastic|hamming");
  distribute_cmd->add_option("--agg", agg_name, "sum|gmax|gmin");
  distribute_cmd->add_option("--kb", kb_path, "target KB file")->required();
  distribute_cmd->add_option("--method", method,
                             "auto|drastic|gmin|krom|horn2|horn3|1cnf-gmax|search");
  distribute_cmd->add_option("--max-len", max_len, "profile length bound for search");
  distribute_cmd->add_option("--fresh-atoms", fresh_atoms, "auxiliary atoms for search");
  distribute_cmd->add_flag("--simplify", "restrict to single-base profiles");
  distribute_cmd->add_option("--jobs", jobs);
  distribute_cmd->add_option("--node-budget", node_budget);
  distribute_cmd->add_option("--out", out_dir, "write the witness directory here");
  add_common(distribute_cmd);

  auto* search_cmd = app.add_subcommand("search", "exhaustive bounded witness search");
  search_cmd->add_option("--fragment", fragment_name, "full|horn|krom|1cnf");
  search_cmd->add_option("--distance", distance_name, "drastic|hamming");
  search_cmd->add_option("--agg", agg_name, "sum|gmax|gmin");
  search_cmd->add_option("--kb", kb_path, "target KB file")->required();
  search_cmd->add_option("--mode", mode_name, "distribute|simplify");
  search_cmd->add_option("--max-len", max_len);
  search_cmd->add_option("--fresh-atoms", fresh_atoms);
  search_cmd->add_option("--jobs", jobs);
  search_cmd->add_option("--node-budget", node_budget);
  search_cmd->add_option("--out", out_dir);
  add_common(search_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "re-verify a witness directory");
  verify_cmd->add_option("--witness", witness_dir, "witness directory")->required();
  add_common(verify_cmd, /*needs_atoms=*/false);

  auto* critical_cmd = app.add_subcommand("critical-pairs", "1CNF non-expressibility witnesses");
  critical_cmd->add_option("--kb", kb_path, "target KB file")->required();
  add_common(critical_cmd);

  auto* lemma_cmd = app.add_subcommand("check-lemma", "meet/join distance equality for 1CNF profiles");
  lemma_cmd->add_option("--profile", profile_paths, "1CNF KB files")->required();
  lemma_cmd->add_option("--w1", w1_text);
  lemma_cmd->add_option("--w2", w2_text);
  lemma_cmd->add_option("--pairs", pairs, "random pairs when --w1/--w2 are omitted");
  lemma_cmd->add_option("--seed", seed);
  add_common(lemma_cmd);

  auto* report_cmd = app.add_subcommand("report", "distribution evidence table at desk scale");
  report_cmd->add_option("--max-atoms", max_atoms, "universe sizes to sweep (1..3)");
  report_cmd->add_option("--max-len", max_len)->default_val(3);
  report_cmd->add_option("--jobs", jobs);
  report_cmd->add_option("--node-budget", node_budget);
  add_common(report_cmd, /*needs_atoms=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints the usage diagnostic
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (models_cmd->parsed()) {
      const AtomUniverse u = universe_of(common);
      const KnowledgeBase kb = load_kb(kb_path, u);
      json doc{{"command", "models"}, {"universe", u.names()}};
      json lines = json::array();
      for (Interpretation w : kb.models().members()) lines.push_back(format_interpretation(w, u));
      doc["models"] = lines;
      emit(doc, common.as_json, format_model_set(kb.models()));
      return 0;
    }

    if (closure_cmd->parsed()) {
      const AtomUniverse u = universe_of(common);
      const ModelSet closed =
          closure(load_models(models_path, u), fragment_from_string(fragment_name));
      json doc{{"command", "closure"}, {"universe", u.names()}};
      json lines = json::array();
      for (Interpretation w : closed.members()) lines.push_back(format_interpretation(w, u));
      doc["models"] = lines;
      emit(doc, common.as_json, format_model_set(closed));
      return 0;
    }

    if (expressible_cmd->parsed()) {
      const AtomUniverse u = universe_of(common);
      const bool yes =
          is_expressible(load_models(models_path, u), fragment_from_string(fragment_name));
      emit(json{{"command", "expressible"}, {"expressible", yes}}, common.as_json,
           yes ? "yes\n" : "no\n");
      return yes ? 0 : kExitNegative;
    }

    if (synthesize_cmd->parsed()) {
      const AtomUniverse u = universe_of(common);
      const KnowledgeBase kb =
          synthesize_kb(load_models(models_path, u), fragment_from_string(fragment_name));
      emit(json{{"command", "synthesize"}, {"kb", format_kb(kb)}}, common.as_json, format_kb(kb));
      return 0;
    }

    if (distances_cmd->parsed() || merge_cmd->parsed()) {
      const AtomUniverse u = universe_of(common);
      const Profile profile = load_profile(profile_paths, u);
      const KnowledgeBase constraint = load_kb(constraint_path, u);
      const MergeSpec spec{distance_from_string(distance_name),
                           aggregation_from_string(agg_name)};
      const MergeResult result = merge(profile, constraint, spec, /*want_matrix=*/true);
      const json doc = matrix_report(profile, constraint, spec, result);
      if (distances_cmd->parsed()) {
        emit(doc, common.as_json, render_matrix_text(doc));
      } else {
        std::string text = format_model_set(result.models);
        if (show_matrix) text += "\n" + render_matrix_text(doc);
        emit(doc, common.as_json, text);
      }
      return 0;
    }

    if (distribute_cmd->parsed() || search_cmd->parsed()) {
      const AtomUniverse u = universe_of(common);
      const KnowledgeBase kb = load_kb(kb_path, u);
      if (!kb.consistent()) fail(Errc::InconsistentKb, "target KB has no models");
      DistributionMode mode = DistributionMode::Distribute;
      if (search_cmd->parsed()) {
        if (mode_name == "simplify") mode = DistributionMode::Simplify;
        else if (mode_name != "distribute") fail(Errc::Usage, "unknown mode '" + mode_name + "'");
        method = "search";
      } else if (distribute_cmd->count("--simplify") > 0) {
        mode = DistributionMode::Simplify;
      }
      DistributionTask task{kb.models(),
                            fragment_from_string(fragment_name),
                            {distance_from_string(distance_name),
                             aggregation_from_string(agg_name)},
                            mode,
                            {max_len, fresh_atoms, node_budget}};
      return run_distribution(task, method, jobs, out_dir, common.as_json);
    }

    if (verify_cmd->parsed()) {
      DistributionWitness w = read_witness(witness_dir);
      const bool ok = verify_witness(w);
      json doc = witness_json(w);
      doc["command"] = "verify";
      emit(doc, common.as_json, std::string("verified: ") + (ok ? "yes" : "no") + "\n");
      return ok ? 0 : kExitNegative;
    }

    if (critical_cmd->parsed()) {
      const AtomUniverse u = universe_of(common);
      const KnowledgeBase kb = load_kb(kb_path, u);
      const std::vector<CriticalPair> pairs_found = find_critical_pairs(kb.models());
      json doc{{"command", "critical-pairs"}, {"universe", u.names()}};
      json list = json::array();
      std::string text;
      for (const CriticalPair& p : pairs_found) {
        list.push_back(json{{"case", p.case_id},
                            {"w1", format_interpretation(p.w1, u)},
                            {"w2", format_interpretation(p.w2, u)}});
        text += "case " + std::to_string(p.case_id) + ": w1=" + format_interpretation(p.w1, u) +
                " w2=" + format_interpretation(p.w2, u) + "\n";
      }
      doc["pairs"] = list;
      if (pairs_found.empty()) text = "none\n";
      emit(doc, common.as_json, text);
      return 0;
    }

    if (lemma_cmd->parsed()) {
      const AtomUniverse u = universe_of(common);
      const Profile profile = load_profile(profile_paths, u);
      std::vector<std::pair<Interpretation, Interpretation>> checks;
      if (!w1_text.empty() || !w2_text.empty()) {
        checks.emplace_back(parse_interpretation(w1_text, u), parse_interpretation(w2_text, u));
      } else {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<std::uint32_t> pick(0, u.full_mask());
        for (int i = 0; i < pairs; ++i)
          checks.emplace_back(Interpretation{pick(rng)}, Interpretation{pick(rng)});
      }
      for (const auto& [a, b] : checks) {
        if (!check_cap_cup_lemma(profile, a, b)) {
          const std::string text = "counterexample: w1=" + format_interpretation(a, u) +
                                   " w2=" + format_interpretation(b, u) + "\n";
          emit(json{{"command", "check-lemma"}, {"holds", false},
                    {"w1", format_interpretation(a, u)}, {"w2", format_interpretation(b, u)}},
               common.as_json, text);
          return kExitNegative;
        }
      }
      emit(json{{"command", "check-lemma"}, {"holds", true}, {"pairs", checks.size()}},
           common.as_json, "holds (" + std::to_string(checks.size()) + " pairs checked)\n");
      return 0;
    }

    if (report_cmd->parsed()) {
      const auto started = std::chrono::steady_clock::now();
      json doc = build_summary_report(max_atoms, max_len, node_budget, jobs);
      doc["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
      emit(doc, common.as_json, render_summary_markdown(doc));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
