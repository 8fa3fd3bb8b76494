// Copyright 2026 The infoex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "infoex/equilibrium.hpp"
#include "infoex/errors.hpp"
#include "infoex/gameplay.hpp"
#include "infoex/graph.hpp"
#include "infoex/mis.hpp"
#include "infoex/model.hpp"
#include "infoex/rate.hpp"
#include "infoex/report.hpp"

namespace infoex::cli {

namespace {

struct Common {
  std::string format = "plain";
  std::uint64_t enum_budget = Budgets{}.enumeration;
  std::uint64_t mis_budget = Budgets{}.mis;
  std::uint64_t subset_budget = Budgets{}.subset;
  bool no_timing = false;

  Budgets budgets() const {
    Budgets b;
    b.enumeration = enum_budget;
    b.mis = mis_budget;
    b.subset = subset_budget;
    return b;
  }
};

struct Options {
  std::string model = "example1";
  std::size_t n = 1;
  std::size_t n_max = 3;
  std::string type;
  bool do_export = false;
  std::string mis = "exact";
  std::string mode = "auto";
  std::uint64_t seed = 0;
  bool no_prune = false;
  std::size_t cap = 16;
  std::string strategies = "all";
  std::size_t samples = 50;
  bool solve = false;
  bool plot_data = false;
  std::string image;
  std::string fallback;
  std::string truth = "all";
  std::string tie = "adversarial";
  std::string write_path;
};

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

std::string set_label(const Model& model, const SequenceSpace& space, const std::vector<SeqId>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += sequence_label(model, space, members[i]);
  }
  return out + "}";
}

std::vector<SeqId> parse_set(const Model& model, const SequenceSpace& space, const std::string& text) {
  std::vector<SeqId> out;
  std::string body = text;
  if (!body.empty() && body.front() == '{') body.erase(0, 1);
  if (!body.empty() && body.back() == '}') body.pop_back();
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto b = part.find_first_not_of(' ');
    auto e = part.find_last_not_of(' ');
    if (b == std::string::npos) continue;
    out.push_back(space.encode(parse_sequence(model, space.horizon(), part.substr(b, e - b + 1))));
  }
  if (out.empty()) throw InvalidArgument("empty sequence set '" + text + "'");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TypeId require_type(const Model& model, const std::string& label) {
  auto t = model.find_type(label);
  if (!t) throw InvalidArgument("unknown type '" + label + "'");
  return *t;
}

void add_header(Report& report, const std::vector<std::string>& args, const Model& model) {
  report.add("command", join_args(args));
  report.add("model_digest", "fnv1a64:" + fnv1a64_hex(serialize_model(model)));
}

// ---- subcommands ----------------------------------------------------------

int cmd_validate(const Options& o, const Model& model, Report& report) {
  auto& r = report.section("result");
  r.add("valid", true);
  r.list("alphabet", model.alphabet());
  r.list("types", model.type_labels());
  auto& types = r.list("type_details");
  for (TypeId t : model.type_ids()) {
    auto& item = types.item();
    item.add("type", model.type_label(t));
    item.add("prior", model.prior(t).str());
    item.add("class", classify_type(model, t) == HonestyClass::kHonest ? "honest" : "other");
  }
  if (!o.write_path.empty()) {
    std::ofstream f(o.write_path, std::ios::binary);
    if (!f) throw Error("cannot write '" + o.write_path + "'");
    f << serialize_model(model);
    r.add("written", o.write_path);
  }
  return 0;
}

void describe_graph(ReportNode& node, const Model& model, const SenderGraph& g, const std::string& mis_mode,
                    const Budgets& budgets) {
  SequenceSpace space(model, g.horizon(), budgets);
  node.add("graph", g.provenance());
  node.add("n", static_cast<std::uint64_t>(g.horizon()));
  node.add("vertices", g.vertex_count());
  node.add("edges", g.edge_count());
  if (mis_mode == "none") return;
  MisMode mode = mis_mode == "greedy" ? MisMode::kGreedy : MisMode::kExact;
  if (mode == MisMode::kExact && g.vertex_count() > budgets.mis) mode = MisMode::kGreedy;
  auto mis = max_independent_set(g, mode, budgets);
  if (mis.certified) {
    node.add("alpha", static_cast<std::uint64_t>(mis.size));
  } else {
    node.add("independent_set_size", static_cast<std::uint64_t>(mis.size));
  }
  node.add("certified", mis.certified);
  node.add("independent_set", set_label(model, space, mis.members));
}

int cmd_graph(const Options& o, const Model& model, const Budgets& budgets, Report& report, std::ostream& out,
              bool& raw) {
  std::vector<SenderGraph> graphs;
  for (TypeId t : model.type_ids()) graphs.push_back(build_sender_graph(model, t, o.n, budgets));
  SenderGraph united = union_graph(graphs);

  auto pick = [&]() -> const SenderGraph& {
    if (o.type.empty() || o.type == "union") return united;
    return graphs[index_of(require_type(model, o.type))];
  };

  if (o.do_export) {
    out << export_dot(pick(), model);
    raw = true;
    return 0;
  }
  auto& list = report.list("result");
  if (!o.type.empty()) {
    describe_graph(list.item(), model, pick(), o.mis, budgets);
  } else {
    for (const auto& g : graphs) describe_graph(list.item(), model, g, o.mis, budgets);
    describe_graph(list.item(), model, united, o.mis, budgets);
  }
  return 0;
}

int cmd_solve(const Options& o, const Model& model, const Budgets& budgets, Report& report) {
  SequenceSpace space(model, o.n, budgets);
  std::string mode = o.mode;
  if (mode == "auto") mode = space.size() <= budgets.subset ? "exact" : "heuristic";
  EquilibriumResult result;
  if (mode == "exact") {
    ExactOptions opts;
    opts.prune = !o.no_prune;
    opts.report_cap = o.cap;
    result = solve_exact(model, o.n, budgets, opts);
  } else {
    result = solve_heuristic(model, o.n, o.seed, budgets);
  }
  SequenceScorer scorer(model, space);
  auto q = make_questionnaire(scorer, result.representative);

  auto& r = report.section("result");
  r.add("n", static_cast<std::uint64_t>(o.n));
  r.add("mode", mode);
  r.add("certified", result.certified);
  r.add("optimum", result.optimum.str());
  r.add("rate", format_real(rate(result.optimum, o.n)));
  r.add("questionnaire", set_label(model, space, result.representative));
  r.add("fallback", sequence_label(model, space, result.representative.front()));
  auto& parts = r.list("partitions");
  for (TypeId t : model.type_ids()) {
    auto& item = parts.item();
    item.add("type", model.type_label(t));
    item.add("recovered", set_label(model, space, q.partitions[index_of(t)]));
  }
  std::vector<std::string> maximizers;
  for (const auto& m : result.maximizers) maximizers.push_back(set_label(model, space, m));
  r.list("maximizers", maximizers);
  auto& stats = r.section("stats");
  stats.add("subsets_examined", result.stats.subsets_examined);
  stats.add("subtrees_pruned", result.stats.subtrees_pruned);
  if (result.mode == SearchMode::kHeuristic) stats.add("moves", result.stats.moves);
  return 0;
}

int cmd_oracle(const Options& o, const Model& model, const Budgets& budgets, Report& report) {
  SequenceSpace space(model, o.n, budgets);
  SequenceScorer scorer(model, space);
  const std::uint32_t size = space.size();
  std::uint64_t checked = 0, strategies = 0, mismatches = 0;
  std::vector<std::string> failures;

  auto record = [&](const ReceiverStrategy& g) {
    ++strategies;
    if (dstar(scorer, g) != receiver_objective(scorer, g.image())) {
      ++mismatches;
      if (failures.size() < 8) failures.push_back(set_label(model, space, g.image()));
    }
  };

  std::string what;
  if (o.strategies == "all") {
    if (size > std::min<std::uint64_t>(budgets.subset, 63)) throw BudgetExceeded("subset", budgets.subset, size);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); ++mask) {
      std::vector<SeqId> members;
      for (SeqId x = 0; x < size; ++x) {
        if ((mask >> x) & 1u) members.push_back(x);
      }
      ++checked;
      // Every fallback choice must give the same value.
      for (SeqId fb : members) record(canonical_strategy(space, members, fb));
    }
    what = "image sets";
  } else if (o.strategies == "maps") {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < size; ++i) {
      total *= size;
      if (total > budgets.enumeration) throw BudgetExceeded("enumeration", budgets.enumeration, total);
    }
    std::vector<SeqId> map(size, 0);
    while (true) {
      ++checked;
      record(ReceiverStrategy(o.n, map));
      std::size_t i = 0;
      while (i < size && ++map[i] == size) map[i++] = 0;
      if (i == size) break;
    }
    what = "maps";
  } else if (o.strategies == "random") {
    std::mt19937_64 rng(o.seed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t s = 0; s < o.samples; ++s) {
      std::vector<SeqId> members;
      for (SeqId x = 0; x < size; ++x) {
        if (coin(rng)) members.push_back(x);
      }
      if (members.empty()) members.push_back(std::uniform_int_distribution<SeqId>(0, size - 1)(rng));
      SeqId fb = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
      ++checked;
      record(canonical_strategy(space, members, fb));
    }
    what = "random image sets";
  } else {
    throw InvalidArgument("unknown strategy family '" + o.strategies + "'");
  }

  auto& r = report.section("result");
  r.add("n", static_cast<std::uint64_t>(o.n));
  const std::string summary = std::to_string(checked) + " " + what + " × " + std::to_string(model.type_count()) +
                              (model.type_count() == 1 ? " type" : " types");
  r.add("dstar_equals_objective", (mismatches == 0 ? "verified, " : "FAILED, ") + summary);
  r.add("strategies_checked", strategies);
  r.add("mismatches", mismatches);
  if (!failures.empty()) r.list("mismatched_images", failures);
  return mismatches == 0 ? 0 : 1;
}

int cmd_bounds(const Options& o, const Model& model, const Budgets& budgets, Report& report, std::ostream& out,
               bool& raw) {
  if (o.plot_data) {
    out << "# n lower achieved upper\n";
    for (std::size_t n = 1; n <= o.n; ++n) {
      auto b = finite_bounds(model, n, o.solve, budgets, o.seed);
      out << n << ' ' << format_real(b.lower) << ' ' << (b.achieved ? format_real(*b.achieved) : "nan") << ' '
          << format_real(b.upper) << '\n';
    }
    raw = true;
    return 0;
  }
  auto b = finite_bounds(model, o.n, o.solve, budgets, o.seed);
  auto& r = report.section("result");
  r.add("n", static_cast<std::uint64_t>(o.n));
  r.add("lower_alpha_union", b.union_alpha);
  r.add("lower_certified", b.lower_certified);
  auto& alphas = r.list("type_alpha");
  for (TypeId t : model.type_ids()) {
    auto& item = alphas.item();
    item.add("type", model.type_label(t));
    item.add("alpha", b.type_alpha[index_of(t)]);
  }
  r.add("upper_value", b.upper_value.str());
  r.add("upper_certified", b.upper_certified);
  if (b.achieved_value) {
    r.add("achieved_value", b.achieved_value->str());
    r.add("achieved_certified", b.achieved_certified);
  }
  r.add("lower", format_real(b.lower));
  if (b.achieved) r.add("achieved", format_real(*b.achieved));
  r.add("upper", format_real(b.upper));
  if (b.achieved_value) {
    const Rational lower(static_cast<std::int64_t>(b.union_alpha));
    r.add("sandwich_holds", lower <= *b.achieved_value && *b.achieved_value <= b.upper_value);
  }
  return 0;
}

int cmd_asymptotic(const Options& o, const Model& model, const Budgets& budgets, Report& report) {
  auto a = asymptotic_bounds(model, o.n_max, budgets);
  auto& r = report.section("result");
  r.add("n_max", static_cast<std::uint64_t>(o.n_max));
  r.add("lambda_star", model.type_label(a.lambda_star));
  auto& alphas = r.list("type_alpha");
  for (TypeId t : model.type_ids()) {
    auto& item = alphas.item();
    item.add("type", model.type_label(t));
    item.add("alpha", a.type_alpha[index_of(t)]);
  }
  r.add("union_floor", a.union_floor);
  std::vector<std::string> star, xi, product;
  bool floor_holds = true;
  std::uint64_t power = 1;
  for (std::size_t n = 1; n <= o.n_max; ++n) {
    star.push_back(std::to_string(a.star_alpha[n - 1]));
    xi.push_back(format_real(a.xi_estimates[n - 1]));
    power *= a.union_floor;
    auto u = max_independent_set(build_union_graph(model, n, budgets), MisMode::kExact, budgets).size;
    product.push_back(std::to_string(u));
    floor_holds = floor_holds && u >= power;
  }
  r.list("star_alpha", star);
  r.list("xi_estimates", xi);
  r.add("best_lower", format_real(a.best_lower));
  r.list("union_alpha", product);
  r.add("product_floor_holds", floor_holds);
  r.add("divisibility_chain_monotone", a.divisibility_chain_monotone);
  auto& ws = r.list("fekete_witnesses");
  bool all_hold = true;
  for (const auto& w : a.witnesses) {
    auto& item = ws.item();
    item.add("m", static_cast<std::uint64_t>(w.m));
    item.add("n", static_cast<std::uint64_t>(w.n));
    item.add("alpha_m", w.alpha_m);
    item.add("alpha_n", w.alpha_n);
    item.add("alpha_m_plus_n", w.alpha_sum);
    item.add("holds", w.holds);
    all_hold = all_hold && w.holds;
  }
  return all_hold && floor_holds && a.divisibility_chain_monotone ? 0 : 1;
}

int cmd_simulate(const Options& o, const Model& model, const Budgets& budgets, Report& report) {
  SequenceSpace space(model, o.n, budgets);
  SequenceScorer scorer(model, space);
  const TypeId t = require_type(model, o.type);
  ReceiverStrategy g = identity_strategy(space);
  if (!o.image.empty()) {
    auto members = parse_set(model, space, o.image);
    SeqId fb = o.fallback.empty() ? members.front() : space.encode(parse_sequence(model, o.n, o.fallback));
    g = canonical_strategy(space, members, fb);
  }
  TieRule rule;
  if (o.tie == "adversarial") {
    rule.policy = TiePolicy::kAdversarial;
  } else if (o.tie == "lexicographic") {
    rule.policy = TiePolicy::kLexicographic;
  } else if (o.tie == "random") {
    rule.policy = TiePolicy::kRandom;
    rule.seed = o.seed;
  } else {
    throw InvalidArgument("unknown tie policy '" + o.tie + "'");
  }

  std::vector<SeqId> truths;
  if (o.truth == "all") {
    for (SeqId x = 0; x < space.size(); ++x) truths.push_back(x);
  } else {
    truths = parse_set(model, space, o.truth);
  }

  auto& r = report.section("result");
  r.add("n", static_cast<std::uint64_t>(o.n));
  r.add("type", model.type_label(t));
  r.add("image", set_label(model, space, g.image()));
  r.add("tie_policy", o.tie);
  auto& sessions = r.list("sessions");
  std::uint64_t recovered = 0;
  for (SeqId x : truths) {
    auto s = simulate(scorer, g, t, x, rule);
    auto& item = sessions.item();
    item.add("truth", sequence_label(model, space, x));
    item.add("reported", sequence_label(model, space, s.reported));
    item.add("decoded", sequence_label(model, space, s.decoded));
    item.add("recovered", s.recovered);
    recovered += s.recovered ? 1 : 0;
  }
  r.add("recovered_count", recovered);
  r.add("robust_recovery_set", set_label(model, space, robust_recovery_set(scorer, g, t)));
  r.add("optimistic_recovery_set_diagnostic", set_label(model, space, optimistic_recovery_set(scorer, g, t)));
  r.add("dstar", dstar(scorer, g).str());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal questionnaires for strategic senders: equilibria, recovery sets and rate bounds", "infoex"};
  app.require_subcommand(1);
  Common common;
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Report format")->check(CLI::IsMember({"plain", "machine"}));
    sub->add_option("--enum-budget", common.enum_budget, "Max |X|^n sequences materialized");
    sub->add_option("--mis-budget", common.mis_budget, "Max vertices for exact independence number");
    sub->add_option("--subset-budget", common.subset_budget, "Max |X|^n for exhaustive questionnaire search");
    sub->add_flag("--no-timing", common.no_timing, "Omit the timing field");
  };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", o.model, "Model file path or 'example1'")->required();
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Horizon n")->check(CLI::PositiveNumber); };

  auto* validate = app.add_subcommand("validate", "Parse and validate a model");
  add_model(validate);
  validate->add_option("--write", o.write_path, "Write the canonical model file here");
  add_common(validate);

  auto* example = app.add_subcommand("example", "Print the built-in two-type model file");

  auto* graph = app.add_subcommand("graph", "Sender graphs: statistics, independent sets, DOT export");
  add_model(graph);
  add_n(graph);
  graph->add_option("--type", o.type, "Type label, or 'union'");
  graph->add_flag("--export", o.do_export, "Print DOT instead of a report");
  graph->add_option("--mis", o.mis, "Independent set mode")->check(CLI::IsMember({"exact", "greedy", "none"}));
  add_common(graph);

  auto* solve = app.add_subcommand("solve", "Optimal questionnaire");
  add_model(solve);
  add_n(solve);
  solve->add_option("--mode", o.mode, "Search mode")->check(CLI::IsMember({"auto", "exact", "heuristic"}));
  solve->add_option("--seed", o.seed, "Heuristic seed");
  solve->add_flag("--no-prune", o.no_prune, "Disable dominance pruning in exact mode");
  solve->add_option("--cap", o.cap, "Max maximizers reported");
  add_common(solve);

  auto* oracle = app.add_subcommand("oracle-check", "Check D*(g) against the questionnaire objective");
  add_model(oracle);
  add_n(oracle);
  oracle->add_option("--strategies", o.strategies, "Strategy family")
      ->check(CLI::IsMember({"all", "maps", "random"}));
  oracle->add_option("--samples", o.samples, "Samples for --strategies random");
  oracle->add_option("--seed", o.seed, "Seed for --strategies random");
  add_common(oracle);

  auto* bounds = app.add_subcommand("bounds", "Finite-n rate bounds");
  add_model(bounds);
  add_n(bounds);
  bounds->add_flag("--solve", o.solve, "Also solve the equilibrium");
  bounds->add_option("--seed", o.seed, "Heuristic seed when the exact search is over budget");
  bounds->add_flag("--plot-data", o.plot_data, "Print an (n, lower, achieved, upper) table for 1..n");
  add_common(bounds);

  auto* asymptotic = app.add_subcommand("asymptotic", "Best-type growth estimates and supermultiplicativity");
  add_model(asymptotic);
  asymptotic->add_option("--n-max", o.n_max, "Largest horizon")->check(CLI::PositiveNumber);
  add_common(asymptotic);

  auto* sim = app.add_subcommand("simulate", "Play sessions against a committed questionnaire");
  add_model(sim);
  add_n(sim);
  sim->add_option("--type", o.type, "Sender type label")->required();
  sim->add_option("--image", o.image, "Questionnaire, e.g. \"0,2\" (default: every sequence)");
  sim->add_option("--fallback", o.fallback, "Fallback member (default: smallest)");
  sim->add_option("--truth", o.truth, "Truth sequence(s) or 'all'");
  sim->add_option("--tie", o.tie, "Tie policy")->check(CLI::IsMember({"adversarial", "lexicographic", "random"}));
  sim->add_option("--seed", o.seed, "Seed for --tie random");
  add_common(sim);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  if (example->parsed()) {
    out << example1_text();
    return 0;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const Budgets budgets = common.budgets();
    const Model model = load_model(o.model);
    Report report;
    add_header(report, args, model);
    bool raw = false;
    int status = 0;
    if (validate->parsed()) {
      status = cmd_validate(o, model, report);
    } else if (graph->parsed()) {
      status = cmd_graph(o, model, budgets, report, out, raw);
    } else if (solve->parsed()) {
      status = cmd_solve(o, model, budgets, report);
    } else if (oracle->parsed()) {
      status = cmd_oracle(o, model, budgets, report);
    } else if (bounds->parsed()) {
      status = cmd_bounds(o, model, budgets, report, out, raw);
    } else if (asymptotic->parsed()) {
      status = cmd_asymptotic(o, model, budgets, report);
    } else if (sim->parsed()) {
      status = cmd_simulate(o, model, budgets, report);
    }
    if (raw) return status;
    if (!common.no_timing) {
      report.set_timing_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
    out << report.render(common.format == "machine" ? ReportFormat::kMachine : ReportFormat::kPlain);
    return status;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what();
    if (e.budget() == "enumeration") err << " (raise with --enum-budget)";
    if (e.budget() == "mis") err << " (raise with --mis-budget)";
    if (e.budget() == "subset") err << " (raise with --subset-budget)";
    err << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace infoex::cli
