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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fixtures.hpp"
#include "infoex/equilibrium.hpp"
#include "infoex/gameplay.hpp"
#include "infoex/graph.hpp"
#include "infoex/mis.hpp"
#include "infoex/model.hpp"
#include "infoex/rate.hpp"
#include "infoex/reference.hpp"
#include "infoex/strategy.hpp"

using namespace infoex;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failures of one criterion; the first few are printed.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) std::fprintf(stderr, "    failed: %s\n", what.c_str());
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

struct Instance {
  Model model;
  std::size_t n;
  std::string name;
};

/// 200 models cycling |X| over {2,3,4} and |types| over {1,2,3}, each
/// paired with n = 1 and n = 2.
std::vector<Instance> randomized_instances() {
  std::mt19937_64 rng(20261019);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < 200; ++i) {
    std::size_t k = 2 + i % 3;
    std::size_t types = 1 + (i / 3) % 3;
    Model m = testing::random_model(rng, k, types);
    for (std::size_t n : {1u, 2u}) {
      out.push_back({m, n, "model " + std::to_string(i) + " n=" + std::to_string(n)});
    }
  }
  return out;
}

/// Every nonempty image set when the space has at most 9 sequences,
/// otherwise 50 random nonempty ones.
std::vector<std::vector<SeqId>> image_sets(const SequenceSpace& space, std::mt19937_64& rng) {
  std::vector<std::vector<SeqId>> out;
  const auto size = static_cast<std::uint32_t>(space.size());
  if (size <= 9) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); ++mask) {
      out.push_back(testing::mask_to_ids(mask, size));
    }
    return out;
  }
  std::uniform_int_distribution<std::uint64_t> draw(1, (std::uint64_t{1} << size) - 1);
  for (int i = 0; i < 50; ++i) out.push_back(testing::mask_to_ids(draw(rng), size));
  return out;
}

std::string set_str(const std::vector<SeqId>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + "}";
}

bool report(int id, const std::string& title, const Check& c, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%zu checks%s%s)\n", c.ok() ? "PASS" : "FAIL", id, title.c_str(),
              c.checks(), detail.empty() ? "" : ", ", detail.c_str());
  if (!c.ok()) std::printf("    %zu failing checks\n", c.failures());
  std::fflush(stdout);
  return c.ok();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

// 1. Built-in example golden values.
bool criterion1() {
  Check c;
  auto start = Clock::now();
  Model m = example1_model();
  SequenceSpace space(m, 1);
  SequenceScorer scorer(m, space);

  c.expect(dstar(scorer, identity_strategy(space)) == Rational(1), "naive strategy value 1");
  std::vector<SeqId> tilde = {0, 2};
  c.expect(dstar(scorer, canonical_strategy(space, tilde)) == Rational(4, 3), "g~ value 4/3");

  auto solved = solve_exact(m, 1);
  c.expect(solved.optimum == Rational(4, 3), "exact optimum 4/3");
  c.expect(solved.certified, "exact optimum certified");

  for (SeqId x = 0; x < space.size(); ++x) {
    std::vector<SeqId> single = {x};
    Rational value = dstar(scorer, canonical_strategy(space, single));
    c.expect(value == Rational(1), "constant strategy value 1");
    c.expect(rate(value, 1) == 1.0, "constant strategy rate 1");
  }
  double elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "runtime under 1 s");
  return report(1, "built-in example golden values", c, fmt_seconds(elapsed));
}

// 2. D*(canonical strategy of I) equals the receiver objective of I.
bool criterion2(const std::vector<Instance>& instances) {
  Check c;
  auto start = Clock::now();
  std::mt19937_64 rng(7);
  std::size_t images = 0;
  for (const auto& inst : instances) {
    SequenceSpace space(inst.model, inst.n);
    SequenceScorer scorer(inst.model, space);
    for (const auto& members : image_sets(space, rng)) {
      ++images;
      auto g = canonical_strategy(space, members);
      c.expect(dstar(scorer, g) == receiver_objective(scorer, members),
               inst.name + " image " + set_str(members));
    }
  }
  double elapsed = seconds_since(start);
  c.expect(elapsed < 60.0, "runtime under 60 s");
  return report(2, "strategy value equals questionnaire objective", c,
                std::to_string(instances.size()) + " instances, " + std::to_string(images) + " image sets, " +
                    fmt_seconds(elapsed));
}

// 3. Exact search against unpruned enumeration from rational utilities.
bool criterion3(const std::vector<Instance>& instances) {
  Check c;
  std::size_t solved = 0;
  for (const auto& inst : instances) {
    SequenceSpace space(inst.model, inst.n);
    if (space.size() > 9) continue;
    ++solved;
    auto truth = reference::max_objective(inst.model, inst.n);
    ExactOptions all;
    all.report_cap = 1u << 10;
    ExactOptions unpruned = all;
    unpruned.prune = false;
    auto pruned_result = solve_exact(inst.model, inst.n, {}, all);
    auto full_result = solve_exact(inst.model, inst.n, {}, unpruned);
    c.expect(pruned_result.optimum == truth.optimum, inst.name + " pruned optimum");
    c.expect(full_result.optimum == truth.optimum, inst.name + " unpruned optimum");
    c.expect(full_result.maximizers == truth.maximizers, inst.name + " unpruned maximizers");
    c.expect(full_result.stats.subsets_examined == truth.subsets, inst.name + " unpruned subset count");
    bool subset = std::all_of(pruned_result.maximizers.begin(), pruned_result.maximizers.end(), [&](const auto& s) {
      return std::find(truth.maximizers.begin(), truth.maximizers.end(), s) != truth.maximizers.end();
    });
    c.expect(subset && !pruned_result.maximizers.empty(), inst.name + " pruned maximizers are maximizers");
    c.expect(receiver_objective(inst.model, [&] {
               std::vector<Sequence> seqs;
               for (SeqId x : pruned_result.representative) seqs.push_back(space.decode(x));
               return seqs;
             }()) == truth.optimum,
             inst.name + " representative attains the optimum");
  }
  return report(3, "exact search matches exhaustive enumeration", c,
                std::to_string(solved) + " instances with at most 9 sequences");
}

// 4. alpha(union) <= D*(g*) <= sum_t P(t) alpha(G_t), exactly.
bool criterion4(const std::vector<Instance>& instances) {
  Check c;
  std::size_t solved = 0;
  for (const auto& inst : instances) {
    SequenceSpace space(inst.model, inst.n);
    if (space.size() > 9) continue;
    ++solved;
    auto b = finite_bounds(inst.model, inst.n, true);
    c.expect(b.lower_certified && b.upper_certified && b.achieved_certified, inst.name + " certified");
    c.expect(b.achieved_value.has_value(), inst.name + " solved");
    if (!b.achieved_value) continue;
    c.expect(Rational(static_cast<std::int64_t>(b.union_alpha)) <= *b.achieved_value, inst.name + " lower bound");
    c.expect(*b.achieved_value <= b.upper_value, inst.name + " upper bound");
  }
  auto ex = finite_bounds(example1_model(), 1, true);
  c.expect(ex.union_alpha == 1, "example lower 1");
  c.expect(ex.achieved_value && *ex.achieved_value == Rational(4, 3), "example achieved 4/3");
  c.expect(ex.upper_value == Rational(5, 3), "example upper 5/3");
  return report(4, "independence-number sandwich", c,
                std::to_string(solved + 1) + " solved instances, example = (1, 4/3, 5/3)");
}

std::uint64_t exact_alpha(const SenderGraph& g) {
  return max_independent_set(g, MisMode::kExact).size;
}

// 5. Product floor, supermultiplicativity and built-in example asymptotics.
bool criterion5(const std::vector<Instance>& instances) {
  Check c;
  std::size_t models = 0;
  for (std::size_t i = 0; i < instances.size(); i += 2) {
    const auto& inst = instances[i];
    if (inst.model.alphabet_size() != 3) continue;
    ++models;
    std::uint64_t base = exact_alpha(build_union_graph(inst.model, 1));
    std::uint64_t power = 1;
    for (std::size_t n = 1; n <= 3; ++n) {
      power *= base;
      c.expect(exact_alpha(build_union_graph(inst.model, n)) >= power,
               inst.name + " product floor at n=" + std::to_string(n));
    }
    for (TypeId t : inst.model.type_ids()) {
      for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; m + n <= 4; ++n) {
          auto w = fekete_check(inst.model, t, m, n);
          c.expect(w.holds && w.alpha_sum >= w.alpha_m * w.alpha_n, inst.name + " supermultiplicativity");
        }
      }
    }
  }

  Model ex = example1_model();
  auto a = asymptotic_bounds(ex, 4);
  c.expect(ex.type_label(a.lambda_star) == "h", "example lambda* = h");
  c.expect(a.xi_estimates.size() == 4, "example four estimates");
  for (double xi : a.xi_estimates) c.expect(xi == 3.0, "example xi estimate 3");
  c.expect(a.divisibility_chain_monotone, "example estimate chain");
  TypeId d = *ex.find_type("d");
  for (std::size_t n = 1; n <= 4; ++n) {
    auto g = build_sender_graph(ex, d, n);
    const std::uint64_t v = g.vertex_count();
    // alpha = 1 exactly when every pair of vertices is adjacent.
    c.expect(g.edge_count() == v * (v - 1) / 2, "G_d^" + std::to_string(n) + " is complete");
    c.expect(exact_alpha(g) == 1, "alpha(G_d^" + std::to_string(n) + ") = 1");
    if (v <= 24) c.expect(reference::brute_force_alpha(g) == 1, "brute-force alpha(G_d^n) = 1");
  }
  return report(5, "product floor, supermultiplicativity and built-in example asymptotics", c,
                std::to_string(models) + " models with |X| = 3");
}

/// Random model variant whose type 0 is honest: its diagonal strictly
/// dominates every column.
Model with_honest_type(const Model& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> util(-3, 3);
  std::vector<Model::Table> tables;
  for (TypeId t : m.type_ids()) tables.push_back(m.table(t));
  for (std::size_t r = 0; r < m.alphabet_size(); ++r) {
    for (std::size_t x = 0; x < m.alphabet_size(); ++x) tables[0][r][x] = Rational(r == x ? 4 : util(rng));
  }
  std::vector<Rational> prior;
  for (TypeId t : m.type_ids()) prior.push_back(m.prior(t));
  return Model(m.alphabet(), m.type_labels(), prior, tables);
}

// 6. Honest types recover the whole image; adversarial play realizes the
// robust recovery set.
bool criterion6(const std::vector<Instance>& instances) {
  Check c;
  std::mt19937_64 rng(11);
  std::size_t honest_checked = 0;
  for (const auto& inst : instances) {
    std::vector<Model> models = {inst.model, with_honest_type(inst.model, rng)};
    models.push_back(example1_model());
    for (const Model& m : models) {
      SequenceSpace space(m, inst.n);
      SequenceScorer scorer(m, space);
      auto sets = image_sets(space, rng);
      if (sets.size() > 20) sets.resize(20);
      for (const auto& members : sets) {
        for (SeqId fallback : {members.front(), members.back()}) {
          auto g = canonical_strategy(space, members, fallback);
          for (TypeId t : m.type_ids()) {
            auto robust = robust_recovery_set(scorer, g, t);
            if (classify_type(m, t) == HonestyClass::kHonest) {
              ++honest_checked;
              c.expect(robust == g.image(), inst.name + " honest type recovers the image");
            }
            std::vector<SeqId> realized;
            for (SeqId x = 0; x < space.size(); ++x) {
              if (simulate(scorer, g, t, x, {TiePolicy::kAdversarial, 0}).recovered) realized.push_back(x);
            }
            c.expect(realized == robust, inst.name + " adversarial play realizes the robust set");
          }
        }
      }
    }
  }
  // Non-canonical strategies: every total map on the example at n = 1.
  Model ex = example1_model();
  SequenceSpace space(ex, 1);
  SequenceScorer scorer(ex, space);
  for (SeqId a = 0; a < 3; ++a) {
    for (SeqId b = 0; b < 3; ++b) {
      for (SeqId d = 0; d < 3; ++d) {
        ReceiverStrategy g(1, {a, b, d});
        for (TypeId t : ex.type_ids()) {
          auto robust = robust_recovery_set(scorer, g, t);
          if (classify_type(ex, t) == HonestyClass::kHonest) {
            ++honest_checked;
            c.expect(robust == g.image(), "example map honest identity");
          }
          std::vector<SeqId> realized;
          for (SeqId x = 0; x < 3; ++x) {
            if (simulate(scorer, g, t, x, {TiePolicy::kAdversarial, 0}).recovered) realized.push_back(x);
          }
          c.expect(realized == robust, "example map adversarial realizability");
        }
      }
    }
  }
  return report(6, "honest-type identity and adversarial realizability", c,
                std::to_string(honest_checked) + " honest type/strategy pairs");
}

std::string cli_output(const std::vector<std::string>& args, int* status) {
  std::ostringstream out, err;
  *status = cli::run(args, out, err);
  return out.str();
}

// 7. Determinism and model round-trip.
bool criterion7(const std::vector<Instance>& instances) {
  Check c;
  const std::vector<std::vector<std::string>> commands = {
      {"solve", "--model", "example1", "--n", "2", "--no-timing"},
      {"solve", "--model", "example1", "--n", "3", "--mode", "heuristic", "--seed", "9", "--no-timing"},
      {"bounds", "--model", "example1", "--n", "2", "--solve", "--no-timing", "--format", "machine"},
      {"graph", "--model", "example1", "--n", "2", "--no-timing"},
      {"asymptotic", "--model", "example1", "--n-max", "3", "--no-timing"},
      {"oracle-check", "--model", "example1", "--n", "2", "--strategies", "random", "--seed", "4", "--no-timing"},
      {"simulate", "--model", "example1", "--n", "2", "--type", "d", "--tie", "random", "--seed", "5",
       "--no-timing"},
  };
  for (const auto& args : commands) {
    int s1 = 0, s2 = 0;
    std::string a = cli_output(args, &s1);
    std::string b = cli_output(args, &s2);
    c.expect(s1 == 0 && s2 == 0, args[0] + " exits 0");
    c.expect(!a.empty() && a == b, args[0] + " byte-identical");
  }
  for (std::size_t i = 0; i < instances.size(); i += 2) {
    const Model& m = instances[i].model;
    std::string text = serialize_model(m);
    Model back = parse_model(text);
    c.expect(back == m, instances[i].name + " round-trip model");
    c.expect(serialize_model(back) == text, instances[i].name + " round-trip text");
  }
  Model ex = example1_model();
  c.expect(parse_model(serialize_model(ex)) == ex, "example round-trip");
  return report(7, "determinism and round-trip", c, std::to_string(commands.size()) + " commands");
}

}  // namespace

int main() {
  const auto instances = randomized_instances();
  std::vector<std::function<bool()>> criteria = {
      [] { return criterion1(); },
      [&] { return criterion2(instances); },
      [&] { return criterion3(instances); },
      [&] { return criterion4(instances); },
      [&] { return criterion5(instances); },
      [&] { return criterion6(instances); },
      [&] { return criterion7(instances); },
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i]();
    } catch (const std::exception& e) {
      std::printf("[FAIL] criterion %zu: exception: %s\n", i + 1, e.what());
    }
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
