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

#include "infoex/rate.hpp"

#include <cmath>

#include "infoex/equilibrium.hpp"
#include "infoex/errors.hpp"
#include "infoex/graph.hpp"
#include "infoex/mis.hpp"

namespace infoex {

namespace {

// Exact integer n-th root if value is a perfect n-th power.
std::optional<std::int64_t> exact_root(std::int64_t value, std::size_t n) {
  if (value < 0) return std::nullopt;
  if (value <= 1 || n == 1) return value;
  auto guess = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(value), 1.0 / n)));
  for (std::int64_t c = std::max<std::int64_t>(guess - 1, 0); c <= guess + 1; ++c) {
    __int128 p = 1;
    for (std::size_t i = 0; i < n && p <= value; ++i) p *= c;
    if (p == value) return c;
  }
  return std::nullopt;
}

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  __int128 r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= base;
    if (r > static_cast<__int128>(UINT64_MAX)) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

double root(double v, std::size_t n) { return std::pow(v, 1.0 / static_cast<double>(n)); }

std::uint64_t exact_alpha(const Model& model, TypeId t, std::size_t n, const Budgets& budgets) {
  return max_independent_set(build_sender_graph(model, t, n, budgets), MisMode::kExact, budgets).size;
}

}  // namespace

double rate(const Rational& dstar_value, std::size_t n) {
  if (n == 0) throw InvalidArgument("horizon n must be positive");
  if (dstar_value < Rational(0)) throw InvalidArgument("rate of a negative value");
  auto num = exact_root(dstar_value.num(), n);
  auto den = exact_root(dstar_value.den(), n);
  if (num && den) return static_cast<double>(*num) / static_cast<double>(*den);
  return root(dstar_value.to_double(), n);
}

RateBounds finite_bounds(const Model& model, std::size_t n, bool solve, const Budgets& budgets,
                         std::uint64_t seed) {
  RateBounds b;
  b.n = n;
  std::vector<SenderGraph> graphs;
  for (TypeId t : model.type_ids()) graphs.push_back(build_sender_graph(model, t, n, budgets));
  SenderGraph united = union_graph(graphs);

  const bool exact = united.vertex_count() <= budgets.mis;
  const MisMode mode = exact ? MisMode::kExact : MisMode::kGreedy;

  auto lower = max_independent_set(united, mode, budgets);
  b.union_alpha = lower.size;
  b.lower_certified = lower.certified;

  b.upper_certified = exact;
  for (TypeId t : model.type_ids()) {
    // A greedy set only bounds alpha from below; the upper field is then a
    // heuristic estimate, flagged as such.
    auto r = max_independent_set(graphs[index_of(t)], mode, budgets);
    b.type_alpha.push_back(r.size);
    b.upper_value += model.prior(t) * Rational(static_cast<std::int64_t>(r.size));
  }

  b.lower = rate(Rational(static_cast<std::int64_t>(b.union_alpha)), n);
  b.upper = rate(b.upper_value, n);

  if (solve) {
    SequenceSpace space(model, n, budgets);
    EquilibriumResult eq = space.size() <= std::min<std::uint64_t>(budgets.subset, 64)
                               ? solve_exact(model, n, budgets)
                               : solve_heuristic(model, n, seed, budgets);
    b.achieved_value = eq.optimum;
    b.achieved_certified = eq.certified;
    b.achieved = rate(eq.optimum, n);
  }
  return b;
}

FeketeWitness fekete_check(const Model& model, TypeId t, std::size_t m, std::size_t n,
                           const Budgets& budgets) {
  if (m == 0 || n == 0) throw InvalidArgument("horizons must be positive");
  SequenceSpace largest(model, m + n, budgets);
  if (largest.size() > budgets.mis) throw BudgetExceeded("mis", budgets.mis, largest.size());
  FeketeWitness w;
  w.m = m;
  w.n = n;
  w.alpha_m = exact_alpha(model, t, m, budgets);
  w.alpha_n = m == n ? w.alpha_m : exact_alpha(model, t, n, budgets);
  w.alpha_sum = exact_alpha(model, t, m + n, budgets);
  w.holds = w.alpha_sum >= w.alpha_m * w.alpha_n;
  return w;
}

AsymptoticReport asymptotic_bounds(const Model& model, std::size_t n_max, const Budgets& budgets) {
  if (n_max == 0) throw InvalidArgument("n_max must be positive");
  SequenceSpace largest(model, n_max, budgets);
  if (largest.size() > budgets.mis) throw BudgetExceeded("mis", budgets.mis, largest.size());

  AsymptoticReport r;
  std::vector<SenderGraph> base;
  for (TypeId t : model.type_ids()) {
    base.push_back(build_sender_graph(model, t, 1, budgets));
    r.type_alpha.push_back(max_independent_set(base.back(), MisMode::kExact, budgets).size);
  }
  std::uint32_t star = 0;
  for (std::uint32_t i = 1; i < r.type_alpha.size(); ++i) {
    if (r.type_alpha[i] > r.type_alpha[star]) star = i;
  }
  r.lambda_star = type_id(star);
  r.union_floor = max_independent_set(union_graph(base), MisMode::kExact, budgets).size;

  r.star_alpha.push_back(r.type_alpha[star]);
  for (std::size_t n = 2; n <= n_max; ++n) r.star_alpha.push_back(exact_alpha(model, r.lambda_star, n, budgets));
  for (std::size_t n = 1; n <= n_max; ++n) {
    r.xi_estimates.push_back(rate(Rational(static_cast<std::int64_t>(r.star_alpha[n - 1])), n));
    r.best_lower = std::max(r.best_lower, r.xi_estimates.back());
  }
  for (std::size_t m = 1; m <= n_max; ++m) {
    for (std::size_t n = m; m + n <= n_max; ++n) {
      FeketeWitness w;
      w.m = m;
      w.n = n;
      w.alpha_m = r.star_alpha[m - 1];
      w.alpha_n = r.star_alpha[n - 1];
      w.alpha_sum = r.star_alpha[m + n - 1];
      w.holds = w.alpha_sum >= w.alpha_m * w.alpha_n;
      r.witnesses.push_back(w);
    }
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 2; k * n <= n_max; ++k) {
      if (r.star_alpha[k * n - 1] < ipow(r.star_alpha[n - 1], k)) r.divisibility_chain_monotone = false;
    }
  }
  return r;
}

}  // namespace infoex
