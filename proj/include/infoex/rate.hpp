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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "infoex/model.hpp"

namespace infoex {

/// (dstar)^(1/n). Exact when numerator and denominator are perfect n-th
/// powers, otherwise the nearest double. Throws InvalidArgument for negative
/// values or n == 0.
double rate(const Rational& dstar_value, std::size_t n);

/// Bounds on the equilibrium rate at horizon n. The exact fields carry the
/// quantities before root-taking; all comparisons use them.
struct RateBounds {
  std::size_t n = 0;

  std::uint64_t union_alpha = 0;  // alpha(union_t G_t^n)
  bool lower_certified = false;

  std::vector<std::uint64_t> type_alpha;  // alpha(G_t^n) per type
  Rational upper_value;                   // sum_t P(t) alpha(G_t^n)
  bool upper_certified = false;

  std::optional<Rational> achieved_value;  // D*(g_n*) when solved
  bool achieved_certified = false;

  double lower = 0;
  double upper = 0;
  std::optional<double> achieved;
};

/// Builds every sender graph and their union at horizon n, computes the
/// independence numbers (exact within the MIS budget, greedy otherwise) and,
/// when solve is set, the equilibrium value (exact within the subset budget,
/// heuristic otherwise). Uncertified fields are flagged, not thrown.
RateBounds finite_bounds(const Model& model, std::size_t n, bool solve, const Budgets& budgets = {},
                         std::uint64_t seed = 0);

struct FeketeWitness {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t alpha_m = 0;
  std::uint64_t alpha_n = 0;
  std::uint64_t alpha_sum = 0;  // alpha(G^(m+n))
  bool holds = false;           // alpha_sum >= alpha_m * alpha_n
};

/// Exact independence numbers of G_t^m, G_t^n, G_t^(m+n). Throws
/// BudgetExceeded("mis") when G_t^(m+n) is too large.
FeketeWitness fekete_check(const Model& model, TypeId t, std::size_t m, std::size_t n,
                           const Budgets& budgets = {});

struct AsymptoticReport {
  TypeId lambda_star{};
  std::vector<std::uint64_t> type_alpha;  // alpha(G_t), n = 1
  std::uint64_t union_floor = 0;          // alpha(union_t G_t), n = 1
  std::vector<std::uint64_t> star_alpha;  // alpha(G_star^n), n = 1..n_max
  std::vector<double> xi_estimates;       // star_alpha[n-1]^(1/n)
  double best_lower = 0;                  // max over n of xi_estimates
  std::vector<FeketeWitness> witnesses;   // m <= n, m + n <= n_max
  /// alpha(G^(k n)) >= alpha(G^n)^k for every n, k n <= n_max.
  bool divisibility_chain_monotone = true;
};

/// lambda* is the argmax of alpha(G_t) over types (lowest id on ties).
AsymptoticReport asymptotic_bounds(const Model& model, std::size_t n_max, const Budgets& budgets = {});

}  // namespace infoex
