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

#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "infoex/errors.hpp"
#include "infoex/rate.hpp"

using namespace infoex;

TEST_CASE("rate") {
  CHECK(rate(Rational(4, 3), 1) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  for (std::size_t n = 1; n <= 6; ++n) CHECK(rate(Rational(1), n) == 1.0);
  CHECK(rate(Rational(9), 2) == 3.0);
  CHECK(rate(Rational(27, 8), 3) == 1.5);
  CHECK(rate(Rational(0), 3) == 0.0);
  CHECK(rate(Rational(11, 3), 2) == doctest::Approx(std::sqrt(11.0 / 3.0)));
  CHECK_THROWS_AS(rate(Rational(-1), 2), InvalidArgument);
  CHECK_THROWS_AS(rate(Rational(1), 0), InvalidArgument);
}

TEST_CASE("finite_bounds on the two-type model") {
  Model m = example1_model();
  auto b = finite_bounds(m, 1, true);
  CHECK(b.union_alpha == 1);
  CHECK(b.upper_value == Rational(5, 3));
  REQUIRE(b.achieved_value.has_value());
  CHECK(*b.achieved_value == Rational(4, 3));
  CHECK(b.lower_certified);
  CHECK(b.upper_certified);
  CHECK(b.achieved_certified);
  CHECK(b.type_alpha == std::vector<std::uint64_t>{3, 1});
  CHECK(b.lower == 1.0);
  CHECK(*b.achieved == doctest::Approx(4.0 / 3.0));
  CHECK(b.upper == doctest::Approx(5.0 / 3.0));

  auto b2 = finite_bounds(m, 2, true);
  CHECK(b2.union_alpha == 1);
  CHECK(b2.upper_value == Rational(11, 3));
  CHECK(*b2.achieved_value == Rational(3));
  CHECK(Rational(static_cast<std::int64_t>(b2.union_alpha)) <= *b2.achieved_value);
  CHECK(*b2.achieved_value <= b2.upper_value);

  auto unsolved = finite_bounds(m, 1, false);
  CHECK_FALSE(unsolved.achieved_value.has_value());
}

TEST_CASE("finite_bounds degrade to flagged estimates over budget") {
  Model m = example1_model();
  Budgets b;
  b.mis = 5;
  b.subset = 5;
  auto r = finite_bounds(m, 2, true, b);
  CHECK_FALSE(r.lower_certified);
  CHECK_FALSE(r.upper_certified);
  CHECK_FALSE(r.achieved_certified);
  CHECK(r.union_alpha == 1);
}

TEST_CASE("finite_bounds on an honest-only model") {
  Model m = testing::honest_model(3);
  for (std::size_t n = 1; n <= 2; ++n) {
    auto b = finite_bounds(m, n, true);
    CHECK(b.lower == doctest::Approx(3.0));
    CHECK(*b.achieved == doctest::Approx(3.0));
    CHECK(b.upper == doctest::Approx(3.0));
  }
}

TEST_CASE("fekete_check") {
  Model m = example1_model();
  auto d = fekete_check(m, type_id(1), 1, 1);
  CHECK(d.alpha_m == 1);
  CHECK(d.alpha_n == 1);
  CHECK(d.alpha_sum == 1);
  CHECK(d.holds);

  auto h = fekete_check(m, type_id(0), 1, 2);
  CHECK(h.alpha_m == 3);
  CHECK(h.alpha_n == 9);
  CHECK(h.alpha_sum == 27);
  CHECK(h.holds);

  Budgets b;
  b.mis = 20;
  CHECK_THROWS_AS(fekete_check(m, type_id(0), 1, 2, b), BudgetExceeded);
}

TEST_CASE("asymptotic_bounds") {
  Model m = example1_model();
  auto a = asymptotic_bounds(m, 3);
  CHECK(a.lambda_star == type_id(0));
  CHECK(a.union_floor == 1);
  CHECK(a.star_alpha == std::vector<std::uint64_t>{3, 9, 27});
  for (double xi : a.xi_estimates) CHECK(xi == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(a.divisibility_chain_monotone);
  // (m, n) with m <= n and m + n <= 3: (1, 1) and (1, 2).
  REQUIRE(a.witnesses.size() == 2);
  CHECK(a.witnesses[1].alpha_sum == 27);
}

TEST_CASE("asymptotic_bounds on the dishonest type alone") {
  auto a = asymptotic_bounds(testing::dishonest_only_model(), 4);
  CHECK(a.star_alpha == std::vector<std::uint64_t>{1, 1, 1, 1});
  for (double xi : a.xi_estimates) CHECK(xi == 1.0);
  for (const auto& w : a.witnesses) CHECK(w.holds);
}

TEST_CASE("asymptotic_bounds on an honest-only model") {
  auto a = asymptotic_bounds(testing::honest_model(3), 3);
  CHECK(a.union_floor == 3);
  for (double xi : a.xi_estimates) CHECK(xi == doctest::Approx(3.0));
}

TEST_CASE("property: supermultiplicativity on random models") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    Model m = testing::random_model(rng, 3, 1 + trial % 3);
    for (TypeId t : m.type_ids()) {
      for (std::size_t mm = 1; mm <= 2; ++mm) {
        for (std::size_t nn = 1; mm + nn <= 4; ++nn) CHECK(fekete_check(m, t, mm, nn).holds);
      }
    }
  }
}
