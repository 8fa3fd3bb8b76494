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

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "infoex/equilibrium.hpp"
#include "infoex/errors.hpp"
#include "infoex/graph.hpp"
#include "infoex/mis.hpp"
#include "infoex/reference.hpp"
#include "infoex/subset_search.hpp"

using namespace infoex;

namespace {

const TypeId kH = type_id(0);
const TypeId kD = type_id(1);

using Ids = std::vector<SeqId>;

struct Example {
  Model model = example1_model();
  SequenceSpace space{model, 1};
  SequenceScorer scorer{model, space};
};

}  // namespace

TEST_CASE("lambda_partition on the two-type model") {
  Example ex;
  CHECK(lambda_partition(ex.scorer, Ids{0, 2}, kD) == Ids{0});
  CHECK(lambda_partition(ex.scorer, Ids{0, 1, 2}, kD).empty());
  CHECK(lambda_partition(ex.scorer, Ids{1, 2}, kD) == Ids{1});
  CHECK(lambda_partition(ex.scorer, Ids{0, 1}, kD).empty());
  for (std::uint64_t mask = 1; mask < 8; ++mask) {
    auto members = testing::mask_to_ids(mask, 3);
    CHECK(lambda_partition(ex.scorer, members, kH) == members);
  }
  // Singletons are vacuously their own partition.
  for (SeqId x = 0; x < 3; ++x) CHECK(lambda_partition(ex.scorer, Ids{x}, kD) == Ids{x});
  CHECK_THROWS_AS(lambda_partition(ex.scorer, Ids{}, kD), InvalidArgument);

  std::vector<Sequence> seqs{Sequence{{0}}, Sequence{{2}}};
  auto part = lambda_partition(ex.model, seqs, kD);
  REQUIRE(part.size() == 1);
  CHECK(part[0] == Sequence{{0}});
}

TEST_CASE("receiver_objective on the two-type model") {
  Example ex;
  CHECK(receiver_objective(ex.scorer, Ids{0, 1, 2}) == Rational(1));
  CHECK(receiver_objective(ex.scorer, Ids{0, 2}) == Rational(4, 3));
  CHECK(receiver_objective(ex.scorer, Ids{1, 2}) == Rational(4, 3));
  CHECK(receiver_objective(ex.scorer, Ids{0, 1}) == Rational(2, 3));
  CHECK(receiver_objective(ex.scorer, Ids{2}) == Rational(1));
  CHECK_THROWS_AS(receiver_objective(ex.scorer, Ids{}), InvalidArgument);

  auto q = make_questionnaire(ex.scorer, Ids{2, 0});
  CHECK(q.members == Ids{0, 2});
  CHECK(q.partitions[0] == Ids{0, 2});
  CHECK(q.partitions[1] == Ids{0});
  CHECK(q.objective == Rational(4, 3));
}

TEST_CASE("canonical_strategy") {
  Example ex;
  auto g = canonical_strategy(ex.space, Ids{0, 2}, 0);
  CHECK(g(0) == 0);
  CHECK(g(1) == 0);
  CHECK(g(2) == 2);
  CHECK(g.image() == Ids{0, 2});
  CHECK(g.fallback() == SeqId{0});

  for (SeqId fb = 0; fb < 3; ++fb) {
    auto id = canonical_strategy(ex.space, Ids{0, 1, 2}, fb);
    for (SeqId y = 0; y < 3; ++y) CHECK(id(y) == y);
  }
  auto constant = canonical_strategy(ex.space, Ids{1}, 1);
  for (SeqId y = 0; y < 3; ++y) CHECK(constant(y) == 1);

  CHECK_THROWS_AS(canonical_strategy(ex.space, Ids{0, 2}, 1), InvalidArgument);
  CHECK_THROWS_AS(canonical_strategy(ex.space, Ids{}), InvalidArgument);
  CHECK(canonical_strategy(ex.space, Ids{2, 1}).fallback() == SeqId{1});
}

TEST_CASE("reduce_closure") {
  Example ex;
  // The honest type recovers every member, so every set is already closed.
  CHECK(reduce_closure(ex.scorer, Ids{0, 1, 2}) == Ids{0, 1, 2});
  CHECK(reduce_closure(ex.scorer, Ids{0, 2}) == Ids{0, 2});

  Model honest = testing::honest_model(3);
  SequenceSpace hs(honest, 2);
  SequenceScorer hscore(honest, hs);
  CHECK(reduce_closure(hscore, Ids{1, 4, 7}) == Ids{1, 4, 7});

  // Dishonest type only: {0,1,2} has an empty partition, so the last
  // non-empty iterate is returned.
  Model d = testing::dishonest_only_model();
  SequenceSpace ds(d, 1);
  SequenceScorer dscore(d, ds);
  CHECK(reduce_closure(dscore, Ids{0, 1, 2}) == Ids{0, 1, 2});
  CHECK(reduce_closure(dscore, Ids{0, 2}) == Ids{0});
  CHECK_THROWS_AS(reduce_closure(dscore, Ids{}), InvalidArgument);
}

TEST_CASE("property: closure never lowers the objective") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    Model m = testing::random_model(rng, 2 + trial % 3, 1 + trial % 3);
    SequenceSpace space(m, trial % 2 == 0 ? 1 : 2);
    if (space.size() > 9) continue;
    SequenceScorer scorer(m, space);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << space.size()); ++mask) {
      auto members = testing::mask_to_ids(mask, space.size());
      auto closed = reduce_closure(scorer, members);
      CHECK(receiver_objective(scorer, closed) >= receiver_objective(scorer, members));
      CHECK(std::includes(members.begin(), members.end(), closed.begin(), closed.end()));
    }
  }
}

TEST_CASE("solve_exact on the two-type model") {
  Model m = example1_model();
  auto r = solve_exact(m, 1);
  CHECK(r.optimum == Rational(4, 3));
  CHECK(r.certified);
  REQUIRE(r.maximizers.size() == 2);
  CHECK(r.maximizers[0] == Ids{0, 2});
  CHECK(r.maximizers[1] == Ids{1, 2});
  CHECK(r.representative == Ids{0, 2});

  // n = 2: the full questionnaire wins (1/3 * 9 + 2/3 * 0 = 3), uniquely.
  auto r2 = solve_exact(m, 2);
  CHECK(r2.optimum == Rational(3));
  REQUIRE(r2.maximizers.size() == 1);
  CHECK(r2.representative.size() == 9);

  auto unpruned = solve_exact(m, 2, {}, ExactOptions{false, 16});
  CHECK(unpruned.optimum == r2.optimum);
  CHECK(unpruned.stats.subsets_examined == 511);
  CHECK(unpruned.stats.subtrees_pruned == 0);
}

TEST_CASE("solve_exact degenerate models") {
  Model honest = testing::honest_model(3);
  for (std::size_t n = 1; n <= 2; ++n) {
    auto r = solve_exact(honest, n);
    const std::uint32_t size = n == 1 ? 3 : 9;
    CHECK(r.optimum == Rational(size));
    REQUIRE(r.maximizers.size() == 1);
    CHECK(r.representative.size() == size);
  }
  Model flat = testing::constant_model(3);
  auto r = solve_exact(flat, 1);
  CHECK(r.optimum == Rational(1));
  CHECK(r.maximizers.size() == 3);  // the three singletons
  CHECK(r.representative == Ids{0});

  Budgets b;
  b.subset = 8;
  CHECK_THROWS_AS(solve_exact(example1_model(), 2, b), BudgetExceeded);
}

TEST_CASE("pruned, unpruned and serial reference searches agree") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    Model m = testing::random_model(rng, 2 + trial % 3, 1 + trial % 3);
    for (std::size_t n = 1; n <= 2; ++n) {
      SequenceSpace space(m, n);
      if (space.size() > 9) continue;
      auto pruned = solve_exact(m, n, {}, ExactOptions{true, 1000});
      auto full = solve_exact(m, n, {}, ExactOptions{false, 1000});
      auto brute = reference::max_objective(m, n);
      CHECK(pruned.optimum == brute.optimum);
      CHECK(full.optimum == brute.optimum);
      CHECK(full.maximizers == brute.maximizers);
      // Every maximizer kept by the pruned search is a true maximizer.
      for (const auto& mx : pruned.maximizers) {
        CHECK(std::find(brute.maximizers.begin(), brute.maximizers.end(), mx) != brute.maximizers.end());
      }
      SequenceScorer scorer(m, space);
      auto problem = make_subset_problem(scorer);
      auto serial = search_subsets_serial(problem, 1000);
      CHECK(Rational(serial.best, problem.scale) == brute.optimum);
    }
  }
}

TEST_CASE("report cap keeps the lexicographically least maximizers") {
  Model flat = testing::constant_model(3);
  auto r = solve_exact(flat, 2, {}, ExactOptions{true, 4});
  REQUIRE(r.maximizers.size() == 4);
  for (SeqId i = 0; i < 4; ++i) CHECK(r.maximizers[i] == Ids{i});
}

TEST_CASE("mask lexicographic order matches list order") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t a = rng() & 0xffff, b = rng() & 0xffff;
    if (i % 3 == 0) b = a | (std::uint64_t{1} << (rng() % 16));
    if (a == 0 || b == 0) continue;
    CHECK(mask_lex_less(a, b) == lex_less(mask_members(a), mask_members(b)));
  }
}

TEST_CASE("solve_heuristic") {
  Model m = example1_model();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto r = solve_heuristic(m, 1, seed);
    CHECK(r.optimum == Rational(4, 3));
    CHECK_FALSE(r.certified);
  }
  auto r2 = solve_heuristic(m, 2, 0);
  CHECK(r2.optimum >= Rational(1));
  CHECK(r2.optimum <= solve_exact(m, 2).optimum);
  CHECK(solve_heuristic(m, 2, 0).representative == r2.representative);

  Model honest = testing::honest_model(3);
  CHECK(solve_heuristic(honest, 2, 9).optimum == Rational(9));
  CHECK(solve_heuristic(honest, 3, 9).optimum == Rational(27));
}

TEST_CASE("property: heuristic values are attained and bounded by the exact optimum") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    Model m = testing::random_model(rng, 3, 1 + trial % 3);
    auto h = solve_heuristic(m, 2, static_cast<std::uint64_t>(trial));
    auto e = solve_exact(m, 2);
    SequenceSpace space(m, 2);
    SequenceScorer scorer(m, space);
    CHECK(receiver_objective(scorer, h.representative) == h.optimum);
    CHECK(h.optimum <= e.optimum);
    CHECK(h.optimum >= Rational(1));
  }
}

TEST_CASE("property: partitions are independent and the objective is sandwiched") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    Model m = testing::random_model(rng, 2 + trial % 2, 1 + trial % 3);
    for (std::size_t n = 1; n <= 2; ++n) {
      SequenceSpace space(m, n);
      SequenceScorer scorer(m, space);
      std::vector<SenderGraph> graphs;
      for (TypeId t : m.type_ids()) graphs.push_back(build_sender_graph(m, t, n));
      SenderGraph u = union_graph(graphs);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << space.size()); ++mask) {
        auto members = testing::mask_to_ids(mask, space.size());
        for (TypeId t : m.type_ids()) {
          CHECK(is_independent(graphs[index_of(t)], lambda_partition(scorer, members, t)));
        }
      }
      auto opt = solve_exact(m, n).optimum;
      Rational upper;
      for (TypeId t : m.type_ids()) {
        upper += m.prior(t) *
                 Rational(static_cast<std::int64_t>(max_independent_set(graphs[index_of(t)], MisMode::kExact).size));
      }
      auto witness = max_independent_set(u, MisMode::kExact);
      for (TypeId t : m.type_ids()) CHECK(lambda_partition(scorer, witness.members, t) == witness.members);
      CHECK(receiver_objective(scorer, witness.members) == Rational(static_cast<std::int64_t>(witness.size)));
      CHECK(Rational(static_cast<std::int64_t>(witness.size)) <= opt);
      CHECK(opt <= upper);
    }
  }
}

TEST_CASE("heuristic crosses the valley when every addition first costs value") {
  // Each addition gains 1/3 for h but costs d's single recovered sequence
  // (2/3) until d recovers nothing; the whole space is optimal, worth
  // (1/3) * 3^n.
  Model m = example1_model();
  for (std::size_t n : {2u, 3u, 4u}) {
    auto r = solve_heuristic(m, n, 1);
    std::int64_t full = 1;
    for (std::size_t i = 0; i < n; ++i) full *= 3;
    CHECK(r.optimum == Rational(full, 3));
    CHECK(r.representative.size() == static_cast<std::size_t>(full));
  }
}
