#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "symrep/hitting.hpp"
#include "symrep/symmetrize.hpp"

using namespace symrep;

namespace {

Perm rotation(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[(size_t)i] = (i + 1) % n;
  return Perm(std::move(img));
}

// the six translates of {0,1,2} under the 6-cycle
SetFamily z6_translates() {
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < 6; ++i) sets.push_back({i, (i + 1) % 6, (i + 2) % 6});
  return SetFamily(std::move(sets));
}

}  // namespace

TEST_SUITE("symmetrize") {
  TEST_CASE("invariance check requires generator closure") {
    PermAction z6(6, {rotation(6)});
    CHECK(is_invariant_family(z6, z6_translates()));
    CHECK_FALSE(is_invariant_family(z6, SetFamily({{0, 1, 2}})));
    PermAction trivial(4, {});
    CHECK(is_invariant_family(trivial, SetFamily({{0, 3}, {1}})));
  }

  TEST_CASE("transversal verification") {
    CHECK(verify_transversal(SetFamily({{0, 1}, {1, 2}}), {1}));
    CHECK_FALSE(verify_transversal(SetFamily({{0, 1}, {2, 3}}), {1}));
    CHECK(verify_transversal(SetFamily(), {}));
  }

  TEST_CASE("trivial group returns the given transversal") {
    PermAction trivial(4, {});
    SetFamily fam({{0}, {2}});
    SymmetrizeResult result = symmetrize(trivial, fam, {0, 2});
    CHECK(result.invariant_transversal == std::vector<int>{0, 2});
    CHECK(result.max_member_size == 1);
  }

  TEST_CASE("worked 6-cycle example attains the bound") {
    PermAction z6(6, {rotation(6)});
    SymmetrizeResult result = symmetrize(z6, z6_translates(), {0, 3});
    CHECK(result.invariant_transversal == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(result.max_member_size == 3);
    CHECK(result.bound == 6);
    CHECK(static_cast<long long>(result.invariant_transversal.size()) == result.bound);
    REQUIRE(result.neumann_sums.size() == 6);
    for (const Rational& q : result.neumann_sums) CHECK(q == 1);
  }

  TEST_CASE("m = 1 forces whole orbits inside X") {
    PermAction swap01(3, {Perm::transposition(3, 0, 1)});
    SetFamily fam({{0}, {1}});
    SymmetrizeResult result = symmetrize(swap01, fam, {0, 1});
    CHECK(result.invariant_transversal == std::vector<int>{0, 1});
  }

  TEST_CASE("empty family yields an empty invariant set") {
    PermAction z6(6, {rotation(6)});
    SymmetrizeResult result = symmetrize(z6, SetFamily(), {0, 3});
    CHECK(result.invariant_transversal.empty());
    CHECK(result.bound == 0);
    CHECK(result.neumann_sums.empty());
  }

  TEST_CASE("precondition violations fail loudly") {
    PermAction z6(6, {rotation(6)});
    CHECK(oracles::error_code_of([&] { symmetrize(z6, SetFamily({{0, 1, 2}}), {0}); }) ==
          ErrorCode::NotInvariant);
    CHECK(oracles::error_code_of([&] { symmetrize(z6, z6_translates(), {0}); }) ==
          ErrorCode::NotTransversal);
    CHECK(oracles::error_code_of([&] { symmetrize(z6, z6_translates(), {9}); }) ==
          ErrorCode::OutOfRange);
  }

  TEST_CASE("neumann sums evaluate exactly") {
    PermAction z6(6, {rotation(6)});
    CHECK(neumann_sum(z6, {0, 1, 2}, {0, 3}) == 1);

    PermAction trivial(2, {});
    CHECK(neumann_sum(trivial, {1}, {1}) == 1);
    CHECK(neumann_sum(trivial, {0}, {1}) == 0);

    PermAction swap2(2, {Perm::transposition(2, 0, 1)});
    CHECK(neumann_sum(swap2, {0, 1}, {0}) == 1);
    CHECK(neumann_sum(swap2, {0}, {0}) == Rational(1, 2));

    CHECK(oracles::error_code_of([&] { neumann_sum(swap2, {}, {0}); }) == ErrorCode::EmptySet);
  }

  TEST_CASE("randomized actions keep every certificate") {
    std::mt19937 rng(23);
    int checked = 0;
    for (int iter = 0; iter < 80; ++iter) {
      int n = 3 + static_cast<int>(rng() % 8);  // up to 10 points
      int gen_count = 1 + static_cast<int>(rng() % 3);
      std::vector<Perm> gens;
      for (int g = 0; g < gen_count; ++g) gens.push_back(oracles::random_perm(rng, n));
      PermAction action(n, gens);

      SetFamily fam(oracles::random_closed_family(rng, action, 1 + rng() % 2, 1 + rng() % 4));
      if (fam.empty()) continue;
      std::vector<int> x = min_hitting_set(fam).witness;
      SymmetrizeResult result = symmetrize(action, fam, x);
      ++checked;

      const auto& y = result.invariant_transversal;
      for (const Perm& g : gens) CHECK(act_on_set(action, g, y) == y);
      CHECK(verify_transversal(fam, y));
      CHECK(static_cast<long long>(y.size()) <=
            result.max_member_size * static_cast<long long>(x.size()));
      for (const Rational& q : result.neumann_sums) CHECK(q >= 1);
    }
    CHECK(checked >= 60);
  }
}
