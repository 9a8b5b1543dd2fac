#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "symrep/perm.hpp"
#include "symrep/set_family.hpp"

namespace symrep {

using Rational = boost::multiprecision::cpp_rational;

/// Output of `symmetrize`: the invariant transversal Y together with the
/// certificate data that makes the bound checkable after the fact.
struct SymmetrizeResult {
  std::vector<int> invariant_transversal;  // Y, sorted
  int max_member_size = 0;                 // m
  long long bound = 0;                     // m * |X|
  /// One sum per family member, in family order: sum over f in F of
  /// |orbit(f) ∩ X| / |orbit(f)|. Each is >= 1 whenever X was a transversal.
  std::vector<Rational> neumann_sums;
};

/// Turns a transversal X of a generator-invariant family into an invariant
/// transversal Y with |Y| <= m|X|, where m is the max member size.
///
/// Y = { y : |orbit(y) ∩ X| * m >= |orbit(y)| }, evaluated in exact integer
/// arithmetic. Preconditions (family invariance, X transversal) are checked
/// and violations throw NotInvariant / NotTransversal; the bound is only
/// guaranteed under them. An empty family is allowed and yields Y = ∅.
SymmetrizeResult symmetrize(const PermAction& a, const SetFamily& fam, const std::vector<int>& X);

/// Exact rational sum over f in F of |orbit(f) ∩ X| / |orbit(f)|.
Rational neumann_sum(const PermAction& a, const std::vector<int>& F, const std::vector<int>& X);

}  // namespace symrep
