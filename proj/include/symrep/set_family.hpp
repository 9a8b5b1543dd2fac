#pragma once

#include <vector>

#include "symrep/perm.hpp"

namespace symrep {

/// An unordered family of distinct nonempty finite point sets. Members are
/// stored sorted (and each member's points ascending), so iteration order is
/// deterministic. Empty members are rejected at construction.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::vector<std::vector<int>> sets);

  const std::vector<std::vector<int>>& sets() const { return sets_; }
  int size() const { return static_cast<int>(sets_.size()); }
  bool empty() const { return sets_.empty(); }

  /// Max member cardinality (the m of the symmetrization bound); 0 when empty.
  int max_cardinality() const { return max_card_; }
  /// Largest point id appearing in any member; -1 when empty.
  int max_point() const { return max_point_; }

  /// Membership test; `s` must be sorted ascending.
  bool contains(const std::vector<int>& s) const;

 private:
  std::vector<std::vector<int>> sets_;
  int max_card_ = 0;
  int max_point_ = -1;
};

/// True iff every generator maps every member to a member. Generator closure
/// suffices for full group invariance (generators act bijectively on the
/// finite family).
bool is_invariant_family(const PermAction& a, const SetFamily& fam);

/// True iff `s` intersects every member of `fam` (vacuously true when empty).
bool verify_transversal(const SetFamily& fam, const std::vector<int>& s);

}  // namespace symrep
