#pragma once

#include <compare>
#include <vector>

#include "symrep/error.hpp"

namespace symrep {

/// A permutation of {0..n-1} stored as its image array.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  /// The transposition (a b) on n points.
  static Perm transposition(int n, int a, int b);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  /// (this * other)(i) = this(other(i)).
  Perm compose(const Perm& other) const;
  Perm inverse() const;
  bool is_identity() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

/// A finite permutation action given by forward generators on points 0..n-1.
/// Inverse generators are derived internally where needed.
struct PermAction {
  int n = 0;
  std::vector<Perm> generators;

  PermAction() = default;
  PermAction(int n_points, std::vector<Perm> gens);
};

/// Partition of 0..n-1 into classes closed under a generator set. Classes are
/// sorted by smallest member, each class ascending.
struct OrbitPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> point_to_class;

  int point_count() const { return static_cast<int>(point_to_class.size()); }
  int class_count() const { return static_cast<int>(classes.size()); }
  int class_of(int p) const;
  int class_size(int p) const { return static_cast<int>(classes[static_cast<size_t>(class_of(p))].size()); }
};

/// Orbit partition of {0..n-1} under the group generated by a.generators.
OrbitPartition orbits(const PermAction& a);

/// {g(x) | x in s}, returned sorted. Validates ranges.
std::vector<int> act_on_set(const PermAction& a, const Perm& g, const std::vector<int>& s);

/// All elements of the generated group, by breadth-first closure of the
/// generators, stopping once `cap` elements have been found. `exact` is false
/// when the cap was hit.
struct GroupClosure {
  std::vector<Perm> elements;
  bool exact = true;
};
GroupClosure enumerate_group(const PermAction& a, long long cap);

}  // namespace symrep
