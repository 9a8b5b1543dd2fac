#include "symrep/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace symrep {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(v)])
      fail(ErrorCode::BadParam, "image array is not a bijection of 0.." +
                                    std::to_string(img_.size() - 1));
    seen[static_cast<size_t>(v)] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::transposition(int n, int a, int b) {
  if (a < 0 || a >= n || b < 0 || b >= n) fail(ErrorCode::OutOfRange, "transposition point");
  Perm p = identity(n);
  std::swap(p.img_[static_cast<size_t>(a)], p.img_[static_cast<size_t>(b)]);
  return p;
}

Perm Perm::compose(const Perm& other) const {
  if (size() != other.size()) fail(ErrorCode::OutOfRange, "composing permutations of different degree");
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i)
    img[i] = img_[static_cast<size_t>(other.img_[i])];
  Perm p;
  p.img_ = std::move(img);  // composition of bijections, no recheck
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[static_cast<size_t>(img_[i])] = static_cast<int>(i);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

PermAction::PermAction(int n_points, std::vector<Perm> gens) : n(n_points), generators(std::move(gens)) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative point count");
  for (const Perm& g : generators)
    if (g.size() != n)
      fail(ErrorCode::BadParam, "generator degree " + std::to_string(g.size()) +
                                    " does not match point count " + std::to_string(n));
}

int OrbitPartition::class_of(int p) const {
  if (p < 0 || p >= point_count()) fail(ErrorCode::OutOfRange, "point " + std::to_string(p));
  return point_to_class[static_cast<size_t>(p)];
}

OrbitPartition orbits(const PermAction& a) {
  // Union point with its image under every generator; forward images suffice
  // because each generator has finite order.
  std::vector<int> parent(static_cast<size_t>(a.n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const Perm& g : a.generators)
    for (int x = 0; x < a.n; ++x) {
      int rx = find(x), ry = find(g(x));
      if (rx != ry) parent[static_cast<size_t>(std::max(rx, ry))] = std::min(rx, ry);
    }

  OrbitPartition part;
  part.point_to_class.assign(static_cast<size_t>(a.n), -1);
  for (int x = 0; x < a.n; ++x) {
    int r = find(x);
    if (part.point_to_class[static_cast<size_t>(r)] < 0) {
      part.point_to_class[static_cast<size_t>(r)] = static_cast<int>(part.classes.size());
      part.classes.push_back({});
    }
    int c = part.point_to_class[static_cast<size_t>(r)];
    part.point_to_class[static_cast<size_t>(x)] = c;
    part.classes[static_cast<size_t>(c)].push_back(x);
  }
  return part;  // roots are minima, so classes are ordered by smallest member
}

std::vector<int> act_on_set(const PermAction& a, const Perm& g, const std::vector<int>& s) {
  if (g.size() != a.n) fail(ErrorCode::OutOfRange, "permutation degree does not match action");
  std::vector<int> image;
  image.reserve(s.size());
  for (int x : s) {
    if (x < 0 || x >= a.n) fail(ErrorCode::OutOfRange, "point " + std::to_string(x));
    image.push_back(g(x));
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

namespace {
std::string perm_key(const Perm& p) {
  std::string key;
  key.reserve(p.images().size());
  for (int v : p.images()) key.push_back(static_cast<char>(v));
  return key;
}
}  // namespace

GroupClosure enumerate_group(const PermAction& a, long long cap) {
  if (cap < 1) fail(ErrorCode::BadParam, "closure cap must be positive");
  if (a.n > 255) fail(ErrorCode::TooLarge, "closure supports at most 255 points");
  GroupClosure result;
  std::unordered_set<std::string> seen;
  Perm id = Perm::identity(a.n);
  seen.insert(perm_key(id));
  result.elements.push_back(id);
  for (size_t head = 0; head < result.elements.size(); ++head) {
    for (const Perm& g : a.generators) {
      Perm next = g.compose(result.elements[head]);
      if (seen.insert(perm_key(next)).second) {
        if (static_cast<long long>(result.elements.size()) >= cap) {
          result.exact = false;
          return result;
        }
        result.elements.push_back(std::move(next));
      }
    }
  }
  return result;
}

}  // namespace symrep
