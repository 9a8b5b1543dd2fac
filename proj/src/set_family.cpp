#include "symrep/set_family.hpp"

#include <algorithm>

#include "symrep/error.hpp"

namespace symrep {

SetFamily::SetFamily(std::vector<std::vector<int>> sets) : sets_(std::move(sets)) {
  for (auto& member : sets_) {
    if (member.empty()) fail(ErrorCode::EmptyMember, "family member is empty");
    std::sort(member.begin(), member.end());
    member.erase(std::unique(member.begin(), member.end()), member.end());
    if (member.front() < 0) fail(ErrorCode::OutOfRange, "negative point id");
    max_card_ = std::max(max_card_, static_cast<int>(member.size()));
    max_point_ = std::max(max_point_, member.back());
  }
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetFamily::contains(const std::vector<int>& s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

bool is_invariant_family(const PermAction& a, const SetFamily& fam) {
  if (fam.max_point() >= a.n) fail(ErrorCode::OutOfRange, "family point outside action");
  for (const Perm& g : a.generators)
    for (const auto& member : fam.sets())
      if (!fam.contains(act_on_set(a, g, member))) return false;
  return true;
}

bool verify_transversal(const SetFamily& fam, const std::vector<int>& s) {
  std::vector<int> probe = s;
  std::sort(probe.begin(), probe.end());
  for (const auto& member : fam.sets()) {
    bool hit = false;
    for (int x : member)
      if (std::binary_search(probe.begin(), probe.end(), x)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace symrep
