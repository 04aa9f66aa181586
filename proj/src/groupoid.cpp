#include "fgd/groupoid.hpp"

#include <algorithm>

namespace fgd {

void GroupAction::validate() {
  const int n = set_size();
  if (n <= 0) throw DomainError(Errc::incompatible_action, "action on an empty set");
  if (static_cast<int>(perm.size()) != generator_count)
    throw DomainError(Errc::incompatible_action, "one permutation per generator required");
  perm_inv.assign(perm.size(), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (std::size_t g = 0; g < perm.size(); ++g) {
    if (static_cast<int>(perm[g].size()) != n)
      throw DomainError(Errc::incompatible_action, "permutation size mismatch");
    for (int s = 0; s < n; ++s) {
      int img = perm[g][static_cast<std::size_t>(s)];
      if (img < 0 || img >= n || perm_inv[g][static_cast<std::size_t>(img)] != -1)
        throw DomainError(Errc::incompatible_action,
                          "generator " + std::to_string(g) + " is not a permutation");
      perm_inv[g][static_cast<std::size_t>(img)] = s;
    }
  }
}

int GroupAction::act(int s, const FreeWord& w) const {
  if (s < 0 || s >= set_size()) throw DomainError(Errc::incompatible_action, "point out of range");
  // In a product g*t the left factor g acts first, and its letters sit at
  // the front of the stored word.
  for (const FreeWord::Letter& l : w.letters()) {
    const auto& table = l.positive ? perm : perm_inv;
    s = table.at(static_cast<std::size_t>(l.gen))[static_cast<std::size_t>(s)];
  }
  return s;
}

GroupAction rotation_action(int n) {
  if (n <= 0) throw DomainError(Errc::incompatible_action, "rotation needs a nonempty set");
  GroupAction a;
  a.generator_count = 1;
  a.perm.assign(1, std::vector<int>(static_cast<std::size_t>(n)));
  for (int s = 0; s < n; ++s) a.perm[0][static_cast<std::size_t>(s)] = (s + 1) % n;
  a.validate();
  return a;
}

TransformationGroupoid::TransformationGroupoid(GroupAction action) : action_(std::move(action)) {
  action_.validate();
}

std::vector<TransArrow> TransformationGroupoid::ball(int radius) const {
  std::vector<TransArrow> out;
  const std::vector<FreeWord> words = free_word_ball(action_.generator_count, radius);
  for (int s = 0; s < action_.set_size(); ++s)
    for (const FreeWord& w : words) out.push_back({s, w});
  std::sort(out.begin(), out.end());
  return out;
}

TransArrow TransformationGroupoid::compose(const TransArrow& a, const TransArrow& b) const {
  if (source_of(a) != b.point)
    throw DomainError(Errc::not_composable, "transformation arrows not composable");
  return {a.point, a.g * b.g};
}

}  // namespace fgd
