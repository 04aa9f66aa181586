#include "fgd/freegroup.hpp"

#include <algorithm>
#include <cstdlib>

namespace fgd {

FreeWord FreeWord::power(int gen, long k) {
  FreeWord w;
  w.letters_.assign(static_cast<std::size_t>(std::labs(k)), Letter{gen, k > 0});
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  const auto& a = letters_;
  const auto& b = rhs.letters_;
  std::size_t ai = a.size();
  std::size_t bi = 0;
  while (ai > 0 && bi < b.size() && a[ai - 1].cancels(b[bi])) {
    --ai;
    ++bi;
  }
  FreeWord out;
  out.letters_.reserve(ai + (b.size() - bi));
  out.letters_.insert(out.letters_.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(ai));
  out.letters_.insert(out.letters_.end(), b.begin() + static_cast<std::ptrdiff_t>(bi), b.end());
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.assign(letters_.rbegin(), letters_.rend());
  for (Letter& l : out.letters_) l = l.flipped();
  return out;
}

long FreeWord::exponent_sum() const {
  long s = 0;
  for (const Letter& l : letters_) s += l.positive ? 1 : -1;
  return s;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) s += ".";
    first = false;
    s += "g" + std::to_string(l.gen);
    if (!l.positive) s += "~";
  }
  return s;
}

bool operator<(const FreeWord& a, const FreeWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end()) < 0;
}

std::vector<FreeWord> free_word_ball(int generators, int radius) {
  std::vector<FreeWord> result{FreeWord::identity()};
  std::vector<FreeWord> frontier = result;
  for (int len = 1; len <= radius; ++len) {
    std::vector<FreeWord> next;
    for (const FreeWord& w : frontier) {
      for (int gen = 0; gen < generators; ++gen) {
        for (bool positive : {true, false}) {
          FreeWord::Letter l{gen, positive};
          if (!w.is_identity() && w.letters().back().cancels(l)) continue;
          next.push_back(w * FreeWord::generator(gen, positive));
        }
      }
    }
    result.insert(result.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace fgd
