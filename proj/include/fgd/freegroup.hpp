#pragma once

#include <compare>
#include <string>
#include <vector>

namespace fgd {

// Reduced word in a finitely generated free group. In a product u*v the
// letters of u sit at the front of the stored sequence; cancellation
// happens at the seam, as for Arrow words. For a right action the front
// letter is applied to the point first.
class FreeWord {
public:
  struct Letter {
    int gen;
    bool positive;

    Letter flipped() const { return {gen, !positive}; }
    bool cancels(const Letter& o) const { return gen == o.gen && positive != o.positive; }
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter& a, const Letter& b) {
      if (auto c = a.gen <=> b.gen; c != 0) return c;
      return (a.positive ? 0 : 1) <=> (b.positive ? 0 : 1);
    }
  };

  FreeWord() = default;

  static FreeWord identity() { return {}; }
  static FreeWord generator(int gen, bool positive = true) {
    FreeWord w;
    w.letters_.push_back({gen, positive});
    return w;
  }
  // gen^k (k may be negative or zero).
  static FreeWord power(int gen, long k);

  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord inverse() const;

  // Sum of letter signs; for the one-generator group this is the integer
  // the word represents.
  long exponent_sum() const;

  std::string str() const;  // e.g. "g0.g1~.g0", identity prints "1"

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend bool operator<(const FreeWord& a, const FreeWord& b);

private:
  std::vector<Letter> letters_;
};

// All reduced words of length <= radius over the given number of
// generators, sorted.
std::vector<FreeWord> free_word_ball(int generators, int radius);

}  // namespace fgd
