#pragma once

#include <string>
#include <vector>

namespace fgd {

// Outcome of one verification pass. A check passes iff violations == 0;
// samples counts the individual equalities that were tested.
struct CheckResult {
  std::string name;
  long violations = 0;
  long samples = 0;
  std::vector<std::string> notes;  // first few offending cases, for reports

  static constexpr std::size_t max_notes = 8;

  bool ok() const { return violations == 0; }

  void count(bool passed, const std::string& note_on_failure) {
    ++samples;
    if (passed) return;
    ++violations;
    if (notes.size() < max_notes) notes.push_back(note_on_failure);
  }

  void merge(const CheckResult& other) {
    violations += other.violations;
    samples += other.samples;
    for (const std::string& n : other.notes)
      if (notes.size() < max_notes) notes.push_back(n);
  }
};

}  // namespace fgd
