#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hypermatroid {

struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string detail;
};

/// Outcome of an axiom checker. Only the first `kMaxStored` violations are
/// kept, in the order the checker enumerates instances.
struct Report {
  static constexpr std::size_t kMaxStored = 100;

  std::string check;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;

  explicit Report(std::string name = {}) : check(std::move(name)) {}

  bool pass() const { return violation_count == 0; }

  void add(Violation v) {
    ++violation_count;
    if (violations.size() < kMaxStored) violations.push_back(std::move(v));
  }

  void merge(const Report& other) {
    for (const auto& v : other.violations) add(v);
    violation_count += other.violation_count - other.violations.size();
  }

  bool has_axiom(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
};

}  // namespace hypermatroid
