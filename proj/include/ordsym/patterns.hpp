#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ordsym/errors.hpp"

namespace ordsym {

// Dense index into the symmetric group S_d, range {0, ..., d!-1}.
using PatternId = std::int32_t;

// Window lengths are capped because every downstream table is indexed by d!.
// Default cap is 8; the environment variable ORDSYM_MAX_D can raise it up to
// the absolute ceiling below.
inline constexpr int kAbsoluteMaxOrder = 10;
int max_pattern_order();

std::int64_t factorial(int d);

// The permutation (pi_1, ..., pi_d) of {1, ..., d} such that the window
// values at positions pi_1, ..., pi_d are in ascending order. Ties are
// broken by placing the larger original index first.
class OrdinalPattern {
 public:
  explicit OrdinalPattern(std::vector<int> ranks);

  int order() const { return static_cast<int>(ranks_.size()); }
  const std::vector<int>& ranks() const { return ranks_; }
  int operator[](int i) const { return ranks_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const OrdinalPattern&, const OrdinalPattern&) = default;

 private:
  std::vector<int> ranks_;
};

namespace detail {
// Sorts window positions by value, equal values ordered by descending
// position, and returns the 1-based rank word. Writes into `ranks`.
template <typename Getter>
void argsort_ranks(const Getter& value_at, int d, int* ranks) {
  int idx[kAbsoluteMaxOrder];
  for (int i = 0; i < d; ++i) idx[i] = i;
  // Insertion sort; d <= 10 so quadratic cost is optimal here.
  for (int i = 1; i < d; ++i) {
    const int cur = idx[i];
    const double cv = value_at(cur);
    int j = i - 1;
    while (j >= 0) {
      const double pv = value_at(idx[j]);
      if (pv < cv || (pv == cv && idx[j] > cur)) break;
      idx[j + 1] = idx[j];
      --j;
    }
    idx[j + 1] = cur;
  }
  for (int i = 0; i < d; ++i) ranks[i] = idx[i] + 1;
}

PatternId lehmer_encode(const int* ranks, int d);
void check_order(int d);
}  // namespace detail

// Maps a window of d consecutive values to its ordinal pattern. Accepts any
// dense Eigen vector expression with a real scalar type.
template <typename Derived>
OrdinalPattern extract_pattern(const Eigen::MatrixBase<Derived>& window) {
  const int d = static_cast<int>(window.size());
  if (d < 2) throw WindowTooShort("window has length " + std::to_string(d) + ", need at least 2");
  detail::check_order(d);
  double values[kAbsoluteMaxOrder];
  for (int i = 0; i < d; ++i) {
    values[i] = static_cast<double>(window[i]);
    if (!std::isfinite(values[i]))
      throw NonFiniteValue("non-finite value at window position " + std::to_string(i));
  }
  int ranks[kAbsoluteMaxOrder];
  detail::argsort_ranks([&](int i) { return values[i]; }, d, ranks);
  return OrdinalPattern(std::vector<int>(ranks, ranks + d));
}

// Pattern ids of all n = len - d + 1 overlapping windows.
std::vector<PatternId> pattern_sequence(Eigen::Ref<const Eigen::VectorXd> series, int d);

// (pi_d, ..., pi_1): the pattern of the time-reversed window.
OrdinalPattern reverse(const OrdinalPattern& p);

// (d+1-pi_1, ..., d+1-pi_d): the pattern of the sign-flipped window.
OrdinalPattern reflect(const OrdinalPattern& p);

// Lehmer (factorial number system) bijection between S_d and {0,...,d!-1}.
PatternId encode(const OrdinalPattern& p);
OrdinalPattern decode(PatternId id, int d);

std::string to_string(const OrdinalPattern& p);  // "(2,1,3)"

}  // namespace ordsym
