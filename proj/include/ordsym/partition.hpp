#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ordsym/patterns.hpp"

namespace ordsym {

// A disjoint grouping G_1, ..., G_m covering all of S_d. Groups are stored in
// canonical order (groups by smallest member id, members ascending) so that
// eigenvector block layout and reports are reproducible byte for byte.
class Partition {
 public:
  Partition(int d, std::vector<std::vector<PatternId>> groups, std::string name);

  int order() const { return d_; }
  std::int64_t num_patterns() const { return factorial(d_); }
  int num_groups() const { return static_cast<int>(groups_.size()); }
  // t = d! - m, the number of nonzero eigenvalues of the limiting operator.
  int spectral_dim() const { return static_cast<int>(num_patterns()) - num_groups(); }

  const std::vector<std::vector<PatternId>>& groups() const { return groups_; }
  const std::vector<PatternId>& group(int g) const { return groups_[static_cast<std::size_t>(g)]; }
  int group_of(PatternId id) const;
  int group_size(int g) const { return static_cast<int>(groups_[static_cast<std::size_t>(g)].size()); }
  const std::string& name() const { return name_; }

 private:
  int d_;
  std::string name_;
  std::vector<std::vector<PatternId>> groups_;
  std::vector<int> group_of_;  // pattern id -> group index
};

// Orbits of S_d under the reversal involution; self-reversed patterns form
// singleton groups.
Partition reversal_partition(int d);

// Orbits under the reflection involution.
Partition reflection_partition(int d);

// Orbits under the group generated by reversal and reflection (the
// symmetries of stationary Gaussian processes).
Partition gaussian_partition(int d);

// Parses a textual partition: one group per line, patterns as tuples like
// `(1,2,3) (3,2,1)`, `#` comments allowed. Patterns not listed become
// singleton groups only when singleton_rest is set; otherwise the text must
// cover all of S_d.
Partition custom_partition(int d, std::string_view text, bool singleton_rest = false,
                           std::string name = "custom");

Partition load_partition(int d, const std::string& path, bool singleton_rest = false);

}  // namespace ordsym
