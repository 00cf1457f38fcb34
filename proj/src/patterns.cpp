#include "ordsym/patterns.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace ordsym {

namespace {

constexpr std::array<std::int64_t, kAbsoluteMaxOrder + 1> kFactorial = [] {
  std::array<std::int64_t, kAbsoluteMaxOrder + 1> f{};
  f[0] = 1;
  for (int i = 1; i <= kAbsoluteMaxOrder; ++i) f[i] = f[i - 1] * i;
  return f;
}();

int read_order_cap() {
  int cap = 8;
  if (const char* env = std::getenv("ORDSYM_MAX_D")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 2 && v <= kAbsoluteMaxOrder) cap = static_cast<int>(v);
  }
  return cap;
}

}  // namespace

int max_pattern_order() {
  static const int cap = read_order_cap();
  return cap;
}

std::int64_t factorial(int d) {
  if (d < 0 || d > kAbsoluteMaxOrder)
    throw OrderOutOfRange("factorial argument " + std::to_string(d) + " out of range");
  return kFactorial[static_cast<std::size_t>(d)];
}

namespace detail {

void check_order(int d) {
  if (d < 2 || d > max_pattern_order())
    throw OrderOutOfRange("pattern order " + std::to_string(d) + " outside [2, " +
                          std::to_string(max_pattern_order()) + "]");
}

PatternId lehmer_encode(const int* ranks, int d) {
  std::int64_t id = 0;
  for (int i = 0; i < d - 1; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < d; ++j)
      if (ranks[j] < ranks[i]) ++smaller_after;
    id += smaller_after * kFactorial[static_cast<std::size_t>(d - 1 - i)];
  }
  return static_cast<PatternId>(id);
}

}  // namespace detail

OrdinalPattern::OrdinalPattern(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  const int d = order();
  detail::check_order(d);
  std::array<bool, kAbsoluteMaxOrder + 1> seen{};
  for (int r : ranks_) {
    if (r < 1 || r > d || seen[static_cast<std::size_t>(r)])
      throw BadPatternLiteral("ranks are not a permutation of 1.." + std::to_string(d));
    seen[static_cast<std::size_t>(r)] = true;
  }
}

std::vector<PatternId> pattern_sequence(Eigen::Ref<const Eigen::VectorXd> series, int d) {
  detail::check_order(d);
  const std::int64_t len = series.size();
  if (len < d)
    throw SeriesTooShort("series length " + std::to_string(len) + " shorter than window " +
                         std::to_string(d));
  for (std::int64_t i = 0; i < len; ++i)
    if (!std::isfinite(series[i]))
      throw NonFiniteValue("non-finite value at series index " + std::to_string(i));

  const std::int64_t n = len - d + 1;
  std::vector<PatternId> ids(static_cast<std::size_t>(n));
  const double* data = series.data();
  int ranks[kAbsoluteMaxOrder];
  for (std::int64_t t = 0; t < n; ++t) {
    const double* w = data + t;
    detail::argsort_ranks([&](int i) { return w[i]; }, d, ranks);
    ids[static_cast<std::size_t>(t)] = detail::lehmer_encode(ranks, d);
  }
  return ids;
}

OrdinalPattern reverse(const OrdinalPattern& p) {
  std::vector<int> r(p.ranks().rbegin(), p.ranks().rend());
  return OrdinalPattern(std::move(r));
}

OrdinalPattern reflect(const OrdinalPattern& p) {
  const int d = p.order();
  std::vector<int> r(p.ranks());
  for (int& v : r) v = d + 1 - v;
  return OrdinalPattern(std::move(r));
}

PatternId encode(const OrdinalPattern& p) {
  return detail::lehmer_encode(p.ranks().data(), p.order());
}

OrdinalPattern decode(PatternId id, int d) {
  detail::check_order(d);
  if (id < 0 || id >= factorial(d))
    throw IdOutOfRange("pattern id " + std::to_string(id) + " outside [0, " +
                       std::to_string(factorial(d)) + ")");
  std::vector<int> pool(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> ranks;
  ranks.reserve(static_cast<std::size_t>(d));
  std::int64_t rest = id;
  for (int i = d - 1; i >= 0; --i) {
    const std::int64_t f = factorial(i);
    const auto digit = static_cast<std::size_t>(rest / f);
    rest %= f;
    ranks.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return OrdinalPattern(std::move(ranks));
}

std::string to_string(const OrdinalPattern& p) {
  std::string out = "(";
  for (int i = 0; i < p.order(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  out += ')';
  return out;
}

}  // namespace ordsym
