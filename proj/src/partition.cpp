#include "ordsym/partition.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ordsym {

Partition::Partition(int d, std::vector<std::vector<PatternId>> groups, std::string name)
    : d_(d), name_(std::move(name)), groups_(std::move(groups)) {
  detail::check_order(d_);
  const std::int64_t total = factorial(d_);
  std::int64_t covered = 0;
  group_of_.assign(static_cast<std::size_t>(total), -1);
  for (auto& g : groups_) {
    if (g.empty()) throw NotAPartition("empty group");
    std::sort(g.begin(), g.end());
    for (PatternId id : g) {
      if (id < 0 || id >= total)
        throw IdOutOfRange("pattern id " + std::to_string(id) + " outside S_" + std::to_string(d_));
      if (group_of_[static_cast<std::size_t>(id)] != -1)
        throw DuplicatePattern("pattern " + to_string(decode(id, d_)) + " appears twice");
      group_of_[static_cast<std::size_t>(id)] = 0;  // provisional; reassigned below
      ++covered;
    }
  }
  if (covered != total)
    throw NotAPartition("groups cover " + std::to_string(covered) + " of " +
                        std::to_string(total) + " patterns");
  std::sort(groups_.begin(), groups_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (int g = 0; g < num_groups(); ++g)
    for (PatternId id : groups_[static_cast<std::size_t>(g)])
      group_of_[static_cast<std::size_t>(id)] = g;
}

int Partition::group_of(PatternId id) const {
  if (id < 0 || id >= num_patterns())
    throw IdOutOfRange("pattern id " + std::to_string(id) + " outside S_" + std::to_string(d_));
  return group_of_[static_cast<std::size_t>(id)];
}

namespace {

// Builds orbit groups under the maps given in `images` (each an involution on
// pattern ids, or a composition thereof).
template <typename... Maps>
Partition orbit_partition(int d, std::string name, Maps... maps) {
  const std::int64_t total = factorial(d);
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  std::vector<std::vector<PatternId>> groups;
  for (PatternId id = 0; id < total; ++id) {
    if (seen[static_cast<std::size_t>(id)]) continue;
    std::set<PatternId> orbit{id};
    // Close under all maps; orbits of {rev, ref} have at most 4 elements.
    bool grew = true;
    while (grew) {
      grew = false;
      for (PatternId member : std::vector<PatternId>(orbit.begin(), orbit.end())) {
        const OrdinalPattern p = decode(member, d);
        for (PatternId image : {encode(maps(p))...}) {
          if (orbit.insert(image).second) grew = true;
        }
      }
    }
    for (PatternId member : orbit) seen[static_cast<std::size_t>(member)] = true;
    groups.emplace_back(orbit.begin(), orbit.end());
  }
  return Partition(d, std::move(groups), std::move(name));
}

}  // namespace

Partition reversal_partition(int d) {
  return orbit_partition(d, "reversal", [](const OrdinalPattern& p) { return reverse(p); });
}

Partition reflection_partition(int d) {
  return orbit_partition(d, "reflection", [](const OrdinalPattern& p) { return reflect(p); });
}

Partition gaussian_partition(int d) {
  return orbit_partition(
      d, "gaussian", [](const OrdinalPattern& p) { return reverse(p); },
      [](const OrdinalPattern& p) { return reflect(p); });
}

namespace {

// Parses one "(a,b,c)" tuple starting at text[pos] (which must be '(').
OrdinalPattern parse_tuple(std::string_view text, std::size_t& pos, int d) {
  std::vector<int> ranks;
  ++pos;  // consume '('
  std::string num;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == ',' || c == ')') {
      if (num.empty()) throw BadPatternLiteral("empty entry in pattern tuple");
      ranks.push_back(std::stoi(num));
      num.clear();
      if (c == ')') {
        ++pos;
        if (static_cast<int>(ranks.size()) != d)
          throw BadPatternLiteral("pattern tuple has " + std::to_string(ranks.size()) +
                                  " entries, expected " + std::to_string(d));
        return OrdinalPattern(std::move(ranks));
      }
    } else if (c >= '0' && c <= '9') {
      num += c;
    } else if (c != ' ' && c != '\t') {
      throw BadPatternLiteral(std::string("unexpected character '") + c + "' in pattern tuple");
    }
  }
  throw BadPatternLiteral("unterminated pattern tuple");
}

}  // namespace

Partition custom_partition(int d, std::string_view text, bool singleton_rest, std::string name) {
  detail::check_order(d);
  const std::int64_t total = factorial(d);
  std::vector<std::vector<PatternId>> groups;
  std::vector<bool> used(static_cast<std::size_t>(total), false);

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<PatternId> group;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const char c = line[pos];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
      } else if (c == '(') {
        const PatternId id = encode(parse_tuple(line, pos, d));
        if (used[static_cast<std::size_t>(id)])
          throw DuplicatePattern("pattern " + to_string(decode(id, d)) + " listed twice");
        used[static_cast<std::size_t>(id)] = true;
        group.push_back(id);
      } else {
        throw BadPatternLiteral(std::string("unexpected character '") + c + "' in partition text");
      }
    }
    if (!group.empty()) groups.push_back(std::move(group));
    line_start = line_end + 1;
  }

  std::int64_t missing = 0;
  for (PatternId id = 0; id < total; ++id) {
    if (!used[static_cast<std::size_t>(id)]) {
      ++missing;
      if (singleton_rest) groups.push_back({id});
    }
  }
  if (missing > 0 && !singleton_rest)
    throw NotAPartition(std::to_string(missing) + " of " + std::to_string(total) +
                        " patterns unlisted (pass singleton_rest to complete them as singletons)");
  return Partition(d, std::move(groups), std::move(name));
}

Partition load_partition(int d, const std::string& path, bool singleton_rest) {
  std::ifstream in(path);
  if (!in) throw FileNotFound("cannot open partition file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return custom_partition(d, buf.str(), singleton_rest, "file:" + path);
}

}  // namespace ordsym
