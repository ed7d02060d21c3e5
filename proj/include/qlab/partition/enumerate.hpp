#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "qlab/partition/partition.hpp"
#include "qlab/series/qseries.hpp"

namespace qlab {

/// Statistic whose running value caps the enumeration. All three are
/// monotone under extending a partition by a further (smaller) part.
enum class CapKind { size, odd_sum, even_sum };

struct Cap {
  CapKind kind = CapKind::size;
  int bound = 0;
};

/// Describes a finite class of partitions: ordinary, distinct (gap >= 1) or
/// Rogers-Ramanujan (gap >= 2), optionally with bounds on largest part and
/// length, always capped by size, O or E.
struct ClassFilter {
  bool distinct = false;
  int min_gap = 1;  // only meaningful when distinct
  Bound max_part;
  Bound max_length;
  Cap cap;
  /// Optional bound on the alternating sum, used only for pruning.
  Bound max_alternating;

  static ClassFilter ordinary(Cap cap, Bound max_part = unbounded) {
    ClassFilter f;
    f.cap = cap;
    f.max_part = max_part;
    return f;
  }

  static ClassFilter distinct_parts(Cap cap, Bound max_part = unbounded) {
    ClassFilter f = ordinary(cap, max_part);
    f.distinct = true;
    return f;
  }

  static ClassFilter rogers_ramanujan(Cap cap, Bound max_part = unbounded) {
    ClassFilter f = distinct_parts(cap, max_part);
    f.min_gap = 2;
    return f;
  }

  int gap() const { return distinct ? min_gap : 0; }

  /// Largest size any member can have; throws if the class is infinite.
  int size_limit() const {
    if (cap.bound < 0) throw DomainError("negative enumeration cap");
    if (distinct && min_gap < 1) throw DomainError("distinct filter needs min_gap >= 1");
    int limit = std::numeric_limits<int>::max();
    if (max_part && max_length) limit = std::min(limit, std::max(0, *max_part) * std::max(0, *max_length));
    switch (cap.kind) {
      case CapKind::size:
        limit = std::min(limit, cap.bound);
        break;
      case CapKind::odd_sum:
        // E <= O, so size <= 2·O.
        limit = std::min(limit, 2 * cap.bound);
        break;
      case CapKind::even_sum:
        // O <= λ1 + E, so size <= λ1 + 2·E; λ1 must be bounded.
        if (!max_part)
          throw DomainError("an E-capped class needs a bound on the largest part to be finite");
        limit = std::min(limit, std::max(0, *max_part) + 2 * cap.bound);
        break;
    }
    return limit;
  }
};

namespace detail {

struct PartitionWalker {
  const ClassFilter& filter;
  std::function<void(std::span<const int>)> visit;
  std::vector<int> parts;
  int gap = 0;

  // Largest total reachable from `count` more parts, each at most `top`.
  long long reachable(int top, int slots) const {
    if (top <= 0 || slots <= 0) return 0;
    if (gap == 0) return static_cast<long long>(top) * slots;
    long long total = 0;
    for (int p = top, k = 0; p > 0 && k < slots; p -= gap, ++k) total += p;
    return total;
  }

  void walk(int remaining, int top, int odd, int even, int alt) {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    int len = static_cast<int>(parts.size());
    int slots = filter.max_length ? *filter.max_length - len : std::numeric_limits<int>::max();
    if (slots <= 0 || reachable(std::min(top, remaining), slots) < remaining) return;
    bool odd_index = len % 2 == 0;  // next part is λ_{len+1}
    int start = std::min(top, remaining);
    if (odd_index && filter.cap.kind == CapKind::odd_sum) start = std::min(start, filter.cap.bound - odd);
    if (!odd_index && filter.cap.kind == CapKind::even_sum) start = std::min(start, filter.cap.bound - even);
    for (int p = start; p >= 1; --p) {
      int o = odd + (odd_index ? p : 0);
      int e = even + (odd_index ? 0 : p);
      int a = alt + (odd_index ? p : -p);
      // After an even-indexed part the alternating sum can only grow.
      if (filter.max_alternating && !odd_index && a > *filter.max_alternating) break;
      parts.push_back(p);
      walk(remaining - p, p - gap, o, e, a);
      parts.pop_back();
    }
  }
};

}  // namespace detail

/// Visits every member of the class exactly once, ordered by size and then
/// lexicographically descending parts.
template <class Visitor>
void for_each_partition(const ClassFilter& filter, Visitor&& visit) {
  int limit = filter.size_limit();
  int top = filter.max_part ? *filter.max_part : std::numeric_limits<int>::max();
  detail::PartitionWalker walker{filter, std::ref(visit), {}, filter.gap()};
  for (int n = 0; n <= limit; ++n) walker.walk(n, top, 0, 0, 0);
}

/// Members of exactly size n (the cap still applies).
template <class Visitor>
void for_each_partition_of(int n, const ClassFilter& filter, Visitor&& visit) {
  if (n < 0) return;
  int top = filter.max_part ? *filter.max_part : std::numeric_limits<int>::max();
  detail::PartitionWalker walker{filter, std::ref(visit), {}, filter.gap()};
  walker.walk(n, top, 0, 0, 0);
}

inline std::vector<Partition> enumerate(const ClassFilter& filter) {
  std::vector<Partition> out;
  for_each_partition(filter, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

/// Which side condition a two-color partition must satisfy.
enum class TwoColorRule {
  red_count_plus_green_max,  // #red + max(green) <= bound
  green_max,                 // max(green) <= bound
  red_parts_at_most,         // every red part <= bound
};

struct TwoColorConstraint {
  TwoColorRule rule = TwoColorRule::red_count_plus_green_max;
  int bound = 0;
};

/// Visits every (red, green) pair of total size n with the requested number
/// of red parts (exact, or any) and the side condition. Ordered by red size,
/// then red parts, then green parts.
template <class Visitor>
void for_each_two_color(int n, Bound red_count, TwoColorConstraint rule, Visitor&& visit) {
  if (n < 0 || rule.bound < 0) return;
  for (int r = 0; r <= n; ++r) {
    ClassFilter red = ClassFilter::ordinary({CapKind::size, r});
    if (red_count) red.max_length = *red_count;
    if (rule.rule == TwoColorRule::red_parts_at_most) red.max_part = rule.bound;
    if (rule.rule == TwoColorRule::red_count_plus_green_max) red.max_length = red_count ? std::min(*red_count, rule.bound) : rule.bound;
    std::vector<Partition> reds;
    for_each_partition_of(r, red, [&](std::span<const int> parts) {
      if (red_count && static_cast<int>(parts.size()) != *red_count) return;
      reds.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    });
    for (const Partition& rp : reds) {
      int green_max = rule.rule == TwoColorRule::red_count_plus_green_max ? rule.bound - rp.length()
                      : rule.rule == TwoColorRule::green_max            ? rule.bound
                                                                         : n;
      ClassFilter green = ClassFilter::ordinary({CapKind::size, n - r}, green_max);
      for_each_partition_of(n - r, green, [&](std::span<const int> parts) {
        visit(rp, std::span<const int>(parts));
      });
    }
  }
}

inline std::vector<TwoColorPartition> enumerate_two_color(int n, Bound red_count, TwoColorConstraint rule) {
  std::vector<TwoColorPartition> out;
  for_each_two_color(n, red_count, rule, [&](const Partition& red, std::span<const int> green) {
    out.push_back({red, Partition(std::vector<int>(green.begin(), green.end()))});
  });
  return out;
}

/// Γ_N(n) (any length) or Γ_{N,j}(n) (exactly j parts): partitions of n whose
/// largest hook λ1 + #(π) - 1 is at most N.
inline Integer hook_count(int n, int bound, Bound length = unbounded) {
  if (n < 0) return 0;
  ClassFilter f = ClassFilter::ordinary({CapKind::size, n}, std::max(bound, 0));
  f.max_length = std::max(bound, 0);
  Integer count = 0;
  for_each_partition_of(n, f, [&](std::span<const int> parts) {
    int len = static_cast<int>(parts.size());
    if (length && len != *length) return;
    int hook = parts.empty() ? 0 : parts.front() + len - 1;
    if (hook <= bound) ++count;
  });
  return count;
}

}  // namespace qlab
