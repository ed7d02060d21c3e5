#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlab/errors.hpp"
#include "qlab/series/sparse_poly.hpp"

namespace qlab {

/// Weakly decreasing finite sequence of positive integers; the empty
/// sequence is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses `5,5,3,2`; the empty string and `[]` denote the empty partition.
  static Partition parse(std::string_view text) {
    if (!text.empty() && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    while (!text.empty()) {
      auto comma = text.find(',');
      std::string_view item = text.substr(0, comma);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
        throw DomainError("cannot parse partition part '" + std::string(item) + "'");
      parts.push_back(v);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
  }

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const { return parts_.empty() ? 0 : parts_.back(); }
  /// 1-based part access, λ_i; 0 past the end.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  bool has_distinct_parts() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] == parts_[i - 1]) return false;
    return true;
  }

  /// Consecutive parts differ by at least `gap`.
  bool has_min_gap(int gap) const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i - 1] - parts_[i] < gap) return false;
    return true;
  }

  /// `12,10,7`; `[]` when empty.
  std::string to_string() const {
    if (parts_.empty()) return "[]";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct StatRecord {
  int size = 0;
  int length = 0;
  int odd_sum = 0;   // O: λ1 + λ3 + ...
  int even_sum = 0;  // E: λ2 + λ4 + ...
  int ceil_odd = 0;
  int floor_odd = 0;
  int ceil_even = 0;
  int floor_even = 0;
  int alternating = 0;  // γ = O - E
  int max_hook = 0;     // λ1 + #(π) - 1, 0 for ∅

  friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

inline StatRecord stats_of(std::span<const int> parts) {
  StatRecord s;
  s.length = static_cast<int>(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int p = parts[i];
    s.size += p;
    if (i % 2 == 0) {
      s.odd_sum += p;
      s.ceil_odd += (p + 1) / 2;
      s.floor_odd += p / 2;
    } else {
      s.even_sum += p;
      s.ceil_even += (p + 1) / 2;
      s.floor_even += p / 2;
    }
  }
  s.alternating = s.odd_sum - s.even_sum;
  s.max_hook = parts.empty() ? 0 : parts.front() + s.length - 1;
  return s;
}

inline StatRecord stats(const Partition& p) { return stats_of(p.parts()); }

/// Exponents of a, b, c, d in the decorated Ferrers diagram: odd-indexed
/// rows alternate a,b starting with a; even-indexed rows alternate c,d.
struct BouletExponents {
  int a = 0, b = 0, c = 0, d = 0;

  friend bool operator==(const BouletExponents&, const BouletExponents&) = default;
};

inline BouletExponents boulet_weight(std::span<const int> parts) {
  StatRecord s = stats_of(parts);
  return {s.ceil_odd, s.floor_odd, s.ceil_even, s.floor_even};
}

inline BouletExponents boulet_weight(const Partition& p) { return boulet_weight(p.parts()); }

inline Monomial boulet_monomial(const BouletExponents& e) {
  Monomial m;
  m[Var::a] = e.a;
  m[Var::b] = e.b;
  m[Var::c] = e.c;
  m[Var::d] = e.d;
  return m;
}

/// Multiplicative weight on gap-2 partitions:
/// λ_k · prod_{i<k} (λ_i - λ_{i+1} - 1), with the empty partition weighing 1.
inline Integer rr_weight(const Partition& p) {
  if (!p.has_min_gap(2)) throw DomainError("rr_weight needs gaps >= 2, got " + p.to_string());
  if (p.empty()) return 1;
  Integer w = p.smallest();
  auto parts = p.parts();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) w *= parts[i] - parts[i + 1] - 1;
  return w;
}

/// (N - λ1) · rr_weight(π), with the empty partition weighing N + 1.
inline Integer rr_weight_hat(const Partition& p, int bound) {
  if (!p.has_min_gap(2)) throw DomainError("rr_weight_hat needs gaps >= 2, got " + p.to_string());
  if (bound < 0) throw DomainError("rr_weight_hat needs N >= 0");
  if (p.empty()) return bound + 1;
  if (p.largest() > bound - 1)
    throw DomainError("rr_weight_hat needs largest part <= N-1, got " + p.to_string());
  return Integer(bound - p.largest()) * rr_weight(p);
}

/// Red and green partitions whose sizes add up.
struct TwoColorPartition {
  Partition red;
  Partition green;

  int size() const { return red.size() + green.size(); }

  /// `red:[3,1];green:[2]`.
  std::string to_string() const {
    auto bracket = [](const Partition& p) { return p.empty() ? std::string("[]") : "[" + p.to_string() + "]"; };
    return "red:" + bracket(red) + ";green:" + bracket(green);
  }

  friend bool operator==(const TwoColorPartition&, const TwoColorPartition&) = default;
};

}  // namespace qlab
