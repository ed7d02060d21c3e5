#pragma once

#include <string>
#include <vector>

#include "qlab/partition/partition.hpp"
#include "qlab/series/qseries.hpp"

namespace qlab {

/// A partition all of whose parts are odd.
class OddPartition {
 public:
  OddPartition() = default;

  explicit OddPartition(Partition p) : p_(std::move(p)) {
    for (int part : p_.parts())
      if (part % 2 == 0) throw DomainError("odd partition has even part in " + p_.to_string());
  }

  const Partition& partition() const { return p_; }
  std::span<const int> parts() const { return p_.parts(); }
  int length() const { return p_.length(); }
  int size() const { return p_.size(); }
  std::string to_string() const { return p_.to_string(); }

  friend bool operator==(const OddPartition&, const OddPartition&) = default;

 private:
  Partition p_;
};

/// Rows of odd width centred on column 0; row i covers offsets
/// -(μ_i-1)/2 .. (μ_i-1)/2.
class CenteredDiagram {
 public:
  explicit CenteredDiagram(const OddPartition& mu) {
    for (int part : mu.parts()) half_.push_back((part - 1) / 2);
  }

  int rows() const { return static_cast<int>(half_.size()); }
  /// Half-width of row i (1-based); -1 past the last row.
  int half(int row) const { return row >= 1 && row <= rows() ? half_[row - 1] : -1; }
  bool contains(int row, int offset) const { return half(row) >= (offset < 0 ? -offset : offset); }

  /// Number of cells in column `offset` from row `from` downward.
  int column_from(int offset, int from) const {
    int n = 0;
    for (int r = std::max(from, 1); r <= rows(); ++r)
      if (contains(r, offset)) ++n;
    return n;
  }

  /// One text row per part, `#` cells padded to a common centre.
  std::vector<std::string> render() const {
    std::vector<std::string> out;
    int width = rows() ? half_.front() : 0;
    for (int h : half_) out.push_back(std::string(width - h, ' ') + std::string(2 * h + 1, '#'));
    return out;
  }

 private:
  std::vector<int> half_;
};

/// π ↦ π_o: a column of j cells with π to its right and the mirror image of
/// π to its left, read row by row. With a bound N the largest part of π must
/// not exceed N - j.
inline OddPartition embed(const Partition& pi, int column, Bound bound = unbounded) {
  if (column < 1) throw DomainError("embed needs a positive column height");
  if (pi.length() > column)
    throw DomainError("partition " + pi.to_string() + " has more than " + std::to_string(column) + " parts");
  if (bound && pi.largest() > *bound - column)
    throw DomainError("largest part of " + pi.to_string() + " exceeds N - j = " + std::to_string(*bound - column));
  std::vector<int> parts;
  for (int i = 1; i <= column; ++i) parts.push_back(2 * pi.part(i) + 1);
  return OddPartition(Partition(std::move(parts)));
}

/// Inverse of embed: the column height is the number of parts.
inline Partition unembed(const OddPartition& mu) {
  std::vector<int> parts;
  for (int part : mu.parts())
    if (part > 1) parts.push_back((part - 1) / 2);
  return Partition(std::move(parts));
}

/// Sylvester's map by hook peeling on the centred diagram. Part 2i-1 is the
/// right-bending hook at corner (i, i-1): column i-1 from row i down plus row
/// i right of that column. Part 2i is the left-bending hook at (i, -(i-1)):
/// row i left of column -(i-1) plus column -i from row i+1 down.
inline Partition sylvester(const OddPartition& mu) {
  CenteredDiagram diagram(mu);
  std::vector<int> nu;
  for (int i = 1;; ++i) {
    int arm = std::max(0, diagram.half(i) - i + 1);
    int odd_part = diagram.column_from(i - 1, i) + arm;
    if (odd_part == 0) break;
    nu.push_back(odd_part);
    int even_part = arm + diagram.column_from(-i, i + 1);
    if (even_part == 0) break;
    nu.push_back(even_part);
  }
  for (std::size_t k = 1; k < nu.size(); ++k)
    if (nu[k] >= nu[k - 1]) throw StructuralError("hook peeling produced non-distinct parts");
  return Partition(std::move(nu));
}

/// Rebuilds the odd partition from the hook lengths. Writing ν_k = x_k +
/// x_{k+1}, the odd x are column legs L_i and the even x are arms A_i, so
/// x_k is the alternating tail sum of ν.
inline OddPartition sylvester_inverse(const Partition& nu) {
  if (!nu.has_distinct_parts()) throw DomainError("sylvester_inverse needs distinct parts, got " + nu.to_string());
  int len = nu.length();
  std::vector<int> x(static_cast<std::size_t>(len) + 3, 0);  // 1-based
  for (int k = len; k >= 1; --k) x[k] = nu.part(k) - x[k + 1];
  auto leg = [&](int i) { return 2 * i - 1 < static_cast<int>(x.size()) ? x[2 * i - 1] : 0; };
  auto arm = [&](int i) { return 2 * i < static_cast<int>(x.size()) ? x[2 * i] : 0; };

  int rows = leg(1);
  std::vector<int> rho(static_cast<std::size_t>(rows) + 1, 0);  // ρ_r = half-width + 1
  int durfee = 0;
  while (durfee < rows && arm(durfee + 1) > 0) ++durfee;
  for (int i = 1; i <= durfee; ++i) rho[i] = arm(i) + i;
  for (int r = durfee + 1; r <= rows; ++r)
    for (int i = 1; i <= r; ++i)
      if (leg(i) + i - 1 >= r) ++rho[r];

  std::vector<int> parts;
  for (int r = 1; r <= rows; ++r) {
    if (rho[r] < 1) throw StructuralError("sylvester_inverse: no preimage for " + nu.to_string());
    parts.push_back(2 * rho[r] - 1);
  }
  OddPartition mu;
  try {
    mu = OddPartition(Partition(std::move(parts)));
  } catch (const DomainError&) {
    throw StructuralError("sylvester_inverse: no preimage for " + nu.to_string());
  }
  if (!(sylvester(mu) == nu)) throw StructuralError("sylvester_inverse: no preimage for " + nu.to_string());
  return mu;
}

/// Statistics of ν = sylvester(μ) predicted from μ.
struct TransportedStats {
  int alternating = 0;  // γ(ν) = #(μ)
  int even_sum = 0;     // E(ν) = (|μ| - #(μ))/2
  int largest = 0;      // ν_1 = #(μ) + (μ_1 - 1)/2

  friend bool operator==(const TransportedStats&, const TransportedStats&) = default;
};

inline TransportedStats predicted_stats(const OddPartition& mu) {
  int first = mu.length() ? mu.parts().front() : 1;
  return {mu.length(), (mu.size() - mu.length()) / 2, mu.length() ? mu.length() + (first - 1) / 2 : 0};
}

inline TransportedStats observed_stats(const Partition& nu) {
  StatRecord s = stats(nu);
  return {s.alternating, s.even_sum, nu.largest()};
}

}  // namespace qlab
