#pragma once

#include <array>
#include <vector>

#include "qlab/genfun/substitution.hpp"
#include "qlab/partition/enumerate.hpp"

namespace qlab {

/// Ψ sums run over partitions into distinct parts, Φ sums over all partitions.
enum class BouletKind { psi, phi };

inline std::string_view kind_name(BouletKind k) { return k == BouletKind::psi ? "psi" : "phi"; }

/// How the enumeration side is summed.
///  - grouped: recursion over the largest admissible part, one term per
///    (part, multiplicity) choice; every partition of the class contributes
///    exactly one product of part weights.
///  - stream: visits each partition of a capped class and adds its weight.
enum class EnumStrategy { grouped, stream };

namespace detail {

struct BouletBudget {
  Grading grading;
  std::array<int, 4> cost;  // grading degree of the images of a, b, c, d
  int max_part = 0;

  int part_cost(int p, bool odd_index) const {
    return odd_index ? cost[0] * ((p + 1) / 2) + cost[1] * (p / 2) : cost[2] * ((p + 1) / 2) + cost[3] * (p / 2);
  }
};

inline BouletBudget boulet_budget(BouletKind kind, Bound bound, const Substitution& sub, const Ring& ring) {
  if (!(ring.vars == sub.target))
    throw StructuralError("substitution " + sub.name + " targets " + sub.target.to_string() + ", ring is " +
                          ring.vars.to_string());
  if (bound && *bound < 0) throw DomainError("largest-part bound must be non-negative");
  BouletBudget b{Grading::of(ring), {}, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    b.cost[i] = b.grading.degree(sub.images[i].mono);
    if (b.cost[i] < 0)
      throw DivergenceError("substitution " + sub.name + " has an image of negative degree");
  }
  if (bound) {
    b.max_part = *bound;
  } else if (b.cost[0] + b.cost[1] == 0) {
    throw DivergenceError("unbounded largest part diverges under " + sub.name);
  } else {
    b.max_part = 0;
    while (b.part_cost(b.max_part + 1, true) <= b.grading.budget) ++b.max_part;
  }
  // Larger first parts already exceed the budget on their own.
  if (b.cost[0] + b.cost[1] > 0)
    while (b.max_part > 0 && b.part_cost(b.max_part, true) > b.grading.budget) --b.max_part;
  if (kind == BouletKind::phi)
    for (int m = 1; m <= b.max_part; ++m)
      if (b.part_cost(m, true) + b.part_cost(m, false) == 0)
        throw DivergenceError("repeated parts of size " + std::to_string(m) + " carry weight of degree 0 under " +
                              sub.name);
  return b;
}

inline SparsePoly grouped_sum(BouletKind kind, const BouletBudget& budget, const Substitution& sub,
                              const Ring& work) {
  // table[p][m]: sum over the tails whose next index has parity p
  // (0 = odd-indexed) and whose parts are all <= m.
  std::array<std::vector<SparsePoly>, 2> table;
  for (auto& col : table) col.assign(static_cast<std::size_t>(budget.max_part) + 1, SparsePoly::one(work));
  for (int m = 1; m <= budget.max_part; ++m) {
    for (int p = 0; p < 2; ++p) {
      SparsePoly acc = table[p][m - 1];
      if (kind == BouletKind::psi) {
        if (budget.part_cost(m, p == 0) <= budget.grading.budget)
          acc += table[1 - p][m - 1].times(sub.part_weight(m, p == 0));
      } else {
        SignedMonomial run;
        int run_cost = 0;
        for (int k = 1;; ++k) {
          bool odd_index = ((p + k - 1) % 2) == 0;
          run = run * sub.part_weight(m, odd_index);
          run_cost += budget.part_cost(m, odd_index);
          if (run_cost > budget.grading.budget) break;
          acc += table[(p + k) % 2][m - 1].times(run);
        }
      }
      table[p][m] = std::move(acc);
    }
  }
  return table[0][budget.max_part];
}

inline Cap stream_cap(BouletKind kind, const BouletBudget& b) {
  int budget = b.grading.budget;
  const auto& c = b.cost;
  int all = std::min({c[0], c[1], c[2], c[3]});
  if (all >= 1) return {CapKind::size, budget / all};
  if (std::min(c[0], c[1]) >= 1) return {CapKind::odd_sum, budget / std::min(c[0], c[1])};
  if (c[0] >= 1) return {CapKind::odd_sum, 2 * budget / c[0]};
  if (std::min(c[2], c[3]) >= 1) return {CapKind::even_sum, budget / std::min(c[2], c[3])};
  if (c[2] >= 1) return {CapKind::even_sum, 2 * budget / c[2]};
  if (kind == BouletKind::psi) return {CapKind::size, b.max_part * (b.max_part + 1) / 2};
  throw DivergenceError("no enumeration cap contains every contributing partition");
}

}  // namespace detail

/// Σ over D_{≤N} (Ψ) or P_{≤N} (Φ) of the substituted Boulet weight ω_π,
/// truncated by `ring`. An unbounded N realizes the infinite sum through
/// stabilization: parts whose weight alone leaves the window are skipped.
inline SparsePoly boulet_enum(BouletKind kind, Bound bound, const Substitution& sub, const Ring& ring,
                              EnumStrategy strategy = EnumStrategy::grouped) {
  auto budget = detail::boulet_budget(kind, bound, sub, ring);
  Ring work = working_ring(ring);
  if (strategy == EnumStrategy::grouped) return detail::grouped_sum(kind, budget, sub, work).retruncate(ring.trunc);

  ClassFilter filter = kind == BouletKind::psi
                           ? ClassFilter::distinct_parts(detail::stream_cap(kind, budget), budget.max_part)
                           : ClassFilter::ordinary(detail::stream_cap(kind, budget), budget.max_part);
  SparsePoly out(ring);
  for_each_partition(filter, [&](std::span<const int> parts) {
    SignedMonomial w = sub.weight(boulet_weight(parts));
    out.add_term(w.mono, w.sign);
  });
  return out;
}

inline SparsePoly psi_enum(Bound bound, const Substitution& sub, const Ring& ring,
                           EnumStrategy strategy = EnumStrategy::grouped) {
  return boulet_enum(BouletKind::psi, bound, sub, ring, strategy);
}

inline SparsePoly phi_enum(Bound bound, const Substitution& sub, const Ring& ring,
                           EnumStrategy strategy = EnumStrategy::grouped) {
  return boulet_enum(BouletKind::phi, bound, sub, ring, strategy);
}

}  // namespace qlab
