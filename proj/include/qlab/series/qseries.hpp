#pragma once

#include <optional>
#include <vector>

#include "qlab/series/sparse_poly.hpp"

namespace qlab {

/// Length of a product or bound of a sum; nullopt stands for infinity.
using Bound = std::optional<int>;
inline constexpr Bound unbounded = std::nullopt;

/// Image of each variable under a substitution; unset entries are unmapped.
using VarMap = std::array<std::optional<SignedMonomial>, kVarCount>;

/// Maps every source monomial multiplicatively into `target`. Signs
/// accumulate; the result is truncated by the target ring.
inline SparsePoly substitute(const SparsePoly& p, const VarMap& map, const Ring& target) {
  SparsePoly out(target);
  for (const auto& [m, c] : p.terms()) {
    SignedMonomial image;
    for (Var v : p.vars()) {
      int e = m[v];
      if (e == 0) continue;
      const auto& img = map[static_cast<std::size_t>(v)];
      if (!img)
        throw StructuralError("substitution leaves '" + std::string(var_name(v)) + "' unmapped");
      image = image * img->pow(e);
    }
    if (!lives_in(image.mono, target.vars))
      throw StructuralError("substitution image leaves the target ring " + target.vars.to_string());
    out.add_term(image.mono, image.sign < 0 ? Integer(-c) : c);
  }
  return out;
}

namespace detail {

// `m` is outside the window and multiplying by powers of `step` never brings
// it back.
inline bool permanently_out(const TruncationSpec& t, const Monomial& m, const Monomial& step) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const VarBounds& b = t.bounds(static_cast<Var>(i));
    if (b.max && m.exp[i] > *b.max && step.exp[i] >= 0) return true;
    if (b.min && m.exp[i] < *b.min && step.exp[i] <= 0) return true;
  }
  return t.total_cap() && m.total_degree() > *t.total_cap() && step.total_degree() >= 0;
}

// Number of fixed-point rounds after which a series inverse is exact, or
// nullopt when no grading makes every non-constant term contract.
inline std::optional<int> inversion_rounds(const SparsePoly& rest) {
  const TruncationSpec& t = rest.trunc();
  std::optional<int> best;
  auto consider = [&](int rounds) {
    if (!best || rounds < *best) best = rounds;
  };
  bool all_nonneg = true;
  for (Var v : rest.vars()) {
    const VarBounds& b = t.bounds(v);
    if (!b.min || *b.min < 0) all_nonneg = false;
  }
  for (Var v : rest.vars()) {
    const VarBounds& b = t.bounds(v);
    if (!b.max || !b.min || *b.min < 0) continue;
    bool grows = true;
    for (const auto& [m, c] : rest.terms())
      if (m[v] < 1) grows = false;
    if (grows) consider(*b.max + 1);
  }
  if (t.total_cap() && all_nonneg) {
    bool grows = true;
    for (const auto& [m, c] : rest.terms())
      if (m.total_degree() < 1) grows = false;
    if (grows) consider(*t.total_cap() + 1);
  }
  return best;
}

}  // namespace detail

/// Truncated multiplicative inverse. The constant term must be ±1 and the
/// remaining terms must all have positive degree in some bounded grading.
inline SparsePoly series_inverse(const SparsePoly& p) {
  Integer c0 = p.constant_term();
  if (c0 != 1 && c0 != -1)
    throw NonInvertibleError("constant term " + c0.str() + " is not a unit");
  SparsePoly rest = p - SparsePoly::constant(p.ring(), c0);
  SparsePoly s = SparsePoly::constant(p.ring(), c0);
  if (rest.is_zero()) return s;
  auto rounds = detail::inversion_rounds(rest);
  if (!rounds) throw NonInvertibleError("no bounded grading makes the series converge");
  const SparsePoly one = SparsePoly::one(p.ring());
  // s <- c0 (1 - rest*s) gains at least one degree of the grading per round.
  for (int k = 0; k < *rounds; ++k) {
    SparsePoly next = (one - rest * s) * SparsePoly::constant(p.ring(), c0);
    if (next == s) break;
    s = std::move(next);
  }
  return s;
}

/// 1/(1 - m) expanded until the powers of m leave the window.
inline SparsePoly geometric_series(const SignedMonomial& m, const Ring& ring) {
  if (m.mono.is_one())
    throw NonInvertibleError("1 - (" + to_string(m, ring.vars) + ") has no unit constant term");
  if (!ring.trunc.escapes(m.mono))
    throw DivergenceError("geometric series in " + to_string(m, ring.vars) +
                          " does not stabilize under the truncation");
  SparsePoly out(ring);
  SignedMonomial power;
  while (!detail::permanently_out(ring.trunc, power.mono, m.mono)) {
    out.add_term(power.mono, power.sign);
    power = power * m;
  }
  return out;
}

namespace detail {

template <class Step>
void for_each_pochhammer_factor(const SignedMonomial& first, const SignedMonomial& ratio, Bound length,
                                const Ring& ring, Step&& step) {
  if (length && *length < 0) throw DomainError("negative Pochhammer length");
  if (!length && !ring.trunc.escapes(ratio.mono))
    throw DivergenceError("infinite product with ratio " + to_string(ratio, ring.vars) +
                          " does not stabilize under the truncation");
  SignedMonomial factor = first;
  for (int i = 0; !length || i < *length; ++i) {
    if (permanently_out(ring.trunc, factor.mono, ratio.mono)) break;
    step(factor);
    factor = factor * ratio;
  }
}

}  // namespace detail

/// (first; ratio)_length = prod_{i<length} (1 - first*ratio^i), truncated.
/// An unbounded length stops once the factors are 1 up to truncation.
inline SparsePoly pochhammer(const SignedMonomial& first, const SignedMonomial& ratio, Bound length,
                             const Ring& ring) {
  SparsePoly out = SparsePoly::one(ring);
  const SparsePoly one = SparsePoly::one(ring);
  detail::for_each_pochhammer_factor(first, ratio, length, ring, [&](const SignedMonomial& f) {
    out *= one - SparsePoly::from_monomial(ring, f);
  });
  return out;
}

/// 1/(first; ratio)_length as a product of geometric series.
inline SparsePoly pochhammer_inverse(const SignedMonomial& first, const SignedMonomial& ratio,
                                     Bound length, const Ring& ring) {
  SparsePoly out = SparsePoly::one(ring);
  detail::for_each_pochhammer_factor(first, ratio, length, ring, [&](const SignedMonomial& f) {
    out *= geometric_series(f, ring);
  });
  return out;
}

/// Gaussian binomials [n j]_base for j = 0..n, by the Pascal recurrence
/// [m j] = [m-1 j-1] + base^j [m-1 j]. Empty for n < 0.
inline std::vector<SparsePoly> qbinomial_row(int n, const SignedMonomial& base, const Ring& ring) {
  if (n < 0) return {};
  std::vector<SparsePoly> row{SparsePoly::one(ring)};
  row.reserve(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    std::vector<SparsePoly> next;
    next.reserve(static_cast<std::size_t>(m) + 1);
    next.push_back(SparsePoly::one(ring));
    for (int j = 1; j < m; ++j)
      next.push_back(row[j - 1] + row[j].times(base.pow(j)));
    next.push_back(SparsePoly::one(ring));
    row = std::move(next);
  }
  return row;
}

/// [n k]_base; zero when k < 0, k > n or n < 0.
inline SparsePoly qbinomial(int n, int k, const SignedMonomial& base, const Ring& ring) {
  if (n < 0 || k < 0 || k > n) return SparsePoly(ring);
  if (k == 0 || k == n) return SparsePoly::one(ring);
  // Column-limited Pascal table.
  std::vector<SparsePoly> col(static_cast<std::size_t>(k) + 1, SparsePoly(ring));
  col[0] = SparsePoly::one(ring);
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      if (j == m)
        col[j] = SparsePoly::one(ring);
      else
        col[j] = col[j - 1] + col[j].times(base.pow(j));
    }
  }
  return col[k];
}

/// H_N(z, q) = sum_k [N k]_q z^k.
inline SparsePoly rogers_szego(int n, const Ring& ring) {
  if (!ring.vars.contains(Var::q) || !ring.vars.contains(Var::z))
    throw StructuralError("Rogers-Szego polynomials need both q and z");
  SparsePoly out(ring);
  auto row = qbinomial_row(n, SignedMonomial::var(Var::q), ring);
  for (int k = 0; k <= n; ++k) out += row[k].times(SignedMonomial::var(Var::z, k));
  return out;
}

/// Coefficient of var^degree, as a polynomial in the remaining variables.
inline SparsePoly coeff_of(const SparsePoly& p, Var var, int degree) {
  if (!p.vars().contains(var))
    throw StructuralError("variable '" + std::string(var_name(var)) + "' not in " + p.vars().to_string());
  TruncationSpec t = p.trunc().with_min(var, 0).with_max(var, unbounded);
  SparsePoly out(Ring{p.vars().without(var), t});
  for (const auto& [m, c] : p.terms()) {
    if (m[var] != degree) continue;
    Monomial rest = m;
    rest[var] = 0;
    out.add_term(rest, c);
  }
  return out;
}

}  // namespace qlab
