#pragma once

#include "qlab/genfun/boulet_sum.hpp"

namespace qlab {

/// N = 2M + ν with ν ∈ {0, 1}.
struct HalfSplit {
  int half;
  int parity;

  static HalfSplit of(int n) {
    if (n < 0) throw DomainError("bound must be non-negative, got " + std::to_string(n));
    return {n / 2, n % 2};
  }
};

namespace detail {

inline void check_target(const Substitution& sub, const Ring& ring) {
  if (!(ring.vars == sub.target))
    throw StructuralError("substitution " + sub.name + " targets " + sub.target.to_string() + ", ring is " +
                          ring.vars.to_string());
}

inline SparsePoly iz_sum(HalfSplit n, const Substitution& sub, const Ring& work) {
  const SignedMonomial Q = sub.big_q(), ab = sub.a() * sub.b();
  auto binom = qbinomial_row(n.half, Q, work);
  SparsePoly sum(work);
  for (int i = 0; i <= n.half; ++i) {
    SparsePoly term = binom[i] * pochhammer(-sub.a(), Q, n.half - i + n.parity, work);
    term *= pochhammer(-sub.c(), Q, i, work);
    sum += term.times(ab.pow(i));
  }
  return sum;
}

}  // namespace detail

/// Ishikawa-Zeng sum for Ψ_N.
inline SparsePoly psi_formula_iz(int bound, const Substitution& sub, const Ring& ring) {
  detail::check_target(sub, ring);
  Ring work = working_ring(ring);
  return detail::iz_sum(HalfSplit::of(bound), sub, work).retruncate(ring.trunc);
}

/// Ishikawa-Zeng sum for Φ_N: the Ψ sum over (ac;Q)_{M+ν} (Q;Q)_M.
inline SparsePoly phi_formula_iz(int bound, const Substitution& sub, const Ring& ring) {
  detail::check_target(sub, ring);
  Ring work = working_ring(ring);
  HalfSplit n = HalfSplit::of(bound);
  const SignedMonomial Q = sub.big_q();
  SparsePoly out = detail::iz_sum(n, sub, work);
  out *= pochhammer_inverse(sub.a() * sub.c(), Q, n.half + n.parity, work);
  out *= pochhammer_inverse(Q, Q, n.half, work);
  return out.retruncate(ring.trunc);
}

/// Companion sum for Ψ_N. The ratio (ac;Q)_{M+ν}/(ac;Q)_{i+ν} is the
/// product (ac·Q^{i+ν};Q)_{M-i}.
inline SparsePoly psi_formula_bu(int bound, const Substitution& sub, const Ring& ring) {
  detail::check_target(sub, ring);
  Ring work = working_ring(ring);
  HalfSplit n = HalfSplit::of(bound);
  const SignedMonomial Q = sub.big_q(), ab = sub.a() * sub.b(), ac = sub.a() * sub.c();
  const SignedMonomial abc = ab * sub.c();
  auto binom = qbinomial_row(n.half, Q, work);
  SparsePoly sum(work);
  for (int i = 0; i <= n.half; ++i) {
    SparsePoly term = binom[i] * pochhammer(-sub.a(), Q, i + n.parity, work);
    term *= pochhammer(-abc, Q, i, work);
    term *= pochhammer(ac * Q.pow(i + n.parity), Q, n.half - i, work);
    sum += term.times(ab.pow(n.half - i));
  }
  return sum.retruncate(ring.trunc);
}

/// Companion sum for Φ_N.
inline SparsePoly phi_formula_bu(int bound, const Substitution& sub, const Ring& ring) {
  detail::check_target(sub, ring);
  Ring work = working_ring(ring);
  HalfSplit n = HalfSplit::of(bound);
  const SignedMonomial Q = sub.big_q(), ab = sub.a() * sub.b(), ac = sub.a() * sub.c();
  const SignedMonomial abc = ab * sub.c();
  auto binom = qbinomial_row(n.half, Q, work);
  SparsePoly sum(work);
  for (int i = 0; i <= n.half; ++i) {
    SparsePoly term = binom[i] * pochhammer(-sub.a(), Q, i + n.parity, work);
    term *= pochhammer(-abc, Q, i, work);
    term *= pochhammer_inverse(ac, Q, i + n.parity, work);
    sum += term.times(ab.pow(n.half - i));
  }
  sum *= pochhammer_inverse(Q, Q, n.half, work);
  return sum.retruncate(ring.trunc);
}

inline SparsePoly psi_formula(int bound, const Substitution& sub, const Ring& ring, bool companion) {
  return companion ? psi_formula_bu(bound, sub, ring) : psi_formula_iz(bound, sub, ring);
}

inline SparsePoly phi_formula(int bound, const Substitution& sub, const Ring& ring, bool companion) {
  return companion ? phi_formula_bu(bound, sub, ring) : phi_formula_iz(bound, sub, ring);
}

/// (-a,-abc;Q)_∞/(ab;Q)_∞, and for Φ additionally over (ac,Q;Q)_∞.
inline SparsePoly boulet_product(BouletKind kind, const Substitution& sub, const Ring& ring) {
  detail::check_target(sub, ring);
  Ring work = working_ring(ring);
  const SignedMonomial Q = sub.big_q(), ab = sub.a() * sub.b();
  if (!work.trunc.escapes(Q.mono))
    throw DivergenceError("Q = " + to_string(Q, work.vars) + " does not grow under the truncation");
  SparsePoly out = pochhammer(-sub.a(), Q, unbounded, work);
  out *= pochhammer(-(ab * sub.c()), Q, unbounded, work);
  out *= pochhammer_inverse(ab, Q, unbounded, work);
  if (kind == BouletKind::phi) {
    out *= pochhammer_inverse(sub.a() * sub.c(), Q, unbounded, work);
    out *= pochhammer_inverse(Q, Q, unbounded, work);
  }
  return out.retruncate(ring.trunc);
}

enum class SchmidtVariant { old_form, new_form };

/// Sum forms of Ψ_N(q,q,1,1) and Φ_N(q,q,1,1).
///  old: Σ_i [M i]_{q²} (-q;q²)_{M-i+ν} (-1;q²)_i q^{2i}, Φ divides by (q;q)_N.
///  new: Σ_i [N i]_q q^i, Φ uses q^i/((q;q)_i (q;q)_{N-i}).
inline SparsePoly rhs_schmidt_sum(int bound, SchmidtVariant variant, BouletKind kind, const Ring& ring) {
  if (!ring.vars.contains(Var::q)) throw StructuralError("Schmidt sums need q");
  HalfSplit n = HalfSplit::of(bound);
  const SignedMonomial q = SignedMonomial::var(Var::q), q2 = q.pow(2);
  SparsePoly out(ring);
  if (variant == SchmidtVariant::old_form) {
    auto binom = qbinomial_row(n.half, q2, ring);
    for (int i = 0; i <= n.half; ++i) {
      SparsePoly term = binom[i] * pochhammer(-q, q2, n.half - i + n.parity, ring);
      term *= pochhammer(SignedMonomial::minus_one(), q2, i, ring);
      out += term.times(q2.pow(i));
    }
    if (kind == BouletKind::phi) out *= pochhammer_inverse(q, q, bound, ring);
    return out;
  }
  if (kind == BouletKind::psi) {
    auto binom = qbinomial_row(bound, q, ring);
    for (int i = 0; i <= bound; ++i) out += binom[i].times(q.pow(i));
    return out;
  }
  for (int i = 0; i <= bound; ++i)
    out += (pochhammer_inverse(q, q, i, ring) * pochhammer_inverse(q, q, bound - i, ring)).times(q.pow(i));
  return out;
}

/// Σ_k q^k z^k [N k]_q (Ψ) or Σ_k q^k z^k/((q;q)_k (q;q)_{N-k}) (Φ).
inline SparsePoly rhs_z_refined(int bound, BouletKind kind, const Ring& ring) {
  if (!ring.vars.contains(Var::q) || !ring.vars.contains(Var::z))
    throw StructuralError("z-refined sums need q and z");
  if (bound < 0) throw DomainError("bound must be non-negative");
  const SignedMonomial q = SignedMonomial::var(Var::q);
  SparsePoly out(ring);
  auto binom = kind == BouletKind::psi ? qbinomial_row(bound, q, ring) : std::vector<SparsePoly>{};
  for (int k = 0; k <= bound; ++k) {
    SignedMonomial qz = q.pow(k) * SignedMonomial::var(Var::z, k);
    if (kind == BouletKind::psi)
      out += binom[k].times(qz);
    else
      out += (pochhammer_inverse(q, q, k, ring) * pochhammer_inverse(q, q, bound - k, ring)).times(qz);
  }
  return out;
}

/// H_N(zq, q^2) by direct substitution into the Rogers-Szego polynomial.
inline SparsePoly rogers_szego_shifted(int bound, const Ring& ring) {
  if (!(ring.vars == VarSet::qz())) throw StructuralError("shifted Rogers-Szego polynomials live in {q,z}");
  if (bound < 0) throw DomainError("bound must be non-negative");
  SparsePoly h = rogers_szego(bound, Ring{VarSet::qz(), TruncationSpec{}});
  VarMap map;
  map[static_cast<std::size_t>(Var::q)] = SignedMonomial::var(Var::q, 2);
  map[static_cast<std::size_t>(Var::z)] = SignedMonomial::var(Var::z) * SignedMonomial::var(Var::q);
  return substitute(h, map, ring);
}

/// H_{2M+ν}(zq, q^2) = Σ_k [M k]_{q^4} (-zq;q^4)_{M-k+ν} (-q/z;q^4)_k (zq)^{2k}.
inline SparsePoly rogers_szego_sum(int bound, const Ring& ring) {
  if (!(ring.vars == VarSet::qz())) throw StructuralError("shifted Rogers-Szego polynomials live in {q,z}");
  Ring work = working_ring(ring);
  HalfSplit n = HalfSplit::of(bound);
  const SignedMonomial q = SignedMonomial::var(Var::q), z = SignedMonomial::var(Var::z);
  const SignedMonomial q4 = q.pow(4), zq = z * q, q_over_z = q * z.pow(-1);
  auto binom = qbinomial_row(n.half, q4, work);
  SparsePoly out(work);
  for (int k = 0; k <= n.half; ++k) {
    SparsePoly term = binom[k] * pochhammer(-zq, q4, n.half - k + n.parity, work);
    term *= pochhammer(-q_over_z, q4, k, work);
    out += term.times(zq.pow(2 * k));
  }
  return out.retruncate(ring.trunc);
}

}  // namespace qlab
