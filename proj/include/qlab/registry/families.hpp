#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qlab/genfun/formulas.hpp"
#include "qlab/registry/instance.hpp"

namespace qlab {

namespace detail {

inline long long int_param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw ParameterError("missing parameter '" + key + "'");
  if (const auto* v = std::get_if<long long>(&it->second)) return *v;
  throw ParameterError("parameter '" + key + "' must be an integer");
}

inline std::optional<long long> opt_int_param(const Params& p, const std::string& key) {
  if (!p.count(key)) return std::nullopt;
  return int_param(p, key);
}

inline std::string str_param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw ParameterError("missing parameter '" + key + "'");
  if (const auto* v = std::get_if<std::string>(&it->second)) return *v;
  throw ParameterError("parameter '" + key + "' must be a string");
}

inline int small_param(const Params& p, const std::string& key, long long lo, long long hi) {
  long long v = int_param(p, key);
  if (v < lo || v > hi)
    throw ParameterError("parameter '" + key + "' = " + std::to_string(v) + " outside " + std::to_string(lo) +
                         ".." + std::to_string(hi));
  return static_cast<int>(v);
}

// Generous ceiling on sizes; the profiles stay far below it.
inline constexpr long long kMaxParam = 200;

inline int bound_param(const Params& p, const std::string& key = "N") { return small_param(p, key, 0, kMaxParam); }

inline BouletKind kind_param(const Params& p) {
  std::string k = str_param(p, "kind");
  if (k == "psi") return BouletKind::psi;
  if (k == "phi") return BouletKind::phi;
  throw ParameterError("kind must be psi or phi, got '" + k + "'");
}

inline std::vector<long long> axis(const Params& fixed, const std::string& key, long long lo, long long hi) {
  auto it = fixed.find(key);
  if (it != fixed.end()) {
    if (const auto* v = std::get_if<long long>(&it->second)) return {*v};
    return {};
  }
  std::vector<long long> out;
  for (long long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

inline std::vector<std::string> str_axis(const Params& fixed, const std::string& key,
                                         std::vector<std::string> values) {
  auto it = fixed.find(key);
  if (it == fixed.end()) return values;
  if (const auto* v = std::get_if<std::string>(&it->second)) return {*v};
  return {};
}

inline std::vector<std::string> kinds(const Params& fixed) { return str_axis(fixed, "kind", {"psi", "phi"}); }

inline Ring q_ring(int degree) { return {VarSet::q_only(), TruncationSpec::q_degree(degree)}; }

inline Ring qz_ring(int degree, int z_bound) {
  return {VarSet::qz(), TruncationSpec::q_degree(degree).with_laurent(Var::z, z_bound)};
}

inline Ring abcd_ring(int total) { return {VarSet::abcd(), TruncationSpec::total(total)}; }

inline Ring ring_for(const Substitution& sub, const Profile& prof) {
  if (sub.target == VarSet::abcd()) return abcd_ring(prof.four_var_degree);
  if (sub.target == VarSet::qz()) return qz_ring(prof.degree, prof.z_bound);
  return q_ring(prof.degree);
}

inline int grading_bound(const Ring& ring) {
  if (ring.trunc.total_cap()) return *ring.trunc.total_cap();
  return *ring.trunc.bounds(Var::q).max;
}

// Full q-degree of H_N(zq, q^2).
inline int shifted_rs_degree(int n) { return n + n * n / 2; }

inline int ceil_half(int n) { return (n + 1) / 2; }

// Polynomial tally: counts[n] as the coefficient of q^n (and z^j).
inline SparsePoly tally(const Ring& ring) { return SparsePoly(ring); }

inline void bump(SparsePoly& p, int qdeg, std::optional<int> zdeg = std::nullopt) {
  Monomial m;
  m[Var::q] = qdeg;
  if (zdeg) m[Var::z] = *zdeg;
  p.add_term(m, 1);
}

// Optional exact n for count families: nmax for enumeration, then filter.
struct CountWindow {
  int max_n;
  std::optional<int> exact;

  bool keep(int n) const { return n <= max_n && (!exact || n == *exact); }
};

inline CountWindow count_window(const Params& p, const Profile& prof) {
  if (auto n = opt_int_param(p, "n")) {
    int v = small_param(p, "n", 0, kMaxParam);
    return {v, v};
  }
  return {prof.count_bound, std::nullopt};
}

inline SparsePoly keep_only_z(const SparsePoly& p, std::optional<int> j) {
  if (!j) return p;
  SparsePoly out(p.ring());
  for (const auto& [m, c] : p.terms())
    if (m[Var::z] == *j) out.add_term(m, c);
  return out;
}

inline std::string bracket(std::span<const int> parts) {
  return "(" + (parts.empty() ? std::string("empty") : Partition(std::vector<int>(parts.begin(), parts.end())).to_string()) + ")";
}

inline std::vector<std::string> preset_grid_names(bool allow_products, const Profile& prof, const Params& fixed) {
  std::vector<std::string> names;
  for (const auto& n : Substitution::preset_names()) {
    if (allow_products && (n == "-1,-1,q,q" || n == "1,1,q,q" || n == "z,z,q/z,q/z")) continue;
    bool four = n == "abcd";
    if (four && prof.four_variable == FourVariable::exclude) continue;
    if (!four && prof.four_variable == FourVariable::only) continue;
    names.push_back(n);
  }
  auto it = fixed.find("sub");
  if (it != fixed.end()) {
    if (const auto* v = std::get_if<std::string>(&it->second)) {
      if (std::find(names.begin(), names.end(), *v) == names.end()) return {};
      return {*v};
    }
    return {};
  }
  return names;
}

inline bool skip_plain(const Profile& prof) { return prof.four_variable == FourVariable::only; }

// ---------------------------------------------------------------------------
// Family builders.

inline FamilyDescriptor product_family(BouletKind kind) {
  FamilyDescriptor f;
  bool psi = kind == BouletKind::psi;
  f.id = psi ? "boulet-psi-product" : "boulet-phi-product";
  f.anchor = psi ? "sum over distinct partitions of w(a,b,c,d) = (-a,-abc;Q)_inf/(ab;Q)_inf, Q = abcd"
                 : "sum over all partitions of w(a,b,c,d) = (-a,-abc;Q)_inf/(ab,ac,Q;Q)_inf, Q = abcd";
  f.lhs = psi ? "Psi(sub), enumerated" : "Phi(sub), enumerated";
  f.rhs = "infinite product under sub";
  f.param_names = {"sub"};
  f.four_variable = true;
  f.grid = [](const Profile& prof, const Params& fixed) {
    std::vector<Params> out;
    for (const auto& s : preset_grid_names(true, prof, fixed)) out.push_back({{"sub", s}});
    return out;
  };
  f.build = [kind](const Params& p, const Profile& prof) {
    Substitution sub = Substitution::preset(str_param(p, "sub"));
    Ring ring = ring_for(sub, prof);
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = grading_bound(ring);
    inst.lhs = [=] { return boulet_enum(kind, unbounded, sub, ring); };
    inst.rhs = [=] { return boulet_product(kind, sub, ring); };
    return inst;
  };
  return f;
}

inline FamilyDescriptor infinite_q_family(std::string id, std::string anchor, std::string lhs, std::string rhs,
                                          std::string preset, BouletKind kind,
                                          std::function<SparsePoly(const Ring&)> product) {
  FamilyDescriptor f;
  f.id = std::move(id);
  f.anchor = std::move(anchor);
  f.lhs = std::move(lhs);
  f.rhs = std::move(rhs);
  f.grid = [](const Profile& prof, const Params&) {
    return skip_plain(prof) ? std::vector<Params>{} : std::vector<Params>{Params{}};
  };
  f.build = [preset, kind, product](const Params&, const Profile& prof) {
    Substitution sub = Substitution::preset(preset);
    Ring ring = q_ring(prof.degree);
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = prof.degree;
    inst.lhs = [=] { return boulet_enum(kind, unbounded, sub, ring); };
    inst.rhs = [=] { return product(ring); };
    return inst;
  };
  return f;
}

inline FamilyDescriptor formula_family(bool companion, BouletKind kind) {
  FamilyDescriptor f;
  bool psi = kind == BouletKind::psi;
  f.id = std::string(companion ? "bu-" : "iz-") + (psi ? "psi" : "phi");
  if (!companion)
    f.anchor = psi ? "Psi_{2M+v} = sum_i [M i]_Q (-a;Q)_{M-i+v} (-c;Q)_i (ab)^i"
                   : "Phi_{2M+v} = sum_i [M i]_Q (-a;Q)_{M-i+v} (-c;Q)_i (ab)^i / ((ac;Q)_{M+v} (Q;Q)_M)";
  else
    f.anchor = psi ? "Psi_{2M+v} = sum_i [M i]_Q (-a;Q)_{i+v} (-abc;Q)_i (ac;Q)_{M+v}/(ac;Q)_{i+v} (ab)^{M-i}"
                   : "Phi_{2M+v} = 1/(Q;Q)_M sum_i [M i]_Q (-a;Q)_{i+v} (-abc;Q)_i/(ac;Q)_{i+v} (ab)^{M-i}";
  f.lhs = psi ? "Psi_N(sub), enumerated" : "Phi_N(sub), enumerated";
  f.rhs = companion ? "companion sum" : "Pascal-binomial sum";
  f.param_names = {"N", "sub"};
  f.four_variable = true;
  f.grid = [](const Profile& prof, const Params& fixed) {
    std::vector<Params> out;
    for (const auto& s : preset_grid_names(false, prof, fixed)) {
      int top = s == "abcd" ? prof.four_var_N : prof.max_N;
      for (long long n : axis(fixed, "N", 0, top)) out.push_back({{"N", n}, {"sub", s}});
    }
    return out;
  };
  f.build = [companion, kind](const Params& p, const Profile& prof) {
    int n = bound_param(p);
    Substitution sub = Substitution::preset(str_param(p, "sub"));
    Ring ring = ring_for(sub, prof);
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = grading_bound(ring);
    inst.lhs = [=] { return boulet_enum(kind, n, sub, ring); };
    inst.rhs = [=] {
      return kind == BouletKind::psi ? psi_formula(n, sub, ring, companion) : phi_formula(n, sub, ring, companion);
    };
    return inst;
  };
  return f;
}

// Families indexed by N and kind whose both sides live in {q}.
// N is unbounded for the infinite forms.
using KindBuilder = std::function<SparsePoly(Bound n, BouletKind kind, const Ring&)>;

inline FamilyDescriptor finite_kind_family(std::string id, std::string anchor, std::string lhs, std::string rhs,
                                           KindBuilder left, KindBuilder right) {
  FamilyDescriptor f;
  f.id = std::move(id);
  f.anchor = std::move(anchor);
  f.lhs = std::move(lhs);
  f.rhs = std::move(rhs);
  f.param_names = {"N", "kind"};
  f.grid = [](const Profile& prof, const Params& fixed) {
    std::vector<Params> out;
    if (skip_plain(prof)) return out;
    for (const auto& k : kinds(fixed))
      for (long long n : axis(fixed, "N", 0, prof.max_N)) out.push_back({{"N", n}, {"kind", k}});
    return out;
  };
  f.build = [left, right](const Params& p, const Profile& prof) {
    int n = bound_param(p);
    BouletKind kind = kind_param(p);
    Ring ring = q_ring(prof.degree);
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = prof.degree;
    inst.lhs = [=] { return left(n, kind, ring); };
    inst.rhs = [=] { return right(n, kind, ring); };
    return inst;
  };
  return f;
}

// Families indexed by kind only, checked through stabilization.
inline FamilyDescriptor infinite_kind_family(std::string id, std::string anchor, std::string lhs,
                                             std::string rhs, KindBuilder left, KindBuilder right) {
  FamilyDescriptor f = finite_kind_family(std::move(id), std::move(anchor), std::move(lhs), std::move(rhs), left,
                                          right);
  f.param_names = {"kind"};
  f.grid = [](const Profile& prof, const Params& fixed) {
    std::vector<Params> out;
    if (skip_plain(prof)) return out;
    for (const auto& k : kinds(fixed)) out.push_back({{"kind", k}});
    return out;
  };
  f.build = [left, right](const Params& p, const Profile& prof) {
    BouletKind kind = kind_param(p);
    Ring ring = q_ring(prof.degree);
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = prof.degree;
    inst.lhs = [=] { return left(unbounded, kind, ring); };
    inst.rhs = [=] { return right(unbounded, kind, ring); };
    return inst;
  };
  return f;
}

inline KindBuilder enum_side(std::string preset) {
  return [preset](Bound n, BouletKind kind, const Ring& ring) {
    return boulet_enum(kind, n, Substitution::preset(preset), ring);
  };
}

// (first; Q)_{⌈N/2⌉} on the distinct side, 1/(Q;Q)_{⌊N/2⌋} on the ordinary side.
inline KindBuilder collapsed_side(SignedMonomial first, SignedMonomial base, bool finite) {
  return [=](Bound n, BouletKind kind, const Ring& ring) {
    Bound len_psi = finite ? Bound(ceil_half(*n)) : unbounded;
    Bound len_phi = finite ? Bound(*n / 2) : unbounded;
    if (kind == BouletKind::psi) return pochhammer(first, base, len_psi, ring);
    return pochhammer_inverse(base, base, len_phi, ring);
  };
}

inline SignedMonomial q_pow(int e, int sign = 1) {
  SignedMonomial m = SignedMonomial::var(Var::q, e);
  m.sign = sign;
  return m;
}

inline FamilyDescriptor signed_family(std::string id, std::string anchor, std::string preset, SignedMonomial base,
                                      bool finite) {
  std::string lhs = std::string(finite ? "Psi_N / Phi_N" : "Psi / Phi") + " under (" + preset + ")";
  std::string rhs = finite ? "(-q;Q)_{ceil(N/2)} or 1/(Q;Q)_{floor(N/2)}, Q = " + to_string(base, VarSet::q_only())
                           : "(-q;Q)_inf or 1/(Q;Q)_inf, Q = " + to_string(base, VarSet::q_only());
  auto right = collapsed_side(q_pow(1, -1), base, finite);
  if (finite) return finite_kind_family(std::move(id), std::move(anchor), lhs, rhs, enum_side(preset), right);
  return infinite_kind_family(std::move(id), std::move(anchor), lhs, rhs, enum_side(preset), right);
}

inline FamilyDescriptor rts_family(bool finite) {
  FamilyDescriptor f;
  f.id = finite ? "general-rts-finite" : "general-rts";
  f.anchor = finite ? "(a,b,c,d) = (q^r,q^t,-1,eps q^s), r+t > 0: Psi_N = (-q^r;Q)_{ceil(N/2)}, "
                      "Phi_N = 1/(Q;Q)_{floor(N/2)}, Q = -eps q^{r+t+s}"
                    : "(a,b,c,d) = (q^r,q^t,-1,eps q^s), r+t > 0: Psi = (-q^r;Q)_inf, Phi = 1/(Q;Q)_inf, "
                      "Q = -eps q^{r+t+s}";
  f.lhs = finite ? "Psi_N / Phi_N under (q^r,q^t,-1,eps q^s)" : "Psi / Phi under (q^r,q^t,-1,eps q^s)";
  f.rhs = finite ? "collapsed finite product" : "collapsed infinite product";
  f.param_names = finite ? std::vector<std::string>{"N", "eps", "kind", "r", "s", "t"}
                         : std::vector<std::string>{"eps", "kind", "r", "s", "t"};
  f.grid = [finite](const Profile& prof, const Params& fixed) {
    std::vector<Params> out;
    if (skip_plain(prof)) return out;
    for (const auto& k : kinds(fixed))
      for (long long r : axis(fixed, "r", 0, prof.rts_max))
        for (long long t : axis(fixed, "t", 0, prof.rts_max))
          for (long long s : axis(fixed, "s", 0, prof.rts_max))
            for (long long e : axis(fixed, "eps", -1, 1)) {
              // Invalid combinations are skipped unless pinned, so that a
              // pinned one reaches build and is rejected there.
              bool pinned = fixed.count("r") && fixed.count("t") && fixed.count("eps");
              if (!pinned && (e == 0 || r + t == 0)) continue;
              if (k == "phi" && r == 0 && !(pinned && fixed.count("kind"))) continue;
              Params base{{"eps", e}, {"kind", k}, {"r", r}, {"s", s}, {"t", t}};
              if (!finite) {
                out.push_back(base);
                continue;
              }
              for (long long n : axis(fixed, "N", 0, prof.max_N)) {
                Params p = base;
                p["N"] = n;
                out.push_back(p);
              }
            }
    return out;
  };
  f.build = [finite](const Params& p, const Profile& prof) {
    int r = small_param(p, "r", 0, kMaxParam), t = small_param(p, "t", 0, kMaxParam);
    int s = small_param(p, "s", 0, kMaxParam), eps = small_param(p, "eps", -1, 1);
    BouletKind kind = kind_param(p);
    if (r + t == 0) throw ParameterError("general-rts needs r + t > 0");
    if (eps == 0) throw ParameterError("eps must be +1 or -1");
    if (kind == BouletKind::phi && r == 0)
      throw ParameterError("the ordinary-partition side diverges for r = 0: every (1^k) has q-degree 0");
    Bound n = finite ? Bound(bound_param(p)) : unbounded;
    Substitution sub = Substitution::rts(r, t, s, eps);
    SignedMonomial base = sub.big_q();
    Ring ring = q_ring(prof.degree);
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = prof.degree;
    inst.lhs = [=] { return boulet_enum(kind, n, sub, ring); };
    auto right = collapsed_side(q_pow(r, -1), base, finite);
    inst.rhs = [=] { return right(n, kind, ring); };
    return inst;
  };
  return f;
}

// {q,z} families indexed by N (and nothing else).
inline FamilyDescriptor qz_family(std::string id, std::string anchor, std::string lhs, std::string rhs,
                                  std::function<int(const Profile&)> top,
                                  std::function<SparsePoly(int, const Ring&)> left,
                                  std::function<SparsePoly(int, const Ring&)> right, bool full_degree) {
  FamilyDescriptor f;
  f.id = std::move(id);
  f.anchor = std::move(anchor);
  f.lhs = std::move(lhs);
  f.rhs = std::move(rhs);
  f.param_names = {"N"};
  f.grid = [top](const Profile& prof, const Params& fixed) {
    std::vector<Params> out;
    if (skip_plain(prof)) return out;
    for (long long n : axis(fixed, "N", 0, top(prof))) out.push_back({{"N", n}});
    return out;
  };
  f.build = [left, right, full_degree](const Params& p, const Profile& prof) {
    int n = bound_param(p);
    int degree = full_degree ? shifted_rs_degree(n) : prof.degree;
    Ring ring = qz_ring(degree, std::max(prof.z_bound, full_degree ? n : 0));
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = degree;
    inst.lhs = [=] { return left(n, ring); };
    inst.rhs = [=] { return right(n, ring); };
    return inst;
  };
  return f;
}

inline SparsePoly rs_link_enum(int n, const Ring& ring) {
  return psi_enum(n, Substitution::preset("zq,zq,q/z,q/z"), ring);
}

inline SparsePoly keep_only_q(const SparsePoly& p, std::optional<int> n) {
  if (!n) return p;
  SparsePoly out(p.ring());
  for (const auto& [m, c] : p.terms())
    if (m[Var::q] == *n) out.add_term(m, c);
  return out;
}

inline FamilyDescriptor z_refined_family(BouletKind kind) {
  bool psi = kind == BouletKind::psi;
  FamilyDescriptor f = qz_family(
      psi ? "z-refined-psi" : "z-refined-phi",
      psi ? "sum over D_{<=N} of q^O z^gamma = Psi_N(qz,qz,1/z,1/z) = sum_k q^k z^k [N k]_q"
          : "sum over P_{<=N} of q^O z^gamma = Phi_N(qz,qz,1/z,1/z) = sum_k q^k z^k/((q;q)_k (q;q)_{N-k})",
      psi ? "Psi_N(qz,qz,1/z,1/z)" : "Phi_N(qz,qz,1/z,1/z)", "z-refined sum",
      [](const Profile& prof) { return prof.max_N; },
      [kind](int n, const Ring& ring) { return boulet_enum(kind, n, Substitution::preset("qz,qz,1/z,1/z"), ring); },
      [kind](int n, const Ring& ring) { return rhs_z_refined(n, kind, ring); }, false);
  // Optional j and n restrict both sides to the coefficient of z^j and q^n.
  f.param_names = {"N", "j", "n"};
  f.optional_params = {"j", "n"};
  auto base = f.build;
  f.build = [base](const Params& p, const Profile& prof) {
    std::optional<int> j, n;
    if (p.count("j")) j = small_param(p, "j", 0, kMaxParam);
    if (p.count("n")) n = small_param(p, "n", 0, kMaxParam);
    Profile wide = prof;
    if (n) wide.degree = std::max(prof.degree, *n);
    if (j) wide.z_bound = std::max(prof.z_bound, *j);
    IdentityInstance inst = base(p, wide);
    auto lhs = inst.lhs, rhs = inst.rhs;
    inst.lhs = [=] { return keep_only_q(keep_only_z(lhs(), j), n); };
    inst.rhs = [=] { return keep_only_q(keep_only_z(rhs(), j), n); };
    return inst;
  };
  return f;
}

// ---------------------------------------------------------------------------
// Count families. Both sides are tallied into generating polynomials:
// q^n (and z^j for the refined ones).

inline void for_each_distinct_odd_capped(int bound, int max_odd, const std::function<void(std::span<const int>)>& f) {
  for_each_partition(ClassFilter::distinct_parts({CapKind::odd_sum, max_odd}, bound), f);
}

inline void for_each_ordinary_odd_capped(int bound, int max_odd, const std::function<void(std::span<const int>)>& f) {
  for_each_partition(ClassFilter::ordinary({CapKind::odd_sum, max_odd}, bound), f);
}

// Partitions whose largest hook is at most `bound`.
inline void for_each_hook_bounded(int bound, int max_n, const std::function<void(std::span<const int>)>& f) {
  ClassFilter filter = ClassFilter::ordinary({CapKind::size, max_n}, std::max(bound, 0));
  filter.max_length = std::max(bound, 0);
  for_each_partition(filter, [&](std::span<const int> parts) {
    StatRecord s = stats_of(parts);
    if (s.max_hook <= bound) f(parts);
  });
}

// Partitions (distinct or not) with γ = j and E <= max_e.
inline void for_each_gamma_even(bool distinct, int j, int max_e, const std::function<void(std::span<const int>)>& f) {
  Cap cap{CapKind::odd_sum, max_e + j};
  ClassFilter filter = distinct ? ClassFilter::distinct_parts(cap) : ClassFilter::ordinary(cap);
  filter.max_alternating = j;
  for_each_partition(filter, [&](std::span<const int> parts) {
    StatRecord s = stats_of(parts);
    if (s.alternating == j && s.even_sum <= max_e) f(parts);
  });
}

inline FamilyDescriptor count_family(std::string id, std::string anchor, std::string lhs, std::string rhs,
                                     std::vector<std::string> axes, bool refined) {
  FamilyDescriptor f;
  f.id = std::move(id);
  f.anchor = std::move(anchor);
  f.lhs = std::move(lhs);
  f.rhs = std::move(rhs);
  f.mode = Mode::count;
  f.param_names = axes;
  f.param_names.push_back("n");
  f.optional_params = {"n"};
  if (refined) {
    f.param_names.push_back("j");
    f.optional_params.push_back("j");
  }
  std::sort(f.param_names.begin(), f.param_names.end());
  std::string primary = axes.front();
  f.grid = [primary](const Profile& prof, const Params& fixed) {
    std::vector<Params> out;
    if (skip_plain(prof)) return out;
    for (long long v : axis(fixed, primary, 0, prof.max_N)) {
      Params p{{primary, v}};
      for (const char* key : {"n", "j"})
        if (fixed.count(key)) p[key] = fixed.at(key);
      out.push_back(p);
    }
    return out;
  };
  return f;
}

inline FamilyDescriptor hook_count_family() {
  FamilyDescriptor f = count_family("hook-count",
                                    "#{distinct, parts <= N, O = n} = #{partitions of n with largest hook <= N}",
                                    "S_N(n)", "Gamma_N(n)", {"N"}, false);
  f.param_names = {"N", "n"};
  f.build = [](const Params& p, const Profile& prof) {
    int bound = bound_param(p);
    CountWindow w = count_window(p, prof);
    Ring ring = q_ring(w.max_n);
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = w.max_n;
    inst.lhs = [=] {
      SparsePoly t = tally(ring);
      for_each_distinct_odd_capped(bound, w.max_n, [&](std::span<const int> parts) {
        int o = stats_of(parts).odd_sum;
        if (w.keep(o)) bump(t, o);
      });
      return t;
    };
    inst.rhs = [=] {
      SparsePoly t = tally(ring);
      for_each_hook_bounded(bound, w.max_n, [&](std::span<const int> parts) {
        int n = stats_of(parts).size;
        if (w.keep(n)) bump(t, n);
      });
      return t;
    };
    return inst;
  };
  f.table = [](const Params& p) {
    int bound = bound_param(p), n = small_param(p, "n", 0, kMaxParam);
    Table t{"S_" + std::to_string(bound) + "(" + std::to_string(n) + ")",
            "Gamma_" + std::to_string(bound) + "(" + std::to_string(n) + ")", {}, {}};
    for_each_distinct_odd_capped(bound, n, [&](std::span<const int> parts) {
      if (stats_of(parts).odd_sum == n) t.left.push_back(bracket(parts));
    });
    for_each_hook_bounded(bound, n, [&](std::span<const int> parts) {
      if (stats_of(parts).size == n) t.right.push_back(bracket(parts));
    });
    return t;
  };
  return f;
}

inline FamilyDescriptor hook_refined_family() {
  FamilyDescriptor f = count_family(
      "hook-refined", "#{distinct, parts <= N, O = n, gamma = j} = #{partitions of n into j parts, largest hook <= N}",
      "S_{N,j}(n)", "Gamma_{N,j}(n)", {"N"}, true);
  f.build = [](const Params& p, const Profile& prof) {
    int bound = bound_param(p);
    CountWindow w = count_window(p, prof);
    std::optional<int> j;
    if (p.count("j")) j = small_param(p, "j", 0, kMaxParam);
    Ring ring = qz_ring(w.max_n, std::max(bound, j.value_or(0)));
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = w.max_n;
    inst.lhs = [=] {
      SparsePoly t = tally(ring);
      for_each_distinct_odd_capped(bound, w.max_n, [&](std::span<const int> parts) {
        StatRecord s = stats_of(parts);
        if (w.keep(s.odd_sum)) bump(t, s.odd_sum, s.alternating);
      });
      return keep_only_z(t, j);
    };
    inst.rhs = [=] {
      SparsePoly t = tally(ring);
      for_each_hook_bounded(bound, w.max_n, [&](std::span<const int> parts) {
        StatRecord s = stats_of(parts);
        if (w.keep(s.size)) bump(t, s.size, s.length);
      });
      return keep_only_z(t, j);
    };
    return inst;
  };
  f.table = [](const Params& p) {
    int bound = bound_param(p), n = small_param(p, "n", 0, kMaxParam), j = small_param(p, "j", 0, kMaxParam);
    std::string tag = std::to_string(bound) + "," + std::to_string(j) + "}(" + std::to_string(n) + ")";
    Table t{"S_{" + tag, "Gamma_{" + tag, {}, {}};
    for_each_distinct_odd_capped(bound, n, [&](std::span<const int> parts) {
      StatRecord s = stats_of(parts);
      if (s.odd_sum == n && s.alternating == j) t.left.push_back(bracket(parts));
    });
    for_each_hook_bounded(bound, n, [&](std::span<const int> parts) {
      StatRecord s = stats_of(parts);
      if (s.size == n && s.length == j) t.right.push_back(bracket(parts));
    });
    return t;
  };
  return f;
}

inline FamilyDescriptor two_color_family() {
  FamilyDescriptor f = count_family(
      "two-color", "#{parts <= N, O = n} = #{2-color partitions of n, #red + largest green <= N}", "U_N(n)",
      "T_N(n)", {"N"}, false);
  f.param_names = {"N", "n"};
  f.build = [](const Params& p, const Profile& prof) {
    int bound = bound_param(p);
    CountWindow w = count_window(p, prof);
    Ring ring = q_ring(w.max_n);
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = w.max_n;
    inst.lhs = [=] {
      SparsePoly t = tally(ring);
      for_each_ordinary_odd_capped(bound, w.max_n, [&](std::span<const int> parts) {
        int o = stats_of(parts).odd_sum;
        if (w.keep(o)) bump(t, o);
      });
      return t;
    };
    inst.rhs = [=] {
      SparsePoly t = tally(ring);
      for (int n = 0; n <= w.max_n; ++n) {
        if (!w.keep(n)) continue;
        Integer count = 0;
        for_each_two_color(n, unbounded, {TwoColorRule::red_count_plus_green_max, bound},
                           [&](const Partition&, std::span<const int>) { ++count; });
        Monomial m;
        m[Var::q] = n;
        t.add_term(m, count);
      }
      return t;
    };
    return inst;
  };
  f.table = [](const Params& p) {
    int bound = bound_param(p), n = small_param(p, "n", 0, kMaxParam);
    std::string tag = std::to_string(bound) + "(" + std::to_string(n) + ")";
    Table t{"U_" + tag, "T_" + tag, {}, {}};
    for_each_ordinary_odd_capped(bound, n, [&](std::span<const int> parts) {
      if (stats_of(parts).odd_sum == n) t.left.push_back(bracket(parts));
    });
    for (const auto& tc : enumerate_two_color(n, unbounded, {TwoColorRule::red_count_plus_green_max, bound}))
      t.right.push_back(tc.to_string());
    return t;
  };
  return f;
}

inline FamilyDescriptor two_color_refined_family() {
  FamilyDescriptor f = count_family(
      "two-color-refined",
      "#{parts <= N, O = n, gamma = j} = #{2-color partitions of n, exactly j red, largest green <= N-j}",
      "U_{N,j}(n)", "T_{N,j}(n)", {"N"}, true);
  f.build = [](const Params& p, const Profile& prof) {
    int bound = bound_param(p);
    CountWindow w = count_window(p, prof);
    std::optional<int> j;
    if (p.count("j")) j = small_param(p, "j", 0, kMaxParam);
    Ring ring = qz_ring(w.max_n, std::max(bound, j.value_or(0)));
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = w.max_n;
    inst.lhs = [=] {
      SparsePoly t = tally(ring);
      for_each_ordinary_odd_capped(bound, w.max_n, [&](std::span<const int> parts) {
        StatRecord s = stats_of(parts);
        if (w.keep(s.odd_sum)) bump(t, s.odd_sum, s.alternating);
      });
      return keep_only_z(t, j);
    };
    inst.rhs = [=] {
      SparsePoly t = tally(ring);
      for (int red = 0; red <= bound; ++red) {
        if (j && red != *j) continue;
        for (int n = 0; n <= w.max_n; ++n) {
          if (!w.keep(n)) continue;
          Integer count = 0;
          for_each_two_color(n, red, {TwoColorRule::green_max, bound - red},
                             [&](const Partition&, std::span<const int>) { ++count; });
          Monomial m;
          m[Var::q] = n;
          m[Var::z] = red;
          t.add_term(m, count);
        }
      }
      return t;
    };
    return inst;
  };
  f.table = [](const Params& p) {
    int bound = bound_param(p), n = small_param(p, "n", 0, kMaxParam), j = small_param(p, "j", 0, kMaxParam);
    std::string tag = std::to_string(bound) + "," + std::to_string(j) + "}(" + std::to_string(n) + ")";
    Table t{"U_{" + tag, "T_{" + tag, {}, {}};
    for_each_ordinary_odd_capped(bound, n, [&](std::span<const int> parts) {
      StatRecord s = stats_of(parts);
      if (s.odd_sum == n && s.alternating == j) t.left.push_back(bracket(parts));
    });
    if (j <= bound)
      for (const auto& tc : enumerate_two_color(n, j, {TwoColorRule::green_max, bound - j}))
        t.right.push_back(tc.to_string());
    return t;
  };
  return f;
}

inline FamilyDescriptor gamma_even_family(bool distinct) {
  FamilyDescriptor f = count_family(
      distinct ? "parts-leq-j" : "E-two-color",
      distinct ? "#{distinct, E = n, gamma = j} = #{partitions of n into parts <= j}"
               : "#{partitions, E = n, gamma = j} = #{2-color partitions of n, red parts <= j}",
      distinct ? "distinct, E = n, gamma = j" : "all, E = n, gamma = j",
      distinct ? "parts <= j" : "2-color, red parts <= j", {"j"}, false);
  f.param_names = {"j", "n"};
  f.build = [distinct](const Params& p, const Profile& prof) {
    int j = small_param(p, "j", 0, kMaxParam);
    CountWindow w = count_window(p, prof);
    Ring ring = q_ring(w.max_n);
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = w.max_n;
    inst.lhs = [=] {
      SparsePoly t = tally(ring);
      for_each_gamma_even(distinct, j, w.max_n, [&](std::span<const int> parts) {
        int e = stats_of(parts).even_sum;
        if (w.keep(e)) bump(t, e);
      });
      return t;
    };
    inst.rhs = [=] {
      SparsePoly t = tally(ring);
      if (distinct) {
        for_each_partition(ClassFilter::ordinary({CapKind::size, w.max_n}, j), [&](std::span<const int> parts) {
          int n = stats_of(parts).size;
          if (w.keep(n)) bump(t, n);
        });
        return t;
      }
      for (int n = 0; n <= w.max_n; ++n) {
        if (!w.keep(n)) continue;
        Integer count = 0;
        for_each_two_color(n, unbounded, {TwoColorRule::red_parts_at_most, j},
                           [&](const Partition&, std::span<const int>) { ++count; });
        Monomial m;
        m[Var::q] = n;
        t.add_term(m, count);
      }
      return t;
    };
    return inst;
  };
  f.table = [distinct](const Params& p) {
    int j = small_param(p, "j", 0, kMaxParam), n = small_param(p, "n", 0, kMaxParam);
    std::string tag = "n=" + std::to_string(n) + ", j=" + std::to_string(j);
    Table t{(distinct ? "distinct, E = n, gamma = j (" : "E = n, gamma = j (") + tag + ")",
            (distinct ? "size n, parts <= j (" : "2-color of n, red parts <= j (") + tag + ")", {}, {}};
    for_each_gamma_even(distinct, j, n, [&](std::span<const int> parts) {
      if (stats_of(parts).even_sum == n) t.left.push_back(bracket(parts));
    });
    if (distinct) {
      ClassFilter filter = ClassFilter::ordinary({CapKind::size, n}, j);
      for_each_partition_of(n, filter, [&](std::span<const int> parts) { t.right.push_back(bracket(parts)); });
    } else {
      for (const auto& tc : enumerate_two_color(n, unbounded, {TwoColorRule::red_parts_at_most, j}))
        t.right.push_back(tc.to_string());
    }
    return t;
  };
  return f;
}

// ---------------------------------------------------------------------------
// Section-5 and section-6 style families.

inline SparsePoly parity_sum(Bound bound, BouletKind kind, const Ring& ring) {
  int n = *bound;
  if (n % 2 != 0) return SparsePoly(ring);
  const SignedMonomial q = SignedMonomial::var(Var::q), q2 = q.pow(2);
  if (kind == BouletKind::psi) return pochhammer(-q, q2, n / 2, ring);
  return pochhammer_inverse(q2, q2, n / 2, ring);
}

inline SparsePoly even_sum(Bound bound, BouletKind kind, const Ring& ring) {
  int n = *bound;
  const SignedMonomial q = SignedMonomial::var(Var::q);
  SparsePoly out(ring);
  if (kind == BouletKind::psi) {
    for (const auto& b : qbinomial_row(n, q, ring)) out += b;
    return out;
  }
  for (int i = 0; i <= n; ++i) out += pochhammer_inverse(q, q, i, ring) * pochhammer_inverse(q, q, n - i, ring);
  return out;
}

inline FamilyDescriptor e_refined_family(bool limit) {
  FamilyDescriptor f;
  f.id = limit ? "E-limit" : "E-refined";
  f.anchor = limit ? "sum over D, gamma = j of q^E = 1/(q;q)_j; over P: 1/((q;q)_j (q;q)_inf)"
                   : "sum over D_{<=N}, gamma = j of q^E = [N j]_q; over P_{<=N}: 1/((q;q)_j (q;q)_{N-j})";
  f.lhs = limit ? "coefficient of z^j in Psi / Phi (z,z,q/z,q/z)" : "coefficient of z^j in Psi_N / Phi_N (z,z,q/z,q/z)";
  f.rhs = limit ? "1/(q;q)_j or 1/((q;q)_j (q;q)_inf)" : "[N j]_q or 1/((q;q)_j (q;q)_{N-j})";
  f.param_names = limit ? std::vector<std::string>{"j", "kind"} : std::vector<std::string>{"N", "j", "kind"};
  f.grid = [limit](const Profile& prof, const Params& fixed) {
    std::vector<Params> out;
    if (skip_plain(prof)) return out;
    for (const auto& k : kinds(fixed)) {
      if (limit) {
        for (long long j : axis(fixed, "j", 0, std::min(prof.max_N, prof.z_bound))) out.push_back({{"j", j}, {"kind", k}});
        continue;
      }
      for (long long n : axis(fixed, "N", 0, prof.max_N))
        for (long long j : axis(fixed, "j", 0, std::min<long long>(n, prof.z_bound)))
          out.push_back({{"N", n}, {"j", j}, {"kind", k}});
    }
    return out;
  };
  f.build = [limit](const Params& p, const Profile& prof) {
    int j = small_param(p, "j", 0, kMaxParam);
    BouletKind kind = kind_param(p);
    // Largest parts are at most γ + E, so N = j + degree is exact for the limit.
    int n = limit ? j + prof.degree : bound_param(p);
    Ring source = qz_ring(prof.degree, std::max(prof.z_bound, j));
    Ring ring = q_ring(prof.degree);
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = prof.degree;
    inst.lhs = [=] {
      return coeff_of(boulet_enum(kind, n, Substitution::preset("z,z,q/z,q/z"), source), Var::z, j);
    };
    inst.rhs = [=] {
      const SignedMonomial q = SignedMonomial::var(Var::q);
      if (limit) {
        SparsePoly out = pochhammer_inverse(q, q, j, ring);
        if (kind == BouletKind::phi) out *= pochhammer_inverse(q, q, unbounded, ring);
        return out;
      }
      if (j > n) return SparsePoly(ring);
      if (kind == BouletKind::psi) return qbinomial(n, j, q, ring);
      return pochhammer_inverse(q, q, j, ring) * pochhammer_inverse(q, q, n - j, ring);
    };
    return inst;
  };
  return f;
}

inline SparsePoly rr_sum(Bound max_part, int degree, bool hat, int hat_bound, const Ring& ring) {
  SparsePoly out(ring);
  int cap = max_part ? std::min(degree, (*max_part + 1) * (*max_part + 1)) : degree;
  ClassFilter filter = ClassFilter::rogers_ramanujan({CapKind::size, std::max(cap, 0)}, max_part);
  for_each_partition(filter, [&](std::span<const int> parts) {
    Partition p(std::vector<int>(parts.begin(), parts.end()));
    Monomial m;
    m[Var::q] = p.size();
    out.add_term(m, hat ? rr_weight_hat(p, hat_bound) : rr_weight(p));
  });
  return out;
}

inline FamilyDescriptor rr_family(int variant) {
  // 0: unbounded, 1: bounded largest part, 2: hatted weight.
  FamilyDescriptor f;
  const char* ids[] = {"rr-weighted", "rr-weighted-finite", "rr-hat"};
  const char* anchors[] = {
      "sum over D of q^O = sum over gap-2 partitions of w(pi) q^|pi|, w = last part * prod (gap - 1)",
      "sum over D_{<=N} of q^O = sum over gap-2 partitions with parts <= N of w(pi) q^|pi|",
      "sum over D_{<=N} of q^E = sum over gap-2 partitions with parts <= N-1 of w^(pi) q^|pi|, "
      "w^ = (N - largest) * w, w^(empty) = N+1"};
  f.id = ids[variant];
  f.anchor = anchors[variant];
  f.lhs = variant == 2 ? "Psi_N(1,1,q,q)" : variant == 1 ? "Psi_N(q,q,1,1)" : "Psi(q,q,1,1)";
  f.rhs = "weighted gap-2 partition sum";
  f.param_names = variant == 0 ? std::vector<std::string>{} : std::vector<std::string>{"N"};
  f.grid = [variant](const Profile& prof, const Params& fixed) {
    std::vector<Params> out;
    if (skip_plain(prof)) return out;
    if (variant == 0) return std::vector<Params>{Params{}};
    for (long long n : axis(fixed, "N", 0, prof.max_N)) out.push_back({{"N", n}});
    return out;
  };
  f.build = [variant](const Params& p, const Profile& prof) {
    int n = variant == 0 ? prof.degree : bound_param(p);
    Ring ring = q_ring(prof.degree);
    IdentityInstance inst;
    inst.ring = ring;
    inst.checked_bound = prof.degree;
    inst.lhs = [=] {
      return psi_enum(n, Substitution::preset(variant == 2 ? "1,1,q,q" : "q,q,1,1"), ring);
    };
    inst.rhs = [=] {
      if (variant == 0) return rr_sum(unbounded, prof.degree, false, 0, ring);
      if (variant == 1) return rr_sum(n, prof.degree, false, 0, ring);
      return rr_sum(n - 1, prof.degree, true, n, ring);
    };
    return inst;
  };
  return f;
}

inline std::vector<FamilyDescriptor> build_registry() {
  const SignedMonomial q = SignedMonomial::var(Var::q);
  std::vector<FamilyDescriptor> r;
  r.push_back(product_family(BouletKind::psi));
  r.push_back(product_family(BouletKind::phi));
  r.push_back(infinite_q_family("schmidt", "sum over distinct partitions of q^O = 1/(q;q)_inf", "Psi(q,q,1,1)",
                                "1/(q;q)_inf", "q,q,1,1", BouletKind::psi,
                                [q](const Ring& ring) { return pochhammer_inverse(q, q, unbounded, ring); }));
  r.push_back(infinite_q_family("uap", "sum over all partitions of q^O = 1/(q;q)_inf^2", "Phi(q,q,1,1)",
                                "1/(q;q)_inf^2", "q,q,1,1", BouletKind::phi, [q](const Ring& ring) {
                                  SparsePoly p = pochhammer_inverse(q, q, unbounded, ring);
                                  return p * p;
                                }));
  r.push_back(formula_family(false, BouletKind::psi));
  r.push_back(formula_family(false, BouletKind::phi));
  r.push_back(formula_family(true, BouletKind::psi));
  r.push_back(formula_family(true, BouletKind::phi));
  r.push_back(qz_family(
      "rogers-szego", "H_{2M+v}(zq,q^2) = sum_k [M k]_{q^4} (-zq;q^4)_{M-k+v} (-q/z;q^4)_k (zq)^{2k}",
      "H_N(zq,q^2)", "q^4-binomial sum", [](const Profile& prof) { return prof.rs_max_index; },
      [](int n, const Ring& ring) { return rogers_szego_shifted(n, ring); },
      [](int n, const Ring& ring) { return rogers_szego_sum(n, ring); }, true));
  r.push_back(qz_family(
      "rs-psi-link", "H_N(zq,q^2) = Psi_N(zq,zq,q/z,q/z)", "H_N(zq,q^2)", "Psi_N(zq,zq,q/z,q/z)",
      [](const Profile& prof) { return prof.max_N; },
      [](int n, const Ring& ring) { return rogers_szego_shifted(n, ring); }, rs_link_enum, true));
  r.push_back(qz_family(
      "psi-alt-genfun", "Psi_N(zq,zq,q/z,q/z) = sum over D_{<=N} of q^|pi| z^gamma", "Psi_N(zq,zq,q/z,q/z)",
      "sum over D_{<=N} of q^|pi| z^gamma", [](const Profile& prof) { return prof.max_N; }, rs_link_enum,
      [](int n, const Ring& ring) {
        SparsePoly out(ring);
        for_each_partition(ClassFilter::distinct_parts({CapKind::size, n * (n + 1) / 2}, n),
                           [&](std::span<const int> parts) {
                             StatRecord s = stats_of(parts);
                             Monomial m;
                             m[Var::q] = s.size;
                             m[Var::z] = s.alternating;
                             out.add_term(m, 1);
                           });
        return out;
      },
      true));
  r.push_back(z_refined_family(BouletKind::psi));
  r.push_back(z_refined_family(BouletKind::phi));
  r.push_back(finite_kind_family(
      "finite-schmidt-old",
      "Psi_{2M+v}(q,q,1,1) = sum_i [M i]_{q^2} (-q;q^2)_{M-i+v} (-1;q^2)_i q^{2i}; Phi_N divides by (q;q)_N",
      "Psi_N / Phi_N (q,q,1,1)", "q^2-binomial sum", enum_side("q,q,1,1"),
      [](Bound n, BouletKind kind, const Ring& ring) {
        return rhs_schmidt_sum(*n, SchmidtVariant::old_form, kind, ring);
      }));
  r.push_back(finite_kind_family(
      "finite-schmidt-new",
      "sum over D_{<=N} of q^O = sum_i [N i]_q q^i; over P_{<=N}: sum_i q^i/((q;q)_i (q;q)_{N-i})",
      "Psi_N / Phi_N (q,q,1,1)", "q-binomial sum", enum_side("q,q,1,1"),
      [](Bound n, BouletKind kind, const Ring& ring) {
        return rhs_schmidt_sum(*n, SchmidtVariant::new_form, kind, ring);
      }));
  r.push_back(hook_count_family());
  r.push_back(two_color_family());
  r.push_back(hook_refined_family());
  r.push_back(two_color_refined_family());
  r.push_back(signed_family("sign-E",
                            "sum over D of (-1)^E q^O = (-q;q^2)_inf; over P: 1/(q^2;q^2)_inf", "q,q,-1,-1",
                            q.pow(2), false));
  r.push_back(signed_family("sign-E-finite",
                            "sum over D_{<=N} of (-1)^E q^O = (-q;q^2)_{ceil(N/2)}; over P_{<=N}: "
                            "1/(q^2;q^2)_{floor(N/2)}",
                            "q,q,-1,-1", q.pow(2), true));
  r.push_back(signed_family("ceil-E",
                            "sum over D of (-1)^ceilE q^O = (-q;-q^2)_inf; over P: 1/(-q^2;-q^2)_inf",
                            "q,q,-1,1", q_pow(2, -1), false));
  r.push_back(signed_family("ceil-E-finite",
                            "sum over D_{<=N} of (-1)^ceilE q^O = (-q;-q^2)_{ceil(N/2)}; over P_{<=N}: "
                            "1/(-q^2;-q^2)_{floor(N/2)}",
                            "q,q,-1,1", q_pow(2, -1), true));
  r.push_back(signed_family("floor-E-mod3",
                            "sum over D of (-1)^E q^{O+floorE} = (-q;q^3)_inf; over P: 1/(q^3;q^3)_inf",
                            "q,q,-1,-q", q.pow(3), false));
  r.push_back(signed_family("floor-E-mod3-finite",
                            "sum over D_{<=N} of (-1)^E q^{O+floorE} = (-q;q^3)_{ceil(N/2)}; over P_{<=N}: "
                            "1/(q^3;q^3)_{floor(N/2)}",
                            "q,q,-1,-q", q.pow(3), true));
  r.push_back(rts_family(false));
  r.push_back(rts_family(true));
  r.push_back(finite_kind_family(
      "odd-sign",
      "sum over D_{<=N} of (-1)^O q^E = (-q;q^2)_{N/2} for even N, 0 for odd N; over P_{<=N}: "
      "1/(q^2;q^2)_{N/2} or 0",
      "Psi_N / Phi_N (-1,-1,q,q)", "parity-split product", enum_side("-1,-1,q,q"), parity_sum));
  r.push_back(finite_kind_family(
      "E-sum", "sum over D_{<=N} of q^E = sum_i [N i]_q; over P_{<=N}: sum_i 1/((q;q)_i (q;q)_{N-i})",
      "Psi_N / Phi_N (1,1,q,q)", "binomial sum", enum_side("1,1,q,q"), even_sum));
  r.push_back(e_refined_family(false));
  r.push_back(e_refined_family(true));
  r.push_back(gamma_even_family(false));
  r.push_back(gamma_even_family(true));
  r.push_back(rr_family(0));
  r.push_back(rr_family(1));
  r.push_back(rr_family(2));
  return r;
}

}  // namespace detail

/// Every registered identity family, in a fixed order.
inline const std::vector<FamilyDescriptor>& registry() {
  static const std::vector<FamilyDescriptor> families = detail::build_registry();
  return families;
}

inline const FamilyDescriptor* find_family(std::string_view id) {
  for (const auto& f : registry())
    if (f.id == id) return &f;
  return nullptr;
}

}  // namespace qlab
