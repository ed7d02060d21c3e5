#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlab/partition/partition.hpp"
#include "qlab/series/qseries.hpp"

namespace qlab {

/// Images of a, b, c, d as signed monomials in a target ring.
struct Substitution {
  std::string name;
  std::array<SignedMonomial, 4> images;  // a, b, c, d
  VarSet target;

  const SignedMonomial& a() const { return images[0]; }
  const SignedMonomial& b() const { return images[1]; }
  const SignedMonomial& c() const { return images[2]; }
  const SignedMonomial& d() const { return images[3]; }

  /// Q = abcd.
  SignedMonomial big_q() const { return a() * b() * c() * d(); }

  /// ω_π(a,b,c,d) after substitution.
  SignedMonomial weight(const BouletExponents& e) const {
    return a().pow(e.a) * b().pow(e.b) * c().pow(e.c) * d().pow(e.d);
  }

  /// Weight of a single part of size p at an odd (a/b) or even (c/d) index.
  SignedMonomial part_weight(int p, bool odd_index) const {
    return odd_index ? a().pow((p + 1) / 2) * b().pow(p / 2) : c().pow((p + 1) / 2) * d().pow(p / 2);
  }

  VarMap var_map() const {
    VarMap m;
    m[static_cast<std::size_t>(Var::a)] = a();
    m[static_cast<std::size_t>(Var::b)] = b();
    m[static_cast<std::size_t>(Var::c)] = c();
    m[static_cast<std::size_t>(Var::d)] = d();
    return m;
  }

  bool is_identity() const { return target == VarSet::abcd(); }

  /// a, b, c, d kept formal.
  static Substitution identity() {
    return {"abcd",
            {SignedMonomial::var(Var::a), SignedMonomial::var(Var::b), SignedMonomial::var(Var::c),
             SignedMonomial::var(Var::d)},
            VarSet::abcd()};
  }

  /// (q^r, q^t, -1, ε q^s).
  static Substitution rts(int r, int t, int s, int eps) {
    if (r < 0 || t < 0 || s < 0) throw ParameterError("r, t, s must be non-negative");
    if (eps != 1 && eps != -1) throw ParameterError("eps must be +1 or -1");
    SignedMonomial d = SignedMonomial::var(Var::q, s);
    d.sign = eps;
    return {"q^" + std::to_string(r) + ",q^" + std::to_string(t) + ",-1," + (eps < 0 ? "-" : "") + "q^" +
                std::to_string(s),
            {SignedMonomial::var(Var::q, r), SignedMonomial::var(Var::q, t), SignedMonomial::minus_one(), d},
            VarSet::q_only()};
  }

  static const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{
        "abcd",     "q,q,1,1",    "zq,zq,q/z,q/z", "qz,qz,1/z,1/z", "q,q,-1,-1",
        "q,q,-1,1", "q,q,-1,-q",  "-1,-1,q,q",     "1,1,q,q",       "z,z,q/z,q/z"};
    return names;
  }

  static std::optional<Substitution> find_preset(std::string_view name) {
    auto qz = [](int sign, int qe, int ze) {
      SignedMonomial m;
      m.sign = sign;
      m.mono[Var::q] = qe;
      m.mono[Var::z] = ze;
      return m;
    };
    auto make = [&](std::array<SignedMonomial, 4> imgs, VarSet vars) {
      return Substitution{std::string(name), imgs, vars};
    };
    const VarSet q = VarSet::q_only(), qzv = VarSet::qz();
    if (name == "abcd") return identity();
    if (name == "q,q,1,1") return make({qz(1, 1, 0), qz(1, 1, 0), qz(1, 0, 0), qz(1, 0, 0)}, q);
    if (name == "zq,zq,q/z,q/z") return make({qz(1, 1, 1), qz(1, 1, 1), qz(1, 1, -1), qz(1, 1, -1)}, qzv);
    if (name == "qz,qz,1/z,1/z") return make({qz(1, 1, 1), qz(1, 1, 1), qz(1, 0, -1), qz(1, 0, -1)}, qzv);
    if (name == "z,z,q/z,q/z") return make({qz(1, 0, 1), qz(1, 0, 1), qz(1, 1, -1), qz(1, 1, -1)}, qzv);
    if (name == "q,q,-1,-1") return make({qz(1, 1, 0), qz(1, 1, 0), qz(-1, 0, 0), qz(-1, 0, 0)}, q);
    if (name == "q,q,-1,1") return make({qz(1, 1, 0), qz(1, 1, 0), qz(-1, 0, 0), qz(1, 0, 0)}, q);
    if (name == "q,q,-1,-q") return make({qz(1, 1, 0), qz(1, 1, 0), qz(-1, 0, 0), qz(-1, 1, 0)}, q);
    if (name == "-1,-1,q,q") return make({qz(-1, 0, 0), qz(-1, 0, 0), qz(1, 1, 0), qz(1, 1, 0)}, q);
    if (name == "1,1,q,q") return make({qz(1, 0, 0), qz(1, 0, 0), qz(1, 1, 0), qz(1, 1, 0)}, q);
    return std::nullopt;
  }

  static Substitution preset(std::string_view name) {
    auto s = find_preset(name);
    if (!s) throw ParameterError("unknown substitution preset '" + std::string(name) + "'");
    return *s;
  }
};

/// The degree that bounds a ring: q-degree when q is capped, otherwise the
/// total-degree cap.
struct Grading {
  bool by_q = true;
  int budget = 0;

  int degree(const Monomial& m) const { return by_q ? m[Var::q] : m.total_degree(); }

  static Grading of(const Ring& ring) {
    if (ring.vars.contains(Var::q) && ring.trunc.bounds(Var::q).max)
      return {true, *ring.trunc.bounds(Var::q).max};
    if (ring.trunc.total_cap()) return {false, *ring.trunc.total_cap()};
    throw DivergenceError("ring " + ring.vars.to_string() + " has neither a q-degree bound nor a total-degree cap");
  }
};

/// Same ring with the Laurent variable z unbounded. Intermediate products
/// may pass through z-degrees outside the final window.
inline Ring working_ring(const Ring& ring) {
  if (!ring.vars.contains(Var::z)) return ring;
  return {ring.vars, ring.trunc.with_min(Var::z, unbounded).with_max(Var::z, unbounded)};
}

}  // namespace qlab
