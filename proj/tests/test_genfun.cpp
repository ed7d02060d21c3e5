#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qlab/genfun/formulas.hpp"

using namespace qlab;
using oracle::mono;
using oracle::qpoly;

namespace {

const SignedMonomial q = SignedMonomial::var(Var::q);

Ring q_ring(int deg) { return {VarSet::q_only(), TruncationSpec::q_degree(deg)}; }
Ring qz_ring(int deg, int zb) { return {VarSet::qz(), TruncationSpec::q_degree(deg).with_laurent(Var::z, zb)}; }
Ring abcd_ring(int total) { return {VarSet::abcd(), TruncationSpec::total(total)}; }

Ring ring_for(const Substitution& s, int deg) {
  if (s.target == VarSet::abcd()) return abcd_ring(deg);
  if (s.target == VarSet::qz()) return qz_ring(deg, 6);
  return q_ring(deg);
}

// Σ of the substituted cell decoration over all partitions of size <= size_cap
// with largest part <= n (distinct ones only for Ψ).
SparsePoly brute_force(BouletKind kind, int n, const Substitution& s, const Ring& ring, int size_cap) {
  SparsePoly out(ring);
  for (const auto& p : oracle::partitions_upto(size_cap)) {
    if (oracle::largest(p) > n) continue;
    if (kind == BouletKind::psi && !oracle::distinct(p)) continue;
    auto e = oracle::boulet_cells(p);
    SignedMonomial w;
    for (int i = 0; i < 4; ++i) w = w * s.images[i].pow(e[i]);
    out.add_term(w.mono, w.sign);
  }
  return out;
}

// Every preset except the formal one reaches a weight of q-degree d only
// through partitions of size <= N + 2d.
int size_cap(int n, int deg) { return n + 2 * deg; }

}  // namespace

TEST(Substitution, Presets) {
  for (const auto& name : Substitution::preset_names()) EXPECT_EQ(Substitution::preset(name).name, name);
  EXPECT_THROW(Substitution::preset("q,q,q,q"), ParameterError);
  EXPECT_FALSE(Substitution::find_preset("nope"));
  Substitution s = Substitution::preset("q,q,-1,-q");
  EXPECT_EQ(s.big_q(), q.pow(3));
  EXPECT_EQ(Substitution::preset("q,q,-1,1").big_q(), -q.pow(2));
  EXPECT_TRUE(Substitution::identity().is_identity());
}

TEST(Substitution, RtsFamily) {
  Substitution s = Substitution::rts(1, 2, 3, -1);
  EXPECT_EQ(s.a(), q);
  EXPECT_EQ(s.b(), q.pow(2));
  EXPECT_EQ(s.c(), SignedMonomial::minus_one());
  EXPECT_EQ(s.d(), -q.pow(3));
  EXPECT_EQ(s.big_q(), q.pow(6));
  EXPECT_EQ(Substitution::rts(1, 1, 0, 1).big_q(), -q.pow(2));
  EXPECT_THROW(Substitution::rts(-1, 1, 0, 1), ParameterError);
  EXPECT_THROW(Substitution::rts(1, 1, 0, 2), ParameterError);
}

TEST(PsiEnum, WorkedValues) {
  Ring r = q_ring(40);
  EXPECT_EQ(psi_enum(4, Substitution::preset("q,q,-1,-1"), r), qpoly(r, {1, 1, 0, 1, 1}));
  EXPECT_EQ(psi_enum(4, Substitution::preset("q,q,-1,1"), r), qpoly(r, {1, 1, 0, -1, -1}));
  EXPECT_EQ(psi_enum(4, Substitution::preset("q,q,-1,-q"), r), qpoly(r, {1, 1, 0, 0, 1, 1}));
  EXPECT_EQ(psi_enum(4, Substitution::preset("-1,-1,q,q"), r), qpoly(r, {1, 1, 0, 1, 1}));
  EXPECT_TRUE(psi_enum(3, Substitution::preset("-1,-1,q,q"), r).is_zero());
  EXPECT_EQ(psi_enum(4, Substitution::preset("1,1,q,q"), r), qpoly(r, {5, 3, 4, 3, 1}));
  for (const auto& name : Substitution::preset_names()) {
    Substitution s = Substitution::preset(name);
    Ring ring = ring_for(s, 10);
    EXPECT_EQ(psi_enum(0, s, ring), SparsePoly::one(ring));
    EXPECT_EQ(phi_enum(0, s, ring), SparsePoly::one(ring));
  }
}

TEST(PhiEnum, WorkedValues) {
  auto phi = phi_enum(3, Substitution::preset("q,q,1,1"), q_ring(10));
  EXPECT_EQ(phi.coeff(mono({{Var::q, 4}})), 15);
  auto refined = phi_enum(3, Substitution::preset("qz,qz,1/z,1/z"), qz_ring(10, 6));
  EXPECT_EQ(refined.coeff(mono({{Var::q, 4}, {Var::z, 1}})), 6);
}

TEST(BouletEnum, BothStrategiesMatchBruteForce) {
  const int deg = 8;
  for (const auto& name : Substitution::preset_names()) {
    if (name == "abcd") continue;
    Substitution s = Substitution::preset(name);
    Ring ring = ring_for(s, deg);
    for (int n = 0; n <= 6; ++n)
      for (BouletKind kind : {BouletKind::psi, BouletKind::phi}) {
        SparsePoly expect = brute_force(kind, n, s, ring, size_cap(n, deg));
        EXPECT_EQ(boulet_enum(kind, n, s, ring, EnumStrategy::grouped), expect) << name << " N=" << n;
        EXPECT_EQ(boulet_enum(kind, n, s, ring, EnumStrategy::stream), expect) << name << " N=" << n;
      }
  }
}

TEST(BouletEnum, FourVariableMatchesBruteForce) {
  const int total = 10;
  Ring ring = abcd_ring(total);
  for (int n = 0; n <= 5; ++n)
    for (BouletKind kind : {BouletKind::psi, BouletKind::phi})
      EXPECT_EQ(boulet_enum(kind, n, Substitution::identity(), ring),
                brute_force(kind, n, Substitution::identity(), ring, total));
}

TEST(BouletEnum, Stabilization) {
  const int deg = 14;
  Substitution s = Substitution::preset("q,q,1,1");
  for (BouletKind kind : {BouletKind::psi, BouletKind::phi}) {
    auto limit = oracle::dense(boulet_enum(kind, unbounded, s, q_ring(deg)), deg);
    for (int n = 0; n <= deg; ++n) {
      auto at_n = oracle::dense(boulet_enum(kind, n, s, q_ring(deg)), deg);
      for (int k = 0; k <= n; ++k) EXPECT_EQ(at_n[k], limit[k]) << "N=" << n << " k=" << k;
    }
  }
}

TEST(BouletEnum, OddBoundsVanishUnderMinusOne) {
  for (int n = 1; n <= 9; n += 2)
    EXPECT_TRUE(psi_enum(n, Substitution::preset("-1,-1,q,q"), q_ring(40)).is_zero()) << n;
}

TEST(BouletEnum, RejectsDivergentConfigurations) {
  Ring r = q_ring(10);
  EXPECT_THROW(psi_enum(unbounded, Substitution::preset("-1,-1,q,q"), r), DivergenceError);
  EXPECT_THROW(phi_enum(3, Substitution::rts(0, 1, 0, 1), r), DivergenceError);
  EXPECT_THROW(psi_enum(3, Substitution::preset("q,q,1,1"), qz_ring(5, 2)), StructuralError);
  EXPECT_THROW(psi_enum(-1, Substitution::preset("q,q,1,1"), r), DomainError);
  Substitution negative = Substitution::preset("q,q,1,1");
  negative.images[2] = SignedMonomial::var(Var::q, -1);
  EXPECT_THROW(psi_enum(3, negative, r), DivergenceError);
}

TEST(Formulas, WorkedValues) {
  Ring r = q_ring(30);
  for (const auto& name : Substitution::preset_names()) {
    Substitution s = Substitution::preset(name);
    Ring ring = ring_for(s, 8);
    for (bool companion : {false, true}) {
      EXPECT_EQ(psi_formula(0, s, ring, companion), SparsePoly::one(ring));
      EXPECT_EQ(psi_formula(1, s, ring, companion), psi_enum(1, s, ring));
    }
  }
  Substitution sign = Substitution::preset("q,q,-1,-1");
  EXPECT_EQ(psi_formula_iz(4, sign, r), pochhammer(-q, q.pow(2), 2, r));
  EXPECT_EQ(psi_formula_bu(4, Substitution::preset("1,1,q,q"), r), qpoly(r, {5, 3, 4, 3, 1}));
}

TEST(Formulas, FourVariableAgreesWithEnumeration) {
  Ring ring = abcd_ring(12);
  Substitution id = Substitution::identity();
  for (int n = 0; n <= 4; ++n) {
    SparsePoly psi = psi_enum(n, id, ring), phi = phi_enum(n, id, ring);
    EXPECT_EQ(psi_formula_iz(n, id, ring), psi) << n;
    EXPECT_EQ(psi_formula_bu(n, id, ring), psi) << n;
    EXPECT_EQ(phi_formula_iz(n, id, ring), phi) << n;
    EXPECT_EQ(phi_formula_bu(n, id, ring), phi) << n;
  }
}

TEST(Formulas, EveryPresetAgreesWithEnumeration) {
  for (const auto& name : Substitution::preset_names()) {
    if (name == "abcd") continue;
    Substitution s = Substitution::preset(name);
    Ring ring = ring_for(s, 30);
    for (int n = 0; n <= 6; ++n) {
      SparsePoly psi = psi_enum(n, s, ring), phi = phi_enum(n, s, ring);
      for (bool companion : {false, true}) {
        EXPECT_EQ(psi_formula(n, s, ring, companion), psi) << name << " " << n << " " << companion;
        EXPECT_EQ(phi_formula(n, s, ring, companion), phi) << name << " " << n << " " << companion;
      }
    }
  }
}

TEST(BouletProduct, SchmidtAndTwoColorCounts) {
  const int deg = 30;
  auto p = oracle::partition_numbers(deg);
  Substitution s = Substitution::preset("q,q,1,1");
  EXPECT_EQ(oracle::dense(boulet_product(BouletKind::psi, s, q_ring(deg)), deg), p);
  std::vector<Integer> two(deg + 1, 0);
  for (int n = 0; n <= deg; ++n)
    for (int k = 0; k <= n; ++k) two[n] += p[k] * p[n - k];
  EXPECT_EQ(oracle::dense(boulet_product(BouletKind::phi, s, q_ring(deg)), deg), two);
}

TEST(BouletProduct, DistinctOddParts) {
  const int deg = 30;
  std::vector<Integer> expect(deg + 1, 0);
  for (const auto& part : oracle::partitions_upto(deg)) {
    bool ok = oracle::distinct(part);
    for (int x : part) ok = ok && x % 2 == 1;
    if (ok) ++expect[oracle::size(part)];
  }
  auto got = boulet_product(BouletKind::psi, Substitution::preset("q,q,-1,-1"), q_ring(deg));
  EXPECT_EQ(oracle::dense(got, deg), expect);
}

TEST(BouletProduct, MatchesEnumerationForEveryConvergentPreset) {
  for (const auto& name : {"q,q,1,1", "zq,zq,q/z,q/z", "qz,qz,1/z,1/z", "q,q,-1,-1", "q,q,-1,1", "q,q,-1,-q"}) {
    Substitution s = Substitution::preset(name);
    Ring ring = ring_for(s, 20);
    for (BouletKind kind : {BouletKind::psi, BouletKind::phi})
      EXPECT_EQ(boulet_product(kind, s, ring), boulet_enum(kind, unbounded, s, ring)) << name;
  }
  Ring ring = abcd_ring(10);
  for (BouletKind kind : {BouletKind::psi, BouletKind::phi})
    EXPECT_EQ(boulet_product(kind, Substitution::identity(), ring),
              boulet_enum(kind, unbounded, Substitution::identity(), ring));
}

TEST(BouletProduct, ConstantBaseDiverges) {
  Substitution flat = Substitution::preset("q,q,1,1");
  flat.images = {SignedMonomial::one(), SignedMonomial::one(), SignedMonomial::one(), SignedMonomial::one()};
  EXPECT_THROW(boulet_product(BouletKind::psi, flat, q_ring(5)), DivergenceError);
}

TEST(SchmidtSums, Examples) {
  Ring r = q_ring(30);
  SparsePoly expect(r);
  for (int i = 0; i <= 4; ++i) expect += qbinomial(4, i, q, r).times(q.pow(i));
  EXPECT_EQ(rhs_schmidt_sum(4, SchmidtVariant::new_form, BouletKind::psi, r), expect);
  EXPECT_EQ(expect, psi_enum(4, Substitution::preset("q,q,1,1"), r));
  for (auto v : {SchmidtVariant::old_form, SchmidtVariant::new_form})
    for (auto k : {BouletKind::psi, BouletKind::phi}) EXPECT_EQ(rhs_schmidt_sum(0, v, k, r), SparsePoly::one(r));
}

TEST(SchmidtSums, OldAndNewFormsAgree) {
  Ring r = q_ring(30);
  for (int n = 0; n <= 10; ++n)
    for (auto k : {BouletKind::psi, BouletKind::phi})
      EXPECT_EQ(rhs_schmidt_sum(n, SchmidtVariant::old_form, k, r), rhs_schmidt_sum(n, SchmidtVariant::new_form, k, r))
          << n;
}

TEST(ZRefined, Examples) {
  Ring r = qz_ring(30, 10);
  SparsePoly psi3 = rhs_z_refined(3, BouletKind::psi, r);
  EXPECT_EQ(coeff_of(psi3, Var::z, 2), qpoly(coeff_of(psi3, Var::z, 2).ring(), {0, 0, 1, 1, 1}));
  // Brute force: (3,1) is the only distinct partition with parts <= 3,
  // O = 4 and alternating sum 2; (4,2) first appears at N = 4.
  EXPECT_EQ(psi3.coeff(mono({{Var::q, 4}, {Var::z, 2}})), 1);
  EXPECT_EQ(rhs_z_refined(4, BouletKind::psi, r).coeff(mono({{Var::q, 4}, {Var::z, 2}})), 2);
  for (int n = 0; n <= 8; ++n)
    for (auto k : {BouletKind::psi, BouletKind::phi}) {
      SparsePoly at_one(q_ring(30));
      SparsePoly refined = rhs_z_refined(n, k, r);
      for (const auto& [m, c] : refined.terms()) at_one.add_term(mono({{Var::q, m[Var::q]}}), c);
      EXPECT_EQ(at_one, rhs_schmidt_sum(n, SchmidtVariant::new_form, k, q_ring(30)));
    }
}

TEST(ZRefined, MatchesOddSumAndAlternatingSum) {
  const int deg = 12;
  Ring r = qz_ring(deg, 12);
  for (int n = 0; n <= 6; ++n)
    for (auto kind : {BouletKind::psi, BouletKind::phi}) {
      SparsePoly expect(r);
      for (const auto& p : oracle::partitions_upto(2 * deg)) {
        if (oracle::largest(p) > n || (kind == BouletKind::psi && !oracle::distinct(p))) continue;
        expect.add_term(mono({{Var::q, oracle::odd_sum(p)}, {Var::z, oracle::odd_sum(p) - oracle::even_sum(p)}}), 1);
      }
      EXPECT_EQ(rhs_z_refined(n, kind, r), expect) << n;
    }
}

TEST(RogersSzego, ShiftedSumAndLink) {
  for (int n = 0; n <= 12; ++n) {
    int deg = n + n * n / 2;
    Ring r = qz_ring(deg, n);
    EXPECT_EQ(rogers_szego_shifted(n, r), rogers_szego_sum(n, r)) << n;
  }
  for (int n = 0; n <= 10; ++n) {
    int deg = n + n * n / 2;
    Ring r = qz_ring(deg, 10);
    EXPECT_EQ(rogers_szego_shifted(n, r), psi_enum(n, Substitution::preset("zq,zq,q/z,q/z"), r)) << n;
  }
}

TEST(RogersSzego, LinkIsSizeAndAlternatingSum) {
  for (int n = 0; n <= 8; ++n) {
    int deg = n * (n + 1) / 2;
    Ring r = qz_ring(deg, n);
    SparsePoly expect(r);
    for (const auto& p : oracle::partitions_upto(deg))
      if (oracle::distinct(p) && oracle::largest(p) <= n)
        expect.add_term(mono({{Var::q, oracle::size(p)}, {Var::z, oracle::odd_sum(p) - oracle::even_sum(p)}}), 1);
    EXPECT_EQ(psi_enum(n, Substitution::preset("zq,zq,q/z,q/z"), r), expect) << n;
  }
}
