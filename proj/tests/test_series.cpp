#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qlab/series/qseries.hpp"

using namespace qlab;
using oracle::mono;
using oracle::qpoly;

namespace {

const SignedMonomial q = SignedMonomial::var(Var::q);
const SignedMonomial z = SignedMonomial::var(Var::z);

Ring q_ring(int deg) { return {VarSet::q_only(), TruncationSpec::q_degree(deg)}; }
Ring q_free() { return {VarSet::q_only(), TruncationSpec{}}; }
Ring qz_ring(int deg, int zb) { return {VarSet::qz(), TruncationSpec::q_degree(deg).with_laurent(Var::z, zb)}; }
Ring abcd_ring(int total) { return {VarSet::abcd(), TruncationSpec::total(total)}; }

SparsePoly random_poly(const Ring& ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> qe(0, 6), ze(0, 3), ce(-4, 4), n(0, 5);
  SparsePoly p(ring);
  for (int k = n(rng); k > 0; --k) p.add_term(mono({{Var::q, qe(rng)}, {Var::z, ze(rng)}}), ce(rng));
  return p;
}

}  // namespace

TEST(SparsePoly, AddCancels) {
  Ring r = q_free();
  EXPECT_EQ(qpoly(r, {1, 1}) + qpoly(r, {-1, 1}), qpoly(r, {0, 2}));
  EXPECT_EQ(qpoly(r, {1, 1}) + SparsePoly(r), qpoly(r, {1, 1}));
  EXPECT_EQ(qpoly(r, {1, 0, 1}) + qpoly(r, {0, 1, 1}), qpoly(r, {1, 1, 2}));
}

TEST(SparsePoly, Multiply) {
  Ring r = q_free();
  EXPECT_EQ(qpoly(r, {1, 1}) * qpoly(r, {1, -1}), qpoly(r, {1, 0, -1}));
  EXPECT_EQ(qpoly(r, {1, 1}) * qpoly(r, {1, 0, 0, 1}), qpoly(r, {1, 1, 0, 1, 1}));
  Ring r2 = q_ring(2);
  EXPECT_EQ(qpoly(r2, {1, 1, 1}) * qpoly(r2, {1, 1}), qpoly(r2, {1, 2, 2}));
}

TEST(SparsePoly, CanonicalRendering) {
  Ring r = qz_ring(10, 3);
  SparsePoly p(r);
  p.add_term(mono({{Var::q, 2}}), 2);
  p.add_term(mono({{Var::q, 1}, {Var::z, 1}}), -1);
  p.add_term(mono({}), 1);
  p.add_term(mono({{Var::q, 4}, {Var::z, -1}}), -1);
  EXPECT_EQ(p.to_string(), "1 + 2*q^2 - q*z - q^4*z^-1");
  EXPECT_EQ(SparsePoly(r).to_string(), "0");
}

TEST(SparsePoly, TruncationDropsTerms) {
  Ring r = qz_ring(3, 1);
  SparsePoly p(r);
  p.add_term(mono({{Var::q, 4}}), 1);
  p.add_term(mono({{Var::z, 2}}), 1);
  p.add_term(mono({{Var::z, -2}}), 1);
  EXPECT_TRUE(p.is_zero());
  Ring t = abcd_ring(2);
  SparsePoly x(t);
  x.add_term(mono({{Var::a, 1}, {Var::b, 1}, {Var::c, 1}}), 1);
  EXPECT_TRUE(x.is_zero());
}

TEST(SparsePoly, ForeignVariableIsStructuralError) {
  SparsePoly p(q_ring(4));
  EXPECT_THROW(p.add_term(mono({{Var::z, 1}}), 1), StructuralError);
  EXPECT_THROW((void)(SparsePoly(q_ring(3)) + SparsePoly(qz_ring(3, 1))), StructuralError);
}

// Windows with non-negative exponents are quotient rings.
TEST(SparsePoly, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(20240611);
  Ring r{VarSet::qz(), TruncationSpec::q_degree(8).with_max(Var::z, 4)};
  for (int trial = 0; trial < 200; ++trial) {
    SparsePoly a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, SparsePoly(r));
    EXPECT_EQ(a * SparsePoly::one(r), a);
  }
}

// A two-sided z window is not an ideal: z^3 * z^3 leaves it, z^-3 would
// have brought the product back.
TEST(SparsePoly, LaurentWindowIsNotAssociative) {
  Ring r = qz_ring(8, 4);
  SparsePoly z3 = SparsePoly::from_monomial(r, z.pow(3)), zm3 = SparsePoly::from_monomial(r, z.pow(-3));
  EXPECT_TRUE((z3 * z3 * zm3).is_zero());
  EXPECT_EQ(z3 * (z3 * zm3), z3);
}

TEST(SeriesInverse, Examples) {
  EXPECT_EQ(series_inverse(SparsePoly::one(q_ring(5))), SparsePoly::one(q_ring(5)));
  Ring r3 = q_ring(3);
  EXPECT_EQ(series_inverse(qpoly(r3, {1, -1})), qpoly(r3, {1, 1, 1, 1}));
  Ring r4 = q_ring(4);
  EXPECT_EQ(series_inverse(qpoly(r4, {1, -1}) * qpoly(r4, {1, 0, -1})), qpoly(r4, {1, 1, 2, 2, 3}));
}

TEST(SeriesInverse, ProductWithInverseIsOne) {
  std::mt19937 rng(7);
  Ring r = q_ring(12);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    SparsePoly p = SparsePoly::one(r);
    for (int e = 1; e <= 5; ++e) p.add_term(mono({{Var::q, e}}), c(rng));
    EXPECT_EQ(p * series_inverse(p), SparsePoly::one(r));
  }
}

TEST(SeriesInverse, NonUnitConstantTerm) {
  Ring r = q_ring(4);
  EXPECT_THROW(series_inverse(qpoly(r, {2, 1})), NonInvertibleError);
  EXPECT_THROW(series_inverse(qpoly(r, {0, 1})), NonInvertibleError);
}

TEST(SeriesInverse, UnboundedWindowHasNoGrading) {
  EXPECT_THROW(series_inverse(qpoly(q_free(), {1, -1})), NonInvertibleError);
}

TEST(Substitute, Examples) {
  Ring src = abcd_ring(60);
  VarMap map;
  map[static_cast<std::size_t>(Var::a)] = q;
  map[static_cast<std::size_t>(Var::b)] = q;
  map[static_cast<std::size_t>(Var::c)] = SignedMonomial::one();
  map[static_cast<std::size_t>(Var::d)] = SignedMonomial::one();
  SparsePoly abcd(src);
  abcd.add_term(mono({{Var::a, 1}, {Var::b, 1}, {Var::c, 1}, {Var::d, 1}}), 1);
  EXPECT_EQ(substitute(abcd, map, q_free()), qpoly(q_free(), {0, 0, 1}));

  map[static_cast<std::size_t>(Var::c)] = SignedMonomial::minus_one();
  map[static_cast<std::size_t>(Var::d)] = SignedMonomial::minus_one();
  SparsePoly w(src);
  w.add_term(mono({{Var::a, 11}, {Var::b, 10}, {Var::c, 8}, {Var::d, 7}}), 1);
  SparsePoly expect(q_free());
  expect.add_term(mono({{Var::q, 21}}), -1);
  EXPECT_EQ(substitute(w, map, q_free()), expect);

  Ring qz{VarSet::qz(), TruncationSpec{}.with_laurent(Var::z, 5)};
  map[static_cast<std::size_t>(Var::a)] = z * q;
  map[static_cast<std::size_t>(Var::b)] = z * q;
  map[static_cast<std::size_t>(Var::c)] = q * z.pow(-1);
  map[static_cast<std::size_t>(Var::d)] = q * z.pow(-1);
  SparsePoly ac(src);
  ac.add_term(mono({{Var::a, 1}, {Var::c, 1}}), 1);
  SparsePoly q2(qz);
  q2.add_term(mono({{Var::q, 2}}), 1);
  EXPECT_EQ(substitute(ac, map, qz), q2);
}

TEST(Substitute, UnmappedVariable) {
  SparsePoly p(abcd_ring(4));
  p.add_term(mono({{Var::a, 1}}), 1);
  EXPECT_THROW(substitute(p, VarMap{}, q_free()), StructuralError);
}

TEST(Pochhammer, Examples) {
  Ring r = q_free();
  EXPECT_EQ(pochhammer(SignedMonomial::var(Var::a), q, 0, q_ring(5)), SparsePoly::one(q_ring(5)));
  EXPECT_EQ(pochhammer(-q, q.pow(2), 2, r), qpoly(r, {1, 1, 0, 1, 1}));
  EXPECT_EQ(pochhammer(q, q, 2, r), qpoly(r, {1, -1, -1, 1}));
}

TEST(Pochhammer, SplitsAtAnyLength) {
  Ring r = q_ring(30);
  SignedMonomial first = -q.pow(2);
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      EXPECT_EQ(pochhammer(first, q, m + n, r), pochhammer(first, q, m, r) * pochhammer(first * q.pow(m), q, n, r));
}

TEST(Pochhammer, InverseTimesProductIsOne) {
  Ring r = q_ring(25);
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(pochhammer(q, q, n, r) * pochhammer_inverse(q, q, n, r), SparsePoly::one(r));
    EXPECT_EQ(pochhammer(-q, q.pow(3), n, r) * pochhammer_inverse(-q, q.pow(3), n, r), SparsePoly::one(r));
  }
  EXPECT_EQ(pochhammer(q, q, unbounded, r) * pochhammer_inverse(q, q, unbounded, r), SparsePoly::one(r));
}

TEST(Pochhammer, InfiniteProductIsPartitionGeneratingFunction) {
  auto p = oracle::partition_numbers(40);
  EXPECT_EQ(oracle::dense(pochhammer_inverse(q, q, unbounded, q_ring(40)), 40), p);
}

TEST(Pochhammer, InfiniteProductNeedsEscapingRatio) {
  EXPECT_THROW(pochhammer(q, q, unbounded, q_free()), DivergenceError);
  EXPECT_THROW(pochhammer(q, SignedMonomial::minus_one(), unbounded, q_ring(5)), DivergenceError);
  EXPECT_THROW(pochhammer(q, q, -1, q_ring(5)), DomainError);
}

TEST(Pochhammer, UnitFactorHasNoInverse) {
  EXPECT_THROW(pochhammer_inverse(SignedMonomial::one(), q, 2, q_ring(5)), NonInvertibleError);
}

TEST(QBinomial, Examples) {
  Ring r = q_free();
  EXPECT_EQ(qbinomial(4, 2, q, r), qpoly(r, {1, 1, 2, 1, 1}));
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(qbinomial(n, 0, q, r), SparsePoly::one(r));
  EXPECT_TRUE(qbinomial(3, 5, q, r).is_zero());
  EXPECT_TRUE(qbinomial(3, -1, q, r).is_zero());
}

TEST(QBinomial, SymmetryAndPascal) {
  Ring r = q_free();
  for (int n = 1; n <= 10; ++n) {
    auto row = qbinomial_row(n, q, r);
    auto prev = qbinomial_row(n - 1, q, r);
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(row[k], qbinomial(n, k, q, r));
      EXPECT_EQ(row[k], row[n - k]);
      if (k == 0 || k == n) continue;
      EXPECT_EQ(row[k], prev[k - 1] + prev[k].times(q.pow(k)));
      EXPECT_EQ(row[k], prev[k] + prev[k - 1].times(q.pow(n - k)));
    }
  }
}

TEST(QBinomial, CountsPartitionsInABox) {
  Ring r = q_free();
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<Integer> box(static_cast<std::size_t>(k * (n - k)) + 1, 0);
      for (const auto& p : oracle::partitions_upto(k * (n - k)))
        if (static_cast<int>(p.size()) <= k && oracle::largest(p) <= n - k) ++box[oracle::size(p)];
      EXPECT_EQ(oracle::dense(qbinomial(n, k, q, r), k * (n - k)), box) << n << " " << k;
    }
}

TEST(QBinomial, ProductFormula) {
  Ring r = q_ring(40);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(qbinomial(n, k, q, r) * pochhammer(q, q, k, r) * pochhammer(q, q, n - k, r), pochhammer(q, q, n, r));
}

TEST(RogersSzego, Examples) {
  Ring r = qz_ring(20, 10);
  EXPECT_EQ(rogers_szego(0, r), SparsePoly::one(r));
  SparsePoly h2(r);
  h2.add_term(mono({}), 1);
  h2.add_term(mono({{Var::z, 1}}), 1);
  h2.add_term(mono({{Var::q, 1}, {Var::z, 1}}), 1);
  h2.add_term(mono({{Var::z, 2}}), 1);
  EXPECT_EQ(rogers_szego(2, r), h2);
  EXPECT_THROW(rogers_szego(2, q_ring(3)), StructuralError);
}

TEST(RogersSzego, AtZEqualOneSumsTheRow) {
  Ring r = qz_ring(60, 12);
  for (int n = 0; n <= 8; ++n) {
    SparsePoly at_one(q_free());
    SparsePoly h = rogers_szego(n, r);
    for (const auto& [m, c] : h.terms()) at_one.add_term(mono({{Var::q, m[Var::q]}}), c);
    SparsePoly sum(q_free());
    for (const auto& b : qbinomial_row(n, q, q_free())) sum += b;
    EXPECT_EQ(at_one, sum);
  }
}

TEST(RogersSzego, ThreeTermRecurrence) {
  Ring r = qz_ring(80, 12);
  SparsePoly one = SparsePoly::one(r), zp = SparsePoly::from_monomial(r, z);
  for (int n = 1; n <= 9; ++n) {
    SparsePoly rhs = (one + zp) * rogers_szego(n, r) -
                     (zp * (one - SparsePoly::from_monomial(r, q.pow(n)))) * rogers_szego(n - 1, r);
    EXPECT_EQ(rogers_szego(n + 1, r), rhs);
  }
}

TEST(CoeffOf, Examples) {
  Ring r = qz_ring(20, 10);
  SparsePoly c = coeff_of(rogers_szego(2, r), Var::z, 1);
  EXPECT_EQ(c.vars(), VarSet::q_only());
  EXPECT_EQ(c.to_string(), "1 + q");
  EXPECT_TRUE(coeff_of(rogers_szego(2, r), Var::z, 7).is_zero());
  SparsePoly m(r);
  m.add_term(mono({{Var::q, 2}, {Var::z, 3}}), 1);
  EXPECT_EQ(coeff_of(m, Var::z, 3).to_string(), "q^2");
  EXPECT_THROW(coeff_of(SparsePoly(q_ring(3)), Var::z, 0), StructuralError);
}

TEST(GeometricSeries, MatchesInverse) {
  Ring r = q_ring(10);
  EXPECT_EQ(geometric_series(q.pow(3), r), series_inverse(qpoly(r, {1, 0, 0, -1})));
  EXPECT_EQ(geometric_series(-q, r), series_inverse(qpoly(r, {1, 1})));
  EXPECT_THROW(geometric_series(SignedMonomial::one(), r), NonInvertibleError);
  EXPECT_THROW(geometric_series(q, q_free()), DivergenceError);
}

TEST(Truncation, NegativeDegreesOnlyForZ) {
  EXPECT_THROW(TruncationSpec{}.with_min(Var::q, -1), StructuralError);
  EXPECT_NO_THROW(TruncationSpec{}.with_laurent(Var::z, 3));
  EXPECT_THROW(TruncationSpec::total(-1), StructuralError);
}
