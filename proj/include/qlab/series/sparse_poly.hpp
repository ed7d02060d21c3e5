#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "qlab/series/ring.hpp"

namespace qlab {

using Integer = boost::multiprecision::cpp_int;

/// Exact sparse multivariate Laurent polynomial over the integers, carried
/// together with its ring. Stored terms are non-zero and admitted by the
/// truncation; equality is term-map equality.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Integer, CanonicalLess>;

  explicit SparsePoly(Ring ring) : ring_(std::move(ring)), terms_(CanonicalLess{ring_.vars}) {}

  static SparsePoly constant(const Ring& ring, const Integer& c) {
    SparsePoly p(ring);
    p.add_term(Monomial{}, c);
    return p;
  }

  static SparsePoly one(const Ring& ring) { return constant(ring, 1); }

  static SparsePoly from_monomial(const Ring& ring, const SignedMonomial& m) {
    SparsePoly p(ring);
    p.add_term(m.mono, m.sign);
    return p;
  }

  const Ring& ring() const { return ring_; }
  const VarSet& vars() const { return ring_.vars; }
  const TruncationSpec& trunc() const { return ring_.trunc; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Integer coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Integer constant_term() const { return coeff(Monomial{}); }

  /// Accumulates c·m; monomials outside the truncation are dropped.
  void add_term(const Monomial& m, const Integer& c) {
    if (!lives_in(m, ring_.vars))
      throw StructuralError("monomial uses a variable outside " + ring_.vars.to_string());
    if (c == 0 || !ring_.trunc.admits(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Same terms under another truncation of the same variables.
  SparsePoly retruncate(const TruncationSpec& trunc) const {
    SparsePoly out(Ring{ring_.vars, trunc});
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
  }

  /// Multiplication by a signed monomial (a shift of every exponent).
  SparsePoly times(const SignedMonomial& m) const {
    SparsePoly out(ring_);
    for (const auto& [e, c] : terms_) out.add_term(e * m.mono, m.sign < 0 ? Integer(-c) : c);
    return out;
  }

  SparsePoly operator-() const {
    SparsePoly out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
  }

  SparsePoly& operator+=(const SparsePoly& r) {
    require_same_vars(r);
    if (!(ring_.trunc == r.ring_.trunc)) *this = retruncate(ring_.trunc.intersect(r.ring_.trunc));
    for (const auto& [m, c] : r.terms_) add_term(m, c);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& r) { return *this += -r; }

  friend SparsePoly operator+(SparsePoly p, const SparsePoly& r) { return p += r; }
  friend SparsePoly operator-(SparsePoly p, const SparsePoly& r) { return p -= r; }

  friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& r) {
    p.require_same_vars(r);
    Ring ring{p.ring_.vars, p.ring_.trunc.intersect(r.ring_.trunc)};
    if (p.term_count() == 1) return monomial_times(p, r, ring);
    if (r.term_count() == 1) return monomial_times(r, p, ring);
    SparsePoly out(ring);
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mr, cr] : r.terms_) out.add_term(mp * mr, cp * cr);
    return out;
  }

  SparsePoly& operator*=(const SparsePoly& r) { return *this = *this * r; }

  /// Term-map equality; the rings' variable sets must agree.
  friend bool operator==(const SparsePoly& p, const SparsePoly& r) {
    return p.ring_.vars == r.ring_.vars && p.terms_ == r.terms_;
  }

  /// Canonical rendering, e.g. `1 + 2*q + 2*q^2` or `-q^4*z^-1`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool neg = c < 0;
      Integer mag = neg ? Integer(-c) : c;
      if (first)
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      first = false;
      std::string mono = qlab::to_string(m, ring_.vars);
      if (mono == "1")
        s += mag.str();
      else if (mag == 1)
        s += mono;
      else
        s += mag.str() + "*" + mono;
    }
    return s;
  }

 private:
  void require_same_vars(const SparsePoly& r) const {
    if (!(ring_.vars == r.ring_.vars))
      throw StructuralError("mismatched variable sets " + ring_.vars.to_string() + " vs " +
                            r.ring_.vars.to_string());
  }

  static SparsePoly monomial_times(const SparsePoly& single, const SparsePoly& r, const Ring& ring) {
    const auto& [m, c] = *single.terms_.begin();
    SparsePoly out(ring);
    for (const auto& [e, k] : r.terms_) out.add_term(e * m, k * c);
    return out;
  }

  Ring ring_;
  TermMap terms_;
};

}  // namespace qlab
