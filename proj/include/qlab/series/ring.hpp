#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "qlab/errors.hpp"

namespace qlab {

/// Formal variables. a, b, c, d are the Boulet decorations, q and z the
/// variables every specialization lands in.
enum class Var : std::uint8_t { q, z, a, b, c, d };

inline constexpr std::size_t kVarCount = 6;

constexpr std::string_view var_name(Var v) {
  constexpr std::array<std::string_view, kVarCount> names{"q", "z", "a", "b", "c", "d"};
  return names[static_cast<std::size_t>(v)];
}

inline std::optional<Var> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    auto v = static_cast<Var>(i);
    if (var_name(v) == name) return v;
  }
  return std::nullopt;
}

/// Ordered set of variable names; the order drives canonical term order and
/// rendering.
class VarSet {
 public:
  VarSet() = default;

  VarSet(std::initializer_list<Var> vars) {
    for (Var v : vars) push(v);
  }

  static VarSet q_only() { return {Var::q}; }
  static VarSet qz() { return {Var::q, Var::z}; }
  static VarSet abcd() { return {Var::a, Var::b, Var::c, Var::d}; }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Var operator[](std::size_t i) const { return order_[i]; }
  const Var* begin() const { return order_.data(); }
  const Var* end() const { return order_.data() + size_; }

  bool contains(Var v) const { return std::find(begin(), end(), v) != end(); }

  VarSet without(Var v) const {
    VarSet out;
    for (Var w : *this)
      if (w != v) out.push(w);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < size_; ++i) {
      if (i) s += ",";
      s += var_name(order_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const VarSet& x, const VarSet& y) {
    return std::equal(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  void push(Var v) {
    if (contains(v))
      throw StructuralError("duplicate variable '" + std::string(var_name(v)) + "' in VarSet");
    order_[size_++] = v;
  }

  std::array<Var, kVarCount> order_{};
  std::size_t size_ = 0;
};

/// Exponent vector indexed by variable. Variables outside the owning ring
/// always carry exponent 0.
struct Monomial {
  std::array<int, kVarCount> exp{};

  int& operator[](Var v) { return exp[static_cast<std::size_t>(v)]; }
  int operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }

  bool is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
  }

  int total_degree() const {
    int s = 0;
    for (int e : exp) s += e;
    return s;
  }

  Monomial pow(int k) const {
    Monomial m;
    for (std::size_t i = 0; i < kVarCount; ++i) m.exp[i] = exp[i] * k;
    return m;
  }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial m;
    for (std::size_t i = 0; i < kVarCount; ++i) m.exp[i] = x.exp[i] + y.exp[i];
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Monomial in which only the listed variables may be non-zero.
inline bool lives_in(const Monomial& m, const VarSet& vars) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (m.exp[i] != 0 && !vars.contains(static_cast<Var>(i))) return false;
  return true;
}

/// Renders `q^4*z^-1`; the empty monomial renders as `1`.
inline std::string to_string(const Monomial& m, const VarSet& vars) {
  std::string s;
  for (Var v : vars) {
    int e = m[v];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

/// Canonical term order: total degree ascending; within a degree, larger
/// exponents of earlier variables first (so `q` precedes `z`, `q^2` precedes
/// `q*z`).
struct CanonicalLess {
  VarSet vars;

  bool operator()(const Monomial& x, const Monomial& y) const {
    int dx = x.total_degree(), dy = y.total_degree();
    if (dx != dy) return dx < dy;
    for (Var v : vars)
      if (x[v] != y[v]) return x[v] > y[v];
    return false;
  }
};

/// ±1 times a monomial: the unit of every substitution and Pochhammer base.
struct SignedMonomial {
  int sign = 1;
  Monomial mono;

  static SignedMonomial one() { return {}; }
  static SignedMonomial minus_one() { return {-1, {}}; }
  static SignedMonomial var(Var v, int power = 1) {
    SignedMonomial m;
    m.mono[v] = power;
    return m;
  }

  SignedMonomial pow(int k) const {
    return {(sign < 0 && (k % 2 != 0)) ? -1 : 1, mono.pow(k)};
  }

  SignedMonomial operator-() const { return {-sign, mono}; }

  friend SignedMonomial operator*(const SignedMonomial& x, const SignedMonomial& y) {
    return {x.sign * y.sign, x.mono * y.mono};
  }

  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

inline std::string to_string(const SignedMonomial& m, const VarSet& vars) {
  std::string body = to_string(m.mono, vars);
  if (m.sign > 0) return body;
  return body == "1" ? "-1" : "-" + body;
}

/// Degree window for one variable; nullopt means unbounded on that side.
struct VarBounds {
  std::optional<int> min = 0;
  std::optional<int> max;

  friend bool operator==(const VarBounds&, const VarBounds&) = default;
};

/// Per-variable degree windows plus an optional total-degree cap. Every
/// monomial outside the window is dropped from every result. Only z may
/// take negative degrees.
class TruncationSpec {
 public:
  TruncationSpec() = default;

  static TruncationSpec q_degree(int max_degree) {
    return TruncationSpec{}.with_max(Var::q, max_degree);
  }

  static TruncationSpec total(int cap) { return TruncationSpec{}.with_total(cap); }

  TruncationSpec with_max(Var v, std::optional<int> max) const {
    TruncationSpec t = *this;
    t.at(v).max = max;
    t.check(v);
    return t;
  }

  TruncationSpec with_min(Var v, std::optional<int> min) const {
    TruncationSpec t = *this;
    t.at(v).min = min;
    t.check(v);
    return t;
  }

  /// Symmetric Laurent window -bound..bound.
  TruncationSpec with_laurent(Var v, int bound) const {
    return with_max(v, bound).with_min(v, -bound);
  }

  TruncationSpec with_total(std::optional<int> cap) const {
    if (cap && *cap < 0) throw StructuralError("total-degree cap must be non-negative");
    TruncationSpec t = *this;
    t.total_ = cap;
    return t;
  }

  const VarBounds& bounds(Var v) const { return bounds_[static_cast<std::size_t>(v)]; }
  std::optional<int> total_cap() const { return total_; }

  bool admits(const Monomial& m) const {
    for (std::size_t i = 0; i < kVarCount; ++i) {
      const VarBounds& b = bounds_[i];
      int e = m.exp[i];
      if (b.min && e < *b.min) return false;
      if (b.max && e > *b.max) return false;
    }
    return !total_ || m.total_degree() <= *total_;
  }

  /// True when repeated multiplication by `step` leaves the window for good:
  /// some bounded coordinate moves monotonically towards its bound.
  bool escapes(const Monomial& step) const {
    for (std::size_t i = 0; i < kVarCount; ++i) {
      const VarBounds& b = bounds_[i];
      if (b.max && step.exp[i] > 0) return true;
      if (b.min && step.exp[i] < 0) return true;
    }
    return total_ && step.total_degree() > 0;
  }

  /// Tightest window admitted by both.
  TruncationSpec intersect(const TruncationSpec& o) const {
    TruncationSpec t;
    auto tighter_max = [](std::optional<int> x, std::optional<int> y) -> std::optional<int> {
      if (!x) return y;
      if (!y) return x;
      return std::min(*x, *y);
    };
    auto tighter_min = [](std::optional<int> x, std::optional<int> y) -> std::optional<int> {
      if (!x) return y;
      if (!y) return x;
      return std::max(*x, *y);
    };
    for (std::size_t i = 0; i < kVarCount; ++i) {
      t.bounds_[i].max = tighter_max(bounds_[i].max, o.bounds_[i].max);
      t.bounds_[i].min = tighter_min(bounds_[i].min, o.bounds_[i].min);
    }
    t.total_ = tighter_max(total_, o.total_);
    return t;
  }

  friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;

 private:
  VarBounds& at(Var v) { return bounds_[static_cast<std::size_t>(v)]; }

  void check(Var v) const {
    const VarBounds& b = bounds(v);
    if (v != Var::z && (!b.min || *b.min < 0))
      throw StructuralError("only z may take negative degrees (variable " +
                            std::string(var_name(v)) + ")");
    if (b.min && b.max && *b.min > *b.max)
      throw StructuralError("empty degree window for " + std::string(var_name(v)));
  }

  std::array<VarBounds, kVarCount> bounds_{};
  std::optional<int> total_;
};

/// A variable set together with its truncation: the context every
/// polynomial lives in.
struct Ring {
  VarSet vars;
  TruncationSpec trunc;

  friend bool operator==(const Ring&, const Ring&) = default;
};

}  // namespace qlab
