#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qlab/series/sparse_poly.hpp"

namespace qlab {

using ParamValue = std::variant<long long, std::string>;
/// Ordered by key, so instances and reports print and sort deterministically.
using Params = std::map<std::string, ParamValue>;

inline std::string to_string(const ParamValue& v) {
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

/// `N=4 kind=psi`.
inline std::string to_string(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += " ";
    s += k + "=" + to_string(v);
  }
  return s;
}

enum class Mode { series, count };

inline std::string_view mode_name(Mode m) { return m == Mode::series ? "series" : "count"; }

/// Which four-variable instances a suite run includes.
enum class FourVariable { include, only, exclude };

/// Bounds of a suite run. Overridable per run; nothing here is baked into
/// the families.
struct Profile {
  int max_N = 10;
  int degree = 40;            // q-degree cap of series families
  int count_bound = 24;       // largest n tallied by count families
  int four_var_N = 6;
  int four_var_degree = 16;   // total-degree cap in the {a,b,c,d} ring
  int rts_max = 2;            // r, t, s range over 0..rts_max
  int z_bound = 10;           // z-degrees -z_bound..z_bound
  int rs_max_index = 12;      // Rogers-Szego index range
  FourVariable four_variable = FourVariable::include;
};

struct FamilyDescriptor;

/// A family bound to concrete parameters: both sides are ready to evaluate
/// in a common ring.
struct IdentityInstance {
  const FamilyDescriptor* family = nullptr;
  Params params;
  Ring ring;
  int checked_bound = 0;
  std::function<SparsePoly()> lhs;
  std::function<SparsePoly()> rhs;
};

/// The partitions listed on each side of a counting identity.
struct Table {
  std::string left_title;
  std::string right_title;
  std::vector<std::string> left;
  std::vector<std::string> right;
};

struct FamilyDescriptor {
  std::string id;
  std::string anchor;  // the statement being checked
  std::string lhs;
  std::string rhs;
  Mode mode = Mode::series;
  std::vector<std::string> param_names;
  std::vector<std::string> optional_params;  // subset of param_names
  bool four_variable = false;
  /// Default parameter grid; `fixed` pins individual parameters.
  std::function<std::vector<Params>(const Profile&, const Params& fixed)> grid;
  std::function<IdentityInstance(const Params&, const Profile&)> build;
  /// Set for families that can list both sides of a single count.
  std::function<Table(const Params&)> table;
};

enum class Status { pass, fail, error };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

struct Mismatch {
  std::string monomial;
  Integer lhs;
  Integer rhs;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
  std::string id;
  Params params;
  Status status = Status::error;
  int checked_bound = 0;
  std::optional<Mismatch> first_mismatch;
  double elapsed_ms = 0;
  /// Shown in text output only.
  std::string message;
  std::string lhs_text;
};

}  // namespace qlab
