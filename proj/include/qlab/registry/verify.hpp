#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "qlab/registry/families.hpp"

namespace qlab {

/// Binds a family to parameters. Unknown ids, unknown keys, missing keys and
/// out-of-domain values raise ParameterError.
inline IdentityInstance instantiate(std::string_view id, const Params& params, const Profile& profile = {}) {
  const FamilyDescriptor* family = find_family(id);
  if (!family) throw ParameterError("unknown identity '" + std::string(id) + "'");
  const auto& names = family->param_names;
  const auto& optional = family->optional_params;
  for (const auto& [key, value] : params)
    if (std::find(names.begin(), names.end(), key) == names.end())
      throw ParameterError("identity '" + family->id + "' takes no parameter '" + key + "'");
  for (const auto& key : names)
    if (!params.count(key) && std::find(optional.begin(), optional.end(), key) == optional.end())
      throw ParameterError("identity '" + family->id + "' needs parameter '" + key + "'");
  IdentityInstance inst = family->build(params, profile);
  inst.family = family;
  inst.params = params;
  return inst;
}

struct VerifyOptions {
  /// Added with coefficient +1 to the right-hand side; used to check that a
  /// broken identity is caught.
  std::optional<Monomial> perturb;
};

/// First monomial, in canonical order, whose coefficients differ.
inline std::optional<Mismatch> first_mismatch(const SparsePoly& lhs, const SparsePoly& rhs) {
  const auto& l = lhs.terms();
  const auto& r = rhs.terms();
  CanonicalLess less;
  auto li = l.begin(), ri = r.begin();
  const VarSet& vars = lhs.ring().vars;
  while (li != l.end() || ri != r.end()) {
    if (ri == r.end() || (li != l.end() && less(li->first, ri->first)))
      return Mismatch{to_string(li->first, vars), li->second, 0};
    if (li == l.end() || less(ri->first, li->first)) return Mismatch{to_string(ri->first, vars), 0, ri->second};
    if (li->second != ri->second) return Mismatch{to_string(li->first, vars), li->second, ri->second};
    ++li;
    ++ri;
  }
  return std::nullopt;
}

inline VerificationReport verify(const IdentityInstance& inst, const VerifyOptions& options = {}) {
  VerificationReport report;
  report.id = inst.family ? inst.family->id : "";
  report.params = inst.params;
  report.checked_bound = inst.checked_bound;
  auto start = std::chrono::steady_clock::now();
  try {
    SparsePoly lhs = inst.lhs();
    SparsePoly rhs = inst.rhs();
    if (options.perturb) rhs.add_term(*options.perturb, 1);
    report.first_mismatch = first_mismatch(lhs, rhs);
    report.status = report.first_mismatch ? Status::fail : Status::pass;
    report.lhs_text = lhs.to_string();
  } catch (const std::exception& e) {
    report.status = Status::error;
    report.message = e.what();
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Every instance of the selected families on their grids, in registry
/// order and then grid order. `fixed` pins parameters; keys a family does
/// not take are ignored for that family.
inline std::vector<IdentityInstance> suite_instances(const std::vector<std::string>& ids, const Profile& profile,
                                                     const Params& fixed = {}) {
  std::vector<IdentityInstance> out;
  for (const auto& family : registry()) {
    if (std::find(ids.begin(), ids.end(), family.id) == ids.end()) continue;
    Params own;
    for (const auto& [k, v] : fixed)
      if (std::find(family.param_names.begin(), family.param_names.end(), k) != family.param_names.end())
        own[k] = v;
    for (const auto& params : family.grid(profile, own)) out.push_back(instantiate(family.id, params, profile));
  }
  return out;
}

inline std::vector<std::string> all_family_ids() {
  std::vector<std::string> ids;
  for (const auto& f : registry()) ids.push_back(f.id);
  return ids;
}

/// Runs instances on `workers` threads; reports come back in input order.
inline std::vector<VerificationReport> verify_all(const std::vector<IdentityInstance>& instances, int workers = 1,
                                                  const VerifyOptions& options = {}) {
  std::vector<VerificationReport> reports(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < instances.size();) reports[i] = verify(instances[i], options);
  };
  int n = std::max(1, std::min<int>(workers, static_cast<int>(instances.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return reports;
}

inline std::vector<VerificationReport> verify_suite(const std::vector<std::string>& ids, const Profile& profile = {},
                                                    const Params& fixed = {}, int workers = 1) {
  return verify_all(suite_instances(ids, profile, fixed), workers);
}

}  // namespace qlab
