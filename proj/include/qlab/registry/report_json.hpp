#pragma once

#include <json.hpp>

#include "qlab/registry/instance.hpp"

namespace qlab {

namespace detail {

// Coefficients that fit in 64 bits become JSON integers, larger ones strings.
inline nlohmann::json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long long>());
}

}  // namespace detail

inline nlohmann::json params_json(const Params& params) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [k, v] : params) {
    if (const auto* i = std::get_if<long long>(&v))
      out[k] = *i;
    else
      out[k] = std::get<std::string>(v);
  }
  return out;
}

/// {id, params, status, checked_bound, first_mismatch?, elapsed_ms}.
inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["params"] = params_json(r.params);
  j["status"] = std::string(status_name(r.status));
  j["checked_bound"] = r.checked_bound;
  if (r.first_mismatch)
    j["first_mismatch"] = {{"monomial", r.first_mismatch->monomial},
                           {"lhs", detail::integer_json(r.first_mismatch->lhs)},
                           {"rhs", detail::integer_json(r.first_mismatch->rhs)}};
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.id = j.at("id").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) {
    if (v.is_string())
      r.params[k] = v.get<std::string>();
    else
      r.params[k] = v.get<long long>();
  }
  std::string status = j.at("status").get<std::string>();
  if (status == "pass")
    r.status = Status::pass;
  else if (status == "fail")
    r.status = Status::fail;
  else if (status == "error")
    r.status = Status::error;
  else
    throw ParameterError("unknown status '" + status + "'");
  r.checked_bound = j.at("checked_bound").get<int>();
  if (j.contains("first_mismatch")) {
    const auto& m = j.at("first_mismatch");
    r.first_mismatch = Mismatch{m.at("monomial").get<std::string>(), detail::integer_from_json(m.at("lhs")),
                                detail::integer_from_json(m.at("rhs"))};
  }
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

inline nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

inline nlohmann::json to_json(const FamilyDescriptor& f) {
  return {{"id", f.id},
          {"anchor", f.anchor},
          {"lhs", f.lhs},
          {"rhs", f.rhs},
          {"mode", std::string(mode_name(f.mode))},
          {"params", f.param_names},
          {"four_variable", f.four_variable},
          {"table", static_cast<bool>(f.table)}};
}

}  // namespace qlab
