#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "qlab/bijection/sylvester.hpp"
#include "qlab/registry/report_json.hpp"
#include "qlab/registry/verify.hpp"

namespace qlab::cli {

enum class Format { text, json };

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> identities;  // empty: every family
  std::string filter;                   // substring of the family id
  Params fixed;                         // N, j, n, r, t, s, eps, kind, sub
  std::optional<int> degree;
  bool four_variable = false;
  Format format = Format::text;
  std::string out_path;
  int workers = 1;
  std::optional<std::string> partition;  // bijection input
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Profile profile_of(const RunConfig& config) {
  Profile p;
  if (config.degree) {
    if (*config.degree < 0) throw UsageError("--degree must be non-negative");
    p.degree = *config.degree;
    p.count_bound = *config.degree;
  }
  if (config.four_variable) p.four_variable = FourVariable::only;
  return p;
}

inline std::vector<std::string> selected_ids(const RunConfig& config) {
  std::vector<std::string> ids;
  if (!config.identities.empty()) {
    for (const auto& id : config.identities) {
      if (!find_family(id)) throw UsageError("unknown identity '" + id + "'");
      ids.push_back(id);
    }
  } else {
    ids = all_family_ids();
  }
  std::erase_if(ids, [&](const std::string& id) { return id.find(config.filter) == std::string::npos; });
  return ids;
}

inline std::string quote_rows(const std::vector<std::string>& rows) {
  std::string s;
  for (const auto& r : rows) s += (s.empty() ? "" : ",") + r;
  return s;
}

// ---------------------------------------------------------------------------

inline int cmd_list(const RunConfig& config, std::ostream& out) {
  auto ids = selected_ids(config);
  if (config.format == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& id : ids) arr.push_back(to_json(*find_family(id)));
    out << arr.dump(2) << "\n";
    return kExitPass;
  }
  std::size_t width = 0;
  for (const auto& id : ids) width = std::max(width, id.size());
  for (const auto& id : ids) {
    const FamilyDescriptor& f = *find_family(id);
    std::string params = f.param_names.empty() ? "-" : quote_rows(f.param_names);
    out << std::left << std::setw(static_cast<int>(width) + 2) << f.id << std::setw(7) << mode_name(f.mode)
        << std::setw(18) << params << f.anchor << "\n";
  }
  return kExitPass;
}

inline void print_report(const VerificationReport& r, std::ostream& out) {
  std::string tag = r.status == Status::pass ? "PASS " : r.status == Status::fail ? "FAIL " : "ERROR";
  out << tag << " " << r.id;
  if (!r.params.empty()) out << " [" << to_string(r.params) << "]";
  out << " bound=" << r.checked_bound << " " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms";
  out.unsetf(std::ios::floatfield);
  if (r.first_mismatch)
    out << "  first mismatch at " << r.first_mismatch->monomial << ": lhs " << r.first_mismatch->lhs << ", rhs "
        << r.first_mismatch->rhs;
  if (!r.message.empty()) out << "  " << r.message;
  out << "\n";
}

// Checked polynomials are printed only for small runs.
inline constexpr std::size_t kShowPolynomialUpTo = 8;

inline int cmd_verify(const RunConfig& config, std::ostream& out) {
  Profile profile = profile_of(config);
  auto ids = selected_ids(config);
  for (const auto& [key, value] : config.fixed) {
    bool used = std::any_of(ids.begin(), ids.end(), [&](const std::string& id) {
      const auto& names = find_family(id)->param_names;
      return std::find(names.begin(), names.end(), key) != names.end();
    });
    if (!used) throw UsageError("no selected identity takes parameter '" + key + "'");
  }
  std::vector<IdentityInstance> instances;
  try {
    instances = suite_instances(ids, profile, config.fixed);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  if (instances.empty()) throw UsageError("no instances selected");
  auto reports = verify_all(instances, config.workers);
  bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::pass; });

  if (config.format == Format::json) {
    out << to_json(reports).dump(2) << "\n";
    return all_pass ? kExitPass : kExitFail;
  }
  int pass = 0, fail = 0, error = 0;
  double total_ms = 0;
  for (const auto& r : reports) {
    print_report(r, out);
    if (reports.size() <= kShowPolynomialUpTo && r.status != Status::error) out << "  lhs = " << r.lhs_text << "\n";
    pass += r.status == Status::pass;
    fail += r.status == Status::fail;
    error += r.status == Status::error;
    total_ms += r.elapsed_ms;
  }
  out << reports.size() << " instances: " << pass << " pass, " << fail << " fail, " << error << " error ("
      << std::fixed << std::setprecision(1) << total_ms << " ms)\n";
  out.unsetf(std::ios::floatfield);
  return all_pass ? kExitPass : kExitFail;
}

inline int cmd_table(const RunConfig& config, std::ostream& out) {
  if (config.identities.size() != 1) throw UsageError("table needs exactly one --identity");
  const FamilyDescriptor* f = find_family(config.identities.front());
  if (!f) throw UsageError("unknown identity '" + config.identities.front() + "'");
  if (!f->table) throw UsageError("identity '" + f->id + "' has no table; use a counting identity");
  for (const auto& key : f->param_names)
    if (!config.fixed.count(key)) throw UsageError("table for '" + f->id + "' needs --" + key);
  for (const auto& [key, value] : config.fixed)
    if (std::find(f->param_names.begin(), f->param_names.end(), key) == f->param_names.end())
      throw UsageError("identity '" + f->id + "' takes no parameter '" + key + "'");
  Table t;
  try {
    t = f->table(config.fixed);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  bool equal = t.left.size() == t.right.size();
  if (config.format == Format::json) {
    nlohmann::json j{{"id", f->id},
                     {"params", params_json(config.fixed)},
                     {"left", {{"title", t.left_title}, {"count", t.left.size()}, {"rows", t.left}}},
                     {"right", {{"title", t.right_title}, {"count", t.right.size()}, {"rows", t.right}}}};
    out << j.dump(2) << "\n";
    return equal ? kExitPass : kExitFail;
  }
  std::size_t width = t.left_title.size();
  for (const auto& r : t.left) width = std::max(width, r.size());
  width += 3;
  out << std::left << std::setw(static_cast<int>(width)) << t.left_title << t.right_title << "\n";
  for (std::size_t i = 0; i < std::max(t.left.size(), t.right.size()); ++i) {
    out << std::setw(static_cast<int>(width)) << (i < t.left.size() ? t.left[i] : "")
        << (i < t.right.size() ? t.right[i] : "") << "\n";
  }
  out << std::setw(static_cast<int>(width)) << ("count " + std::to_string(t.left.size()))
      << ("count " + std::to_string(t.right.size())) << "\n";
  return equal ? kExitPass : kExitFail;
}

inline std::string comma_parts(std::span<const int> parts) {
  std::string s;
  for (int p : parts) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

inline std::vector<int> part_vector(std::span<const int> parts) { return {parts.begin(), parts.end()}; }

inline int cmd_bijection(const RunConfig& config, std::ostream& out) {
  if (!config.partition) throw UsageError("bijection needs --partition (comma-separated, \"\" for empty)");
  if (!config.fixed.count("j")) throw UsageError("bijection needs --j");
  for (const auto& [key, value] : config.fixed)
    if (key != "j" && key != "N") throw UsageError("bijection takes no parameter '" + key + "'");
  OddPartition odd;
  Partition pi, distinct;
  int j = 0;
  Bound bound = unbounded;
  try {
    j = detail::small_param(config.fixed, "j", 1, detail::kMaxParam);
    if (config.fixed.count("N")) bound = detail::bound_param(config.fixed);
    pi = Partition::parse(*config.partition);
    odd = embed(pi, j, bound);
    distinct = sylvester(odd);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  TransportedStats predicted = predicted_stats(odd), observed = observed_stats(distinct);
  bool round_trip = sylvester_inverse(distinct) == odd;
  bool ok = round_trip && predicted == observed && observed.alternating == j && observed.even_sum == pi.size();
  if (config.format == Format::json) {
    nlohmann::json jv{{"pi", part_vector(pi.parts())},
                      {"j", j},
                      {"pi_o", part_vector(odd.parts())},
                      {"pi_d", part_vector(distinct.parts())},
                      {"gamma", observed.alternating},
                      {"even_sum", observed.even_sum},
                      {"largest", observed.largest},
                      {"round_trip", round_trip}};
    if (bound) jv["N"] = *bound;
    out << jv.dump(2) << "\n";
    return ok ? kExitPass : kExitFail;
  }
  out << "pi   = " << comma_parts(pi.parts()) << (pi.length() ? "" : "(empty)") << "\n";
  out << "pi_o = " << comma_parts(odd.parts()) << "   (column of " << j << ")\n";
  for (const auto& row : CenteredDiagram(odd).render()) out << "       " << row << "\n";
  out << "pi_d = " << comma_parts(distinct.parts()) << "\n";
  out << "gamma(pi_d) = " << observed.alternating << " (#pi_o = " << predicted.alternating << ")\n";
  out << "E(pi_d)     = " << observed.even_sum << " (|pi| = " << pi.size() << ")\n";
  out << "largest     = " << observed.largest;
  if (bound) out << " <= N = " << *bound;
  out << "\n";
  out << "inverse     = " << comma_parts(sylvester_inverse(distinct).parts()) << (round_trip ? " (round trip)" : " (MISMATCH)")
      << "\n";
  return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------

inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out_path.empty()) {
    file.open(config.out_path);
    if (!file) {
      err << "error: cannot open " << config.out_path << "\n";
      return kExitUsage;
    }
    sink = &file;
  }
  try {
    if (config.workers < 1) throw UsageError("--workers must be at least 1");
    if (config.subcommand == "list") return cmd_list(config, *sink);
    if (config.subcommand == "verify") return cmd_verify(config, *sink);
    if (config.subcommand == "table") return cmd_table(config, *sink);
    if (config.subcommand == "bijection") return cmd_bijection(config, *sink);
    throw UsageError("unknown subcommand '" + config.subcommand + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

/// Parses argv-style arguments (without the program name) and runs.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of partition and q-series identities", "qlab"};
  app.require_subcommand(1);
  RunConfig config;
  config.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string format = "text";
  std::optional<long long> N, j, n, r, t, s, eps;
  std::optional<std::string> kind, sub;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--identity", config.identities, "Family id (repeatable)");
    cmd->add_option("--filter", config.filter, "Keep families whose id contains this text");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", config.out_path, "Write output to PATH");
  };
  auto params = [&](CLI::App* cmd) {
    cmd->add_option("--N", N, "Largest-part bound");
    cmd->add_option("--j", j, "Number of parts / column height / z-degree");
    cmd->add_option("--n", n, "Size being counted");
    cmd->add_option("--r", r, "Exponent r in (q^r,q^t,-1,eps q^s)");
    cmd->add_option("--t", t, "Exponent t");
    cmd->add_option("--s", s, "Exponent s");
    cmd->add_option("--eps", eps, "Sign eps, +1 or -1");
    cmd->add_option("--kind", kind, "psi (distinct parts) or phi (all partitions)");
    cmd->add_option("--sub", sub, "Substitution preset for (a,b,c,d)");
  };

  auto* list = app.add_subcommand("list", "List identity families");
  common(list);
  auto* verify = app.add_subcommand("verify", "Verify identity instances");
  common(verify);
  params(verify);
  verify->add_option("--degree", config.degree, "q-degree cap; also the largest n for counting identities");
  verify->add_flag("--four-variable", config.four_variable, "Only instances in the full {a,b,c,d} ring");
  verify->add_option("--workers", config.workers, "Worker threads");
  auto* table = app.add_subcommand("table", "List the partitions on both sides of a count");
  common(table);
  params(table);
  auto* bijection = app.add_subcommand("bijection", "Run pi -> pi_o -> pi_d");
  common(bijection);
  bijection->add_option("--partition", config.partition, "Comma-separated parts, \"\" for empty");
  bijection->add_option("--j", j, "Column height");
  bijection->add_option("--N", N, "Optional largest-part bound");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? Format::json : Format::text;
  auto put = [&](const char* key, const auto& v) {
    if (v) config.fixed[key] = *v;
  };
  put("N", N);
  put("j", j);
  put("n", n);
  put("r", r);
  put("t", t);
  put("s", s);
  put("eps", eps);
  put("kind", kind);
  put("sub", sub);
  return run(config, out, err);
}

}  // namespace qlab::cli
