#include "lcpcert/commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "lcpcert/errors.hpp"
#include "lcpcert/io.hpp"

namespace lcpcert {

using nlohmann::json;

namespace {

constexpr double kDominationSlack = 1e-9;
constexpr std::size_t kDefaultLemmaTrials = 1000;
constexpr std::size_t kDefaultLcpTrials = 100;
constexpr std::size_t kScalarLemmaTrials = 100000;

json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

std::optional<Theorem> theorem_filter(const std::string& name) {
  if (name == "all") return std::nullopt;
  if (name == "gp-nekrasov") return Theorem::GpNekrasov;
  if (name == "new-nekrasov") return Theorem::NewNekrasov;
  if (name == "gp-bnekrasov") return Theorem::GpBNekrasov;
  if (name == "new-bnekrasov") return Theorem::NewBNekrasov;
  throw Error("unknown theorem '" + name + "'");
}

bool is_gp(Theorem t) { return t == Theorem::GpNekrasov || t == Theorem::GpBNekrasov; }

std::optional<EpsilonInterval> interval_for(const Matrix& m, Theorem gp) {
  return gp == Theorem::GpNekrasov ? gp_nekrasov_epsilon_interval(m)
                                   : gp_bnekrasov_epsilon_interval(m);
}

BoundReport evaluate_gp(const Matrix& m, Theorem gp, double eps) {
  return gp == Theorem::GpNekrasov ? gp_nekrasov_bound(m, eps) : gp_bnekrasov_bound(m, eps);
}

BoundReport new_for(const Matrix& m, Theorem gp) {
  return gp == Theorem::GpNekrasov ? new_nekrasov_bound(m) : new_bnekrasov_bound(m);
}

OutputFormat report_format(const RunConfig& cfg) {
  const OutputFormat f = cfg.format.value_or(OutputFormat::Json);
  if (f == OutputFormat::Csv) throw Error("csv output is only available for the sweep command");
  return f;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string bound_line(const BoundReport& r) {
  std::string line = fmt::format("{:<15}", to_string(r.theorem));
  if (r.applicable()) {
    line += format_number(*r.value);
  } else {
    line += "not applicable: " + (r.reason ? to_string(*r.reason) : std::string("?"));
  }
  if (r.epsilon && std::isfinite(*r.epsilon)) line += "  (epsilon = " + format_number(*r.epsilon) + ")";
  return line + "\n";
}

std::string classification_text(const ClassificationReport& c) {
  std::string out;
  out += "SDD:          " + yes_no(c.is_sdd) + "\n";
  out += "Z-matrix:     " + yes_no(c.is_z_matrix) + "\n";
  out += "Nekrasov:     " + yes_no(c.is_nekrasov) + "\n";
  out += "B-matrix:     " + yes_no(c.is_b_matrix) + "\n";
  out += "B-Nekrasov:   " + yes_no(c.is_b_nekrasov) + "\n";
  out += "H-matrix:     " + yes_no(c.is_h_matrix) + "\n";
  out += "P-matrix:     " + (c.is_p_matrix ? yes_no(*c.is_p_matrix) : std::string("not tested")) + "\n";
  for (const std::string& note : c.notes) out += "note: " + note + "\n";
  return out;
}

}  // namespace

json to_json(const BoundReport& r) {
  json j;
  j["theorem"] = to_string(r.theorem);
  j["applicable"] = r.applicable();
  if (r.reason) j["reason"] = to_string(*r.reason);
  if (r.epsilon && std::isfinite(*r.epsilon)) j["epsilon"] = *r.epsilon;
  if (r.value) j["value"] = number(*r.value);
  if (!r.intermediates.empty()) {
    json inter = json::object();
    for (const auto& [name, v] : r.intermediates) inter[name] = vector_json(v);
    j["intermediates"] = std::move(inter);
  }
  return j;
}

json to_json(const ClassificationReport& c) {
  json j;
  j["is_sdd"] = c.is_sdd;
  j["is_z_matrix"] = c.is_z_matrix;
  j["is_nekrasov"] = c.is_nekrasov;
  j["is_b_matrix"] = c.is_b_matrix;
  j["is_b_nekrasov"] = c.is_b_nekrasov;
  j["is_h_matrix"] = c.is_h_matrix;
  if (c.is_p_matrix) j["is_p_matrix"] = *c.is_p_matrix;
  j["notes"] = c.notes;
  return j;
}

json to_json(const OracleEstimate& e) {
  return json{{"max_observed", number(e.max_observed)},
              {"argmax_d", vector_json(e.argmax_d)},
              {"vertices", e.vertex_count},
              {"samples", e.interior_samples},
              {"seed", e.seed}};
}

json to_json(const LemmaReport& r) {
  json violations = json::array();
  for (const LemmaViolation& v : r.violations) {
    violations.push_back(json{{"trial", v.trial},
                              {"check", v.check},
                              {"row", v.row + 1},
                              {"lhs", number(v.lhs)},
                              {"rhs", number(v.rhs)},
                              {"d", vector_json(v.d)}});
  }
  return json{{"trials", r.trials},
              {"checks", r.checks},
              {"violations", r.violations.size()},
              {"violation_details", std::move(violations)}};
}

json to_json(const ErrorCertificate& c) {
  return json{{"trial_x", vector_json(c.trial_x)},
              {"residual_norm", number(c.residual_norm)},
              {"true_error", number(c.true_error)},
              {"bound_value", number(c.bound_value)},
              {"holds", c.holds}};
}

std::optional<Theorem> choose_sweep_theorem(const Matrix& m) {
  for (Theorem gp : {Theorem::GpNekrasov, Theorem::GpBNekrasov}) {
    const auto range = interval_for(m, gp);
    if (range && evaluate_gp(m, gp, range->midpoint()).applicable()) return gp;
  }
  return std::nullopt;
}

Sweep epsilon_sweep(const Matrix& m, Theorem gp, std::size_t grid) {
  if (!is_gp(gp)) throw DomainError("sweep needs an epsilon-parameterized theorem");
  if (grid < 2) throw DomainError("sweep grid must be at least 2");
  const auto range = interval_for(m, gp);
  if (!range) throw InapplicableBound(to_string(gp) + " does not apply to this matrix");
  const BoundReport fixed = new_for(m, gp);
  if (!fixed.applicable()) throw InapplicableBound(to_string(fixed.theorem));

  Sweep s{gp, fixed.theorem, *range, {}};
  s.rows.reserve(grid);
  const double step = (range->upper - range->lower) / static_cast<double>(grid + 1);
  for (std::size_t k = 1; k <= grid; ++k) {
    const double eps = range->lower + static_cast<double>(k) * step;
    const BoundReport r = evaluate_gp(m, gp, eps);
    s.rows.push_back({eps, r.value, *fixed.value});
  }
  return s;
}

std::string format_sweep_csv(const Sweep& sweep) {
  std::string out = "epsilon,gp_bound,new_bound\n";
  for (const SweepRow& row : sweep.rows) {
    out += format_number(row.epsilon) + ',' +
           (row.gp_bound ? format_number(*row.gp_bound) : std::string("n/a")) + ',' +
           format_number(row.new_bound) + '\n';
  }
  return out;
}

BoundReport gp_bound_at(const Matrix& m, Theorem gp, std::optional<double> epsilon) {
  if (epsilon) return evaluate_gp(m, gp, *epsilon);
  if (const auto range = interval_for(m, gp)) return evaluate_gp(m, gp, range->midpoint());
  // No admissible interval: the structural checks decide the reason, so the
  // epsilon argument is irrelevant and is dropped from the report.
  BoundReport r = evaluate_gp(m, gp, 0.0);
  r.epsilon.reset();
  return r;
}

std::vector<BoundReport> all_lcp_bounds(const Matrix& m, std::optional<double> epsilon) {
  return {gp_bound_at(m, Theorem::GpNekrasov, epsilon), new_nekrasov_bound(m),
          gp_bound_at(m, Theorem::GpBNekrasov, epsilon), new_bnekrasov_bound(m)};
}

std::optional<BoundReport> best_bound(const std::vector<BoundReport>& bounds) {
  std::optional<BoundReport> best;
  for (const BoundReport& r : bounds) {
    if (r.applicable() && (!best || *r.value < *best->value)) best = r;
  }
  return best;
}

CommandResult cmd_classify(const RunConfig& cfg) {
  const OutputFormat f = report_format(cfg);
  const Matrix m = parse_matrix(cfg.matrix_path);
  const ClassificationReport c = classify(m);
  if (f == OutputFormat::Text) return {kExitOk, classification_text(c), ""};
  json j{{"matrix", cfg.matrix_path}, {"n", m.size()}, {"classification", to_json(c)}};
  return {kExitOk, j.dump(2) + "\n", ""};
}

CommandResult cmd_bound(const RunConfig& cfg) {
  const OutputFormat f = report_format(cfg);
  const std::optional<Theorem> only = theorem_filter(cfg.theorem);
  if (only && is_gp(*only) && !cfg.epsilon) {
    throw Error("--epsilon is required for --theorem " + cfg.theorem);
  }
  const Matrix m = parse_matrix(cfg.matrix_path);

  std::vector<BoundReport> bounds = all_lcp_bounds(m, cfg.epsilon);
  if (only) {
    std::erase_if(bounds, [&](const BoundReport& r) { return r.theorem != *only; });
  }
  const bool any = std::any_of(bounds.begin(), bounds.end(),
                               [](const BoundReport& r) { return r.applicable(); });
  const int code = any ? kExitOk : kExitNoBound;
  const ClassificationReport c = classify(m);

  if (f == OutputFormat::Text) {
    std::string out = fmt::format("matrix: {} (n = {})\n", cfg.matrix_path, m.size());
    for (const BoundReport& r : bounds) out += bound_line(r);
    return {code, out, ""};
  }
  json list = json::array();
  for (const BoundReport& r : bounds) list.push_back(to_json(r));
  json j{{"matrix", cfg.matrix_path},
         {"n", m.size()},
         {"bounds", std::move(list)},
         {"classification", to_json(c)}};
  return {code, j.dump(2) + "\n", ""};
}

CommandResult cmd_sweep(const RunConfig& cfg) {
  const Matrix m = parse_matrix(cfg.matrix_path);
  std::optional<Theorem> gp;
  if (cfg.theorem == "all") {
    gp = choose_sweep_theorem(m);
  } else {
    gp = theorem_filter(cfg.theorem);
    if (!is_gp(*gp)) throw Error("sweep needs --theorem gp-nekrasov or gp-bnekrasov");
  }
  if (!gp) {
    return {kExitNoBound, "",
            "NotApplicable: neither epsilon-parameterized bound applies to this matrix\n"};
  }
  try {
    return {kExitOk, format_sweep_csv(epsilon_sweep(m, *gp, cfg.grid)), ""};
  } catch (const InapplicableBound& e) {
    return {kExitNoBound, "", std::string(e.what()) + "\n"};
  }
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const OutputFormat f = report_format(cfg);
  const Matrix m = parse_matrix(cfg.matrix_path);
  const OracleEstimate oracle = oracle_max_norm(m, cfg.samples, cfg.seed);
  const std::vector<BoundReport> bounds = all_lcp_bounds(m, cfg.epsilon);

  bool all_dominated = true;
  bool any_applicable = false;
  json list = json::array();
  for (const BoundReport& r : bounds) {
    json j = to_json(r);
    if (r.applicable()) {
      any_applicable = true;
      const bool dominated = oracle.max_observed <= *r.value * (1.0 + kDominationSlack);
      all_dominated = all_dominated && dominated;
      j["dominated"] = dominated;
    }
    list.push_back(std::move(j));
  }

  const std::size_t trials = cfg.trials.value_or(kDefaultLemmaTrials);
  json lemma;
  bool lemma_clean = true;
  if (is_nekrasov_positive_diagonal(m)) {
    const LemmaReport rep = lemma_property_suite(m, trials, cfg.seed);
    lemma = to_json(rep);
    lemma["target"] = "M";
    lemma_clean = rep.clean();
  } else if (is_b_nekrasov(m)) {
    const LemmaReport rep = lemma_property_suite(bplus_decompose(m).b_plus, trials, cfg.seed);
    lemma = to_json(rep);
    lemma["target"] = "B+";
    lemma_clean = rep.clean();
  } else {
    lemma = json{{"skipped", true}, {"violations", 0}};
  }
  const std::size_t scalar = scalar_lemma_violations(kScalarLemmaTrials, cfg.seed);
  lemma["scalar_trials"] = kScalarLemmaTrials;
  lemma["scalar_violations"] = scalar;
  lemma_clean = lemma_clean && scalar == 0;

  int code = kExitOk;
  if (!any_applicable) {
    code = kExitNoBound;
  } else if (!all_dominated || !lemma_clean) {
    code = kExitError;
  }

  if (f == OutputFormat::Text) {
    std::string out = fmt::format("oracle max observed: {} ({} vertices + {} samples, seed {})\n",
                                  format_number(oracle.max_observed), oracle.vertex_count,
                                  oracle.interior_samples, oracle.seed);
    for (std::size_t k = 0; k < bounds.size(); ++k) {
      out += bound_line(bounds[k]);
      if (list[k].contains("dominated")) {
        out += std::string("  dominated: ") + yes_no(list[k]["dominated"].get<bool>()) + "\n";
      }
    }
    out += fmt::format("lemma suite violations: {}\n", lemma["violations"].get<std::size_t>() + scalar);
    return {code, out, ""};
  }
  json j{{"matrix", cfg.matrix_path},
         {"n", m.size()},
         {"oracle", to_json(oracle)},
         {"bounds", std::move(list)},
         {"lemma_suite", std::move(lemma)}};
  return {code, j.dump(2) + "\n", ""};
}

CommandResult cmd_lcp(const RunConfig& cfg) {
  const OutputFormat f = report_format(cfg);
  if (!cfg.q_path) throw Error("lcp needs --q FILE");
  const LcpInstance inst(parse_matrix(cfg.matrix_path), parse_vector(*cfg.q_path));
  const LcpSolution sol = solve_lcp(inst);
  const std::optional<BoundReport> best = best_bound(all_lcp_bounds(inst.m, cfg.epsilon));

  std::vector<ErrorCertificate> certs;
  if (best) {
    for (const Vector& x : random_trial_points(sol.x_star, cfg.trials.value_or(kDefaultLcpTrials), cfg.seed)) {
      certs.push_back(certify_error_bound(inst, sol, x, *best));
    }
  }
  const bool all_hold =
      std::all_of(certs.begin(), certs.end(), [](const ErrorCertificate& c) { return c.holds; });
  const int code = !best ? kExitNoBound : (all_hold ? kExitOk : kExitError);

  if (f == OutputFormat::Text) {
    std::string out = "x*: ";
    for (double v : sol.x_star) out += format_number(v) + " ";
    out += "\ncomplementarity gap: " + format_number(sol.complementarity_gap) + "\n";
    if (best) {
      out += bound_line(*best);
      out += fmt::format("certificates: {} trials, all hold: {}\n", certs.size(), yes_no(all_hold));
    } else {
      out += "no applicable bound\n";
    }
    return {code, out, ""};
  }

  json basis = json::array();
  for (std::size_t i : sol.basis) basis.push_back(i + 1);
  json cert_list = json::array();
  for (const ErrorCertificate& c : certs) cert_list.push_back(to_json(c));
  json j{{"matrix", cfg.matrix_path},
         {"n", inst.size()},
         {"x_star", vector_json(sol.x_star)},
         {"w_star", vector_json(sol.w_star)},
         {"basis", std::move(basis)},
         {"complementarity_gap", number(sol.complementarity_gap)},
         {"bound", best ? to_json(*best) : json(nullptr)},
         {"certificates", std::move(cert_list)},
         {"all_hold", all_hold}};
  return {code, j.dump(2) + "\n", ""};
}

CommandResult run_command(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case Command::Classify: return cmd_classify(cfg);
      case Command::Bound: return cmd_bound(cfg);
      case Command::Sweep: return cmd_sweep(cfg);
      case Command::Verify: return cmd_verify(cfg);
      case Command::Lcp: return cmd_lcp(cfg);
    }
  } catch (const std::exception& e) {
    return {kExitError, "", std::string(e.what()) + "\n"};
  }
  return {kExitError, "", "unknown command\n"};
}

}  // namespace lcpcert
