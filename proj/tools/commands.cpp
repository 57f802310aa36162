// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lorentz/ball_map.hpp"
#include "lorentz/error.hpp"
#include "lorentz/polarize.hpp"
#include "lorentz/poly_json.hpp"
#include "lorentz/sampling.hpp"
#include "lorentz/sep_flow.hpp"
#include "lorentz/strata.hpp"

namespace lorentz::cli {
namespace {

using nlohmann::json;

// Variables are numbered from 1 in everything the CLI prints.
std::vector<int> one_based(Mask s) {
  std::vector<int> out = mask_elements(s);
  for (int& v : out) ++v;
  return out;
}

std::string fmt(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::string monomial_label(const Exponent& alpha) {
  std::string label;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    label += "w" + std::to_string(i + 1);
    if (alpha[i] > 1) label += "^" + std::to_string(alpha[i]);
  }
  return label.empty() ? "1" : label;
}

json witness_json(const Witness& witness) {
  return std::visit(
      [](const auto& w) -> json {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, NegativeCoefficientWitness>) {
          return {{"type", "negative_coefficient"}, {"exponent", w.exponent}, {"value", w.value}};
        } else if constexpr (std::is_same_v<W, HessianWitness>) {
          return {{"type", "hessian_signature"},
                  {"subset", one_based(w.subset)},
                  {"eigenvalues", w.eigenvalues}};
        } else if constexpr (std::is_same_v<W, BasisExchangeWitness>) {
          return {{"type", "basis_exchange"},
                  {"B1", one_based(w.b1)},
                  {"B2", one_based(w.b2)},
                  {"x", w.x + 1}};
        } else if constexpr (std::is_same_v<W, ExchangeWitness>) {
          return {{"type", "m_convex_exchange"},
                  {"alpha", w.alpha},
                  {"beta", w.beta},
                  {"i", w.i + 1}};
        } else {
          return {{"type", "direction"},
                  {"y", w.y},
                  {"line_coeffs", w.line_coeffs},
                  {"hermite_eigenvalues", w.hermite_eigenvalues}};
        }
      },
      witness);
}

json verdict_json(const Verdict& verdict) {
  json j{{"verdict", std::string(to_string(verdict.status))},
         {"tolerance", verdict.tolerance}};
  if (verdict.witness) j["witness"] = witness_json(*verdict.witness);
  return j;
}

void emit_text(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output);
  if (!file) throw DomainError("cannot write " + config.output);
  file << text;
}

void emit(const RunConfig& config, std::ostream& out, const json& j) {
  emit_text(config, out, j.dump(2) + "\n");
}

void require_input(const RunConfig& config) {
  if (config.input.empty()) throw DomainError("--input is required");
}

TranspositionRates load_rates(const RunConfig& config, int n) {
  if (config.rates == "uniform") return uniform_rates(n);
  std::ifstream in(config.rates);
  if (!in) throw DomainError("cannot open rates file " + config.rates);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError(config.rates + ": " + e.what());
  }
  if (!j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<int>() != n) {
    throw DomainError(config.rates + ": n: missing or different from the polynomial's");
  }
  if (!j.contains("rates") || !j.at("rates").is_array()) {
    throw DomainError(config.rates + ": rates: expected an array");
  }
  std::map<std::pair<int, int>, double> rates;
  for (std::size_t k = 0; k < j.at("rates").size(); ++k) {
    const json& entry = j.at("rates")[k];
    const std::string where = config.rates + ": rates[" + std::to_string(k) + "]";
    if (!entry.contains("pair") || !entry.contains("rate") || !entry.at("pair").is_array() ||
        entry.at("pair").size() != 2 || !entry.at("rate").is_number()) {
      throw DomainError(where + ": expected {\"pair\": [i, j], \"rate\": q}");
    }
    int i = entry.at("pair")[0].get<int>() - 1;
    int jj = entry.at("pair")[1].get<int>() - 1;
    if (i > jj) std::swap(i, jj);
    rates[{i, jj}] = entry.at("rate").get<double>();
  }
  return TranspositionRates(n, std::move(rates));
}

// A polynomial whose terms are all multiaffine is treated as a point of the
// multiaffine space.
bool multiaffine_input(const HomPoly& f) { return f.is_multiaffine() && f.d() <= f.n(); }

std::string trajectory_csv(const std::vector<TrajectoryRow>& rows,
                           const MembershipOracle& oracle) {
  std::ostringstream csv;
  const bool lifted = oracle.plan().has_value();
  std::vector<Exponent> labels;
  if (lifted) {
    const auto& plan = *oracle.plan();
    labels = capped_exponents(plan.n(), plan.d(), plan.kappa());
  } else {
    for (Mask s : oracle.basis()->subsets()) {
      Exponent alpha(oracle.basis()->n(), 0);
      for (int v : mask_elements(s)) alpha[v] = 1;
      labels.push_back(alpha);
    }
  }
  csv << "time";
  for (const Exponent& alpha : labels) csv << ',' << monomial_label(alpha);
  csv << ",centered_norm,verdict\n";
  for (const TrajectoryRow& row : rows) {
    csv << fmt(row.time);
    if (lifted) {
      const HomPoly f = oracle.lower(row.state);
      for (const Exponent& alpha : labels) csv << ',' << fmt(f.coeff(alpha));
    } else {
      for (double c : row.state.coeffs()) csv << ',' << fmt(c);
    }
    csv << ',' << fmt(row.centered_norm) << ',' << to_string(row.verdict.status) << '\n';
  }
  return csv.str();
}

MembershipOracle oracle_for(const RunConfig& config, const HomPoly& f, Space space) {
  switch (space) {
    case Space::MultiaffineLorentzian:
      return MembershipOracle::multiaffine_lorentzian(f.n(), f.d(), config.tol);
    case Space::CappedLorentzian:
      return MembershipOracle::capped_lorentzian(PolarizationPlan(f), config.tol);
    case Space::Stable:
      return MembershipOracle::stable(f.n(), f.d(), config.directions, config.seed, config.tol);
  }
  throw DomainError("unknown space");
}

}  // namespace

int cmd_certify(const RunConfig& config, std::ostream& out) {
  require_input(config);
  const HomPoly raw = read_poly_file(config.input);
  const double mass = value_at_ones(raw);
  const HomPoly f = normalize(raw);
  json report;
  Verdict verdict;
  if (config.mode == "lorentzian") {
    const bool multiaffine = multiaffine_input(f);
    verdict = multiaffine ? certify_multiaffine(to_multiaffine(f), config.tol)
                          : certify_hom(f, config.tol);
    report["space"] = multiaffine ? "multiaffine-lorentzian" : "capped-lorentzian";
  } else if (config.mode == "stable") {
    verdict = certify_stable(f, config.directions, config.seed, config.tol);
    report["space"] = "stable";
    report["directions"] = config.directions;
    report["seed"] = config.seed;
  } else {
    throw DomainError("--mode must be lorentzian or stable");
  }
  report["mode"] = config.mode;
  report["input_mass"] = mass;
  report.update(verdict_json(verdict));
  emit(config, out, report);
  return verdict.member() ? kExitOk : kExitRejected;
}

int cmd_flow(const RunConfig& config, std::ostream& out) {
  require_input(config);
  const HomPoly f = normalize(read_poly_file(config.input));
  if (config.polarized) {
    if (config.rates != "uniform") {
      throw DomainError("--polarized flows use uniform rates on the lifted variables");
    }
    const Space space = config.mode == "stable" ? Space::Stable : Space::CappedLorentzian;
    const MembershipOracle oracle = oracle_for(config, f, space);
    const MultiAffinePoly state = oracle.lift(f);
    const auto rows = trajectory(state, *state_spectrum(oracle), config.times, oracle);
    emit_text(config, out, trajectory_csv(rows, oracle));
    return kExitOk;
  }
  if (!multiaffine_input(f)) {
    throw DomainError("flow needs a multiaffine polynomial; use --polarized otherwise");
  }
  const MultiAffinePoly g = to_multiaffine(f);
  const MembershipOracle oracle =
      MembershipOracle::multiaffine_lorentzian(g.n(), g.d(), config.tol);
  const SepSpectrum spec =
      spectral(build_generator(g.basis_ptr(), load_rates(config, g.n())));
  const auto rows = trajectory(g, spec, config.times, oracle);
  emit_text(config, out, trajectory_csv(rows, oracle));
  return kExitOk;
}

int cmd_trajectory(const RunConfig& config, std::ostream& out) {
  require_input(config);
  const HomPoly f = normalize(read_poly_file(config.input));
  const MembershipOracle oracle = oracle_for(config, f, parse_space(config.space));
  const auto rows =
      trajectory(oracle.lift(f), *state_spectrum(oracle), config.times, oracle);
  emit_text(config, out, trajectory_csv(rows, oracle));
  return kExitOk;
}

int cmd_spectrum(const RunConfig& config, std::ostream& out) {
  const SepGenerator generator =
      build_generator(enumerate_subsets(config.n, config.d), load_rates(config, config.n));
  const SepSpectrum spec = spectral(generator);
  json report{{"n", config.n},
              {"d", config.d},
              {"dimension", spec.eigenvalues.size()},
              {"rates", config.rates},
              {"eigenvalues", std::vector<double>(spec.eigenvalues.begin(),
                                                  spec.eigenvalues.end())},
              {"lambda_1", spec.lambda_1()},
              {"lambda_min", spec.lambda_min()},
              {"spectral_gap", spec.spectral_gap()},
              {"primitivity_exponent", check_primitivity(generator)}};
  emit(config, out, report);
  return kExitOk;
}

int cmd_polarize(const RunConfig& config, std::ostream& out) {
  require_input(config);
  const HomPoly f = read_poly_file(config.input);
  if (config.direction == "up") {
    emit(config, out, poly_to_json(polarize_up(f)));
  } else if (config.direction == "down") {
    if (config.kappa.empty()) throw DomainError("--kappa is required for --direction down");
    const PolarizationPlan plan(static_cast<int>(config.kappa.size()), f.d(), config.kappa);
    emit(config, out, poly_to_json(project_down(to_multiaffine(f), plan)));
  } else {
    throw DomainError("--direction must be up or down");
  }
  return kExitOk;
}

int cmd_ballmap(const RunConfig& config, std::ostream& out) {
  require_input(config);
  const HomPoly f = normalize(read_poly_file(config.input));
  const MembershipOracle oracle = oracle_for(config, f, parse_space(config.space));
  const MultiAffinePoly state = oracle.lift(f);
  const EscapeTimeResult escape = escape_time(state, oracle, *state_spectrum(oracle));
  json report{{"space", std::string(to_string(oracle.space()))},
              {"status", std::string(to_string(escape.status))},
              {"anchor_verdict", std::string(to_string(escape.anchor_status))},
              {"converged", escape.converged},
              {"bracket_width", escape.bracket_width},
              {"ball_point", std::vector<double>(escape.ball_point.begin(),
                                                 escape.ball_point.end())},
              {"norm", escape.ball_point.norm()}};
  report["sigma"] = std::isfinite(escape.sigma) ? json(escape.sigma) : json(nullptr);
  report["anchor"] = escape.anchor ? poly_to_json(oracle.lower(*escape.anchor)) : json(nullptr);
  emit(config, out, report);
  return kExitOk;
}

int cmd_strata(const RunConfig& config, std::ostream& out) {
  require_input(config);
  const HomPoly f = read_poly_file(config.input);
  json report;
  try {
    if (multiaffine_input(f)) {
      const MultiaffineStratum stratum = support_stratum(to_multiaffine(f), config.tol);
      json support = json::array();
      for (Mask s : stratum.support.bases) support.push_back(one_based(s));
      report = {{"kind", "matroid_bases"},
                {"support", support},
                {"m_convex", stratum.verdict.matroid}};
      if (stratum.verdict.witness) report["witness"] = witness_json(*stratum.verdict.witness);
    } else {
      const HomStratum stratum = support_stratum(f, config.tol);
      json support = json::array();
      for (const Exponent& alpha : stratum.support.points) support.push_back(alpha);
      report = {{"kind", "m_convex_set"},
                {"support", support},
                {"m_convex", stratum.verdict.m_convex}};
      if (stratum.verdict.witness) report["witness"] = witness_json(*stratum.verdict.witness);
    }
  } catch (const NegativeCoefficientError& e) {
    emit(config, out,
         json{{"rejected", "negative coefficient"}, {"index", e.index()}, {"value", e.value()}});
    return kExitRejected;
  }
  emit(config, out, report);
  return report.at("m_convex").get<bool>() ? kExitOk : kExitRejected;
}

int cmd_sample(const RunConfig& config, std::ostream& out) {
  if (config.n < 1 || config.d < 1) throw DomainError("--n and --d must be positive");
  if (config.count < 1) throw DomainError("--count must be positive");
  std::mt19937_64 rng(config.seed);
  std::optional<PolarizationPlan> plan;
  if (config.interior) plan.emplace(config.n, config.d, std::vector<int>(config.n, config.d));
  std::vector<HomPoly> members;
  for (int attempt = 0; attempt < 20 * config.count &&
                        static_cast<int>(members.size()) < config.count;
       ++attempt) {
    HomPoly f = random_stable_member(config.n, config.d, rng);
    if (plan) f = normalize(hat_flow(f, 0.5, *plan));
    if (certify_stable(f, config.directions, config.seed, config.tol).member()) {
      members.push_back(std::move(f));
    }
  }
  if (config.output_dir.empty()) {
    json all = json::array();
    for (const HomPoly& f : members) all.push_back(poly_to_json(f));
    emit(config, out, all);
    return kExitOk;
  }
  std::filesystem::create_directories(config.output_dir);
  for (std::size_t k = 0; k < members.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof(name), "sample_%03zu.json", k);
    write_poly_file((std::filesystem::path(config.output_dir) / name).string(), members[k]);
  }
  out << "wrote " << members.size() << " polynomials to " << config.output_dir
      << " (seed " << config.seed << ")\n";
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lorentzian and real stable polynomial toolkit"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&config](CLI::App* sub) {
    sub->add_option("--tol", config.tol, "certification tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--directions", config.directions, "sampled directions for stability")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "seed for sampled directions");
    sub->add_option("-o,--output", config.output, "output file (default stdout)");
  };

  CLI::App* certify = app.add_subcommand("certify", "certify a polynomial (JSON verdict)");
  certify->add_option("--input", config.input)->required();
  certify->add_option("--mode", config.mode)->check(CLI::IsMember({"lorentzian", "stable"}));
  add_common(certify);

  CLI::App* flow_cmd = app.add_subcommand("flow", "SEP flow trajectory (CSV)");
  flow_cmd->add_option("--input", config.input)->required();
  flow_cmd->add_option("--times", config.times)->delimiter(',');
  flow_cmd->add_option("--rates", config.rates, "uniform or a rates JSON file");
  flow_cmd->add_flag("--polarized", config.polarized, "flow through the polarization");
  flow_cmd->add_option("--mode", config.mode)->check(CLI::IsMember({"lorentzian", "stable"}));
  add_common(flow_cmd);

  CLI::App* traj = app.add_subcommand("trajectory", "flow trajectory in a space (CSV)");
  traj->add_option("--input", config.input)->required();
  traj->add_option("--times", config.times)->delimiter(',');
  traj->add_option("--space", config.space);
  add_common(traj);

  CLI::App* spectrum = app.add_subcommand("spectrum", "SEP generator spectrum (JSON)");
  spectrum->add_option("--n", config.n)->required();
  spectrum->add_option("--d", config.d)->required();
  spectrum->add_option("--rates", config.rates, "uniform or a rates JSON file");
  spectrum->add_option("-o,--output", config.output);

  CLI::App* polarize = app.add_subcommand("polarize", "polarize up or project down (JSON)");
  polarize->add_option("--input", config.input)->required();
  polarize->add_option("--direction", config.direction)->check(CLI::IsMember({"up", "down"}));
  polarize->add_option("--kappa", config.kappa)->delimiter(',');
  polarize->add_option("-o,--output", config.output);

  CLI::App* ballmap = app.add_subcommand("ballmap", "escape time and ball coordinates (JSON)");
  ballmap->add_option("--input", config.input)->required();
  ballmap->add_option("--space", config.space);
  add_common(ballmap);

  CLI::App* strata = app.add_subcommand("strata", "support stratum report (JSON)");
  strata->add_option("--input", config.input)->required();
  strata->add_option("--tol", config.tol, "relative support tolerance");
  strata->add_option("-o,--output", config.output);

  CLI::App* sample = app.add_subcommand("sample", "seeded random stable members (JSON)");
  sample->add_option("--n", config.n)->required();
  sample->add_option("--d", config.d)->required();
  sample->add_option("--count", config.count);
  sample->add_flag("--interior", config.interior, "flow by s = 0.5 into the interior");
  sample->add_option("--output-dir", config.output_dir);
  add_common(sample);

  // The strata tolerance is relative to the largest coefficient.
  strata->preparse_callback([&config](std::size_t) { config.tol = kSupportTolerance; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (certify->parsed()) return cmd_certify(config, out);
    if (flow_cmd->parsed()) return cmd_flow(config, out);
    if (traj->parsed()) return cmd_trajectory(config, out);
    if (spectrum->parsed()) return cmd_spectrum(config, out);
    if (polarize->parsed()) return cmd_polarize(config, out);
    if (ballmap->parsed()) return cmd_ballmap(config, out);
    if (strata->parsed()) return cmd_strata(config, out);
    if (sample->parsed()) return cmd_sample(config, out);
  } catch (const Rejection& e) {
    err << "rejected: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace lorentz::cli
