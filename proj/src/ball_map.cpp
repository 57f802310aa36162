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

#include "lorentz/ball_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "lorentz/error.hpp"
#include "lorentz/sampling.hpp"

namespace lorentz {

std::string_view to_string(Space space) {
  switch (space) {
    case Space::MultiaffineLorentzian:
      return "multiaffine-lorentzian";
    case Space::CappedLorentzian:
      return "capped-lorentzian";
    case Space::Stable:
      return "stable";
  }
  return "?";
}

Space parse_space(std::string_view name) {
  if (name == "multiaffine-lorentzian") return Space::MultiaffineLorentzian;
  if (name == "capped-lorentzian") return Space::CappedLorentzian;
  if (name == "stable") return Space::Stable;
  throw DomainError("unknown space '" + std::string(name) + "'");
}

std::string_view to_string(EscapeStatus status) {
  switch (status) {
    case EscapeStatus::Converged:
      return "Converged";
    case EscapeStatus::InfiniteEscape:
      return "InfiniteEscape";
    case EscapeStatus::NotBracketed:
      return "NotBracketed";
  }
  return "?";
}

MembershipOracle::MembershipOracle(Space space, BasisPtr basis,
                                   std::optional<PolarizationPlan> plan, double tol,
                                   int directions, std::uint64_t seed)
    : space_(space),
      basis_(std::move(basis)),
      plan_(std::move(plan)),
      tol_(tol),
      directions_(directions),
      seed_(seed) {}

MembershipOracle MembershipOracle::multiaffine_lorentzian(int n, int d, double tol) {
  return MembershipOracle(Space::MultiaffineLorentzian, enumerate_subsets(n, d), std::nullopt,
                          tol, 0, 0);
}

MembershipOracle MembershipOracle::capped_lorentzian(PolarizationPlan plan, double tol) {
  BasisPtr basis = plan.lifted_basis();
  return MembershipOracle(Space::CappedLorentzian, std::move(basis), std::move(plan), tol, 0,
                          0);
}

MembershipOracle MembershipOracle::stable(int n, int d, int directions, std::uint64_t seed,
                                          double tol) {
  PolarizationPlan plan(n, d, std::vector<int>(n, d));
  BasisPtr basis = plan.lifted_basis();
  return MembershipOracle(Space::Stable, std::move(basis), std::move(plan), tol, directions,
                          seed);
}

Verdict MembershipOracle::certify(const MultiAffinePoly& state) const {
  switch (space_) {
    case Space::MultiaffineLorentzian:
    case Space::CappedLorentzian:
      return certify_multiaffine(state, tol_);
    case Space::Stable:
      return certify_stable(lower(state), directions_, seed_, tol_);
  }
  throw DomainError("unknown space");
}

MultiAffinePoly MembershipOracle::lift(const HomPoly& f) const {
  if (!plan_) {
    MultiAffinePoly g = to_multiaffine(f);
    if (!(g.basis() == *basis_)) throw DomainError("polynomial does not match the space (n, d)");
    return MultiAffinePoly(basis_, {g.coeffs().begin(), g.coeffs().end()});
  }
  if (f.n() != plan_->n() || f.d() != plan_->d()) {
    throw DomainError("polynomial does not match the space (n, d)");
  }
  return polarize_up(HomPoly(f.n(), f.d(), plan_->kappa(), f.terms()), *plan_);
}

HomPoly MembershipOracle::lower(const MultiAffinePoly& state) const {
  if (!plan_) return to_hom(state);
  return project_down(state, *plan_);
}

std::vector<MultiAffinePoly> MembershipOracle::sample_members(int count,
                                                              std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<MultiAffinePoly> out;
  for (int attempt = 0; attempt < 20 * count && static_cast<int>(out.size()) < count;
       ++attempt) {
    std::optional<MultiAffinePoly> candidate;
    switch (space_) {
      case Space::MultiaffineLorentzian:
        candidate = random_multiaffine_member(basis_->n(), basis_->d(), rng);
        break;
      case Space::CappedLorentzian: {
        const MultiAffinePoly g = random_multiaffine_member(basis_->n(), basis_->d(), rng);
        candidate = polarize_up(project_down(g, *plan_), *plan_);
        break;
      }
      case Space::Stable:
        candidate = lift(random_stable_member(plan_->n(), plan_->d(), rng));
        break;
    }
    if (contains(*candidate)) out.push_back(std::move(*candidate));
  }
  return out;
}

std::shared_ptr<const SepSpectrum> state_spectrum(const MembershipOracle& oracle) {
  return uniform_spectrum(oracle.basis()->n(), oracle.basis()->d());
}

ContractiveFlowReport contractive_flow_check(const SepSpectrum& spec,
                                             const MembershipOracle& oracle, int samples,
                                             std::uint64_t seed) {
  ContractiveFlowReport report;
  const std::vector<MultiAffinePoly> members = oracle.sample_members(samples, seed);
  report.samples = static_cast<int>(members.size());
  const double forward[] = {0.01, 0.1, 1.0};
  const double both[] = {-1.0, -0.1, -0.01, 0.01, 0.1, 1.0};

  auto record = [&report](bool violated, const std::string& what) {
    if (!violated) return;
    ++report.violations;
    if (!report.counterexample) report.counterexample = what;
  };

  for (std::size_t k = 0; k < members.size(); ++k) {
    const MultiAffinePoly& f = members[k];
    const double identity = l2_norm(flow(f, 0.0, spec) - f);
    report.max_identity_residual = std::max(report.max_identity_residual, identity);
    record(identity > 1e-10, "F(0, f) != f for sample " + std::to_string(k));

    for (double s : both) {
      for (double t : both) {
        const double residual =
            l2_norm(flow(flow(f, t, spec), s, spec) - flow(f, s + t, spec));
        report.max_semigroup_residual = std::max(report.max_semigroup_residual, residual);
        std::ostringstream what;
        what << "semigroup residual " << residual << " at s=" << s << ", t=" << t
             << " for sample " << k;
        record(residual > 1e-10, what.str());
      }
    }

    const double r = centered_norm(f, spec);
    if (r > kCenterThreshold) {
      for (double s : forward) {
        const double rs = centered_norm(flow(f, s, spec), spec);
        report.max_norm_ratio = std::max(report.max_norm_ratio, rs / r);
        std::ostringstream what;
        what << "norm not decreasing at s=" << s << " for sample " << k;
        record(!(rs < r), what.str());
      }
    }

    if (k + 1 < members.size()) {
      const MultiAffinePoly& g = members[k + 1];
      const double gap = l2_norm(f - g);
      if (gap > 0.0) {
        for (double s : forward) {
          const double bound = std::exp(-s * (1.0 - spec.lambda_1()));
          const double ratio = l2_norm(flow(f, s, spec) - flow(g, s, spec)) / gap;
          report.max_lipschitz_excess = std::max(report.max_lipschitz_excess, ratio - bound);
          std::ostringstream what;
          what << "Lipschitz ratio " << ratio << " above " << bound << " at s=" << s;
          record(ratio > bound + 1e-10, what.str());
        }
      }
    }
  }
  return report;
}

namespace {

Eigen::VectorXd unit_direction(const MultiAffinePoly& f, const SepSpectrum& spec) {
  Eigen::VectorXd x = eigen_coords(f, spec).x;
  return x / x.norm();
}

}  // namespace

EscapeTimeResult escape_time(const MultiAffinePoly& f, const MembershipOracle& oracle,
                             const SepSpectrum& spec, double s_max, double tol) {
  EscapeTimeResult result;
  if (centered_norm(f, spec) < kCenterThreshold) {
    result.status = EscapeStatus::InfiniteEscape;
    result.sigma = std::numeric_limits<double>::infinity();
    result.anchor_status = oracle.certify(f).status;
    result.ball_point = Eigen::VectorXd::Zero(spec.modes());
    result.converged = true;
    return result;
  }
  const Verdict start = oracle.certify(f);
  if (!start.member()) throw DomainError("escape time needs a member of the space");
  if (start.status == Status::BoundaryWithinTol) {
    result.sigma = 0.0;
    result.anchor = f;
    result.anchor_status = start.status;
    result.ball_point = unit_direction(f, spec);
    result.converged = true;
    return result;
  }

  auto member_at = [&](double s) { return oracle.contains(flow(f, -s, spec)); };

  double lo = 0.0;
  double hi = 0.0;
  for (double s = 0.25;; s *= 2.0) {
    s = std::min(s, s_max);
    if (member_at(s)) {
      lo = s;
      if (s >= s_max) {
        result.status = EscapeStatus::NotBracketed;
        result.sigma = s_max;
        result.anchor = flow(f, -s_max, spec);
        result.anchor_status = oracle.certify(*result.anchor).status;
        result.ball_point = std::exp(-s_max) * unit_direction(f, spec);
        result.converged = false;
        return result;
      }
    } else {
      hi = s;
      break;
    }
  }

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (member_at(mid) ? lo : hi) = mid;
  }
  MultiAffinePoly anchor = flow(f, -lo, spec);
  Status anchor_status = oracle.certify(anchor).status;
  while (anchor_status == Status::StrictInterior && hi - lo > 1e-14 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    MultiAffinePoly candidate = flow(f, -mid, spec);
    const Verdict verdict = oracle.certify(candidate);
    if (verdict.member()) {
      lo = mid;
      anchor = std::move(candidate);
      anchor_status = verdict.status;
    } else {
      hi = mid;
    }
  }

  result.status = EscapeStatus::Converged;
  result.sigma = lo;
  result.anchor_status = anchor_status;
  result.ball_point = std::exp(-lo) * unit_direction(anchor, spec);
  result.anchor = std::move(anchor);
  result.bracket_width = hi - lo;
  result.converged = result.bracket_width <= tol;
  return result;
}

Eigen::VectorXd ball_coordinates(const MultiAffinePoly& f, const MembershipOracle& oracle,
                                 const SepSpectrum& spec) {
  EscapeTimeResult escape = escape_time(f, oracle, spec);
  if (escape.status == EscapeStatus::NotBracketed) {
    throw Rejection("escape time not bracketed within s_max");
  }
  return escape.ball_point;
}

std::vector<TrajectoryRow> trajectory(const MultiAffinePoly& f, const SepSpectrum& spec,
                                      std::span<const double> times,
                                      const MembershipOracle& oracle) {
  std::vector<TrajectoryRow> rows;
  rows.reserve(times.size());
  for (double t : times) {
    if (!std::isfinite(t)) throw DomainError("trajectory times must be finite");
    MultiAffinePoly state = flow(f, t, spec);
    const double norm = centered_norm(state, spec);
    Verdict verdict = oracle.certify(state);
    rows.push_back(TrajectoryRow{t, std::move(state), norm, std::move(verdict)});
  }
  return rows;
}

}  // namespace lorentz
