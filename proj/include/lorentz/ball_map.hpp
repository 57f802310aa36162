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

#ifndef LORENTZ_BALL_MAP_HPP_
#define LORENTZ_BALL_MAP_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "lorentz/certify.hpp"
#include "lorentz/polarize.hpp"
#include "lorentz/poly_core.hpp"
#include "lorentz/sep_flow.hpp"

namespace lorentz {

enum class Space { MultiaffineLorentzian, CappedLorentzian, Stable };
std::string_view to_string(Space space);
// Accepts "multiaffine-lorentzian", "capped-lorentzian", "stable".
Space parse_space(std::string_view name);

// Membership test for one of the normalized spaces, phrased on the multiaffine
// state space the flow acts on. Capped and stable spaces are handled through
// their polarization: states are block-symmetric multiaffine polynomials on
// the plan's lifted variables.
class MembershipOracle {
 public:
  static MembershipOracle multiaffine_lorentzian(int n, int d,
                                                 double tol = kDefaultCertifyTolerance);
  static MembershipOracle capped_lorentzian(PolarizationPlan plan,
                                            double tol = kDefaultCertifyTolerance);
  // kappa = (d, ..., d).
  static MembershipOracle stable(int n, int d, int directions = kDefaultDirections,
                                 std::uint64_t seed = kDefaultSeed,
                                 double tol = kDefaultCertifyTolerance);

  Space space() const { return space_; }
  double tolerance() const { return tol_; }
  const BasisPtr& basis() const { return basis_; }
  const std::optional<PolarizationPlan>& plan() const { return plan_; }

  Verdict certify(const MultiAffinePoly& state) const;
  bool contains(const MultiAffinePoly& state) const { return certify(state).member(); }

  // User-facing polynomial <-> state. For the multiaffine space the input must
  // be multiaffine; otherwise it is polarized with the oracle's plan.
  MultiAffinePoly lift(const HomPoly& f) const;
  HomPoly lower(const MultiAffinePoly& state) const;

  // Seeded random members of the space (as states): multiaffine parts of
  // products of nonnegative linear forms, projections of those from the lifted
  // variables for capped spaces, and polarized products for the stable space.
  // Candidates the oracle rejects are skipped.
  std::vector<MultiAffinePoly> sample_members(int count, std::uint64_t seed) const;

 private:
  MembershipOracle(Space space, BasisPtr basis, std::optional<PolarizationPlan> plan,
                   double tol, int directions, std::uint64_t seed);

  Space space_;
  BasisPtr basis_;
  std::optional<PolarizationPlan> plan_;
  double tol_;
  int directions_;
  std::uint64_t seed_;
};

// The uniform-rate spectral decomposition on the oracle's state space.
std::shared_ptr<const SepSpectrum> state_spectrum(const MembershipOracle& oracle);

struct ContractiveFlowReport {
  int samples = 0;
  double max_identity_residual = 0.0;   // |F(0, f) - f|
  double max_semigroup_residual = 0.0;  // |F(s+t, f) - F(s, F(t, f))|
  double max_norm_ratio = 0.0;          // max |F(s, f)| / |f| over f != f_0, s > 0
  double max_lipschitz_excess = 0.0;    // |F(s,f) - F(s,g)| / |f - g| - exp(-s(1 - lambda_1))
  int violations = 0;
  std::optional<std::string> counterexample;
  bool ok() const { return violations == 0; }
};

// Checks F(0, f) = f and the semigroup law to 1e-10, strict decrease of the
// centered norm for s in {0.01, 0.1, 1} and f != f_0, and the spectral
// Lipschitz bound on consecutive sample pairs.
ContractiveFlowReport contractive_flow_check(const SepSpectrum& spec,
                                             const MembershipOracle& oracle, int samples,
                                             std::uint64_t seed);

enum class EscapeStatus { Converged, InfiniteEscape, NotBracketed };
std::string_view to_string(EscapeStatus status);

struct EscapeTimeResult {
  EscapeStatus status = EscapeStatus::Converged;
  double sigma = 0.0;                   // backward exit time
  std::optional<MultiAffinePoly> anchor;  // T_{-sigma} f
  Status anchor_status = Status::Rejected;
  Eigen::VectorXd ball_point;           // exp(-sigma) * unit centered coords of anchor
  bool converged = false;               // bracket width <= tol
  double bracket_width = 0.0;
};

inline constexpr double kCenterThreshold = 1e-10;

// sigma = sup{s in [0, s_max] : T_{-s} f is a member}, bracketed by doubling
// from s = 1/4 and then bisected to width tol. Bisection continues past tol
// (down to 1e-14 relative) while the anchor still certifies strictly, so the
// anchor lands in the oracle's boundary band whenever one exists. A member on
// the boundary returns sigma = 0 with itself as anchor. DomainError if f is not
// a member; Rejection if the backward flow overflows.
EscapeTimeResult escape_time(const MultiAffinePoly& f, const MembershipOracle& oracle,
                             const SepSpectrum& spec, double s_max = 50.0,
                             double tol = 1e-8);

// h(f_0) = 0, h(f) = exp(-sigma(f)) * anchor direction otherwise. Rejection
// when the exit time is not bracketed within s_max.
Eigen::VectorXd ball_coordinates(const MultiAffinePoly& f, const MembershipOracle& oracle,
                                 const SepSpectrum& spec);

struct TrajectoryRow {
  double time = 0.0;
  MultiAffinePoly state;
  double centered_norm = 0.0;
  Verdict verdict;
};

std::vector<TrajectoryRow> trajectory(const MultiAffinePoly& f, const SepSpectrum& spec,
                                      std::span<const double> times,
                                      const MembershipOracle& oracle);

}  // namespace lorentz

#endif  // LORENTZ_BALL_MAP_HPP_
