#pragma once

#include "tba/network.hpp"

namespace tba {

// Lower bound for the flow on a congested link (veh/hr). A congested link
// can carry arbitrarily little flow in principle, but the travel time
// gamma + beta/x blows up as x -> 0, so a positive floor keeps the model
// bounded.
struct CostConfig {
  double delta = 60.0;

  // delta must be positive and strictly below every link's q_max.
  void validate(const Network& net) const;
};

// Travel time on the uncongested branch, t_free + alpha * x. Domain [0, q_cr];
// outside it throws BranchDomainError naming the link and bound.
double tt_uncongested(const Link& link, double x);

// Travel time on the congested branch, gamma + beta / x. Domain [delta, q_max].
double tt_congested(const Link& link, double x, const CostConfig& cfg);

// Total system travel time: sum over links of x * t(x) with the branch chosen
// by the state, never by the flow value. For a congested link the term is
// x * (gamma + beta/x) = gamma*x + beta, linear in x.
double so_objective(const Network& net, const StateVector& state,
                    const FlowPattern& flows, const CostConfig& cfg);

// Beckmann-style objective: sum over links of the integral of the active
// branch's travel time, taken from 0 (uncongested) or delta (congested) up to
// the link flow. Closed forms:
//   uncongested: t_free*x + alpha*x^2/2
//   congested:   gamma*(x - delta) + beta*ln(x/delta)
double ue_objective(const Network& net, const StateVector& state,
                    const FlowPattern& flows, const CostConfig& cfg);

// Same stationary points as ue_objective but with the congested antiderivative
// left unshifted (gamma*x + beta*ln x per congested link). This is the
// convention used for reported objective values, so runs can be compared
// across state vectors without the state-dependent constant.
double ue_objective_unshifted(const Network& net, const StateVector& state,
                              const FlowPattern& flows, const CostConfig& cfg);

// Constant separating the two conventions for a given state:
//   ue_objective_unshifted == ue_objective + ue_shift_constant
double ue_shift_constant(const Network& net, const StateVector& state,
                         const CostConfig& cfg);

// Per-link contributions (same branch rules), used by evaluators and tests.
double ue_link_term(const Link& link, bool uncongested_state, double x,
                    const CostConfig& cfg);
double so_link_term(const Link& link, bool uncongested_state, double x,
                    const CostConfig& cfg);

}  // namespace tba
