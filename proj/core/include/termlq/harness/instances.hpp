#pragma once

#include <random>

#include "termlq/problem.hpp"

namespace termlq::harness {

using Rng = std::mt19937_64;

/// A(k), B(k), x0, xi with i.i.d. standard normal entries; Q = R = H = I.
ProblemInstance random_instance(Rng& rng, int state_dim, int input_dim,
                                int horizon);

/// Terminal state reached by an i.i.d. standard normal input sequence.
Vector reachable_target(const ProblemInstance& inst, Rng& rng);

/// B(k) = 0 for every stage. xi equals the drift terminal state when
/// `on_drift`, otherwise it is shifted off it by a unit-scale vector.
ProblemInstance zero_input_instance(Rng& rng, int state_dim, int input_dim,
                                    int horizon, bool on_drift);

/// Dynamics sharing a hidden invariant subspace of dimension
/// `reachable_dim` < state_dim that contains every B(k), so G1 is
/// rank deficient. xi is reachable when `reachable`, otherwise it has a
/// unit-scale component outside the subspace.
ProblemInstance rank_deficient_instance(Rng& rng, int state_dim, int input_dim,
                                        int horizon, int reachable_dim,
                                        bool reachable);

}  // namespace termlq::harness
