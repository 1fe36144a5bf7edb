#pragma once

#include "sharpgpt/algebra.hpp"
#include "sharpgpt/sampling.hpp"

#include <cstdint>
#include <vector>

namespace sharpgpt {

// Operational wrapper around a catalog algebra: states live in the cone of
// squares with trace at most one, effects sit between zero and the unit, and
// evaluation is the trace form.
struct System {
    AlgebraKind kind;
    int rank = 0;
    int dim = 0;
    JordanElement unit_element;
};

System make_system(const AlgebraKind& kind);

// States and effects share one coordinate representation; the dagger swaps
// roles without touching coordinates. Wrappers built by dagger() are not
// re-validated (the dagger of the unit effect is the supernormalised d*chi),
// so use make_state/make_effect when physicality matters.
struct State {
    JordanElement element;
};
struct Effect {
    JordanElement element;
};

State make_state(const System& sys, JordanElement element, double tol = kDefaultTol);
Effect make_effect(const System& sys, JordanElement element, double tol = kDefaultTol);

// (e | rho), the trace form of the two elements. Not clamped.
double pairing(const Effect& e, const State& rho);

Effect dagger(const State& rho);
State dagger(const Effect& e);

// chi = u / d.
State invariant_state(const System& sys);

// Spectral decomposition with eigenvalues clamped to [0, inf); requires a
// normalized state within tol.
SpectralDecomposition diagonalize_state(const State& rho, double tol = kDefaultTol);

// True iff the spectrum is (1, 0, ..., 0) within tol.
bool is_pure(const State& rho, double tol = kDefaultTol);

// Gram criterion: <rho_i^dagger | rho_j> diagonal within tol.
bool perfectly_distinguishable(const std::vector<State>& states, double tol = kDefaultTol);

// Deterministic-in-seed Jordan frame: the standard basis for classical
// systems, a diagonal frame conjugated by a Gram-Schmidt-orthonormalized
// seeded Gaussian element for the matrix kinds, and (1, +-v)/2 for a seeded
// direction v on spin factors.
std::vector<JordanElement> random_frame(const System& sys, std::uint64_t seed);
std::vector<JordanElement> random_frame(const System& sys, Rng& rng);

// Full-rank mixture with uniform-simplex weights over a random frame.
State random_state(const System& sys, Rng& rng);
State random_pure_state(const System& sys, Rng& rng);
// Uniform-in-[0,1] spectrum over a random frame.
Effect random_effect(const System& sys, Rng& rng);

}  // namespace sharpgpt
