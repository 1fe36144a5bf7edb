#pragma once

#include "sharpgpt/projectors.hpp"
#include "sharpgpt/system.hpp"

#include <cstdint>
#include <vector>

namespace sharpgpt {

// Spectrum 1-norm; the operational norm of a vector of the real span.
double operational_norm(const JordanElement& x);

// Spectrum 2-norm, sqrt of the trace form of x with itself.
double dagger_norm(const JordanElement& x);

struct NormReport {
    double one_norm = 0.0;
    double two_norm = 0.0;
    bool two_le_one = false;        // ||x||_dagger <= ||x|| within slack
    bool one_le_sqrtd_two = false;  // ||x|| <= sqrt(d) ||x||_dagger within slack
};
NormReport norm_report(const JordanElement& x, double slack = 1e-10);

// (trace x)^2 - ||x||_dagger^2; zero exactly on multiples of pure states.
double impurity(const JordanElement& rho);

// <rho, sigma> / (||rho||_dagger ||sigma||_dagger).
double dagger_fidelity(const State& rho, const State& sigma);

// Tensor catalog: classical x classical and complex x complex only.
JordanElement tensor_element(const JordanElement& a, const JordanElement& b);

// |F(rho1 x rho2, sigma1 x sigma2) - F(rho1, sigma1) F(rho2, sigma2)|.
double fidelity_multiplicativity_violation(const State& rho1, const State& sigma1,
                                           const State& rho2, const State& sigma2);

// Adjoint with respect to the trace form: the coordinate transpose.
LinearMap adjoint_map(const LinearMap& map);

struct AdjointLawReport {
    double involution = 0.0;   // max |((A')')_{ij} - A_{ij}|
    double composition = 0.0;  // max |((BA)')_{ij} - (A'B')_{ij}|
};
// Both residuals are computed entrywise with identical accumulation order on
// the two sides, so the laws hold exactly, not just within rounding.
AdjointLawReport adjoint_law_check(const LinearMap& a, const LinearMap& b);

// max |(U^T - U^{-1})_{ij}| for an invertible map.
double reversible_adjoint_residual(const LinearMap& u);

// Seeded reversible channel: coordinate permutation (classical), conjugation
// by a random orthogonal/unitary/symplectic element (matrix kinds), or a
// random rotation of the spin vector.
LinearMap reversible_channel(const System& sys, std::uint64_t seed);

// Reversible channel permuting the diagonal frame by `perm` (and the spin
// pair by reflection when perm swaps).
LinearMap permutation_channel(const System& sys, const std::vector<int>& perm);

// x -> <u, x> * target; unital exactly when target is the invariant state.
LinearMap constant_channel(const System& sys, const State& target);

struct ChannelReport {
    bool unital = false;
    bool dagger_physical = false;
    // max over sampled normalized states of ||C^T rho||_trace - 1 (positive
    // means the adjoint leaves the state set)
    double adjoint_trace_excess = 0.0;
    // max over sampled states of dagger_norm(C rho) - dagger_norm(rho)
    double max_dagger_norm_increase = 0.0;
};

// Validates channel behaviour on seeded samples first (cone into cone, trace
// preserved) and throws std::invalid_argument otherwise.
ChannelReport channel_classify(const System& sys, const LinearMap& channel, double tol,
                               std::uint64_t seed, int samples = 200);

}  // namespace sharpgpt
