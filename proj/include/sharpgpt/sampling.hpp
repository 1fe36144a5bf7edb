#pragma once

#include "sharpgpt/algebra.hpp"

#include <cstdint>
#include <random>

namespace sharpgpt {

// Seeded generator used by every randomized routine. Gaussians come from a
// hand-rolled Box-Muller over mt19937_64 so streams do not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double gaussian();

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stream seed for trial `index` of a run seeded with `base`; splitmix64 mix
// so shards never reuse a stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Element with i.i.d. standard Gaussian coordinates.
JordanElement random_element(const AlgebraKind& kind, Rng& rng);

// Gram-Schmidt-orthonormalized Gaussian columns.
Eigen::MatrixXd random_orthogonal(int n, Rng& rng);
Eigen::MatrixXcd random_unitary(int n, Rng& rng);
// 2n x 2n unitary commuting with the quaternionic structure map, columns
// arranged as [v_1..v_n | -psi(v_1)..-psi(v_n)].
Eigen::MatrixXcd random_symplectic_embedded(int n, Rng& rng);

}  // namespace sharpgpt
