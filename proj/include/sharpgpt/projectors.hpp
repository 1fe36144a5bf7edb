#pragma once

#include "sharpgpt/system.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace sharpgpt {

// Linear map acting on the coordinate space of one system. Adjoints with
// respect to the trace form are plain matrix transposes under the catalog's
// coordinate bases.
struct LinearMap {
    AlgebraKind kind;
    Eigen::MatrixXd matrix;  // dim x dim
};

LinearMap identity_map(const AlgebraKind& kind);
LinearMap compose(const LinearMap& second, const LinearMap& first);  // second after first
JordanElement apply(const LinearMap& map, const JordanElement& x);

// Disjoint subsets of frame indices, the slit labels of a multi-slit layout.
struct SlitPartition {
    std::vector<JordanElement> frame;
    std::vector<std::vector<int>> subsets;  // 0-based frame indices
};

// Throws std::invalid_argument on out-of-range or repeated indices.
void validate_subsets(int rank, const std::vector<std::vector<int>>& subsets);

SlitPartition make_partition(const System& sys, std::vector<JordanElement> frame,
                             std::vector<std::vector<int>> subsets);

// a_I = sum_{i in I} dagger(frame_i); empty I gives the zero effect, the full
// index set gives the unit.
Effect face_effect(const System& sys, const std::vector<JordanElement>& frame,
                   const std::vector<int>& subset);

// The compression onto the face of subset I: U_{p_I} with p_I the sum of the
// selected frame members, as a coordinate matrix.
LinearMap face_projector(const System& sys, const std::vector<JordanElement>& frame,
                         const std::vector<int>& subset);

// Worst-case action on sampled face states: members of F_I must be fixed,
// members of the complementary face annihilated.
struct FaceActionReport {
    double fix_violation = 0.0;   // max ||P rho - rho|| over rho in F_I
    double kill_violation = 0.0;  // max ||P rho|| over rho in F_I-perp
};
FaceActionReport projector_axiom_check(const System& sys,
                                       const std::vector<JordanElement>& frame,
                                       const std::vector<int>& subset, int samples,
                                       std::uint64_t seed);

// Lattice laws over subset pairs: idempotence, products landing on the
// intersection, vanishing disjoint products, coordinate symmetry, and
// u P_I = a_I. All residuals are max-abs matrix entries.
struct LatticeReport {
    double idempotent = 0.0;
    double intersection = 0.0;
    double disjoint_zero = 0.0;
    double symmetry = 0.0;
    double unit_compatibility = 0.0;
    double worst() const;
};

// Enumerates all subsets when 2^rank <= max_subsets (or max_subsets == 0);
// otherwise checks a seeded sample that always includes the empty set, the
// full set, and every singleton. Requires rank <= 12.
LatticeReport projector_lattice_check(const System& sys,
                                      const std::vector<JordanElement>& frame,
                                      int max_subsets = 0, std::uint64_t seed = 0);

// Compresses seeded pure states into the face and reports how far the
// renormalized outputs sit from being pure (largest second eigenvalue).
double purity_preservation_check(const System& sys, const std::vector<JordanElement>& frame,
                                 const std::vector<int>& subset, int trials,
                                 std::uint64_t seed, double tol = kDefaultTol);

}  // namespace sharpgpt
