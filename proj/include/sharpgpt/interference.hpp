#pragma once

#include "sharpgpt/projectors.hpp"
#include "sharpgpt/system.hpp"

#include <cstdint>
#include <vector>

namespace sharpgpt {

// A multi-slit layout over a frame: n disjoint nonempty blocks of frame
// indices, one normalized state, one effect.
struct SlitExperiment {
    System system;
    std::vector<JordanElement> frame;
    std::vector<std::vector<int>> blocks;  // 0-based frame indices
    State rho;
    Effect effect;
};

SlitExperiment make_experiment(System sys, std::vector<JordanElement> frame,
                               std::vector<std::vector<int>> blocks, State rho, Effect effect,
                               double tol = kDefaultTol);

// Detection probabilities v_I for every nonempty subset of slit labels,
// stored at index mask-1 (bit i of mask = label i+1 present).
struct ValueTable {
    int order = 0;
    std::vector<double> values;

    double value(unsigned mask) const;
};

ValueTable make_value_table(int order, std::vector<double> values);

// Inclusion-exclusion combination of order n over the table's first n labels
// (n may sit below the table's own order; the sub-table is the one the first
// n blocks induce).
double sorkin_order(const ValueTable& table, int n);

// v_I = <E, U_{p_I} rho> with p_I the idempotent of the union of the blocks
// selected by I, for every nonempty I, the full label set included.
ValueTable slit_values(const SlitExperiment& exp);

struct InterferenceReport {
    ValueTable table;
    std::vector<double> orders;        // I_1 .. I_n
    std::vector<double> defect_norms;  // D_2 .. D_n (empty when n < 2)
};

InterferenceReport interference_report(const SlitExperiment& exp, int max_order);

// Spectral norm of D_n = sum over nonempty label subsets of
// (-1)^(n-|I|) P_I, with the full-set term the identity map. Vanishing D_n is
// what kills I_n for every state/effect pair at once.
double sorkin_defect_norm(const System& sys, const std::vector<JordanElement>& frame,
                          const std::vector<std::vector<int>>& blocks, int order);

struct MaximizeResult {
    double best = 0.0;
    State rho;
    Effect effect;
    std::vector<JordanElement> frame;
};

// Alternating exact ascent of |I_n| over normalized states and effects
// between zero and the unit: the state step takes the extreme eigenstate of
// the pulled-back effect, the effect step the positive spectral part of the
// pushed-forward state. `trials` seeded random frames (covering partitions:
// n-1 singleton blocks, the last block absorbs the rest), `iters` sweeps
// each. Deterministic in seed.
MaximizeResult maximize_interference(const System& sys, int order, int trials, int iters,
                                     std::uint64_t seed);

// Samples both I_3 and I_4 ascents and confirms that a vanishing third order
// forces a vanishing fourth order (slack factor 16 on tol). Needs rank >= 4.
bool hierarchy_check(const System& sys, std::uint64_t seed, double tol = kDefaultTol);

}  // namespace sharpgpt
