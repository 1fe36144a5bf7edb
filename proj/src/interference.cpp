#include "sharpgpt/interference.hpp"

#include "sharpgpt/jacobi.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace sharpgpt {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

JordanElement union_idempotent(const SlitExperiment& exp, unsigned mask) {
    VectorXd c = VectorXd::Zero(exp.system.dim);
    for (std::size_t b = 0; b < exp.blocks.size(); ++b) {
        if (mask & (1u << b)) {
            for (int i : exp.blocks[b]) c += exp.frame[i].coords;
        }
    }
    return {exp.system.kind, std::move(c)};
}

double sign_for(int order, unsigned mask) {
    return ((order - std::popcount(mask)) % 2 == 0) ? 1.0 : -1.0;
}

std::vector<std::vector<int>> covering_partition(int rank, int order) {
    std::vector<std::vector<int>> blocks(order);
    for (int b = 0; b < order - 1; ++b) blocks[b] = {b};
    for (int i = order - 1; i < rank; ++i) blocks[order - 1].push_back(i);
    return blocks;
}

// D_n as a coordinate matrix, full-set term = identity.
MatrixXd defect_matrix(const System& sys, const std::vector<JordanElement>& frame,
                       const std::vector<std::vector<int>>& blocks, int order) {
    const unsigned full = (1u << order) - 1u;
    MatrixXd d = MatrixXd::Zero(sys.dim, sys.dim);
    for (unsigned mask = 1; mask <= full; ++mask) {
        MatrixXd term;
        if (mask == full) {
            term = MatrixXd::Identity(sys.dim, sys.dim);
        } else {
            std::vector<int> indices;
            for (int b = 0; b < order; ++b) {
                if (mask & (1u << b)) {
                    indices.insert(indices.end(), blocks[b].begin(), blocks[b].end());
                }
            }
            term = face_projector(sys, frame, indices).matrix;
        }
        d += sign_for(order, mask) * term;
    }
    return d;
}

State top_eigenstate(const JordanElement& x) {
    const SpectralDecomposition sd = spectral_decompose(x);
    return {sd.frame[0]};
}

Effect positive_part_effect(const System& sys, const JordanElement& x) {
    const SpectralDecomposition sd = spectral_decompose(x);
    VectorXd c = VectorXd::Zero(sys.dim);
    bool any = false;
    for (int k = 0; k < sd.eigenvalues.size(); ++k) {
        if (sd.eigenvalues(k) > 0.0) {
            c += sd.frame[k].coords;
            any = true;
        }
    }
    if (!any) c.setZero();
    return {JordanElement{sys.kind, std::move(c)}};
}

}  // namespace

SlitExperiment make_experiment(System sys, std::vector<JordanElement> frame,
                               std::vector<std::vector<int>> blocks, State rho, Effect effect,
                               double tol) {
    if (static_cast<int>(frame.size()) != sys.rank) {
        throw std::invalid_argument("make_experiment: frame must have rank members");
    }
    if (blocks.empty()) {
        throw std::invalid_argument("make_experiment: at least one slit block required");
    }
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("make_experiment: empty slit block");
    }
    validate_subsets(sys.rank, blocks);
    if (std::abs(trace_of(rho.element) - 1.0) > tol) {
        throw std::invalid_argument("make_experiment: state must be normalized");
    }
    // Re-validate through the checked constructors.
    State checked_rho = make_state(sys, rho.element, tol);
    Effect checked_effect = make_effect(sys, effect.element, tol);
    return {std::move(sys), std::move(frame), std::move(blocks), std::move(checked_rho),
            std::move(checked_effect)};
}

double ValueTable::value(unsigned mask) const {
    if (mask == 0 || mask > values.size()) {
        throw std::invalid_argument("ValueTable::value: subset mask out of range");
    }
    return values[mask - 1];
}

ValueTable make_value_table(int order, std::vector<double> values) {
    if (order < 0 || order > 16) {
        throw std::invalid_argument("make_value_table: order out of range");
    }
    const std::size_t expected = (1u << order) - 1u;
    if (values.size() != expected) {
        throw std::invalid_argument("make_value_table: expected " + std::to_string(expected) +
                                    " subset values, got " + std::to_string(values.size()));
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("make_value_table: non-finite subset value");
        }
    }
    return {order, std::move(values)};
}

double sorkin_order(const ValueTable& table, int n) {
    if (n < 1 || n > table.order) {
        throw std::invalid_argument("sorkin_order: order " + std::to_string(n) +
                                    " not covered by a table of order " +
                                    std::to_string(table.order));
    }
    const unsigned full = (1u << n) - 1u;
    double acc = 0.0;
    for (unsigned mask = 1; mask <= full; ++mask) {
        acc += sign_for(n, mask) * table.value(mask);
    }
    return acc;
}

ValueTable slit_values(const SlitExperiment& exp) {
    const int n = static_cast<int>(exp.blocks.size());
    const unsigned full = (1u << n) - 1u;
    std::vector<double> values(full);
    for (unsigned mask = 1; mask <= full; ++mask) {
        const JordanElement p = union_idempotent(exp, mask);
        const JordanElement compressed = quadratic_rep(p, exp.rho.element);
        values[mask - 1] = trace_inner_product(exp.effect.element, compressed);
    }
    return {n, std::move(values)};
}

InterferenceReport interference_report(const SlitExperiment& exp, int max_order) {
    const int n = static_cast<int>(exp.blocks.size());
    if (max_order != n) {
        throw std::invalid_argument("interference_report: max_order must equal the block count");
    }
    InterferenceReport report;
    report.table = slit_values(exp);
    report.orders.reserve(n);
    for (int k = 1; k <= n; ++k) {
        report.orders.push_back(sorkin_order(report.table, k));
    }
    for (int k = 2; k <= n; ++k) {
        const std::vector<std::vector<int>> sub(exp.blocks.begin(), exp.blocks.begin() + k);
        report.defect_norms.push_back(sorkin_defect_norm(exp.system, exp.frame, sub, k));
    }
    return report;
}

double sorkin_defect_norm(const System& sys, const std::vector<JordanElement>& frame,
                          const std::vector<std::vector<int>>& blocks, int order) {
    if (order < 2 || order != static_cast<int>(blocks.size())) {
        throw std::invalid_argument("sorkin_defect_norm: order must be >= 2 and match blocks");
    }
    validate_subsets(sys.rank, blocks);
    const MatrixXd d = defect_matrix(sys, frame, blocks, order);
    const MatrixXd s = 0.5 * (d + d.transpose());
    const VectorXd lam = jacobi_eigensolver(s).values;
    return std::max(std::abs(lam(0)), std::abs(lam(lam.size() - 1)));
}

MaximizeResult maximize_interference(const System& sys, int order, int trials, int iters,
                                     std::uint64_t seed) {
    if (order < 1 || order > sys.rank) {
        throw std::invalid_argument("maximize_interference: order must lie in [1, rank]");
    }
    const auto blocks = covering_partition(sys.rank, order);

    MaximizeResult result;
    bool have_result = false;

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        const auto frame = random_frame(sys, rng);
        const MatrixXd d = defect_matrix(sys, frame, blocks, order);

        for (const double sign : {1.0, -1.0}) {
            Effect e = random_effect(sys, rng);
            State rho = invariant_state(sys);
            for (int it = 0; it < iters; ++it) {
                const JordanElement pulled = {sys.kind,
                                              sign * (d.transpose() * e.element.coords)};
                rho = top_eigenstate(pulled);
                const JordanElement pushed = {sys.kind, sign * (d * rho.element.coords)};
                e = positive_part_effect(sys, pushed);
                if (e.element.coords.norm() == 0.0) break;
            }
            const double score =
                std::abs(e.element.coords.dot(d * rho.element.coords) *
                         (sys.kind.family == Family::SpinFactor ? 2.0 : 1.0));
            if (!have_result || score > result.best) {
                // Freeze the winner through the table route, the defining one.
                const SlitExperiment exp =
                    make_experiment(sys, frame, blocks, rho, e, 1e-6);
                result.best = std::abs(sorkin_order(slit_values(exp), order));
                result.rho = rho;
                result.effect = e;
                result.frame = frame;
                have_result = true;
            }
        }
    }
    return result;
}

bool hierarchy_check(const System& sys, std::uint64_t seed, double tol) {
    if (sys.rank < 4) {
        throw std::invalid_argument("hierarchy_check: rank must be at least 4");
    }
    const double m3 = maximize_interference(sys, 3, 10, 15, derive_seed(seed, 301)).best;
    const double m4 = maximize_interference(sys, 4, 10, 15, derive_seed(seed, 401)).best;
    return m3 > tol || m4 <= 16.0 * tol;
}

}  // namespace sharpgpt
