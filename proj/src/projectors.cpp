#include "sharpgpt/projectors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace sharpgpt {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

JordanElement subset_idempotent(const System& sys, const std::vector<JordanElement>& frame,
                                const std::vector<int>& subset) {
    VectorXd c = VectorXd::Zero(sys.dim);
    for (int i : subset) c += frame[i].coords;
    return {sys.kind, std::move(c)};
}

void check_frame(const System& sys, const std::vector<JordanElement>& frame, const char* fn) {
    if (static_cast<int>(frame.size()) != sys.rank) {
        throw std::invalid_argument(std::string(fn) + ": frame must have " +
                                    std::to_string(sys.rank) + " members");
    }
    for (const auto& p : frame) {
        if (!(p.kind == sys.kind)) {
            throw std::invalid_argument(std::string(fn) + ": frame member kind mismatch");
        }
    }
}

void check_subset(int rank, const std::vector<int>& subset, const char* fn) {
    std::set<int> seen;
    for (int i : subset) {
        if (i < 0 || i >= rank) {
            throw std::invalid_argument(std::string(fn) + ": frame index " + std::to_string(i) +
                                        " out of range");
        }
        if (!seen.insert(i).second) {
            throw std::invalid_argument(std::string(fn) + ": repeated frame index " +
                                        std::to_string(i));
        }
    }
}

// Simplex-weighted mixture over selected frame members; a state of the face.
JordanElement face_mixture(const System& sys, const std::vector<JordanElement>& frame,
                           const std::vector<int>& subset, Rng& rng) {
    VectorXd w(static_cast<int>(subset.size()));
    for (int i = 0; i < w.size(); ++i) {
        double u = rng.uniform();
        while (u <= 0.0) u = rng.uniform();
        w(i) = -std::log(u);
    }
    w /= w.sum();
    VectorXd c = VectorXd::Zero(sys.dim);
    for (int i = 0; i < w.size(); ++i) c += w(i) * frame[subset[i]].coords;
    return {sys.kind, std::move(c)};
}

}  // namespace

double LatticeReport::worst() const {
    return std::max({idempotent, intersection, disjoint_zero, symmetry, unit_compatibility});
}

LinearMap identity_map(const AlgebraKind& kind) {
    return {kind, MatrixXd::Identity(kind.dim(), kind.dim())};
}

LinearMap compose(const LinearMap& second, const LinearMap& first) {
    if (!(second.kind == first.kind)) {
        throw std::invalid_argument("compose: kind mismatch");
    }
    return {second.kind, second.matrix * first.matrix};
}

JordanElement apply(const LinearMap& map, const JordanElement& x) {
    if (!(map.kind == x.kind)) {
        throw std::invalid_argument("apply: kind mismatch");
    }
    return {x.kind, map.matrix * x.coords};
}

SlitPartition make_partition(const System& sys, std::vector<JordanElement> frame,
                             std::vector<std::vector<int>> subsets) {
    check_frame(sys, frame, "make_partition");
    validate_subsets(sys.rank, subsets);
    return {std::move(frame), std::move(subsets)};
}

void validate_subsets(int rank, const std::vector<std::vector<int>>& subsets) {
    std::set<int> seen;
    for (const auto& subset : subsets) {
        for (int i : subset) {
            if (i < 0 || i >= rank) {
                throw std::invalid_argument("validate_subsets: index " + std::to_string(i) +
                                            " out of range");
            }
            if (!seen.insert(i).second) {
                throw std::invalid_argument("validate_subsets: index " + std::to_string(i) +
                                            " appears in two subsets");
            }
        }
    }
}

Effect face_effect(const System& sys, const std::vector<JordanElement>& frame,
                   const std::vector<int>& subset) {
    check_frame(sys, frame, "face_effect");
    check_subset(sys.rank, subset, "face_effect");
    return {subset_idempotent(sys, frame, subset)};
}

LinearMap face_projector(const System& sys, const std::vector<JordanElement>& frame,
                         const std::vector<int>& subset) {
    check_frame(sys, frame, "face_projector");
    check_subset(sys.rank, subset, "face_projector");
    const JordanElement p = subset_idempotent(sys, frame, subset);
    MatrixXd m(sys.dim, sys.dim);
    for (int j = 0; j < sys.dim; ++j) {
        m.col(j) = quadratic_rep(p, basis_element(sys.kind, j)).coords;
    }
    return {sys.kind, std::move(m)};
}

FaceActionReport projector_axiom_check(const System& sys,
                                       const std::vector<JordanElement>& frame,
                                       const std::vector<int>& subset, int samples,
                                       std::uint64_t seed) {
    const LinearMap proj = face_projector(sys, frame, subset);

    std::vector<int> complement;
    for (int i = 0; i < sys.rank; ++i) {
        if (std::find(subset.begin(), subset.end(), i) == subset.end()) {
            complement.push_back(i);
        }
    }
    const JordanElement p = subset_idempotent(sys, frame, subset);
    const JordanElement pc = subset_idempotent(sys, frame, complement);

    FaceActionReport report;
    Rng rng(seed);
    auto probe = [&](const std::vector<int>& indices, const JordanElement& compressor,
                     double& slot, bool expect_fixed) {
        if (indices.empty()) return;
        for (int t = 0; t < samples; ++t) {
            JordanElement y = (t % 2 == 0)
                                  ? face_mixture(sys, frame, indices, rng)
                                  : quadratic_rep(compressor, random_state(sys, rng).element);
            const double tr = trace_of(y);
            if (tr > 1e-12) y = scale(1.0 / tr, y);
            const JordanElement out = apply(proj, y);
            const double v = expect_fixed ? (out.coords - y.coords).norm() : out.coords.norm();
            slot = std::max(slot, v);
        }
    };
    probe(subset, p, report.fix_violation, true);
    probe(complement, pc, report.kill_violation, false);
    return report;
}

LatticeReport projector_lattice_check(const System& sys,
                                      const std::vector<JordanElement>& frame,
                                      int max_subsets, std::uint64_t seed) {
    check_frame(sys, frame, "projector_lattice_check");
    if (sys.rank > 12) {
        throw std::invalid_argument("projector_lattice_check: rank above the enumeration limit");
    }

    const unsigned full = (1u << sys.rank) - 1u;
    std::vector<unsigned> masks;
    if (max_subsets <= 0 || static_cast<unsigned>(max_subsets) >= full + 1u) {
        masks.resize(full + 1u);
        for (unsigned m = 0; m <= full; ++m) masks[m] = m;
    } else {
        std::set<unsigned> chosen = {0u, full};
        for (int i = 0; i < sys.rank; ++i) chosen.insert(1u << i);
        Rng rng(seed);
        while (static_cast<int>(chosen.size()) < max_subsets) {
            chosen.insert(static_cast<unsigned>(rng.next_u64() % (full + 1u)));
        }
        masks.assign(chosen.begin(), chosen.end());
    }

    auto subset_of = [&](unsigned mask) {
        std::vector<int> s;
        for (int i = 0; i < sys.rank; ++i) {
            if (mask & (1u << i)) s.push_back(i);
        }
        return s;
    };

    std::vector<MatrixXd> proj(masks.size());
    std::vector<VectorXd> face(masks.size());
    for (std::size_t k = 0; k < masks.size(); ++k) {
        const auto s = subset_of(masks[k]);
        proj[k] = face_projector(sys, frame, s).matrix;
        face[k] = face_effect(sys, frame, s).element.coords;
    }

    // <u, P_I x> = <a_I, x> for all x reads P^T u = a_I in coordinates; the
    // scalar trace-form factor of the spin family drops out.
    const VectorXd ucoords = unit(sys.kind).coords;

    LatticeReport report;
    for (std::size_t a = 0; a < masks.size(); ++a) {
        report.idempotent =
            std::max(report.idempotent, (proj[a] * proj[a] - proj[a]).cwiseAbs().maxCoeff());
        report.symmetry = std::max(
            report.symmetry, (proj[a] - proj[a].transpose()).cwiseAbs().maxCoeff());
        report.unit_compatibility =
            std::max(report.unit_compatibility,
                     (proj[a].transpose() * ucoords - face[a]).cwiseAbs().maxCoeff());
        for (std::size_t b = 0; b < masks.size(); ++b) {
            const unsigned meet = masks[a] & masks[b];
            const MatrixXd prod = proj[a] * proj[b];
            if (meet == 0) {
                report.disjoint_zero =
                    std::max(report.disjoint_zero, prod.cwiseAbs().maxCoeff());
            }
            const auto it = std::find(masks.begin(), masks.end(), meet);
            if (it != masks.end()) {
                const auto& meet_proj = proj[it - masks.begin()];
                report.intersection = std::max(
                    report.intersection, (prod - meet_proj).cwiseAbs().maxCoeff());
            }
        }
    }
    return report;
}

double purity_preservation_check(const System& sys, const std::vector<JordanElement>& frame,
                                 const std::vector<int>& subset, int trials,
                                 std::uint64_t seed, double tol) {
    check_frame(sys, frame, "purity_preservation_check");
    check_subset(sys.rank, subset, "purity_preservation_check");
    const JordanElement p = subset_idempotent(sys, frame, subset);

    double worst = 0.0;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const State psi = random_pure_state(sys, rng);
        JordanElement out = quadratic_rep(p, psi.element);
        const double tr = trace_of(out);
        if (tr <= tol) continue;  // annihilated: nothing to renormalize
        out = scale(1.0 / tr, out);
        const Eigen::VectorXd lam = eigenvalues_of(out);
        double second = 0.0;
        for (int k = 1; k < lam.size(); ++k) second = std::max(second, std::abs(lam(k)));
        worst = std::max(worst, second);
    }
    return worst;
}

}  // namespace sharpgpt
