#include "sharpgpt/adjoints.hpp"

#include "sharpgpt/rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sharpgpt {
namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Coordinate matrix of x -> V x V^* in the kind's natural representation.
template <typename Mat, typename ToRep, typename FromRep>
MatrixXd conjugation_matrix(const System& sys, const Mat& v, ToRep to_rep, FromRep from_rep) {
    MatrixXd m(sys.dim, sys.dim);
    for (int j = 0; j < sys.dim; ++j) {
        const auto rep = to_rep(basis_element(sys.kind, j));
        m.col(j) = from_rep(Mat(v * rep * v.adjoint())).coords;
    }
    return m;
}

}  // namespace

double operational_norm(const JordanElement& x) {
    return eigenvalues_of(x).cwiseAbs().sum();
}

double dagger_norm(const JordanElement& x) {
    return std::sqrt(trace_inner_product(x, x));
}

NormReport norm_report(const JordanElement& x, double slack) {
    NormReport report;
    report.one_norm = operational_norm(x);
    report.two_norm = dagger_norm(x);
    const double sqrt_d = std::sqrt(static_cast<double>(x.kind.rank()));
    report.two_le_one = report.two_norm <= report.one_norm + slack;
    report.one_le_sqrtd_two = report.one_norm <= sqrt_d * report.two_norm + slack;
    return report;
}

double impurity(const JordanElement& rho) {
    const double tr = trace_of(rho);
    return tr * tr - trace_inner_product(rho, rho);
}

double dagger_fidelity(const State& rho, const State& sigma) {
    const double nr = dagger_norm(rho.element);
    const double ns = dagger_norm(sigma.element);
    if (nr == 0.0 || ns == 0.0) {
        throw std::invalid_argument("dagger_fidelity: zero-norm input");
    }
    return trace_inner_product(rho.element, sigma.element) / (nr * ns);
}

JordanElement tensor_element(const JordanElement& a, const JordanElement& b) {
    if (a.kind.family == Family::Classical && b.kind.family == Family::Classical) {
        const auto kind = AlgebraKind::classical(a.kind.param * b.kind.param);
        VectorXd c(kind.dim());
        for (int i = 0; i < a.kind.param; ++i) {
            for (int j = 0; j < b.kind.param; ++j) {
                c(i * b.kind.param + j) = a.coords(i) * b.coords(j);
            }
        }
        return {kind, std::move(c)};
    }
    if (a.kind.family == Family::ComplexHermitian && b.kind.family == Family::ComplexHermitian) {
        const int na = a.kind.param;
        const int nb = b.kind.param;
        const auto kind = AlgebraKind::complex_hermitian(na * nb);
        const MatrixXcd ma = herm_rep(a);
        const MatrixXcd mb = herm_rep(b);
        MatrixXcd m(na * nb, na * nb);
        for (int i = 0; i < na; ++i) {
            for (int j = 0; j < na; ++j) {
                m.block(i * nb, j * nb, nb, nb) = ma(i, j) * mb;
            }
        }
        return element_from_herm(kind, m);
    }
    throw std::invalid_argument(
        "tensor_element: only classical x classical and complex x complex are supported");
}

double fidelity_multiplicativity_violation(const State& rho1, const State& sigma1,
                                           const State& rho2, const State& sigma2) {
    const State joint_rho{tensor_element(rho1.element, rho2.element)};
    const State joint_sigma{tensor_element(sigma1.element, sigma2.element)};
    const double joint = dagger_fidelity(joint_rho, joint_sigma);
    const double split = dagger_fidelity(rho1, sigma1) * dagger_fidelity(rho2, sigma2);
    return std::abs(joint - split);
}

LinearMap adjoint_map(const LinearMap& map) {
    return {map.kind, map.matrix.transpose()};
}

AdjointLawReport adjoint_law_check(const LinearMap& a, const LinearMap& b) {
    if (!(a.kind == b.kind)) {
        throw std::invalid_argument("adjoint_law_check: kind mismatch");
    }
    const int n = static_cast<int>(a.matrix.rows());
    AdjointLawReport report;

    const MatrixXd round_trip = a.matrix.transpose().transpose();
    report.involution = (round_trip - a.matrix).cwiseAbs().maxCoeff();

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double lhs = 0.0;  // ((BA)^T)(i,j) = sum_k B(j,k) A(k,i)
            double rhs = 0.0;  // (A^T B^T)(i,j) = sum_k A(k,i) B(j,k)
            for (int k = 0; k < n; ++k) {
                lhs += b.matrix(j, k) * a.matrix(k, i);
                rhs += a.matrix(k, i) * b.matrix(j, k);
            }
            report.composition = std::max(report.composition, std::abs(lhs - rhs));
        }
    }
    return report;
}

double reversible_adjoint_residual(const LinearMap& u) {
    const MatrixXd inv = u.matrix.inverse();
    return (u.matrix.transpose() - inv).cwiseAbs().maxCoeff();
}

LinearMap reversible_channel(const System& sys, std::uint64_t seed) {
    Rng rng(seed);
    const int n = sys.kind.param;
    switch (sys.kind.family) {
        case Family::Classical: {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = n - 1; i > 0; --i) {
                std::swap(perm[i], perm[rng.next_u64() % (i + 1)]);
            }
            return permutation_channel(sys, perm);
        }
        case Family::RealSymmetric: {
            const MatrixXd q = random_orthogonal(n, rng);
            return {sys.kind, conjugation_matrix(sys, q, sym_rep, [&](const MatrixXd& m) {
                        return element_from_sym(sys.kind, m);
                    })};
        }
        case Family::ComplexHermitian: {
            const MatrixXcd u = random_unitary(n, rng);
            return {sys.kind, conjugation_matrix(sys, u, herm_rep, [&](const MatrixXcd& m) {
                        return element_from_herm(sys.kind, m);
                    })};
        }
        case Family::QuaternionicHermitian: {
            const MatrixXcd v = random_symplectic_embedded(n, rng);
            return {sys.kind,
                    conjugation_matrix(sys, v, quat_embed_rep, [&](const MatrixXcd& m) {
                        return element_from_quat_embed(sys.kind, m);
                    })};
        }
        case Family::SpinFactor: {
            const MatrixXd r = random_orthogonal(n, rng);
            MatrixXd m = MatrixXd::Zero(sys.dim, sys.dim);
            m(0, 0) = 1.0;
            m.bottomRightCorner(n, n) = r;
            return {sys.kind, std::move(m)};
        }
    }
    throw std::logic_error("reversible_channel: bad family");
}

LinearMap permutation_channel(const System& sys, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != sys.rank) {
        throw std::invalid_argument("permutation_channel: permutation must cover the rank");
    }
    std::vector<bool> seen(sys.rank, false);
    for (int p : perm) {
        if (p < 0 || p >= sys.rank || seen[p]) {
            throw std::invalid_argument("permutation_channel: not a permutation");
        }
        seen[p] = true;
    }

    const int n = sys.kind.param;
    switch (sys.kind.family) {
        case Family::Classical: {
            MatrixXd m = MatrixXd::Zero(n, n);
            for (int i = 0; i < n; ++i) m(perm[i], i) = 1.0;
            return {sys.kind, std::move(m)};
        }
        case Family::RealSymmetric: {
            MatrixXd p = MatrixXd::Zero(n, n);
            for (int i = 0; i < n; ++i) p(perm[i], i) = 1.0;
            return {sys.kind, conjugation_matrix(sys, p, sym_rep, [&](const MatrixXd& m) {
                        return element_from_sym(sys.kind, m);
                    })};
        }
        case Family::ComplexHermitian: {
            MatrixXcd p = MatrixXcd::Zero(n, n);
            for (int i = 0; i < n; ++i) p(perm[i], i) = 1.0;
            return {sys.kind, conjugation_matrix(sys, p, herm_rep, [&](const MatrixXcd& m) {
                        return element_from_herm(sys.kind, m);
                    })};
        }
        case Family::QuaternionicHermitian: {
            MatrixXcd p = MatrixXcd::Zero(2 * n, 2 * n);
            for (int i = 0; i < n; ++i) {
                p(perm[i], i) = 1.0;
                p(n + perm[i], n + i) = 1.0;
            }
            return {sys.kind,
                    conjugation_matrix(sys, p, quat_embed_rep, [&](const MatrixXcd& m) {
                        return element_from_quat_embed(sys.kind, m);
                    })};
        }
        case Family::SpinFactor: {
            MatrixXd m = MatrixXd::Identity(sys.dim, sys.dim);
            if (perm[0] == 1) {
                // swap the antipodal pair: reflect the first spin axis
                m(1, 1) = -1.0;
            }
            return {sys.kind, std::move(m)};
        }
    }
    throw std::logic_error("permutation_channel: bad family");
}

LinearMap constant_channel(const System& sys, const State& target) {
    // <u, x> in coordinates is (M u)^T x; the spin trace form carries 2I.
    VectorXd udual = sys.unit_element.coords;
    if (sys.kind.family == Family::SpinFactor) udual *= 2.0;
    return {sys.kind, target.element.coords * udual.transpose()};
}

ChannelReport channel_classify(const System& sys, const LinearMap& channel, double tol,
                               std::uint64_t seed, int samples) {
    if (!(channel.kind == sys.kind)) {
        throw std::invalid_argument("channel_classify: kind mismatch");
    }

    Rng rng(seed);
    std::vector<State> probes;
    probes.reserve(samples);
    for (int t = 0; t < samples; ++t) {
        probes.push_back(t % 3 == 0 ? random_pure_state(sys, rng) : random_state(sys, rng));
    }

    for (const auto& rho : probes) {
        const JordanElement out = apply(channel, rho.element);
        if (!cone_contains(out, tol) ||
            std::abs(trace_of(out) - trace_of(rho.element)) > tol) {
            throw std::invalid_argument("channel_classify: input is not a channel on samples");
        }
    }

    ChannelReport report;
    const State chi = invariant_state(sys);
    report.unital =
        dagger_norm(sub(apply(channel, chi.element), chi.element)) <= tol;

    const LinearMap adj = adjoint_map(channel);
    report.dagger_physical = true;
    for (const auto& rho : probes) {
        const JordanElement out = apply(adj, rho.element);
        const double excess = trace_of(out) - 1.0;
        report.adjoint_trace_excess = std::max(report.adjoint_trace_excess, excess);
        if (!cone_contains(out, tol) || excess > tol) report.dagger_physical = false;
    }

    for (const auto& rho : probes) {
        const double increase =
            dagger_norm(apply(channel, rho.element)) - dagger_norm(rho.element);
        report.max_dagger_norm_increase = std::max(report.max_dagger_norm_increase, increase);
    }
    return report;
}

}  // namespace sharpgpt
