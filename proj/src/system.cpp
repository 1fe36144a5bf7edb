#include "sharpgpt/system.hpp"

#include "sharpgpt/rep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sharpgpt {
namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

void check_system_element(const System& sys, const JordanElement& x, const char* fn) {
    if (!(x.kind == sys.kind)) {
        throw std::invalid_argument(std::string(fn) + ": element belongs to " + x.kind.name() +
                                    ", not " + sys.kind.name());
    }
}

// Simplex weights via normalized exponentials.
VectorXd simplex_weights(int d, Rng& rng) {
    VectorXd w(d);
    for (int i = 0; i < d; ++i) {
        double u = rng.uniform();
        while (u <= 0.0) u = rng.uniform();
        w(i) = -std::log(u);
    }
    return w / w.sum();
}

}  // namespace

System make_system(const AlgebraKind& kind) {
    return {kind, kind.rank(), kind.dim(), unit(kind)};
}

State make_state(const System& sys, JordanElement element, double tol) {
    check_system_element(sys, element, "make_state");
    if (!cone_contains(element, tol)) {
        throw std::invalid_argument("make_state: element is outside the state cone");
    }
    const double tr = trace_of(element);
    if (tr < -tol || tr > 1.0 + tol) {
        throw std::invalid_argument("make_state: trace " + std::to_string(tr) +
                                    " is outside [0, 1]");
    }
    return {std::move(element)};
}

Effect make_effect(const System& sys, JordanElement element, double tol) {
    check_system_element(sys, element, "make_effect");
    if (!cone_contains(element, tol)) {
        throw std::invalid_argument("make_effect: element is outside the cone");
    }
    if (!cone_contains(sub(sys.unit_element, element), tol)) {
        throw std::invalid_argument("make_effect: element exceeds the unit effect");
    }
    return {std::move(element)};
}

double pairing(const Effect& e, const State& rho) {
    return trace_inner_product(e.element, rho.element);
}

Effect dagger(const State& rho) { return {rho.element}; }

State dagger(const Effect& e) { return {e.element}; }

State invariant_state(const System& sys) {
    return {scale(1.0 / sys.rank, sys.unit_element)};
}

SpectralDecomposition diagonalize_state(const State& rho, double tol) {
    const double tr = trace_of(rho.element);
    if (std::abs(tr - 1.0) > tol) {
        throw std::invalid_argument("diagonalize_state: state is not normalized (trace " +
                                    std::to_string(tr) + ")");
    }
    SpectralDecomposition sd = spectral_decompose(rho.element, tol);
    const double radius = std::max(std::abs(sd.eigenvalues(0)),
                                   std::abs(sd.eigenvalues(sd.eigenvalues.size() - 1)));
    for (int k = 0; k < sd.eigenvalues.size(); ++k) {
        if (sd.eigenvalues(k) < -tol * std::max(1.0, radius)) {
            throw std::invalid_argument("diagonalize_state: negative eigenvalue " +
                                        std::to_string(sd.eigenvalues(k)));
        }
        sd.eigenvalues(k) = std::max(0.0, sd.eigenvalues(k));
    }
    return sd;
}

bool is_pure(const State& rho, double tol) {
    const VectorXd lam = eigenvalues_of(rho.element);
    if (std::abs(lam(0) - 1.0) > tol) return false;
    for (int k = 1; k < lam.size(); ++k) {
        if (std::abs(lam(k)) > tol) return false;
    }
    return true;
}

bool perfectly_distinguishable(const std::vector<State>& states, double tol) {
    if (states.empty()) {
        throw std::invalid_argument("perfectly_distinguishable: empty state list");
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            if (std::abs(trace_inner_product(states[i].element, states[j].element)) > tol) {
                return false;
            }
        }
    }
    return true;
}

std::vector<JordanElement> random_frame(const System& sys, std::uint64_t seed) {
    Rng rng(seed);
    return random_frame(sys, rng);
}

std::vector<JordanElement> random_frame(const System& sys, Rng& rng) {
    const int n = sys.kind.param;
    std::vector<JordanElement> frame;
    frame.reserve(sys.rank);

    switch (sys.kind.family) {
        case Family::Classical: {
            for (int i = 0; i < n; ++i) frame.push_back(basis_element(sys.kind, i));
            break;
        }
        case Family::RealSymmetric: {
            // Conjugate the diagonal frame: frame_i = q_i q_i^T.
            const MatrixXd q = random_orthogonal(n, rng);
            for (int i = 0; i < n; ++i) {
                frame.push_back(element_from_sym(sys.kind, q.col(i) * q.col(i).transpose()));
            }
            break;
        }
        case Family::ComplexHermitian: {
            const MatrixXcd u = random_unitary(n, rng);
            for (int i = 0; i < n; ++i) {
                frame.push_back(element_from_herm(sys.kind, u.col(i) * u.col(i).adjoint()));
            }
            break;
        }
        case Family::QuaternionicHermitian: {
            // Each frame member spans one quaternionic line: v v* + (psi v)(psi v)*.
            const MatrixXcd v = random_symplectic_embedded(n, rng);
            for (int i = 0; i < n; ++i) {
                frame.push_back(element_from_quat_embed(
                    sys.kind, v.col(i) * v.col(i).adjoint() + v.col(n + i) * v.col(n + i).adjoint()));
            }
            break;
        }
        case Family::SpinFactor: {
            VectorXd dir(n);
            double norm = 0.0;
            while (norm == 0.0) {
                for (int i = 0; i < n; ++i) dir(i) = rng.gaussian();
                norm = dir.norm();
            }
            dir /= norm;
            VectorXd p(1 + n), q(1 + n);
            p(0) = 0.5;
            p.tail(n) = 0.5 * dir;
            q(0) = 0.5;
            q.tail(n) = -0.5 * dir;
            frame.push_back({sys.kind, std::move(p)});
            frame.push_back({sys.kind, std::move(q)});
            break;
        }
    }
    return frame;
}

State random_state(const System& sys, Rng& rng) {
    const auto frame = random_frame(sys, rng);
    const VectorXd w = simplex_weights(sys.rank, rng);
    VectorXd c = VectorXd::Zero(sys.dim);
    for (int i = 0; i < sys.rank; ++i) c += w(i) * frame[i].coords;
    return {JordanElement{sys.kind, std::move(c)}};
}

State random_pure_state(const System& sys, Rng& rng) {
    const auto frame = random_frame(sys, rng);
    return {frame[0]};
}

Effect random_effect(const System& sys, Rng& rng) {
    const auto frame = random_frame(sys, rng);
    VectorXd c = VectorXd::Zero(sys.dim);
    for (int i = 0; i < sys.rank; ++i) c += rng.uniform() * frame[i].coords;
    return {JordanElement{sys.kind, std::move(c)}};
}

}  // namespace sharpgpt
