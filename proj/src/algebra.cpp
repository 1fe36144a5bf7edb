#include "sharpgpt/algebra.hpp"

#include "sharpgpt/jacobi.hpp"
#include "sharpgpt/rep.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sharpgpt {
namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

void check_kind(const JordanElement& x, const JordanElement& y, const char* op) {
    if (!(x.kind == y.kind)) {
        throw std::invalid_argument(std::string(op) + ": kind mismatch");
    }
}

constexpr double kPivotFloor = 1e-6;

// Pivoted Gram-Schmidt over the columns of a (near-)projector matrix,
// extracting `count` orthonormal vectors from its range.
std::vector<VectorXd> pivot_columns_real(MatrixXd cols, int count) {
    std::vector<VectorXd> out;
    for (int k = 0; k < count; ++k) {
        int best = 0;
        double best_norm = -1.0;
        for (int j = 0; j < cols.cols(); ++j) {
            const double nj = cols.col(j).norm();
            if (nj > best_norm) {
                best_norm = nj;
                best = j;
            }
        }
        if (best_norm < kPivotFloor) {
            throw std::runtime_error("spectral_decompose: cluster projector is rank-deficient");
        }
        VectorXd v = cols.col(best) / best_norm;
        for (const auto& u : out) v -= u * u.dot(v);
        v.normalize();
        out.push_back(v);
        for (int j = 0; j < cols.cols(); ++j) {
            cols.col(j) -= v * v.dot(cols.col(j));
        }
    }
    return out;
}

std::vector<VectorXcd> pivot_columns_complex(MatrixXcd cols, int count) {
    std::vector<VectorXcd> out;
    for (int k = 0; k < count; ++k) {
        int best = 0;
        double best_norm = -1.0;
        for (int j = 0; j < cols.cols(); ++j) {
            const double nj = cols.col(j).norm();
            if (nj > best_norm) {
                best_norm = nj;
                best = j;
            }
        }
        if (best_norm < kPivotFloor) {
            throw std::runtime_error("spectral_decompose: cluster projector is rank-deficient");
        }
        VectorXcd v = cols.col(best) / best_norm;
        for (const auto& u : out) v -= u * u.dot(v);
        v.normalize();
        out.push_back(v);
        for (int j = 0; j < cols.cols(); ++j) {
            cols.col(j) -= v * v.dot(cols.col(j));
        }
    }
    return out;
}

// Quaternionic variant: vectors come in structure-map pairs (v, psi v), each
// pair spanning one quaternionic line of the range.
std::vector<std::pair<VectorXcd, VectorXcd>> pivot_columns_paired(MatrixXcd cols, int count) {
    std::vector<std::pair<VectorXcd, VectorXcd>> out;
    for (int k = 0; k < count; ++k) {
        int best = 0;
        double best_norm = -1.0;
        for (int j = 0; j < cols.cols(); ++j) {
            const double nj = cols.col(j).norm();
            if (nj > best_norm) {
                best_norm = nj;
                best = j;
            }
        }
        if (best_norm < kPivotFloor) {
            throw std::runtime_error("spectral_decompose: cluster projector is rank-deficient");
        }
        VectorXcd v = cols.col(best) / best_norm;
        for (const auto& [a, b] : out) {
            v -= a * a.dot(v);
            v -= b * b.dot(v);
        }
        v.normalize();
        VectorXcd w = quat_structure_map(v);
        for (const auto& [a, b] : out) {
            w -= a * a.dot(w);
            w -= b * b.dot(w);
        }
        w -= v * v.dot(w);
        w.normalize();
        out.emplace_back(std::move(v), std::move(w));
        const auto& [pv, pw] = out.back();
        for (int j = 0; j < cols.cols(); ++j) {
            cols.col(j) -= pv * pv.dot(cols.col(j));
            cols.col(j) -= pw * pw.dot(cols.col(j));
        }
    }
    return out;
}

bool lex_greater(const VectorXd& a, const VectorXd& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a(i) != b(i)) return a(i) > b(i);
    }
    return false;
}

struct Cluster {
    int begin = 0;  // deflated eigenvalue indices [begin, end)
    int end = 0;
};

std::vector<Cluster> cluster_eigenvalues(const VectorXd& lam) {
    const int r = static_cast<int>(lam.size());
    const double radius = std::max(std::abs(lam(0)), std::abs(lam(r - 1)));
    const double gap = kClusterGap * radius;
    std::vector<Cluster> out;
    int start = 0;
    for (int k = 1; k <= r; ++k) {
        if (k == r || lam(k - 1) - lam(k) > gap) {
            out.push_back({start, k});
            start = k;
        }
    }
    return out;
}

SpectralDecomposition decompose_matrix_kind(const JordanElement& x) {
    const Family family = x.kind.family;
    const int n = x.kind.param;

    // One real symmetric eigenproblem serves all three matrix families; the
    // complex and quaternionic spectra arrive with multiplicities 2 and 4.
    int fold = 1;
    MatrixXd s;
    switch (family) {
        case Family::RealSymmetric:
            s = sym_rep(x);
            break;
        case Family::ComplexHermitian:
            fold = 2;
            s = realify(herm_rep(x));
            break;
        case Family::QuaternionicHermitian:
            fold = 4;
            s = realify(quat_embed_rep(x));
            break;
        default:
            throw std::logic_error("decompose_matrix_kind: not a matrix kind");
    }

    const SymmetricEigen eig = jacobi_eigensolver(s);
    VectorXd lam(n);
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int t = 0; t < fold; ++t) acc += eig.values(fold * k + t);
        lam(k) = acc / fold;
    }

    SpectralDecomposition out;
    out.eigenvalues = lam;
    out.frame.reserve(n);

    for (const Cluster& c : cluster_eigenvalues(lam)) {
        const int m = c.end - c.begin;
        // Spectral projector of the cluster in the real embedding. Unique for
        // the eigenvalue set, hence the embedding of the kind's own cluster
        // projector no matter which eigenbasis Jacobi produced.
        const auto block = eig.vectors.middleCols(fold * c.begin, fold * m);
        const MatrixXd q = block * block.transpose();

        std::vector<JordanElement> prims;
        prims.reserve(m);
        if (family == Family::RealSymmetric) {
            for (const VectorXd& v : pivot_columns_real(q, m)) {
                prims.push_back(element_from_sym(x.kind, v * v.transpose()));
            }
        } else if (family == Family::ComplexHermitian) {
            const MatrixXcd p = unrealify(q);
            for (const VectorXcd& v : pivot_columns_complex(p, m)) {
                prims.push_back(element_from_herm(x.kind, v * v.adjoint()));
            }
        } else {
            const MatrixXcd p = unrealify(q);
            for (const auto& [v, w] : pivot_columns_paired(p, m)) {
                prims.push_back(
                    element_from_quat_embed(x.kind, v * v.adjoint() + w * w.adjoint()));
            }
        }
        std::sort(prims.begin(), prims.end(),
                  [](const JordanElement& a, const JordanElement& b) {
                      return lex_greater(a.coords, b.coords);
                  });
        for (auto& p : prims) out.frame.push_back(std::move(p));
    }
    return out;
}

VectorXd sorted_descending(VectorXd v) {
    std::sort(v.data(), v.data() + v.size(), std::greater<double>());
    return v;
}

}  // namespace

// ---- AlgebraKind ------------------------------------------------------------

AlgebraKind AlgebraKind::classical(int d) {
    if (d < 1) throw std::invalid_argument("classical: d must be >= 1");
    return {Family::Classical, d};
}

AlgebraKind AlgebraKind::real_symmetric(int n) {
    if (n < 2) throw std::invalid_argument("real_symmetric: n must be >= 2");
    return {Family::RealSymmetric, n};
}

AlgebraKind AlgebraKind::complex_hermitian(int n) {
    if (n < 2) throw std::invalid_argument("complex_hermitian: n must be >= 2");
    return {Family::ComplexHermitian, n};
}

AlgebraKind AlgebraKind::quaternionic_hermitian(int n) {
    if (n < 2) throw std::invalid_argument("quaternionic_hermitian: n must be >= 2");
    return {Family::QuaternionicHermitian, n};
}

AlgebraKind AlgebraKind::spin_factor(int m) {
    if (m < 2) throw std::invalid_argument("spin_factor: m must be >= 2");
    return {Family::SpinFactor, m};
}

int AlgebraKind::rank() const {
    switch (family) {
        case Family::Classical:
        case Family::RealSymmetric:
        case Family::ComplexHermitian:
        case Family::QuaternionicHermitian: return param;
        case Family::SpinFactor: return 2;
    }
    throw std::logic_error("AlgebraKind::rank: bad family");
}

int AlgebraKind::dim() const {
    switch (family) {
        case Family::Classical: return param;
        case Family::RealSymmetric: return param * (param + 1) / 2;
        case Family::ComplexHermitian: return param * param;
        case Family::QuaternionicHermitian: return param * (2 * param - 1);
        case Family::SpinFactor: return 1 + param;
    }
    throw std::logic_error("AlgebraKind::dim: bad family");
}

std::string AlgebraKind::name() const {
    switch (family) {
        case Family::Classical: return "classical(" + std::to_string(param) + ")";
        case Family::RealSymmetric: return "real_symmetric(" + std::to_string(param) + ")";
        case Family::ComplexHermitian: return "complex_hermitian(" + std::to_string(param) + ")";
        case Family::QuaternionicHermitian:
            return "quaternionic_hermitian(" + std::to_string(param) + ")";
        case Family::SpinFactor: return "spin_factor(" + std::to_string(param) + ")";
    }
    throw std::logic_error("AlgebraKind::name: bad family");
}

// ---- elements ---------------------------------------------------------------

JordanElement make_element(const AlgebraKind& kind, Eigen::VectorXd coords) {
    if (coords.size() != kind.dim()) {
        throw std::invalid_argument("make_element: expected " + std::to_string(kind.dim()) +
                                    " coordinates for " + kind.name() + ", got " +
                                    std::to_string(coords.size()));
    }
    return {kind, std::move(coords)};
}

JordanElement zero_element(const AlgebraKind& kind) {
    return {kind, VectorXd::Zero(kind.dim())};
}

JordanElement unit(const AlgebraKind& kind) {
    VectorXd c = VectorXd::Zero(kind.dim());
    switch (kind.family) {
        case Family::Classical:
            c.setOnes();
            break;
        case Family::RealSymmetric:
        case Family::ComplexHermitian:
        case Family::QuaternionicHermitian:
            c.head(kind.param).setOnes();
            break;
        case Family::SpinFactor:
            c(0) = 1.0;
            break;
    }
    return {kind, std::move(c)};
}

JordanElement basis_element(const AlgebraKind& kind, int index) {
    if (index < 0 || index >= kind.dim()) {
        throw std::invalid_argument("basis_element: index out of range");
    }
    VectorXd c = VectorXd::Zero(kind.dim());
    c(index) = 1.0;
    return {kind, std::move(c)};
}

JordanElement add(const JordanElement& x, const JordanElement& y) {
    check_kind(x, y, "add");
    return {x.kind, x.coords + y.coords};
}

JordanElement sub(const JordanElement& x, const JordanElement& y) {
    check_kind(x, y, "sub");
    return {x.kind, x.coords - y.coords};
}

JordanElement scale(double s, const JordanElement& x) {
    return {x.kind, s * x.coords};
}

// ---- products and traces ----------------------------------------------------

JordanElement jordan_product(const JordanElement& x, const JordanElement& y) {
    check_kind(x, y, "jordan_product");
    const int n = x.kind.param;
    switch (x.kind.family) {
        case Family::Classical:
            return {x.kind, x.coords.cwiseProduct(y.coords)};
        case Family::RealSymmetric: {
            const MatrixXd a = sym_rep(x);
            const MatrixXd b = sym_rep(y);
            return element_from_sym(x.kind, 0.5 * (a * b + b * a));
        }
        case Family::ComplexHermitian: {
            const MatrixXcd a = herm_rep(x);
            const MatrixXcd b = herm_rep(y);
            return element_from_herm(x.kind, 0.5 * (a * b + b * a));
        }
        case Family::QuaternionicHermitian: {
            const MatrixXcd a = quat_embed_rep(x);
            const MatrixXcd b = quat_embed_rep(y);
            return element_from_quat_embed(x.kind, 0.5 * (a * b + b * a));
        }
        case Family::SpinFactor: {
            const double s = x.coords(0);
            const double t = y.coords(0);
            const auto xv = x.coords.tail(n);
            const auto yv = y.coords.tail(n);
            VectorXd c(1 + n);
            c(0) = s * t + xv.dot(yv);
            c.tail(n) = s * yv + t * xv;
            return {x.kind, std::move(c)};
        }
    }
    throw std::logic_error("jordan_product: bad family");
}

double trace_inner_product(const JordanElement& x, const JordanElement& y) {
    check_kind(x, y, "trace_inner_product");
    const double dot = x.coords.dot(y.coords);
    return x.kind.family == Family::SpinFactor ? 2.0 * dot : dot;
}

double trace_of(const JordanElement& x) {
    switch (x.kind.family) {
        case Family::Classical:
            return x.coords.sum();
        case Family::RealSymmetric:
        case Family::ComplexHermitian:
        case Family::QuaternionicHermitian:
            return x.coords.head(x.kind.param).sum();
        case Family::SpinFactor:
            return 2.0 * x.coords(0);
    }
    throw std::logic_error("trace_of: bad family");
}

JordanElement quadratic_rep(const JordanElement& a, const JordanElement& x) {
    check_kind(a, x, "quadratic_rep");
    const JordanElement ax = jordan_product(a, x);
    const JordanElement aax = jordan_product(a, ax);
    const JordanElement asq = jordan_product(a, a);
    const JordanElement asqx = jordan_product(asq, x);
    return {a.kind, 2.0 * aax.coords - asqx.coords};
}

// ---- spectra ----------------------------------------------------------------

Eigen::VectorXd eigenvalues_of(const JordanElement& x) {
    if (!x.coords.allFinite()) {
        throw std::invalid_argument("eigenvalues_of: coordinates must be finite");
    }
    const int n = x.kind.param;
    switch (x.kind.family) {
        case Family::Classical:
            return sorted_descending(x.coords);
        case Family::RealSymmetric:
            return jacobi_eigensolver(sym_rep(x)).values;
        case Family::ComplexHermitian: {
            const VectorXd v = jacobi_eigensolver(realify(herm_rep(x))).values;
            VectorXd out(n);
            for (int k = 0; k < n; ++k) out(k) = 0.5 * (v(2 * k) + v(2 * k + 1));
            return out;
        }
        case Family::QuaternionicHermitian: {
            const VectorXd v = jacobi_eigensolver(realify(quat_embed_rep(x))).values;
            VectorXd out(n);
            for (int k = 0; k < n; ++k) {
                out(k) = 0.25 * (v(4 * k) + v(4 * k + 1) + v(4 * k + 2) + v(4 * k + 3));
            }
            return out;
        }
        case Family::SpinFactor: {
            const double t = x.coords(0);
            const double r = x.coords.tail(n).norm();
            VectorXd out(2);
            out << t + r, t - r;
            return out;
        }
    }
    throw std::logic_error("eigenvalues_of: bad family");
}

SpectralDecomposition spectral_decompose(const JordanElement& x, double tol) {
    if (!x.coords.allFinite()) {
        throw std::invalid_argument("spectral_decompose: coordinates must be finite");
    }
    SpectralDecomposition out;

    switch (x.kind.family) {
        case Family::Classical: {
            const int d = x.kind.param;
            std::vector<int> order(d);
            for (int i = 0; i < d; ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(),
                             [&](int i, int j) { return x.coords(i) > x.coords(j); });
            out.eigenvalues.resize(d);
            out.frame.reserve(d);
            for (int k = 0; k < d; ++k) {
                out.eigenvalues(k) = x.coords(order[k]);
                out.frame.push_back(basis_element(x.kind, order[k]));
            }
            break;
        }
        case Family::SpinFactor: {
            const int m = x.kind.param;
            const double t = x.coords(0);
            const double r = x.coords.tail(m).norm();
            VectorXd dir = VectorXd::Zero(m);
            if (r > 0.0) {
                dir = x.coords.tail(m) / r;
            } else {
                dir(0) = 1.0;  // degenerate: any antipodal pair reconstructs x
            }
            out.eigenvalues.resize(2);
            out.eigenvalues << t + r, t - r;
            VectorXd p(1 + m), q(1 + m);
            p(0) = 0.5;
            p.tail(m) = 0.5 * dir;
            q(0) = 0.5;
            q.tail(m) = -0.5 * dir;
            out.frame.push_back({x.kind, std::move(p)});
            out.frame.push_back({x.kind, std::move(q)});
            break;
        }
        default:
            out = decompose_matrix_kind(x);
            break;
    }

    VectorXd recon = VectorXd::Zero(x.kind.dim());
    for (int k = 0; k < out.eigenvalues.size(); ++k) {
        recon += out.eigenvalues(k) * out.frame[k].coords;
    }
    const double err = (recon - x.coords).norm();
    if (err > tol * std::max(1.0, x.coords.norm())) {
        throw std::runtime_error("spectral_decompose: frame reconstruction failed (residual " +
                                 std::to_string(err) + ")");
    }
    return out;
}

bool cone_contains(const JordanElement& x, double tol) {
    const VectorXd lam = eigenvalues_of(x);
    const double radius = std::max(std::abs(lam(0)), std::abs(lam(lam.size() - 1)));
    return lam(lam.size() - 1) >= -tol * std::max(1.0, radius);
}

}  // namespace sharpgpt
