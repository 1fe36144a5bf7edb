#include "sharpgpt/rep.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace sharpgpt {
namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using cd = std::complex<double>;

const double kSqrt2 = std::sqrt(2.0);

// Index of the off-diagonal pair (i,j), i<j, in row-major pair order.
int pair_index(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

void require(const JordanElement& x, Family family, const char* fn) {
    if (x.kind.family != family) {
        throw std::invalid_argument(std::string(fn) + ": wrong family " + x.kind.name());
    }
}

}  // namespace

Eigen::MatrixXd sym_rep(const JordanElement& x) {
    require(x, Family::RealSymmetric, "sym_rep");
    const int n = x.kind.param;
    const VectorXd& c = x.coords;
    MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = c(i);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = c(n + pair_index(n, i, j)) / kSqrt2;
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

JordanElement element_from_sym(const AlgebraKind& kind, const Eigen::MatrixXd& m) {
    const int n = kind.param;
    VectorXd c(kind.dim());
    for (int i = 0; i < n; ++i) c(i) = m(i, i);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            c(n + pair_index(n, i, j)) = kSqrt2 * 0.5 * (m(i, j) + m(j, i));
        }
    }
    return {kind, std::move(c)};
}

Eigen::MatrixXcd herm_rep(const JordanElement& x) {
    require(x, Family::ComplexHermitian, "herm_rep");
    const int n = x.kind.param;
    const VectorXd& c = x.coords;
    MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = c(i);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int k = n + 2 * pair_index(n, i, j);
            const cd v(c(k) / kSqrt2, c(k + 1) / kSqrt2);
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

JordanElement element_from_herm(const AlgebraKind& kind, const Eigen::MatrixXcd& m) {
    const int n = kind.param;
    VectorXd c(kind.dim());
    for (int i = 0; i < n; ++i) c(i) = m(i, i).real();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const cd v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            const int k = n + 2 * pair_index(n, i, j);
            c(k) = kSqrt2 * v.real();
            c(k + 1) = kSqrt2 * v.imag();
        }
    }
    return {kind, std::move(c)};
}

Eigen::MatrixXcd quat_embed_rep(const JordanElement& x) {
    require(x, Family::QuaternionicHermitian, "quat_embed_rep");
    const int n = x.kind.param;
    const VectorXd& c = x.coords;
    MatrixXcd z = MatrixXcd::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        z(i, i) = c(i);
        z(n + i, n + i) = c(i);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int k = n + 4 * pair_index(n, i, j);
            const cd a(c(k) / kSqrt2, c(k + 1) / kSqrt2);
            const cd b(c(k + 2) / kSqrt2, c(k + 3) / kSqrt2);
            z(i, j) = a;
            z(j, i) = std::conj(a);
            z(n + i, n + j) = std::conj(a);
            z(n + j, n + i) = a;
            z(i, n + j) = b;
            z(j, n + i) = -b;
            z(n + i, j) = -std::conj(b);
            z(n + j, i) = std::conj(b);
        }
    }
    return z;
}

JordanElement element_from_quat_embed(const AlgebraKind& kind, const Eigen::MatrixXcd& z) {
    const int n = kind.param;
    VectorXd c(kind.dim());
    for (int i = 0; i < n; ++i) {
        c(i) = 0.5 * (z(i, i).real() + z(n + i, n + i).real());
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const cd a = 0.5 * (z(i, j) + std::conj(z(n + i, n + j)));
            const cd b = 0.5 * (z(i, n + j) - z(j, n + i));
            const int k = n + 4 * pair_index(n, i, j);
            c(k) = kSqrt2 * a.real();
            c(k + 1) = kSqrt2 * a.imag();
            c(k + 2) = kSqrt2 * b.real();
            c(k + 3) = kSqrt2 * b.imag();
        }
    }
    return {kind, std::move(c)};
}

Eigen::MatrixXd realify(const Eigen::MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    MatrixXd z(2 * n, 2 * n);
    z.topLeftCorner(n, n) = m.real();
    z.topRightCorner(n, n) = -m.imag();
    z.bottomLeftCorner(n, n) = m.imag();
    z.bottomRightCorner(n, n) = m.real();
    return z;
}

Eigen::MatrixXcd unrealify(const Eigen::MatrixXd& z) {
    const int n = static_cast<int>(z.rows()) / 2;
    MatrixXd re = 0.5 * (z.topLeftCorner(n, n) + z.bottomRightCorner(n, n));
    MatrixXd im = 0.5 * (z.bottomLeftCorner(n, n) - z.topRightCorner(n, n));
    return re.cast<cd>() + cd(0, 1) * im.cast<cd>();
}

Eigen::VectorXcd quat_structure_map(const Eigen::VectorXcd& w) {
    const int n = static_cast<int>(w.size()) / 2;
    VectorXcd out(2 * n);
    out.head(n) = w.tail(n).conjugate();
    out.tail(n) = -w.head(n).conjugate();
    return out;
}

}  // namespace sharpgpt
