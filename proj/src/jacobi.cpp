#include "sharpgpt/jacobi.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sharpgpt {

SymmetricEigen jacobi_eigensolver(Eigen::MatrixXd a, int max_sweeps) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n || n == 0) {
        throw std::invalid_argument("jacobi_eigensolver: matrix must be square and non-empty");
    }

    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    bool converged = (n == 1);

    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                off += std::abs(a(p, q));
            }
        }
        if (off == 0.0) {
            converged = true;
            break;
        }
        // Skip small rotations early on, as in the classic cyclic scheme.
        const double thresh = (sweep < 3) ? 0.2 * off / (n * n) : 0.0;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                const double g = 100.0 * std::abs(apq);
                if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
                    std::abs(a(q, q)) + g == std::abs(a(q, q))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                if (std::abs(apq) <= thresh) {
                    continue;
                }

                const double h = a(q, q) - a(p, p);
                double t;
                if (std::abs(h) + g == std::abs(h)) {
                    t = apq / h;
                } else {
                    const double theta = 0.5 * h / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double tapq = t * apq;

                a(p, p) -= tapq;
                a(q, q) += tapq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int j = 0; j < n; ++j) {
                    if (j == p || j == q) continue;
                    const double ajp = a(j, p);
                    const double ajq = a(j, q);
                    a(j, p) = ajp - s * (ajq + tau * ajp);
                    a(j, q) = ajq + s * (ajp - tau * ajq);
                    a(p, j) = a(j, p);
                    a(q, j) = a(j, q);
                }
                for (int j = 0; j < n; ++j) {
                    const double vjp = v(j, p);
                    const double vjq = v(j, q);
                    v(j, p) = vjp - s * (vjq + tau * vjp);
                    v(j, q) = vjq + s * (vjp - tau * vjq);
                }
            }
        }
    }

    if (!converged) {
        // One final look: the zeroing rule above can finish a sweep with
        // exactly zero off-diagonal mass without revisiting the flag.
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                off += std::abs(a(p, q));
            }
        }
        if (off != 0.0) {
            throw std::runtime_error("jacobi_eigensolver: no convergence within sweep budget");
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) > a(j, j); });

    SymmetricEigen out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (int k = 0; k < n; ++k) {
        out.values(k) = a(order[k], order[k]);
        out.vectors.col(k) = v.col(order[k]);
    }
    return out;
}

}  // namespace sharpgpt
