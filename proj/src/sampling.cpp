#include "sharpgpt/sampling.hpp"

#include "sharpgpt/rep.hpp"

#include <cmath>

namespace sharpgpt {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

JordanElement random_element(const AlgebraKind& kind, Rng& rng) {
    Eigen::VectorXd c(kind.dim());
    for (int i = 0; i < c.size(); ++i) c(i) = rng.gaussian();
    return {kind, std::move(c)};
}

Eigen::MatrixXd random_orthogonal(int n, Rng& rng) {
    Eigen::MatrixXd g(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) g(i, j) = rng.gaussian();
    }
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) g.col(j) -= g.col(k) * g.col(k).dot(g.col(j));
        g.col(j).normalize();
    }
    return g;
}

Eigen::MatrixXcd random_unitary(int n, Rng& rng) {
    Eigen::MatrixXcd g(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) g(i, j) = std::complex<double>(rng.gaussian(), rng.gaussian());
    }
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) g.col(j) -= g.col(k) * g.col(k).dot(g.col(j));
        g.col(j).normalize();
    }
    return g;
}

Eigen::MatrixXcd random_symplectic_embedded(int n, Rng& rng) {
    Eigen::MatrixXcd v(2 * n, 2 * n);
    std::vector<Eigen::VectorXcd> basis;
    basis.reserve(2 * n);
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXcd w(2 * n);
        for (int i = 0; i < 2 * n; ++i) w(i) = std::complex<double>(rng.gaussian(), rng.gaussian());
        for (const auto& b : basis) w -= b * b.dot(w);
        w.normalize();
        Eigen::VectorXcd p = quat_structure_map(w);
        for (const auto& b : basis) p -= b * b.dot(p);
        p -= w * w.dot(p);
        p.normalize();
        v.col(j) = w;
        v.col(n + j) = -p;
        basis.push_back(std::move(w));
        basis.push_back(std::move(p));
    }
    return v;
}

}  // namespace sharpgpt
