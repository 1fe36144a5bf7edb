#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sharpgpt/projectors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

using namespace sharpgpt;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using cd = std::complex<double>;

namespace {

// Test-local Hermitian representation, written independently of the library
// conversion code, used as the oracle for compression checks.
MatrixXcd herm_oracle(int n, const VectorXd& c) {
    MatrixXcd m = MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = c(i);
    int k = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const cd v(c(k) / std::sqrt(2.0), c(k + 1) / std::sqrt(2.0));
            m(i, j) = v;
            m(j, i) = std::conj(v);
            k += 2;
        }
    }
    return m;
}

VectorXd herm_oracle_coords(const MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    VectorXd c(n * n);
    for (int i = 0; i < n; ++i) c(i) = m(i, i).real();
    int k = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            c(k) = std::sqrt(2.0) * m(i, j).real();
            c(k + 1) = std::sqrt(2.0) * m(i, j).imag();
            k += 2;
        }
    }
    return c;
}

}  // namespace

TEST_CASE("face effects") {
    const auto sys = make_system(AlgebraKind::complex_hermitian(3));
    const auto frame = random_frame(sys, 4);

    const auto all = face_effect(sys, frame, {0, 1, 2});
    CHECK((all.element.coords - sys.unit_element.coords).norm() < 1e-12);

    const auto none = face_effect(sys, frame, {});
    CHECK(none.element.coords.norm() == 0.0);

    // diagonal frame: a_{0,1} = diag(1,1,0)
    const auto diag_frame = std::vector<JordanElement>{
        basis_element(sys.kind, 0), basis_element(sys.kind, 1), basis_element(sys.kind, 2)};
    const auto a01 = face_effect(sys, diag_frame, {0, 1});
    VectorXd expect = VectorXd::Zero(9);
    expect(0) = 1.0;
    expect(1) = 1.0;
    CHECK((a01.element.coords - expect).norm() == 0.0);

    CHECK_THROWS_AS(face_effect(sys, frame, {3}), std::invalid_argument);
    CHECK_THROWS_AS(face_effect(sys, frame, {0, 0}), std::invalid_argument);
}

TEST_CASE("projector matrices") {
    // full index set: identity map
    for (const auto& kind : {AlgebraKind::real_symmetric(3), AlgebraKind::quaternionic_hermitian(2),
                             AlgebraKind::spin_factor(3)}) {
        const auto sys = make_system(kind);
        const auto frame = random_frame(sys, 9);
        std::vector<int> all(sys.rank);
        for (int i = 0; i < sys.rank; ++i) all[i] = i;
        const auto p = face_projector(sys, frame, all);
        CHECK((p.matrix - MatrixXd::Identity(sys.dim, sys.dim)).cwiseAbs().maxCoeff() < 1e-10);
    }

    // classical: zeroes the coordinates outside the subset
    const auto c4 = make_system(AlgebraKind::classical(4));
    const auto cframe = random_frame(c4, 0);
    const auto p = face_projector(c4, cframe, {1, 3});
    MatrixXd expect = MatrixXd::Zero(4, 4);
    expect(1, 1) = 1.0;
    expect(3, 3) = 1.0;
    CHECK((p.matrix - expect).cwiseAbs().maxCoeff() == 0.0);

    // quantum: U_{p_I} equals two-sided conjugation by the subspace projector
    const auto q3 = make_system(AlgebraKind::complex_hermitian(3));
    const auto frame = random_frame(q3, 21);
    const std::vector<int> subset = {0, 2};
    const auto proj = face_projector(q3, frame, subset);
    MatrixXcd pi = MatrixXcd::Zero(3, 3);
    for (int i : subset) pi += herm_oracle(3, frame[i].coords);
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        const State rho = random_state(q3, rng);
        const VectorXd via_map = apply(proj, rho.element).coords;
        const VectorXd via_matrices =
            herm_oracle_coords(pi * herm_oracle(3, rho.element.coords) * pi);
        CHECK((via_map - via_matrices).norm() < 1e-11);
    }
}

TEST_CASE("projector face action") {
    const auto c3 = make_system(AlgebraKind::classical(3));
    const auto creport =
        projector_axiom_check(c3, random_frame(c3, 0), {0, 2}, 50, 11);
    CHECK(creport.fix_violation == 0.0);
    CHECK(creport.kill_violation == 0.0);

    const auto q3 = make_system(AlgebraKind::complex_hermitian(3));
    const auto qreport =
        projector_axiom_check(q3, random_frame(q3, 3), {0, 1}, 100, 12);
    CHECK(qreport.fix_violation <= 1e-10);
    CHECK(qreport.kill_violation <= 1e-10);

    const auto h3 = make_system(AlgebraKind::quaternionic_hermitian(3));
    const auto hreport = projector_axiom_check(h3, random_frame(h3, 5), {1}, 100, 13);
    CHECK(hreport.fix_violation <= 1e-9);
    CHECK(hreport.kill_violation <= 1e-9);
}

TEST_CASE("projector lattice laws") {
    const auto c3 = make_system(AlgebraKind::classical(3));
    const auto cl = projector_lattice_check(c3, random_frame(c3, 0));
    CHECK(cl.worst() == 0.0);

    const auto q3 = make_system(AlgebraKind::complex_hermitian(3));
    const auto ql = projector_lattice_check(q3, random_frame(q3, 14));
    CHECK(ql.worst() <= 1e-10);

    const auto r4 = make_system(AlgebraKind::real_symmetric(4));
    const auto rl = projector_lattice_check(r4, random_frame(r4, 15));
    CHECK(rl.worst() <= 1e-9);

    const auto h3 = make_system(AlgebraKind::quaternionic_hermitian(3));
    const auto hl = projector_lattice_check(h3, random_frame(h3, 16));
    CHECK(hl.worst() <= 1e-9);

    const auto s5 = make_system(AlgebraKind::spin_factor(5));
    const auto sl = projector_lattice_check(s5, random_frame(s5, 17));
    CHECK(sl.worst() <= 1e-10);
}

TEST_CASE("partitions and map composition") {
    const auto sys = make_system(AlgebraKind::complex_hermitian(3));
    const auto frame = random_frame(sys, 51);
    const auto partition = make_partition(sys, frame, {{0, 1}, {2}});
    CHECK(partition.subsets.size() == 2);
    CHECK_THROWS_AS(make_partition(sys, frame, {{0}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_partition(sys, frame, {{5}}), std::invalid_argument);

    // compose realizes the product law P_I P_J = P_{I and J}
    const auto pa = face_projector(sys, partition.frame, {0, 1});
    const auto pb = face_projector(sys, partition.frame, {1, 2});
    const auto meet = face_projector(sys, partition.frame, {1});
    CHECK((compose(pa, pb).matrix - meet.matrix).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((apply(compose(pa, pb), sys.unit_element).coords -
           apply(meet, sys.unit_element).coords)
              .norm() <= 1e-10);
}

TEST_CASE("projector spectra") {
    // coordinate matrices are symmetric idempotents with spectrum in {0,1},
    // and restrict to the identity on the selected face span
    const auto sys = make_system(AlgebraKind::real_symmetric(3));
    const auto frame = random_frame(sys, 8);
    const std::vector<int> subset = {0, 1};
    const auto p = face_projector(sys, frame, subset);

    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (p.matrix + p.matrix.transpose()));
    for (int k = 0; k < es.eigenvalues().size(); ++k) {
        const double lam = es.eigenvalues()(k);
        CHECK(lam > -1e-12);
        CHECK(lam < 1.0 + 1e-12);
    }

    for (int i : subset) {
        CHECK((apply(p, frame[i]).coords - frame[i].coords).norm() < 1e-11);
    }
}

TEST_CASE("purity preservation") {
    const auto q3 = make_system(AlgebraKind::complex_hermitian(3));
    CHECK(purity_preservation_check(q3, random_frame(q3, 31), {0, 1}, 200, 41) <= 1e-9);

    const auto c3 = make_system(AlgebraKind::classical(3));
    CHECK(purity_preservation_check(c3, random_frame(c3, 0), {1}, 50, 42) == 0.0);

    const auto s4 = make_system(AlgebraKind::spin_factor(4));
    CHECK(purity_preservation_check(s4, random_frame(s4, 33), {0}, 200, 43) <= 1e-9);

    const auto h3 = make_system(AlgebraKind::quaternionic_hermitian(3));
    CHECK(purity_preservation_check(h3, random_frame(h3, 34), {0, 2}, 100, 44) <= 1e-9);
}

TEST_CASE("von Neumann normalization over partitions") {
    Rng rng(61);
    for (const auto& kind : {AlgebraKind::complex_hermitian(4), AlgebraKind::real_symmetric(3),
                             AlgebraKind::quaternionic_hermitian(2), AlgebraKind::spin_factor(3)}) {
        const auto sys = make_system(kind);
        const auto frame = random_frame(sys, 71);
        // split {0..rank-1} into two blocks plus singletons
        std::vector<std::vector<int>> partition;
        std::vector<int> first;
        for (int i = 0; i < sys.rank / 2; ++i) first.push_back(i);
        if (!first.empty()) partition.push_back(first);
        for (int i = sys.rank / 2; i < sys.rank; ++i) partition.push_back({i});

        for (int t = 0; t < 20; ++t) {
            const auto x = random_element(kind, rng);
            double total = 0.0;
            for (const auto& block : partition) {
                const auto p = face_projector(sys, frame, block);
                total += trace_of(apply(p, x));
            }
            CHECK(std::abs(total - trace_of(x)) <= 1e-10 * std::max(1.0, std::abs(trace_of(x))));
        }
    }
}
