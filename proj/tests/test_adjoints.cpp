#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sharpgpt/adjoints.hpp"
#include "sharpgpt/interference.hpp"

#include <cmath>
#include <vector>

using namespace sharpgpt;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

const std::vector<AlgebraKind> kCatalog = {
    AlgebraKind::classical(3),
    AlgebraKind::real_symmetric(3),
    AlgebraKind::complex_hermitian(3),
    AlgebraKind::quaternionic_hermitian(3),
    AlgebraKind::spin_factor(4),
};

VectorXd qubit_coords(double m00, double re01, double im01, double m11) {
    VectorXd c(4);
    c << m00, m11, std::sqrt(2.0) * re01, std::sqrt(2.0) * im01;
    return c;
}

}  // namespace

TEST_CASE("operational and dagger norms") {
    const auto c2 = AlgebraKind::classical(2);
    CHECK(operational_norm(make_element(c2, (VectorXd(2) << 1, -1).finished())) == 2.0);
    CHECK(dagger_norm(make_element(c2, (VectorXd(2) << 3, 4).finished())) == 5.0);

    const auto q2 = AlgebraKind::complex_hermitian(2);
    const auto sx = make_element(q2, qubit_coords(0, 1, 0, 0));
    CHECK(operational_norm(sx) == doctest::Approx(2.0).epsilon(1e-12));

    Rng rng(4);
    for (const auto& kind : kCatalog) {
        const auto sys = make_system(kind);
        const State rho = random_state(sys, rng);
        CHECK(operational_norm(rho.element) == doctest::Approx(1.0).epsilon(1e-11));
        CHECK(dagger_norm(random_pure_state(sys, rng).element) ==
              doctest::Approx(1.0).epsilon(1e-11));
        CHECK(dagger_norm(invariant_state(sys).element) ==
              doctest::Approx(1.0 / std::sqrt(sys.rank)).epsilon(1e-12));
    }
}

TEST_CASE("norm bounds") {
    Rng rng(12);
    for (const auto& kind : kCatalog) {
        const auto sys = make_system(kind);
        for (int t = 0; t < 500; ++t) {
            const auto x = random_element(kind, rng);
            const auto report = norm_report(x);
            CHECK(report.two_le_one);
            CHECK(report.one_le_sqrtd_two);
        }
        for (int t = 0; t < 100; ++t) {
            const double nd = dagger_norm(random_state(sys, rng).element);
            CHECK(nd >= 1.0 / std::sqrt(sys.rank) - 1e-11);
            CHECK(nd <= 1.0 + 1e-11);
        }
    }
}

TEST_CASE("impurity") {
    Rng rng(6);
    for (const auto& kind : kCatalog) {
        const auto sys = make_system(kind);
        const State pure = random_pure_state(sys, rng);
        CHECK(std::abs(impurity(pure.element)) <= 1e-11);
        CHECK(impurity(pure.element) >= -1e-12);
        CHECK(std::abs(impurity(scale(0.5, pure.element))) <= 1e-11);

        const auto mixed = random_state(sys, rng);
        CHECK(impurity(mixed.element) >= -1e-12);
    }

    const auto c2 = make_system(AlgebraKind::classical(2));
    CHECK(impurity(invariant_state(c2).element) == doctest::Approx(0.5));
}

TEST_CASE("dagger fidelity") {
    const auto q2 = make_system(AlgebraKind::complex_hermitian(2));
    const State zero{make_element(q2.kind, qubit_coords(1, 0, 0, 0))};
    const State one{make_element(q2.kind, qubit_coords(0, 0, 0, 1))};
    const State plus{make_element(q2.kind, qubit_coords(0.5, 0.5, 0, 0.5))};

    CHECK(dagger_fidelity(zero, zero) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dagger_fidelity(zero, one) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(dagger_fidelity(zero, plus) == doctest::Approx(0.5).epsilon(1e-13));

    Rng rng(8);
    for (const auto& kind : kCatalog) {
        const auto sys = make_system(kind);
        for (int t = 0; t < 100; ++t) {
            const State a = random_state(sys, rng);
            const State b = random_state(sys, rng);
            const double f = dagger_fidelity(a, b);
            CHECK(f >= -1e-12);
            CHECK(f <= 1.0 + 1e-12);
        }
        // invariance under reversible channels
        const auto u = reversible_channel(sys, 3);
        for (int t = 0; t < 50; ++t) {
            const State a = random_state(sys, rng);
            const State b = random_state(sys, rng);
            const State ua{apply(u, a.element)};
            const State ub{apply(u, b.element)};
            CHECK(std::abs(dagger_fidelity(ua, ub) - dagger_fidelity(a, b)) <= 1e-12);
        }
    }

    const auto c2 = make_system(AlgebraKind::classical(2));
    CHECK_THROWS_AS(dagger_fidelity(State{zero_element(c2.kind)}, invariant_state(c2)),
                    std::invalid_argument);
}

TEST_CASE("fidelity multiplicativity") {
    // classical tensors multiply exactly
    const auto c2 = make_system(AlgebraKind::classical(2));
    const auto c3 = make_system(AlgebraKind::classical(3));
    Rng rng(10);
    for (int t = 0; t < 50; ++t) {
        const auto r1 = random_state(c2, rng);
        const auto s1 = random_state(c2, rng);
        const auto r2 = random_state(c3, rng);
        const auto s2 = random_state(c3, rng);
        CHECK(fidelity_multiplicativity_violation(r1, s1, r2, s2) <= 1e-15);
    }

    // quantum pairs within 1e-12
    const auto q2 = make_system(AlgebraKind::complex_hermitian(2));
    for (int t = 0; t < 200; ++t) {
        const auto r1 = random_state(q2, rng);
        const auto s1 = random_state(q2, rng);
        const auto r2 = random_state(q2, rng);
        const auto s2 = random_state(q2, rng);
        CHECK(fidelity_multiplicativity_violation(r1, s1, r2, s2) <= 1e-12);

        // rho2 = sigma2 collapses to the first factor
        const State joint_r{tensor_element(r1.element, r2.element)};
        const State joint_s{tensor_element(s1.element, r2.element)};
        CHECK(std::abs(dagger_fidelity(joint_r, joint_s) - dagger_fidelity(r1, s1)) <= 1e-12);
    }

    const auto s4 = make_system(AlgebraKind::spin_factor(4));
    CHECK_THROWS_AS(tensor_element(s4.unit_element, s4.unit_element), std::invalid_argument);
}

TEST_CASE("adjoints of linear maps") {
    // permutation adjoint is the inverse permutation
    const auto c4 = make_system(AlgebraKind::classical(4));
    const auto perm = permutation_channel(c4, {2, 0, 3, 1});
    const auto padj = adjoint_map(perm);
    CHECK((padj.matrix * perm.matrix - MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

    // conjugation adjoint equals the inverse conjugation
    for (const auto& kind : kCatalog) {
        const auto sys = make_system(kind);
        const auto u = reversible_channel(sys, 17);
        CHECK(reversible_adjoint_residual(u) <= 1e-10);
    }

    // face projectors are self-adjoint
    const auto q3 = make_system(AlgebraKind::complex_hermitian(3));
    const auto p = face_projector(q3, random_frame(q3, 19), {0, 1});
    CHECK((adjoint_map(p).matrix - p.matrix).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("adjoint laws are exact") {
    Rng rng(14);
    for (const auto& kind : kCatalog) {
        const auto dim = kind.dim();
        for (int t = 0; t < 5; ++t) {
            MatrixXd ma(dim, dim), mb(dim, dim);
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) {
                    ma(i, j) = rng.gaussian();
                    mb(i, j) = rng.gaussian();
                }
            }
            const auto report =
                adjoint_law_check(LinearMap{kind, ma}, LinearMap{kind, mb});
            CHECK(report.involution == 0.0);
            CHECK(report.composition == 0.0);
        }
    }

    const auto q3 = make_system(AlgebraKind::complex_hermitian(3));
    const auto id = identity_map(q3.kind);
    CHECK(reversible_adjoint_residual(id) == 0.0);
}

TEST_CASE("channel classification") {
    // mixture of two permutations on classical(3): unital, norm monotone
    const auto c3 = make_system(AlgebraKind::classical(3));
    const auto pa = permutation_channel(c3, {1, 2, 0});
    const auto pb = permutation_channel(c3, {0, 2, 1});
    const LinearMap mix{c3.kind, 0.5 * pa.matrix + 0.5 * pb.matrix};
    const auto mix_report = channel_classify(c3, mix, 1e-9, 23);
    CHECK(mix_report.unital);
    CHECK(mix_report.dagger_physical);
    CHECK(mix_report.max_dagger_norm_increase <= 1e-9);

    for (const auto& kind : kCatalog) {
        const auto sys = make_system(kind);

        // reversible channels: unital, dagger norm preserved
        const auto u = reversible_channel(sys, 29);
        const auto urep = channel_classify(sys, u, 1e-9, 31);
        CHECK(urep.unital);
        CHECK(urep.dagger_physical);
        CHECK(std::abs(urep.max_dagger_norm_increase) <= 1e-9);

        // constant-to-chi: unital, contracts pure states
        const auto to_chi = constant_channel(sys, invariant_state(sys));
        const auto crep = channel_classify(sys, to_chi, 1e-9, 37);
        CHECK(crep.unital);
        CHECK(crep.max_dagger_norm_increase <= 1e-9);
        Rng rng(41);
        const State pure = random_pure_state(sys, rng);
        CHECK(dagger_norm(apply(to_chi, pure.element)) ==
              doctest::Approx(1.0 / std::sqrt(sys.rank)).epsilon(1e-11));

        // constant-to-pure: a channel, but not unital, and its adjoint
        // pushes states out of the state set
        const auto to_pure = constant_channel(sys, pure);
        const auto prep = channel_classify(sys, to_pure, 1e-9, 43);
        CHECK_FALSE(prep.unital);
        CHECK_FALSE(prep.dagger_physical);
        CHECK(prep.adjoint_trace_excess > 0.1);
    }

    // a trace-breaking map is rejected up front
    const auto q2 = make_system(AlgebraKind::complex_hermitian(2));
    const LinearMap half{q2.kind, 0.5 * MatrixXd::Identity(4, 4)};
    CHECK_THROWS_AS(channel_classify(q2, half, 1e-9, 47), std::invalid_argument);
}
