#include "sharpgpt/suite.hpp"

#include "sharpgpt/adjoints.hpp"
#include "sharpgpt/interference.hpp"
#include "sharpgpt/projectors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace sharpgpt {
namespace {

using Eigen::VectorXd;

std::vector<int> index_range(int count) {
    std::vector<int> v(count);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// Deterministic subset choices per frame for the face checks: singletons,
// prefixes, and one mid split.
std::vector<std::vector<int>> face_subsets(int rank) {
    std::vector<std::vector<int>> subsets;
    for (int i = 0; i < rank; ++i) subsets.push_back({i});
    if (rank >= 3) subsets.push_back({0, 1});
    if (rank >= 4) subsets.push_back({1, 2, 3});
    return subsets;
}

double power_associativity(const System& sys, Rng& rng, int count) {
    double worst = 0.0;
    for (int t = 0; t < count; ++t) {
        const auto x = random_element(sys.kind, rng);
        const auto xx = jordan_product(x, x);
        worst = std::max(
            worst, (jordan_product(xx, x).coords - jordan_product(x, xx).coords).norm());
    }
    return worst;
}

double jordan_identity(const System& sys, Rng& rng, int count) {
    double worst = 0.0;
    for (int t = 0; t < count; ++t) {
        const auto x = random_element(sys.kind, rng);
        const auto y = random_element(sys.kind, rng);
        const auto xx = jordan_product(x, x);
        const auto lhs = jordan_product(jordan_product(xx, y), x);
        const auto rhs = jordan_product(xx, jordan_product(y, x));
        worst = std::max(worst, (lhs.coords - rhs.coords).norm());
    }
    return worst;
}

double frame_axioms(const System& sys, Rng& rng, int count) {
    double worst = 0.0;
    for (int t = 0; t < count; ++t) {
        const auto x = random_element(sys.kind, rng);
        const auto sd = spectral_decompose(x);
        VectorXd sum = VectorXd::Zero(sys.dim);
        VectorXd recon = VectorXd::Zero(sys.dim);
        for (std::size_t i = 0; i < sd.frame.size(); ++i) {
            const auto& p = sd.frame[i];
            worst = std::max(worst, (jordan_product(p, p).coords - p.coords).norm());
            worst = std::max(worst, std::abs(trace_of(p) - 1.0));
            for (std::size_t j = i + 1; j < sd.frame.size(); ++j) {
                worst = std::max(worst, std::abs(trace_inner_product(p, sd.frame[j])));
            }
            sum += p.coords;
            recon += sd.eigenvalues(static_cast<int>(i)) * p.coords;
        }
        worst = std::max(worst, (sum - sys.unit_element.coords).norm());
        worst = std::max(worst, (recon - x.coords).norm() / std::max(1.0, x.coords.norm()));
    }
    return worst;
}

double quadratic_rep_symmetry(const System& sys, Rng& rng, int count) {
    double worst = 0.0;
    for (int t = 0; t < count; ++t) {
        const auto a = random_element(sys.kind, rng);
        const auto x = random_element(sys.kind, rng);
        const auto y = random_element(sys.kind, rng);
        const double lhs = trace_inner_product(quadratic_rep(a, x), y);
        const double rhs = trace_inner_product(x, quadratic_rep(a, y));
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    return worst;
}

double dagger_symmetry(const System& sys, Rng& rng, int count) {
    double worst = 0.0;
    for (int t = 0; t < count; ++t) {
        const State rho = random_state(sys, rng);
        const State sigma = random_state(sys, rng);
        worst = std::max(worst, std::abs(pairing(dagger(rho), sigma) -
                                         pairing(dagger(sigma), rho)));
    }
    return worst;
}

double self_duality_cone(const System& sys, Rng& rng, int count) {
    double worst = 0.0;
    for (int t = 0; t < count; ++t) {
        const State a = random_state(sys, rng);
        const State b = random_state(sys, rng);
        worst = std::max(worst, -trace_inner_product(a.element, b.element));
    }
    return std::max(0.0, worst);
}

double self_duality_witness(const System& sys, Rng& rng, int count) {
    int missing = 0;
    for (int t = 0; t < count; ++t) {
        auto x = random_element(sys.kind, rng);
        auto sd = spectral_decompose(x);
        const int last = static_cast<int>(sd.eigenvalues.size()) - 1;
        if (sd.eigenvalues(last) >= 0.0) {
            // force a negative direction and retry
            x = sub(x, scale(2.0 * std::abs(sd.eigenvalues(last)) + 1.0, sd.frame[last]));
            sd = spectral_decompose(x);
        }
        if (sd.eigenvalues(last) >= 0.0 ||
            trace_inner_product(x, sd.frame[last]) >= 0.0) {
            ++missing;
        }
    }
    return static_cast<double>(missing);
}

double frame_dagger_sum(const System& sys, Rng& rng, int frames) {
    double worst = 0.0;
    for (int t = 0; t < frames; ++t) {
        const auto frame = random_frame(sys, rng);
        VectorXd sum = VectorXd::Zero(sys.dim);
        for (const auto& p : frame) sum += dagger(State{p}).element.coords;
        worst = std::max(worst, (sum - sys.unit_element.coords).norm());
    }
    return worst;
}

double eigenvalue_uniqueness(const System& sys, Rng& rng, int frames) {
    VectorXd spectrum(sys.rank);
    double total = 0.0;
    for (int i = 0; i < sys.rank; ++i) {
        spectrum(i) = 1.0 + rng.uniform();
        total += spectrum(i);
    }
    spectrum /= total;
    std::sort(spectrum.data(), spectrum.data() + sys.rank, std::greater<double>());

    double worst = 0.0;
    for (int t = 0; t < frames; ++t) {
        const auto frame = random_frame(sys, rng);
        VectorXd c = VectorXd::Zero(sys.dim);
        for (int i = 0; i < sys.rank; ++i) c += spectrum(i) * frame[i].coords;
        const auto sd = spectral_decompose(JordanElement{sys.kind, c});
        worst = std::max(worst, (sd.eigenvalues - spectrum).cwiseAbs().maxCoeff());
    }
    return worst;
}

double projector_faces(const System& sys, Rng& rng, int frames, int samples) {
    double worst = 0.0;
    for (int t = 0; t < frames; ++t) {
        const auto frame = random_frame(sys, rng);
        for (const auto& subset : face_subsets(sys.rank)) {
            const auto report =
                projector_axiom_check(sys, frame, subset, samples, rng.next_u64());
            worst = std::max({worst, report.fix_violation, report.kill_violation});
        }
    }
    return worst;
}

double projector_lattice(const System& sys, Rng& rng, int frames) {
    const int cap = sys.rank > 5 ? 32 : 0;
    double worst = 0.0;
    for (int t = 0; t < frames; ++t) {
        const auto frame = random_frame(sys, rng);
        worst = std::max(worst,
                         projector_lattice_check(sys, frame, cap, rng.next_u64()).worst());
    }
    return worst;
}

double projector_purity(const System& sys, Rng& rng, int frames, int trials) {
    double worst = 0.0;
    for (int t = 0; t < frames; ++t) {
        const auto frame = random_frame(sys, rng);
        for (const auto& subset : face_subsets(sys.rank)) {
            worst = std::max(worst, purity_preservation_check(sys, frame, subset, trials,
                                                              rng.next_u64()));
        }
    }
    return worst;
}

double von_neumann_sum(const System& sys, Rng& rng, int frames, int samples) {
    // singleton partition plus a paired one
    std::vector<std::vector<std::vector<int>>> partitions(2);
    for (int i = 0; i < sys.rank; ++i) partitions[0].push_back({i});
    for (int i = 0; i < sys.rank; i += 2) {
        std::vector<int> block = {i};
        if (i + 1 < sys.rank) block.push_back(i + 1);
        partitions[1].push_back(std::move(block));
    }

    double worst = 0.0;
    for (int t = 0; t < frames; ++t) {
        const auto frame = random_frame(sys, rng);
        for (const auto& partition : partitions) {
            std::vector<LinearMap> projectors;
            for (const auto& block : partition) {
                projectors.push_back(face_projector(sys, frame, block));
            }
            for (int s = 0; s < samples; ++s) {
                const auto x = random_element(sys.kind, rng);
                double total = 0.0;
                for (const auto& p : projectors) total += trace_of(apply(p, x));
                worst = std::max(worst, std::abs(total - trace_of(x)) /
                                            std::max(1.0, std::abs(trace_of(x))));
            }
        }
    }
    return worst;
}

double norm_bounds(const System& sys, Rng& rng, int count) {
    const double sqrt_d = std::sqrt(static_cast<double>(sys.rank));
    double worst = 0.0;
    for (int t = 0; t < count; ++t) {
        const auto x = random_element(sys.kind, rng);
        const double one = operational_norm(x);
        const double two = dagger_norm(x);
        worst = std::max(worst, two - one);
        worst = std::max(worst, one - sqrt_d * two);
    }
    for (int t = 0; t < count / 4; ++t) {
        const State rho = random_state(sys, rng);
        const double nd = dagger_norm(rho.element);
        worst = std::max(worst, 1.0 / sqrt_d - nd);
        worst = std::max(worst, nd - 1.0);
    }
    return std::max(0.0, worst);
}

double invariant_norm(const System& sys) {
    return std::abs(dagger_norm(invariant_state(sys).element) -
                    1.0 / std::sqrt(static_cast<double>(sys.rank)));
}

double fidelity_properties(const System& sys, Rng& rng, int pairs) {
    double worst = 0.0;
    for (int t = 0; t < pairs; ++t) {
        const State a = random_state(sys, rng);
        const State b = random_state(sys, rng);
        const double f = dagger_fidelity(a, b);
        worst = std::max(worst, std::max(-f, f - 1.0));  // range
        worst = std::max(worst, std::abs(dagger_fidelity(a, a) - 1.0));
    }
    if (sys.rank >= 2) {
        const auto frame = random_frame(sys, rng);
        worst = std::max(
            worst, std::abs(dagger_fidelity(State{frame[0]}, State{frame[sys.rank - 1]})));
    }
    return std::max(0.0, worst);
}

double fidelity_invariance(const System& sys, Rng& rng, int pairs) {
    double worst = 0.0;
    const auto u = reversible_channel(sys, rng.next_u64());
    std::vector<int> perm = index_range(sys.rank);
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    const auto pu = permutation_channel(sys, perm);
    for (int t = 0; t < pairs; ++t) {
        const State a = random_state(sys, rng);
        const State b = random_state(sys, rng);
        const double f = dagger_fidelity(a, b);
        for (const auto& map : {u, pu}) {
            const State ua{apply(map, a.element)};
            const State ub{apply(map, b.element)};
            worst = std::max(worst, std::abs(dagger_fidelity(ua, ub) - f));
        }
    }
    return worst;
}

double fidelity_multiplicativity(const System& sys, Rng& rng, int pairs) {
    double worst = 0.0;
    for (int t = 0; t < pairs; ++t) {
        const State r1 = random_state(sys, rng);
        const State s1 = random_state(sys, rng);
        const State r2 = random_state(sys, rng);
        const State s2 = random_state(sys, rng);
        worst = std::max(worst, fidelity_multiplicativity_violation(r1, s1, r2, s2));
    }
    return worst;
}

double adjoint_composition(const System& sys, Rng& rng, int count) {
    double worst = 0.0;
    for (int t = 0; t < count; ++t) {
        Eigen::MatrixXd ma(sys.dim, sys.dim), mb(sys.dim, sys.dim);
        for (int i = 0; i < sys.dim; ++i) {
            for (int j = 0; j < sys.dim; ++j) {
                ma(i, j) = rng.gaussian();
                mb(i, j) = rng.gaussian();
            }
        }
        const auto report = adjoint_law_check({sys.kind, ma}, {sys.kind, mb});
        worst = std::max({worst, report.involution, report.composition});
    }
    return worst;
}

double adjoint_reversible(const System& sys, Rng& rng, int count) {
    double worst = 0.0;
    for (int t = 0; t < count; ++t) {
        worst = std::max(worst,
                         reversible_adjoint_residual(reversible_channel(sys, rng.next_u64())));
    }
    std::vector<int> perm = index_range(sys.rank);
    std::reverse(perm.begin(), perm.end());
    worst = std::max(worst, reversible_adjoint_residual(permutation_channel(sys, perm)));
    return worst;
}

double channel_unitality(const System& sys, Rng& rng, int samples) {
    double failures = 0.0;

    // dagger-physical samples must classify unital
    for (int t = 0; t < 4; ++t) {
        const auto u1 = reversible_channel(sys, rng.next_u64());
        const auto u2 = reversible_channel(sys, rng.next_u64());
        const double w = 0.25 + 0.5 * rng.uniform();
        const LinearMap mix{sys.kind, w * u1.matrix + (1.0 - w) * u2.matrix};
        const auto report = channel_classify(sys, mix, 1e-9, rng.next_u64(), samples);
        if (report.dagger_physical && !report.unital) failures += 1.0;
        if (!report.dagger_physical) failures += 1.0;  // mixtures of reversibles are physical
    }

    // a constant channel onto a pure state is not unital, and its adjoint
    // leaves the state set; rank-1 systems have no such channel (the pure
    // state IS the invariant state)
    if (sys.rank >= 2) {
        const State pure = random_pure_state(sys, rng);
        const auto report =
            channel_classify(sys, constant_channel(sys, pure), 1e-9, rng.next_u64(), samples);
        if (report.unital || report.dagger_physical || report.adjoint_trace_excess <= 0.0) {
            failures += 1.0;
        }
    }
    return failures;
}

double dagger_norm_monotone(const System& sys, Rng& rng, int samples) {
    double worst = 0.0;
    for (int t = 0; t < 4; ++t) {
        const auto u1 = reversible_channel(sys, rng.next_u64());
        const auto u2 = reversible_channel(sys, rng.next_u64());
        const LinearMap mix{sys.kind, 0.5 * u1.matrix + 0.5 * u2.matrix};
        const auto report = channel_classify(sys, mix, 1e-9, rng.next_u64(), samples);
        worst = std::max(worst, report.max_dagger_norm_increase);
    }
    const auto report = channel_classify(sys, constant_channel(sys, invariant_state(sys)),
                                         1e-9, rng.next_u64(), samples);
    worst = std::max(worst, report.max_dagger_norm_increase);
    return std::max(0.0, worst);
}

double defect_norms(const System& sys, Rng& rng, int frames) {
    double worst = 0.0;
    for (int order = 3; order <= sys.rank; ++order) {
        std::vector<std::vector<int>> blocks(order);
        for (int b = 0; b < order - 1; ++b) blocks[b] = {b};
        for (int i = order - 1; i < sys.rank; ++i) blocks[order - 1].push_back(i);
        for (int t = 0; t < frames; ++t) {
            const auto frame = random_frame(sys, rng);
            worst = std::max(worst, sorkin_defect_norm(sys, frame, blocks, order));
        }
    }
    return worst;
}

double interference_vanishing(const System& sys, Rng& rng, int triples) {
    double worst = 0.0;
    for (int order = 3; order <= std::min(sys.rank, 4); ++order) {
        std::vector<std::vector<int>> blocks(order);
        for (int b = 0; b < order - 1; ++b) blocks[b] = {b};
        for (int i = order - 1; i < sys.rank; ++i) blocks[order - 1].push_back(i);
        for (int t = 0; t < triples; ++t) {
            const auto frame = random_frame(sys, rng);
            const auto exp = make_experiment(sys, frame, blocks, random_state(sys, rng),
                                             random_effect(sys, rng));
            worst = std::max(worst, std::abs(sorkin_order(slit_values(exp), order)));
        }
    }
    return worst;
}

}  // namespace

std::vector<CheckResult> run_verification_suite(const System& sys, const SuiteConfig& config) {
    std::vector<CheckResult> results;
    int check_index = 0;
    auto run = [&](const std::string& name, double threshold, auto&& fn) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(++check_index)));
        const double violation = fn(rng);
        const double limit = config.tol_override > 0.0 ? config.tol_override : threshold;
        results.push_back({name, violation, limit, violation <= limit});
    };

    run("power_associativity", 1e-10,
        [&](Rng& rng) { return power_associativity(sys, rng, config.elements); });
    run("jordan_identity", 1e-9,
        [&](Rng& rng) { return jordan_identity(sys, rng, config.elements); });
    run("frame_axioms", 1e-9,
        [&](Rng& rng) { return frame_axioms(sys, rng, config.elements); });
    run("quadratic_rep_symmetry", 1e-10,
        [&](Rng& rng) { return quadratic_rep_symmetry(sys, rng, config.elements); });
    run("dagger_symmetry", 1e-12,
        [&](Rng& rng) { return dagger_symmetry(sys, rng, config.pairs); });
    run("self_duality_cone", 1e-10,
        [&](Rng& rng) { return self_duality_cone(sys, rng, config.pairs); });
    run("self_duality_witness", 0.0,
        [&](Rng& rng) { return self_duality_witness(sys, rng, config.elements); });
    run("frame_dagger_sum", 1e-10,
        [&](Rng& rng) { return frame_dagger_sum(sys, rng, config.frames); });
    run("eigenvalue_uniqueness", 1e-10,
        [&](Rng& rng) { return eigenvalue_uniqueness(sys, rng, config.frames); });
    run("projector_faces", 1e-9, [&](Rng& rng) {
        return projector_faces(sys, rng, config.frames, config.face_samples);
    });
    run("projector_lattice", 1e-9,
        [&](Rng& rng) { return projector_lattice(sys, rng, config.frames); });
    run("projector_purity", 1e-9, [&](Rng& rng) {
        return projector_purity(sys, rng, config.frames, config.purity_trials);
    });
    run("von_neumann_sum", 1e-10, [&](Rng& rng) {
        return von_neumann_sum(sys, rng, config.frames, config.face_samples);
    });
    run("norm_bounds", 1e-10, [&](Rng& rng) { return norm_bounds(sys, rng, config.pairs); });
    run("invariant_state_norm", 1e-12, [&](Rng&) { return invariant_norm(sys); });
    run("fidelity_properties", 1e-9,
        [&](Rng& rng) { return fidelity_properties(sys, rng, config.pairs / 4); });
    run("fidelity_invariance", 1e-12,
        [&](Rng& rng) { return fidelity_invariance(sys, rng, config.pairs / 4); });
    if (sys.kind.family == Family::Classical || sys.kind.family == Family::ComplexHermitian) {
        run("fidelity_multiplicativity", 1e-12, [&](Rng& rng) {
            return fidelity_multiplicativity(sys, rng, config.pairs / 10);
        });
    }
    run("adjoint_laws", 0.0,
        [&](Rng& rng) { return adjoint_composition(sys, rng, 10); });
    run("adjoint_reversible", 1e-10,
        [&](Rng& rng) { return adjoint_reversible(sys, rng, config.reversibles); });
    run("channel_unitality", 0.0,
        [&](Rng& rng) { return channel_unitality(sys, rng, config.channel_samples); });
    run("dagger_norm_monotone", 1e-9,
        [&](Rng& rng) { return dagger_norm_monotone(sys, rng, config.channel_samples); });
    if (sys.rank >= 3) {
        run("sorkin_defect", 1e-9,
            [&](Rng& rng) { return defect_norms(sys, rng, config.frames); });
        run("interference_vanishing", 1e-9, [&](Rng& rng) {
            return interference_vanishing(sys, rng, config.interference_triples);
        });
    }
    return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

std::string emit_suite_report(const std::vector<CheckResult>& results) {
    std::string out = "check\tviolation\tthreshold\tstatus\n";
    char buf[64];
    for (const auto& r : results) {
        std::snprintf(buf, sizeof(buf), "%s\t%.3e\t%.3e\t%s\n", r.name.c_str(), r.violation,
                      r.threshold, r.pass ? "PASS" : "FAIL");
        out += buf;
    }
    return out;
}

}  // namespace sharpgpt
