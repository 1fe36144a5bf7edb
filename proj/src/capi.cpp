#include "sharpgpt.h"

#include "sharpgpt/adjoints.hpp"
#include "sharpgpt/descriptors.hpp"
#include "sharpgpt/interference.hpp"
#include "sharpgpt/suite.hpp"

#include <cstring>
#include <new>
#include <string>

using namespace sharpgpt;

struct sharp_system {
    System impl;
    std::string kind_name;
};

namespace {

thread_local std::string g_last_error;

sharp_status fail(sharp_status status, const char* message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
sharp_status guarded(Fn&& fn) {
    try {
        fn();
        return SHARP_OK;
    } catch (const ParseError& e) {
        return fail(SHARP_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SHARP_ERR_ARGUMENT, e.what());
    } catch (const std::runtime_error& e) {
        return fail(SHARP_ERR_NUMERIC, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SHARP_ERR_NUMERIC, "out of memory");
    } catch (const std::exception& e) {
        return fail(SHARP_ERR_NUMERIC, e.what());
    } catch (...) {
        return fail(SHARP_ERR_NUMERIC, "unknown error");
    }
}

sharp_status require(bool ok, const char* message) {
    return ok ? SHARP_OK : fail(SHARP_ERR_ARGUMENT, message);
}

Eigen::VectorXd to_vector(const double* data, int size) {
    return Eigen::Map<const Eigen::VectorXd>(data, size);
}

JordanElement to_element(const sharp_system* sys, const double* data) {
    return {sys->impl.kind, to_vector(data, sys->impl.dim)};
}

std::vector<JordanElement> to_frame(const sharp_system* sys, const double* data) {
    std::vector<JordanElement> frame;
    frame.reserve(sys->impl.rank);
    for (int i = 0; i < sys->impl.rank; ++i) {
        frame.push_back(to_element(sys, data + static_cast<std::size_t>(i) * sys->impl.dim));
    }
    return frame;
}

void write_vector(const Eigen::VectorXd& v, double* out) {
    std::memcpy(out, v.data(), sizeof(double) * static_cast<std::size_t>(v.size()));
}

std::vector<std::vector<int>> blocks_from_labels(const sharp_system* sys, const int* labels,
                                                 int order) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    std::vector<std::vector<int>> blocks(order);
    for (int i = 0; i < sys->impl.rank; ++i) {
        const int label = labels[i];
        if (label < 0 || label > order) {
            throw std::invalid_argument("slit label out of range");
        }
        if (label > 0) blocks[label - 1].push_back(i);
    }
    for (const auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("every slit block needs a frame index");
    }
    return blocks;
}

char* dup_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* sharp_version(void) { return "0.1.0"; }

const char* sharp_last_error(void) { return g_last_error.c_str(); }

sharp_status sharp_system_create(const char* kind, int size, sharp_system** out) {
    if (auto s = require(kind && out, "kind and out must be non-null")) return s;
    return guarded([&] {
        const std::string name(kind);
        AlgebraKind k;
        if (name == "classical") {
            k = AlgebraKind::classical(size);
        } else if (name == "real_symmetric") {
            k = AlgebraKind::real_symmetric(size);
        } else if (name == "complex_hermitian") {
            k = AlgebraKind::complex_hermitian(size);
        } else if (name == "quaternionic_hermitian") {
            k = AlgebraKind::quaternionic_hermitian(size);
        } else if (name == "spin_factor") {
            k = AlgebraKind::spin_factor(size);
        } else {
            throw std::invalid_argument("unsupported kind \"" + name + "\"");
        }
        *out = new sharp_system{make_system(k), name};
    });
}

sharp_status sharp_system_create_json(const char* theory_json, sharp_system** out) {
    if (auto s = require(theory_json && out, "theory_json and out must be non-null")) return s;
    return guarded([&] {
        const TheoryDescriptor td = parse_theory(theory_json);
        *out = new sharp_system{system_from(td), td.kind.name()};
    });
}

void sharp_system_destroy(sharp_system* sys) { delete sys; }

int sharp_system_rank(const sharp_system* sys) { return sys ? sys->impl.rank : 0; }

int sharp_system_dim(const sharp_system* sys) { return sys ? sys->impl.dim : 0; }

const char* sharp_system_kind(const sharp_system* sys) {
    return sys ? sys->kind_name.c_str() : "";
}

sharp_status sharp_unit(const sharp_system* sys, double* out) {
    if (auto s = require(sys && out, "sys and out must be non-null")) return s;
    return guarded([&] { write_vector(sys->impl.unit_element.coords, out); });
}

sharp_status sharp_invariant_state(const sharp_system* sys, double* out) {
    if (auto s = require(sys && out, "sys and out must be non-null")) return s;
    return guarded([&] { write_vector(invariant_state(sys->impl).element.coords, out); });
}

sharp_status sharp_jordan_product(const sharp_system* sys, const double* x, const double* y,
                                  double* out) {
    if (auto s = require(sys && x && y && out, "null argument")) return s;
    return guarded([&] {
        write_vector(jordan_product(to_element(sys, x), to_element(sys, y)).coords, out);
    });
}

sharp_status sharp_quadratic_rep(const sharp_system* sys, const double* a, const double* x,
                                 double* out) {
    if (auto s = require(sys && a && x && out, "null argument")) return s;
    return guarded([&] {
        write_vector(quadratic_rep(to_element(sys, a), to_element(sys, x)).coords, out);
    });
}

sharp_status sharp_trace_inner_product(const sharp_system* sys, const double* x,
                                       const double* y, double* out) {
    if (auto s = require(sys && x && y && out, "null argument")) return s;
    return guarded([&] {
        *out = trace_inner_product(to_element(sys, x), to_element(sys, y));
    });
}

sharp_status sharp_eigenvalues(const sharp_system* sys, const double* x,
                               double* eigenvalues_out) {
    if (auto s = require(sys && x && eigenvalues_out, "null argument")) return s;
    return guarded([&] { write_vector(eigenvalues_of(to_element(sys, x)), eigenvalues_out); });
}

sharp_status sharp_spectral_decompose(const sharp_system* sys, const double* x, double tol,
                                      double* eigenvalues_out, double* frame_out) {
    if (auto s = require(sys && x && eigenvalues_out && frame_out, "null argument")) return s;
    return guarded([&] {
        const auto sd = spectral_decompose(to_element(sys, x),
                                           tol > 0.0 ? tol : kDefaultTol);
        write_vector(sd.eigenvalues, eigenvalues_out);
        for (int i = 0; i < sys->impl.rank; ++i) {
            write_vector(sd.frame[i].coords,
                         frame_out + static_cast<std::size_t>(i) * sys->impl.dim);
        }
    });
}

sharp_status sharp_cone_contains(const sharp_system* sys, const double* x, double tol,
                                 int* out) {
    if (auto s = require(sys && x && out, "null argument")) return s;
    return guarded([&] {
        *out = cone_contains(to_element(sys, x), tol > 0.0 ? tol : kDefaultTol) ? 1 : 0;
    });
}

sharp_status sharp_operational_norm(const sharp_system* sys, const double* x, double* out) {
    if (auto s = require(sys && x && out, "null argument")) return s;
    return guarded([&] { *out = operational_norm(to_element(sys, x)); });
}

sharp_status sharp_dagger_norm(const sharp_system* sys, const double* x, double* out) {
    if (auto s = require(sys && x && out, "null argument")) return s;
    return guarded([&] { *out = dagger_norm(to_element(sys, x)); });
}

sharp_status sharp_impurity(const sharp_system* sys, const double* rho, double* out) {
    if (auto s = require(sys && rho && out, "null argument")) return s;
    return guarded([&] { *out = impurity(to_element(sys, rho)); });
}

sharp_status sharp_dagger_fidelity(const sharp_system* sys, const double* rho,
                                   const double* sigma, double* out) {
    if (auto s = require(sys && rho && sigma && out, "null argument")) return s;
    return guarded([&] {
        *out = dagger_fidelity(State{to_element(sys, rho)}, State{to_element(sys, sigma)});
    });
}

sharp_status sharp_random_frame(const sharp_system* sys, uint64_t seed, double* frame_out) {
    if (auto s = require(sys && frame_out, "null argument")) return s;
    return guarded([&] {
        const auto frame = random_frame(sys->impl, seed);
        for (int i = 0; i < sys->impl.rank; ++i) {
            write_vector(frame[i].coords,
                         frame_out + static_cast<std::size_t>(i) * sys->impl.dim);
        }
    });
}

sharp_status sharp_face_effect(const sharp_system* sys, const double* frame,
                               const int* subset, int subset_len, double* out) {
    if (auto s = require(sys && frame && out && (subset || subset_len == 0), "null argument")) {
        return s;
    }
    return guarded([&] {
        const std::vector<int> indices(subset, subset + subset_len);
        write_vector(face_effect(sys->impl, to_frame(sys, frame), indices).element.coords, out);
    });
}

sharp_status sharp_face_projector(const sharp_system* sys, const double* frame,
                                  const int* subset, int subset_len, double* matrix_out) {
    if (auto s =
            require(sys && frame && matrix_out && (subset || subset_len == 0), "null argument")) {
        return s;
    }
    return guarded([&] {
        const std::vector<int> indices(subset, subset + subset_len);
        const auto map = face_projector(sys->impl, to_frame(sys, frame), indices);
        for (int i = 0; i < sys->impl.dim; ++i) {
            for (int j = 0; j < sys->impl.dim; ++j) {
                matrix_out[static_cast<std::size_t>(i) * sys->impl.dim + j] = map.matrix(i, j);
            }
        }
    });
}

sharp_status sharp_slit_values(const sharp_system* sys, const double* frame,
                               const int* labels, int order, const double* rho,
                               const double* effect, double* values_out) {
    if (auto s = require(sys && frame && labels && rho && effect && values_out,
                         "null argument")) {
        return s;
    }
    return guarded([&] {
        const auto blocks = blocks_from_labels(sys, labels, order);
        const auto exp = make_experiment(sys->impl, to_frame(sys, frame), blocks,
                                         make_state(sys->impl, to_element(sys, rho)),
                                         make_effect(sys->impl, to_element(sys, effect)));
        const auto table = slit_values(exp);
        for (std::size_t k = 0; k < table.values.size(); ++k) values_out[k] = table.values[k];
    });
}

sharp_status sharp_sorkin_order(int order, const double* values, double* out) {
    if (auto s = require(values && out, "null argument")) return s;
    return guarded([&] {
        if (order < 1 || order > 16) {
            throw std::invalid_argument("order must lie in 1..16");
        }
        const std::size_t count = (1u << order) - 1u;
        const auto table = make_value_table(order, std::vector<double>(values, values + count));
        *out = sorkin_order(table, order);
    });
}

sharp_status sharp_sorkin_defect_norm(const sharp_system* sys, const double* frame,
                                      const int* labels, int order, double* out) {
    if (auto s = require(sys && frame && labels && out, "null argument")) return s;
    return guarded([&] {
        const auto blocks = blocks_from_labels(sys, labels, order);
        *out = sorkin_defect_norm(sys->impl, to_frame(sys, frame), blocks, order);
    });
}

sharp_status sharp_maximize_interference(const sharp_system* sys, int order, int trials,
                                         int iters, uint64_t seed, double* best_out,
                                         double* rho_out, double* effect_out,
                                         double* frame_out) {
    if (auto s = require(sys && best_out, "null argument")) return s;
    return guarded([&] {
        const auto result = maximize_interference(sys->impl, order, trials, iters, seed);
        *best_out = result.best;
        if (rho_out) write_vector(result.rho.element.coords, rho_out);
        if (effect_out) write_vector(result.effect.element.coords, effect_out);
        if (frame_out) {
            for (int i = 0; i < sys->impl.rank; ++i) {
                write_vector(result.frame[i].coords,
                             frame_out + static_cast<std::size_t>(i) * sys->impl.dim);
            }
        }
    });
}

sharp_status sharp_run_table(const char* table_json, int order, char** tsv_out) {
    if (auto s = require(table_json && tsv_out, "null argument")) return s;
    return guarded([&] {
        const ValueTable table = parse_value_table(table_json);
        if (order == 0) {
            *tsv_out = dup_string(emit_report(ValueTable{}, {}));
            return;
        }
        const int n = order < 0 ? table.order : order;
        const double value = sorkin_order(table, n);
        *tsv_out = dup_string(emit_report(table, {{n, value}}));
    });
}

sharp_status sharp_run_interference(const char* experiment_json, char** tsv_out) {
    if (auto s = require(experiment_json && tsv_out, "null argument")) return s;
    return guarded([&] {
        const auto exp = experiment_from(parse_experiment(experiment_json));
        const int n = static_cast<int>(exp.blocks.size());
        const auto report = interference_report(exp, n);
        std::vector<std::pair<int, double>> orders;
        for (int k = 1; k <= n; ++k) orders.emplace_back(k, report.orders[k - 1]);
        *tsv_out = dup_string(emit_report(report.table, orders));
    });
}

sharp_status sharp_run_scan(const char* theory_json, int order, int trials, int iters,
                            uint64_t seed, char** tsv_out, double* best_out) {
    if (auto s = require(theory_json && tsv_out, "null argument")) return s;
    return guarded([&] {
        const System sys = system_from(parse_theory(theory_json));
        const auto result = maximize_interference(sys, order, trials, iters, seed);
        if (best_out) *best_out = result.best;

        std::string out = "sup_abs_I_" + std::to_string(order) + "\t" +
                          format_value(result.best) + "\n";
        auto emit_row = [&out](const std::string& label, const Eigen::VectorXd& coords) {
            out += label;
            for (int i = 0; i < coords.size(); ++i) {
                out += '\t';
                out += format_value(coords(i));
            }
            out += '\n';
        };
        emit_row("rho", result.rho.element.coords);
        emit_row("effect", result.effect.element.coords);
        for (std::size_t i = 0; i < result.frame.size(); ++i) {
            emit_row("frame_" + std::to_string(i + 1), result.frame[i].coords);
        }
        *tsv_out = dup_string(out);
    });
}

sharp_status sharp_run_verify(const char* theory_json, uint64_t seed, double tol,
                              char** tsv_out, int* all_pass_out) {
    if (auto s = require(theory_json && tsv_out && all_pass_out, "null argument")) return s;
    return guarded([&] {
        const System sys = system_from(parse_theory(theory_json));
        SuiteConfig config;
        config.seed = seed;
        config.tol_override = tol;
        const auto results = run_verification_suite(sys, config);
        *tsv_out = dup_string(emit_suite_report(results));
        *all_pass_out = all_pass(results) ? 1 : 0;
    });
}

void sharp_string_free(char* text) { delete[] text; }

}  // extern "C"
