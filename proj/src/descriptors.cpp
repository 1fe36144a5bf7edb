#include "sharpgpt/descriptors.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace sharpgpt {
namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const char* what) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) {
            throw ParseError(std::string(what) + ": unknown field \"" + key + "\"");
        }
    }
}

std::uint64_t read_seed(const json& obj) {
    const auto& s = obj.at("seed");
    if (!s.is_number_unsigned()) {
        throw ParseError("seed must be a non-negative integer");
    }
    return s.get<std::uint64_t>();
}

int read_size(const json& obj, const char* key, const char* what) {
    if (!obj.contains(key)) {
        throw ParseError(std::string(what) + ": missing size field \"" + key + "\"");
    }
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) {
        throw ParseError(std::string(what) + ": field \"" + key + "\" must be an integer");
    }
    return v.get<int>();
}

TheoryDescriptor theory_from_json(const json& obj) {
    if (!obj.is_object()) {
        throw ParseError("parse_theory: expected a JSON object");
    }
    if (!obj.contains("kind") || !obj.at("kind").is_string()) {
        throw ParseError("parse_theory: missing string field \"kind\"");
    }
    const std::string kind_name = obj.at("kind").get<std::string>();

    TheoryDescriptor out;
    try {
        if (kind_name == "classical") {
            reject_unknown_fields(obj, {"kind", "d", "seed"}, "parse_theory");
            out.kind = AlgebraKind::classical(read_size(obj, "d", "parse_theory"));
        } else if (kind_name == "real_symmetric") {
            reject_unknown_fields(obj, {"kind", "n", "seed"}, "parse_theory");
            out.kind = AlgebraKind::real_symmetric(read_size(obj, "n", "parse_theory"));
        } else if (kind_name == "complex_hermitian") {
            reject_unknown_fields(obj, {"kind", "n", "seed"}, "parse_theory");
            out.kind = AlgebraKind::complex_hermitian(read_size(obj, "n", "parse_theory"));
        } else if (kind_name == "quaternionic_hermitian") {
            reject_unknown_fields(obj, {"kind", "n", "seed"}, "parse_theory");
            out.kind = AlgebraKind::quaternionic_hermitian(read_size(obj, "n", "parse_theory"));
        } else if (kind_name == "spin_factor") {
            reject_unknown_fields(obj, {"kind", "m", "seed"}, "parse_theory");
            out.kind = AlgebraKind::spin_factor(read_size(obj, "m", "parse_theory"));
        } else {
            throw ParseError("parse_theory: unsupported kind \"" + kind_name + "\"");
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        // size constraints from the kind constructors
        throw ParseError(std::string("parse_theory: ") + e.what());
    }

    if (out.kind.rank() > 8) {
        throw ParseError("parse_theory: rank " + std::to_string(out.kind.rank()) +
                         " exceeds the supported limit of 8");
    }
    if (out.kind.family == Family::SpinFactor && out.kind.dim() > 16) {
        throw ParseError("parse_theory: spin ambient dimension " +
                         std::to_string(out.kind.dim()) + " exceeds the supported limit of 16");
    }
    if (obj.contains("seed")) out.seed = read_seed(obj);
    return out;
}

Eigen::VectorXd read_coords(const json& arr, int expected, const char* field) {
    if (!arr.is_array()) {
        throw ParseError(std::string("parse_experiment: field \"") + field +
                         "\" must be an array of numbers");
    }
    if (static_cast<int>(arr.size()) != expected) {
        throw ParseError(std::string("parse_experiment: field \"") + field +
                         "\" must hold " + std::to_string(expected) + " numbers");
    }
    Eigen::VectorXd c(expected);
    int i = 0;
    for (const auto& v : arr) {
        if (!v.is_number()) {
            throw ParseError(std::string("parse_experiment: field \"") + field +
                             "\" must hold numbers only");
        }
        c(i++) = v.get<double>();
    }
    return c;
}

}  // namespace

TheoryDescriptor parse_theory(const std::string& text) {
    return theory_from_json(parse_json(text, "parse_theory"));
}

ExperimentDescriptor parse_experiment(const std::string& text) {
    const json obj = parse_json(text, "parse_experiment");
    if (!obj.is_object()) {
        throw ParseError("parse_experiment: expected a JSON object");
    }
    reject_unknown_fields(obj, {"theory", "blocks", "state", "effect", "seed", "order"},
                          "parse_experiment");
    if (!obj.contains("theory")) {
        throw ParseError("parse_experiment: missing field \"theory\"");
    }
    if (!obj.contains("blocks")) {
        throw ParseError("parse_experiment: missing field \"blocks\"");
    }

    ExperimentDescriptor out;
    out.theory = theory_from_json(obj.at("theory"));
    const int rank = out.theory.kind.rank();
    const int dim = out.theory.kind.dim();

    const auto& blocks = obj.at("blocks");
    if (!blocks.is_array() || blocks.empty()) {
        throw ParseError("parse_experiment: \"blocks\" must be a non-empty array");
    }
    if (blocks.size() > 9) {
        throw ParseError("parse_experiment: at most 9 slit blocks are supported");
    }
    std::set<int> used;
    for (const auto& block : blocks) {
        if (!block.is_array() || block.empty()) {
            throw ParseError("parse_experiment: each block must be a non-empty array");
        }
        std::vector<int> indices;
        for (const auto& v : block) {
            if (!v.is_number_integer()) {
                throw ParseError("parse_experiment: block entries must be integers");
            }
            const int one_based = v.get<int>();
            if (one_based < 1 || one_based > rank) {
                throw ParseError("parse_experiment: frame index " + std::to_string(one_based) +
                                 " is outside 1.." + std::to_string(rank));
            }
            if (!used.insert(one_based).second) {
                throw ParseError("parse_experiment: frame index " + std::to_string(one_based) +
                                 " appears in two blocks");
            }
            indices.push_back(one_based - 1);
        }
        out.blocks.push_back(std::move(indices));
    }

    if (obj.contains("state")) out.state_coords = read_coords(obj.at("state"), dim, "state");
    if (obj.contains("effect")) out.effect_coords = read_coords(obj.at("effect"), dim, "effect");
    if (obj.contains("seed")) out.seed = read_seed(obj);

    out.order = static_cast<int>(out.blocks.size());
    if (obj.contains("order")) {
        const auto& v = obj.at("order");
        if (!v.is_number_integer() || v.get<int>() != out.order) {
            throw ParseError(
                "parse_experiment: \"order\" must equal the number of blocks");
        }
    }
    return out;
}

ValueTable parse_value_table(const std::string& text) {
    const json obj = parse_json(text, "parse_table");
    if (!obj.is_object()) {
        throw ParseError("parse_table: expected a JSON object");
    }
    reject_unknown_fields(obj, {"n", "values"}, "parse_table");
    if (!obj.contains("n") || !obj.at("n").is_number_integer()) {
        throw ParseError("parse_table: missing integer field \"n\"");
    }
    const int n = obj.at("n").get<int>();
    if (n < 1 || n > 9) {
        throw ParseError("parse_table: order must lie in 1..9");
    }
    if (!obj.contains("values") || !obj.at("values").is_object()) {
        throw ParseError("parse_table: missing object field \"values\"");
    }

    const unsigned full = (1u << n) - 1u;
    std::vector<double> values(full);
    std::vector<bool> seen(full, false);
    for (const auto& [key, value] : obj.at("values").items()) {
        unsigned mask = 0;
        int prev = 0;
        for (char ch : key) {
            const int digit = ch - '0';
            if (digit < 1 || digit > n || digit <= prev) {
                throw ParseError("parse_table: bad subset key \"" + key + "\"");
            }
            mask |= 1u << (digit - 1);
            prev = digit;
        }
        if (mask == 0) {
            throw ParseError("parse_table: empty subset key");
        }
        if (!value.is_number()) {
            throw ParseError("parse_table: value for \"" + key + "\" must be a number");
        }
        values[mask - 1] = value.get<double>();
        seen[mask - 1] = true;
    }
    for (unsigned mask = 1; mask <= full; ++mask) {
        if (!seen[mask - 1]) {
            throw ParseError("parse_table: missing subset entry \"" + subset_key(mask, n) + "\"");
        }
    }
    return make_value_table(n, std::move(values));
}

System system_from(const TheoryDescriptor& descriptor) {
    return make_system(descriptor.kind);
}

std::vector<JordanElement> canonical_frame(const System& sys) {
    std::vector<JordanElement> frame;
    frame.reserve(sys.rank);
    switch (sys.kind.family) {
        case Family::Classical:
        case Family::RealSymmetric:
        case Family::ComplexHermitian:
        case Family::QuaternionicHermitian:
            // the first rank coordinates are the diagonal entries
            for (int i = 0; i < sys.rank; ++i) frame.push_back(basis_element(sys.kind, i));
            break;
        case Family::SpinFactor: {
            Eigen::VectorXd p = Eigen::VectorXd::Zero(sys.dim);
            p(0) = 0.5;
            p(1) = 0.5;
            Eigen::VectorXd q = Eigen::VectorXd::Zero(sys.dim);
            q(0) = 0.5;
            q(1) = -0.5;
            frame.push_back({sys.kind, std::move(p)});
            frame.push_back({sys.kind, std::move(q)});
            break;
        }
    }
    return frame;
}

SlitExperiment experiment_from(const ExperimentDescriptor& descriptor) {
    const System sys = system_from(descriptor.theory);

    std::vector<JordanElement> frame;
    Rng rng(descriptor.seed.value_or(0));
    if (descriptor.seed.has_value()) {
        frame = random_frame(sys, rng);
    } else {
        frame = canonical_frame(sys);
    }

    State rho = descriptor.state_coords
                    ? make_state(sys, make_element(sys.kind, *descriptor.state_coords))
                    : random_state(sys, rng);
    Effect effect = descriptor.effect_coords
                        ? make_effect(sys, make_element(sys.kind, *descriptor.effect_coords))
                        : random_effect(sys, rng);

    return make_experiment(sys, std::move(frame), descriptor.blocks, std::move(rho),
                           std::move(effect));
}

std::string subset_key(unsigned mask, int order) {
    std::string key;
    for (int i = 0; i < order; ++i) {
        if (mask & (1u << i)) key += static_cast<char>('1' + i);
    }
    return key;
}

std::string format_value(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    if (std::string_view(buf) == "-0.000000000000") {
        return "0.000000000000";
    }
    return buf;
}

std::string emit_report(const ValueTable& table,
                        const std::vector<std::pair<int, double>>& orders) {
    std::string out = "subset\tv\n";

    const unsigned full = table.order > 0 ? (1u << table.order) - 1u : 0u;
    std::vector<std::pair<std::string, unsigned>> keys;
    keys.reserve(full);
    for (unsigned mask = 1; mask <= full; ++mask) {
        keys.emplace_back(subset_key(mask, table.order), mask);
    }
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });

    for (const auto& [key, mask] : keys) {
        out += key;
        out += '\t';
        out += format_value(table.value(mask));
        out += '\n';
    }
    for (const auto& [order, value] : orders) {
        out += "I_" + std::to_string(order);
        out += '\t';
        out += format_value(value);
        out += '\n';
    }
    return out;
}

}  // namespace sharpgpt
