#pragma once

#include "sharpgpt/interference.hpp"
#include "sharpgpt/system.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sharpgpt {

// Malformed descriptor text or schema violation; carries the offending field.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parsed form of a theory JSON file: {"kind": <name>, "d"|"n"|"m": <size>,
// "seed"?: <unsigned>}. The size key matches the kind (d for classical, n for
// the matrix kinds, m for spin factors).
struct TheoryDescriptor {
    AlgebraKind kind;
    std::uint64_t seed = 0;
};

// Parsed form of an experiment JSON file:
//   {"theory": {...}, "blocks": [[1,2],[3]], "state"?: [..], "effect"?: [..],
//    "seed"?: <unsigned>, "order"?: <int>}
// Block indices are 1-based in the file and 0-based here. When "seed" is
// present the frame (and any missing state/effect) is drawn from it;
// otherwise the canonical diagonal frame is used and missing state/effect
// fall back to seed 0.
struct ExperimentDescriptor {
    TheoryDescriptor theory;
    std::vector<std::vector<int>> blocks;
    std::optional<Eigen::VectorXd> state_coords;
    std::optional<Eigen::VectorXd> effect_coords;
    std::optional<std::uint64_t> seed;
    int order = 0;
};

// All parsers reject unknown fields and throw std::invalid_argument with the
// offending field in the message. Descriptor limits: rank <= 8, spin ambient
// dimension <= 16, slit count <= 9 (subset keys are digit strings).
TheoryDescriptor parse_theory(const std::string& text);
ExperimentDescriptor parse_experiment(const std::string& text);

// {"n": <order>, "values": {"1": v, "2": v, ..., "12": v, ...}} with all
// 2^n - 1 ascending-digit subset keys present.
ValueTable parse_value_table(const std::string& text);

System system_from(const TheoryDescriptor& descriptor);
SlitExperiment experiment_from(const ExperimentDescriptor& descriptor);

// The diagonal frame: standard basis (classical), E_ii (matrix kinds),
// (1, +-e_1)/2 (spin factors).
std::vector<JordanElement> canonical_frame(const System& sys);

// Subset key for a label mask: set bits as ascending 1-based digits.
std::string subset_key(unsigned mask, int order);

// Fixed-point decimal with 12 digits, negative zero normalized.
std::string format_value(double v);

// TSV report: header line "subset<TAB>v", one row per subset ordered by size
// then lexicographically, then one "I_<k><TAB><value>" row per entry of
// `orders`. Every row ends with a newline.
std::string emit_report(const ValueTable& table,
                        const std::vector<std::pair<int, double>>& orders);

}  // namespace sharpgpt
