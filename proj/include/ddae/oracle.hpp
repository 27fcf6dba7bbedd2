#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ddae/bigraph.hpp"

namespace ddae {

/// Brute-force checks enumerate subsets, so they refuse large systems.
inline constexpr std::size_t kOracleMaxEquations = 20;

class TooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

struct SubsetWitness {
    std::vector<std::size_t> equations;  // ascending positions
    std::size_t class_count = 0;
    std::size_t equation_count = 0;
};

/// Number of classes among the occurrences of the given equations.
std::size_t class_count(const System& sys, RelationKind rel, const std::vector<std::size_t>& subset);

/// Smallest (then lexicographically first) set of equations outnumbering the
/// classes of its own occurrences, or nullopt if none exists.
std::optional<SubsetWitness> brute_singular(const System& sys, RelationKind rel);

/// True iff `subset` is singular and no proper nonempty subset is.
bool is_mss(const System& sys, RelationKind rel, const std::vector<std::size_t>& subset);

/// Copy of `sys` keeping only occurrences whose class is active in `view`.
System restrict_to_view(const System& sys, const GraphView& view);

}  // namespace ddae
