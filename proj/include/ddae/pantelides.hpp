#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ddae/bigraph.hpp"
#include "ddae/matching.hpp"

namespace ddae {

/// The loop kept failing past its step budget. With a passing precheck this
/// indicates an internal error rather than a property of the input.
class StepBudgetExceeded : public std::runtime_error {
public:
    explicit StepBudgetExceeded(std::size_t budget)
        : std::runtime_error("step budget of " + std::to_string(budget) + " failed searches exhausted"),
          budget(budget) {}
    std::size_t budget;
};

class DelayedOccurrencePresent : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class StepMode { Shift, Dif };

struct TypedRun {
    StepMode mode = StepMode::Dif;
    RelationKind relation = RelationKind::DiffSimilar;  // ShiftSimilar for shift mode
    System system;
    std::size_t step_budget = 0;  // 0 selects default_step_budget
};

struct TypedOutcome {
    System system;
    Matching matching;
    std::vector<int> diffs_during_shift;  // per equation, shift mode only
    std::size_t failed_searches = 0;
};

/// 50 * (equations + classes) of the graph the run starts from.
std::size_t default_step_budget(const ClassGraph& g);

/// For each equation in order, repeatedly prune, search for an augmenting
/// path and, on failure, shift or differentiate every colored equation once
/// and move the colored classes' assignments one level up. In shift mode the
/// differentiation counts from the connections are applied first.
/// Throws StepBudgetExceeded.
TypedOutcome pantelides_typed(const TypedRun& run);

/// Differentiation-only loop on the occurrence graph of a system without
/// delays. Throws DelayedOccurrencePresent if any shift is nonzero.
TypedOutcome pantelides_dae(const System& sys, std::size_t budget = 0);

/// The graph, pruned to highest vertices, that the loop matches against.
GraphView pruned_view(const System& sys, StepMode mode, RelationKind rel);

}  // namespace ddae
