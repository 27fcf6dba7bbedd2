#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ddae/bigraph.hpp"
#include "ddae/matching.hpp"
#include "ddae/shiftcore.hpp"

namespace ddae {

enum class Status { Ok, StructurallySingular, StepBudgetExceeded };

const char* to_string(Status s);

struct EquationSummary {
    std::string name;
    int shift = 0;
    int diff = 0;
};

struct LinearizationSummary {
    std::string new_var;  // e.g. "x5"
    std::string couples;  // the derivative it replaces, e.g. "x1'"
    int shift = 0;        // final counters of the coupling equation
    int diff = 0;
};

struct AssignmentSummary {
    std::string cls;
    std::string eq;
};

struct AnalysisResult {
    Status status = Status::Ok;
    std::vector<EquationSummary> equations;
    std::vector<LinearizationSummary> linearization;
    std::vector<AssignmentSummary> assignment_shift;
    std::vector<AssignmentSummary> assignment_diff;
    std::vector<std::string> witness;  // set iff structurally singular
    std::string detail;                // which step ran out of budget
    System system;                     // final system
    Matching shift_matching;
    Matching diff_matching;
};

/// Called with a stage name ("00-input", "10-shiftgraph", ...), the graph
/// of that stage and, once a step has finished, its matching.
using StageHook = std::function<void(const std::string& stage, const GraphView& view, const Matching* m)>;

struct AnalysisOptions {
    std::size_t step_budget = 0;  // per step; 0 selects the default
    LinearizationStyle linearization = LinearizationStyle::Full;
    StageHook on_stage;
};

/// Witness equations if the system has no equation-saturating matching
/// under `rel`, nullopt otherwise.
std::optional<std::vector<std::size_t>> precheck(const System& sys, RelationKind rel);

/// Shifting step, trimmed linearization, then differentiation step.
AnalysisResult analyze_ddae(const System& sys, const AnalysisOptions& opts = {});

/// Differentiation-only analysis. Throws DelayedOccurrencePresent if any
/// occurrence is shifted.
AnalysisResult analyze_dae(const System& sys, const AnalysisOptions& opts = {});

}  // namespace ddae
