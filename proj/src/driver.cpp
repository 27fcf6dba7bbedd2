#include "ddae/driver.hpp"

#include <variant>

#include "ddae/pantelides.hpp"

namespace ddae {

const char* to_string(Status s) {
    switch (s) {
    case Status::Ok: return "ok";
    case Status::StructurallySingular: return "structurally_singular";
    case Status::StepBudgetExceeded: return "step_budget_exceeded";
    }
    return "?";
}

std::optional<std::vector<std::size_t>> precheck(const System& sys, RelationKind rel) {
    auto res = saturating_matching(build_graph(sys, rel));
    if (auto* w = std::get_if<Witness>(&res)) return w->equations;
    return std::nullopt;
}

namespace {

void emit(const AnalysisOptions& opts, const std::string& stage, const GraphView& view, const Matching* m = nullptr) {
    if (opts.on_stage) opts.on_stage(stage, view, m);
}

void summarize_equations(AnalysisResult& res, const System& sys) {
    res.equations.clear();
    for (const Equation& eq : sys.equations())
        res.equations.push_back({eq.ref.name, eq.ref.shift_count, eq.ref.diff_count});
}

std::vector<AssignmentSummary> summarize(const Matching& m, const System& sys) {
    std::vector<AssignmentSummary> out;
    for (const auto& [key, eq] : m.pairs()) out.push_back({class_label(key), sys[eq].ref.name});
    return out;
}

AnalysisResult singular(const System& sys, const std::vector<std::size_t>& witness) {
    AnalysisResult res;
    res.status = Status::StructurallySingular;
    res.system = sys;
    summarize_equations(res, sys);
    for (std::size_t e : witness) res.witness.push_back(sys[e].ref.name);
    return res;
}

AnalysisResult out_of_budget(const System& sys, const std::string& step, const StepBudgetExceeded& err) {
    AnalysisResult res;
    res.status = Status::StepBudgetExceeded;
    res.system = sys;
    res.detail = step + ": " + err.what();
    summarize_equations(res, sys);
    return res;
}

}  // namespace

AnalysisResult analyze_ddae(const System& sys, const AnalysisOptions& opts) {
    emit(opts, "00-input", full_view(build_graph(sys, RelationKind::Trivial)));
    if (auto w = precheck(sys, RelationKind::EqualDDAE)) return singular(sys, *w);

    emit(opts, "10-shiftgraph", pruned_view(sys, StepMode::Shift, RelationKind::ShiftSimilar));
    TypedOutcome shifted;
    try {
        shifted = pantelides_typed(TypedRun{StepMode::Shift, RelationKind::ShiftSimilar, sys, opts.step_budget});
    } catch (const StepBudgetExceeded& err) {
        return out_of_budget(sys, "shifting step", err);
    }
    emit(opts, "20-postshift", pruned_view(shifted.system, StepMode::Shift, RelationKind::ShiftSimilar),
         &shifted.matching);

    Linearized lin = trimmed_linearization(shifted.system, opts.linearization);
    emit(opts, "30-linearized", full_view(build_graph(lin.system, RelationKind::Trivial)));
    emit(opts, "40-diffgraph", pruned_view(lin.system, StepMode::Dif, RelationKind::DiffSimilar));

    TypedOutcome diffed;
    try {
        diffed = pantelides_typed(TypedRun{StepMode::Dif, RelationKind::DiffSimilar, lin.system, opts.step_budget});
    } catch (const StepBudgetExceeded& err) {
        return out_of_budget(lin.system, "differentiation step", err);
    }
    emit(opts, "50-final", pruned_view(diffed.system, StepMode::Dif, RelationKind::DiffSimilar), &diffed.matching);

    AnalysisResult res;
    res.system = diffed.system;
    res.shift_matching = shifted.matching;
    res.diff_matching = diffed.matching;
    summarize_equations(res, res.system);
    for (const LinearizationAddition& add : lin.additions) {
        const EqRef& chain = res.system[add.equation].ref;
        VarOcc replaced = add.order == 1 ? VarOcc(add.base, 1) : VarOcc(add.new_var - 1, 1);
        res.linearization.push_back({"x" + std::to_string(add.new_var), term_string(replaced), chain.shift_count,
                                     chain.diff_count});
    }
    res.assignment_shift = summarize(shifted.matching, res.system);
    res.assignment_diff = summarize(diffed.matching, res.system);
    return res;
}

AnalysisResult analyze_dae(const System& sys, const AnalysisOptions& opts) {
    for (const Equation& eq : sys.equations())
        for (const VarOcc& v : eq.occs)
            if (v.shift != 0)
                throw DelayedOccurrencePresent("equation " + eq.ref.name + " contains the shifted term " +
                                               term_string(v));
    emit(opts, "00-input", full_view(build_graph(sys, RelationKind::Trivial)));
    if (auto w = precheck(sys, RelationKind::EqualDAE)) return singular(sys, *w);

    emit(opts, "40-diffgraph", pruned_view(sys, StepMode::Dif, RelationKind::Trivial));
    TypedOutcome diffed;
    try {
        diffed = pantelides_dae(sys, opts.step_budget);
    } catch (const StepBudgetExceeded& err) {
        return out_of_budget(sys, "differentiation step", err);
    }
    emit(opts, "50-final", pruned_view(diffed.system, StepMode::Dif, RelationKind::Trivial), &diffed.matching);

    AnalysisResult res;
    res.system = diffed.system;
    res.diff_matching = diffed.matching;
    summarize_equations(res, res.system);
    res.assignment_diff = summarize(diffed.matching, res.system);
    return res;
}

}  // namespace ddae
