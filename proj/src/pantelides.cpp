#include "ddae/pantelides.hpp"

#include "ddae/shiftcore.hpp"

namespace ddae {

namespace {

ClassKey raised(ClassKey key, StepMode mode) {
    if (mode == StepMode::Shift)
        ++*key.shift;
    else
        ++*key.deriv;
    return key;
}

}  // namespace

std::size_t default_step_budget(const ClassGraph& g) { return 50 * (g.equations.size() + g.classes.size()); }

GraphView pruned_view(const System& sys, StepMode mode, RelationKind rel) {
    return prune_to_highest(build_graph(sys, rel),
                            mode == StepMode::Shift ? PruneMode::ShiftHighest : PruneMode::DiffHighest);
}

TypedOutcome pantelides_typed(const TypedRun& run) {
    TypedOutcome out{run.system, {}, std::vector<int>(run.system.size(), 0), 0};
    const std::size_t budget =
        run.step_budget ? run.step_budget : default_step_budget(build_graph(run.system, run.relation));

    for (std::size_t r = 0; r < out.system.size(); ++r) {
        while (true) {
            GraphView view = pruned_view(out.system, run.mode, run.relation);
            ColorState colors = ColorState::fresh(view.graph);
            if (augment_path(view, r, out.matching, colors)) break;
            if (++out.failed_searches > budget) throw StepBudgetExceeded(budget);

            if (run.mode == StepMode::Shift) {
                std::vector<int> extra = diff_during_shift(out.system, view, out.matching, r);
                for (std::size_t e = 0; e < extra.size(); ++e) {
                    out.system = apply_diff(out.system, e, extra[e]);
                    out.diffs_during_shift[e] += extra[e];
                }
            }
            for (std::size_t e : colors.colored_equations())
                out.system = run.mode == StepMode::Shift ? apply_shift(out.system, e, 1) : apply_diff(out.system, e, 1);

            std::vector<std::pair<ClassKey, std::size_t>> moved;
            for (std::size_t c : colors.colored_classes()) {
                const ClassKey& key = view.graph.classes[c];
                if (auto owner = out.matching.equation_of(key)) moved.emplace_back(raised(key, run.mode), *owner);
            }
            for (std::size_t c : colors.colored_classes()) out.matching.unassign(view.graph.classes[c]);
            for (const auto& [key, eq] : moved) out.matching.assign(key, eq);
        }
    }
    return out;
}

TypedOutcome pantelides_dae(const System& sys, std::size_t budget) {
    for (const Equation& eq : sys.equations())
        for (const VarOcc& v : eq.occs)
            if (v.shift != 0)
                throw DelayedOccurrencePresent("equation " + eq.ref.name + " contains the shifted term " +
                                               term_string(v));
    return pantelides_typed(TypedRun{StepMode::Dif, RelationKind::Trivial, sys, budget});
}

}  // namespace ddae
