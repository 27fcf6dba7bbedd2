#include "ddae/matching.hpp"

#include <stdexcept>

namespace ddae {

void Matching::assign(const ClassKey& cls, std::size_t eq) {
    if (by_class_.count(cls) || by_eq_.count(eq)) throw std::logic_error("matching must stay injective");
    by_class_.emplace(cls, eq);
    by_eq_.emplace(eq, cls);
}

void Matching::unassign(const ClassKey& cls) {
    auto it = by_class_.find(cls);
    if (it == by_class_.end()) return;
    by_eq_.erase(it->second);
    by_class_.erase(it);
}

std::optional<std::size_t> Matching::equation_of(const ClassKey& cls) const {
    auto it = by_class_.find(cls);
    if (it == by_class_.end()) return std::nullopt;
    return it->second;
}

std::optional<ClassKey> Matching::class_of_equation(std::size_t eq) const {
    auto it = by_eq_.find(eq);
    if (it == by_eq_.end()) return std::nullopt;
    return it->second;
}

namespace {

std::vector<std::size_t> set_positions(const std::vector<bool>& marks) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < marks.size(); ++i)
        if (marks[i]) out.push_back(i);
    return out;
}

bool search(const GraphView& view, std::size_t eq, Matching& m, ColorState& colors) {
    const ClassGraph& g = view.graph;
    colors.equations[eq] = true;
    for (std::size_t c : g.adjacency[eq]) {
        if (!view.active[c] || colors.classes[c]) continue;
        colors.classes[c] = true;
        const ClassKey& key = g.classes[c];
        auto owner = m.equation_of(key);
        if (!owner || search(view, *owner, m, colors)) {
            // Flip: the previous owner, if any, has already moved on.
            m.unassign(key);
            if (auto old = m.class_of_equation(eq)) m.unassign(*old);
            m.assign(key, eq);
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<std::size_t> ColorState::colored_equations() const { return set_positions(equations); }
std::vector<std::size_t> ColorState::colored_classes() const { return set_positions(classes); }

bool augment_path(const GraphView& view, std::size_t start, Matching& m, ColorState& colors) {
    if (start >= view.graph.equations.size()) throw std::out_of_range("start equation out of range");
    if (m.covers(start)) throw std::logic_error("start equation is already matched");
    return search(view, start, m, colors);
}

std::vector<std::pair<std::size_t, std::size_t>> matched_positions(const ClassGraph& g, const Matching& m) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [key, eq] : m.pairs()) {
        std::size_t c = g.find_class(key);
        if (c < g.classes.size()) out.emplace_back(c, eq);
    }
    return out;
}

std::variant<Matching, Witness> saturating_matching(const ClassGraph& g) {
    GraphView view = full_view(g);
    Matching m;
    for (std::size_t e = 0; e < g.equations.size(); ++e) {
        ColorState colors = ColorState::fresh(g);
        if (!augment_path(view, e, m, colors)) return Witness{colors.colored_equations()};
    }
    return m;
}

}  // namespace ddae
