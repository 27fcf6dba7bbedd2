#include "ddae/bigraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ddae {

std::size_t ClassGraph::find_class(const ClassKey& key) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), key);
    if (it == classes.end() || *it != key) return classes.size();
    return static_cast<std::size_t>(it - classes.begin());
}

bool ClassGraph::has_edge(std::size_t eq, std::size_t cls) const {
    const auto& adj = adjacency.at(eq);
    return std::binary_search(adj.begin(), adj.end(), cls);
}

std::vector<std::pair<std::size_t, std::size_t>> ClassGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t e = 0; e < adjacency.size(); ++e)
        for (std::size_t c : adjacency[e]) out.emplace_back(e, c);
    return out;
}

ClassGraph build_graph(const System& sys, RelationKind rel) {
    ClassGraph g;
    g.relation = rel;
    std::set<ClassKey> keys;
    for (const Equation& eq : sys.equations()) {
        g.equations.push_back(eq.ref);
        for (const VarOcc& v : eq.occs)
            if (auto k = class_of(rel, v)) keys.insert(*k);
    }
    g.classes.assign(keys.begin(), keys.end());
    g.adjacency.resize(sys.size());
    for (std::size_t e = 0; e < sys.size(); ++e) {
        auto& adj = g.adjacency[e];
        for (const VarOcc& v : sys[e].occs)
            if (auto k = class_of(rel, v)) adj.push_back(g.find_class(*k));
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return g;
}

std::size_t GraphView::active_count() const {
    return static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
}

GraphView full_view(const ClassGraph& g) { return GraphView{g, std::vector<bool>(g.classes.size(), true)}; }

GraphView prune_to_highest(const GraphView& v, PruneMode mode) {
    const ClassGraph& g = v.graph;
    GraphView out = v;
    if (mode == PruneMode::DiffHighest) {
        if (g.relation != RelationKind::Trivial && g.relation != RelationKind::DiffSimilar)
            throw std::invalid_argument("derivative pruning needs derivative-carrying classes");
        std::map<std::pair<int, std::optional<int>>, int> top;
        for (const ClassKey& k : g.classes) {
            auto [it, fresh] = top.try_emplace({k.base, k.shift}, *k.deriv);
            if (!fresh) it->second = std::max(it->second, *k.deriv);
        }
        for (std::size_t c = 0; c < g.classes.size(); ++c) {
            const ClassKey& k = g.classes[c];
            if (*k.deriv < top.at({k.base, k.shift})) out.active[c] = false;
        }
    } else {
        if (g.relation != RelationKind::ShiftSimilar)
            throw std::invalid_argument("shift pruning needs shift-similar classes");
        std::map<int, int> top;
        for (const ClassKey& k : g.classes) {
            auto [it, fresh] = top.try_emplace(k.base, *k.shift);
            if (!fresh) it->second = std::max(it->second, *k.shift);
        }
        for (std::size_t c = 0; c < g.classes.size(); ++c) {
            const ClassKey& k = g.classes[c];
            if (*k.shift < 0 || *k.shift < top.at(k.base)) out.active[c] = false;
        }
    }
    return out;
}

GraphView prune_to_highest(const ClassGraph& g, PruneMode mode) { return prune_to_highest(full_view(g), mode); }

ShiftSignature shift_graph_signature(const System& sys) {
    ClassGraph g = build_graph(sys, RelationKind::ShiftSimilar);
    ShiftSignature sig;
    for (const ClassKey& k : g.classes) sig.classes.emplace_back(k.base, *k.shift);
    for (const auto& adj : g.adjacency) {
        auto& row = sig.neighbours.emplace_back();
        for (std::size_t c : adj) row.emplace_back(g.classes[c].base, *g.classes[c].shift);
    }
    return sig;
}

std::string to_dot(const GraphView& v, const std::vector<std::pair<std::size_t, std::size_t>>& matched) {
    const ClassGraph& g = v.graph;
    std::set<std::pair<std::size_t, std::size_t>> bold;  // (eq, class)
    for (auto [c, e] : matched) bold.emplace(e, c);

    std::ostringstream os;
    os << "graph G {\n  rankdir=LR;\n";
    for (std::size_t e = 0; e < g.equations.size(); ++e)
        os << "  e" << e << " [shape=box,label=\"" << g.equations[e].name << "\"];\n";
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
        os << "  v" << c << " [shape=ellipse,label=\"" << class_label(g.classes[c]) << "\"";
        if (!v.active[c]) os << ",color=gray,fontcolor=gray,style=dashed";
        os << "];\n";
    }
    for (auto [e, c] : g.edges()) {
        os << "  e" << e << " -- v" << c;
        if (bold.count({e, c}))
            os << " [color=blue,penwidth=2.5]";
        else if (!v.active[c])
            os << " [color=gray,style=dotted]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace ddae
