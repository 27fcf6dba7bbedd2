#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ddae/model.hpp"

namespace ddae {

/// Bipartite graph between the equations of a system and the equivalence
/// classes of their occurrences. Classes are sorted ascending; each
/// equation's adjacency list is sorted by class position.
struct ClassGraph {
    RelationKind relation = RelationKind::Trivial;
    std::vector<EqRef> equations;
    std::vector<ClassKey> classes;
    std::vector<std::vector<std::size_t>> adjacency;

    /// Position of `key` in `classes`, or classes.size() if absent.
    std::size_t find_class(const ClassKey& key) const;
    bool has_edge(std::size_t eq, std::size_t cls) const;
    /// All (equation, class) pairs in iteration order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

ClassGraph build_graph(const System& sys, RelationKind rel);

enum class PruneMode { DiffHighest, ShiftHighest };

/// A graph with some classes switched off. Edges to inactive classes are
/// inactive.
struct GraphView {
    ClassGraph graph;
    std::vector<bool> active;  // per class

    std::size_t active_count() const;
    bool active_edge(std::size_t eq, std::size_t cls) const {
        return active[cls] && graph.has_edge(eq, cls);
    }
    friend bool operator==(const GraphView& a, const GraphView& b) {
        return a.active == b.active && a.graph.classes == b.graph.classes &&
               a.graph.adjacency == b.graph.adjacency;
    }
};

GraphView full_view(const ClassGraph& g);

/// DiffHighest keeps, per base and shift, only the classes of highest
/// derivative order; it needs keys carrying a derivative order (Trivial or
/// DiffSimilar). ShiftHighest keeps, per base, only the class of highest
/// shift and additionally drops every negative-shift class; it needs
/// ShiftSimilar keys. Throws std::invalid_argument otherwise.
GraphView prune_to_highest(const ClassGraph& g, PruneMode mode);

/// Same rule applied on top of an existing view: only classes already
/// active may stay active.
GraphView prune_to_highest(const GraphView& v, PruneMode mode);

/// Order-independent encoding of a system's shifting graph with equations
/// identified by position and derivative levels erased.
struct ShiftSignature {
    std::vector<std::pair<int, int>> classes;                  // (base, shift)
    std::vector<std::vector<std::pair<int, int>>> neighbours;  // per equation

    friend bool operator==(const ShiftSignature&, const ShiftSignature&) = default;
};

ShiftSignature shift_graph_signature(const System& sys);

/// Graphviz rendering. Inactive classes are grey, matched edges bold.
/// `matched` lists (class, equation) pairs to highlight.
std::string to_dot(const GraphView& v, const std::vector<std::pair<std::size_t, std::size_t>>& matched = {});

}  // namespace ddae
