#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "ddae/bigraph.hpp"

namespace ddae {

/// Injective partial map from classes to equations (0-based positions).
/// Keys are class keys rather than graph positions so a matching survives
/// rebuilding the graph after an update.
class Matching {
public:
    /// Throws std::logic_error if either side is already taken.
    void assign(const ClassKey& cls, std::size_t eq);
    void unassign(const ClassKey& cls);

    std::optional<std::size_t> equation_of(const ClassKey& cls) const;
    std::optional<ClassKey> class_of_equation(std::size_t eq) const;
    bool covers(std::size_t eq) const { return by_eq_.count(eq) != 0; }

    std::size_t size() const { return by_class_.size(); }
    const std::map<ClassKey, std::size_t>& pairs() const { return by_class_; }

    friend bool operator==(const Matching& a, const Matching& b) { return a.by_class_ == b.by_class_; }

private:
    std::map<ClassKey, std::size_t> by_class_;
    std::map<std::size_t, ClassKey> by_eq_;
};

/// Visit marks of one augmenting-path search, indexed by graph position.
struct ColorState {
    std::vector<bool> classes;
    std::vector<bool> equations;

    static ColorState fresh(const ClassGraph& g) {
        return {std::vector<bool>(g.classes.size(), false), std::vector<bool>(g.equations.size(), false)};
    }
    std::vector<std::size_t> colored_equations() const;
    std::vector<std::size_t> colored_classes() const;
};

/// Depth-first augmenting-path search from equation `start` over active
/// edges, visiting neighbours in graph order. On success the path is flipped
/// into `m` and true is returned. On failure `m` is untouched and
/// `colors.equations` holds every equation reachable from `start` by
/// alternating paths.
bool augment_path(const GraphView& view, std::size_t start, Matching& m, ColorState& colors);

/// Pairs of (class position, equation position) of `m` present in `g`.
std::vector<std::pair<std::size_t, std::size_t>> matched_positions(const ClassGraph& g, const Matching& m);

/// Equations that outnumber their neighbouring classes.
struct Witness {
    std::vector<std::size_t> equations;  // ascending positions
};

/// Equation-saturating matching on the unpruned graph, processing equations
/// in order; the first failed search yields the witness.
std::variant<Matching, Witness> saturating_matching(const ClassGraph& g);

}  // namespace ddae
