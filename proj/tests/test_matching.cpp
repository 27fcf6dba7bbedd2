#include <doctest.h>

#include <variant>

#include "ddae/matching.hpp"
#include "ddae/oracle.hpp"
#include "support.hpp"

using namespace ddae;
using testing::make_system;

namespace {

// Exhaustive search for a matching over active edges that covers every
// equation in `must`.
bool coverable(const GraphView& v, const std::vector<std::size_t>& must, std::size_t i, std::vector<bool>& used) {
    if (i == must.size()) return true;
    for (std::size_t c : v.graph.adjacency[must[i]]) {
        if (!v.active[c] || used[c]) continue;
        used[c] = true;
        if (coverable(v, must, i + 1, used)) return true;
        used[c] = false;
    }
    return false;
}

bool valid_matching(const GraphView& v, const Matching& m) {
    for (const auto& [key, eq] : m.pairs()) {
        std::size_t c = v.graph.find_class(key);
        if (c == v.graph.classes.size() || !v.active_edge(eq, c)) return false;
    }
    return true;
}

GraphView random_view(std::mt19937& rng) {
    System s = testing::random_system(rng, {8, 6, 3, -1, 1, 2, true});
    switch (rng() % 3) {
    case 0: return prune_to_highest(build_graph(s, RelationKind::Trivial), PruneMode::DiffHighest);
    case 1: return prune_to_highest(build_graph(s, RelationKind::ShiftSimilar), PruneMode::ShiftHighest);
    default: return full_view(build_graph(s, RelationKind::EqualDDAE));
    }
}

}  // namespace

TEST_CASE("exposed equation with only lower derivatives") {
    GraphView v = prune_to_highest(build_graph(testing::load_fixture("chain.dae"), RelationKind::Trivial),
                                   PruneMode::DiffHighest);
    Matching m;
    ColorState colors = ColorState::fresh(v.graph);
    CHECK_FALSE(augment_path(v, 0, m, colors));
    CHECK(colors.colored_equations() == std::vector<std::size_t>{0});
    CHECK(m.size() == 0);
}

TEST_CASE("failed search colors the alternating-reachable equations") {
    System s = apply_diff(testing::load_fixture("chain.dae"), 0, 1);
    GraphView v = prune_to_highest(build_graph(s, RelationKind::Trivial), PruneMode::DiffHighest);
    Matching m;
    ColorState first = ColorState::fresh(v.graph);
    REQUIRE(augment_path(v, 0, m, first));
    ColorState colors = ColorState::fresh(v.graph);
    CHECK_FALSE(augment_path(v, 1, m, colors));
    CHECK(colors.colored_equations() == std::vector<std::size_t>{0, 1});
    CHECK(m.size() == 1);
}

TEST_CASE("single equation with a free class") {
    System s = make_system({{VarOcc(1)}});
    GraphView v = full_view(build_graph(s, RelationKind::Trivial));
    Matching m;
    ColorState colors = ColorState::fresh(v.graph);
    CHECK(augment_path(v, 0, m, colors));
    CHECK(m.equation_of(v.graph.classes[0]) == 0u);
    CHECK_THROWS_AS(augment_path(v, 0, m, colors), std::logic_error);
}

TEST_CASE("matching stays injective") {
    Matching m;
    ClassKey a{RelationKind::EqualDAE, 1, {}, {}}, b{RelationKind::EqualDAE, 2, {}, {}};
    m.assign(a, 0);
    CHECK_THROWS_AS(m.assign(a, 1), std::logic_error);
    CHECK_THROWS_AS(m.assign(b, 0), std::logic_error);
    m.unassign(a);
    CHECK_NOTHROW(m.assign(b, 0));
    CHECK(m.class_of_equation(0) == b);
}

TEST_CASE("saturating matching or witness") {
    auto chain = saturating_matching(build_graph(testing::load_fixture("chain.dae"), RelationKind::EqualDAE));
    CHECK(std::holds_alternative<Matching>(chain));

    auto sing = saturating_matching(build_graph(testing::load_fixture("singular.dae"), RelationKind::EqualDAE));
    REQUIRE(std::holds_alternative<Witness>(sing));
    CHECK(std::get<Witness>(sing).equations == std::vector<std::size_t>{1});

    System ident = make_system({{VarOcc(1)}, {VarOcc(2)}, {VarOcc(3)}});
    auto id = saturating_matching(build_graph(ident, RelationKind::EqualDAE));
    REQUIRE(std::holds_alternative<Matching>(id));
    for (const auto& [key, eq] : std::get<Matching>(id).pairs()) CHECK(key.base == static_cast<int>(eq) + 1);
}

TEST_CASE("augmenting path exists exactly when a larger matching does") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        GraphView v = random_view(rng);
        Matching m;
        for (std::size_t start = 0; start < v.graph.equations.size(); ++start) {
            std::vector<std::size_t> must;
            for (const auto& [key, eq] : m.pairs()) must.push_back(eq);
            must.push_back(start);
            std::vector<bool> used(v.graph.classes.size(), false);
            bool expected = coverable(v, must, 0, used);

            Matching before = m;
            ColorState colors = ColorState::fresh(v.graph);
            bool found = augment_path(v, start, m, colors);
            CHECK(found == expected);
            CHECK(valid_matching(v, m));
            if (found) {
                CHECK(m.size() == before.size() + 1);
                CHECK(m.covers(start));
                for (const auto& [key, eq] : before.pairs()) CHECK(m.covers(eq));
            } else {
                CHECK(m == before);
                auto colored = colors.colored_equations();
                CHECK(colors.equations[start]);
                // Every colored class is owned by a colored equation.
                for (std::size_t c : colors.colored_classes()) {
                    auto owner = m.equation_of(v.graph.classes[c]);
                    REQUIRE(owner);
                    CHECK(colors.equations[*owner]);
                }
            }
        }
    }
}
