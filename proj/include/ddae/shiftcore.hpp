#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ddae/bigraph.hpp"
#include "ddae/matching.hpp"

namespace ddae {

/// A class link in a connection: `child` is matched to `via`, and `parent`
/// reaches `via` through a non-matching active edge.
struct Link {
    std::size_t parent;
    ClassKey via;
    std::size_t child;

    friend bool operator==(const Link&, const Link&) = default;
};

/// Links covering every matched equation of the failed search's colored set
/// exactly once, forming a tree rooted at the exposed equation.
struct Connection {
    std::size_t root;
    std::vector<Link> links;  // ordered by child position

    friend bool operator==(const Connection&, const Connection&) = default;
};

/// Recomputes the colored set of a failed search from `exposed` and
/// enumerates every connection over it. Parents are drawn from the colored
/// set only. Exponential in the colored set size.
/// Throws std::logic_error if `exposed` still has an augmenting path.
std::vector<Connection> find_connections(const GraphView& shift_view, const Matching& m, std::size_t exposed);

class InvalidConnection : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class InconsistentSystem : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Difference constraints nu[plus] - nu[minus] = rhs over the equations of a
/// connection. Unknowns are equation positions in ascending order.
struct NuSystem {
    struct Row {
        std::size_t plus;   // index into unknowns
        std::size_t minus;  // index into unknowns
        std::int64_t rhs;
    };
    std::vector<std::size_t> unknowns;
    std::vector<Row> rows;

    /// Dense coefficient matrix, one row per constraint.
    std::vector<std::vector<int>> matrix() const;
};

/// One row per link: nu_parent - nu_child = q_child - q_parent, where q_e is
/// the highest derivative of the link's (base, shift) class in equation e.
NuSystem build_nu_system(const Connection& conn, const System& sys);

/// Smallest nonnegative integer solution of a tree-shaped NuSystem: potentials
/// propagated from the first unknown, then lifted so the minimum is zero.
std::vector<std::int64_t> solve_min_nonneg(const NuSystem& nu);

/// Componentwise maximum of the minimal solutions over all connections,
/// indexed by equation position (zero outside the colored set).
std::vector<int> diff_during_shift(const System& sys, const GraphView& shift_view, const Matching& m,
                                   std::size_t exposed);

/// Which derivative occurrences of a base get replaced by new variables.
enum class LinearizationStyle {
    /// Every derivative 1..q-1 becomes a new variable and x^(q) becomes the
    /// derivative of the last one, so all orders end up at most one.
    Full,
    /// Only x^(q) is rewritten; lower derivatives stay in place and the
    /// coupling equations keep them as ordinary occurrences.
    TopDerivativeOnly,
};

struct LinearizationAddition {
    int new_var;         // base index of the new variable
    int base;            // variable whose derivative it stands for
    int order;           // new_var stands for x_base^(order)
    int shift;           // shift level of the coupling equation
    std::size_t equation;  // position of the coupling equation
};

struct Linearized {
    System system;
    std::vector<LinearizationAddition> additions;
};

/// Reduces every base whose derivative order (over nonnegative shifts)
/// reaches two or more to first order with new variables and coupling
/// equations placed at the shift where the replaced derivatives occur.
Linearized trimmed_linearization(const System& sys, LinearizationStyle style = LinearizationStyle::Full);

}  // namespace ddae
