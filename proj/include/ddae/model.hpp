#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddae {

/// Rejected construction of an occurrence, equation or system.
class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One structural occurrence of a state variable: x_base differentiated
/// `deriv` times and shifted by `shift` multiples of the delay.
struct VarOcc {
    int base;
    int deriv;
    int shift;

    constexpr VarOcc(int b, int d = 0, int s = 0) : base(b), deriv(d), shift(s) {
        if (b < 1) throw ModelError("variable index must be at least 1");
        if (d < 0) throw ModelError("derivative order must be nonnegative");
        if (s < -1) throw ModelError("shift must be at least -1");
    }

    friend constexpr auto operator<=>(const VarOcc&, const VarOcc&) = default;
};

struct EqRef {
    std::string name;
    int index = 0;       // 1-based position in its system
    int shift_count = 0;
    int diff_count = 0;
    std::optional<int> original_index = std::nullopt;  // none for equations added by linearization

    friend bool operator==(const EqRef&, const EqRef&) = default;
};

struct Equation {
    EqRef ref;
    std::vector<VarOcc> occs;  // sorted ascending, no duplicates

    friend bool operator==(const Equation&, const Equation&) = default;
};

/// An ordered set of equations. Immutable: every update returns a new value.
class System {
public:
    System() = default;
    /// Sorts and deduplicates each occurrence list and renumbers indices by
    /// position. Throws ModelError on duplicate names or out-of-range bases.
    System(std::vector<Equation> equations, int n_vars);

    const std::vector<Equation>& equations() const { return eqs_; }
    const Equation& operator[](std::size_t pos) const { return eqs_.at(pos); }
    std::size_t size() const { return eqs_.size(); }
    bool empty() const { return eqs_.empty(); }
    int n_vars() const { return n_vars_; }

    friend bool operator==(const System&, const System&) = default;

private:
    std::vector<Equation> eqs_;
    int n_vars_ = 0;
};

/// Shifts equation `pos` (0-based) by q >= 0 delays.
System apply_shift(const System& sys, std::size_t pos, int q);

/// Differentiates equation `pos` q >= 0 times. The chain rule keeps every
/// original occurrence and adds the next q derivatives of each.
System apply_diff(const System& sys, std::size_t pos, int q);

enum class RelationKind {
    Trivial,          // every occurrence is its own class
    EqualDAE,         // grouped by base variable
    ShiftSimilar,     // grouped by (base, shift)
    DiffSimilar,      // grouped by (base, deriv); nonnegative shifts only
    EqualDDAE,        // grouped by base variable across all shifts
    EqualRestricted,  // grouped by base; only x and x' at shift 0
};

const char* to_string(RelationKind rel);

struct ClassKey {
    RelationKind relation;
    int base;
    std::optional<int> deriv;
    std::optional<int> shift;

    friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

/// Class of an occurrence, or nullopt when the occurrence is outside the
/// relation's domain.
std::optional<ClassKey> class_of(RelationKind rel, const VarOcc& vo);

/// Renders an occurrence as x<b> followed by primes or ^(k) and @shift.
std::string term_string(const VarOcc& vo);

/// Human-readable class label, e.g. "x1@2" for a shift class or "x1''" for a
/// derivative class.
std::string class_label(const ClassKey& key);

}  // namespace ddae

template <>
struct std::hash<ddae::VarOcc> {
    std::size_t operator()(const ddae::VarOcc& v) const noexcept {
        std::size_t h = std::hash<int>{}(v.base);
        h = h * 1000003u ^ std::hash<int>{}(v.deriv);
        return h * 1000003u ^ std::hash<int>{}(v.shift);
    }
};
