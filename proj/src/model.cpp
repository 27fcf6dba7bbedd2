#include "ddae/model.hpp"

#include <algorithm>
#include <set>

namespace ddae {

namespace {

void normalize(std::vector<VarOcc>& occs) {
    std::sort(occs.begin(), occs.end());
    occs.erase(std::unique(occs.begin(), occs.end()), occs.end());
}

void check_update(const System& sys, std::size_t pos, int q) {
    if (pos >= sys.size()) throw ModelError("equation position out of range");
    if (q < 0) throw ModelError("update count must be nonnegative");
}

}  // namespace

System::System(std::vector<Equation> equations, int n_vars)
    : eqs_(std::move(equations)), n_vars_(n_vars) {
    if (n_vars_ < 0) throw ModelError("variable count must be nonnegative");
    std::set<std::string> names;
    for (std::size_t i = 0; i < eqs_.size(); ++i) {
        Equation& eq = eqs_[i];
        if (!names.insert(eq.ref.name).second)
            throw ModelError("duplicate equation name '" + eq.ref.name + "'");
        if (eq.ref.shift_count < 0 || eq.ref.diff_count < 0)
            throw ModelError("update counters must be nonnegative");
        eq.ref.index = static_cast<int>(i) + 1;
        normalize(eq.occs);
        for (const VarOcc& v : eq.occs)
            if (v.base > n_vars_)
                throw ModelError("variable x" + std::to_string(v.base) + " exceeds the declared variable count");
    }
}

System apply_shift(const System& sys, std::size_t pos, int q) {
    check_update(sys, pos, q);
    if (q == 0) return sys;
    std::vector<Equation> eqs = sys.equations();
    Equation& eq = eqs[pos];
    for (VarOcc& v : eq.occs) v.shift += q;
    eq.ref.shift_count += q;
    return System(std::move(eqs), sys.n_vars());
}

System apply_diff(const System& sys, std::size_t pos, int q) {
    check_update(sys, pos, q);
    if (q == 0) return sys;
    std::vector<Equation> eqs = sys.equations();
    Equation& eq = eqs[pos];
    std::vector<VarOcc> closure;
    closure.reserve(eq.occs.size() * static_cast<std::size_t>(q + 1));
    for (const VarOcc& v : eq.occs)
        for (int p = 0; p <= q; ++p) closure.emplace_back(v.base, v.deriv + p, v.shift);
    eq.occs = std::move(closure);
    eq.ref.diff_count += q;
    return System(std::move(eqs), sys.n_vars());
}

const char* to_string(RelationKind rel) {
    switch (rel) {
    case RelationKind::Trivial: return "trivial";
    case RelationKind::EqualDAE: return "equal-dae";
    case RelationKind::ShiftSimilar: return "shift-similar";
    case RelationKind::DiffSimilar: return "diff-similar";
    case RelationKind::EqualDDAE: return "equal-ddae";
    case RelationKind::EqualRestricted: return "equal-restricted";
    }
    return "?";
}

std::optional<ClassKey> class_of(RelationKind rel, const VarOcc& vo) {
    switch (rel) {
    case RelationKind::Trivial:
        return ClassKey{rel, vo.base, vo.deriv, vo.shift};
    case RelationKind::EqualDAE:
    case RelationKind::EqualDDAE:
        return ClassKey{rel, vo.base, std::nullopt, std::nullopt};
    case RelationKind::ShiftSimilar:
        return ClassKey{rel, vo.base, std::nullopt, vo.shift};
    case RelationKind::DiffSimilar:
        if (vo.shift < 0) return std::nullopt;
        return ClassKey{rel, vo.base, vo.deriv, std::nullopt};
    case RelationKind::EqualRestricted:
        if (vo.shift != 0 || vo.deriv > 1) return std::nullopt;
        return ClassKey{rel, vo.base, std::nullopt, std::nullopt};
    }
    return std::nullopt;
}

namespace {

std::string deriv_mark(int d) {
    if (d == 0) return {};
    if (d <= 2) return std::string(static_cast<std::size_t>(d), '\'');
    return "^(" + std::to_string(d) + ")";
}

std::string shift_mark(int s) { return s == 0 ? std::string{} : "@" + std::to_string(s); }

}  // namespace

std::string term_string(const VarOcc& vo) {
    return "x" + std::to_string(vo.base) + deriv_mark(vo.deriv) + shift_mark(vo.shift);
}

std::string class_label(const ClassKey& key) {
    std::string out = "x" + std::to_string(key.base);
    if (key.deriv) out += deriv_mark(*key.deriv);
    if (key.relation == RelationKind::ShiftSimilar)
        out += "@" + std::to_string(*key.shift);
    else if (key.shift)
        out += shift_mark(*key.shift);
    return out;
}

}  // namespace ddae
