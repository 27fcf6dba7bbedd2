#include "ddae/shiftcore.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>

namespace ddae {

namespace {

bool reaches_root(const std::map<std::size_t, std::size_t>& parent, std::size_t node, std::size_t root) {
    for (std::size_t steps = 0; steps <= parent.size(); ++steps) {
        if (node == root) return true;
        node = parent.at(node);
    }
    return false;
}

}  // namespace

std::vector<Connection> find_connections(const GraphView& shift_view, const Matching& m, std::size_t exposed) {
    const ClassGraph& g = shift_view.graph;
    Matching probe = m;
    ColorState colors = ColorState::fresh(g);
    if (augment_path(shift_view, exposed, probe, colors))
        throw std::logic_error("connections need a failed search from the exposed equation");

    std::vector<std::size_t> members = colors.colored_equations();
    struct Slot {
        std::size_t child;
        ClassKey via;
        std::vector<std::size_t> parents;
    };
    std::vector<Slot> slots;
    for (std::size_t e : members) {
        if (e == exposed) continue;
        auto key = m.class_of_equation(e);
        if (!key) throw std::logic_error("colored equation without a matched class");
        std::size_t c = g.find_class(*key);
        Slot slot{e, *key, {}};
        for (std::size_t p : members)
            if (p != e && shift_view.active_edge(p, c)) slot.parents.push_back(p);
        slots.push_back(std::move(slot));
    }

    std::vector<Connection> out;
    std::map<std::size_t, std::size_t> parent;
    std::vector<std::size_t> choice(slots.size(), 0);
    // Odometer over the parent choices of every slot.
    for (const Slot& s : slots)
        if (s.parents.empty()) return out;
    while (true) {
        parent.clear();
        for (std::size_t i = 0; i < slots.size(); ++i) parent[slots[i].child] = slots[i].parents[choice[i]];
        bool tree = std::all_of(slots.begin(), slots.end(),
                                [&](const Slot& s) { return reaches_root(parent, s.child, exposed); });
        if (tree) {
            Connection conn{exposed, {}};
            for (const Slot& s : slots) conn.links.push_back(Link{parent[s.child], s.via, s.child});
            out.push_back(std::move(conn));
        }
        std::size_t i = slots.size();
        while (i > 0) {
            --i;
            if (++choice[i] < slots[i].parents.size()) break;
            choice[i] = 0;
            if (i == 0) return out;
        }
        if (slots.empty()) return out;
    }
}

std::vector<std::vector<int>> NuSystem::matrix() const {
    std::vector<std::vector<int>> a(rows.size(), std::vector<int>(unknowns.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        a[r][rows[r].plus] += 1;
        a[r][rows[r].minus] -= 1;
    }
    return a;
}

NuSystem build_nu_system(const Connection& conn, const System& sys) {
    NuSystem nu;
    nu.unknowns.push_back(conn.root);
    for (const Link& l : conn.links) nu.unknowns.push_back(l.child);
    std::sort(nu.unknowns.begin(), nu.unknowns.end());
    nu.unknowns.erase(std::unique(nu.unknowns.begin(), nu.unknowns.end()), nu.unknowns.end());
    auto slot = [&](std::size_t eq) {
        auto it = std::lower_bound(nu.unknowns.begin(), nu.unknowns.end(), eq);
        if (it == nu.unknowns.end() || *it != eq) throw InvalidConnection("link endpoint outside the connection");
        return static_cast<std::size_t>(it - nu.unknowns.begin());
    };
    auto top_deriv = [&](std::size_t eq, const ClassKey& via) {
        if (eq >= sys.size() || !via.shift) throw InvalidConnection("link does not name a shift class");
        std::optional<int> q;
        for (const VarOcc& v : sys[eq].occs)
            if (v.base == via.base && v.shift == *via.shift) q = std::max(q.value_or(0), v.deriv);
        if (!q) throw InvalidConnection("class " + class_label(via) + " does not occur in " + sys[eq].ref.name);
        return *q;
    };
    for (const Link& l : conn.links) {
        std::int64_t rhs = top_deriv(l.child, l.via) - top_deriv(l.parent, l.via);
        nu.rows.push_back({slot(l.parent), slot(l.child), rhs});
    }
    return nu;
}

std::vector<std::int64_t> solve_min_nonneg(const NuSystem& nu) {
    const std::size_t k = nu.unknowns.size();
    if (k == 0) return {};
    std::vector<std::vector<std::size_t>> touching(k);
    for (std::size_t r = 0; r < nu.rows.size(); ++r) {
        const auto& row = nu.rows[r];
        if (row.plus >= k || row.minus >= k) throw InconsistentSystem("row refers to a missing unknown");
        touching[row.plus].push_back(r);
        touching[row.minus].push_back(r);
    }
    std::vector<std::optional<std::int64_t>> pot(k);
    pot[0] = 0;
    std::queue<std::size_t> work;
    work.push(0);
    while (!work.empty()) {
        std::size_t u = work.front();
        work.pop();
        for (std::size_t r : touching[u]) {
            const auto& row = nu.rows[r];
            std::size_t other = row.plus == u ? row.minus : row.plus;
            std::int64_t want = row.plus == u ? *pot[u] - row.rhs : *pot[u] + row.rhs;
            if (!pot[other]) {
                pot[other] = want;
                work.push(other);
            } else if (*pot[other] != want) {
                throw InconsistentSystem("difference constraints contradict each other");
            }
        }
    }
    std::int64_t low = std::numeric_limits<std::int64_t>::max();
    for (const auto& p : pot) {
        if (!p) throw InconsistentSystem("constraints do not connect every unknown");
        low = std::min(low, *p);
    }
    std::vector<std::int64_t> out;
    for (const auto& p : pot) out.push_back(*p - low);
    return out;
}

std::vector<int> diff_during_shift(const System& sys, const GraphView& shift_view, const Matching& m,
                                   std::size_t exposed) {
    std::vector<int> counts(sys.size(), 0);
    for (const Connection& conn : find_connections(shift_view, m, exposed)) {
        NuSystem nu = build_nu_system(conn, sys);
        std::vector<std::int64_t> sol = solve_min_nonneg(nu);
        for (std::size_t i = 0; i < sol.size(); ++i) {
            int& slot = counts[nu.unknowns[i]];
            slot = std::max(slot, static_cast<int>(sol[i]));
        }
    }
    return counts;
}

Linearized trimmed_linearization(const System& sys, LinearizationStyle style) {
    std::vector<Equation> eqs = sys.equations();
    std::vector<LinearizationAddition> additions;
    std::set<std::string> names;
    for (const Equation& eq : eqs) names.insert(eq.ref.name);
    int n_vars = sys.n_vars();

    for (int base = 1; base <= sys.n_vars(); ++base) {
        // top[d] = highest nonnegative shift at which x_base^(d) occurs.
        std::map<int, int> top;
        for (const Equation& eq : eqs)
            for (const VarOcc& v : eq.occs)
                if (v.base == base && v.shift >= 0) {
                    auto [it, fresh] = top.try_emplace(v.deriv, v.shift);
                    if (!fresh) it->second = std::max(it->second, v.shift);
                }
        if (top.empty() || top.rbegin()->first < 2) continue;
        const int q = top.rbegin()->first;

        // level[p] = highest shift of any x_base^(r) with r >= p.
        std::vector<int> level(static_cast<std::size_t>(q) + 1, -1);
        for (int p = q; p >= 1; --p) {
            int here = top.count(p) ? top.at(p) : -1;
            int above = p < q ? level[static_cast<std::size_t>(p) + 1] : -1;
            level[static_cast<std::size_t>(p)] = std::max(here, above);
        }
        const int first_new = n_vars + 1;
        n_vars += q - 1;
        auto y = [&](int p) { return first_new + p - 1; };

        for (Equation& eq : eqs)
            for (VarOcc& v : eq.occs) {
                if (v.base != base || v.deriv < 1 || v.deriv > q) continue;
                if (v.deriv == q)
                    v = VarOcc(y(q - 1), 1, v.shift);
                else if (style == LinearizationStyle::Full)
                    v = VarOcc(y(v.deriv), 0, v.shift);
            }

        for (int p = 1; p < q; ++p) {
            const int shift = level[static_cast<std::size_t>(p)];
            std::string name = "F" + std::to_string(eqs.size() + 1);
            for (int suffix = 1; names.count(name); ++suffix)
                name = "F" + std::to_string(eqs.size() + 1) + "_" + std::to_string(suffix);
            names.insert(name);
            Equation chain;
            chain.ref = EqRef{name, 0, shift, 0, std::nullopt};
            chain.occs.push_back(p == 1 ? VarOcc(base, 1, shift) : VarOcc(y(p - 1), 1, shift));
            chain.occs.push_back(VarOcc(y(p), 0, shift));
            additions.push_back({y(p), base, p, shift, eqs.size()});
            eqs.push_back(std::move(chain));
        }
    }
    return {System(std::move(eqs), n_vars), std::move(additions)};
}

}  // namespace ddae
