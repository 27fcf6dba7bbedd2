#include "ddae/oracle.hpp"

#include <set>
#include <string>

namespace ddae {

std::size_t class_count(const System& sys, RelationKind rel, const std::vector<std::size_t>& subset) {
    std::set<ClassKey> keys;
    for (std::size_t e : subset)
        for (const VarOcc& v : sys[e].occs)
            if (auto k = class_of(rel, v)) keys.insert(*k);
    return keys.size();
}

namespace {

void check_size(std::size_t n) {
    if (n > kOracleMaxEquations)
        throw TooLarge("brute-force check limited to " + std::to_string(kOracleMaxEquations) + " equations");
}

bool singular(const System& sys, RelationKind rel, const std::vector<std::size_t>& subset) {
    return subset.size() > class_count(sys, rel, subset);
}

}  // namespace

std::optional<SubsetWitness> brute_singular(const System& sys, RelationKind rel) {
    const std::size_t n = sys.size();
    check_size(n);
    for (std::size_t k = 1; k <= n; ++k) {
        // Lexicographic k-combinations of 0..n-1.
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            std::size_t classes = class_count(sys, rel, pick);
            if (k > classes) return SubsetWitness{pick, classes, k};
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

bool is_mss(const System& sys, RelationKind rel, const std::vector<std::size_t>& subset) {
    if (subset.empty()) throw std::invalid_argument("minimality is defined for nonempty subsets");
    check_size(subset.size());
    if (!singular(sys, rel, subset)) return false;
    const std::size_t full = (std::size_t{1} << subset.size()) - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::vector<std::size_t> part;
        for (std::size_t i = 0; i < subset.size(); ++i)
            if (mask >> i & 1) part.push_back(subset[i]);
        if (singular(sys, rel, part)) return false;
    }
    return true;
}

System restrict_to_view(const System& sys, const GraphView& view) {
    const ClassGraph& g = view.graph;
    std::vector<Equation> eqs;
    for (const Equation& eq : sys.equations()) {
        Equation kept{eq.ref, {}};
        for (const VarOcc& v : eq.occs) {
            auto k = class_of(g.relation, v);
            if (!k) continue;
            std::size_t c = g.find_class(*k);
            if (c < g.classes.size() && view.active[c]) kept.occs.push_back(v);
        }
        eqs.push_back(std::move(kept));
    }
    return System(std::move(eqs), sys.n_vars());
}

}  // namespace ddae
