#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ddae/driver.hpp"
#include "ddae/dsl.hpp"
#include "ddae/model.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) { return std::string(DDAE_FIXTURE_DIR) + "/" + name; }

inline ddae::System load_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    std::stringstream buf;
    buf << in.rdbuf();
    return ddae::parse(buf.str());
}

inline std::vector<int> shifts(const ddae::AnalysisResult& r) {
    std::vector<int> out;
    for (const auto& e : r.equations) out.push_back(e.shift);
    return out;
}

inline std::vector<int> diffs(const ddae::AnalysisResult& r) {
    std::vector<int> out;
    for (const auto& e : r.equations) out.push_back(e.diff);
    return out;
}

struct RandomSpec {
    int max_equations = 6;
    int max_vars = 6;
    int max_terms = 3;
    int min_shift = -1;
    int max_shift = 0;
    int max_deriv = 1;
    bool allow_empty = false;
};

/// Small random system; the variable count is drawn independently so some
/// variables may never occur.
inline ddae::System random_system(std::mt19937& rng, const RandomSpec& spec = {}) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    int m = pick(1, spec.max_equations);
    int n = pick(1, spec.max_vars);
    std::vector<ddae::Equation> eqs;
    for (int i = 0; i < m; ++i) {
        ddae::Equation eq;
        eq.ref.name = "F" + std::to_string(i + 1);
        int terms = pick(spec.allow_empty ? 0 : 1, spec.max_terms);
        for (int t = 0; t < terms; ++t)
            eq.occs.emplace_back(pick(1, n), pick(0, spec.max_deriv), pick(spec.min_shift, spec.max_shift));
        eqs.push_back(std::move(eq));
    }
    return ddae::System(std::move(eqs), n);
}

inline ddae::System make_system(std::vector<std::vector<ddae::VarOcc>> rows) {
    std::vector<ddae::Equation> eqs;
    int n = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ddae::Equation eq;
        eq.ref.name = "F" + std::to_string(i + 1);
        eq.occs = std::move(rows[i]);
        for (const auto& v : eq.occs) n = std::max(n, v.base);
        eqs.push_back(std::move(eq));
    }
    return ddae::System(std::move(eqs), n);
}

}  // namespace testing
