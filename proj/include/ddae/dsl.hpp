#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ddae/driver.hpp"
#include "ddae/model.hpp"

namespace ddae {

struct SourceSpan {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, SourceSpan where)
        : std::runtime_error(std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message),
          span(where) {}
    SourceSpan span;
};

/// Parses the incidence format, one declaration per line:
///
///     # comment
///     eq F1: x1, x2'
///     eq F2: x1^(3)@1, x3@-1
///
/// The term list may be empty for an equation with no variables. The
/// variable count is the highest index used.
System parse(std::string_view text);

/// Canonical text for a system; parse(render_system(s)) reproduces s up to
/// the update counters.
std::string render_system(const System& sys);

enum class ReportFormat { Text, Json };

std::string render_report(const AnalysisResult& res, ReportFormat format);

}  // namespace ddae
