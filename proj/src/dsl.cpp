#include "ddae/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ddae {

namespace {

class LineReader {
public:
    LineReader(std::string_view text, int line) : text_(text), line_(line) {}

    SourceSpan here() const { return {line_, static_cast<int>(pos_) + 1}; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, here()); }
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, {line_, static_cast<int>(at) + 1});
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ == text_.size() || text_[pos_] == '#';
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }

    std::string identifier() {
        std::size_t start = pos_;
        if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected an identifier");
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    int integer(bool allow_sign) {
        std::size_t start = pos_;
        if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
        std::size_t digits = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == digits) fail("expected a number", start);
        int value = 0;
        const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
        if (ec != std::errc() || ptr != text_.data() + pos_) fail("number out of range", start);
        return value;
    }

    std::size_t pos() const { return pos_; }

private:
    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

VarOcc read_term(LineReader& in) {
    std::size_t start = in.pos();
    if (!in.accept('x')) in.fail("expected a term like x1");
    int base = in.integer(false);
    if (base == 0) in.fail("variable indices start at 1", start);
    int deriv = 0;
    if (in.peek() == '\'') {
        while (in.accept('\'')) ++deriv;
    } else if (in.accept('^')) {
        in.expect('(', "'(' after '^'");
        deriv = in.integer(false);
        in.expect(')', "')'");
    }
    int shift = 0;
    if (in.accept('@')) {
        std::size_t at = in.pos();
        shift = in.integer(true);
        if (shift < -1) in.fail("shift must be at least -1", at);
    }
    if (std::isalnum(static_cast<unsigned char>(in.peek())) || in.peek() == '_') in.fail("unexpected character");
    return VarOcc(base, deriv, shift);
}

}  // namespace

System parse(std::string_view text) {
    std::vector<Equation> eqs;
    std::set<std::string> names;
    int n_vars = 0;
    int line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(begin, end - begin);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        begin = end + 1;

        LineReader in(line, line_no);
        if (in.at_end()) continue;
        std::size_t kw = in.pos();
        if (in.identifier() != "eq") in.fail("expected 'eq'", kw);
        in.skip_space();
        std::size_t name_at = in.pos();
        Equation eq;
        eq.ref.name = in.identifier();
        eq.ref.original_index = static_cast<int>(eqs.size()) + 1;
        if (!names.insert(eq.ref.name).second) in.fail("duplicate equation name '" + eq.ref.name + "'", name_at);
        in.skip_space();
        in.expect(':', "':' after the equation name");
        if (!in.at_end()) {
            do {
                in.skip_space();
                eq.occs.push_back(read_term(in));
                n_vars = std::max(n_vars, eq.occs.back().base);
                in.skip_space();
            } while (in.accept(','));
            if (!in.at_end()) in.fail("expected ',' or end of line");
        }
        eqs.push_back(std::move(eq));
    }
    if (eqs.empty()) throw ParseError("empty system", {1, 1});
    return System(std::move(eqs), n_vars);
}

std::string render_system(const System& sys) {
    std::ostringstream os;
    for (const Equation& eq : sys.equations()) {
        os << "eq " << eq.ref.name << ":";
        for (std::size_t i = 0; i < eq.occs.size(); ++i) os << (i ? ", " : " ") << term_string(eq.occs[i]);
        os << "\n";
    }
    return os.str();
}

namespace {

std::string render_json(const AnalysisResult& res) {
    using nlohmann::ordered_json;
    ordered_json out;
    out["status"] = to_string(res.status);
    out["equations"] = ordered_json::array();
    for (const auto& e : res.equations) out["equations"].push_back({{"name", e.name}, {"shift", e.shift}, {"diff", e.diff}});
    out["linearization"] = ordered_json::array();
    for (const auto& l : res.linearization)
        out["linearization"].push_back({{"newVar", l.new_var}, {"couples", l.couples}, {"shift", l.shift}, {"diff", l.diff}});
    for (const char* field : {"assignmentShift", "assignmentDiff"}) {
        const auto& rows = std::string_view(field) == "assignmentShift" ? res.assignment_shift : res.assignment_diff;
        out[field] = ordered_json::array();
        for (const auto& a : rows) out[field].push_back({{"class", a.cls}, {"eq", a.eq}});
    }
    if (res.status == Status::StructurallySingular) out["witness"] = res.witness;
    return out.dump(2) + "\n";
}

std::string render_text(const AnalysisResult& res) {
    std::ostringstream os;
    os << "status: " << to_string(res.status) << "\n";
    if (!res.detail.empty()) os << "detail: " << res.detail << "\n";
    std::size_t width = 0;
    for (const auto& e : res.equations) width = std::max(width, e.name.size());
    os << "equations:\n";
    for (const auto& e : res.equations)
        os << "  " << e.name << std::string(width - e.name.size(), ' ') << "  shift " << e.shift << "  diff " << e.diff
           << "\n";
    if (!res.linearization.empty()) {
        os << "linearization:\n";
        for (const auto& l : res.linearization)
            os << "  " << l.new_var << " = " << l.couples << "  shift " << l.shift << "  diff " << l.diff << "\n";
    }
    auto assignment = [&](const char* title, const std::vector<AssignmentSummary>& rows) {
        if (rows.empty()) return;
        os << title << ":\n";
        for (const auto& a : rows) os << "  " << a.cls << " -> " << a.eq << "\n";
    };
    assignment("shifting graph assignment", res.assignment_shift);
    assignment("differentiation graph assignment", res.assignment_diff);
    if (res.status == Status::StructurallySingular) {
        os << "witness:";
        for (const auto& w : res.witness) os << " " << w;
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_report(const AnalysisResult& res, ReportFormat format) {
    return format == ReportFormat::Json ? render_json(res) : render_text(res);
}

}  // namespace ddae
