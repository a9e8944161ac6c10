#pragma once

// Math-bearing documents, along two paths.
//
// HTML path: pages mentioning math markup are parsed, formulas are located
// by their start tags (LaTeX scripts/annotations, MathML), every LaTeX
// formula must pass a structural check, duplicate renderings next to a
// formula (images, MathJax/KaTeX output) are dropped, and the page text is
// rendered with each formula inlined as \( ... \) or \[ ... \].
//
// ASCII path: main-content text that contains at least five math keywords
// (LaTeX commands or plain symbols, counted per occurrence, overlaps
// included) and that a classifier scores above 0.5.

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "webcurate/classifier.hpp"
#include "webcurate/corpus_io.hpp"
#include "webcurate/extraction.hpp"
#include "webcurate/html_dom.hpp"
#include "webcurate/latex_commands.hpp"
#include "webcurate/text.hpp"

namespace webcurate::math {

inline constexpr std::array<std::string_view, 27> kPlainMathSymbols{
    "sqrt", "sum", "log", "lim", "sin(", "cos(", "tan(", "exp(", "ln(",
    "frac", "infty", "+",   "*",   "$",    "^",    "=",    "≤",    "≥",
    "≠",    "±",   "×",     "÷",   "√",    "∑",    "∫",    "∞",    "π",
};

struct MathKeywordSets {
    std::vector<std::string> html_prefilter{"<math", "<annotation", "=\"math", "athjax",
                                            "math-container", "class=\"tex\"", "tex.cgi",
                                            "latex.php", "katex.min.css", "\\frac", "codecogs"};
    std::vector<std::string> latex_locator_prefixes{
        "<script type=\"math/tex\"", "<script type=\"math/latex\"", "<script type=\"math/asciimath\"",
        "<span class=\"math-formula\"", "<annotation encoding=\"application/x-tex\""};
    std::vector<std::string> mathml_locators{"<math", "<script type=\"math/mml\""};
    std::vector<std::string> ascii_latex_symbols{kLatexCommandInventory.begin(), kLatexCommandInventory.end()};
    std::vector<std::string> ascii_plain_symbols{kPlainMathSymbols.begin(), kPlainMathSymbols.end()};
    std::size_t ascii_min_hits = 5;
    double ascii_model_threshold = classifier::kScoreThreshold;
};

inline bool html_math_prefilter(const RawRecord& rec, const MathKeywordSets& kw = {}) {
    return std::any_of(kw.html_prefilter.begin(), kw.html_prefilter.end(),
                       [&](const std::string& k) { return contains_icase(rec.payload, k); });
}

enum class FormulaKind { latex, mathml, ascii };

struct FormulaSpan {
    std::int64_t node_id = 0;
    FormulaKind kind = FormulaKind::latex;
    std::string source_text;
    bool valid = false;
    bool display = false;
};

// ---------------------------------------------------------------------------
// LaTeX validation

namespace detail {

struct Token {
    enum Kind { command, symbol, open, close, chr, space } kind;
    std::string text;  // command name without backslash, or the character(s)
};

inline std::optional<std::vector<Token>> tokenize_latex(std::string_view s, std::string* error) {
    std::vector<Token> out;
    for (std::size_t i = 0; i < s.size();) {
        char c = s[i];
        if (c == '%') {  // comment to end of line
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        if (c == '\\') {
            if (i + 1 >= s.size()) {
                if (error) *error = "trailing backslash";
                return std::nullopt;
            }
            std::size_t j = i + 1;
            if (is_ascii_alpha(static_cast<unsigned char>(s[j]))) {
                while (j < s.size() && is_ascii_alpha(static_cast<unsigned char>(s[j]))) ++j;
                if (j < s.size() && s[j] == '*') ++j;
                out.push_back({Token::command, std::string(s.substr(i + 1, j - i - 1))});
            } else {
                std::size_t k = j;
                next_code_point(s, k);
                out.push_back({Token::symbol, std::string(s.substr(j, k - j))});
                j = k;
            }
            i = j;
            continue;
        }
        if (c == '{') out.push_back({Token::open, "{"});
        else if (c == '}') out.push_back({Token::close, "}"});
        else if (is_space(c)) out.push_back({Token::space, " "});
        else {
            std::size_t k = i;
            next_code_point(s, k);
            out.push_back({Token::chr, std::string(s.substr(i, k - i))});
            i = k;
            continue;
        }
        ++i;
    }
    return out;
}

inline int command_arity(std::string_view name) {
    static const std::map<std::string_view, int> kArity{
        {"frac", 2},      {"dfrac", 2},     {"tfrac", 2},      {"cfrac", 2},     {"binom", 2},
        {"dbinom", 2},    {"tbinom", 2},    {"genfrac", 6},    {"stackrel", 2},  {"overset", 2},
        {"underset", 2},  {"sqrt", 1},      {"text", 1},       {"textrm", 1},    {"textbf", 1},
        {"textit", 1},    {"emph", 1},      {"mathrm", 1},     {"mathbf", 1},    {"mathit", 1},
        {"mathcal", 1},   {"mathbb", 1},    {"mathsf", 1},     {"mathtt", 1},    {"mathfrak", 1},
        {"mathscr", 1},   {"boldsymbol", 1}, {"operatorname", 1}, {"hat", 1},      {"widehat", 1},
        {"bar", 1},       {"overline", 1},  {"underline", 1},  {"vec", 1},       {"dot", 1},
        {"ddot", 1},      {"tilde", 1},     {"widetilde", 1},  {"overbrace", 1}, {"underbrace", 1},
        {"check", 1},     {"breve", 1},     {"acute", 1},      {"grave", 1},     {"mathring", 1},
        {"pmod", 1},      {"bmod", 0},      {"begin", 1},      {"end", 1},       {"color", 1},
        {"textcolor", 2}, {"boxed", 1},     {"phantom", 1},    {"hphantom", 1},  {"vphantom", 1},
    };
    auto it = kArity.find(name);
    return it == kArity.end() ? 0 : it->second;
}

inline bool is_delimiter(const Token& t) {
    static constexpr std::array<std::string_view, 22> kCommandDelims{
        "langle", "rangle", "lfloor", "rfloor", "lceil", "rceil", "vert", "Vert", "lvert", "rvert",
        "lVert",  "rVert",  "uparrow", "downarrow", "updownarrow", "Uparrow", "Downarrow",
        "Updownarrow", "lbrace", "rbrace", "lbrack", "rbrack"};
    if (t.kind == Token::chr) {
        return t.text.size() == 1 && std::string_view("()[]|./<>").find(t.text[0]) != std::string_view::npos;
    }
    if (t.kind == Token::symbol) return t.text == "{" || t.text == "}" || t.text == "|";
    if (t.kind == Token::command) {
        return std::find(kCommandDelims.begin(), kCommandDelims.end(), t.text) != kCommandDelims.end();
    }
    return false;
}

class LatexWalker {
public:
    LatexWalker(std::vector<Token> tokens, std::string* error) : t_(std::move(tokens)), error_(error) {}

    bool run() {
        std::size_t dollars = 0;
        for (const auto& tok : t_) dollars += tok.kind == Token::chr && tok.text == "$" ? 1 : 0;
        if (dollars % 2 != 0) return fail("unbalanced $");
        std::size_t i = 0;
        while (i < t_.size()) {
            if (!step(i)) return false;
        }
        if (!stack_.empty()) {
            const auto& top = stack_.back();
            if (top.first == '{') return fail("unbalanced brace");
            if (top.first == 'L') return fail("\\left without \\right");
            return fail("unclosed environment " + top.second);
        }
        return true;
    }

private:
    bool fail(std::string msg) {
        if (error_) *error_ = std::move(msg);
        return false;
    }

    std::size_t skip_space(std::size_t i) const {
        while (i < t_.size() && t_[i].kind == Token::space) ++i;
        return i;
    }

    // Position after one argument starting at i, or nullopt when missing.
    std::optional<std::size_t> argument_end(std::size_t i) const {
        i = skip_space(i);
        if (i >= t_.size()) return std::nullopt;
        const Token& t = t_[i];
        if (t.kind == Token::close) return std::nullopt;
        if (t.kind == Token::chr && (t.text == "^" || t.text == "_" || t.text == "&")) return std::nullopt;
        if (t.kind != Token::open) return i + 1;
        int depth = 0;
        for (std::size_t k = i; k < t_.size(); ++k) {
            if (t_[k].kind == Token::open) ++depth;
            else if (t_[k].kind == Token::close && --depth == 0) return k + 1;
        }
        return std::nullopt;
    }

    std::optional<std::string> group_text(std::size_t i, std::size_t& end) const {
        i = skip_space(i);
        if (i >= t_.size() || t_[i].kind != Token::open) return std::nullopt;
        std::string name;
        for (std::size_t k = i + 1; k < t_.size(); ++k) {
            if (t_[k].kind == Token::close) {
                end = k + 1;
                return std::string(trim(name));
            }
            if (t_[k].kind == Token::open) return std::nullopt;
            name += t_[k].text;
        }
        return std::nullopt;
    }

    bool check_arguments(std::size_t i, std::string_view name) {
        int arity = command_arity(name);
        std::size_t pos = i + 1;
        if (name == "sqrt") {
            std::size_t k = skip_space(pos);
            if (k < t_.size() && t_[k].kind == Token::chr && t_[k].text == "[") {
                while (k < t_.size() && !(t_[k].kind == Token::chr && t_[k].text == "]")) ++k;
                if (k >= t_.size()) return fail("unterminated optional argument of \\sqrt");
                pos = k + 1;
            }
        }
        for (int a = 0; a < arity; ++a) {
            auto end = argument_end(pos);
            if (!end) return fail("missing argument for \\" + std::string(name));
            pos = *end;
        }
        return true;
    }

    bool step(std::size_t& i) {
        const Token& t = t_[i];
        switch (t.kind) {
            case Token::open:
                stack_.emplace_back('{', "");
                ++i;
                return true;
            case Token::close:
                if (stack_.empty() || stack_.back().first != '{') return fail("unbalanced brace");
                stack_.pop_back();
                ++i;
                return true;
            case Token::chr:
                if (t.text == "^" || t.text == "_") {
                    if (!argument_end(i + 1)) return fail("missing argument for " + t.text);
                }
                ++i;
                return true;
            case Token::space:
            case Token::symbol:
                ++i;
                return true;
            case Token::command: break;
        }
        std::string name = t.text;
        if (name.ends_with('*')) name.pop_back();
        if (name == "left" || name == "right" || name == "middle") {
            std::size_t k = skip_space(i + 1);
            if (k >= t_.size() || !is_delimiter(t_[k])) return fail("\\" + name + " without delimiter");
            if (name == "left") {
                stack_.emplace_back('L', "");
            } else if (name == "right") {
                if (stack_.empty() || stack_.back().first != 'L') return fail("\\right without \\left");
                stack_.pop_back();
            } else if (std::none_of(stack_.begin(), stack_.end(), [](const auto& f) { return f.first == 'L'; })) {
                return fail("\\middle outside \\left ... \\right");
            }
            i = k + 1;
            return true;
        }
        if (name == "begin" || name == "end") {
            std::size_t end = 0;
            auto env = group_text(i + 1, end);
            if (!env || env->empty()) return fail("\\" + name + " without environment name");
            if (name == "begin") {
                stack_.emplace_back('E', *env);
            } else {
                if (stack_.empty() || stack_.back().first != 'E') return fail("\\end{" + *env + "} without \\begin");
                if (stack_.back().second != *env) {
                    return fail("\\begin{" + stack_.back().second + "} ended by \\end{" + *env + "}");
                }
                stack_.pop_back();
            }
            i = end;
            return true;
        }
        if (!check_arguments(i, name)) return false;
        ++i;
        return true;
    }

    std::vector<Token> t_;
    std::vector<std::pair<char, std::string>> stack_;
    std::string* error_;
};

}  // namespace detail

/// Structural check of a LaTeX formula: balanced braces and `$`, paired
/// \left/\right with delimiters, matching \begin/\end names, required
/// arguments of common macros and of ^/_, no trailing backslash. Unknown
/// commands are accepted.
inline bool is_valid_latex(std::string_view source, std::string* error = nullptr) {
    auto tokens = detail::tokenize_latex(source, error);
    if (!tokens) return false;
    return detail::LatexWalker(std::move(*tokens), error).run();
}

/// Start-tag-level XML well-formedness of a MathML string.
inline bool is_well_formed_xml(std::string_view s) {
    std::vector<std::string> stack;
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] != '<') {
            ++i;
            continue;
        }
        if (s.substr(i, 4) == "<!--") {
            auto e = s.find("-->", i + 4);
            if (e == std::string_view::npos) return false;
            i = e + 3;
            continue;
        }
        if (s.substr(i, 9) == "<![CDATA[") {
            auto e = s.find("]]>", i + 9);
            if (e == std::string_view::npos) return false;
            i = e + 3;
            continue;
        }
        auto gt = s.find('>', i);
        if (gt == std::string_view::npos) return false;
        std::string_view tag = s.substr(i + 1, gt - i - 1);
        i = gt + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') continue;
        bool closing = tag[0] == '/';
        bool self = !closing && tag.back() == '/';
        if (closing) tag.remove_prefix(1);
        std::size_t n = 0;
        while (n < tag.size() && !is_space(tag[n]) && tag[n] != '/') ++n;
        std::string name(tag.substr(0, n));
        if (name.empty()) return false;
        if (closing) {
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else if (!self) {
            stack.push_back(std::move(name));
        }
    }
    return stack.empty();
}

inline FormulaSpan validate_latex(FormulaSpan span) {
    if (span.kind == FormulaKind::latex) span.valid = is_valid_latex(span.source_text);
    return span;
}

// ---------------------------------------------------------------------------
// Locating formulas

namespace detail {

inline std::string without_mime_params(const html::DomNode& n) {
    html::DomNode copy;
    copy.tag = n.tag;
    copy.attributes = n.attributes;
    for (auto& [k, v] : copy.attributes) {
        if (k == "type" || k == "encoding") {
            if (auto semi = v.find(';'); semi != std::string::npos) v = std::string(trim(v.substr(0, semi)));
        }
    }
    return html::start_tag_string(copy);
}

inline bool prefix_match(const html::DomNode& n, std::string_view prefix) {
    for (const std::string& tag : {html::start_tag_string(n), without_mime_params(n)}) {
        if (!starts_with_icase(tag, prefix)) continue;
        // `<math` must not match `<mathfield`
        if (prefix.back() != '"' && tag.size() > prefix.size()) {
            char next = tag[prefix.size()];
            if (is_ascii_alpha(static_cast<unsigned char>(next)) || next == '-') continue;
        }
        return true;
    }
    return false;
}

inline bool is_display(const html::DomNode& n) {
    if (auto type = n.attr("type"); type && contains_icase(*type, "mode=display")) return true;
    if (auto d = n.attr("display"); d && to_lower_ascii(*d) == "block") return true;
    if (auto m = n.attr("mode"); m && to_lower_ascii(*m) == "display") return true;
    return false;
}

inline bool all_closed(const html::DomNode& n) {
    bool ok = true;
    html::for_each_node(n, [&](const html::DomNode& x) {
        if (x.is_element() && !x.explicitly_closed) ok = false;
    });
    return ok;
}

inline bool class_has(const html::DomNode& n, std::string_view cls) {
    auto c = n.attr("class");
    if (!c) return false;
    for (auto w : split_whitespace(*c)) {
        if (w == cls) return true;
    }
    return false;
}

// A rendering of the same formula that sits next to it.
inline bool is_duplicate_rendering(const html::DomNode& n, const std::string& source) {
    if (!n.is_element()) return false;
    if (n.tag == "img") {
        auto alt = n.attr("alt");
        if (alt && !trim(*alt).empty() && trim(*alt) == trim(source)) return true;
        auto src = n.attr("src");
        if (src) {
            std::string s = to_lower_ascii(*src);
            for (std::string_view m : {"codecogs", "latex", "tex.cgi", "mathtex", "mimetex", "/math/"}) {
                if (s.find(m) != std::string::npos) return true;
            }
        }
        return class_has(n, "tex") || class_has(n, "latex") || class_has(n, "math");
    }
    for (std::string_view cls : {"MathJax_Preview", "MathJax", "MathJax_Display", "MathJax_SVG",
                                 "MathJax_CHTML", "mjx-chtml", "katex-html"}) {
        if (class_has(n, cls)) return true;
    }
    return n.tag == "mjx-container";
}

}  // namespace detail

struct LocateResult {
    std::vector<FormulaSpan> spans;
    std::vector<std::int64_t> duplicates;  // nodes rendering a located formula again
};

inline LocateResult locate_formulas_detailed(const html::DomTree& tree, const MathKeywordSets& kw = {}) {
    LocateResult r;
    auto annotation_in = [&](const html::DomNode& math) -> const html::DomNode* {
        const html::DomNode* hit = nullptr;
        html::for_each_node(math, [&](const html::DomNode& x) {
            if (!hit && x.tag == "annotation" &&
                detail::prefix_match(x, "<annotation encoding=\"application/x-tex\"")) {
                hit = &x;
            }
        });
        return hit;
    };

    auto visit = [&](auto&& self, const html::DomNode& n, const html::DomNode* parent,
                     std::size_t index) -> void {
        if (!n.is_element()) return;
        std::optional<FormulaSpan> span;
        bool latex = std::any_of(kw.latex_locator_prefixes.begin(), kw.latex_locator_prefixes.end(),
                                 [&](const std::string& p) { return detail::prefix_match(n, p); });
        bool mathml = !latex && std::any_of(kw.mathml_locators.begin(), kw.mathml_locators.end(),
                                            [&](const std::string& p) { return detail::prefix_match(n, p); });
        if (latex) {
            span = FormulaSpan{n.node_id, FormulaKind::latex, std::string(trim(html::raw_text(n))), false,
                               detail::is_display(n)};
        } else if (mathml) {
            if (n.tag == "math") {
                if (const auto* ann = annotation_in(n)) {
                    span = FormulaSpan{n.node_id, FormulaKind::latex, std::string(trim(html::raw_text(*ann))),
                                       false, detail::is_display(n)};
                } else {
                    span = FormulaSpan{n.node_id, FormulaKind::mathml, html::serialize(n), detail::all_closed(n),
                                       detail::is_display(n)};
                }
            } else {
                std::string src(trim(html::raw_text(n)));
                bool ok = is_well_formed_xml(src);
                span = FormulaSpan{n.node_id, FormulaKind::mathml, std::move(src), ok, detail::is_display(n)};
            }
        }
        if (span) {
            if (span->kind == FormulaKind::latex) span->valid = is_valid_latex(span->source_text);
            // renderings directly before or after the formula
            if (parent != nullptr) {
                const auto& sibs = parent->children;
                for (std::size_t k = index; k > 0; --k) {
                    const auto& sib = sibs[k - 1];
                    if (sib.is_text() && trim(sib.text).empty()) continue;
                    if (!detail::is_duplicate_rendering(sib, span->source_text)) break;
                    r.duplicates.push_back(sib.node_id);
                }
                for (std::size_t k = index + 1; k < sibs.size(); ++k) {
                    const auto& sib = sibs[k];
                    if (sib.is_text() && trim(sib.text).empty()) continue;
                    if (!detail::is_duplicate_rendering(sib, span->source_text)) break;
                    r.duplicates.push_back(sib.node_id);
                }
            }
            r.spans.push_back(std::move(*span));
            return;  // nothing nested inside a formula is located again
        }
        for (std::size_t k = 0; k < n.children.size(); ++k) self(self, n.children[k], &n, k);
    };
    for (std::size_t k = 0; k < tree.root.children.size(); ++k) visit(visit, tree.root.children[k], &tree.root, k);

    // Renderings that sit beside a formula wrapper (KaTeX, MathJax v3)
    // rather than beside the formula itself.
    std::set<std::int64_t> formula_ids;
    for (const auto& s : r.spans) formula_ids.insert(s.node_id);
    std::set<std::int64_t> dup_ids(r.duplicates.begin(), r.duplicates.end());
    // returns whether the subtree holds a formula
    auto mark = [&](auto&& self, const html::DomNode& n) -> bool {
        if (formula_ids.count(n.node_id)) return true;
        std::vector<bool> holds(n.children.size(), false);
        bool any = false;
        for (std::size_t k = 0; k < n.children.size(); ++k) {
            holds[k] = self(self, n.children[k]);
            any = any || holds[k];
        }
        for (std::size_t k = 0; k < n.children.size(); ++k) {
            if (!holds[k] || formula_ids.count(n.children[k].node_id)) continue;
            for (const auto& sib : n.children) {
                if (!formula_ids.count(sib.node_id) && detail::is_duplicate_rendering(sib, {}) &&
                    dup_ids.insert(sib.node_id).second) {
                    r.duplicates.push_back(sib.node_id);
                }
            }
        }
        return any;
    };
    mark(mark, tree.root);
    return r;
}

/// Formula spans in document order, duplicates removed.
inline std::vector<FormulaSpan> locate_formulas(const html::DomTree& tree, const MathKeywordSets& kw = {}) {
    return locate_formulas_detailed(tree, kw).spans;
}

// ---------------------------------------------------------------------------
// ASCII keyword gate

/// Multi-pattern substring counter (Aho-Corasick); counts every occurrence
/// of every pattern, overlapping ones included.
class KeywordCounter {
public:
    explicit KeywordCounter(const std::vector<std::string>& patterns) {
        nodes_.emplace_back();
        for (const auto& p : patterns) {
            if (p.empty()) continue;
            std::size_t cur = 0;
            for (unsigned char c : p) {
                auto it = nodes_[cur].next.find(c);
                if (it == nodes_[cur].next.end()) {
                    nodes_[cur].next[c] = nodes_.size();
                    cur = nodes_.size();
                    nodes_.emplace_back();
                } else {
                    cur = it->second;
                }
            }
            ++nodes_[cur].terminal;
        }
        std::deque<std::size_t> queue;
        for (auto [c, child] : nodes_[0].next) queue.push_back(child);
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            nodes_[u].output = nodes_[u].terminal + nodes_[nodes_[u].fail].output;
            for (auto [c, v] : nodes_[u].next) {
                std::size_t f = nodes_[u].fail;
                while (f != 0 && !nodes_[f].next.count(c)) f = nodes_[f].fail;
                auto it = nodes_[f].next.find(c);
                nodes_[v].fail = (it != nodes_[f].next.end() && it->second != v) ? it->second : 0;
                queue.push_back(v);
            }
        }
    }

    std::size_t count(std::string_view text) const {
        std::size_t cur = 0;
        std::size_t total = 0;
        for (unsigned char c : text) {
            while (cur != 0 && !nodes_[cur].next.count(c)) cur = nodes_[cur].fail;
            auto it = nodes_[cur].next.find(c);
            cur = it == nodes_[cur].next.end() ? 0 : it->second;
            total += nodes_[cur].output;
        }
        return total;
    }

private:
    struct Node {
        std::map<unsigned char, std::size_t> next;
        std::size_t fail = 0;
        std::size_t terminal = 0;
        std::size_t output = 0;
    };
    std::vector<Node> nodes_;
};

inline std::vector<std::string> ascii_keywords(const MathKeywordSets& kw) {
    std::vector<std::string> all = kw.ascii_latex_symbols;
    all.insert(all.end(), kw.ascii_plain_symbols.begin(), kw.ascii_plain_symbols.end());
    return all;
}

/// Shared counter for the default keyword sets.
inline const KeywordCounter& default_keyword_counter() {
    static const KeywordCounter counter(ascii_keywords(MathKeywordSets{}));
    return counter;
}

inline std::size_t count_math_keywords(std::string_view text) { return default_keyword_counter().count(text); }

inline std::size_t count_math_keywords(std::string_view text, const MathKeywordSets& kw) {
    static const MathKeywordSets kDefaults;
    if (kw.ascii_latex_symbols == kDefaults.ascii_latex_symbols &&
        kw.ascii_plain_symbols == kDefaults.ascii_plain_symbols) {
        return default_keyword_counter().count(text);
    }
    return KeywordCounter(ascii_keywords(kw)).count(text);
}

inline bool ascii_keyword_gate(std::string_view text, std::size_t min_hits = 5) {
    return count_math_keywords(text) >= min_hits;
}

// ---------------------------------------------------------------------------
// Documents

enum class MathPath { html, ascii };

namespace detail {

inline void inline_formulas(html::DomNode& n, const std::map<std::int64_t, const FormulaSpan*>& spans,
                            const std::vector<std::int64_t>& drop, html::DomTree& tree) {
    std::vector<html::DomNode> kept;
    kept.reserve(n.children.size());
    for (auto& c : n.children) {
        if (std::find(drop.begin(), drop.end(), c.node_id) != drop.end()) continue;
        auto it = spans.find(c.node_id);
        if (it != spans.end()) {
            const FormulaSpan& s = *it->second;
            std::string text;
            if (s.kind == FormulaKind::latex) text = (s.display ? "\\[" : "\\(") + s.source_text + (s.display ? "\\]" : "\\)");
            else text = s.source_text;
            kept.push_back(html::make_text_node(" " + text + " ", tree.fresh_id()));
            continue;
        }
        inline_formulas(c, spans, drop, tree);
        kept.push_back(std::move(c));
    }
    n.children = std::move(kept);
}

}  // namespace detail

/// Page text with every located formula replaced in place by its source.
inline std::string render_with_formulas(html::DomTree tree, const LocateResult& located) {
    std::map<std::int64_t, const FormulaSpan*> by_id;
    for (const auto& s : located.spans) by_id[s.node_id] = &s;
    detail::inline_formulas(tree.root, by_id, located.duplicates, tree);
    return extraction::html_to_fulltext(tree);
}

struct MathOptions {
    MathKeywordSets keywords;
    extraction::MainContentConfig main_content;
};

/// The HTML path keeps pages whose formulas are all valid; the ASCII path
/// needs a model and keeps pages passing the keyword gate and scoring above
/// the threshold. `why` receives the reason a page was rejected.
inline std::optional<Document> extract_math_document(const RawRecord& rec, MathPath path,
                                                     const classifier::NgramModel* model = nullptr,
                                                     const MathOptions& opt = {}, std::string* why = nullptr) {
    auto reject = [&](const char* reason) -> std::optional<Document> {
        if (why) *why = reason;
        return std::nullopt;
    };
    if (path == MathPath::ascii && model == nullptr) throw ConfigError("model required for ascii path");
    auto tree = html::strip_hidden(html::parse_html(rec.payload, rec.target_url));
    if (path == MathPath::html) {
        auto located = locate_formulas_detailed(tree, opt.keywords);
        if (located.spans.empty()) return reject("no_formula");
        for (const auto& s : located.spans) {
            if (!s.valid) return reject("invalid_formula");
        }
        return document_from_record(rec, render_with_formulas(std::move(tree), located), DomainTag::math);
    }
    auto text = extraction::extract_main_content(tree, opt.main_content);
    if (!text) return reject("no_main_content");
    if (count_math_keywords(*text, opt.keywords) < opt.keywords.ascii_min_hits) {
        return reject("ascii_keyword_gate");
    }
    if (!(classifier::score(*model, *text) > opt.keywords.ascii_model_threshold)) return reject("score_below_threshold");
    return document_from_record(rec, std::move(*text), DomainTag::math);
}

}  // namespace webcurate::math
