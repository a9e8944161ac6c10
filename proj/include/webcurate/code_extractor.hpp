#pragma once

// Interleaved prose + code documents from HTML pages.
//
// A page qualifies when its raw bytes mention `<code` or `<pre` and its URL
// is not a blame/diff view. Every <code> element proposes a root (its parent
// when that is <pre> or <tbody>, else itself); a root is kept when its text
// matches one of four pattern classes. Kept roots become <code-encode>
// elements holding their code as one text child, adjacent ones are merged,
// and leading line numbers are stripped. The page is then rendered as plain
// text with each block wrapped in `<code-encode>` / `</code-encode>` lines.

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "webcurate/classifier.hpp"
#include "webcurate/corpus_io.hpp"
#include "webcurate/extraction.hpp"
#include "webcurate/html_dom.hpp"
#include "webcurate/text.hpp"

namespace webcurate::code {

enum class CodeClass { none, pl_keywords, code_indicators, function_calls, variable_assignments };

inline std::string_view to_string(CodeClass c) {
    switch (c) {
        case CodeClass::pl_keywords: return "pl_keywords";
        case CodeClass::code_indicators: return "code_indicators";
        case CodeClass::function_calls: return "function_calls";
        case CodeClass::variable_assignments: return "variable_assignments";
        case CodeClass::none: break;
    }
    return "none";
}

// Keywords from Python, C-family, Java, JavaScript, Go, Rust and PHP that
// rarely appear as plain English words.
inline constexpr std::array<std::string_view, 60> kProgrammingKeywords{
    "def",       "return",   "import",     "class",     "public",    "void",     "fn",
    "let",       "const",    "lambda",     "elif",      "private",   "protected", "static",
    "func",      "function", "var",        "struct",    "enum",      "interface", "extends",
    "implements", "namespace", "using",    "package",   "async",     "await",    "yield",
    "catch",     "except",   "finally",    "throw",     "raise",     "typedef",  "template",
    "typename",  "switch",   "foreach",    "elseif",    "endif",     "println",  "printf",
    "echo",      "nullptr",  "null",       "None",      "True",      "False",    "true",
    "false",     "self",     "this",       "int",       "bool",      "char",     "float",
    "double",    "unsigned", "sizeof",     "instanceof",
};

struct CodeDocConfig {
    std::vector<std::string> prefilter_keywords{"<code", "<pre"};
    std::vector<std::string> url_blocklist_substrings{"blame.php", "diff.php"};
    std::vector<std::string> pl_keywords{kProgrammingKeywords.begin(), kProgrammingKeywords.end()};
    std::size_t min_line_number_run = 3;
};

/// The four pattern classes, each applied line by line.
class CodePatterns {
public:
    explicit CodePatterns(const CodeDocConfig& cfg = {}) {
        std::string alt;
        for (const auto& k : cfg.pl_keywords) {
            if (!alt.empty()) alt += '|';
            alt += k;
        }
        keywords_ = std::regex("(^|[^A-Za-z0-9_])(" + alt + ")($|[^A-Za-z0-9_])");
        indicators_ = std::regex(
            R"((;\s*$)|(^\s*[{}][\s{}();]*$)|(\{\s*$)|(^\s*#\s*(include|define|import|pragma)\b)|(<\?php)|(^\s*#!/))");
        calls_ = std::regex(R"([A-Za-z_][A-Za-z0-9_.]*\([^()]*\))");
        assignments_ = std::regex(
            R"(^\s*(let\s+|var\s+|const\s+|auto\s+)?[A-Za-z_][A-Za-z0-9_.\[\]'"]*\s*(=|\+=|-=|\*=|/=|:=)\s*[^=\s])");
    }

    CodeClass classify(std::string_view text) const {
        auto lines = split_lines(text);
        for (auto [cls, re] : {std::pair{CodeClass::pl_keywords, &keywords_},
                               std::pair{CodeClass::code_indicators, &indicators_},
                               std::pair{CodeClass::function_calls, &calls_},
                               std::pair{CodeClass::variable_assignments, &assignments_}}) {
            for (auto line : lines) {
                if (std::regex_search(line.begin(), line.end(), *re)) return cls;
            }
        }
        return CodeClass::none;
    }

private:
    std::regex keywords_;
    std::regex indicators_;
    std::regex calls_;
    std::regex assignments_;
};

struct CodeCandidate {
    std::int64_t root_node_id = 0;
    std::string text;
    CodeClass matched_class = CodeClass::none;
};

/// Raw payload mentions a code tag and the URL is not blocklisted.
inline bool code_prefilter(const RawRecord& rec, const CodeDocConfig& cfg = {}) {
    bool keyword = std::any_of(cfg.prefilter_keywords.begin(), cfg.prefilter_keywords.end(),
                               [&](const std::string& k) { return contains_icase(rec.payload, k); });
    if (!keyword) return false;
    return std::none_of(cfg.url_blocklist_substrings.begin(), cfg.url_blocklist_substrings.end(),
                        [&](const std::string& b) { return rec.target_url.find(b) != std::string::npos; });
}

namespace detail {

inline bool breaks_code_line(const html::DomNode& n, std::string_view parent_tag) {
    return n.tag == "br" || n.tag == "tr" || n.tag == "div" || n.tag == "p" || n.tag == "li" ||
           (n.tag == "code" && parent_tag == "tbody");
}

inline void code_text_into(const html::DomNode& n, std::string& out) {
    for (const auto& c : n.children) {
        if (c.is_text()) {
            out += c.text;
            continue;
        }
        if (html::is_non_rendered_tag(c.tag)) continue;
        bool brk = breaks_code_line(c, n.tag);
        if (brk && !out.empty() && out.back() != '\n') out.push_back('\n');
        code_text_into(c, out);
        if (brk && c.tag != "br" && !out.empty() && out.back() != '\n') out.push_back('\n');
    }
}

}  // namespace detail

/// Code text of a root: text verbatim, with line breaks at <br>, rows and
/// per-line <code> children of a <tbody>. Blank leading/trailing lines and
/// trailing whitespace are dropped.
inline std::string code_text(const html::DomNode& root) {
    std::string out;
    if (root.is_text()) out = root.text;
    else detail::code_text_into(root, out);
    auto lines = split_lines(out);
    std::size_t b = 0;
    std::size_t e = lines.size();
    while (b < e && trim(lines[b]).empty()) ++b;
    while (e > b && trim(lines[e - 1]).empty()) --e;
    std::vector<std::string_view> kept(lines.begin() + static_cast<std::ptrdiff_t>(b),
                                       lines.begin() + static_cast<std::ptrdiff_t>(e));
    for (auto& l : kept) l = trim_right(l);
    return join(kept, "\n");
}

/// Accepted code roots in document order. Roots nested inside another root
/// are dropped.
inline std::vector<CodeCandidate> detect_code_roots(const html::DomTree& tree, const CodeDocConfig& cfg = {},
                                                    const CodePatterns* patterns = nullptr) {
    CodePatterns local(cfg);
    const CodePatterns& pats = patterns ? *patterns : local;

    std::vector<const html::DomNode*> roots;
    auto walk = [&](auto&& self, const html::DomNode& n, const html::DomNode* parent) -> void {
        if (n.tag == "code") {
            const html::DomNode* root = (parent && (parent->tag == "pre" || parent->tag == "tbody")) ? parent : &n;
            if (std::find(roots.begin(), roots.end(), root) == roots.end()) roots.push_back(root);
        }
        for (const auto& c : n.children) self(self, c, &n);
    };
    walk(walk, tree.root, nullptr);

    // drop roots lying inside another root
    auto contains = [](const html::DomNode& outer, const html::DomNode* inner) {
        bool found = false;
        html::for_each_node(outer, [&](const html::DomNode& x) {
            if (&x == inner && &x != &outer) found = true;
        });
        return found;
    };
    std::vector<CodeCandidate> out;
    for (const auto* r : roots) {
        bool nested = std::any_of(roots.begin(), roots.end(),
                                  [&](const html::DomNode* o) { return o != r && contains(*o, r); });
        if (nested) continue;
        CodeCandidate c;
        c.root_node_id = r->node_id;
        c.text = code_text(*r);
        c.matched_class = pats.classify(c.text);
        if (c.matched_class != CodeClass::none) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const CodeCandidate& a, const CodeCandidate& b) { return a.root_node_id < b.root_node_id; });
    return out;
}

// ---------------------------------------------------------------------------
// Line numbers

namespace detail {

// Leading integer followed by whitespace or end of line.
inline std::optional<std::pair<long long, std::size_t>> leading_number(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && is_ascii_digit(static_cast<unsigned char>(line[i])) && i - start < 12) ++i;
    if (i == start) return std::nullopt;
    if (i < line.size() && !is_space(line[i])) return std::nullopt;
    return std::pair{std::stoll(std::string(line.substr(start, i - start))), i};
}

inline bool is_number_only(std::string_view line) {
    auto n = leading_number(line);
    return n && trim(line.substr(n->second)).empty();
}

}  // namespace detail

/// Removes line numbers when (a) every non-blank line starts with the next
/// integer of a consecutive run k, k+1, ..., or (b) number-only lines
/// alternate with code lines, numbered consecutively. Needs at least
/// `min_run` numbers; text is returned unchanged otherwise.
inline std::string strip_line_numbers(std::string_view text, std::size_t min_run = 3) {
    auto lines = split_lines(text);

    // every-line layout
    {
        std::vector<std::pair<std::size_t, std::size_t>> cuts;  // line, chars to cut
        std::optional<long long> prev;
        bool ok = true;
        bool content = false;
        for (std::size_t i = 0; i < lines.size() && ok; ++i) {
            if (trim(lines[i]).empty()) continue;
            auto n = detail::leading_number(lines[i]);
            if (!n || (prev && n->first != *prev + 1)) {
                ok = false;
                break;
            }
            prev = n->first;
            std::size_t cut = n->second;
            if (cut < lines[i].size() && (lines[i][cut] == ' ' || lines[i][cut] == '\t')) ++cut;
            if (!trim(lines[i].substr(cut)).empty()) content = true;
            cuts.emplace_back(i, cut);
        }
        if (ok && content && cuts.size() >= min_run) {
            std::vector<std::string> out(lines.begin(), lines.end());
            for (auto [i, cut] : cuts) out[i] = std::string(lines[i].substr(cut));
            return join(out, "\n");
        }
    }

    // alternating layout, numbers on even or odd lines
    for (std::size_t phase = 0; phase < 2; ++phase) {
        std::optional<long long> prev;
        std::size_t numbers = 0;
        bool ok = lines.size() >= 2;
        for (std::size_t i = 0; i < lines.size() && ok; ++i) {
            bool numbered_slot = (i % 2) == phase;
            if (numbered_slot) {
                auto n = detail::is_number_only(lines[i]) ? detail::leading_number(lines[i]) : std::nullopt;
                if (!n || (prev && n->first != *prev + 1)) ok = false;
                else {
                    prev = n->first;
                    ++numbers;
                }
            } else if (detail::is_number_only(lines[i])) {
                ok = false;
            }
        }
        if (ok && numbers >= min_run) {
            std::vector<std::string_view> out;
            for (std::size_t i = 0; i < lines.size(); ++i) {
                if ((i % 2) != phase) out.push_back(lines[i]);
            }
            return join(out, "\n");
        }
    }
    return std::string(text);
}

// ---------------------------------------------------------------------------
// Retagging

inline constexpr std::string_view kCodeTag = "code-encode";
inline constexpr std::string_view kCleanedAttr = "data-lines-cleaned";

namespace detail {

inline void merge_adjacent(html::DomNode& n, html::DomTree& tree) {
    for (auto& c : n.children) merge_adjacent(c, tree);
    std::vector<html::DomNode> merged;
    for (auto& c : n.children) {
        if (c.tag == kCodeTag) {
            // look back past whitespace-only text for a previous code block
            std::size_t k = merged.size();
            while (k > 0 && merged[k - 1].is_text() && trim(merged[k - 1].text).empty()) --k;
            if (k > 0 && merged[k - 1].tag == kCodeTag) {
                auto& prev = merged[k - 1];
                std::string a = prev.children.empty() ? std::string{} : prev.children.front().text;
                std::string b = c.children.empty() ? std::string{} : c.children.front().text;
                std::string joined = a.empty() ? b : (b.empty() ? a : a + "\n" + b);
                prev.children.clear();
                prev.children.push_back(html::make_text_node(std::move(joined), tree.fresh_id()));
                prev.attributes.erase(
                    std::remove_if(prev.attributes.begin(), prev.attributes.end(),
                                   [](const auto& kv) { return kv.first == kCleanedAttr; }),
                    prev.attributes.end());
                merged.resize(k);
                continue;
            }
        }
        merged.push_back(std::move(c));
    }
    n.children = std::move(merged);
}

}  // namespace detail

/// Retags accepted roots as <code-encode> holding their code text, merges
/// adjacent blocks (only whitespace between them) and strips line numbers.
/// Applying it again to its own output changes nothing.
inline html::DomTree retag_and_clean(html::DomTree tree, const std::vector<CodeCandidate>& candidates,
                                     const CodeDocConfig& cfg = {}) {
    for (const auto& c : candidates) {
        html::DomNode* n = html::find_node_mut(tree.root, c.root_node_id);
        if (n == nullptr || n->tag == kCodeTag) continue;
        std::string text = code_text(*n);
        n->tag = std::string(kCodeTag);
        n->children.clear();
        n->children.push_back(html::make_text_node(std::move(text), tree.fresh_id()));
    }
    detail::merge_adjacent(tree.root, tree);
    html::for_each_node_mut(tree.root, [&](html::DomNode& n) {
        if (n.tag != kCodeTag || n.attr(kCleanedAttr)) return;
        if (!n.children.empty() && n.children.front().is_text()) {
            n.children.front().text = strip_line_numbers(n.children.front().text, cfg.min_line_number_run);
        }
        n.set_attr(kCleanedAttr, "1");
    });
    return tree;
}

// ---------------------------------------------------------------------------
// Rendering

/// One-vs-rest language models; the best-scoring name is reported.
using LanguageModels = std::map<std::string, classifier::NgramModel>;

inline std::optional<std::pair<std::string, double>> guess_language(std::string_view code,
                                                                    const LanguageModels& models) {
    std::optional<std::pair<std::string, double>> best;
    for (const auto& [name, m] : models) {
        double p = classifier::score(m, code);
        if (!best || p > best->second) best = std::pair{name, p};
    }
    return best;
}

inline std::string opening_marker(std::string_view code, const LanguageModels* models) {
    std::string marker = "<code-encode>";
    if (models && !models->empty()) {
        if (auto g = guess_language(code, *models)) {
            char prob[16];
            std::snprintf(prob, sizeof prob, "%.2f", g->second);
            marker += "<metadata lang=" + g->first + " prob=" + prob + " />";
        }
    }
    return marker;
}

/// Full page text with every <code-encode> block between marker lines.
inline std::string render_code_document(const html::DomTree& tree, const LanguageModels* models = nullptr) {
    html::RenderOptions opt;
    opt.custom = [&](const html::DomNode& n, html::TextSink& sink) {
        if (n.tag != kCodeTag) return false;
        std::string code = n.children.empty() ? std::string{} : html::raw_text(n);
        sink.block();
        std::string block = opening_marker(code, models) + "\n";
        if (!code.empty()) block += code + "\n";
        block += "</code-encode>";
        sink.preformatted(block);
        sink.block();
        return true;
    };
    return extraction::html_to_fulltext(tree, opt);
}

inline std::optional<Document> extract_code_document(const RawRecord& rec, const CodeDocConfig& cfg = {},
                                                     const LanguageModels* models = nullptr,
                                                     const CodePatterns* patterns = nullptr) {
    if (!code_prefilter(rec, cfg)) return std::nullopt;
    auto tree = html::strip_hidden(html::parse_html(rec.payload, rec.target_url));
    auto candidates = detect_code_roots(tree, cfg, patterns);
    if (candidates.empty()) return std::nullopt;
    tree = retag_and_clean(std::move(tree), candidates, cfg);
    return document_from_record(rec, render_code_document(tree, models), DomainTag::code);
}

}  // namespace webcurate::code
