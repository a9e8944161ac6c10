#pragma once

// Error-tolerant HTML parsing into a small DOM, hidden-element removal and
// WET-style plain-text rendering.
//
// The parser follows the HTML5 recovery rules that matter for text
// extraction: optional end tags (p, li, dt/dd, tr, td/th, option, headings)
// are closed implicitly, stray end tags are ignored, void elements never take
// children, and raw-text elements (script, style, textarea, title) keep their
// content as a single text child. Nesting is capped at kMaxDepth; deeper
// elements are attached flat to the deepest open element.
//
// Hidden-element detection looks only at inline markup: aria-hidden="true"
// and style declarations display:none / visibility:hidden. External CSS and
// scripts are not evaluated.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "webcurate/text.hpp"

namespace webcurate::html {

struct DomNode {
    std::string tag;  // lowercase; empty for text nodes
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<DomNode> children;
    std::string text;  // text nodes only
    std::int64_t node_id = 0;
    bool explicitly_closed = true;  // false when closed by recovery rules

    bool is_text() const { return tag.empty(); }
    bool is_element() const { return !tag.empty(); }

    std::optional<std::string_view> attr(std::string_view name) const {
        for (const auto& [k, v] : attributes) {
            if (k == name) return std::string_view(v);
        }
        return std::nullopt;
    }

    void set_attr(std::string_view name, std::string value) {
        for (auto& [k, v] : attributes) {
            if (k == name) {
                v = std::move(value);
                return;
            }
        }
        attributes.emplace_back(std::string(name), std::move(value));
    }

    bool operator==(const DomNode&) const = default;
};

inline constexpr std::string_view kRootTag = "#document";

struct DomTree {
    DomNode root;
    std::string source_url;
    std::int64_t next_id = 1;

    std::int64_t fresh_id() { return next_id++; }

    bool operator==(const DomTree&) const = default;
};

inline DomNode make_text_node(std::string text, std::int64_t id) {
    DomNode n;
    n.text = std::move(text);
    n.node_id = id;
    return n;
}

inline DomNode make_element(std::string tag, std::int64_t id) {
    DomNode n;
    n.tag = std::move(tag);
    n.node_id = id;
    return n;
}

// ---------------------------------------------------------------------------
// Traversal

template <typename Fn>
void for_each_node(const DomNode& node, Fn&& fn) {
    fn(node);
    for (const auto& c : node.children) for_each_node(c, fn);
}

template <typename Fn>
void for_each_node_mut(DomNode& node, Fn&& fn) {
    fn(node);
    for (auto& c : node.children) for_each_node_mut(c, fn);
}

inline const DomNode* find_node(const DomNode& node, std::int64_t id) {
    if (node.node_id == id) return &node;
    for (const auto& c : node.children) {
        if (const DomNode* hit = find_node(c, id)) return hit;
    }
    return nullptr;
}

inline DomNode* find_node_mut(DomNode& node, std::int64_t id) {
    if (node.node_id == id) return &node;
    for (auto& c : node.children) {
        if (DomNode* hit = find_node_mut(c, id)) return hit;
    }
    return nullptr;
}

/// Concatenated text of every text node in the subtree, in document order.
inline std::string raw_text(const DomNode& node) {
    std::string out;
    for_each_node(node, [&](const DomNode& n) {
        if (n.is_text()) out += n.text;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Tag classes

namespace detail {

inline bool in_list(std::string_view tag, std::initializer_list<std::string_view> list) {
    return std::find(list.begin(), list.end(), tag) != list.end();
}

inline bool is_void(std::string_view tag) {
    return in_list(tag, {"area", "base", "br", "col", "embed", "hr", "img", "input", "link",
                         "meta", "param", "source", "track", "wbr", "keygen"});
}

inline bool is_raw_text(std::string_view tag) {
    return in_list(tag, {"script", "style", "textarea", "title", "xmp"});
}

inline bool closes_p(std::string_view tag) {
    return in_list(tag, {"address", "article", "aside", "blockquote", "details", "div", "dl",
                         "fieldset", "figcaption", "figure", "footer", "form", "h1", "h2", "h3",
                         "h4", "h5", "h6", "header", "hgroup", "hr", "main", "menu", "nav",
                         "ol", "p", "pre", "section", "table", "ul"});
}

inline bool is_heading(std::string_view tag) {
    return tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6';
}

inline bool is_scope_boundary(std::string_view tag) {
    return in_list(tag, {"applet", "caption", "html", "table", "td", "th", "marquee", "object",
                         "template", "button", std::string_view(kRootTag)});
}

}  // namespace detail

/// Elements that start and end a line in rendered text.
inline bool is_block_tag(std::string_view tag) {
    return detail::in_list(
        tag, {"p",       "div",     "li",      "br",    "pre",     "h1",         "h2",
              "h3",      "h4",      "h5",      "h6",    "tr",      "table",      "title",
              "ul",      "ol",      "dl",      "dt",    "dd",      "section",    "article",
              "header",  "footer",  "nav",     "aside", "main",    "blockquote", "form",
              "hr",      "figure",  "figcaption", "address", "fieldset", "details", "summary",
              "caption", "thead",   "tbody",   "tfoot", "code-encode"});
}

/// Elements whose content never reaches rendered text.
inline bool is_non_rendered_tag(std::string_view tag) {
    return detail::in_list(tag, {"script", "style", "template", "noscript", "head", "meta", "link"});
}

// ---------------------------------------------------------------------------
// Entities

namespace detail {

inline std::optional<char32_t> named_entity(std::string_view name) {
    static constexpr std::array<std::pair<std::string_view, char32_t>, 44> kEntities{{
        {"amp", '&'},       {"lt", '<'},          {"gt", '>'},         {"quot", '"'},
        {"apos", '\''},     {"nbsp", 0xA0},       {"copy", 0xA9},      {"reg", 0xAE},
        {"trade", 0x2122},  {"mdash", 0x2014},    {"ndash", 0x2013},   {"hellip", 0x2026},
        {"laquo", 0xAB},    {"raquo", 0xBB},      {"lsquo", 0x2018},   {"rsquo", 0x2019},
        {"ldquo", 0x201C},  {"rdquo", 0x201D},    {"times", 0xD7},     {"divide", 0xF7},
        {"plusmn", 0xB1},   {"deg", 0xB0},        {"middot", 0xB7},    {"bull", 0x2022},
        {"euro", 0x20AC},   {"pound", 0xA3},      {"yen", 0xA5},       {"cent", 0xA2},
        {"sect", 0xA7},     {"para", 0xB6},       {"le", 0x2264},      {"ge", 0x2265},
        {"ne", 0x2260},     {"infin", 0x221E},    {"sum", 0x2211},     {"radic", 0x221A},
        {"pi", 0x3C0},      {"alpha", 0x3B1},     {"beta", 0x3B2},     {"micro", 0xB5},
        {"frac12", 0xBD},   {"minus", 0x2212},    {"thinsp", 0x2009},  {"shy", 0xAD},
    }};
    for (const auto& [k, v] : kEntities) {
        if (k == name) return v;
    }
    return std::nullopt;
}

/// Decodes one entity at s[i] == '&'; returns bytes consumed (0 if none).
inline std::size_t decode_entity(std::string_view s, std::size_t i, std::string& out) {
    std::size_t j = i + 1;
    if (j < s.size() && s[j] == '#') {
        ++j;
        bool hex = j < s.size() && (s[j] == 'x' || s[j] == 'X');
        if (hex) ++j;
        std::size_t start = j;
        std::uint32_t value = 0;
        while (j < s.size() && j - start < 8) {
            char c = s[j];
            int d = -1;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (hex && c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (hex && c >= 'A' && c <= 'F') d = c - 'A' + 10;
            if (d < 0) break;
            value = value * (hex ? 16 : 10) + static_cast<std::uint32_t>(d);
            ++j;
        }
        if (j == start) return 0;
        if (j < s.size() && s[j] == ';') ++j;
        if (value == 0 || value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
            value = kReplacementChar;
        }
        append_utf8(out, value);
        return j - i;
    }
    std::size_t start = j;
    while (j < s.size() && j - start < 10 && (is_ascii_alpha(s[j]) || is_ascii_digit(s[j]))) ++j;
    if (j == start || j >= s.size() || s[j] != ';') return 0;
    auto cp = named_entity(s.substr(start, j - start));
    if (!cp) return 0;
    append_utf8(out, *cp);
    return j + 1 - i;
}

}  // namespace detail

inline std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] == '&') {
            if (std::size_t n = detail::decode_entity(s, i, out)) {
                i += n;
                continue;
            }
        }
        out.push_back(s[i++]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class TreeBuilder {
public:
    static constexpr std::size_t kMaxDepth = 512;

    explicit TreeBuilder(DomNode& root) { stack_.push_back(&root); }

    void add_text(std::string_view text) {
        if (text.empty()) return;
        DomNode* top = stack_.back();
        if (!top->children.empty() && top->children.back().is_text()) {
            top->children.back().text.append(text);
        } else {
            DomNode n;
            n.text = std::string(text);
            top->children.push_back(std::move(n));
        }
    }

    /// Returns true when the element was left open (can take children).
    bool start_tag(std::string tag, std::vector<std::pair<std::string, std::string>> attrs,
                   bool self_closing) {
        apply_implicit_closes(tag);
        DomNode n;
        n.tag = std::move(tag);
        n.attributes = std::move(attrs);
        DomNode* top = stack_.back();
        top->children.push_back(std::move(n));
        DomNode* added = &top->children.back();
        if (is_void(added->tag) || self_closing) return false;
        if (stack_.size() >= kMaxDepth) {
            added->explicitly_closed = false;
            return false;
        }
        stack_.push_back(added);
        return true;
    }

    void end_tag(std::string_view tag) {
        if (tag == "br") {
            start_tag("br", {}, true);
            return;
        }
        for (std::size_t i = stack_.size(); i-- > 1;) {
            if (stack_[i]->tag == tag) {
                for (std::size_t k = stack_.size() - 1; k > i; --k) {
                    stack_[k]->explicitly_closed = false;
                }
                stack_.resize(i);
                return;
            }
        }
    }

    void finish() {
        for (std::size_t k = stack_.size(); k-- > 1;) stack_[k]->explicitly_closed = false;
        stack_.resize(1);
    }

    std::string_view current_tag() const { return stack_.back()->tag; }

private:
    // Closes the nearest open `target` unless a scope boundary comes first.
    void close_in_scope(std::initializer_list<std::string_view> targets,
                        std::initializer_list<std::string_view> extra_boundaries = {}) {
        for (std::size_t i = stack_.size(); i-- > 1;) {
            std::string_view t = stack_[i]->tag;
            if (in_list(t, targets)) {
                for (std::size_t k = stack_.size() - 1; k >= i; --k) {
                    stack_[k]->explicitly_closed = false;
                    if (k == i) break;
                }
                stack_.resize(i);
                return;
            }
            if (is_scope_boundary(t) || in_list(t, extra_boundaries)) return;
        }
    }

    void apply_implicit_closes(std::string_view tag) {
        if (closes_p(tag)) close_in_scope({"p"});
        if (tag == "li") close_in_scope({"li"}, {"ul", "ol"});
        if (tag == "dt" || tag == "dd") close_in_scope({"dt", "dd"}, {"dl"});
        if (tag == "option") close_in_scope({"option"}, {"select"});
        if (tag == "tr") close_in_scope({"tr"}, {"tbody", "thead", "tfoot"});
        if (tag == "td" || tag == "th") close_in_scope({"td", "th"}, {"tr"});
        if (tag == "tbody" || tag == "thead" || tag == "tfoot") {
            close_in_scope({"tbody", "thead", "tfoot"});
        }
        if (is_heading(tag) && is_heading(stack_.back()->tag)) close_in_scope({stack_.back()->tag});
        if (tag == "a") close_in_scope({"a"});
    }

    std::vector<DomNode*> stack_;
};

inline std::string read_tag_name(std::string_view s, std::size_t& i) {
    std::string name;
    while (i < s.size() && !is_space(s[i]) && s[i] != '/' && s[i] != '>') {
        name.push_back(ascii_lower(s[i]));
        ++i;
    }
    return name;
}

inline void assign_ids(DomNode& node, std::int64_t& next) {
    node.node_id = next++;
    for (auto& c : node.children) assign_ids(c, next);
}

}  // namespace detail

/// Parses (UTF-8 with replacement) HTML into a tree rooted at a "#document"
/// element. Never throws on malformed input.
inline DomTree parse_html(std::string_view payload, std::string url = {}) {
    DomTree tree;
    tree.source_url = std::move(url);
    tree.root.tag = std::string(kRootTag);
    const std::string src = sanitize_utf8(payload);
    const std::string_view s = src;
    detail::TreeBuilder builder(tree.root);

    std::string text;
    auto flush_text = [&] {
        builder.add_text(text);
        text.clear();
    };

    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '&') {
            if (std::size_t n = detail::decode_entity(s, i, text)) {
                i += n;
            } else {
                text.push_back(c);
                ++i;
            }
            continue;
        }
        if (c != '<' || i + 1 >= s.size()) {
            text.push_back(c);
            ++i;
            continue;
        }
        char next = s[i + 1];
        if (s.substr(i, 4) == "<!--") {
            flush_text();
            std::size_t end = s.find("-->", i + 4);
            i = end == std::string_view::npos ? s.size() : end + 3;
            continue;
        }
        if (next == '!' || next == '?') {
            flush_text();
            std::size_t end = s.find('>', i);
            i = end == std::string_view::npos ? s.size() : end + 1;
            continue;
        }
        if (next == '/' && i + 2 < s.size() && is_ascii_alpha(s[i + 2])) {
            flush_text();
            std::size_t j = i + 2;
            std::string name = detail::read_tag_name(s, j);
            std::size_t end = s.find('>', j);
            i = end == std::string_view::npos ? s.size() : end + 1;
            builder.end_tag(name);
            continue;
        }
        if (!is_ascii_alpha(next)) {
            text.push_back(c);
            ++i;
            continue;
        }

        // start tag
        flush_text();
        std::size_t j = i + 1;
        std::string name = detail::read_tag_name(s, j);
        std::vector<std::pair<std::string, std::string>> attrs;
        bool self_closing = false;
        bool closed = false;
        while (j < s.size()) {
            while (j < s.size() && is_space(s[j])) ++j;
            if (j >= s.size()) break;
            if (s[j] == '>') {
                closed = true;
                ++j;
                break;
            }
            if (s[j] == '/') {
                if (j + 1 < s.size() && s[j + 1] == '>') {
                    self_closing = true;
                    closed = true;
                    j += 2;
                    break;
                }
                ++j;
                continue;
            }
            std::string key;
            while (j < s.size() && !is_space(s[j]) && s[j] != '=' && s[j] != '>' &&
                   !(s[j] == '/' && j + 1 < s.size() && s[j + 1] == '>')) {
                key.push_back(ascii_lower(s[j]));
                ++j;
            }
            while (j < s.size() && is_space(s[j])) ++j;
            std::string value;
            if (j < s.size() && s[j] == '=') {
                ++j;
                while (j < s.size() && is_space(s[j])) ++j;
                if (j < s.size() && (s[j] == '"' || s[j] == '\'')) {
                    char q = s[j++];
                    std::size_t end = s.find(q, j);
                    if (end == std::string_view::npos) end = s.size();
                    value = decode_entities(s.substr(j, end - j));
                    j = std::min(end + 1, s.size());
                } else {
                    std::size_t start = j;
                    while (j < s.size() && !is_space(s[j]) && s[j] != '>') ++j;
                    value = decode_entities(s.substr(start, j - start));
                }
            }
            if (key.empty()) {
                ++j;
                continue;
            }
            bool dup = std::any_of(attrs.begin(), attrs.end(),
                                   [&](const auto& kv) { return kv.first == key; });
            if (!dup) attrs.emplace_back(std::move(key), std::move(value));
        }
        i = j;
        if (!closed) break;  // EOF inside a tag

        bool raw = detail::is_raw_text(name);
        bool is_pre = name == "pre" || name == "listing" || name == "textarea";
        std::string tag_name = name;
        bool open = builder.start_tag(std::move(name), std::move(attrs), self_closing);
        if (raw && open) {
            // content up to the matching end tag, case-insensitive
            std::string close = "</" + tag_name;
            std::size_t end = i;
            while (true) {
                end = s.find("</", end);
                if (end == std::string_view::npos) break;
                if (starts_with_icase(s.substr(end), close)) {
                    std::size_t after = end + close.size();
                    if (after >= s.size() || is_space(s[after]) || s[after] == '>' ||
                        s[after] == '/') {
                        break;
                    }
                }
                end += 2;
            }
            std::string_view body =
                s.substr(i, end == std::string_view::npos ? std::string_view::npos : end - i);
            if (tag_name == "textarea" || tag_name == "title") {
                builder.add_text(decode_entities(body));
            } else {
                builder.add_text(body);
            }
            if (end == std::string_view::npos) {
                i = s.size();
            } else {
                std::size_t gt = s.find('>', end);
                i = gt == std::string_view::npos ? s.size() : gt + 1;
                builder.end_tag(tag_name);
            }
            continue;
        }
        if (is_pre && open && i < s.size() && s[i] == '\n') ++i;  // leading newline in pre
    }
    flush_text();
    builder.finish();
    std::int64_t next = 0;
    detail::assign_ids(tree.root, next);
    tree.next_id = next;
    return tree;
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline void escape_into(std::string& out, std::string_view s, bool attribute) {
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += attribute ? "<" : "&lt;"; break;
            case '>': out += attribute ? ">" : "&gt;"; break;
            case '"': out += attribute ? "&quot;" : "\""; break;
            default: out.push_back(c);
        }
    }
}

inline void serialize_into(std::string& out, const DomNode& n, bool raw_parent) {
    if (n.is_text()) {
        if (raw_parent) out += n.text;
        else escape_into(out, n.text, false);
        return;
    }
    if (n.tag == kRootTag) {
        for (const auto& c : n.children) serialize_into(out, c, false);
        return;
    }
    out.push_back('<');
    out += n.tag;
    for (const auto& [k, v] : n.attributes) {
        out.push_back(' ');
        out += k;
        out += "=\"";
        escape_into(out, v, true);
        out.push_back('"');
    }
    out.push_back('>');
    if (is_void(n.tag)) return;
    bool raw = n.tag == "script" || n.tag == "style";
    for (const auto& c : n.children) serialize_into(out, c, raw);
    out += "</";
    out += n.tag;
    out.push_back('>');
}

}  // namespace detail

/// Outer HTML of a node (inner HTML for the document root).
inline std::string serialize(const DomNode& node) {
    std::string out;
    detail::serialize_into(out, node, false);
    return out;
}

/// The start tag as it would be serialized, e.g. `<script type="math/tex">`.
inline std::string start_tag_string(const DomNode& node) {
    std::string out = "<" + node.tag;
    for (const auto& [k, v] : node.attributes) {
        out += " " + k + "=\"";
        detail::escape_into(out, v, true);
        out += "\"";
    }
    out += ">";
    return out;
}

// ---------------------------------------------------------------------------
// Hidden elements

inline bool is_hidden(const DomNode& node) {
    if (!node.is_element()) return false;
    if (auto v = node.attr("aria-hidden"); v && to_lower_ascii(trim(*v)) == "true") return true;
    if (auto style = node.attr("style")) {
        std::string compact;
        for (char c : *style) {
            if (!is_space(c)) compact.push_back(ascii_lower(c));
        }
        if (compact.find("display:none") != std::string::npos ||
            compact.find("visibility:hidden") != std::string::npos) {
            return true;
        }
    }
    return false;
}

namespace detail {

inline void strip_hidden_into(DomNode& node) {
    std::erase_if(node.children, [](const DomNode& c) { return is_hidden(c); });
    for (auto& c : node.children) strip_hidden_into(c);
}

}  // namespace detail

/// Copy of the tree without hidden subtrees; remaining node ids unchanged.
inline DomTree strip_hidden(DomTree tree) {
    detail::strip_hidden_into(tree.root);
    return tree;
}

// ---------------------------------------------------------------------------
// Text rendering

/// Accumulates rendered text with line-boundary bookkeeping: blocks start on
/// a fresh line, whitespace runs collapse outside preformatted content, and
/// at most one blank line survives between blocks.
class TextSink {
public:
    void text(std::string_view s) {
        for (char c : s) {
            if (is_space(c)) {
                pending_space_ = true;
                continue;
            }
            flush_breaks();
            if (pending_space_ && !out_.empty() && out_.back() != '\n') out_.push_back(' ');
            pending_space_ = false;
            out_.push_back(c);
        }
    }

    void preformatted(std::string_view s) {
        if (s.empty()) return;
        flush_breaks();
        if (pending_space_ && !out_.empty() && out_.back() != '\n') out_.push_back(' ');
        pending_space_ = false;
        out_ += s;
    }

    void block() {
        if (!out_.empty()) pending_newlines_ = std::max(pending_newlines_, 1);
        pending_space_ = false;
    }

    void hard_break() {
        if (!out_.empty()) pending_newlines_ = std::min(pending_newlines_ + 1, 2);
        pending_space_ = false;
    }

    void space() { pending_space_ = true; }

    /// A whole line written verbatim on its own.
    void line(std::string_view s) {
        block();
        flush_breaks();
        if (!out_.empty() && out_.back() != '\n') out_.push_back('\n');
        out_ += s;
        block();
    }

    std::string finish() {
        std::string s = std::move(out_);
        while (!s.empty() && is_space(s.back())) s.pop_back();
        std::size_t b = 0;
        while (b < s.size() && s[b] == '\n') ++b;
        return s.substr(b);
    }

private:
    void flush_breaks() {
        if (pending_newlines_ == 0) return;
        if (!out_.empty()) {
            while (!out_.empty() && (out_.back() == ' ' || out_.back() == '\t')) out_.pop_back();
            int have = 0;
            for (auto it = out_.rbegin(); it != out_.rend() && *it == '\n' && have < 2; ++it) ++have;
            for (int k = have; k < pending_newlines_; ++k) out_.push_back('\n');
        }
        pending_newlines_ = 0;
        pending_space_ = false;
    }

    std::string out_;
    int pending_newlines_ = 0;
    bool pending_space_ = false;
};

struct RenderOptions {
    /// Called for each element before default rendering; return true when it
    /// rendered the element itself.
    std::function<bool(const DomNode&, TextSink&)> custom;
    /// Called for each element; return true to drop the subtree (a block
    /// boundary is still emitted in its place).
    std::function<bool(const DomNode&)> skip;
};

namespace detail {

inline void render(const DomNode& node, TextSink& sink, const RenderOptions& opt, int pre_depth) {
    if (node.is_text()) {
        if (pre_depth > 0) sink.preformatted(node.text);
        else sink.text(node.text);
        return;
    }
    if (node.tag != kRootTag) {
        if (is_non_rendered_tag(node.tag)) return;
        if (opt.skip && opt.skip(node)) {
            sink.block();
            return;
        }
        if (opt.custom && opt.custom(node, sink)) return;
        if (node.tag == "br") {
            sink.hard_break();
            return;
        }
    }
    bool block = is_block_tag(node.tag);
    bool cell = node.tag == "td" || node.tag == "th";
    bool pre = node.tag == "pre" || node.tag == "textarea" || node.tag == "listing";
    if (block) sink.block();
    if (cell) sink.space();
    for (const auto& c : node.children) render(c, sink, opt, pre_depth + (pre ? 1 : 0));
    if (block) sink.block();
    if (cell) sink.space();
}

}  // namespace detail

inline std::string visible_text(const DomNode& node, const RenderOptions& opt = {}) {
    TextSink sink;
    detail::render(node, sink, opt, 0);
    return sink.finish();
}

/// Rendered text of the whole page. Apply strip_hidden first; this function
/// does not inspect visibility.
inline std::string visible_text(const DomTree& tree, const RenderOptions& opt = {}) {
    return visible_text(tree.root, opt);
}

}  // namespace webcurate::html
