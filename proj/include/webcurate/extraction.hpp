#pragma once

// Main-content text from records.
//
// WET text goes through paragraph deduplication: a paragraph (one line) is
// dropped when its normalized form already occurred earlier in the same scope
// unit. WARC HTML goes through a density-based main-content extractor that
// picks the block with the most dense, link-poor text.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "webcurate/corpus_io.hpp"
#include "webcurate/html_dom.hpp"
#include "webcurate/text.hpp"

namespace webcurate::extraction {

enum class DedupScope { shard, snapshot, global };

inline std::string_view to_string(DedupScope s) {
    switch (s) {
        case DedupScope::shard: return "shard";
        case DedupScope::snapshot: return "snapshot";
        case DedupScope::global: return "global";
    }
    return "snapshot";
}

inline DedupScope parse_dedup_scope(std::string_view s) {
    if (s == "shard") return DedupScope::shard;
    if (s == "snapshot") return DedupScope::snapshot;
    if (s == "global") return DedupScope::global;
    throw std::invalid_argument("unknown dedup scope: " + std::string(s));
}

/// Lowercase, drop ASCII digits, trim, collapse whitespace runs.
inline std::string normalize_paragraph(std::string_view p) {
    std::string no_digits;
    no_digits.reserve(p.size());
    for (char c : p) {
        if (!is_ascii_digit(static_cast<unsigned char>(c))) no_digits.push_back(c);
    }
    return collapse_whitespace_lower(no_digits);
}

inline std::uint64_t paragraph_hash(std::string_view p) { return fnv1a64(normalize_paragraph(p)); }

struct ParagraphPosition {
    std::string snapshot_id;
    std::string shard_id;
    std::uint64_t offset = 0;
    std::size_t paragraph_index = 0;

    auto operator<=>(const ParagraphPosition&) const = default;
};

struct ParagraphKey {
    std::uint64_t hash = 0;
    ParagraphPosition first_seen;
};

/// The scope unit a document belongs to.
inline std::string scope_unit(const Document& d, DedupScope scope) {
    switch (scope) {
        case DedupScope::shard: return d.snapshot_id + '\x1f' + d.shard_id;
        case DedupScope::snapshot: return d.snapshot_id;
        case DedupScope::global: return {};
    }
    return {};
}

struct ParagraphDedupResult {
    std::vector<Document> docs;
    std::uint64_t paragraphs_removed = 0;
    std::uint64_t docs_dropped = 0;
};

/// Keeps the first occurrence (by snapshot, shard, offset, paragraph index)
/// of every normalized paragraph within each scope unit. Paragraphs that
/// normalize to the empty string are never treated as duplicates. Output
/// order follows input order; emptied documents are dropped.
inline ParagraphDedupResult paragraph_dedup(std::vector<Document> docs, DedupScope scope) {
    std::vector<std::size_t> order(docs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Document& x = docs[a];
        const Document& y = docs[b];
        return std::tie(x.snapshot_id, x.shard_id, x.offset, a) <
               std::tie(y.snapshot_id, y.shard_id, y.offset, b);
    });

    std::map<std::string, std::unordered_set<std::uint64_t>> seen;
    std::vector<bool> dropped(docs.size(), false);
    ParagraphDedupResult result;
    for (std::size_t idx : order) {
        Document& d = docs[idx];
        auto& unit = seen[scope_unit(d, scope)];
        std::vector<std::string> kept;
        kept.reserve(d.paragraphs.size());
        for (auto& p : d.paragraphs) {
            std::string norm = normalize_paragraph(p);
            if (norm.empty() || unit.insert(fnv1a64(norm)).second) {
                kept.push_back(std::move(p));
            } else {
                ++result.paragraphs_removed;
            }
        }
        bool has_text = std::any_of(kept.begin(), kept.end(),
                                    [](const std::string& p) { return !trim(p).empty(); });
        if (!has_text) {
            dropped[idx] = true;
            ++result.docs_dropped;
            continue;
        }
        d.set_paragraphs(std::move(kept));
    }
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (!dropped[i]) result.docs.push_back(std::move(docs[i]));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Main-content extraction

struct MainContentConfig {
    std::size_t min_chars = 100;
    double max_link_density = 0.5;
};

inline bool is_boilerplate_tag(std::string_view tag) {
    return tag == "nav" || tag == "header" || tag == "footer" || tag == "aside" || tag == "form" ||
           tag == "menu";
}

namespace detail {

struct BlockStats {
    std::size_t text_chars = 0;
    std::size_t link_chars = 0;
    std::size_t markup_chars = 0;
};

inline BlockStats collect_stats(const html::DomNode& n, bool in_link,
                                std::vector<BlockStats>& table) {
    BlockStats s;
    if (n.is_text()) {
        std::size_t len = char_length(trim(n.text));
        s.text_chars = len;
        s.link_chars = in_link ? len : 0;
        s.markup_chars = char_length(n.text);
    } else if (!html::is_non_rendered_tag(n.tag)) {
        bool link = in_link || n.tag == "a";
        s.markup_chars = n.tag == html::kRootTag ? 0 : html::start_tag_string(n).size() + n.tag.size() + 3;
        for (const auto& c : n.children) {
            BlockStats cs = collect_stats(c, link, table);
            s.text_chars += cs.text_chars;
            s.link_chars += cs.link_chars;
            s.markup_chars += cs.markup_chars;
        }
    } else {
        s.markup_chars = html::serialize(n).size();
    }
    auto id = static_cast<std::size_t>(std::max<std::int64_t>(n.node_id, 0));
    if (id >= table.size()) table.resize(id + 1);
    table[id] = s;
    return s;
}

inline double link_density(const BlockStats& s) {
    return s.text_chars == 0 ? 0.0
                             : static_cast<double>(s.link_chars) / static_cast<double>(s.text_chars);
}

inline bool is_candidate_tag(std::string_view tag) {
    return tag == "body" || tag == "main" || tag == "article" || tag == "section" ||
           tag == "div" || tag == "td" || tag == "p" || tag == "blockquote" || tag == "pre" ||
           tag == "ul" || tag == "ol" || tag == "table";
}

}  // namespace detail

/// Text of the best-scoring block (text chars x text density x (1 - link
/// density)). Inside the chosen block, boilerplate elements and child blocks
/// with link density above the cutoff are skipped. Returns nullopt when no
/// block has at least `min_chars` characters of text.
inline std::optional<std::string> extract_main_content(const html::DomTree& tree,
                                                       const MainContentConfig& cfg = {}) {
    std::vector<detail::BlockStats> table(static_cast<std::size_t>(std::max<std::int64_t>(tree.next_id, 1)));
    detail::collect_stats(tree.root, false, table);

    const html::DomNode* best = nullptr;
    double best_score = -1.0;
    // Pre-order walk so that ties go to the outermost block.
    auto visit = [&](auto&& self, const html::DomNode& n, bool in_boilerplate) -> void {
        if (!n.is_element() || html::is_non_rendered_tag(n.tag)) return;
        bool boiler = in_boilerplate || is_boilerplate_tag(n.tag);
        if (!boiler && detail::is_candidate_tag(n.tag)) {
            const auto& s = table[static_cast<std::size_t>(n.node_id)];
            double ld = detail::link_density(s);
            if (s.text_chars >= cfg.min_chars && ld <= cfg.max_link_density && s.markup_chars > 0) {
                double density = static_cast<double>(s.text_chars) / static_cast<double>(s.markup_chars);
                double score = static_cast<double>(s.text_chars) * density * (1.0 - ld);
                if (score > best_score) {
                    best_score = score;
                    best = &n;
                }
            }
        }
        for (const auto& c : n.children) self(self, c, boiler);
    };
    visit(visit, tree.root, false);
    if (best == nullptr) return std::nullopt;

    html::RenderOptions opt;
    opt.skip = [&](const html::DomNode& n) {
        if (&n == best) return false;
        if (is_boilerplate_tag(n.tag)) return true;
        if (!html::is_block_tag(n.tag) && n.tag != "td" && n.tag != "th") return false;
        const auto& s = table[static_cast<std::size_t>(n.node_id)];
        return s.text_chars > 0 && detail::link_density(s) > cfg.max_link_density;
    };
    std::string text = html::visible_text(*best, opt);
    if (char_length(text) < cfg.min_chars) return std::nullopt;
    return text;
}

/// Full rendered text of a page, sidebars included.
inline std::string html_to_fulltext(const html::DomTree& tree, const html::RenderOptions& opt = {}) {
    return html::visible_text(tree, opt);
}

/// Whitespace tokens of an HTML payload with markup brackets treated as
/// separators; an upper bound for the tokens any text rendering can produce.
inline std::uint64_t html_token_count(std::string_view payload) {
    std::uint64_t n = 0;
    bool in_token = false;
    for (char c : payload) {
        if (is_space(c) || c == '<' || c == '>') {
            in_token = false;
        } else if (!in_token) {
            in_token = true;
            ++n;
        }
    }
    return n;
}

}  // namespace webcurate::extraction
