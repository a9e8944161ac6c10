#pragma once

// Heuristic quality rules for web text.
//
// Every rule produces a RuleVerdict with the measured value and the threshold
// it was compared against. Rules have one of two directions:
//   max  - fails when measured > threshold (ratios, word_count_max, ...)
//   min  - fails when measured < threshold (word_count_min, min_stop_words,
//          wet_min_length, ...)
// Equality always passes. lang_en is the one exception and fails at equality:
// English must be strictly above the confidence threshold.
//
// Counting conventions:
//   - words are whitespace tokens of the whole text;
//   - a "duplicate" sentence/paragraph is any occurrence after the first of
//     an identical string (k copies give k-1 duplicates); blank paragraphs
//     are ignored;
//   - character ratios divide by the character count of the whole text;
//   - the char size of an n-gram occurrence is the sum of its words' lengths.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "webcurate/corpus_io.hpp"
#include "webcurate/text.hpp"

namespace webcurate::filters {

struct RuleThresholds {
    double lang_confidence = 0.5;
    double wet_min_length = 300;  // characters
    double dup_sentence_ratio = 0.3;
    double dup_sentence_char_ratio = 0.2;
    double dup_paragraph_ratio = 0.3;
    double dup_paragraph_char_ratio = 0.2;
    std::map<int, double> top_ngram_char_ratio{{2, 0.20}, {3, 0.18}, {4, 0.16}};
    std::map<int, double> dup_ngram_char_ratio{{5, 0.15}, {6, 0.14}, {7, 0.13},
                                               {8, 0.12}, {9, 0.11}, {10, 0.10}};
    double word_count_min = 50;
    double word_count_max = 100000;
    double mean_word_len_min = 3;
    double mean_word_len_max = 10;
    double symbol_word_ratio = 0.1;
    double bullet_start_ratio = 0.9;
    double ellipsis_end_ratio = 0.3;
    double non_alpha_word_ratio = 0.2;
    double min_stop_words = 2;
    bool stop_words_distinct = true;
    double sentence_uppercase_ratio = 0.6;
    double max_removed_word_fraction = 0.05;

    std::vector<std::string> stop_words{"the", "be", "to", "of", "and", "that", "have", "with"};
    std::vector<std::string> bullets{"•", "‣", "▪", "-", "*"};
    std::vector<std::string> ellipses{"...", "…"};

    bool operator==(const RuleThresholds&) const = default;
};

/// Every numeric threshold by its public name. n-gram entries are named
/// `top_ngram_char_ratio.<n>` and `dup_ngram_char_ratio.<n>`.
inline std::vector<std::pair<std::string, double*>> threshold_fields(RuleThresholds& t) {
    std::vector<std::pair<std::string, double*>> out{
        {"lang_confidence", &t.lang_confidence},
        {"wet_min_length", &t.wet_min_length},
        {"dup_sentence_ratio", &t.dup_sentence_ratio},
        {"dup_sentence_char_ratio", &t.dup_sentence_char_ratio},
        {"dup_paragraph_ratio", &t.dup_paragraph_ratio},
        {"dup_paragraph_char_ratio", &t.dup_paragraph_char_ratio},
        {"word_count_min", &t.word_count_min},
        {"word_count_max", &t.word_count_max},
        {"mean_word_len_min", &t.mean_word_len_min},
        {"mean_word_len_max", &t.mean_word_len_max},
        {"symbol_word_ratio", &t.symbol_word_ratio},
        {"bullet_start_ratio", &t.bullet_start_ratio},
        {"ellipsis_end_ratio", &t.ellipsis_end_ratio},
        {"non_alpha_word_ratio", &t.non_alpha_word_ratio},
        {"min_stop_words", &t.min_stop_words},
        {"sentence_uppercase_ratio", &t.sentence_uppercase_ratio},
        {"max_removed_word_fraction", &t.max_removed_word_fraction},
    };
    for (auto& [n, v] : t.top_ngram_char_ratio) out.emplace_back("top_ngram_char_ratio." + std::to_string(n), &v);
    for (auto& [n, v] : t.dup_ngram_char_ratio) out.emplace_back("dup_ngram_char_ratio." + std::to_string(n), &v);
    return out;
}

/// Sets a threshold by name; `name[n]` is accepted for `name.n`. Returns
/// false for unknown names.
inline bool set_threshold(RuleThresholds& t, std::string name, double value) {
    if (auto lb = name.find('['); lb != std::string::npos && name.back() == ']') {
        name = name.substr(0, lb) + "." + name.substr(lb + 1, name.size() - lb - 2);
    }
    for (auto& [k, p] : threshold_fields(t)) {
        if (k == name) {
            *p = value;
            return true;
        }
    }
    return false;
}

inline bool is_ratio_field(std::string_view name) {
    return name.find("ratio") != std::string_view::npos || name == "lang_confidence" ||
           name == "max_removed_word_fraction";
}

/// Human-readable problems with a threshold set; empty when sane.
inline std::vector<std::string> validate_thresholds(const RuleThresholds& in) {
    RuleThresholds t = in;
    std::vector<std::string> out;
    for (auto& [name, p] : threshold_fields(t)) {
        double v = *p;
        if (!(v == v)) {
            out.push_back("threshold " + name + " is not a number");
        } else if (is_ratio_field(name) && (v < 0.0 || v > 1.0)) {
            out.push_back("threshold " + name + " must be within [0,1], got " + std::to_string(v));
        } else if (v < 0.0) {
            out.push_back("threshold " + name + " must be non-negative, got " + std::to_string(v));
        }
    }
    if (t.word_count_min > t.word_count_max) out.push_back("threshold word_count range is not ordered");
    if (t.mean_word_len_min > t.mean_word_len_max) {
        out.push_back("threshold mean_word_len range is not ordered");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verdicts

struct RuleVerdict {
    std::string rule_id;
    double measured = 0.0;
    double threshold = 0.0;
    bool passed = true;

    bool operator==(const RuleVerdict&) const = default;
};

inline RuleVerdict at_most(std::string id, double measured, double threshold) {
    return {std::move(id), measured, threshold, !(measured > threshold)};
}

inline RuleVerdict at_least(std::string id, double measured, double threshold) {
    return {std::move(id), measured, threshold, !(measured < threshold)};
}

enum class Decision { keep, discard };

struct FilterReport {
    std::string doc_id;
    std::vector<RuleVerdict> verdicts;
    Decision decision = Decision::keep;
    std::vector<std::pair<std::size_t, std::string>> removed_sentences;

    const RuleVerdict* first_failure() const {
        for (const auto& v : verdicts) {
            if (!v.passed) return &v;
        }
        return nullptr;
    }

    void finalize() { decision = first_failure() ? Decision::discard : Decision::keep; }
};

inline nlohmann::json to_json(const FilterReport& r) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : r.verdicts) {
        v.push_back({{"rule_id", x.rule_id}, {"measured", x.measured}, {"threshold", x.threshold},
                     {"passed", x.passed}});
    }
    nlohmann::json removed = nlohmann::json::array();
    for (const auto& [i, id] : r.removed_sentences) removed.push_back({i, id});
    return {{"doc_id", r.doc_id},
            {"decision", r.decision == Decision::keep ? "keep" : "discard"},
            {"verdicts", v},
            {"removed_sentences", removed}};
}

// ---------------------------------------------------------------------------
// Segmentation

struct TextSegmentation {
    std::vector<std::string> words;
    std::vector<std::string> sentences;
    std::vector<std::string> paragraphs;
    std::vector<std::size_t> sentence_paragraph;  // paragraph index of each sentence

    bool operator==(const TextSegmentation&) const = default;
};

/// Sentences of one paragraph: split after '.', '!' or '?' when followed by
/// whitespace or the end of the paragraph; pieces are trimmed and empty
/// pieces dropped.
inline std::vector<std::string> split_sentences(std::string_view para) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < para.size(); ++i) {
        char c = para[i];
        if ((c == '.' || c == '!' || c == '?') && (i + 1 == para.size() || is_space(para[i + 1]))) {
            auto piece = trim(para.substr(start, i + 1 - start));
            if (!piece.empty()) out.emplace_back(piece);
            start = i + 1;
        }
    }
    auto rest = trim(para.substr(std::min(start, para.size())));
    if (!rest.empty()) out.emplace_back(rest);
    return out;
}

inline TextSegmentation segment(std::string_view text) {
    TextSegmentation s;
    for (auto w : split_whitespace(text)) s.words.emplace_back(w);
    auto lines = split_lines(text);
    for (std::size_t p = 0; p < lines.size(); ++p) {
        s.paragraphs.emplace_back(lines[p]);
        for (auto& sent : split_sentences(lines[p])) {
            s.sentences.push_back(std::move(sent));
            s.sentence_paragraph.push_back(p);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Language and length

using LangScores = std::map<std::string, double>;

inline bool is_english_label(std::string_view label) {
    std::string l = to_lower_ascii(label);
    if (l.starts_with("__label__")) l = l.substr(9);
    return l == "en" || l == "eng" || l == "english";
}

/// Keeps when English has the highest score and that score is strictly
/// above the confidence threshold. No scores at all fails as lang_missing.
inline RuleVerdict language_filter(const std::optional<LangScores>& scores,
                                   const RuleThresholds& t = {}) {
    if (!scores || scores->empty()) return {"lang_missing", 0.0, t.lang_confidence, false};
    double en = 0.0;
    double other = 0.0;
    for (const auto& [label, v] : *scores) {
        if (is_english_label(label)) en = std::max(en, v);
        else other = std::max(other, v);
    }
    bool passed = en >= other && en > t.lang_confidence;
    return {"lang_en", en, t.lang_confidence, passed};
}

inline RuleVerdict wet_length_filter(const Document& doc, const RuleThresholds& t = {}) {
    return at_least("wet_min_length", static_cast<double>(char_length(doc.text)), t.wet_min_length);
}

// ---------------------------------------------------------------------------
// Repetition

namespace detail {

inline double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

struct DuplicateCount {
    std::size_t units = 0;
    std::size_t duplicates = 0;
    std::size_t duplicate_chars = 0;
};

template <typename Range>
DuplicateCount count_duplicates(const Range& items) {
    DuplicateCount c;
    std::unordered_set<std::string_view> seen;
    for (const auto& item : items) {
        std::string_view s = item;
        if (trim(s).empty()) continue;
        ++c.units;
        if (!seen.insert(s).second) {
            ++c.duplicates;
            c.duplicate_chars += char_length(s);
        }
    }
    return c;
}

// Word n-grams keyed by interned word ids; exact comparison on hash hits.
class NgramIndex {
public:
    explicit NgramIndex(const std::vector<std::string>& words) {
        std::unordered_map<std::string_view, std::uint32_t> ids;
        ids_.reserve(words.size());
        chars_.reserve(words.size());
        for (const auto& w : words) {
            auto [it, fresh] = ids.emplace(w, static_cast<std::uint32_t>(ids.size()));
            ids_.push_back(it->second);
            chars_.push_back(char_length(w));
        }
    }

    std::size_t size() const { return ids_.size(); }
    std::size_t word_chars(std::size_t i) const { return chars_[i]; }

    /// For every start position, the start of the first occurrence of the
    /// identical n-gram (itself when new).
    std::vector<std::size_t> first_occurrence(std::size_t n) const {
        std::vector<std::size_t> first;
        if (ids_.size() < n) return first;
        std::size_t count = ids_.size() - n + 1;
        first.resize(count);
        std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
        buckets.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            std::uint64_t h = kFnvOffset;
            for (std::size_t k = 0; k < n; ++k) h = fnv1a64_u64(ids_[i + k], h);
            auto& bucket = buckets[h];
            first[i] = i;
            for (std::size_t cand : bucket) {
                if (std::equal(ids_.begin() + static_cast<std::ptrdiff_t>(cand),
                               ids_.begin() + static_cast<std::ptrdiff_t>(cand + n),
                               ids_.begin() + static_cast<std::ptrdiff_t>(i))) {
                    first[i] = cand;
                    break;
                }
            }
            if (first[i] == i) bucket.push_back(i);
        }
        return first;
    }

    std::size_t ngram_chars(std::size_t start, std::size_t n) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < n; ++k) c += chars_[start + k];
        return c;
    }

private:
    std::vector<std::uint32_t> ids_;
    std::vector<std::size_t> chars_;
};

}  // namespace detail

/// Characters covered by the most frequent n-gram (count x n-gram chars;
/// ties go to the longer n-gram). Zero when no n-gram repeats.
inline std::size_t top_ngram_chars(const detail::NgramIndex& idx, std::size_t n) {
    auto first = idx.first_occurrence(n);
    std::unordered_map<std::size_t, std::size_t> counts;
    for (std::size_t f : first) ++counts[f];
    std::size_t best_count = 1;
    std::size_t best_chars = 0;
    for (const auto& [start, count] : counts) {
        if (count < 2) continue;
        std::size_t chars = count * idx.ngram_chars(start, n);
        if (count > best_count || (count == best_count && chars > best_chars)) {
            best_count = count;
            best_chars = chars;
        }
    }
    return best_chars;
}

/// Characters of words lying inside any repeat occurrence (every occurrence
/// after the first) of an n-gram; each word is counted once.
inline std::size_t duplicate_ngram_chars(const detail::NgramIndex& idx, std::size_t n) {
    auto first = idx.first_occurrence(n);
    std::vector<bool> covered(idx.size(), false);
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (first[i] != i) {
            for (std::size_t k = 0; k < n; ++k) covered[i + k] = true;
        }
    }
    std::size_t chars = 0;
    for (std::size_t i = 0; i < covered.size(); ++i) {
        if (covered[i]) chars += idx.word_chars(i);
    }
    return chars;
}

inline std::vector<RuleVerdict> repetition_filter(const Document& doc, const TextSegmentation& seg,
                                                  const RuleThresholds& t = {}) {
    const double total_chars = static_cast<double>(char_length(doc.text));
    std::vector<RuleVerdict> out;

    auto sent = detail::count_duplicates(seg.sentences);
    out.push_back(at_most("dup_sentence_ratio",
                          detail::ratio(static_cast<double>(sent.duplicates), static_cast<double>(sent.units)),
                          t.dup_sentence_ratio));
    out.push_back(at_most("dup_sentence_char_ratio",
                          detail::ratio(static_cast<double>(sent.duplicate_chars), total_chars),
                          t.dup_sentence_char_ratio));

    auto para = detail::count_duplicates(seg.paragraphs);
    out.push_back(at_most("dup_paragraph_ratio",
                          detail::ratio(static_cast<double>(para.duplicates), static_cast<double>(para.units)),
                          t.dup_paragraph_ratio));
    out.push_back(at_most("dup_paragraph_char_ratio",
                          detail::ratio(static_cast<double>(para.duplicate_chars), total_chars),
                          t.dup_paragraph_char_ratio));

    detail::NgramIndex idx(seg.words);
    for (const auto& [n, threshold] : t.top_ngram_char_ratio) {
        double chars = static_cast<double>(top_ngram_chars(idx, static_cast<std::size_t>(n)));
        out.push_back(at_most("top_ngram_char_ratio_" + std::to_string(n),
                              detail::ratio(chars, total_chars), threshold));
    }
    for (const auto& [n, threshold] : t.dup_ngram_char_ratio) {
        double chars = static_cast<double>(duplicate_ngram_chars(idx, static_cast<std::size_t>(n)));
        out.push_back(at_most("dup_ngram_char_ratio_" + std::to_string(n),
                              detail::ratio(chars, total_chars), threshold));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Document-level rules

namespace detail {

inline std::size_t count_occurrences(std::string_view s, std::string_view needle) {
    if (needle.empty()) return 0;
    std::size_t n = 0;
    for (std::size_t pos = s.find(needle); pos != std::string_view::npos;
         pos = s.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

inline bool has_alpha(std::string_view w) {
    std::size_t pos = 0;
    while (pos < w.size()) {
        if (is_alpha(next_code_point(w, pos))) return true;
    }
    return false;
}

inline std::string_view strip_ascii_punct(std::string_view w) {
    auto punct = [](char c) {
        auto u = static_cast<unsigned char>(c);
        return u < 0x80 && !is_ascii_alpha(u) && !is_ascii_digit(u);
    };
    std::size_t b = 0;
    std::size_t e = w.size();
    while (b < e && punct(w[b])) ++b;
    while (e > b && punct(w[e - 1])) --e;
    return w.substr(b, e - b);
}

}  // namespace detail

inline std::size_t count_stop_words(const std::vector<std::string>& words, const RuleThresholds& t) {
    std::set<std::string> distinct;
    std::size_t total = 0;
    for (const auto& w : words) {
        std::string lw = to_lower_ascii(detail::strip_ascii_punct(w));
        if (std::find(t.stop_words.begin(), t.stop_words.end(), lw) != t.stop_words.end()) {
            distinct.insert(lw);
            ++total;
        }
    }
    return t.stop_words_distinct ? distinct.size() : total;
}

inline std::vector<RuleVerdict> document_filter(const Document& doc, const TextSegmentation& seg,
                                                const RuleThresholds& t = {}) {
    (void)doc;
    const double words = static_cast<double>(seg.words.size());
    const double sentences = static_cast<double>(seg.sentences.size());
    std::vector<RuleVerdict> out;

    out.push_back(at_least("word_count_min", words, t.word_count_min));
    out.push_back(at_most("word_count_max", words, t.word_count_max));

    std::size_t word_chars = 0;
    for (const auto& w : seg.words) word_chars += char_length(w);
    double mean = detail::ratio(static_cast<double>(word_chars), words);
    out.push_back(at_least("mean_word_length_min", mean, t.mean_word_len_min));
    out.push_back(at_most("mean_word_length_max", mean, t.mean_word_len_max));

    std::size_t symbols = 0;
    for (const auto& w : seg.words) {
        symbols += detail::count_occurrences(w, "#");
        for (const auto& e : t.ellipses) symbols += detail::count_occurrences(w, e);
    }
    out.push_back(at_most("symbol_word_ratio", detail::ratio(static_cast<double>(symbols), words),
                          t.symbol_word_ratio));

    std::size_t bullet = 0;
    std::size_t ellipsis = 0;
    for (const auto& s : seg.sentences) {
        if (std::any_of(t.bullets.begin(), t.bullets.end(),
                        [&](const std::string& b) { return s.starts_with(b); })) {
            ++bullet;
        }
        if (std::any_of(t.ellipses.begin(), t.ellipses.end(),
                        [&](const std::string& e) { return s.ends_with(e); })) {
            ++ellipsis;
        }
    }
    out.push_back(at_most("bullet_start_ratio", detail::ratio(static_cast<double>(bullet), sentences),
                          t.bullet_start_ratio));
    out.push_back(at_most("ellipsis_end_ratio", detail::ratio(static_cast<double>(ellipsis), sentences),
                          t.ellipsis_end_ratio));

    std::size_t non_alpha = 0;
    for (const auto& w : seg.words) {
        if (!detail::has_alpha(w)) ++non_alpha;
    }
    out.push_back(at_most("non_alpha_word_ratio", detail::ratio(static_cast<double>(non_alpha), words),
                          t.non_alpha_word_ratio));

    out.push_back(at_least("min_stop_words", static_cast<double>(count_stop_words(seg.words, t)),
                           t.min_stop_words));
    return out;
}

// ---------------------------------------------------------------------------
// Sentence-level rules

inline double uppercase_letter_ratio(std::string_view s) {
    std::size_t letters = 0;
    std::size_t upper = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
        char32_t c = next_code_point(s, pos);
        if (is_alpha(c)) {
            ++letters;
            if (is_upper(c)) ++upper;
        }
    }
    return letters == 0 ? 0.0 : static_cast<double>(upper) / static_cast<double>(letters);
}

/// Digits plus whitespace and . , : ; % - only, with at least one digit.
inline bool is_numeric_sentence(std::string_view s) {
    bool digit = false;
    for (char c : s) {
        if (is_ascii_digit(static_cast<unsigned char>(c))) {
            digit = true;
        } else if (!is_space(c) && std::string_view(".,:;%-").find(c) == std::string_view::npos) {
            return false;
        }
    }
    return digit;
}

/// `^\d+\s+[a-zA-Z]+$`
inline bool is_counter_sentence(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && is_ascii_digit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 0) return false;
    std::size_t ws = i;
    while (i < s.size() && is_space(s[i])) ++i;
    if (i == ws) return false;
    std::size_t letters = i;
    while (i < s.size() && is_ascii_alpha(static_cast<unsigned char>(s[i]))) ++i;
    return i > letters && i == s.size();
}

/// Rule id of the first sentence rule the sentence triggers, if any.
inline std::optional<std::string> sentence_rule_hit(std::string_view sentence, const RuleThresholds& t) {
    auto s = trim(sentence);
    if (uppercase_letter_ratio(s) > t.sentence_uppercase_ratio) return "sentence_uppercase";
    if (is_numeric_sentence(s)) return "sentence_numeric";
    if (is_counter_sentence(s)) return "sentence_counter";
    if (count_tokens(s) == 1) return "sentence_single_word";
    if (starts_with_icase(s, "sign-in")) return "sentence_sign_in";
    // `read more...$`: the dots are regex wildcards
    if (s.size() >= 12 && starts_with_icase(s.substr(s.size() - 12), "read more")) {
        return "sentence_read_more";
    }
    if (contains_icase(s, "items in card")) return "sentence_items_in_card";
    return std::nullopt;
}

struct SentenceFilterResult {
    Document doc;
    FilterReport report;
};

/// Removes matching sentences. Paragraphs that lose a sentence are rebuilt
/// from their surviving sentences joined by one space (and dropped when
/// nothing survives); untouched paragraphs keep their exact text. When the
/// removed words exceed the allowed fraction the report says discard.
inline SentenceFilterResult sentence_filter(const Document& doc, const TextSegmentation& seg,
                                            const RuleThresholds& t = {}) {
    SentenceFilterResult r;
    r.doc = doc;
    r.report.doc_id = doc.doc_id;
    std::size_t removed_words = 0;
    std::vector<bool> removed(seg.sentences.size(), false);
    for (std::size_t i = 0; i < seg.sentences.size(); ++i) {
        if (auto hit = sentence_rule_hit(seg.sentences[i], t)) {
            removed[i] = true;
            removed_words += count_tokens(seg.sentences[i]);
            r.report.removed_sentences.emplace_back(i, std::move(*hit));
        }
    }
    double fraction = detail::ratio(static_cast<double>(removed_words), static_cast<double>(seg.words.size()));
    r.report.verdicts.push_back(at_most("removed_word_fraction", fraction, t.max_removed_word_fraction));
    r.report.finalize();
    if (r.report.removed_sentences.empty()) return r;

    std::vector<std::vector<std::string_view>> survivors(seg.paragraphs.size());
    std::vector<bool> touched(seg.paragraphs.size(), false);
    for (std::size_t i = 0; i < seg.sentences.size(); ++i) {
        std::size_t p = seg.sentence_paragraph[i];
        if (removed[i]) touched[p] = true;
        else survivors[p].push_back(seg.sentences[i]);
    }
    std::vector<std::string> paragraphs;
    for (std::size_t p = 0; p < seg.paragraphs.size(); ++p) {
        if (!touched[p]) paragraphs.push_back(seg.paragraphs[p]);
        else if (!survivors[p].empty()) paragraphs.push_back(join(survivors[p], " "));
    }
    r.doc.set_paragraphs(std::move(paragraphs));
    return r;
}

// ---------------------------------------------------------------------------
// Composition

enum class WebSource { wet, warc };

struct WebFilterResult {
    Document doc;
    FilterReport report;
};

/// Repetition, document and sentence rules on extracted page text.
inline WebFilterResult run_quality_rules(const Document& doc, const RuleThresholds& t = {}) {
    WebFilterResult r;
    r.report.doc_id = doc.doc_id;
    auto seg = segment(doc.text);
    for (auto& v : repetition_filter(doc, seg, t)) r.report.verdicts.push_back(std::move(v));
    for (auto& v : document_filter(doc, seg, t)) r.report.verdicts.push_back(std::move(v));
    auto sf = sentence_filter(doc, seg, t);
    for (auto& v : sf.report.verdicts) r.report.verdicts.push_back(std::move(v));
    r.report.removed_sentences = std::move(sf.report.removed_sentences);
    r.doc = std::move(sf.doc);
    r.report.finalize();
    return r;
}

inline WebFilterResult run_web_filters(const Document& doc, WebSource source,
                                       const std::optional<LangScores>& lang,
                                       const RuleThresholds& t = {}) {
    WebFilterResult r;
    r.doc = doc;
    r.report.doc_id = doc.doc_id;
    r.report.verdicts.push_back(language_filter(lang, t));
    if (source == WebSource::wet) {
        r.report.verdicts.push_back(wet_length_filter(doc, t));
    } else {
        auto rules = run_quality_rules(doc, t);
        for (auto& v : rules.report.verdicts) r.report.verdicts.push_back(std::move(v));
        r.report.removed_sentences = std::move(rules.report.removed_sentences);
        r.doc = std::move(rules.doc);
    }
    r.report.finalize();
    return r;
}

}  // namespace webcurate::filters
