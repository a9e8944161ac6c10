#pragma once

// Question-answer mining.
//
// Open QA: plain-text pages that mention both a question keyword and an
// answer keyword are kept whole (optionally gated by a classifier).
//
// Multiple choice: a choice list is a run of lines whose serials continue
// one sequence (a, b, c / 1, 2, 3 / i, ii, iii) with one delimiter. A list
// becomes an item when the line after it starts with an answer keyword; the
// line before it is the stem, and an "explanation:" line after the answer is
// picked up when present. Items are re-rendered canonically:
//
//   <stem>
//   A. <choice>
//   B. <choice>
//   Answer:<answer>
//   Explanation:<explanation>
//
// Numeric and roman serials are re-lettered, and an answer naming a serial is
// mapped to the matching letter.

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "webcurate/classifier.hpp"
#include "webcurate/corpus_io.hpp"
#include "webcurate/text.hpp"

namespace webcurate::qa {

enum class SerialFormat { alpha, numeric, roman };

inline std::string_view to_string(SerialFormat f) {
    switch (f) {
        case SerialFormat::alpha: return "alpha";
        case SerialFormat::numeric: return "numeric";
        case SerialFormat::roman: return "roman";
    }
    return "alpha";
}

struct QaKeywordSets {
    std::vector<std::string> question_keywords{
        "what",  "where",      "why",   "when",         "who",    "whose",   "how",
        "q&a",   "q & a",      "q:",    "que:",         "question:", "quiz:", "exam:",
        "examination:", "probe:", "request:", "challenge:", "test:", "query:", "survey:"};
    std::vector<std::string> answer_keywords{
        "q&a",     "q & a",     "a:",       "ans:",     "answer:",     "solution:",
        "reply:",  "response:", "result:",  "outcome:", "explanation:", "conclusion:",
        "finding:", "assertion:", "statement:", "clarification:"};
    std::vector<std::string> mcq_answer_keywords{"answer:", "solution:", "reply:", "response:",
                                                 "ans:",    "a:",        "r:"};
    std::string explanation_keyword = "explanation:";
    std::vector<char> delimiters{'.', '-', ')', '>', ']', ' '};
};

// ---------------------------------------------------------------------------
// Open QA

namespace detail {

inline bool is_word_keyword(std::string_view k) {
    return !k.empty() && std::all_of(k.begin(), k.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
}

inline bool contains_word_icase(std::string_view text, std::string_view word) {
    std::size_t i = 0;
    while (i < text.size()) {
        if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
        if (j - i == word.size() && starts_with_icase(text.substr(i), word)) return true;
        i = j;
    }
    return false;
}

inline bool mentions(std::string_view text, const std::vector<std::string>& keywords) {
    return std::any_of(keywords.begin(), keywords.end(), [&](const std::string& k) {
        return is_word_keyword(k) ? contains_word_icase(text, k) : contains_icase(text, k);
    });
}

}  // namespace detail

inline bool openqa_rule_filter(const Document& doc, const QaKeywordSets& kw = {}) {
    return detail::mentions(doc.text, kw.question_keywords) && detail::mentions(doc.text, kw.answer_keywords);
}

/// Rule-passing documents, unchanged apart from the domain tag. With a
/// model, only those scoring above `threshold` are kept.
inline std::optional<Document> openqa_extract(Document doc, const classifier::NgramModel* model = nullptr,
                                              double threshold = classifier::kScoreThreshold) {
    if (model != nullptr && !(classifier::score(*model, doc.text) > threshold)) return std::nullopt;
    doc.domain_tag = DomainTag::open_qa;
    return doc;
}

// ---------------------------------------------------------------------------
// Choice lists

struct ChoiceEntry {
    std::string serial;
    char delimiter = '.';
    std::string body;

    bool operator==(const ChoiceEntry&) const = default;
};

struct ChoiceList {
    std::size_t start_line = 0;
    std::vector<ChoiceEntry> entries;
    SerialFormat serial_format = SerialFormat::alpha;

    std::size_t end_line() const { return start_line + entries.size(); }
};

/// Roman numerals 1..39 in canonical lower-case form.
inline std::string to_roman(int n) {
    static constexpr std::array<std::string_view, 4> kTens{"", "x", "xx", "xxx"};
    static constexpr std::array<std::string_view, 10> kOnes{"", "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
    if (n < 1 || n > 39) throw std::out_of_range("to_roman: " + std::to_string(n));
    return std::string(kTens[n / 10]) + std::string(kOnes[n % 10]);
}

/// 0-based position of `serial` within `format`'s sequence.
inline std::optional<int> serial_index(std::string_view serial, SerialFormat format) {
    if (serial.empty()) return std::nullopt;
    switch (format) {
        case SerialFormat::alpha:
            if (serial.size() == 1 && std::isalpha(static_cast<unsigned char>(serial[0]))) {
                return std::tolower(static_cast<unsigned char>(serial[0])) - 'a';
            }
            return std::nullopt;
        case SerialFormat::numeric: {
            if (serial.size() > 3 || !std::all_of(serial.begin(), serial.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                return std::nullopt;
            }
            int v = std::stoi(std::string(serial));
            if (v < 1) return std::nullopt;
            return v - 1;
        }
        case SerialFormat::roman: {
            bool lower = std::islower(static_cast<unsigned char>(serial[0])) != 0;
            for (char c : serial) {
                if ((std::islower(static_cast<unsigned char>(c)) != 0) != lower) return std::nullopt;
            }
            std::string s = to_lower_ascii(serial);
            for (int n = 1; n <= 39; ++n) {
                if (to_roman(n) == s) return n - 1;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

namespace detail {

struct ParsedLine {
    std::string serial;
    char delimiter;
    std::string body;
};

inline std::optional<ParsedLine> parse_serial_line(std::string_view raw, const std::vector<char>& delimiters) {
    std::string_view line = trim(raw);
    std::size_t n = 0;
    while (n < line.size() && std::isalnum(static_cast<unsigned char>(line[n]))) ++n;
    if (n == 0 || n >= line.size()) return std::nullopt;
    char delim = line[n];
    if (std::find(delimiters.begin(), delimiters.end(), delim) == delimiters.end()) return std::nullopt;
    std::string_view rest = line.substr(n + 1);
    if (delim == ' ') {
        // exactly one space, then a body that does not start with a digit
        if (rest.empty() || is_space(rest[0]) || std::isdigit(static_cast<unsigned char>(rest[0]))) return std::nullopt;
    }
    std::string_view body = trim(rest);
    if (body.empty()) return std::nullopt;
    return ParsedLine{std::string(line.substr(0, n)), delim, std::string(body)};
}

inline bool is_upper_serial(std::string_view s) {
    return std::isupper(static_cast<unsigned char>(s[0])) != 0;
}

}  // namespace detail

/// Maximal non-overlapping choice lists (two or more lines), in line order.
inline std::vector<ChoiceList> detect_choice_lists(const std::vector<std::string_view>& lines,
                                                   const QaKeywordSets& kw = {}) {
    std::vector<std::optional<detail::ParsedLine>> parsed;
    parsed.reserve(lines.size());
    for (auto l : lines) parsed.push_back(detail::parse_serial_line(l, kw.delimiters));

    std::vector<ChoiceList> out;
    std::size_t i = 0;
    while (i < lines.size()) {
        std::optional<ChoiceList> best;
        if (parsed[i]) {
            for (SerialFormat f : {SerialFormat::alpha, SerialFormat::numeric, SerialFormat::roman}) {
                if (serial_index(parsed[i]->serial, f) != 0) continue;
                const bool upper = detail::is_upper_serial(parsed[i]->serial);
                ChoiceList cl{i, {}, f};
                for (std::size_t k = i; k < lines.size(); ++k) {
                    const auto& p = parsed[k];
                    if (!p || p->delimiter != parsed[i]->delimiter) break;
                    if (f != SerialFormat::numeric && detail::is_upper_serial(p->serial) != upper) break;
                    if (serial_index(p->serial, f) != static_cast<int>(cl.entries.size())) break;
                    cl.entries.push_back({p->serial, p->delimiter, p->body});
                }
                if (cl.entries.size() >= 2 && (!best || cl.entries.size() > best->entries.size())) best = std::move(cl);
            }
        }
        if (best) {
            i = best->end_line();
            out.push_back(std::move(*best));
        } else {
            ++i;
        }
    }
    return out;
}

inline std::vector<ChoiceList> detect_choice_lists(std::string_view text, const QaKeywordSets& kw = {}) {
    return detect_choice_lists(split_lines(text), kw);
}

// ---------------------------------------------------------------------------
// Multiple-choice items

struct McqItem {
    std::string question;
    std::vector<std::string> choices;
    std::string answer;
    std::optional<std::string> explanation;
    std::string source_doc_id;
    SerialFormat serial_format = SerialFormat::alpha;

    bool operator==(const McqItem&) const = default;
};

namespace detail {

// Text after a leading keyword, or nullopt when the line does not start with one.
inline std::optional<std::string_view> after_keyword(std::string_view line,
                                                     const std::vector<std::string>& keywords) {
    std::string_view l = trim(line);
    for (const auto& k : keywords) {
        if (starts_with_icase(l, k)) return l.substr(k.size());
    }
    return std::nullopt;
}

inline std::string letter(std::size_t i) { return std::string(1, static_cast<char>('A' + i)); }

// Choice index an answer refers to; nullopt for free text, -1 for a
// serial-looking answer that names no existing choice.
inline std::optional<int> answer_reference(std::string_view answer, SerialFormat format, std::size_t n) {
    std::string_view a = trim(answer);
    while (!a.empty() && std::string_view(".)]>").find(a.back()) != std::string_view::npos) a.remove_suffix(1);
    if (a.empty()) return std::nullopt;
    std::optional<int> idx = serial_index(a, format);
    if (!idx && a.size() == 1 && std::isalpha(static_cast<unsigned char>(a[0]))) idx = serial_index(a, SerialFormat::alpha);
    if (!idx && std::all_of(a.begin(), a.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        idx = serial_index(a, SerialFormat::numeric);
    }
    if (!idx) return std::nullopt;
    return *idx >= 0 && static_cast<std::size_t>(*idx) < n ? *idx : -1;
}

inline std::string strip_leading_serial(std::string_view stem, const QaKeywordSets& kw) {
    std::vector<char> no_space;
    for (char c : kw.delimiters) {
        if (c != ' ') no_space.push_back(c);
    }
    if (auto p = parse_serial_line(stem, no_space)) {
        for (SerialFormat f : {SerialFormat::numeric, SerialFormat::roman, SerialFormat::alpha}) {
            if (serial_index(p->serial, f)) return p->body;
        }
    }
    return std::string(trim(stem));
}

}  // namespace detail

/// Pages worth mining: at least one choice list and one answer keyword.
inline bool mcq_page_filter(std::string_view text, const QaKeywordSets& kw = {}) {
    if (detect_choice_lists(text, kw).empty()) return false;
    return std::any_of(kw.mcq_answer_keywords.begin(), kw.mcq_answer_keywords.end(),
                       [&](const std::string& k) { return contains_icase(text, k); });
}

inline std::vector<McqItem> extract_mcq(std::string_view text, const QaKeywordSets& kw = {},
                                        std::string_view source_doc_id = {}) {
    auto lines = split_lines(text);
    std::vector<McqItem> out;
    for (const auto& cl : detect_choice_lists(lines, kw)) {
        if (cl.start_line == 0) continue;
        const std::size_t s = cl.start_line;
        const std::size_t e = cl.end_line();

        std::optional<std::string_view> answer;
        std::optional<std::string_view> explanation;
        if (e < lines.size()) answer = detail::after_keyword(lines[e], kw.mcq_answer_keywords);
        if (answer) {
            if (e + 1 < lines.size()) explanation = detail::after_keyword(lines[e + 1], {kw.explanation_keyword});
        } else if (s >= 2) {
            // answer written above the stem
            answer = detail::after_keyword(lines[s - 2], kw.mcq_answer_keywords);
            if (answer && e < lines.size()) explanation = detail::after_keyword(lines[e], {kw.explanation_keyword});
        }
        if (!answer || trim(*answer).empty()) continue;

        McqItem item;
        item.question = detail::strip_leading_serial(lines[s - 1], kw);
        if (item.question.empty()) continue;
        for (const auto& c : cl.entries) item.choices.push_back(c.body);
        item.answer = std::string(trim(*answer));
        if (explanation) item.explanation = std::string(trim_right(*explanation));
        item.source_doc_id = std::string(source_doc_id);
        item.serial_format = cl.serial_format;
        if (detail::answer_reference(item.answer, item.serial_format, item.choices.size()) == -1) continue;
        out.push_back(std::move(item));
    }
    return out;
}

/// Canonical text of one item. Throws std::invalid_argument when the item has
/// no stem, fewer than two choices, no answer, or an answer naming a missing
/// choice.
inline std::string format_mcq(const McqItem& item) {
    if (trim(item.question).empty()) throw std::invalid_argument("format_mcq: empty question");
    if (item.choices.size() < 2) throw std::invalid_argument("format_mcq: fewer than two choices");
    if (item.choices.size() > 26) throw std::invalid_argument("format_mcq: more than 26 choices");
    if (trim(item.answer).empty()) throw std::invalid_argument("format_mcq: empty answer");
    auto ref = detail::answer_reference(item.answer, item.serial_format, item.choices.size());
    if (ref == -1) throw std::invalid_argument("format_mcq: answer names no choice: " + item.answer);

    std::string out = detail::strip_leading_serial(item.question, QaKeywordSets{});
    for (std::size_t i = 0; i < item.choices.size(); ++i) {
        out += "\n" + detail::letter(i) + ". " + item.choices[i];
    }
    out += "\nAnswer:" + (ref ? detail::letter(static_cast<std::size_t>(*ref)) : std::string(trim(item.answer)));
    if (item.explanation) out += "\nExplanation:" + *item.explanation;
    return out;
}

/// MCQ document holding only the canonical items, separated by blank lines;
/// none when the page yields no item.
inline std::optional<Document> extract_mcq_document(Document doc, const QaKeywordSets& kw = {}) {
    if (!mcq_page_filter(doc.text, kw)) return std::nullopt;
    auto items = extract_mcq(doc.text, kw, doc.doc_id);
    if (items.empty()) return std::nullopt;
    std::vector<std::string> blocks;
    blocks.reserve(items.size());
    for (const auto& it : items) blocks.push_back(format_mcq(it));
    doc.set_text(join(blocks, "\n\n"));
    doc.domain_tag = DomainTag::mcq;
    return doc;
}

}  // namespace webcurate::qa
