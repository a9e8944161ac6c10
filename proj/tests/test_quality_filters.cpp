#include <gtest/gtest.h>

#include "filter_oracle.hpp"
#include "support.hpp"
#include "webcurate/quality_filters.hpp"

using namespace webcurate;
using namespace webcurate::filters;

namespace {

Document make_doc(std::string text) {
    Document d;
    d.doc_id = "t";
    d.set_text(std::move(text));
    return d;
}

const RuleVerdict& find(const std::vector<RuleVerdict>& vs, std::string_view id) {
    for (const auto& v : vs) {
        if (v.rule_id == id) return v;
    }
    static RuleVerdict missing{"<missing>", -1, -1, false};
    ADD_FAILURE() << "no verdict " << id;
    return missing;
}

std::string repeat_words(const std::string& w, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += (i ? " " : "") + w;
    return s;
}

}  // namespace

TEST(QualityFilters, SegmentExample) {
    auto s = segment("A b. C d!\nE");
    EXPECT_EQ(s.paragraphs, (std::vector<std::string>{"A b. C d!", "E"}));
    EXPECT_EQ(s.sentences, (std::vector<std::string>{"A b.", "C d!", "E"}));
    EXPECT_EQ(s.words, (std::vector<std::string>{"A", "b.", "C", "d!", "E"}));
}

TEST(QualityFilters, SegmentEdgeCases) {
    auto e = segment("");
    EXPECT_TRUE(e.words.empty() && e.sentences.empty() && e.paragraphs.empty());
    EXPECT_EQ(segment("no punctuation").sentences, (std::vector<std::string>{"no punctuation"}));
    // decimal point is not a boundary
    EXPECT_EQ(segment("Pi is 3.14 ok").sentences.size(), 1u);
}

TEST(QualityFilters, DefaultsAreThePublishedConstants) {
    RuleThresholds t;
    EXPECT_EQ(t.lang_confidence, 0.5);
    EXPECT_EQ(t.wet_min_length, 300);
    EXPECT_EQ(t.dup_sentence_ratio, 0.3);
    EXPECT_EQ(t.dup_sentence_char_ratio, 0.2);
    EXPECT_EQ(t.dup_paragraph_ratio, 0.3);
    EXPECT_EQ(t.dup_paragraph_char_ratio, 0.2);
    EXPECT_EQ(t.top_ngram_char_ratio, (std::map<int, double>{{2, 0.20}, {3, 0.18}, {4, 0.16}}));
    EXPECT_EQ(t.dup_ngram_char_ratio,
              (std::map<int, double>{{5, 0.15}, {6, 0.14}, {7, 0.13}, {8, 0.12}, {9, 0.11}, {10, 0.10}}));
    EXPECT_EQ(t.word_count_min, 50);
    EXPECT_EQ(t.word_count_max, 100000);
    EXPECT_EQ(t.mean_word_len_min, 3);
    EXPECT_EQ(t.mean_word_len_max, 10);
    EXPECT_EQ(t.symbol_word_ratio, 0.1);
    EXPECT_EQ(t.bullet_start_ratio, 0.9);
    EXPECT_EQ(t.ellipsis_end_ratio, 0.3);
    EXPECT_EQ(t.non_alpha_word_ratio, 0.2);
    EXPECT_EQ(t.min_stop_words, 2);
    EXPECT_EQ(t.sentence_uppercase_ratio, 0.6);
    EXPECT_EQ(t.max_removed_word_fraction, 0.05);
    EXPECT_TRUE(validate_thresholds(t).empty());
}

TEST(QualityFilters, SetThresholdByName) {
    RuleThresholds t;
    EXPECT_TRUE(set_threshold(t, "top_ngram_char_ratio[3]", 0.5));
    EXPECT_EQ(t.top_ngram_char_ratio[3], 0.5);
    EXPECT_TRUE(set_threshold(t, "dup_ngram_char_ratio.7", 0.01));
    EXPECT_EQ(t.dup_ngram_char_ratio[7], 0.01);
    EXPECT_TRUE(set_threshold(t, "wet_min_length", 10));
    EXPECT_FALSE(set_threshold(t, "no_such_rule", 1));
    set_threshold(t, "dup_sentence_ratio", 1.5);
    EXPECT_FALSE(validate_thresholds(t).empty());
    RuleThresholds r;
    r.word_count_min = 200;
    r.word_count_max = 100;
    EXPECT_FALSE(validate_thresholds(r).empty());
}

TEST(QualityFilters, LanguageFilter) {
    EXPECT_TRUE(language_filter(LangScores{{"en", 0.51}}).passed);
    EXPECT_FALSE(language_filter(LangScores{{"en", 0.50}}).passed);
    EXPECT_FALSE(language_filter(LangScores{{"fr", 0.99}, {"en", 0.01}}).passed);
    auto missing = language_filter(std::nullopt);
    EXPECT_FALSE(missing.passed);
    EXPECT_EQ(missing.rule_id, "lang_missing");
    EXPECT_TRUE(language_filter(LangScores{{"__label__en", 0.8}}).passed);
}

TEST(QualityFilters, WetLength) {
    EXPECT_FALSE(wet_length_filter(make_doc(std::string(299, 'x'))).passed);
    EXPECT_TRUE(wet_length_filter(make_doc(std::string(300, 'x'))).passed);
    EXPECT_FALSE(wet_length_filter(make_doc("")).passed);
    // characters, not bytes: 300 two-byte characters pass
    std::string e;
    for (int i = 0; i < 300; ++i) e += "\xC3\xA9";
    EXPECT_TRUE(wet_length_filter(make_doc(e)).passed);
    EXPECT_EQ(wet_length_filter(make_doc(e)).measured, 300);
}

TEST(QualityFilters, DuplicateSentenceRatio) {
    // 10 sentences, one of them 5 times: 4 duplicates / 10
    std::string text = "Same thing here.";
    for (int i = 0; i < 4; ++i) text += " Same thing here.";
    for (int i = 0; i < 5; ++i) text += " Unique sentence number " + std::string(1, static_cast<char>('a' + i)) + ".";
    auto d = make_doc(text);
    auto vs = repetition_filter(d, segment(d.text));
    EXPECT_DOUBLE_EQ(find(vs, "dup_sentence_ratio").measured, 0.4);
    EXPECT_FALSE(find(vs, "dup_sentence_ratio").passed);
}

TEST(QualityFilters, AllUniquePassesRepetition) {
    auto d = make_doc("alpha beta gamma. delta epsilon zeta.\neta theta iota kappa.");
    for (const auto& v : repetition_filter(d, segment(d.text))) EXPECT_TRUE(v.passed) << v.rule_id;
}

TEST(QualityFilters, TopBigramCoverage) {
    // "ab cd" x5 = 20 word chars; filler brings total to 80 characters -> 0.25
    std::string text = "ab cd ab cd ab cd ab cd ab cd";  // 29 chars
    std::string filler = " qwertyuiop asdfghjkl zxcvbnm poiuytrewq lkjhgfdsaz";  // 51 chars
    auto d = make_doc(text + filler);
    ASSERT_EQ(d.char_count, 80u);
    auto vs = repetition_filter(d, segment(d.text));
    EXPECT_DOUBLE_EQ(find(vs, "top_ngram_char_ratio_2").measured, 0.25);
    EXPECT_FALSE(find(vs, "top_ngram_char_ratio_2").passed);
}

TEST(QualityFilters, DuplicateNgramCharsCountEachWordOnce) {
    // words a b c d e f a b c d e f: the repeat of the 5-grams covers the
    // second half (6 words, 1 char each) once, even though two 5-grams overlap
    auto d = make_doc("a b c d e f a b c d e f");
    detail::NgramIndex idx(segment(d.text).words);
    EXPECT_EQ(duplicate_ngram_chars(idx, 5), 6u);
    EXPECT_EQ(duplicate_ngram_chars(idx, 6), 6u);
    EXPECT_EQ(duplicate_ngram_chars(idx, 7), 0u);
}

TEST(QualityFilters, DocumentRules) {
    auto d40 = make_doc(repeat_words("word", 39) + " the of");
    auto v40 = document_filter(d40, segment(d40.text));
    EXPECT_FALSE(find(v40, "word_count_min").passed);

    auto dlong = make_doc(repeat_words("aaaaaaaaaaaa", 60));
    auto vlong = document_filter(dlong, segment(dlong.text));
    EXPECT_DOUBLE_EQ(find(vlong, "mean_word_length_max").measured, 12.0);
    EXPECT_FALSE(find(vlong, "mean_word_length_max").passed);

    testsupport::TextGen gen(1);
    std::string words;
    for (int i = 0; i < 58; ++i) words += "garden ";
    auto dstop = make_doc("the " + words + "of");
    auto vstop = document_filter(dstop, segment(dstop.text));
    EXPECT_TRUE(find(vstop, "min_stop_words").passed);
    // "the" repeated is still one distinct stop word
    auto drep = make_doc("the the the " + words);
    EXPECT_FALSE(find(document_filter(drep, segment(drep.text)), "min_stop_words").passed);
    RuleThresholds total;
    total.stop_words_distinct = false;
    EXPECT_TRUE(find(document_filter(drep, segment(drep.text), total), "min_stop_words").passed);
}

TEST(QualityFilters, SentenceRuleExamples) {
    RuleThresholds t;
    EXPECT_EQ(sentence_rule_hit("3 likes", t).value_or(""), "sentence_counter");
    EXPECT_EQ(sentence_rule_hit("HELLO WORLD NOW", t).value_or(""), "sentence_uppercase");
    EXPECT_EQ(sentence_rule_hit("12, 13: 40%", t).value_or(""), "sentence_numeric");
    EXPECT_EQ(sentence_rule_hit("Subscribe!", t).value_or(""), "sentence_single_word");
    EXPECT_EQ(sentence_rule_hit("Sign-in to comment", t).value_or(""), "sentence_sign_in");
    EXPECT_EQ(sentence_rule_hit("Click to read more...", t).value_or(""), "sentence_read_more");
    EXPECT_EQ(sentence_rule_hit("You have 2 items in card", t).value_or(""), "sentence_items_in_card");
    EXPECT_FALSE(sentence_rule_hit("A perfectly normal sentence here.", t).has_value());
    // exactly 0.6 uppercase letters passes (3 of 5)
    EXPECT_FALSE(sentence_rule_hit("ABCde fgh", t).has_value() &&
                 *sentence_rule_hit("ABCde fgh", t) == "sentence_uppercase");
}

TEST(QualityFilters, SentenceRemovalDiscardsAboveFivePercent) {
    // 94 words of prose plus a 6-word shouting sentence: 6/100 > 0.05
    std::string prose;
    for (int i = 0; i < 47; ++i) prose += "quiet words ";
    std::string text = "THIS IS A VERY LOUD SENTENCE. " + prose;
    auto d = make_doc(text);
    ASSERT_EQ(d.word_count, 100u);
    auto r = sentence_filter(d, segment(d.text));
    EXPECT_EQ(r.report.decision, Decision::discard);
    ASSERT_EQ(r.report.removed_sentences.size(), 1u);
    EXPECT_EQ(r.report.removed_sentences[0].second, "sentence_uppercase");

    // 5 words of 100 is exactly 0.05 and stays
    std::string text5 = "THIS IS VERY LOUD SENTENCE. " + prose + "more";
    auto d5 = make_doc(text5);
    ASSERT_EQ(d5.word_count, 100u);
    auto r5 = sentence_filter(d5, segment(d5.text));
    EXPECT_EQ(r5.report.decision, Decision::keep);
    EXPECT_EQ(r5.doc.text.find("LOUD"), std::string::npos);
}

TEST(QualityFilters, SentenceRemovalKeepsOrder) {
    auto d = make_doc("First one is fine. 3 likes\nSecond stays here. OK. Third one too.");
    auto r = sentence_filter(d, segment(d.text));
    EXPECT_EQ(r.doc.text, "First one is fine.\nSecond stays here. Third one too.");
}

TEST(QualityFilters, RunWebFiltersComposition) {
    testsupport::TextGen gen(2);
    auto wet = make_doc(gen.document(100));
    ASSERT_GE(wet.char_count, 500u);
    auto rw = run_web_filters(wet, WebSource::wet, LangScores{{"en", 0.9}});
    EXPECT_EQ(rw.report.decision, Decision::keep);
    EXPECT_EQ(rw.report.verdicts.size(), 2u);

    // distinct sentences without stop words: only the stop-word rule fails
    std::string uniq;
    for (int i = 0; i < 15; ++i) {
        uniq += "Sentence " + std::string(1, static_cast<char>('a' + i)) + "x holds " +
                std::string(1, static_cast<char>('a' + (i * 7) % 26)) + "quiet rivers" +
                std::string(1, static_cast<char>('a' + (i * 3) % 26)) + " near " +
                std::string(1, static_cast<char>('a' + (i * 5) % 26)) + "ridge. ";
    }
    auto warc = make_doc(std::string(trim(uniq)));
    auto rr = run_web_filters(warc, WebSource::warc, LangScores{{"en", 0.9}});
    ASSERT_NE(rr.report.first_failure(), nullptr);
    EXPECT_EQ(rr.report.first_failure()->rule_id, "min_stop_words");
    std::size_t failures = 0;
    for (const auto& v : rr.report.verdicts) failures += !v.passed;
    EXPECT_EQ(failures, 1u);
    EXPECT_EQ(rr.report.decision, Decision::discard);

    auto good = make_doc(gen.document(120));
    auto rg = run_web_filters(good, WebSource::warc, LangScores{{"en", 0.9}});
    EXPECT_EQ(rg.report.decision, Decision::keep) << (rg.report.first_failure() ? rg.report.first_failure()->rule_id : "");
    EXPECT_TRUE(rg.report.removed_sentences.empty());
}

TEST(QualityFilters, OverridesChangeVerdicts) {
    auto d = make_doc(repeat_words("garden", 40) + " the of");
    RuleThresholds t;
    EXPECT_FALSE(find(document_filter(d, segment(d.text), t), "word_count_min").passed);
    set_threshold(t, "word_count_min", 10);
    EXPECT_TRUE(find(document_filter(d, segment(d.text), t), "word_count_min").passed);
    set_threshold(t, "wet_min_length", 5);
    EXPECT_TRUE(wet_length_filter(make_doc("abcdef"), t).passed);
}

TEST(QualityFilters, MonotoneUnderAppendedDuplicates) {
    testsupport::TextGen gen(8);
    for (int trial = 0; trial < 20; ++trial) {
        std::string text = gen.paragraph(6);
        auto seg = segment(text);
        std::string s = seg.sentences[gen.pick(seg.sentences.size())];
        double prev = find(repetition_filter(make_doc(text), seg), "dup_sentence_ratio").measured;
        for (int k = 0; k < 5; ++k) {
            text += " " + s;
            auto d = make_doc(text);
            double cur = find(repetition_filter(d, segment(d.text)), "dup_sentence_ratio").measured;
            EXPECT_GE(cur, prev);
            prev = cur;
        }
    }
}

TEST(QualityFilters, MatchesNaiveOracle) {
    testsupport::TextGen gen(4242);
    for (int i = 0; i < 120; ++i) {
        auto g = oracle::generate(gen);
        auto d = make_doc(g.text);
        std::optional<LangScores> lang;
        if (g.lang) lang = LangScores(g.lang->begin(), g.lang->end());
        auto r = run_web_filters(d, WebSource::warc, lang);
        auto o = oracle::evaluate(g.text, g.lang);
        ASSERT_EQ(r.report.verdicts.size(), o.rules.size());
        for (const auto& v : r.report.verdicts) {
            auto it = o.rules.find(v.rule_id);
            ASSERT_NE(it, o.rules.end()) << v.rule_id;
            EXPECT_EQ(v.passed, it->second.passed) << v.rule_id << " doc " << i;
            EXPECT_DOUBLE_EQ(v.measured, it->second.measured) << v.rule_id << " doc " << i;
        }
        std::vector<std::size_t> removed;
        for (const auto& [idx, id] : r.report.removed_sentences) removed.push_back(idx);
        EXPECT_EQ(removed, o.removed_sentences) << "doc " << i;
        EXPECT_EQ(r.report.decision == Decision::keep, o.keep) << "doc " << i;
    }
}

TEST(QualityFilters, Deterministic) {
    testsupport::TextGen gen(77);
    auto d = make_doc(gen.document(200));
    auto a = run_web_filters(d, WebSource::warc, LangScores{{"en", 0.7}});
    auto b = run_web_filters(d, WebSource::warc, LangScores{{"en", 0.7}});
    EXPECT_EQ(a.report.verdicts, b.report.verdicts);
    EXPECT_EQ(a.doc, b.doc);
}
