#include <gtest/gtest.h>

#include <random>

#include "math_fixtures.hpp"
#include "support.hpp"
#include "webcurate/math_extractor.hpp"

using namespace webcurate;
using namespace webcurate::math;

namespace {

RawRecord page(std::string html) {
    RawRecord r;
    r.record_id = "<urn:uuid:math>";
    r.target_url = "https://example.org/physics";
    r.record_kind = RecordKind::response;
    r.payload = std::move(html);
    r.snapshot_id = "CC-TEST";
    r.shard_id = "shard-0";
    return r;
}

std::size_t occurrences(std::string_view hay, std::string_view needle) {
    std::size_t k = 0;
    for (auto p = hay.find(needle); p != std::string_view::npos; p = hay.find(needle, p + 1)) ++k;
    return k;
}

// Reference brace check: every prefix has at least as many { as }, and the
// totals agree. Escaped \{ \} are not braces.
bool braces_balanced(std::string_view s) {
    long depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\') {
            ++i;
            continue;
        }
        if (s[i] == '{') ++depth;
        if (s[i] == '}' && --depth < 0) return false;
    }
    return depth == 0;
}

}  // namespace

TEST(MathExtractor, KeywordDefaults) {
    MathKeywordSets kw;
    EXPECT_EQ(kw.ascii_min_hits, 5u);
    EXPECT_EQ(kw.html_prefilter.size(), 11u);
    EXPECT_GT(kw.ascii_latex_symbols.size(), 3000u);
    EXPECT_GT(kw.ascii_plain_symbols.size(), 20u);
    for (const char* s : {"\\frac", "\\mu", "\\dot", "\\log", "\\eq"}) {
        EXPECT_NE(std::find(kw.ascii_latex_symbols.begin(), kw.ascii_latex_symbols.end(), s),
                  kw.ascii_latex_symbols.end())
            << s;
    }
    for (const char* s : {"sqrt", "sum", "log", "+", "*", "$"}) {
        EXPECT_NE(std::find(kw.ascii_plain_symbols.begin(), kw.ascii_plain_symbols.end(), s),
                  kw.ascii_plain_symbols.end())
            << s;
    }
}

TEST(MathExtractor, Prefilter) {
    EXPECT_TRUE(html_math_prefilter(page("<link rel=stylesheet href=\"/k/katex.min.css\"><p>x</p>")));
    EXPECT_TRUE(html_math_prefilter(page("<script>render('\\frac{1}{2}')</script>")));
    EXPECT_TRUE(html_math_prefilter(page("<img src=\"https://latex.CodeCogs.com/gif.latex?x\">")));
    EXPECT_TRUE(html_math_prefilter(page("<MATH><mi>x</mi></MATH>")));
    EXPECT_FALSE(html_math_prefilter(page("<p>Nothing mathematical on this page at all.</p>")));
}

TEST(MathExtractor, ValidatorAcceptsWellFormed) {
    for (const auto& f : mathfix::well_formed()) {
        std::string err;
        EXPECT_TRUE(is_valid_latex(f, &err)) << f << " : " << err;
    }
    EXPECT_EQ(mathfix::well_formed().size(), 20u);
}

TEST(MathExtractor, ValidatorRejectsMalformed) {
    for (const auto& f : mathfix::malformed()) EXPECT_FALSE(is_valid_latex(f)) << f;
    EXPECT_EQ(mathfix::malformed().size(), 20u);
}

TEST(MathExtractor, ValidatorReportsReason) {
    std::string err;
    EXPECT_FALSE(is_valid_latex("\\begin{align} x \\end{array}", &err));
    EXPECT_NE(err.find("align"), std::string::npos);
    EXPECT_NE(err.find("array"), std::string::npos);
    FormulaSpan s{1, FormulaKind::latex, "\\frac{a}{b", false, false};
    EXPECT_FALSE(validate_latex(s).valid);
    s.source_text = "\\frac{a}{b}";
    EXPECT_TRUE(validate_latex(s).valid);
    // ascii spans are left alone
    FormulaSpan a{2, FormulaKind::ascii, "{{{", true, false};
    EXPECT_TRUE(validate_latex(a).valid);
}

TEST(MathExtractor, NeverAcceptsUnbalancedBraces) {
    std::mt19937_64 rng(17);
    const std::string alphabet = "{}{}ab^_\\ +";
    std::size_t unbalanced = 0;
    for (int i = 0; i < 5000; ++i) {
        std::string s;
        for (std::size_t k = 0; k < 1 + rng() % 14; ++k) s += alphabet[rng() % alphabet.size()];
        if (braces_balanced(s)) continue;
        ++unbalanced;
        EXPECT_FALSE(is_valid_latex(s)) << s;
    }
    EXPECT_GT(unbalanced, 1000u);
}

TEST(MathExtractor, LocateAnnotationInsideMathml) {
    auto tree = html::parse_html(
        "<p>Area <math><semantics><mi>x</mi><msup><mi>x</mi><mn>2</mn></msup>"
        "<annotation encoding=\"application/x-tex\">x^2</annotation></semantics></math> here.</p>");
    auto spans = locate_formulas(tree);
    ASSERT_EQ(spans.size(), 1u);
    EXPECT_EQ(spans[0].kind, FormulaKind::latex);
    EXPECT_EQ(spans[0].source_text, "x^2");
    EXPECT_TRUE(spans[0].valid);
}

TEST(MathExtractor, LocateScriptAndMathml) {
    auto tree = html::parse_html("<p><script type=\"math/tex\">\\frac{a}{b}</script></p>"
                                 "<p><script type=\"math/tex; mode=display\">\\sum_i i</script></p>"
                                 "<p><math><mi>y</mi></math></p><p><span class=\"math-formula\">a+b</span></p>");
    auto spans = locate_formulas(tree);
    ASSERT_EQ(spans.size(), 4u);
    EXPECT_EQ(spans[0].source_text, "\\frac{a}{b}");
    EXPECT_FALSE(spans[0].display);
    EXPECT_EQ(spans[1].source_text, "\\sum_i i");
    EXPECT_TRUE(spans[1].display);
    EXPECT_EQ(spans[2].kind, FormulaKind::mathml);
    EXPECT_TRUE(spans[2].valid);
    EXPECT_EQ(spans[3].kind, FormulaKind::latex);
    EXPECT_TRUE(locate_formulas(html::parse_html("<p>No formulas.</p>")).empty());
}

TEST(MathExtractor, MathmlScriptWellFormedness) {
    EXPECT_TRUE(is_well_formed_xml("<math><mi>x</mi><mo>+</mo><mn>1</mn></math>"));
    EXPECT_TRUE(is_well_formed_xml("<math><mspace width=\"1em\"/></math>"));
    EXPECT_FALSE(is_well_formed_xml("<math><mi>x</math>"));
    EXPECT_FALSE(is_well_formed_xml("<math><mi>x</mi>"));
    EXPECT_FALSE(is_well_formed_xml("<math><mi>x</mi></math"));
    auto spans = locate_formulas(html::parse_html("<script type=\"math/mml\"><math><mi>x</math></script>"));
    ASSERT_EQ(spans.size(), 1u);
    EXPECT_FALSE(spans[0].valid);
}

TEST(MathExtractor, DuplicateRepresentationsAppearOnce) {
    auto rec = page(
        "<html><body>"
        "<p>First <span class=\"MathJax_Preview\">q_{SENTA}</span>"
        "<script type=\"math/tex\">q_{SENTA}</script> done.</p>"
        "<p>Second <img src=\"https://latex.codecogs.com/gif.latex?r_{SENTB}\" alt=\"r_{SENTB}\">"
        "<script type=\"math/tex\">r_{SENTB}</script>.</p>"
        "<p>Third <math><semantics><mi>SENTC</mi>"
        "<annotation encoding=\"application/x-tex\">\\mathrm{SENTC}</annotation></semantics></math>.</p>"
        "<p>Fourth <span class=\"katex\"><span class=\"katex-mathml\"><math><semantics><mi>SENTD</mi>"
        "<annotation encoding=\"application/x-tex\">\\mathrm{SENTD}</annotation></semantics></math></span>"
        "<span class=\"katex-html\" aria-hidden=\"true\">SENTD</span></span>.</p>"
        "</body></html>");
    auto d = extract_math_document(rec, MathPath::html);
    ASSERT_TRUE(d);
    for (const char* s : {"SENTA", "SENTB", "SENTC", "SENTD"}) EXPECT_EQ(occurrences(d->text, s), 1u) << s << "\n" << d->text;
    EXPECT_EQ(d->domain_tag, DomainTag::math);
}

TEST(MathExtractor, FormulasStayInReadingOrder) {
    auto rec = page(
        "<html><body><h1>Maxwell-Boltzmann distribution</h1>"
        "<p>The speed distribution of an ideal gas is</p>"
        "<script type=\"math/tex; mode=display\">f(v) = 4\\pi \\left(\\frac{m}{2\\pi k T}\\right)^{3/2} v^2 "
        "e^{-mv^2/2kT}</script>"
        "<p>where <script type=\"math/tex\">m</script> is the particle mass and "
        "<script type=\"math/tex\">k</script> is the Boltzmann constant.</p></body></html>");
    auto d = extract_math_document(rec, MathPath::html);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->text,
              "Maxwell-Boltzmann distribution\n"
              "The speed distribution of an ideal gas is\n"
              "\\[f(v) = 4\\pi \\left(\\frac{m}{2\\pi k T}\\right)^{3/2} v^2 e^{-mv^2/2kT}\\]\n"
              "where \\(m\\) is the particle mass and \\(k\\) is the Boltzmann constant.");
}

TEST(MathExtractor, InvalidFormulaDropsPage) {
    std::string why;
    EXPECT_FALSE(extract_math_document(page("<p>Bad <script type=\"math/tex\">\\frac{a}{b</script></p>"),
                                       MathPath::html, nullptr, {}, &why));
    EXPECT_EQ(why, "invalid_formula");
    EXPECT_FALSE(extract_math_document(page("<p>Good <script type=\"math/tex\">a</script> and bad "
                                            "<script type=\"math/tex\">x^</script></p>"),
                                       MathPath::html));
    EXPECT_FALSE(extract_math_document(page("<p>No math at all.</p>"), MathPath::html, nullptr, {}, &why));
    EXPECT_EQ(why, "no_formula");
    // hidden formulas are not located
    EXPECT_FALSE(extract_math_document(
        page("<p>Text.</p><div style=\"display:none\"><script type=\"math/tex\">x</script></div>"), MathPath::html));
}

TEST(MathExtractor, AsciiGateBoundary) {
    EXPECT_EQ(count_math_keywords("sqrt sum log + $"), 5u);
    EXPECT_TRUE(ascii_keyword_gate("sqrt sum log + $"));
    EXPECT_EQ(count_math_keywords("sqrt sum log +"), 4u);
    EXPECT_FALSE(ascii_keyword_gate("sqrt sum log +"));
    EXPECT_EQ(count_math_keywords("a quiet walk along the river"), 0u);
    // overlapping patterns each count
    EXPECT_EQ(count_math_keywords("\\frac"), mathfix::brute_force_count("\\frac", ascii_keywords({})));
}

TEST(MathExtractor, AsciiGateMatchesBruteForce) {
    auto patterns = ascii_keywords({});
    std::mt19937_64 rng(23);
    std::vector<std::string> sample;
    for (std::size_t i = 0; i < 400; ++i) sample.push_back(patterns[rng() % patterns.size()]);
    for (int i = 0; i < 200; ++i) {
        auto text = mathfix::random_math_text(rng, sample);
        auto expected = mathfix::brute_force_count(text, patterns);
        EXPECT_EQ(count_math_keywords(text), expected) << text;
        EXPECT_EQ(ascii_keyword_gate(text), expected >= 5) << text;
    }
}

TEST(MathExtractor, CustomKeywordSets) {
    MathKeywordSets kw;
    kw.ascii_latex_symbols = {"aa"};
    kw.ascii_plain_symbols = {"a", "ab"};
    // a x4, aa x2 (overlapping), ab x1
    EXPECT_EQ(count_math_keywords("aaab a", kw), 7u);
    EXPECT_EQ(count_math_keywords("aaab a", kw), mathfix::brute_force_count("aaab a", ascii_keywords(kw)));
}

TEST(MathExtractor, AsciiPathNeedsModel) {
    auto rec = page("<p>sqrt sum log</p>");
    EXPECT_THROW(extract_math_document(rec, MathPath::ascii), ConfigError);
}

TEST(MathExtractor, AsciiPathGateThenModel) {
    testsupport::TextGen gen(4);
    std::string math_words = "We know sqrt(x) + sum of log terms equals $y$ overall.";
    std::string html = "<html><body><article><h1>Notes</h1>";
    for (int i = 0; i < 4; ++i) html += "<p>" + gen.paragraph(3) + " " + math_words + "</p>";
    html += "</article></body></html>";
    auto rec = page(html);

    classifier::NgramModel low;
    low.feature_dim = 16;
    low.weights.assign(16, 0.0);
    low.bias = std::log(0.3 / 0.7);  // scores 0.3 everywhere
    classifier::NgramModel high = low;
    high.bias = std::log(0.8 / 0.2);

    std::string why;
    EXPECT_FALSE(extract_math_document(rec, MathPath::ascii, &low, {}, &why));
    EXPECT_EQ(why, "score_below_threshold");
    auto d = extract_math_document(rec, MathPath::ascii, &high);
    ASSERT_TRUE(d);
    EXPECT_GE(count_math_keywords(d->text), 6u);
    EXPECT_EQ(d->domain_tag, DomainTag::math);

    // substring hits are counted inside words too ("summer" holds "sum"), so
    // the keyword-free page keeps only sentences with zero hits
    auto patterns = ascii_keywords({});
    std::string plain = "<html><body><article>";
    for (int i = 0; i < 4; ++i) {
        std::string p;
        while (count_tokens(p) < 30) {
            std::string sent = gen.sentence();
            if (mathfix::brute_force_count(sent, patterns) == 0) p += (p.empty() ? "" : " ") + sent;
        }
        plain += "<p>" + p + "</p>";
    }
    plain += "</article></body></html>";
    EXPECT_FALSE(extract_math_document(page(plain), MathPath::ascii, &high, {}, &why));
    EXPECT_EQ(why, "ascii_keyword_gate");
}

TEST(MathExtractor, GatePassesOnlyPlantedMathDocs) {
    testsupport::TextGen gen(31);
    std::size_t planted_pass = 0, prose_pass = 0;
    for (int i = 0; i < 100; ++i) {
        std::string prose = gen.paragraph(4);
        if (ascii_keyword_gate(prose)) ++prose_pass;
        std::string mathy = prose + " Then \\frac{a}{b} + \\sqrt{c} = \\sum_i x_i^2.";
        if (ascii_keyword_gate(mathy)) ++planted_pass;
    }
    EXPECT_EQ(planted_pass, 100u);
    EXPECT_EQ(prose_pass, 0u);
}
