// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <sys/wait.h>

#include "filter_oracle.hpp"
#include "math_fixtures.hpp"
#include "pipeline_fixtures.hpp"
#include "qa_fixtures.hpp"
#include "support.hpp"
#include "webcurate/webcurate.hpp"

using namespace webcurate;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failed sub-checks of one criterion.
struct Check {
    std::vector<std::string> failures;
    std::ostringstream note;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    bool ok() const { return failures.empty(); }
};

Document text_doc(std::string id, std::string text, std::uint64_t offset = 0) {
    Document d;
    d.doc_id = std::move(id);
    d.snapshot_id = "2023-40";
    d.shard_id = "s";
    d.offset = offset;
    d.set_text(std::move(text));
    return d;
}

RawRecord html_record(std::string html, std::string url) {
    RawRecord r;
    r.record_id = "<urn:uuid:acc>";
    r.target_url = std::move(url);
    r.record_kind = RecordKind::response;
    r.payload = std::move(html);
    r.snapshot_id = "CC-ACC";
    r.shard_id = "acc-0";
    return r;
}

// ---------------------------------------------------------------------------

void ac1(Check& c) {
    auto t0 = Clock::now();
    testsupport::TextGen gen(20240);
    std::size_t agree = 0;
    std::set<int> injected_kinds;
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::generate(gen);
        injected_kinds.insert(g.injected.begin(), g.injected.end());
        std::optional<filters::LangScores> lang;
        if (g.lang) lang = filters::LangScores(g.lang->begin(), g.lang->end());
        auto r = filters::run_web_filters(text_doc("d" + std::to_string(i), g.text), filters::WebSource::warc, lang);
        auto o = oracle::evaluate(g.text, g.lang);
        bool same = r.report.verdicts.size() == o.rules.size();
        for (const auto& v : r.report.verdicts) {
            auto it = o.rules.find(v.rule_id);
            same = same && it != o.rules.end() && it->second.passed == v.passed && it->second.measured == v.measured;
        }
        std::vector<std::size_t> removed;
        for (const auto& [idx, id] : r.report.removed_sentences) removed.push_back(idx);
        same = same && removed == o.removed_sentences;
        same = same && (r.report.decision == filters::Decision::keep) == o.keep;
        agree += same;
    }
    double secs = seconds_since(t0);
    c.expect(agree == 200, "verdicts agree on " + std::to_string(agree) + "/200");
    c.expect(injected_kinds.size() == static_cast<std::size_t>(oracle::kViolationCount), "every violation kind injected");
    c.expect(secs < 10.0, "runtime " + std::to_string(secs) + " s");
    c.note << agree << "/200 agree, " << injected_kinds.size() << " violation kinds, " << secs << " s";
}

void ac2(Check& c) {
    // read back through the serialized default configuration
    auto j = pipeline::to_json(pipeline::PipelineConfig{}).at("thresholds");
    const std::map<std::string, double> want = {
        {"dup_sentence_ratio", 0.3},        {"dup_sentence_char_ratio", 0.2},   {"dup_paragraph_ratio", 0.3},
        {"dup_paragraph_char_ratio", 0.2},  {"top_ngram_char_ratio.2", 0.20},   {"top_ngram_char_ratio.3", 0.18},
        {"top_ngram_char_ratio.4", 0.16},   {"dup_ngram_char_ratio.5", 0.15},   {"dup_ngram_char_ratio.6", 0.14},
        {"dup_ngram_char_ratio.7", 0.13},   {"dup_ngram_char_ratio.8", 0.12},   {"dup_ngram_char_ratio.9", 0.11},
        {"dup_ngram_char_ratio.10", 0.10},  {"word_count_min", 50},             {"word_count_max", 100000},
        {"mean_word_len_min", 3},           {"mean_word_len_max", 10},          {"symbol_word_ratio", 0.1},
        {"bullet_start_ratio", 0.9},        {"ellipsis_end_ratio", 0.3},        {"non_alpha_word_ratio", 0.2},
        {"min_stop_words", 2},              {"sentence_uppercase_ratio", 0.6},  {"max_removed_word_fraction", 0.05},
        {"wet_min_length", 300},            {"lang_confidence", 0.5}};
    for (const auto& [key, value] : want) {
        c.expect(j.contains(key) && j.at(key).get<double>() == value, key);
    }
    c.expect(j.size() == want.size(), "no unlisted thresholds (" + std::to_string(j.size()) + ")");
    math::MathKeywordSets kw;
    c.expect(kw.ascii_min_hits == 5, "ascii_min_hits");
    c.expect(kw.ascii_model_threshold == 0.5, "ascii model threshold");
    c.expect(classifier::kScoreThreshold == 0.5, "quality model threshold");
    c.note << want.size() << " rule thresholds, ascii hits " << kw.ascii_min_hits << ", model thresholds "
           << classifier::kScoreThreshold;
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> set_pair(std::mt19937_64& rng, std::size_t common,
                                                                           std::size_t only) {
    std::vector<std::uint64_t> a, b;
    for (std::size_t i = 0; i < common; ++i) {
        auto x = rng();
        a.push_back(x);
        b.push_back(x);
    }
    for (std::size_t i = 0; i < only; ++i) a.push_back(rng());
    for (std::size_t i = 0; i < only; ++i) b.push_back(rng());
    return {a, b};
}

void ac3(Check& c) {
    auto t0 = Clock::now();
    dedup::MinHasher h;
    std::mt19937_64 rng(31);
    double abs_err = 0;
    for (int t = 0; t < 1000; ++t) {
        auto [a, b] = set_pair(rng, 100, 50);
        abs_err += std::abs(dedup::estimate_jaccard(h.signature_of(a), h.signature_of(b)) - 0.5);
    }
    abs_err /= 1000;
    c.expect(abs_err <= 0.05, "mean |estimate - truth| " + std::to_string(abs_err));
    c.note << "mean abs error " << abs_err << ";";

    // |A∩B| / |A∪B| = common / (common + 2 only)
    const std::pair<double, std::pair<std::size_t, std::size_t>> cases[] = {
        {0.5, {200, 100}}, {0.7, {280, 60}}, {0.8, {320, 40}}, {0.9, {360, 20}}, {0.95, {380, 10}}};
    for (const auto& [s, sizes] : cases) {
        int hits = 0;
        for (int t = 0; t < 1000; ++t) {
            auto [a, b] = set_pair(rng, sizes.first, sizes.second);
            auto ka = dedup::band_keys(h.signature_of(a));
            auto kb = dedup::band_keys(h.signature_of(b));
            bool any = false;
            for (std::size_t i = 0; i < dedup::kBands; ++i) any = any || ka[i] == kb[i];
            hits += any;
        }
        double rate = hits / 1000.0;
        double expected = 1.0 - std::pow(1.0 - std::pow(s, 13), 9);
        c.expect(std::abs(rate - expected) <= 0.05, "collision rate at s=" + std::to_string(s));
        c.note << " s=" << s << ": " << rate << " vs " << expected;
    }

    double th = dedup::exact_near_threshold();
    c.expect(std::abs(th - std::pow(1.0 / 9.0, 1.0 / 13.0)) < 1e-12, "threshold formula");
    c.expect(std::abs(th - 0.8446) <= 0.0001,
             "threshold " + std::to_string(th) + " not within 0.0001 of the stated 0.8446");
    double secs = seconds_since(t0);
    c.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
    c.note << "; threshold " << th << "; " << secs << " s";
}

std::vector<std::string> random_words(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::string> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back("w" + std::to_string(rng() % 1000000007ULL));
    return w;
}

std::vector<std::string> mutate(std::vector<std::string> w, std::size_t k, std::mt19937_64& rng) {
    std::size_t step = w.size() / (k + 1);
    for (std::size_t i = 1; i <= k; ++i) w[i * step] = "m" + std::to_string(rng());
    return w;
}

// Jaccard over word 5-gram strings.
double true_jaccard(const std::vector<std::string>& x, const std::vector<std::string>& y) {
    auto grams = [](const std::vector<std::string>& w) {
        std::set<std::string> g;
        for (std::size_t i = 0; i + 5 <= w.size(); ++i) g.insert(w[i] + " " + w[i + 1] + " " + w[i + 2] + " " + w[i + 3] + " " + w[i + 4]);
        return g;
    };
    auto a = grams(x), b = grams(y);
    std::size_t inter = 0;
    for (const auto& g : a) inter += b.count(g);
    return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

void ac4(Check& c) {
    std::mt19937_64 rng(41);
    std::vector<Document> high, low, exact;
    bool fixtures_ok = true;
    for (int p = 0; p < 100; ++p) {
        auto base = random_words(rng, 300);
        auto near = mutate(base, static_cast<std::size_t>(p % 3 + 1), rng);
        auto far = mutate(base, 20, rng);
        fixtures_ok = fixtures_ok && true_jaccard(base, near) >= 0.9 && true_jaccard(base, far) <= 0.5;
        auto id = std::to_string(p);
        high.push_back(text_doc("h" + id + "a", join(base, " "), static_cast<std::uint64_t>(2 * p)));
        high.push_back(text_doc("h" + id + "b", join(near, " "), static_cast<std::uint64_t>(2 * p + 1)));
        low.push_back(text_doc("l" + id + "a", join(base, " "), static_cast<std::uint64_t>(2 * p)));
        low.push_back(text_doc("l" + id + "b", join(far, " "), static_cast<std::uint64_t>(2 * p + 1)));
        exact.push_back(text_doc("e" + id + "a", join(base, " "), static_cast<std::uint64_t>(2 * p)));
        exact.push_back(text_doc("e" + id + "b", join(base, " "), static_cast<std::uint64_t>(2 * p + 1)));
    }
    c.expect(fixtures_ok, "planted similarities outside their bands");
    auto pairs_found = [](const dedup::DedupResult& r) {
        int n = 0;
        for (const auto& cl : r.clusters) {
            const auto& m = cl.member_doc_ids;
            n += m.size() == 2 && m[0].substr(0, m[0].size() - 1) == m[1].substr(0, m[1].size() - 1);
        }
        return n;
    };
    auto rh = dedup::deduplicate(high);
    auto rl = dedup::deduplicate(low);
    auto re = dedup::deduplicate(exact);
    int detected = pairs_found(rh);
    int spurious = static_cast<int>(rl.clusters.size());
    int merged = pairs_found(re);
    c.expect(detected >= 95, "detected " + std::to_string(detected) + "/100");
    c.expect(spurious <= 10, "spurious merges " + std::to_string(spurious));
    c.expect(merged == 100 && re.clusters.size() == 100, "exact pairs merged " + std::to_string(merged));
    c.note << "near pairs " << detected << "/100, spurious " << spurious << "/100, exact " << merged << "/100";
}

void ac5(Check& c) {
    for (const auto* golden : {&qafix::kUmlSample, &qafix::kOddOneOutSample}) {
        auto items = qa::extract_mcq(*golden);
        c.expect(items.size() == 1 && qa::format_mcq(items[0]) == *golden,
                 "golden round trip: " + golden->substr(0, 20));
    }
    auto n = qa::extract_mcq(qafix::kNumericVariant);
    c.expect(n.size() == 1 && qa::format_mcq(n[0]) == qafix::kNumericExpected, "numeric serials");
    auto r = qa::extract_mcq(qafix::kRomanVariant);
    c.expect(r.size() == 1 && qa::format_mcq(r[0]) == qafix::kOddOneOutSample, "roman serials");
    // serial k names choice k: 1 -> A, ii -> B, ... written out by hand
    const std::vector<std::pair<std::string, char>> mapping = {
        {"1", 'A'}, {"2", 'B'}, {"3", 'C'}, {"4", 'D'}, {"5", 'E'},
        {"i", 'A'}, {"ii", 'B'}, {"iii", 'C'}, {"iv", 'D'}, {"v", 'E'}};
    const char* numerals[] = {"i", "ii", "iii", "iv", "v"};
    for (const auto& [serial, letter] : mapping) {
        bool roman = std::isalpha(static_cast<unsigned char>(serial[0]));
        std::string q = "Which one?\n";
        for (int i = 0; i < 5; ++i) {
            q += (roman ? std::string(numerals[i]) : std::to_string(i + 1)) + ". option " + std::to_string(i + 1) + "\n";
        }
        q += "Answer: " + serial;
        auto items = qa::extract_mcq(q);
        c.expect(items.size() == 1 && qa::format_mcq(items[0]).ends_with(std::string("\nAnswer:") + letter),
                 "serial " + serial + " -> " + letter);
    }
    c.note << "2 golden samples, numeric and roman variants, " << mapping.size() << " serial mappings";
}

// Opening and closing marker lines alternate and at least one pair exists.
bool markers_balanced(const std::string& text) {
    bool open = false;
    std::size_t pairs = 0;
    for (auto line : split_lines(text)) {
        if (line.starts_with("<code-encode>")) {
            if (open) return false;
            open = true;
        } else if (line == "</code-encode>") {
            if (!open) return false;
            open = false;
            ++pairs;
        }
    }
    return !open && pairs > 0;
}

void ac6(Check& c) {
    struct Case {
        std::string name;
        std::string html;
        std::optional<std::string> expected;
        std::string url = "https://forum.example/q";
    };
    const std::vector<Case> pages = {
        {"interleaved",
         "<html><body><h1>How do I reverse a list?</h1><p>I tried the obvious approach but it fails.</p>"
         "<pre><code>xs = [1, 2, 3]\nxs.reverse()\nprint(xs)</code></pre><p>Any ideas?</p></body></html>",
         "How do I reverse a list?\nI tried the obvious approach but it fails.\n<code-encode>\n"
         "xs = [1, 2, 3]\nxs.reverse()\nprint(xs)\n</code-encode>\nAny ideas?"},
        {"display-none block",
         "<html><body><p>Set the counter first.</p><pre><code>count = 0\ncount += 1</code></pre>"
         "<div style=\"display:none\"><pre><code>SENTINEL_ONE = 1;</code></pre></div><p>Then print it.</p></body></html>",
         "Set the counter first.\n<code-encode>\ncount = 0\ncount += 1\n</code-encode>\nThen print it."},
        {"aria-hidden text",
         "<html><body><p>Run this.</p><div aria-hidden=\"true\">SENTINEL_TWO</div>"
         "<pre><code>import sys\nsys.exit(0)</code></pre></body></html>",
         "Run this.\n<code-encode>\nimport sys\nsys.exit(0)\n</code-encode>"},
        {"only hidden code",
         "<html><body><p>Nothing to see.</p><section style=\"visibility:hidden\">"
         "<pre><code>int SENTINEL_THREE = 3;</code></pre></section></body></html>",
         std::nullopt},
        {"numbered lines",
         "<html><body><p>Numbered listing.</p><pre><code>1 total = 0\n2 for x in xs:\n3 total += x\n4 print(total)"
         "</code></pre></body></html>",
         "Numbered listing.\n<code-encode>\ntotal = 0\nfor x in xs:\ntotal += x\nprint(total)\n</code-encode>"},
        {"numbers that are not line numbers",
         "<html><body><pre><code>10 x = f(1);\n20 y = f(2);\n30 z = f(3);</code></pre></body></html>",
         "<code-encode>\n10 x = f(1);\n20 y = f(2);\n30 z = f(3);\n</code-encode>"},
        {"split snippet",
         "<html><body><p>Two halves.</p><pre><code>int a = 1;</code></pre>\n<pre><code>int b = 2;</code></pre>"
         "<p>Done.</p></body></html>",
         "Two halves.\n<code-encode>\nint a = 1;\nint b = 2;\n</code-encode>\nDone."},
        {"split numbered snippet",
         "<html><body><pre><code>1 a = f()</code></pre><pre><code>2 b = g()</code></pre>"
         "<pre><code>3 c = h()</code></pre></body></html>",
         "<code-encode>\na = f()\nb = g()\nc = h()\n</code-encode>"},
        {"prose only", "<html><body><h1>Gardening</h1><p>Water the plants every morning.</p></body></html>",
         std::nullopt},
        {"inline prose code", "<html><body><p>Type <code>hello world</code> to greet.</p></body></html>",
         std::nullopt},
    };
    std::size_t exact = 0;
    for (const auto& p : pages) {
        auto d = code::extract_code_document(html_record(p.html, p.url));
        std::optional<std::string> got;
        if (d) got = d->text;
        bool same = got == p.expected;
        exact += same;
        c.expect(same, p.name + (got ? " produced:\n" + *got : " produced nothing"));
        if (got) {
            c.expect(markers_balanced(*got), p.name + ": unbalanced markers");
            c.expect(got->find("SENTINEL") == std::string::npos, p.name + ": hidden text leaked");
        }
    }
    c.note << exact << "/" << pages.size() << " pages exact";
}

void ac7(Check& c) {
    std::size_t accepted = 0, rejected = 0;
    for (const auto& f : mathfix::well_formed()) accepted += math::is_valid_latex(f);
    for (const auto& f : mathfix::malformed()) rejected += !math::is_valid_latex(f);
    c.expect(mathfix::well_formed().size() == 20 && accepted == 20, "accepted " + std::to_string(accepted) + "/20");
    c.expect(mathfix::malformed().size() == 20 && rejected == 20, "rejected " + std::to_string(rejected) + "/20");

    auto rec = html_record(
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
        "</body></html>",
        "https://example.org/physics");
    auto d = math::extract_math_document(rec, math::MathPath::html);
    c.expect(d.has_value(), "duplicate-representation page rejected");
    if (d) {
        for (const char* s : {"SENTA", "SENTB", "SENTC", "SENTD"}) {
            c.expect(mathfix::brute_force_count(d->text, {s}) == 1, std::string(s) + " not exactly once");
        }
    }

    auto patterns = math::ascii_keywords({});
    std::mt19937_64 rng(71);
    std::vector<std::string> sample;
    for (std::size_t i = 0; i < 400; ++i) sample.push_back(patterns[rng() % patterns.size()]);
    std::size_t gate_agree = 0;
    for (int i = 0; i < 50; ++i) {
        auto text = mathfix::random_math_text(rng, sample);
        gate_agree += math::count_math_keywords(text) == mathfix::brute_force_count(text, patterns);
    }
    c.expect(gate_agree == 50, "gate counts agree on " + std::to_string(gate_agree) + "/50");
    c.note << "accepted " << accepted << "/20, rejected " << rejected << "/20, gate " << gate_agree << "/50";
}

std::vector<classifier::LabeledExample> examples(const std::vector<testsupport::LabeledText>& v) {
    std::vector<classifier::LabeledExample> out;
    for (const auto& x : v) out.push_back({x.text, x.positive});
    return out;
}

void ac8(Check& c) {
    classifier::TrainOptions o;
    o.feature_dim = 1u << 16;
    auto train_set = examples(testsupport::separable_corpus(81, 1000));
    auto held_out = examples(testsupport::separable_corpus(82, 200));
    auto a = classifier::train(train_set, o);
    std::size_t right = 0;
    for (const auto& e : held_out) right += (classifier::score(a.model, e.text) > 0.5) == e.positive;
    double acc = static_cast<double>(right) / static_cast<double>(held_out.size());
    c.expect(acc >= 0.95, "held-out accuracy " + std::to_string(acc));

    std::mt19937_64 rng(83);
    std::normal_distribution<double> normal(0.0, 0.5);
    double worst = 0;
    for (int trial = 0; trial < 10; ++trial) {
        classifier::NgramModel m;
        m.feature_dim = 32;
        m.weights.resize(32);
        for (double& w : m.weights) w = normal(rng);
        m.bias = normal(rng);
        std::vector<classifier::SparseVector> xs;
        std::vector<bool> ys;
        for (const auto& e : testsupport::separable_corpus(900 + static_cast<std::uint64_t>(trial), 4)) {
            xs.push_back(classifier::featurize(e.text, m));
            ys.push_back(e.positive);
        }
        auto g = classifier::loss_gradient(m, xs, ys);
        const double step = 1e-5;
        double diff_sq = 0, ref_sq = 0;
        for (std::size_t i = 0; i <= m.weights.size(); ++i) {
            double& p = i < m.weights.size() ? m.weights[i] : m.bias;
            double saved = p;
            p = saved + step;
            double up = classifier::log_loss(m, xs, ys);
            p = saved - step;
            double down = classifier::log_loss(m, xs, ys);
            p = saved;
            double numeric = (up - down) / (2 * step);
            double analytic = i < m.weights.size() ? g.weights[i] : g.bias;
            diff_sq += (numeric - analytic) * (numeric - analytic);
            ref_sq += std::max(numeric * numeric, analytic * analytic);
        }
        worst = std::max(worst, std::sqrt(diff_sq / ref_sq));
    }
    c.expect(worst <= 1e-4, "gradient relative error " + std::to_string(worst));

    auto b = classifier::train(train_set, o);
    bool identical = a.model.weights.size() == b.model.weights.size() && a.model.bias == b.model.bias &&
                     std::memcmp(a.model.weights.data(), b.model.weights.data(),
                                 a.model.weights.size() * sizeof(double)) == 0;
    c.expect(identical, "retrain differs");
    c.note << "accuracy " << acc << ", gradient error " << worst << ", retrain " << (identical ? "identical" : "differs");
}

void ac9(Check& c) {
    testsupport::TempDir dir;
    auto corpus = pipefix::write_warc_corpus(dir / "in", 1000, 8, 91);
    pipeline::PipelineConfig cfg;
    cfg.pipeline = pipeline::PipelineKind::web_warc;
    cfg.input_paths = {dir / "in"};
    cfg.model_paths["lang_id"] = pipefix::write_lang_scores(dir / "lang.tsv", corpus.ids);

    auto t0 = Clock::now();
    cfg.output_dir = dir / "one";
    auto r1 = pipeline::run(cfg);
    double secs = seconds_since(t0);

    cfg.output_dir = dir / "eight";
    cfg.workers = 8;
    auto r8 = pipeline::run(cfg);
    auto one = pipefix::output_bytes(dir / "one");
    c.expect(one == pipefix::output_bytes(dir / "eight"), "1 and 8 workers differ");
    c.expect(pipefix::report_bytes(r1) == pipefix::report_bytes(r8), "reports differ across worker counts");

    cfg.output_dir = dir / "resumed";
    cfg.workers = 1;
    pipeline::RunOptions stop;
    stop.fail_after_shards = 3;
    bool aborted = false;
    try {
        pipeline::run(cfg, stop);
    } catch (const pipeline::RunAborted&) {
        aborted = true;
    }
    c.expect(aborted, "interrupted run did not stop");
    auto rr = pipeline::run(cfg);
    c.expect(one == pipefix::output_bytes(dir / "resumed"), "resumed output differs");
    c.expect(pipefix::report_bytes(r1) == pipefix::report_bytes(rr), "resumed report differs");
    c.expect(secs < 120.0, "runtime " + std::to_string(secs) + " s");

    std::size_t kept = r1.per_stage.back().docs_out;
    c.expect(kept > 500, "only " + std::to_string(kept) + " documents kept");
    c.note << "1000 docs, " << kept << " kept, " << one.size() << " output bytes, single-worker run " << secs << " s";
}

#ifdef WEBCURATE_CLI
int cli(const std::string& args) {
    int status = std::system((std::string(WEBCURATE_CLI) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
#endif

void ac10(Check& c) {
#ifndef WEBCURATE_CLI
    c.expect(false, "CLI binary not available");
#else
    // Keepers: long distinct English pages. Everything else is sized so that
    // about 99% of tokens go: low-confidence language, exact copies of a
    // keeper, and short pages.
    testsupport::TempDir dir;
    testsupport::TextGen gen(1001);
    std::vector<testsupport::Page> pages;
    std::vector<std::string> ids;
    classifier::ScoreFile lang;
    std::size_t total_tokens = 0, kept_tokens = 0;
    auto add = [&](const std::string& body, double p_en, bool keeper) {
        std::string id = pipefix::record_id("CC-ACC-WET", pages.size());
        pages.push_back({id, "https://acc.example/" + std::to_string(pages.size()), body});
        lang[id] = p_en;
        // whitespace-separated words
        std::istringstream in(body);
        std::size_t n = 0;
        for (std::string w; in >> w;) ++n;
        total_tokens += n;
        if (keeper) kept_tokens += n;
    };
    std::vector<std::string> keepers;
    for (int i = 0; i < 8; ++i) keepers.push_back(gen.document(120));
    for (int i = 0; i < 8; ++i) {
        add(keepers[static_cast<std::size_t>(i)], 0.95, true);
        for (int k = 0; k < 12; ++k) add(gen.document(1500), 0.1 + 0.03 * k, false);
        add(keepers[static_cast<std::size_t>(i)], 0.95, false);
        add("Short page " + std::to_string(i) + " with little text.", 0.95, false);
    }
    auto shard = dir / "CC-ACC-WET.warc.wet.gz";
    testsupport::write_wet(shard, pages);
    classifier::write_score_file(lang, dir / "lang.tsv");

    pipeline::PipelineConfig cfg;
    cfg.pipeline = pipeline::PipelineKind::web_wet;
    cfg.input_paths = {shard};
    cfg.output_dir = dir / "out";
    cfg.model_paths["lang_id"] = dir / "lang.tsv";
    pipeline::run(cfg);

    int code = cli("stats " + (dir / "out" / "run_report.json").string() + " --json " + (dir / "stats.json").string());
    c.expect(code == 0, "stats exited " + std::to_string(code));
    if (code != 0) return;
    auto table = nlohmann::json::parse(testsupport::read_file(dir / "stats.json"));
    double truth = static_cast<double>(kept_tokens) / static_cast<double>(total_tokens);
    double reported = table.at("total_token_retention").get<double>();
    c.expect(table.at("conserved").get<bool>(), "conservation flag false");

    // the per-stage rows must chain and multiply out to the total
    double product = 1.0;
    std::uint64_t prev_out = 0;
    bool chained = true;
    const auto& rows = table.at("stages");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& s = rows[i];
        auto tin = s.at("tokens_in").get<std::uint64_t>();
        auto tout = s.at("tokens_out").get<std::uint64_t>();
        if (i > 0) chained = chained && tin == prev_out;
        if (tin > 0) product *= static_cast<double>(tout) / static_cast<double>(tin);
        prev_out = tout;
    }
    c.expect(chained, "stage tokens do not chain");
    c.expect(std::abs(product - reported) < 1e-12, "stage retentions do not multiply to the total");
    c.expect(rows.size() > 0 && rows[0].at("tokens_in").get<std::size_t>() == total_tokens,
             "read stage saw a different token count");
    c.expect(truth < 0.02, "fixture keeps too much: " + std::to_string(truth));
    c.expect(std::abs(reported - truth) <= 0.005,
             "retention " + std::to_string(reported) + " vs engineered " + std::to_string(truth));
    c.note << "engineered " << truth * 100 << "%, reported " << reported * 100 << "% over " << total_tokens
           << " tokens";
#endif
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"AC1 rule filters match the naive re-implementation", ac1},
        {"AC2 shipped threshold defaults", ac2},
        {"AC3 MinHash estimate, collision curve and threshold", ac3},
        {"AC4 planted near-duplicate pairs", ac4},
        {"AC5 multiple-choice golden files", ac5},
        {"AC6 code extraction fixtures", ac6},
        {"AC7 math validator, duplicates and keyword gate", ac7},
        {"AC8 quality classifier", ac8},
        {"AC9 end-to-end determinism and resume", ac9},
        {"AC10 per-stage token accounting", ac10},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Check c;
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << name << " (" << c.note.str() << ")\n";
        for (const auto& f : c.failures) std::cout << "       " << f << "\n";
        failed += !c.ok();
    }
    std::cout << (10 - failed) << "/10 criteria pass\n";
    return failed ? 1 : 0;
}
