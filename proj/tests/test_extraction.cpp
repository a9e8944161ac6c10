#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"
#include "webcurate/extraction.hpp"
#include "webcurate/html_dom.hpp"

using namespace webcurate;
using namespace webcurate::extraction;

namespace {

Document doc(std::string id, std::string snapshot, std::string shard, std::uint64_t offset,
             std::vector<std::string> paragraphs) {
    Document d;
    d.doc_id = std::move(id);
    d.snapshot_id = std::move(snapshot);
    d.shard_id = std::move(shard);
    d.offset = offset;
    d.set_paragraphs(std::move(paragraphs));
    return d;
}

// Independent normalization: lowercase, remove digits, split on whitespace, rejoin.
std::string oracle_norm(const std::string& p) {
    std::string s;
    for (char c : p) {
        if (c >= '0' && c <= '9') continue;
        s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    std::istringstream in(s);
    std::string w, out;
    while (in >> w) out += (out.empty() ? "" : " ") + w;
    return out;
}

// Brute force: walk documents in (snapshot, shard, offset, input index) order
// with one std::set of normalized strings per scope unit.
std::vector<std::vector<std::string>> oracle_dedup(const std::vector<Document>& docs, DedupScope scope) {
    std::vector<std::size_t> order(docs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(docs[a].snapshot_id, docs[a].shard_id, docs[a].offset) <
               std::tie(docs[b].snapshot_id, docs[b].shard_id, docs[b].offset);
    });
    std::map<std::string, std::set<std::string>> seen;
    std::vector<std::vector<std::string>> kept(docs.size());
    for (std::size_t i : order) {
        std::string unit = scope == DedupScope::global     ? ""
                           : scope == DedupScope::snapshot ? docs[i].snapshot_id
                                                           : docs[i].snapshot_id + "/" + docs[i].shard_id;
        for (const auto& p : docs[i].paragraphs) {
            std::string n = oracle_norm(p);
            if (n.empty() || seen[unit].insert(n).second) kept[i].push_back(p);
        }
    }
    std::vector<std::vector<std::string>> out;
    for (auto& k : kept) {
        bool any = std::any_of(k.begin(), k.end(), [](const std::string& p) { return !oracle_norm(p).empty(); });
        if (any) out.push_back(k);
    }
    return out;
}

std::vector<std::vector<std::string>> paragraphs_of(const std::vector<Document>& docs) {
    std::vector<std::vector<std::string>> out;
    for (const auto& d : docs) out.push_back(d.paragraphs);
    return out;
}

}  // namespace

TEST(Extraction, ParagraphDedupShardExample) {
    std::vector<Document> docs = {doc("D1", "2023-40", "s1", 0, {"P", "Q"}),
                                  doc("D2", "2023-40", "s1", 100, {"P", "R"})};
    auto r = paragraph_dedup(docs, DedupScope::shard);
    ASSERT_EQ(r.docs.size(), 2u);
    EXPECT_EQ(r.docs[0].paragraphs, (std::vector<std::string>{"P", "Q"}));
    EXPECT_EQ(r.docs[1].paragraphs, (std::vector<std::string>{"R"}));
    EXPECT_EQ(r.paragraphs_removed, 1u);
}

TEST(Extraction, ParagraphDedupSnapshotAcrossShards) {
    std::vector<Document> docs = {doc("D1", "2023-40", "s1", 0, {"P", "Q"}),
                                  doc("D2", "2023-40", "s2", 0, {"P", "R"})};
    auto shard = paragraph_dedup(docs, DedupScope::shard);
    EXPECT_EQ(shard.docs[1].paragraphs, (std::vector<std::string>{"P", "R"}));
    auto snap = paragraph_dedup(docs, DedupScope::snapshot);
    EXPECT_EQ(snap.docs[1].paragraphs, (std::vector<std::string>{"R"}));
    // a different snapshot is a different unit
    docs[1].snapshot_id = "2023-50";
    EXPECT_EQ(paragraph_dedup(docs, DedupScope::snapshot).docs[1].paragraphs,
              (std::vector<std::string>{"P", "R"}));
    EXPECT_EQ(paragraph_dedup(docs, DedupScope::global).docs[1].paragraphs, (std::vector<std::string>{"R"}));
}

TEST(Extraction, ParagraphDedupUniqueIsIdentity) {
    std::vector<Document> docs = {doc("a", "x", "s", 0, {"one", "two"}), doc("b", "x", "s", 1, {"three"})};
    auto r = paragraph_dedup(docs, DedupScope::global);
    EXPECT_EQ(r.docs, docs);
    EXPECT_EQ(r.paragraphs_removed, 0u);
}

TEST(Extraction, NormalizationCollapsesBoilerplateVariants) {
    std::vector<Document> docs = {doc("a", "x", "s", 0, {"3 Comments", "body a"}),
                                  doc("b", "x", "s", 1, {"  4   comments ", "body b"})};
    auto r = paragraph_dedup(docs, DedupScope::shard);
    EXPECT_EQ(r.docs[1].paragraphs, (std::vector<std::string>{"body b"}));
}

TEST(Extraction, EmptiedDocumentsAreDropped) {
    std::vector<Document> docs = {doc("a", "x", "s", 0, {"menu", "story"}), doc("b", "x", "s", 1, {"menu"})};
    auto r = paragraph_dedup(docs, DedupScope::shard);
    ASSERT_EQ(r.docs.size(), 1u);
    EXPECT_EQ(r.docs[0].doc_id, "a");
    EXPECT_EQ(r.docs_dropped, 1u);
}

TEST(Extraction, FirstSeenFollowsPositionNotInputOrder) {
    // input order reversed relative to offsets: the lower offset keeps the paragraph
    std::vector<Document> docs = {doc("late", "x", "s", 500, {"P", "L"}), doc("early", "x", "s", 10, {"P", "E"})};
    auto r = paragraph_dedup(docs, DedupScope::shard);
    ASSERT_EQ(r.docs.size(), 2u);
    EXPECT_EQ(r.docs[0].doc_id, "late");
    EXPECT_EQ(r.docs[0].paragraphs, (std::vector<std::string>{"L"}));
    EXPECT_EQ(r.docs[1].paragraphs, (std::vector<std::string>{"P", "E"}));
}

TEST(Extraction, ParagraphDedupMatchesBruteForce) {
    std::mt19937 rng(99);
    const std::vector<std::string> pool = {"Home",          "home ",         "About us",     "Read more 12",
                                           "read MORE 7",   "Copyright",     "story alpha",  "story beta",
                                           "story gamma",   "",              "   ",          "Share this 1"};
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Document> docs;
        int n = 1 + static_cast<int>(rng() % 12);
        for (int i = 0; i < n; ++i) {
            std::vector<std::string> ps;
            int k = 1 + static_cast<int>(rng() % 5);
            for (int j = 0; j < k; ++j) ps.push_back(pool[rng() % pool.size()]);
            docs.push_back(doc("d" + std::to_string(i), rng() % 2 ? "A" : "B", "s" + std::to_string(rng() % 3),
                               rng() % 1000, ps));
        }
        for (auto scope : {DedupScope::shard, DedupScope::snapshot, DedupScope::global}) {
            EXPECT_EQ(paragraphs_of(paragraph_dedup(docs, scope).docs), oracle_dedup(docs, scope));
        }
        // wider scopes only ever remove more
        auto shard = paragraph_dedup(docs, DedupScope::shard);
        auto snap = paragraph_dedup(docs, DedupScope::snapshot);
        EXPECT_GE(snap.paragraphs_removed, shard.paragraphs_removed);
        EXPECT_EQ(paragraph_dedup(docs, DedupScope::snapshot).docs, snap.docs);
    }
}

TEST(Extraction, MainContentDropsNavigation) {
    testsupport::TextGen gen(5);
    std::string article = gen.paragraph(6);
    ASSERT_GE(article.size(), 500u);
    std::string html = "<html><body><nav><ul>";
    for (int i = 0; i < 20; ++i) html += "<li><a href='/m" + std::to_string(i) + "'>MENUSENTINEL" + std::to_string(i) + "</a></li>";
    html += "</ul></nav><div class='article'><p>" + article + "</p></div><footer>FOOTSENTINEL</footer></body></html>";
    auto text = extract_main_content(html::parse_html(html));
    ASSERT_TRUE(text.has_value());
    EXPECT_EQ(text->find("SENTINEL"), std::string::npos);
    EXPECT_EQ(*text, article);
}

TEST(Extraction, LinkFarmHasNoMainContent) {
    std::string html = "<div>";
    for (int i = 0; i < 40; ++i) html += "<a href='/x'>link number " + std::to_string(i) + "</a> ";
    html += "</div>";
    EXPECT_FALSE(extract_main_content(html::parse_html(html)).has_value());
}

TEST(Extraction, SingleParagraph) {
    std::string p(200, 'a');
    for (std::size_t i = 10; i < p.size(); i += 11) p[i] = ' ';
    auto text = extract_main_content(html::parse_html("<p>" + p + "</p>"));
    ASSERT_TRUE(text.has_value());
    EXPECT_EQ(*text, p);
}

TEST(Extraction, ShortPageHasNoMainContent) {
    EXPECT_FALSE(extract_main_content(html::parse_html("<p>too short</p>")).has_value());
}

TEST(Extraction, MainContentLinesComeFromVisibleText) {
    testsupport::TextGen gen(17);
    for (int trial = 0; trial < 30; ++trial) {
        std::string html = "<body><header><a href='/'>Site</a></header><main>";
        int blocks = 1 + static_cast<int>(gen.pick(4));
        for (int b = 0; b < blocks; ++b) {
            html += "<p>" + gen.paragraph(1 + gen.pick(3)) + (gen.pick(2) ? " <a href='#'>" + gen.word() + "</a>" : "") + "</p>";
        }
        html += "</main><aside>" + gen.sentence() + "</aside></body>";
        auto tree = html::parse_html(html);
        auto full = html::visible_text(tree);
        auto main = extract_main_content(tree);
        if (!main) continue;
        for (auto line : split_lines(*main)) EXPECT_NE(full.find(line), std::string::npos) << line;
    }
}

TEST(Extraction, FulltextKeepsSidebarAndCode) {
    std::string html =
        "<body><aside>SIDEBAR links</aside><article><p>Intro text.</p><pre><code>int x = 1;</code></pre></article></body>";
    auto text = html_to_fulltext(html::strip_hidden(html::parse_html(html)));
    EXPECT_NE(text.find("SIDEBAR"), std::string::npos);
    EXPECT_NE(text.find("int x = 1;"), std::string::npos);
    EXPECT_EQ(html_to_fulltext(html::parse_html("<body></body>")), "");
}

TEST(Extraction, FulltextEqualsMainContentOnCleanPage) {
    testsupport::TextGen gen(23);
    std::string a = gen.paragraph(4), b = gen.paragraph(4);
    auto tree = html::parse_html("<body><div><p>" + a + "</p><p>" + b + "</p></div></body>");
    auto main = extract_main_content(tree);
    ASSERT_TRUE(main.has_value());
    EXPECT_EQ(collapse_whitespace_lower(*main), collapse_whitespace_lower(html_to_fulltext(tree)));
}

TEST(Extraction, HtmlTokenCountBoundsRenderedTokens) {
    testsupport::TextGen gen(31);
    for (int i = 0; i < 20; ++i) {
        std::string html = "<div><p>" + gen.paragraph(2) + "</p><span>" + gen.sentence() + "</span></div>";
        auto rendered = html_to_fulltext(html::parse_html(html));
        EXPECT_LE(count_tokens(rendered), html_token_count(html));
    }
}
