#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"
#include "webcurate/corpus_io.hpp"

using namespace webcurate;
using testsupport::Page;
using testsupport::TempDir;

namespace {

std::vector<Page> three_pages() {
    return {{"<urn:1>", "http://a.example/1", "first page\nsecond line"},
            {"<urn:2>", "http://a.example/2", "another page"},
            {"<urn:3>", "http://a.example/3", "third"}};
}

}  // namespace

TEST(CorpusIo, ReadsWetShardInOffsetOrder) {
    TempDir dir;
    for (bool gzip : {true, false}) {
        auto path = dir / (gzip ? "CC-MAIN-2023-40-00001.warc.wet.gz" : "CC-MAIN-2023-40-00001.warc.wet");
        testsupport::write_wet(path, three_pages(), gzip);
        auto r = read_records(path, RecordKind::conversion);
        ASSERT_EQ(r.records.size(), 3u);
        EXPECT_EQ(r.malformed, 0u);
        EXPECT_EQ(r.records[0].record_id, "<urn:1>");
        EXPECT_EQ(r.records[0].payload, "first page\nsecond line");
        EXPECT_EQ(r.records[2].target_url, "http://a.example/3");
        EXPECT_EQ(r.records[0].snapshot_id, "2023-40");
        EXPECT_EQ(r.records[0].shard_id, "CC-MAIN-2023-40-00001");
        EXPECT_EQ(r.records[0].offset, 0u);
        EXPECT_LT(r.records[0].offset, r.records[1].offset);
        EXPECT_LT(r.records[1].offset, r.records[2].offset);
        // offsets are the uncompressed position of each version line
        EXPECT_EQ(r.records[1].offset, testsupport::conversion_record(three_pages()[0]).size());
        EXPECT_EQ(r.manifest.record_count, 3u);
    }
}

TEST(CorpusIo, TruncatedRecordIsSkippedAndCounted) {
    TempDir dir;
    std::vector<std::string> recs;
    for (int i = 0; i < 5; ++i) {
        recs.push_back(testsupport::conversion_record(
            {"<urn:" + std::to_string(i) + ">", "http://x/" + std::to_string(i), "payload " + std::to_string(i)}));
    }
    // record 2 claims more bytes than it carries
    std::string& bad = recs[2];
    auto pos = bad.find("Content-Length: ");
    auto eol = bad.find("\r\n", pos);
    bad.replace(pos, eol - pos, "Content-Length: 90");
    auto path = dir / "shard.warc.wet";
    webcurate::write_archive(path, recs, false);
    auto r = read_records(path, RecordKind::conversion);
    ASSERT_EQ(r.records.size(), 4u);
    EXPECT_EQ(r.malformed, 1u);
    std::vector<std::string> ids;
    for (const auto& rec : r.records) ids.push_back(rec.record_id);
    EXPECT_EQ(ids, (std::vector<std::string>{"<urn:0>", "<urn:1>", "<urn:3>", "<urn:4>"}));
}

TEST(CorpusIo, MissingContentLengthIsMalformed) {
    TempDir dir;
    std::string rec = "WARC/1.0\r\nWARC-Type: conversion\r\nWARC-Record-ID: <urn:z>\r\n\r\nbody\r\n\r\n";
    rec += testsupport::conversion_record({"<urn:ok>", "http://ok", "fine"});
    testsupport::write_file(dir / "m.wet", rec);
    auto r = read_records(dir / "m.wet", RecordKind::conversion);
    ASSERT_EQ(r.records.size(), 1u);
    EXPECT_EQ(r.records[0].record_id, "<urn:ok>");
    EXPECT_EQ(r.malformed, 1u);
}

TEST(CorpusIo, EmptyFileYieldsNothing) {
    TempDir dir;
    testsupport::write_file(dir / "empty.wet", "");
    auto r = read_records(dir / "empty.wet", RecordKind::conversion);
    EXPECT_TRUE(r.records.empty());
    EXPECT_EQ(r.malformed, 0u);
}

TEST(CorpusIo, UnreadableFileThrows) {
    TempDir dir;
    EXPECT_THROW(read_records(dir / "absent.warc.gz", RecordKind::response), IoError);
}

TEST(CorpusIo, NonHtmlResponsesAreSkipped) {
    TempDir dir;
    std::vector<std::string> recs = {
        testsupport::response_record({"<urn:h>", "http://h", "<p>hello</p>"}),
        format_warc_record("response", "<urn:j>", "http://j", format_http_response("{}", "application/json")),
        format_warc_record("request", "<urn:q>", "http://q", "GET / HTTP/1.1\r\n\r\n"),
    };
    write_archive(dir / "s.warc.gz", recs, true);
    WarcReader reader(dir / "s.warc.gz", RecordKind::response);
    std::vector<RawRecord> got;
    reader.for_each([&](RawRecord&& r) { got.push_back(std::move(r)); });
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0].payload, "<p>hello</p>");
    EXPECT_EQ(got[0].record_kind, RecordKind::response);
    EXPECT_EQ(reader.skipped_count(), 1u);
    EXPECT_EQ(reader.malformed_count(), 0u);
}

TEST(CorpusIo, ManifestChecksumIsFnvOfPayloads) {
    TempDir dir;
    auto pages = three_pages();
    testsupport::write_wet(dir / "s.wet.gz", pages);
    auto r = read_records(dir / "s.wet.gz", RecordKind::conversion);
    std::uint64_t h = kFnvOffset;
    for (const auto& p : pages) h = fnv1a64(p.body, h);
    EXPECT_EQ(r.manifest.checksum, h);
    EXPECT_EQ(r.manifest.input_bytes, std::filesystem::file_size(dir / "s.wet.gz"));
}

TEST(CorpusIo, StreamingHoldsOnePayloadAtATime) {
    TempDir dir;
    std::vector<Page> pages;
    for (int i = 0; i < 50; ++i) {
        pages.push_back({"<urn:" + std::to_string(i) + ">", "http://p", std::string(1000 + 10 * i, 'x')});
    }
    testsupport::write_wet(dir / "big.wet.gz", pages);
    WarcReader reader(dir / "big.wet.gz", RecordKind::conversion);
    std::size_t n = 0;
    reader.for_each([&](RawRecord&&) { ++n; });
    EXPECT_EQ(n, 50u);
    EXPECT_EQ(reader.peak_payload_bytes(), 1000u + 10u * 49u);
}

TEST(CorpusIo, DocumentRoundTrip) {
    TempDir dir;
    Document a;
    a.doc_id = "d1";
    a.url = "http://x";
    a.snapshot_id = "2023-40";
    a.shard_id = "s";
    a.offset = 42;
    a.set_text("line one\nline \"two\"\twith tab\n\ncaf\xC3\xA9");
    a.domain_tag = DomainTag::math;
    a.stage_trace = {"read", "math_extract"};
    Document b;
    b.doc_id = "d2";
    b.set_text("");
    std::vector<Document> docs{a, b};
    auto m = write_documents(docs, dir / "out.jsonl");
    EXPECT_EQ(m.record_count, 2u);
    std::string raw = testsupport::read_file(dir / "out.jsonl");
    EXPECT_EQ(std::count(raw.begin(), raw.end(), '\n'), 2);
    auto back = read_documents(dir / "out.jsonl");
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0], a);
    EXPECT_EQ(back[1], b);
    EXPECT_FALSE(std::filesystem::exists(dir / "out.jsonl.partial"));
    auto side = read_manifest(dir / "out.jsonl");
    ASSERT_TRUE(side.has_value());
    EXPECT_EQ(*side, m);
    EXPECT_EQ(compute_file_manifest(dir / "out.jsonl"), m);
}

TEST(CorpusIo, EmptyDocumentFile) {
    TempDir dir;
    std::vector<Document> none;
    auto m = write_documents(none, dir / "e.jsonl");
    EXPECT_EQ(m.record_count, 0u);
    EXPECT_EQ(std::filesystem::file_size(dir / "e.jsonl"), 0u);
    EXPECT_TRUE(read_documents(dir / "e.jsonl").empty());
}

TEST(CorpusIo, DocumentInvariants) {
    Document d;
    d.set_paragraphs({"alpha beta", "", "gamma"});
    EXPECT_EQ(d.text, "alpha beta\n\ngamma");
    EXPECT_EQ(d.word_count, 3u);
    EXPECT_EQ(d.char_count, d.text.size());
    Document e;
    e.set_text(d.text);
    EXPECT_EQ(e.paragraphs, d.paragraphs);
}

TEST(CorpusIo, MergeStats) {
    StageStats a{"s", 10, 4, 100, 40, {{"r1", 2}}};
    StageStats b{"s", 6, 2, 60, 20, {{"r1", 1}, {"r2", 5}}};
    std::vector<StageStats> v{a, b};
    auto m = merge_stats(v);
    EXPECT_EQ(m.docs_in, 16u);
    EXPECT_EQ(m.docs_out, 6u);
    EXPECT_EQ(m.tokens_in, 160u);
    EXPECT_EQ(m.tokens_out, 60u);
    EXPECT_EQ(m.rule_hit_counts, (std::map<std::string, std::uint64_t>{{"r1", 3}, {"r2", 5}}));
    std::vector<StageStats> one{a};
    EXPECT_EQ(merge_stats(one), a);
    std::vector<StageStats> bad{a, StageStats{"other"}};
    EXPECT_THROW(merge_stats(bad), std::invalid_argument);
}

TEST(CorpusIo, ShardAndSnapshotNames) {
    EXPECT_EQ(shard_id_from_path("/d/CC-MAIN-2023-40-000.warc.wet.gz"), "CC-MAIN-2023-40-000");
    EXPECT_EQ(shard_id_from_path("x.jsonl"), "x");
    EXPECT_EQ(snapshot_id_from_path("/d/CC-MAIN-2023-14/seg.warc.gz"), "2023-14");
    EXPECT_EQ(snapshot_id_from_path("/d/local.warc.gz"), "");
}
