#pragma once

// Archive records in, documents out.
//
// WarcReader streams WARC/1.0 records from plain or gzip-per-record files,
// holding at most one record payload in memory. Documents are persisted as
// JSON lines with a `<file>.manifest` sidecar; the manifest checksum is the
// 64-bit FNV-1a digest of the concatenated record payloads (for archive
// shards) or of the concatenated output lines including their trailing
// newline (for document files).

#include <zlib.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "webcurate/text.hpp"

namespace webcurate {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration detected before any work is done.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RecordKind { response, conversion };

struct RawRecord {
    std::string record_id;
    std::string target_url;
    RecordKind record_kind = RecordKind::conversion;
    std::string payload;  // HTML body for responses, plain text for conversions
    std::string snapshot_id;
    std::string shard_id;
    std::uint64_t offset = 0;  // offset of the version line in the uncompressed stream

    bool operator==(const RawRecord&) const = default;
};

enum class DomainTag { web, code, math, open_qa, mcq };

inline std::string_view to_string(DomainTag t) {
    switch (t) {
        case DomainTag::web: return "web";
        case DomainTag::code: return "code";
        case DomainTag::math: return "math";
        case DomainTag::open_qa: return "open_qa";
        case DomainTag::mcq: return "mcq";
    }
    return "web";
}

inline DomainTag parse_domain_tag(std::string_view s) {
    if (s == "web") return DomainTag::web;
    if (s == "code") return DomainTag::code;
    if (s == "math") return DomainTag::math;
    if (s == "open_qa") return DomainTag::open_qa;
    if (s == "mcq") return DomainTag::mcq;
    throw FormatError("unknown domain_tag: " + std::string(s));
}

/// A processed document. `text`, `paragraphs`, `char_count` and `word_count`
/// are kept consistent by set_text / set_paragraphs; mutate them only
/// through those.
struct Document {
    std::string doc_id;
    std::string url;
    std::string snapshot_id;
    std::string shard_id;
    std::uint64_t offset = 0;
    std::string text;
    std::vector<std::string> paragraphs;
    DomainTag domain_tag = DomainTag::web;
    std::vector<std::string> stage_trace;
    std::size_t char_count = 0;
    std::size_t word_count = 0;

    void set_text(std::string t) {
        text = std::move(t);
        paragraphs.clear();
        for (auto line : split_lines(text)) paragraphs.emplace_back(line);
        char_count = char_length(text);
        word_count = count_tokens(text);
    }

    void set_paragraphs(std::vector<std::string> ps) {
        paragraphs = std::move(ps);
        text = join(paragraphs, "\n");
        char_count = char_length(text);
        word_count = count_tokens(text);
    }

    bool operator==(const Document&) const = default;
};

/// Builds a document from a record, carrying its provenance over.
inline Document document_from_record(const RawRecord& rec, std::string text,
                                     DomainTag tag = DomainTag::web) {
    Document d;
    d.doc_id = rec.record_id;
    d.url = rec.target_url;
    d.snapshot_id = rec.snapshot_id;
    d.shard_id = rec.shard_id;
    d.offset = rec.offset;
    d.domain_tag = tag;
    d.set_text(std::move(text));
    return d;
}

/// WET-style text: CR stripped, blank lines dropped, lines right-trimmed.
inline std::string normalize_plain_text(std::string_view raw) {
    std::vector<std::string_view> kept;
    for (auto line : split_lines(raw)) {
        auto t = trim_right(line);
        if (!trim(t).empty()) kept.push_back(t);
    }
    return join(kept, "\n");
}

struct ShardManifest {
    std::string shard_id;
    std::uint64_t record_count = 0;
    std::uint64_t input_bytes = 0;
    std::uint64_t checksum = kFnvOffset;

    bool operator==(const ShardManifest&) const = default;
};

struct StageStats {
    std::string stage_name;
    std::uint64_t docs_in = 0;
    std::uint64_t docs_out = 0;
    std::uint64_t tokens_in = 0;
    std::uint64_t tokens_out = 0;
    std::map<std::string, std::uint64_t> rule_hit_counts;

    bool operator==(const StageStats&) const = default;
};

/// Sums stats of the same stage (e.g. from several shards).
inline StageStats merge_stats(std::span<const StageStats> stats) {
    if (stats.empty()) throw std::invalid_argument("merge_stats: empty input");
    StageStats out;
    out.stage_name = stats.front().stage_name;
    for (const auto& s : stats) {
        if (s.stage_name != out.stage_name) {
            throw std::invalid_argument("merge_stats: stage name mismatch: " + out.stage_name +
                                        " vs " + s.stage_name);
        }
        out.docs_in += s.docs_in;
        out.docs_out += s.docs_out;
        out.tokens_in += s.tokens_in;
        out.tokens_out += s.tokens_out;
        for (const auto& [rule, n] : s.rule_hit_counts) out.rule_hit_counts[rule] += n;
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON forms

inline nlohmann::json to_json(const Document& d) {
    return nlohmann::json{{"doc_id", d.doc_id},           {"url", d.url},
                          {"snapshot_id", d.snapshot_id}, {"shard_id", d.shard_id},
                          {"offset", d.offset},           {"text", d.text},
                          {"domain_tag", to_string(d.domain_tag)},
                          {"stage_trace", d.stage_trace}};
}

inline Document document_from_json(const nlohmann::json& j) {
    Document d;
    try {
        d.doc_id = j.at("doc_id").get<std::string>();
        d.url = j.at("url").get<std::string>();
        d.snapshot_id = j.at("snapshot_id").get<std::string>();
        d.shard_id = j.value("shard_id", std::string{});
        d.offset = j.value("offset", std::uint64_t{0});
        d.domain_tag = parse_domain_tag(j.at("domain_tag").get<std::string>());
        d.stage_trace = j.at("stage_trace").get<std::vector<std::string>>();
        d.set_text(j.at("text").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad document record: ") + e.what());
    }
    return d;
}

inline std::string to_json_line(const Document& d) {
    return to_json(d).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

inline nlohmann::json to_json(const StageStats& s) {
    return nlohmann::json{{"stage_name", s.stage_name}, {"docs_in", s.docs_in},
                          {"docs_out", s.docs_out},     {"tokens_in", s.tokens_in},
                          {"tokens_out", s.tokens_out}, {"rule_hit_counts", s.rule_hit_counts}};
}

inline StageStats stage_stats_from_json(const nlohmann::json& j) {
    StageStats s;
    s.stage_name = j.at("stage_name").get<std::string>();
    s.docs_in = j.at("docs_in").get<std::uint64_t>();
    s.docs_out = j.at("docs_out").get<std::uint64_t>();
    s.tokens_in = j.at("tokens_in").get<std::uint64_t>();
    s.tokens_out = j.at("tokens_out").get<std::uint64_t>();
    s.rule_hit_counts = j.value("rule_hit_counts", std::map<std::string, std::uint64_t>{});
    return s;
}

inline nlohmann::json to_json(const ShardManifest& m) {
    return nlohmann::json{{"shard_id", m.shard_id},
                          {"record_count", m.record_count},
                          {"input_bytes", m.input_bytes},
                          {"checksum", hex64(m.checksum)}};
}

inline ShardManifest manifest_from_json(const nlohmann::json& j) {
    ShardManifest m;
    m.shard_id = j.at("shard_id").get<std::string>();
    m.record_count = j.at("record_count").get<std::uint64_t>();
    m.input_bytes = j.at("input_bytes").get<std::uint64_t>();
    m.checksum = std::stoull(j.at("checksum").get<std::string>(), nullptr, 16);
    return m;
}

inline std::filesystem::path manifest_path(const std::filesystem::path& shard) {
    return shard.string() + ".manifest";
}

inline void write_manifest(const std::filesystem::path& shard, const ShardManifest& m) {
    std::ofstream out(manifest_path(shard), std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write manifest for " + shard.string());
    out << to_json(m).dump(2) << '\n';
    if (!out) throw IoError("short write on manifest for " + shard.string());
}

inline std::optional<ShardManifest> read_manifest(const std::filesystem::path& shard) {
    std::ifstream in(manifest_path(shard), std::ios::binary);
    if (!in) return std::nullopt;
    try {
        return manifest_from_json(nlohmann::json::parse(in));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Shard naming

/// File name with archive suffixes (.gz, .warc, .wet, .jsonl, .txt) removed.
inline std::string shard_id_from_path(const std::filesystem::path& p) {
    std::string name = p.filename().string();
    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (std::string_view suffix : {".gz", ".warc", ".wet", ".jsonl", ".txt"}) {
            if (name.size() > suffix.size() && name.ends_with(suffix)) {
                name.resize(name.size() - suffix.size());
                stripped = true;
            }
        }
    }
    return name;
}

/// "2023-40" from a path containing "CC-MAIN-2023-40"; empty when absent.
inline std::string snapshot_id_from_path(const std::filesystem::path& p) {
    static const std::regex kSnapshot(R"(CC-MAIN-(\d{4}-\d{2}))");
    std::smatch m;
    std::string s = p.string();
    if (std::regex_search(s, m, kSnapshot)) return m[1].str();
    return {};
}

// ---------------------------------------------------------------------------
// WARC reading

class WarcReader {
public:
    WarcReader(const std::filesystem::path& path, RecordKind kind, std::string snapshot_id = {})
        : kind_(kind), snapshot_id_(std::move(snapshot_id)), shard_id_(shard_id_from_path(path)) {
        file_ = gzopen(path.string().c_str(), "rb");
        if (file_ == nullptr) throw IoError("cannot open archive: " + path.string());
        gzbuffer(file_, 1 << 17);
        std::error_code ec;
        input_bytes_ = std::filesystem::file_size(path, ec);
        if (ec) {
            gzclose(file_);
            throw IoError("cannot stat archive: " + path.string());
        }
        if (snapshot_id_.empty()) snapshot_id_ = snapshot_id_from_path(path);
    }

    WarcReader(const WarcReader&) = delete;
    WarcReader& operator=(const WarcReader&) = delete;
    ~WarcReader() {
        if (file_ != nullptr) gzclose(file_);
    }

    /// Next record of the requested kind, or nullopt at end of stream.
    std::optional<RawRecord> next() {
        while (true) {
            std::string line;
            std::uint64_t line_start = 0;
            // find a version line
            while (true) {
                line_start = offset_;
                if (!read_line(line)) return std::nullopt;
                if (line.starts_with("WARC/1.")) break;
            }
            std::map<std::string, std::string> headers;
            bool complete = false;
            while (read_line(line)) {
                auto t = trim(line);
                if (t.empty()) {
                    complete = true;
                    break;
                }
                auto colon = t.find(':');
                if (colon == std::string_view::npos) continue;
                headers[to_lower_ascii(trim(t.substr(0, colon)))] =
                    std::string(trim(t.substr(colon + 1)));
            }
            if (!complete) {
                ++malformed_;
                return std::nullopt;
            }
            auto cl = headers.find("content-length");
            std::uint64_t length = 0;
            if (cl == headers.end() || !parse_u64(cl->second, length)) {
                ++malformed_;
                continue;
            }
            std::string payload;
            bool full = read_exact(length, payload);
            std::string terminator;
            if (full) read_exact(4, terminator);
            peak_payload_ = std::max<std::uint64_t>(peak_payload_, payload.size());
            if (!full || terminator != "\r\n\r\n") {
                // resynchronise from the first payload byte
                ++malformed_;
                unread(payload + terminator);
                continue;
            }
            auto rec = make_record(headers, std::move(payload), line_start);
            if (rec) {
                checksum_ = fnv1a64(rec->payload, checksum_);
                ++record_count_;
                return rec;
            }
        }
    }

    void for_each(const std::function<void(RawRecord&&)>& fn) {
        while (auto rec = next()) fn(std::move(*rec));
    }

    std::uint64_t malformed_count() const { return malformed_; }
    std::uint64_t skipped_count() const { return skipped_; }
    /// Largest payload buffer held at once.
    std::uint64_t peak_payload_bytes() const { return peak_payload_; }

    /// Manifest of the records yielded so far (complete after a full read).
    ShardManifest manifest() const {
        return ShardManifest{shard_id_, record_count_, input_bytes_, checksum_};
    }

private:
    static bool parse_u64(std::string_view s, std::uint64_t& out) {
        if (s.empty() || s.size() > 19) return false;
        std::uint64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        out = v;
        return true;
    }

    std::optional<RawRecord> make_record(const std::map<std::string, std::string>& headers,
                                         std::string payload, std::uint64_t offset) {
        auto get = [&](const char* key) {
            auto it = headers.find(key);
            return it == headers.end() ? std::string{} : it->second;
        };
        std::string type = to_lower_ascii(get("warc-type"));
        RawRecord rec;
        rec.record_id = get("warc-record-id");
        rec.target_url = get("warc-target-uri");
        rec.snapshot_id = snapshot_id_;
        rec.shard_id = shard_id_;
        rec.offset = offset;
        if (type == "response" && kind_ == RecordKind::response) {
            auto body = split_http(payload);
            if (!body) {
                ++malformed_;
                return std::nullopt;
            }
            if (!body->is_html) {
                ++skipped_;
                return std::nullopt;
            }
            rec.record_kind = RecordKind::response;
            rec.payload = sanitize_utf8(std::string_view(payload).substr(body->body_offset));
            return rec;
        }
        if (type == "conversion" && kind_ == RecordKind::conversion) {
            rec.record_kind = RecordKind::conversion;
            rec.payload = sanitize_utf8(payload);
            return rec;
        }
        return std::nullopt;
    }

    struct HttpBody {
        std::size_t body_offset;
        bool is_html;
    };

    static std::optional<HttpBody> split_http(std::string_view payload) {
        std::size_t end = payload.find("\r\n\r\n");
        std::size_t body = end == std::string_view::npos ? end : end + 4;
        if (end == std::string_view::npos) {
            end = payload.find("\n\n");
            body = end == std::string_view::npos ? end : end + 2;
        }
        if (end == std::string_view::npos || !payload.starts_with("HTTP/")) return std::nullopt;
        bool html = false;
        for (auto line : split_lines(payload.substr(0, end))) {
            if (starts_with_icase(trim(line), "content-type:")) {
                html = contains_icase(line, "html");
            }
        }
        return HttpBody{body, html};
    }

    bool fill() {
        if (eof_) return false;
        char chunk[1 << 16];
        int n = gzread(file_, chunk, sizeof(chunk));
        if (n < 0) {
            // corrupt compressed tail: treat as end of stream
            ++malformed_;
            eof_ = true;
            return false;
        }
        if (n == 0) {
            eof_ = true;
            return false;
        }
        buf_.erase(0, pos_);
        pos_ = 0;
        buf_.append(chunk, static_cast<std::size_t>(n));
        return true;
    }

    bool read_line(std::string& out) {
        out.clear();
        while (true) {
            std::size_t nl = buf_.find('\n', pos_);
            if (nl != std::string::npos) {
                out.append(buf_, pos_, nl + 1 - pos_);
                offset_ += nl + 1 - pos_;
                pos_ = nl + 1;
                return true;
            }
            out.append(buf_, pos_, std::string::npos);
            offset_ += buf_.size() - pos_;
            pos_ = buf_.size();
            if (!fill()) return !out.empty();
        }
    }

    bool read_exact(std::uint64_t n, std::string& out) {
        out.clear();
        while (out.size() < n) {
            if (pos_ == buf_.size() && !fill()) return false;
            std::size_t take = std::min<std::size_t>(n - out.size(), buf_.size() - pos_);
            out.append(buf_, pos_, take);
            pos_ += take;
            offset_ += take;
        }
        return true;
    }

    void unread(const std::string& bytes) {
        buf_ = bytes + buf_.substr(pos_);
        pos_ = 0;
        offset_ -= bytes.size();
    }

    gzFile file_ = nullptr;
    RecordKind kind_;
    std::string snapshot_id_;
    std::string shard_id_;
    std::string buf_;
    std::size_t pos_ = 0;
    bool eof_ = false;
    std::uint64_t offset_ = 0;
    std::uint64_t malformed_ = 0;
    std::uint64_t skipped_ = 0;
    std::uint64_t peak_payload_ = 0;
    std::uint64_t record_count_ = 0;
    std::uint64_t input_bytes_ = 0;
    std::uint64_t checksum_ = kFnvOffset;
};

struct ReadResult {
    std::vector<RawRecord> records;
    std::uint64_t malformed = 0;
    ShardManifest manifest;
};

/// Reads a whole shard. Prefer WarcReader for streaming.
inline ReadResult read_records(const std::filesystem::path& shard, RecordKind kind,
                               std::string snapshot_id = {}) {
    WarcReader reader(shard, kind, std::move(snapshot_id));
    ReadResult out;
    reader.for_each([&](RawRecord&& r) { out.records.push_back(std::move(r)); });
    out.malformed = reader.malformed_count();
    out.manifest = reader.manifest();
    return out;
}

// ---------------------------------------------------------------------------
// WARC writing (fixtures, tooling)

inline std::string format_warc_record(std::string_view type, std::string_view record_id,
                                      std::string_view url, std::string_view payload,
                                      std::string_view content_type = {}) {
    std::string out = "WARC/1.0\r\n";
    out += "WARC-Type: " + std::string(type) + "\r\n";
    out += "WARC-Record-ID: " + std::string(record_id) + "\r\n";
    if (!url.empty()) out += "WARC-Target-URI: " + std::string(url) + "\r\n";
    if (!content_type.empty()) out += "Content-Type: " + std::string(content_type) + "\r\n";
    out += "Content-Length: " + std::to_string(payload.size()) + "\r\n\r\n";
    out += payload;
    out += "\r\n\r\n";
    return out;
}

inline std::string format_http_response(std::string_view html,
                                        std::string_view content_type = "text/html; charset=utf-8") {
    return "HTTP/1.1 200 OK\r\nContent-Type: " + std::string(content_type) + "\r\n\r\n" +
           std::string(html);
}

/// Writes records as one gzip member each (the Common Crawl layout) or as a
/// plain file.
inline void write_archive(const std::filesystem::path& path, std::span<const std::string> records,
                          bool gzip) {
    if (!gzip) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + path.string());
        for (const auto& r : records) out << r;
        if (!out) throw IoError("short write on " + path.string());
        return;
    }
    {
        std::ofstream truncate(path, std::ios::binary | std::ios::trunc);
        if (!truncate) throw IoError("cannot write " + path.string());
    }
    for (const auto& r : records) {
        gzFile f = gzopen(path.string().c_str(), "ab");
        if (f == nullptr) throw IoError("cannot write " + path.string());
        int n = gzwrite(f, r.data(), static_cast<unsigned>(r.size()));
        gzclose(f);
        if (n != static_cast<int>(r.size())) throw IoError("short write on " + path.string());
    }
}

// ---------------------------------------------------------------------------
// Document files

/// Writes one JSON document per line. Data goes to `<out>.partial` first and
/// is renamed on success; a failed write leaves the .partial file behind.
template <typename Range>
ShardManifest write_documents(const Range& docs, const std::filesystem::path& out_path) {
    std::filesystem::path partial = out_path.string() + ".partial";
    ShardManifest m;
    m.shard_id = shard_id_from_path(out_path);
    {
        std::ofstream out(partial, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + partial.string());
        for (const Document& d : docs) {
            std::string line = to_json_line(d);
            line.push_back('\n');
            out.write(line.data(), static_cast<std::streamsize>(line.size()));
            if (!out) throw IoError("write failed on " + partial.string());
            m.checksum = fnv1a64(line, m.checksum);
            m.input_bytes += line.size();
            ++m.record_count;
        }
        out.flush();
        if (!out) throw IoError("write failed on " + partial.string());
    }
    std::error_code ec;
    std::filesystem::rename(partial, out_path, ec);
    if (ec) throw IoError("cannot finalize " + out_path.string() + ": " + ec.message());
    write_manifest(out_path, m);
    return m;
}

inline std::vector<Document> read_documents(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<Document> docs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        try {
            docs.push_back(document_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return docs;
}

/// Checksum of a document file recomputed from disk, for manifest checks.
inline ShardManifest compute_file_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    ShardManifest m;
    m.shard_id = shard_id_from_path(path);
    std::string line;
    while (std::getline(in, line)) {
        line.push_back('\n');
        m.checksum = fnv1a64(line, m.checksum);
        m.input_bytes += line.size();
        ++m.record_count;
    }
    return m;
}

}  // namespace webcurate
