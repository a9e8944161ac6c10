#pragma once

// Fixture builders shared by the test binaries.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "webcurate/corpus_io.hpp"

namespace testsupport {

namespace fs = std::filesystem;

/// Directory removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = fs::temp_directory_path() /
                ("webcurate_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

inline std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const fs::path& p, const std::string& s) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << s;
}

struct Page {
    std::string id;
    std::string url;
    std::string body;  // HTML for responses, text for conversions
};

inline std::string response_record(const Page& p) {
    return webcurate::format_warc_record("response", p.id, p.url, webcurate::format_http_response(p.body),
                                         "application/http; msgtype=response");
}

inline std::string conversion_record(const Page& p) {
    return webcurate::format_warc_record("conversion", p.id, p.url, p.body, "text/plain");
}

inline void write_warc(const fs::path& path, const std::vector<Page>& pages, bool gzip = true) {
    std::vector<std::string> recs;
    for (const auto& p : pages) recs.push_back(response_record(p));
    webcurate::write_archive(path, recs, gzip);
}

inline void write_wet(const fs::path& path, const std::vector<Page>& pages, bool gzip = true) {
    std::vector<std::string> recs;
    for (const auto& p : pages) recs.push_back(conversion_record(p));
    webcurate::write_archive(path, recs, gzip);
}

// ---------------------------------------------------------------------------
// Text generation

/// Deterministic pseudo-English: lowercase words from a fixed vocabulary with
/// stop words mixed in, sentences of 8-16 words ending in a period.
class TextGen {
public:
    explicit TextGen(std::uint64_t seed) : rng_(seed) {}

    std::string word() {
        static const std::vector<std::string> kVocab = {
            "river",   "garden",  "window",  "history", "market", "engine",  "planet",  "silver",
            "forest",  "letter",  "village", "morning", "number", "station", "picture", "summer",
            "bridge",  "kitchen", "science", "teacher", "harbor", "library", "machine", "country",
            "weather", "island",  "painter", "journey", "problem", "student", "council", "medicine",
            "signal",  "theory",  "holiday", "captain", "factory", "balance", "harvest", "orchard"};
        static const std::vector<std::string> kStop = {"the", "of", "and", "to", "with", "that", "have", "be"};
        if (pick(4) == 0) return kStop[pick(kStop.size())];
        return kVocab[pick(kVocab.size())] + suffix();
    }

    std::string sentence(std::size_t min_words = 8, std::size_t max_words = 16) {
        std::size_t n = min_words + pick(max_words - min_words + 1);
        std::string s;
        for (std::size_t i = 0; i < n; ++i) {
            std::string w = word();
            if (i == 0) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
            if (i) s += ' ';
            s += w;
        }
        return s + ".";
    }

    std::string paragraph(std::size_t sentences) {
        std::string p;
        for (std::size_t i = 0; i < sentences; ++i) {
            if (i) p += ' ';
            p += sentence();
        }
        return p;
    }

    /// Paragraphs separated by newlines, at least `min_words` words.
    std::string document(std::size_t min_words) {
        std::string doc;
        std::size_t words = 0;
        while (words < min_words) {
            std::string p = paragraph(3 + pick(3));
            words += webcurate::count_tokens(p);
            if (!doc.empty()) doc += '\n';
            doc += p;
        }
        return doc;
    }

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
    std::mt19937_64& rng() { return rng_; }

private:
    // widens the vocabulary so random documents rarely repeat 2-grams
    std::string suffix() {
        static const std::vector<std::string> kSuffix = {"", "s", "ed", "ing", "er", "ly", "al", "ist", "ish", "ward"};
        return kSuffix[pick(kSuffix.size())];
    }

    std::mt19937_64 rng_;
};

/// Two classes over disjoint vocabularies: positives draw from "pa0".."pa199",
/// negatives from "nb0".."nb199". 10-30 words per text.
struct LabeledText {
    std::string text;
    bool positive;
};

inline std::vector<LabeledText> separable_corpus(std::uint64_t seed, std::size_t per_class) {
    std::mt19937_64 rng(seed);
    auto text = [&](const char* prefix) {
        std::size_t n = 10 + rng() % 21;
        std::string s;
        for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + std::string(prefix) + std::to_string(rng() % 200);
        return s;
    };
    std::vector<LabeledText> out;
    for (std::size_t i = 0; i < per_class; ++i) {
        out.push_back({text("pa"), true});
        out.push_back({text("nb"), false});
    }
    return out;
}

}  // namespace testsupport
