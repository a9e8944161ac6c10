#pragma once

// Corpora on disk for whole-pipeline runs.

#include <map>
#include <string>
#include <vector>

#include "support.hpp"
#include "webcurate/classifier.hpp"
#include "webcurate/pipeline.hpp"

namespace pipefix {

namespace fs = std::filesystem;

inline std::string record_id(const std::string& shard, std::size_t i) {
    return "<urn:uuid:" + shard + "-" + std::to_string(i) + ">";
}

/// lang_id score file giving every listed id the same English probability.
inline fs::path write_lang_scores(const fs::path& path, const std::vector<std::string>& ids, double p = 0.9) {
    webcurate::classifier::ScoreFile s;
    for (const auto& id : ids) s[id] = p;
    webcurate::classifier::write_score_file(s, path);
    return path;
}

inline std::string article_html(const std::string& title, const std::string& body_text) {
    std::string html = "<html><head><title>" + title + "</title></head><body>"
                       "<nav><a href=\"/\">Home</a> <a href=\"/about\">About</a></nav><article><h1>" + title + "</h1>";
    for (auto line : webcurate::split_lines(body_text)) html += "<p>" + std::string(line) + "</p>";
    html += "</article><footer>Copyright footer text</footer></body></html>";
    return html;
}

struct Corpus {
    std::vector<fs::path> shards;
    std::vector<std::string> ids;
};

/// `docs` article pages spread round-robin over `shards` WARC shards, with
/// every tenth page a light edit of an earlier one so near-duplicate removal
/// has work to do.
inline Corpus write_warc_corpus(const fs::path& dir, std::size_t docs, std::size_t shards, std::uint64_t seed) {
    fs::create_directories(dir);
    testsupport::TextGen gen(seed);
    std::vector<std::vector<testsupport::Page>> pages(shards);
    std::vector<std::string> bodies;
    Corpus c;
    for (std::size_t i = 0; i < docs; ++i) {
        std::string body;
        if (i % 10 == 9 && !bodies.empty()) {
            body = bodies[gen.pick(bodies.size())];
            auto pos = body.find(' ', body.size() / 2);
            if (pos != std::string::npos) body.insert(pos, " quietly");
        } else {
            body = gen.document(120 + gen.pick(200));
        }
        bodies.push_back(body);
        std::size_t k = i % shards;
        std::string shard = "CC-TEST-" + std::to_string(k);
        std::string id = record_id(shard, i);
        pages[k].push_back({id, "https://site" + std::to_string(i % 37) + ".example/p/" + std::to_string(i),
                            article_html("Page " + std::to_string(i), body)});
        c.ids.push_back(id);
    }
    for (std::size_t k = 0; k < shards; ++k) {
        fs::path p = dir / ("CC-TEST-" + std::to_string(k) + ".warc.gz");
        testsupport::write_warc(p, pages[k]);
        c.shards.push_back(p);
    }
    return c;
}

/// Concatenated bytes of every output shard, in file name order.
inline std::string output_bytes(const fs::path& out_dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(out_dir)) {
        auto name = e.path().filename().string();
        if (e.is_regular_file() && (name.ends_with(".jsonl") || name.ends_with(".manifest"))) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::string all;
    for (const auto& f : files) all += f.filename().string() + "\n" + testsupport::read_file(f);
    return all;
}

/// Report with the wall time zeroed, for comparisons.
inline std::string report_bytes(webcurate::pipeline::RunReport r) {
    r.wall_time_s = 0;
    return webcurate::pipeline::to_json(r).dump();
}

}  // namespace pipefix
