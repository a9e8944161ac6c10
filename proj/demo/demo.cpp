// Builds a six-page crawl shard in a temporary directory, runs the web and
// code pipelines over it and prints their per-stage tables.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "webcurate/webcurate.hpp"

namespace fs = std::filesystem;
using namespace webcurate;

namespace {

struct Page {
    std::string id;
    std::string url;
    std::string html;
};

std::string article(const std::string& title, const std::vector<std::string>& paragraphs) {
    std::string html = "<html><head><title>" + title + "</title></head><body><nav><a href=\"/\">Home</a></nav><article>"
                       "<h1>" + title + "</h1>";
    for (const auto& p : paragraphs) html += "<p>" + p + "</p>";
    return html + "</article><footer>All rights reserved.</footer></body></html>";
}

const std::string kHarbor =
    "The old harbor town has changed a great deal over the last century, and most of the change came with the "
    "railway. Before the line was built, the fishing fleet was the only employer of note and the market was held "
    "on the quay every morning. Once the trains arrived, visitors came from the capital in the summer months and "
    "the hotels along the front were built to house them. The fleet is smaller now, but the market still opens at "
    "dawn and the older families still keep their boats in the inner basin. Walking from the station to the "
    "lighthouse takes about twenty minutes, and the path passes the chapel, the lifeboat house and the museum.";

const std::string kOrchard =
    "Keeping an orchard healthy is mostly a matter of patience and of paying attention at the right time of year. "
    "Pruning is done in late winter while the trees are dormant, and the aim is to open the centre of each tree to "
    "light and air. In spring the blossom needs dry weather and insects, so a hive or two at the edge of the field "
    "helps a great deal. Through the summer the main work is thinning the young fruit so that the branches do not "
    "break under the load. The harvest starts with the early varieties in August and can run into November for the "
    "late keeping apples, which are stored in a cool shed and checked every week.";

}  // namespace

int main() {
    fs::path dir = fs::temp_directory_path() / "webcurate_demo";
    fs::remove_all(dir);
    fs::create_directories(dir / "in");

    std::vector<Page> pages = {
        {"<urn:uuid:demo-1>", "https://harbor.example/history", article("Harbor history", {kHarbor})},
        {"<urn:uuid:demo-2>", "https://orchard.example/care", article("Orchard care", {kOrchard})},
        // a republished copy with one word changed
        {"<urn:uuid:demo-3>", "https://mirror.example/harbor",
         article("Harbor history", {kHarbor.substr(0, kHarbor.size() - 1) + " too."})},
        {"<urn:uuid:demo-4>", "https://shop.example/cart", article("Cart", {"You have 3 items in card."})},
        {"<urn:uuid:demo-5>", "https://forum.example/q/1",
         "<html><body><h1>How do I reverse a list?</h1><p>The obvious approach fails for me.</p>"
         "<pre><code>1 xs = [1, 2, 3]\n2 xs.reverse()\n3 print(xs)</code></pre><p>Any ideas?</p></body></html>"},
        {"<urn:uuid:demo-6>", "https://forum.example/q/2",
         "<html><body><p>Hidden code never reaches the output.</p>"
         "<div style=\"display:none\"><pre><code>secret = 42;</code></pre></div></body></html>"},
    };
    std::vector<std::string> records;
    classifier::ScoreFile lang;
    for (const auto& p : pages) {
        records.push_back(format_warc_record("response", p.id, p.url, format_http_response(p.html),
                                             "application/http; msgtype=response"));
        lang[p.id] = 0.97;
    }
    write_archive(dir / "in" / "CC-DEMO-0.warc.gz", records, true);
    // the lang_id role takes a score file keyed by record id
    classifier::write_score_file(lang, dir / "lang.tsv");

    try {
        pipeline::PipelineConfig web;
        web.pipeline = pipeline::PipelineKind::web_warc;
        web.input_paths = {dir / "in"};
        web.output_dir = dir / "web";
        web.model_paths["lang_id"] = dir / "lang.tsv";
        auto r = pipeline::run(web);
        std::cout << "web_warc\n" << pipeline::format_stats_table(pipeline::aggregate_stats({r})) << "\n";

        pipeline::PipelineConfig code = web;
        code.pipeline = pipeline::PipelineKind::code;
        code.output_dir = dir / "code";
        code.model_paths.clear();
        auto rc = pipeline::run(code);
        std::cout << "code\n" << pipeline::format_stats_table(pipeline::aggregate_stats({rc})) << "\n";
        for (const auto& d : read_documents(dir / "code" / "CC-DEMO-0.jsonl")) {
            std::cout << d.url << "\n" << d.text << "\n\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "demo: " << e.what() << "\n";
        return 2;
    }
    std::cout << "outputs under " << dir.string() << "\n";
    return 0;
}
