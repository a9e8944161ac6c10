// webcurate command line: run / validate / stats / classifier train|score.
// Exit codes: 0 success, 1 configuration error, 2 runtime failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "webcurate/webcurate.hpp"

namespace fs = std::filesystem;
using namespace webcurate;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

struct ConfigFlags {
    std::string config_file;
    std::string pipeline;
    std::vector<std::string> inputs;
    std::string out;
    std::string dedup_scope;
    std::string minhash_scope;
    std::vector<std::string> thresholds;
    std::vector<std::string> models;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_file, "JSON config file; flags override its values");
        cmd->add_option("--pipeline", pipeline, "web_wet|web_warc|code|math_html|math_ascii|open_qa|mcq");
        cmd->add_option("--input", inputs, "input archive or directory (repeatable)");
        cmd->add_option("--out", out, "output directory");
        cmd->add_option("--dedup-scope", dedup_scope, "paragraph dedup scope: shard|snapshot|global");
        cmd->add_option("--minhash-scope", minhash_scope, "near-duplicate scope: shard|snapshot|global");
        cmd->add_option("--threshold", thresholds, "override a rule threshold, name=value (repeatable)");
        cmd->add_option("--model", models, "model or score file for a role, role=path (repeatable)");
        cmd->add_option("--seed", seed, "MinHash seed");
        cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    }

    pipeline::PipelineConfig build() const {
        pipeline::PipelineConfig c;
        if (!config_file.empty()) c = pipeline::load_config(config_file);
        try {
            if (!pipeline.empty()) c.pipeline = pipeline::parse_pipeline_kind(pipeline);
            if (!inputs.empty()) c.input_paths.assign(inputs.begin(), inputs.end());
            if (!out.empty()) c.output_dir = out;
            if (!dedup_scope.empty()) c.dedup_scope = extraction::parse_dedup_scope(dedup_scope);
            if (!minhash_scope.empty()) c.minhash_scope = extraction::parse_dedup_scope(minhash_scope);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        for (const auto& t : thresholds) pipeline::apply_threshold_override(c, t);
        for (const auto& m : models) pipeline::apply_model_override(c, m);
        if (seed) c.seed = *seed;
        if (workers) c.workers = *workers;
        return c;
    }
};

int cmd_run(const ConfigFlags& flags, std::optional<std::size_t> fail_after) {
    auto cfg = flags.build();
    if (auto diags = pipeline::validate(cfg); !diags.empty()) {
        for (const auto& d : diags) std::cerr << "config: " << d << "\n";
        return kExitConfig;
    }
    pipeline::RunOptions opt;
    opt.fail_after_shards = fail_after;
    auto report = pipeline::run(cfg, opt);
    std::cout << pipeline::format_stats_table(pipeline::aggregate_stats({report}));
    std::cout << "report: " << (cfg.output_dir / "run_report.json").string() << "\n";
    return 0;
}

int cmd_validate(const ConfigFlags& flags) {
    auto cfg = flags.build();
    auto diags = pipeline::validate(cfg);
    for (const auto& d : diags) std::cout << d << "\n";
    if (diags.empty()) std::cout << "ok\n";
    return diags.empty() ? 0 : kExitConfig;
}

int cmd_stats(const std::vector<std::string>& paths, const std::string& json_out) {
    if (paths.empty()) {
        std::cerr << "stats: no report files given\n";
        return kExitConfig;
    }
    std::vector<pipeline::RunReport> reports;
    for (const auto& p : paths) reports.push_back(pipeline::read_report(p));
    pipeline::StatsTable table;
    try {
        table = pipeline::aggregate_stats(reports);
    } catch (const std::invalid_argument& e) {
        std::cerr << "stats: " << e.what() << "\n";
        return kExitConfig;
    }
    std::cout << pipeline::format_stats_table(table);
    if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + json_out);
        out << pipeline::to_json(table).dump(2) << "\n";
    }
    return 0;
}

struct TrainFlags {
    std::string data;
    std::string out;
    int epochs = classifier::TrainOptions{}.epochs;
    double lr = classifier::TrainOptions{}.lr;
    std::uint64_t dim = classifier::TrainOptions{}.feature_dim;
    std::vector<std::uint32_t> orders = classifier::TrainOptions{}.ngram_orders;
    std::uint64_t seed = classifier::TrainOptions{}.shuffle_seed;
};

int cmd_train(const TrainFlags& f) {
    auto examples = classifier::load_labeled(f.data);
    classifier::TrainOptions opt;
    opt.epochs = f.epochs;
    opt.lr = f.lr;
    opt.feature_dim = f.dim;
    opt.ngram_orders = f.orders;
    opt.shuffle_seed = f.seed;
    classifier::TrainResult r;
    try {
        r = classifier::train(examples, opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "classifier train: " << e.what() << "\n";
        return kExitConfig;
    }
    classifier::save_model(r.model, f.out);
    for (std::size_t e = 0; e < r.epoch_loss.size(); ++e) {
        std::printf("epoch %zu loss %.6f\n", e + 1, r.epoch_loss[e]);
    }
    std::printf("trained on %zu examples -> %s\n", examples.size(), f.out.c_str());
    return 0;
}

// Scores documents (JSONL) or labeled lines, writing doc_id<TAB>score.
int cmd_score(const std::string& model_path, const std::string& input, const std::string& out) {
    auto model = classifier::load_model(model_path);
    classifier::ScoreFile scores;
    for (const auto& d : read_documents(input)) scores[d.doc_id] = classifier::score(model, d.text);
    if (out.empty()) {
        for (const auto& [id, s] : scores) std::printf("%s\t%.6f\n", id.c_str(), s);
    } else {
        classifier::write_score_file(scores, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"webcurate: curation pipelines for crawled web data"};
    app.require_subcommand(1);

    ConfigFlags run_flags;
    std::optional<std::size_t> fail_after;
    auto* run = app.add_subcommand("run", "run a pipeline");
    run_flags.attach(run);
    run->add_option("--fail-after-shards", fail_after)->group("");

    ConfigFlags validate_flags;
    auto* validate = app.add_subcommand("validate", "check a config without running it");
    validate_flags.attach(validate);

    std::vector<std::string> report_paths;
    std::string stats_json;
    auto* stats = app.add_subcommand("stats", "per-stage retention over run reports");
    stats->add_option("reports", report_paths, "run_report.json files");
    stats->add_option("--json", stats_json, "also write the table as JSON");

    auto* clf = app.add_subcommand("classifier", "train or apply an n-gram classifier");
    clf->require_subcommand(1);
    TrainFlags train_flags;
    auto* train = clf->add_subcommand("train", "train from __pos__/__neg__ labeled lines");
    train->add_option("--data", train_flags.data, "labeled data file")->required();
    train->add_option("--out", train_flags.out, "model file to write")->required();
    train->add_option("--epochs", train_flags.epochs)->check(CLI::PositiveNumber);
    train->add_option("--lr", train_flags.lr)->check(CLI::PositiveNumber);
    train->add_option("--dim", train_flags.dim, "feature buckets (power of two)");
    train->add_option("--orders", train_flags.orders, "word n-gram orders");
    train->add_option("--seed", train_flags.seed, "shuffle seed");

    std::string score_model, score_input, score_out;
    auto* score = clf->add_subcommand("score", "score documents, writing doc_id<TAB>score");
    score->add_option("--model", score_model)->required();
    score->add_option("--input", score_input, "documents (JSONL)")->required();
    score->add_option("--out", score_out, "score file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (run->parsed()) return cmd_run(run_flags, fail_after);
        if (validate->parsed()) return cmd_validate(validate_flags);
        if (stats->parsed()) return cmd_stats(report_paths, stats_json);
        if (train->parsed()) return cmd_train(train_flags);
        if (score->parsed()) return cmd_score(score_model, score_input, score_out);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitConfig;
}
