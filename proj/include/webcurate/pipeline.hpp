#pragma once

// Orchestration of the end-to-end pipelines over sharded inputs.
//
// A run has three phases:
//   1. per shard, in parallel: read plus every stage that needs only that
//      shard; the result is checkpointed under <out>/.work/ so an interrupted
//      run resumes from the shards it already finished;
//   2. the remaining stages, where cross-shard ones (paragraph dedup beyond
//      a shard, MinHash) run as barriers over all shards;
//   3. one output file per input shard, <out>/<shard_id>.jsonl, and
//      <out>/run_report.json.
// Shards are ordered by shard_id and every stage is deterministic, so the
// output does not depend on the number of workers.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "webcurate/classifier.hpp"
#include "webcurate/code_extractor.hpp"
#include "webcurate/corpus_io.hpp"
#include "webcurate/dedup.hpp"
#include "webcurate/extraction.hpp"
#include "webcurate/html_dom.hpp"
#include "webcurate/math_extractor.hpp"
#include "webcurate/qa_extractor.hpp"
#include "webcurate/quality_filters.hpp"

namespace webcurate::pipeline {

namespace fs = std::filesystem;
using extraction::DedupScope;

enum class PipelineKind { web_wet, web_warc, code, math_html, math_ascii, open_qa, mcq };

inline constexpr std::array<PipelineKind, 7> kAllPipelines{
    PipelineKind::web_wet,    PipelineKind::web_warc, PipelineKind::code, PipelineKind::math_html,
    PipelineKind::math_ascii, PipelineKind::open_qa,  PipelineKind::mcq};

inline std::string_view to_string(PipelineKind k) {
    switch (k) {
        case PipelineKind::web_wet: return "web_wet";
        case PipelineKind::web_warc: return "web_warc";
        case PipelineKind::code: return "code";
        case PipelineKind::math_html: return "math_html";
        case PipelineKind::math_ascii: return "math_ascii";
        case PipelineKind::open_qa: return "open_qa";
        case PipelineKind::mcq: return "mcq";
    }
    return "web_wet";
}

inline PipelineKind parse_pipeline_kind(std::string_view s) {
    for (auto k : kAllPipelines) {
        if (to_string(k) == s) return k;
    }
    throw ConfigError("unknown pipeline: " + std::string(s));
}

/// Plain-text inputs (WET conversions) versus HTML responses.
inline RecordKind input_kind(PipelineKind k) {
    switch (k) {
        case PipelineKind::web_wet:
        case PipelineKind::open_qa:
        case PipelineKind::mcq: return RecordKind::conversion;
        default: return RecordKind::response;
    }
}

inline constexpr std::array<std::string_view, 4> kModelRoles{"lang_id", "quality", "ascii_math", "open_qa"};
// code_lang.<Language> roles carry one-vs-rest models for code metadata
inline constexpr std::string_view kCodeLangRolePrefix = "code_lang.";

struct PipelineConfig {
    PipelineKind pipeline = PipelineKind::web_wet;
    std::vector<fs::path> input_paths;
    fs::path output_dir;
    DedupScope dedup_scope = DedupScope::snapshot;
    DedupScope minhash_scope = DedupScope::global;
    filters::RuleThresholds thresholds;
    std::map<std::string, fs::path> model_paths;
    std::uint64_t seed = dedup::kDefaultSeed;
    unsigned workers = 1;
};

// ---------------------------------------------------------------------------
// Config files

inline nlohmann::json thresholds_to_json(const filters::RuleThresholds& in) {
    filters::RuleThresholds t = in;
    nlohmann::json j = nlohmann::json::object();
    for (auto& [name, p] : filters::threshold_fields(t)) j[name] = *p;
    return j;
}

inline nlohmann::json to_json(const PipelineConfig& c) {
    nlohmann::json inputs = nlohmann::json::array();
    for (const auto& p : c.input_paths) inputs.push_back(p.string());
    nlohmann::json models = nlohmann::json::object();
    for (const auto& [role, p] : c.model_paths) models[role] = p.string();
    return {{"pipeline", to_string(c.pipeline)},
            {"input_paths", inputs},
            {"output_dir", c.output_dir.string()},
            {"dedup_scope", extraction::to_string(c.dedup_scope)},
            {"minhash_scope", extraction::to_string(c.minhash_scope)},
            {"thresholds", thresholds_to_json(c.thresholds)},
            {"model_paths", models},
            {"seed", c.seed},
            {"workers", c.workers}};
}

/// Overrides one threshold from "name=value".
inline void apply_threshold_override(PipelineConfig& c, std::string_view assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected name=value, got " + std::string(assignment));
    std::string name(trim(assignment.substr(0, eq)));
    std::string value(trim(assignment.substr(eq + 1)));
    double v = 0.0;
    try {
        std::size_t used = 0;
        v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
        throw ConfigError("threshold " + name + ": not a number: " + value);
    }
    if (!filters::set_threshold(c.thresholds, name, v)) throw ConfigError("unknown threshold: " + name);
}

inline void apply_model_override(PipelineConfig& c, std::string_view assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected role=path, got " + std::string(assignment));
    c.model_paths[std::string(trim(assignment.substr(0, eq)))] = fs::path(std::string(trim(assignment.substr(eq + 1))));
}

inline PipelineConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    PipelineConfig c;
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "pipeline") {
                c.pipeline = parse_pipeline_kind(v.get<std::string>());
            } else if (key == "input_paths") {
                for (const auto& p : v) c.input_paths.emplace_back(p.get<std::string>());
            } else if (key == "output_dir") {
                c.output_dir = v.get<std::string>();
            } else if (key == "dedup_scope") {
                c.dedup_scope = extraction::parse_dedup_scope(v.get<std::string>());
            } else if (key == "minhash_scope") {
                c.minhash_scope = extraction::parse_dedup_scope(v.get<std::string>());
            } else if (key == "thresholds") {
                for (const auto& [name, value] : v.items()) {
                    if (!filters::set_threshold(c.thresholds, name, value.get<double>())) {
                        throw ConfigError("unknown threshold: " + name);
                    }
                }
            } else if (key == "model_paths") {
                for (const auto& [role, p] : v.items()) c.model_paths[role] = p.get<std::string>();
            } else if (key == "seed") {
                c.seed = v.get<std::uint64_t>();
            } else if (key == "workers") {
                auto w = v.get<std::int64_t>();
                if (w < 1) throw ConfigError("workers must be positive");
                c.workers = static_cast<unsigned>(w);
            } else {
                throw ConfigError("unknown config key: " + key);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return c;
}

inline PipelineConfig load_config(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config " + path.string());
    try {
        return config_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

/// Digest of everything that affects output bytes; worker count and output
/// location are left out.
inline std::uint64_t config_fingerprint(const PipelineConfig& c) {
    nlohmann::json j = to_json(c);
    j.erase("workers");
    j.erase("output_dir");
    return fnv1a64(j.dump());
}

// ---------------------------------------------------------------------------
// Inputs and models

inline bool is_archive_name(const fs::path& p) {
    std::string name = p.filename().string();
    for (std::string_view s : {".warc", ".warc.gz", ".wet", ".wet.gz", ".gz"}) {
        if (name.ends_with(s)) return true;
    }
    return false;
}

/// Input files with directories expanded (archives only, sorted).
inline std::vector<fs::path> expand_inputs(const std::vector<fs::path>& inputs) {
    std::vector<fs::path> out;
    for (const auto& p : inputs) {
        if (fs::is_directory(p)) {
            std::vector<fs::path> found;
            for (const auto& e : fs::directory_iterator(p)) {
                if (e.is_regular_file() && is_archive_name(e.path())) found.push_back(e.path());
            }
            std::sort(found.begin(), found.end());
            out.insert(out.end(), found.begin(), found.end());
        } else {
            out.push_back(p);
        }
    }
    return out;
}

inline bool has_model_magic(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    char magic[4] = {};
    in.read(magic, 4);
    return in.gcount() == 4 && std::equal(magic, magic + 4, classifier::kModelMagic);
}

/// A model file or a precomputed score table, whichever the path holds.
struct LoadedScorer {
    std::optional<classifier::NgramModel> model;
    std::optional<classifier::ScoreFile> scores;

    classifier::ScoreSource source() const {
        return {model ? &*model : nullptr, scores ? &*scores : nullptr};
    }
};

inline LoadedScorer load_scorer(const fs::path& p) {
    LoadedScorer s;
    if (has_model_magic(p)) s.model = classifier::load_model(p);
    else s.scores = classifier::load_score_file(p);
    return s;
}

inline bool is_known_role(std::string_view role) {
    return std::find(kModelRoles.begin(), kModelRoles.end(), role) != kModelRoles.end() ||
           (role.starts_with(kCodeLangRolePrefix) && role.size() > kCodeLangRolePrefix.size());
}

/// Roles a pipeline cannot run without.
inline std::vector<std::string> required_roles(PipelineKind k) {
    switch (k) {
        case PipelineKind::web_wet:
        case PipelineKind::web_warc: return {"lang_id"};
        case PipelineKind::math_ascii: return {"ascii_math"};
        default: return {};
    }
}

// ---------------------------------------------------------------------------
// Validation

/// Problems that would stop a run; empty when the config is runnable.
inline std::vector<std::string> validate(const PipelineConfig& c) {
    std::vector<std::string> out;
    if (c.input_paths.empty()) out.push_back("input_paths is empty");
    for (const auto& p : c.input_paths) {
        if (!fs::exists(p)) out.push_back("input path does not exist: " + p.string());
    }
    if (out.empty()) {
        auto files = expand_inputs(c.input_paths);
        if (files.empty()) out.push_back("no input archives found");
        std::set<std::string> ids;
        for (const auto& f : files) {
            if (!ids.insert(shard_id_from_path(f)).second) out.push_back("duplicate shard id: " + shard_id_from_path(f));
        }
    }
    if (c.output_dir.empty()) out.push_back("output_dir is empty");
    if (c.workers < 1) out.push_back("workers must be positive");
    for (auto& d : filters::validate_thresholds(c.thresholds)) out.push_back(std::move(d));

    for (const auto& role : required_roles(c.pipeline)) {
        if (c.model_paths.count(role)) continue;
        if (role == "ascii_math") out.push_back("model required for ascii path");
        else out.push_back("model required: " + role);
    }
    for (const auto& [role, p] : c.model_paths) {
        if (!is_known_role(role)) {
            out.push_back("unknown model role: " + role);
            continue;
        }
        if (!fs::exists(p)) {
            out.push_back("model file for " + role + " does not exist: " + p.string());
            continue;
        }
        try {
            if (has_model_magic(p)) classifier::read_model_header(p);
            else if (role.starts_with(kCodeLangRolePrefix)) out.push_back("model for " + role + " must be a model file");
            else classifier::load_score_file(p);
        } catch (const std::exception& e) {
            out.push_back("model for " + role + ": " + e.what());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports

struct RunReport {
    std::string pipeline;
    std::vector<StageStats> per_stage;
    double wall_time_s = 0.0;
    std::uint64_t config_fingerprint = 0;
    std::uint64_t shards = 0;
};

inline nlohmann::json to_json(const RunReport& r) {
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& s : r.per_stage) stages.push_back(webcurate::to_json(s));
    return {{"pipeline", r.pipeline},
            {"config_fingerprint", hex64(r.config_fingerprint)},
            {"shards", r.shards},
            {"wall_time_s", r.wall_time_s},
            {"per_stage", stages}};
}

inline RunReport report_from_json(const nlohmann::json& j) {
    RunReport r;
    try {
        r.pipeline = j.at("pipeline").get<std::string>();
        r.config_fingerprint = std::stoull(j.at("config_fingerprint").get<std::string>(), nullptr, 16);
        r.shards = j.value("shards", std::uint64_t{0});
        r.wall_time_s = j.at("wall_time_s").get<double>();
        for (const auto& s : j.at("per_stage")) r.per_stage.push_back(stage_stats_from_json(s));
    } catch (const std::exception& e) {
        throw FormatError(std::string("run report: ") + e.what());
    }
    return r;
}

inline RunReport read_report(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot open " + p.string());
    try {
        return report_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(p.string() + ": " + e.what());
    }
}

namespace detail {

inline void write_text_atomic(const fs::path& p, const std::string& text) {
    fs::path partial = p.string() + ".partial";
    {
        std::ofstream out(partial, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + partial.string());
        out << text;
        if (!out) throw IoError("short write on " + partial.string());
    }
    std::error_code ec;
    fs::rename(partial, p, ec);
    if (ec) throw IoError("cannot finalize " + p.string() + ": " + ec.message());
}

}  // namespace detail

inline void write_report(const RunReport& r, const fs::path& p) {
    detail::write_text_atomic(p, to_json(r).dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Stage plumbing

namespace detail {

class StageCounter {
public:
    explicit StageCounter(std::string name) { s_.stage_name = std::move(name); }

    void in(std::uint64_t tokens) {
        ++s_.docs_in;
        s_.tokens_in += tokens;
    }
    void out(std::uint64_t tokens) {
        ++s_.docs_out;
        s_.tokens_out += tokens;
    }
    void hit(const std::string& rule) { ++s_.rule_hit_counts[rule]; }
    StageStats take() { return std::move(s_); }

private:
    StageStats s_;
};

struct ShardState {
    fs::path input;
    std::string shard_id;
    std::vector<Document> docs;
    std::vector<StageStats> stats;  // per stage, this shard only
};

inline std::uint64_t record_tokens(const RawRecord& r) {
    return r.record_kind == RecordKind::response ? extraction::html_token_count(r.payload) : count_tokens(r.payload);
}

/// Per-document stage: `f` returns the surviving document or nullopt after
/// recording a rule hit.
template <typename F>
void doc_stage(ShardState& s, std::string name, F&& f) {
    StageCounter c(name);
    std::vector<Document> kept;
    kept.reserve(s.docs.size());
    for (auto& d : s.docs) {
        c.in(d.word_count);
        if (auto r = f(std::move(d), c)) {
            c.out(r->word_count);
            r->stage_trace.push_back(name);
            kept.push_back(std::move(*r));
        }
    }
    s.docs = std::move(kept);
    s.stats.push_back(c.take());
}

/// Per-record stage on HTML responses.
template <typename F>
std::vector<RawRecord> record_filter(ShardState& s, std::vector<RawRecord> recs, std::string name, F&& keep) {
    StageCounter c(std::move(name));
    std::vector<RawRecord> out;
    for (auto& r : recs) {
        std::uint64_t t = record_tokens(r);
        c.in(t);
        if (keep(r, c)) {
            c.out(t);
            out.push_back(std::move(r));
        }
    }
    s.stats.push_back(c.take());
    return out;
}

/// Record -> document stage.
template <typename F>
void extract_stage(ShardState& s, std::vector<RawRecord> recs, std::string name, F&& f) {
    StageCounter c(name);
    for (auto& r : recs) {
        c.in(record_tokens(r));
        if (auto d = f(r, c)) {
            c.out(d->word_count);
            d->stage_trace.push_back(name);
            s.docs.push_back(std::move(*d));
        }
    }
    s.stats.push_back(c.take());
}

/// Runs f(i) for i in [0, n) on up to `workers` threads; the exception of
/// the lowest failing index is rethrown. `stop` ends the hand-out of new
/// indices.
template <typename F>
void parallel_for(std::size_t n, unsigned workers, F&& f, const std::atomic<bool>* stop = nullptr) {
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        while (true) {
            if (stop && stop->load()) return;
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
    if (threads == 1) {
        loop();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(loop);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace detail

/// Loaded models and everything a shard worker reads.
struct RunContext {
    PipelineConfig config;
    std::map<std::string, LoadedScorer> scorers;
    code::LanguageModels code_languages;
    code::CodeDocConfig code_config;
    code::CodePatterns code_patterns;
    math::MathOptions math_options;
    qa::QaKeywordSets qa_keywords;

    const LoadedScorer* scorer(const std::string& role) const {
        auto it = scorers.find(role);
        return it == scorers.end() ? nullptr : &it->second;
    }
};

inline RunContext make_context(const PipelineConfig& c) {
    RunContext ctx;
    ctx.config = c;
    for (const auto& [role, p] : c.model_paths) {
        if (role.starts_with(kCodeLangRolePrefix)) {
            if (c.pipeline == PipelineKind::code) {
                ctx.code_languages[role.substr(kCodeLangRolePrefix.size())] = classifier::load_model(p);
            }
        } else {
            ctx.scorers[role] = load_scorer(p);
        }
    }
    return ctx;
}

namespace detail {

inline std::optional<filters::LangScores> lang_scores(const RunContext& ctx, const Document& d) {
    const auto* s = ctx.scorer("lang_id");
    if (!s) return std::nullopt;
    auto p = s->source().score_of(d);
    if (!p) return std::nullopt;
    return filters::LangScores{{"en", *p}, {"other", 1.0 - *p}};
}

inline void language_stage(const RunContext& ctx, ShardState& s) {
    doc_stage(s, "language", [&](Document d, StageCounter& c) -> std::optional<Document> {
        auto v = filters::language_filter(lang_scores(ctx, d), ctx.config.thresholds);
        if (v.passed) return d;
        c.hit(v.rule_id);
        return std::nullopt;
    });
}

inline void score_stage(const RunContext& ctx, ShardState& s, const std::string& role, const std::string& name) {
    const auto* scorer = ctx.scorer(role);
    if (!scorer) return;
    auto src = scorer->source();
    doc_stage(s, name, [&](Document d, StageCounter& c) -> std::optional<Document> {
        auto p = src.score_of(d);
        if (!p) {
            c.hit("score_missing");
            return std::nullopt;
        }
        if (!(*p > classifier::kScoreThreshold)) {
            c.hit("score_below_threshold");
            return std::nullopt;
        }
        return d;
    });
}

inline std::optional<std::string> main_content_of(const RawRecord& r, const extraction::MainContentConfig& cfg = {}) {
    auto tree = html::strip_hidden(html::parse_html(r.payload, r.target_url));
    return extraction::extract_main_content(tree, cfg);
}

/// Read plus every stage that only needs this shard.
inline ShardState local_stages(const RunContext& ctx, const fs::path& input) {
    const auto& cfg = ctx.config;
    ShardState s;
    s.input = input;
    s.shard_id = shard_id_from_path(input);

    const RecordKind kind = input_kind(cfg.pipeline);
    auto rr = read_records(input, kind);
    StageCounter read("read");
    for (std::uint64_t i = 0; i < rr.malformed; ++i) {
        read.in(0);
        read.hit("malformed");
    }
    std::vector<RawRecord> records;
    for (auto& r : rr.records) {
        if (kind == RecordKind::conversion) {
            Document d = document_from_record(r, normalize_plain_text(r.payload));
            read.in(d.word_count);
            read.out(d.word_count);
            d.stage_trace.push_back("read");
            s.docs.push_back(std::move(d));
        } else {
            std::uint64_t t = record_tokens(r);
            read.in(t);
            read.out(t);
            records.push_back(std::move(r));
        }
    }
    s.stats.push_back(read.take());

    switch (cfg.pipeline) {
        case PipelineKind::web_wet:
            break;  // everything after read may cross shards
        case PipelineKind::web_warc:
            extract_stage(s, std::move(records), "main_content", [&](const RawRecord& r, StageCounter& c) {
                auto text = main_content_of(r);
                if (!text) c.hit("no_main_content");
                return text ? std::optional<Document>(document_from_record(r, std::move(*text))) : std::nullopt;
            });
            language_stage(ctx, s);
            doc_stage(s, "quality_rules", [&](Document d, StageCounter& c) -> std::optional<Document> {
                auto r = filters::run_quality_rules(d, cfg.thresholds);
                for (const auto& v : r.report.verdicts) {
                    if (!v.passed) c.hit(v.rule_id);
                }
                if (r.report.decision == filters::Decision::discard) return std::nullopt;
                return std::move(r.doc);
            });
            score_stage(ctx, s, "quality", "quality_model");
            break;
        case PipelineKind::code: {
            auto kept = record_filter(s, std::move(records), "code_prefilter", [&](const RawRecord& r, StageCounter& c) {
                bool ok = code::code_prefilter(r, ctx.code_config);
                if (!ok) c.hit("code_prefilter");
                return ok;
            });
            const code::LanguageModels* langs = ctx.code_languages.empty() ? nullptr : &ctx.code_languages;
            extract_stage(s, std::move(kept), "code_extract", [&](const RawRecord& r, StageCounter& c) {
                auto d = code::extract_code_document(r, ctx.code_config, langs, &ctx.code_patterns);
                if (!d) c.hit("no_code_root");
                return d;
            });
            break;
        }
        case PipelineKind::math_html: {
            auto kept = record_filter(s, std::move(records), "math_prefilter", [&](const RawRecord& r, StageCounter& c) {
                bool ok = math::html_math_prefilter(r, ctx.math_options.keywords);
                if (!ok) c.hit("math_prefilter");
                return ok;
            });
            extract_stage(s, std::move(kept), "math_extract", [&](const RawRecord& r, StageCounter& c) {
                std::string why;
                auto d = math::extract_math_document(r, math::MathPath::html, nullptr, ctx.math_options, &why);
                if (!d) c.hit(why);
                return d;
            });
            break;
        }
        case PipelineKind::math_ascii: {
            extract_stage(s, std::move(records), "main_content", [&](const RawRecord& r, StageCounter& c) {
                auto text = main_content_of(r, ctx.math_options.main_content);
                if (!text) c.hit("no_main_content");
                return text ? std::optional<Document>(document_from_record(r, std::move(*text), DomainTag::math))
                            : std::nullopt;
            });
            doc_stage(s, "ascii_keyword_gate", [&](Document d, StageCounter& c) -> std::optional<Document> {
                if (math::count_math_keywords(d.text, ctx.math_options.keywords) >= ctx.math_options.keywords.ascii_min_hits) {
                    return d;
                }
                c.hit("ascii_keyword_gate");
                return std::nullopt;
            });
            score_stage(ctx, s, "ascii_math", "ascii_model");
            break;
        }
        case PipelineKind::open_qa:
        case PipelineKind::mcq:
            doc_stage(s, "openqa_rules", [&](Document d, StageCounter& c) -> std::optional<Document> {
                if (!qa::openqa_rule_filter(d, ctx.qa_keywords)) {
                    c.hit("openqa_keywords");
                    return std::nullopt;
                }
                d.domain_tag = DomainTag::open_qa;
                return d;
            });
            score_stage(ctx, s, "open_qa", "openqa_model");
            if (cfg.pipeline == PipelineKind::mcq) {
                doc_stage(s, "mcq_extract", [&](Document d, StageCounter& c) -> std::optional<Document> {
                    if (!qa::mcq_page_filter(d.text, ctx.qa_keywords)) {
                        c.hit("mcq_page_filter");
                        return std::nullopt;
                    }
                    auto m = qa::extract_mcq_document(std::move(d), ctx.qa_keywords);
                    if (!m) c.hit("no_mcq_item");
                    return m;
                });
            }
            break;
    }
    return s;
}

// ---- checkpoints

inline fs::path work_dir(const PipelineConfig& c) { return c.output_dir / ".work"; }

inline void write_checkpoint(const PipelineConfig& c, std::uint64_t fingerprint, const ShardState& s) {
    fs::path docs = work_dir(c) / (s.shard_id + ".jsonl");
    write_documents(s.docs, docs);
    nlohmann::json stats = nlohmann::json::array();
    for (const auto& x : s.stats) stats.push_back(webcurate::to_json(x));
    nlohmann::json meta{{"fingerprint", hex64(fingerprint)}, {"input", s.input.string()}, {"stats", stats}};
    write_text_atomic(work_dir(c) / (s.shard_id + ".stats.json"), meta.dump() + "\n");
}

inline std::optional<ShardState> read_checkpoint(const PipelineConfig& c, std::uint64_t fingerprint,
                                                 const fs::path& input) {
    ShardState s;
    s.input = input;
    s.shard_id = shard_id_from_path(input);
    fs::path docs = work_dir(c) / (s.shard_id + ".jsonl");
    fs::path meta_path = work_dir(c) / (s.shard_id + ".stats.json");
    if (!fs::exists(docs) || !fs::exists(meta_path)) return std::nullopt;
    try {
        std::ifstream in(meta_path, std::ios::binary);
        auto meta = nlohmann::json::parse(in);
        if (meta.at("fingerprint").get<std::string>() != hex64(fingerprint)) return std::nullopt;
        if (meta.at("input").get<std::string>() != input.string()) return std::nullopt;
        auto manifest = read_manifest(docs);
        if (!manifest || !(*manifest == compute_file_manifest(docs))) return std::nullopt;
        for (const auto& x : meta.at("stats")) s.stats.push_back(stage_stats_from_json(x));
        s.docs = read_documents(docs);
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable checkpoint: redo the shard
    }
    return s;
}

// ---- barrier stages

/// Applies a whole-corpus transform to the documents of every shard and
/// records one stage; `f` gets the flattened documents and returns a keep
/// mask (and may edit documents in place).
template <typename F>
StageStats barrier_stage(std::vector<ShardState>& shards, const std::string& name, F&& f) {
    std::vector<Document> all;
    std::vector<std::size_t> owner;
    for (std::size_t k = 0; k < shards.size(); ++k) {
        for (auto& d : shards[k].docs) {
            all.push_back(std::move(d));
            owner.push_back(k);
        }
        shards[k].docs.clear();
    }
    StageCounter c(name);
    for (const auto& d : all) c.in(d.word_count);
    std::vector<bool> keep = f(all, c);
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (!keep[i]) continue;
        c.out(all[i].word_count);
        all[i].stage_trace.push_back(name);
        shards[owner[i]].docs.push_back(std::move(all[i]));
    }
    return c.take();
}

inline std::vector<bool> paragraph_dedup_mask(std::vector<Document>& all, DedupScope scope, StageCounter& c) {
    auto r = extraction::paragraph_dedup(all, scope);
    // paragraph_dedup keeps input order and drops emptied documents
    std::vector<bool> keep(all.size(), false);
    std::size_t j = 0;
    for (std::size_t i = 0; i < all.size() && j < r.docs.size(); ++i) {
        if (all[i].doc_id == r.docs[j].doc_id && all[i].shard_id == r.docs[j].shard_id &&
            all[i].offset == r.docs[j].offset) {
            all[i] = std::move(r.docs[j++]);
            keep[i] = true;
        }
    }
    for (std::uint64_t i = 0; i < r.paragraphs_removed; ++i) c.hit("paragraph_removed");
    for (std::uint64_t i = 0; i < r.docs_dropped; ++i) c.hit("all_paragraphs_removed");
    return keep;
}

inline std::vector<bool> minhash_mask(const std::vector<Document>& all,
                                      const PipelineConfig& cfg, StageCounter& c,
                                      std::vector<dedup::DupCluster>& clusters) {
    // group by scope unit, keeping flattened order inside each group
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < all.size(); ++i) groups[extraction::scope_unit(all[i], cfg.minhash_scope)].push_back(i);
    std::vector<bool> keep(all.size(), false);
    for (auto& [unit, members] : groups) {
        std::vector<Document> docs;
        docs.reserve(members.size());
        for (std::size_t i : members) docs.push_back(all[i]);
        auto r = dedup::deduplicate(std::move(docs), cfg.seed, cfg.workers);
        // kept documents are a subsequence of the group, in order
        std::size_t j = 0;
        for (std::size_t i : members) {
            if (j < r.kept.size() && r.kept[j] == all[i]) {
                keep[i] = true;
                ++j;
            }
        }
        for (std::uint64_t k = 0; k < r.removed; ++k) c.hit("near_duplicate");
        for (auto& cl : r.clusters) clusters.push_back(std::move(cl));
    }
    return keep;
}

}  // namespace detail

struct RunOptions {
    // Stops with an error once this many shards have been checkpointed;
    // used to exercise resume.
    std::optional<std::size_t> fail_after_shards;
};

class RunAborted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs a validated config. Throws ConfigError when validation fails and
/// IoError / FormatError / RunAborted on runtime failure; shards finished
/// before a failure stay checkpointed.
inline RunReport run(const PipelineConfig& cfg, const RunOptions& opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    if (auto diags = validate(cfg); !diags.empty()) throw ConfigError(diags.front());
    const RunContext ctx = make_context(cfg);
    const std::uint64_t fp = config_fingerprint(cfg);

    auto inputs = expand_inputs(cfg.input_paths);
    std::sort(inputs.begin(), inputs.end(), [](const fs::path& a, const fs::path& b) {
        return shard_id_from_path(a) < shard_id_from_path(b);
    });
    fs::create_directories(detail::work_dir(cfg));

    // phase 1
    std::vector<detail::ShardState> shards(inputs.size());
    std::atomic<bool> stop{false};
    std::atomic<std::size_t> done{0};
    detail::parallel_for(
        inputs.size(), cfg.workers,
        [&](std::size_t i) {
            if (auto cp = detail::read_checkpoint(cfg, fp, inputs[i])) {
                shards[i] = std::move(*cp);
                return;
            }
            shards[i] = detail::local_stages(ctx, inputs[i]);
            detail::write_checkpoint(cfg, fp, shards[i]);
            if (opt.fail_after_shards && done.fetch_add(1) + 1 >= *opt.fail_after_shards) stop = true;
        },
        &stop);
    if (stop) throw RunAborted("run stopped after " + std::to_string(done.load()) + " shard(s)");

    RunReport report;
    report.pipeline = std::string(to_string(cfg.pipeline));
    report.config_fingerprint = fp;
    report.shards = shards.size();
    if (!shards.empty()) {
        for (std::size_t st = 0; st < shards.front().stats.size(); ++st) {
            std::vector<StageStats> parts;
            for (const auto& s : shards) parts.push_back(s.stats.at(st));
            report.per_stage.push_back(merge_stats(parts));
        }
    }

    auto per_shard = [&](auto&& stage) {
        detail::parallel_for(shards.size(), cfg.workers, [&](std::size_t i) {
            shards[i].stats.clear();
            stage(shards[i]);
        });
        if (shards.empty() || shards.front().stats.empty()) return;
        std::vector<StageStats> parts;
        for (const auto& s : shards) parts.push_back(s.stats.front());
        report.per_stage.push_back(merge_stats(parts));
    };

    // phase 2
    std::vector<dedup::DupCluster> clusters;
    const bool web = cfg.pipeline == PipelineKind::web_wet || cfg.pipeline == PipelineKind::web_warc;
    if (cfg.pipeline == PipelineKind::web_wet) {
        report.per_stage.push_back(detail::barrier_stage(shards, "paragraph_dedup", [&](auto& all, auto& c) {
            return detail::paragraph_dedup_mask(all, cfg.dedup_scope, c);
        }));
        per_shard([&](detail::ShardState& s) { detail::language_stage(ctx, s); });
        per_shard([&](detail::ShardState& s) {
            detail::doc_stage(s, "length", [&](Document d, detail::StageCounter& c) -> std::optional<Document> {
                auto v = filters::wet_length_filter(d, cfg.thresholds);
                if (v.passed) return d;
                c.hit(v.rule_id);
                return std::nullopt;
            });
        });
        if (ctx.scorer("quality")) {
            per_shard([&](detail::ShardState& s) { detail::score_stage(ctx, s, "quality", "quality_model"); });
        }
    }
    if (web) {
        report.per_stage.push_back(detail::barrier_stage(shards, "minhash_dedup", [&](auto& all, auto& c) {
            return detail::minhash_mask(all, cfg, c, clusters);
        }));
    }

    // phase 3
    detail::StageCounter write("write");
    for (const auto& s : shards) {
        for (const auto& d : s.docs) {
            write.in(d.word_count);
            write.out(d.word_count);
        }
    }
    detail::parallel_for(shards.size(), cfg.workers, [&](std::size_t i) {
        write_documents(shards[i].docs, cfg.output_dir / (shards[i].shard_id + ".jsonl"));
    });
    report.per_stage.push_back(write.take());
    if (web) dedup::write_cluster_report(clusters, cfg.output_dir / "dedup_clusters.jsonl");

    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_report(report, cfg.output_dir / "run_report.json");
    return report;
}

// ---------------------------------------------------------------------------
// Aggregated statistics

struct StatsRow {
    StageStats stats;
    double doc_retention = 0.0;    // docs_out / docs_in of this stage
    double token_retention = 0.0;  // tokens_out / tokens_in of this stage
    double cumulative_token_retention = 0.0;  // tokens_out / tokens_in of the first stage
};

struct StatsTable {
    std::string pipeline;
    std::vector<StatsRow> rows;
    double total_doc_retention = 0.0;
    double total_token_retention = 0.0;
    bool conserved = true;  // each stage's outputs are the next stage's inputs
};

/// Sums reports of one pipeline stage by stage. Throws std::invalid_argument
/// on an empty list, mixed pipelines or differing stage lists.
inline StatsTable aggregate_stats(const std::vector<RunReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("no reports given");
    StatsTable t;
    t.pipeline = reports.front().pipeline;
    const auto& first = reports.front().per_stage;
    for (const auto& r : reports) {
        if (r.pipeline != t.pipeline) {
            throw std::invalid_argument("reports mix pipelines: " + t.pipeline + " and " + r.pipeline);
        }
        bool same = r.per_stage.size() == first.size();
        for (std::size_t i = 0; same && i < first.size(); ++i) same = r.per_stage[i].stage_name == first[i].stage_name;
        if (!same) throw std::invalid_argument("reports have different stage lists");
    }
    auto frac = [](std::uint64_t num, std::uint64_t den) {
        return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
    };
    for (std::size_t i = 0; i < first.size(); ++i) {
        std::vector<StageStats> parts;
        for (const auto& r : reports) parts.push_back(r.per_stage[i]);
        StatsRow row;
        row.stats = merge_stats(parts);
        row.doc_retention = frac(row.stats.docs_out, row.stats.docs_in);
        row.token_retention = frac(row.stats.tokens_out, row.stats.tokens_in);
        t.rows.push_back(std::move(row));
    }
    if (!t.rows.empty()) {
        const auto& head = t.rows.front().stats;
        for (auto& row : t.rows) row.cumulative_token_retention = frac(row.stats.tokens_out, head.tokens_in);
        t.total_doc_retention = frac(t.rows.back().stats.docs_out, head.docs_in);
        t.total_token_retention = frac(t.rows.back().stats.tokens_out, head.tokens_in);
    }
    for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
        const auto& a = t.rows[i].stats;
        const auto& b = t.rows[i + 1].stats;
        if (a.docs_out != b.docs_in || a.tokens_out != b.tokens_in) t.conserved = false;
    }
    return t;
}

inline std::string format_percent(double f) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", f * 100.0);
    return buf;
}

inline std::string format_stats_table(const StatsTable& t) {
    std::vector<std::array<std::string, 8>> cells;
    cells.push_back({"stage", "docs_in", "docs_out", "docs_kept", "tokens_in", "tokens_out", "tokens_kept",
                     "tokens_cumulative"});
    for (const auto& r : t.rows) {
        const auto& s = r.stats;
        cells.push_back({s.stage_name, std::to_string(s.docs_in), std::to_string(s.docs_out),
                         format_percent(r.doc_retention), std::to_string(s.tokens_in), std::to_string(s.tokens_out),
                         format_percent(r.token_retention), format_percent(r.cumulative_token_retention)});
    }
    std::array<std::size_t, 8> width{};
    for (const auto& row : cells) {
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    }
    std::ostringstream out;
    out << "pipeline: " << t.pipeline << "\n";
    for (const auto& row : cells) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::string pad(width[k] - row[k].size(), ' ');
            if (k == 0) out << row[k] << pad;
            else out << "  " << pad << row[k];
        }
        out << "\n";
    }
    out << "total retention: docs " << format_percent(t.total_doc_retention) << ", tokens "
        << format_percent(t.total_token_retention) << "\n";
    out << "stage conservation: " << (t.conserved ? "ok" : "VIOLATED") << "\n";
    return out.str();
}

inline nlohmann::json to_json(const StatsTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json j = webcurate::to_json(r.stats);
        j["doc_retention"] = r.doc_retention;
        j["token_retention"] = r.token_retention;
        j["cumulative_token_retention"] = r.cumulative_token_retention;
        rows.push_back(std::move(j));
    }
    return {{"pipeline", t.pipeline},
            {"stages", rows},
            {"total_doc_retention", t.total_doc_retention},
            {"total_token_retention", t.total_token_retention},
            {"conserved", t.conserved}};
}

}  // namespace webcurate::pipeline
