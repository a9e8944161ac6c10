#pragma once

// Hashed n-gram logistic regression, plus the file formats for labeled data,
// external scores and trained models.
//
// Features: lowercased whitespace tokens; word n-grams of each configured
// order are hashed (FNV-1a mixed with the seed) into `feature_dim` buckets
// and the count vector is L2-normalized.
//
// Model file layout (little-endian):
//   bytes 0-3   magic "WCNG"
//   u32         format version (1)
//   u64         feature_dim
//   u32         number of n-gram orders, then one u32 per order
//   u64         hash seed
//   f64         bias
//   f64 x dim   weights

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "webcurate/corpus_io.hpp"
#include "webcurate/text.hpp"

namespace webcurate::classifier {

struct LabeledExample {
    std::string text;
    bool positive = false;
};

struct NgramModel {
    std::uint64_t feature_dim = 1u << 20;
    std::vector<double> weights;
    double bias = 0.0;
    std::vector<std::uint32_t> ngram_orders{1, 2};
    std::uint64_t hash_seed = 0x5eed5eed5eed5eedULL;

    bool operator==(const NgramModel&) const = default;
};

inline constexpr std::uint32_t kModelVersion = 1;
inline constexpr char kModelMagic[4] = {'W', 'C', 'N', 'G'};

using SparseVector = std::vector<std::pair<std::uint64_t, double>>;

inline std::uint64_t feature_index(std::string_view ngram, std::uint64_t seed, std::uint64_t dim) {
    return mix64(fnv1a64(ngram) ^ seed) & (dim - 1);
}

/// L2-normalized hashed n-gram counts, sorted by index.
inline SparseVector featurize(std::string_view text, const NgramModel& m) {
    std::vector<std::string> tokens;
    for (auto t : split_whitespace(text)) tokens.push_back(to_lower_ascii(t));
    std::vector<std::uint64_t> idx;
    for (std::uint32_t n : m.ngram_orders) {
        if (n == 0 || tokens.size() < n) continue;
        for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
            std::string g = tokens[i];
            for (std::size_t k = 1; k < n; ++k) {
                g.push_back('\x1f');
                g += tokens[i + k];
            }
            idx.push_back(feature_index(g, m.hash_seed, m.feature_dim));
        }
    }
    std::sort(idx.begin(), idx.end());
    SparseVector x;
    for (std::uint64_t i : idx) {
        if (!x.empty() && x.back().first == i) x.back().second += 1.0;
        else x.emplace_back(i, 1.0);
    }
    double norm = 0.0;
    for (const auto& [i, v] : x) norm += v * v;
    norm = std::sqrt(norm);
    if (norm > 0.0) {
        for (auto& [i, v] : x) v /= norm;
    }
    return x;
}

inline double sigmoid(double z) {
    if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
    double e = std::exp(z);
    return e / (1.0 + e);
}

inline double linear_score(const NgramModel& m, const SparseVector& x) {
    double z = m.bias;
    for (const auto& [i, v] : x) z += m.weights[i] * v;
    return z;
}

inline double score_features(const NgramModel& m, const SparseVector& x) {
    return sigmoid(linear_score(m, x));
}

/// Probability of the positive class.
inline double score(const NgramModel& m, std::string_view text) {
    return score_features(m, featurize(text, m));
}

// ---------------------------------------------------------------------------
// Training

struct TrainOptions {
    int epochs = 5;
    double lr = 0.1;
    std::uint64_t feature_dim = 1u << 20;
    std::vector<std::uint32_t> ngram_orders{1, 2};
    std::uint64_t hash_seed = 0x5eed5eed5eed5eedULL;
    std::uint64_t shuffle_seed = 42;
};

/// Mean logistic loss of a model over featurized examples.
inline double log_loss(const NgramModel& m, const std::vector<SparseVector>& xs,
                       const std::vector<bool>& ys) {
    if (xs.empty()) return 0.0;
    double total = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        double z = linear_score(m, xs[k]);
        // log(1 + e^z) - y z, computed stably
        double softplus = z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
        total += softplus - (ys[k] ? z : 0.0);
    }
    return total / static_cast<double>(xs.size());
}

struct Gradient {
    std::vector<double> weights;
    double bias = 0.0;
};

/// Gradient of log_loss with respect to every weight and the bias.
inline Gradient loss_gradient(const NgramModel& m, const std::vector<SparseVector>& xs,
                              const std::vector<bool>& ys) {
    Gradient g;
    g.weights.assign(m.weights.size(), 0.0);
    if (xs.empty()) return g;
    double inv = 1.0 / static_cast<double>(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        double err = score_features(m, xs[k]) - (ys[k] ? 1.0 : 0.0);
        for (const auto& [i, v] : xs[k]) g.weights[i] += err * v * inv;
        g.bias += err * inv;
    }
    return g;
}

namespace detail {

// Uniform integer in [0, bound) from the raw 64-bit stream, by rejection, so
// the shuffle does not depend on the standard library's distributions.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

}  // namespace detail

template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = detail::bounded(rng, i);
        std::swap(v[i - 1], v[j]);
    }
}

struct TrainResult {
    NgramModel model;
    std::vector<double> epoch_loss;  // training loss after each epoch
};

/// Plain SGD on the logistic loss, one example at a time, visiting the
/// examples in a freshly shuffled order every epoch.
inline TrainResult train(const std::vector<LabeledExample>& examples, const TrainOptions& opt = {}) {
    if (opt.feature_dim == 0 || !std::has_single_bit(opt.feature_dim)) {
        throw std::invalid_argument("feature_dim must be a power of two");
    }
    bool pos = false;
    bool neg = false;
    for (const auto& e : examples) (e.positive ? pos : neg) = true;
    if (!pos || !neg) throw std::invalid_argument("training needs examples of both classes");

    TrainResult r;
    r.model.feature_dim = opt.feature_dim;
    r.model.ngram_orders = opt.ngram_orders;
    r.model.hash_seed = opt.hash_seed;
    r.model.weights.assign(opt.feature_dim, 0.0);

    std::vector<SparseVector> xs;
    std::vector<bool> ys;
    xs.reserve(examples.size());
    for (const auto& e : examples) {
        xs.push_back(featurize(e.text, r.model));
        ys.push_back(e.positive);
    }
    std::vector<std::size_t> order(examples.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(opt.shuffle_seed);
    for (int epoch = 0; epoch < opt.epochs; ++epoch) {
        deterministic_shuffle(order, rng);
        for (std::size_t k : order) {
            double err = score_features(r.model, xs[k]) - (ys[k] ? 1.0 : 0.0);
            for (const auto& [i, v] : xs[k]) r.model.weights[i] -= opt.lr * err * v;
            r.model.bias -= opt.lr * err;
        }
        r.epoch_loss.push_back(log_loss(r.model, xs, ys));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Model files

namespace detail {

template <typename T>
void put(std::ostream& out, T v) {
    static_assert(std::endian::native == std::endian::little, "little-endian host required");
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in, const std::string& what) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw FormatError("truncated model file: " + what);
    return v;
}

}  // namespace detail

inline void save_model(const NgramModel& m, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write model " + path.string());
    out.write(kModelMagic, 4);
    detail::put<std::uint32_t>(out, kModelVersion);
    detail::put<std::uint64_t>(out, m.feature_dim);
    detail::put<std::uint32_t>(out, static_cast<std::uint32_t>(m.ngram_orders.size()));
    for (auto n : m.ngram_orders) detail::put<std::uint32_t>(out, n);
    detail::put<std::uint64_t>(out, m.hash_seed);
    detail::put<double>(out, m.bias);
    out.write(reinterpret_cast<const char*>(m.weights.data()),
              static_cast<std::streamsize>(m.weights.size() * sizeof(double)));
    if (!out) throw IoError("short write on model " + path.string());
}

struct ModelHeader {
    std::uint32_t version = 0;
    std::uint64_t feature_dim = 0;
    std::vector<std::uint32_t> ngram_orders;
    std::uint64_t hash_seed = 0;
};

namespace detail {

inline ModelHeader read_header(std::istream& in, const std::string& name) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kModelMagic, 4) != 0) throw FormatError("not a model file: " + name);
    ModelHeader h;
    h.version = get<std::uint32_t>(in, name);
    if (h.version != kModelVersion) {
        throw FormatError("unsupported model version " + std::to_string(h.version) + " in " + name);
    }
    h.feature_dim = get<std::uint64_t>(in, name);
    if (h.feature_dim == 0 || !std::has_single_bit(h.feature_dim) || h.feature_dim > (1ULL << 32)) {
        throw FormatError("bad feature_dim in " + name);
    }
    auto orders = get<std::uint32_t>(in, name);
    if (orders > 16) throw FormatError("bad n-gram order count in " + name);
    for (std::uint32_t i = 0; i < orders; ++i) h.ngram_orders.push_back(get<std::uint32_t>(in, name));
    h.hash_seed = get<std::uint64_t>(in, name);
    return h;
}

}  // namespace detail

inline ModelHeader read_model_header(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model " + path.string());
    return detail::read_header(in, path.string());
}

inline NgramModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model " + path.string());
    ModelHeader h = detail::read_header(in, path.string());
    NgramModel m;
    m.feature_dim = h.feature_dim;
    m.ngram_orders = h.ngram_orders;
    m.hash_seed = h.hash_seed;
    m.bias = detail::get<double>(in, path.string());
    m.weights.resize(m.feature_dim);
    in.read(reinterpret_cast<char*>(m.weights.data()),
            static_cast<std::streamsize>(m.weights.size() * sizeof(double)));
    if (!in) throw FormatError("truncated model weights in " + path.string());
    for (double w : m.weights) {
        if (!std::isfinite(w)) throw FormatError("non-finite weight in " + path.string());
    }
    return m;
}

// ---------------------------------------------------------------------------
// Labeled data and score files

/// `__pos__<TAB>text` / `__neg__<TAB>text`, one example per line.
inline std::vector<LabeledExample> load_labeled(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open labeled data " + path.string());
    std::vector<LabeledExample> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto tab = line.find('\t');
        std::string_view label = std::string_view(line).substr(0, tab);
        if (tab == std::string::npos || (label != "__pos__" && label != "__neg__")) {
            throw FormatError(path.string() + ":" + std::to_string(lineno) + ": expected __pos__/__neg__ label");
        }
        std::string text = line.substr(tab + 1);
        if (trim(text).empty()) continue;
        out.push_back({std::move(text), label == "__pos__"});
    }
    return out;
}

using ScoreFile = std::map<std::string, double>;

/// `doc_id<TAB>score`, scores within [0,1].
inline ScoreFile load_score_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open score file " + path.string());
    ScoreFile out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto tab = line.rfind('\t');
        double v = -1.0;
        bool ok = tab != std::string::npos;
        if (ok) {
            try {
                std::size_t used = 0;
                std::string num(trim(std::string_view(line).substr(tab + 1)));
                v = std::stod(num, &used);
                ok = used == num.size();
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok || !(v >= 0.0 && v <= 1.0)) {
            throw FormatError(path.string() + ":" + std::to_string(lineno) + ": expected doc_id<TAB>score in [0,1]");
        }
        out[line.substr(0, tab)] = v;
    }
    return out;
}

inline void write_score_file(const ScoreFile& scores, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    for (const auto& [id, s] : scores) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", s);
        out << id << '\t' << buf << '\n';
    }
    if (!out) throw IoError("short write on " + path.string());
}

// ---------------------------------------------------------------------------
// Score-based filtering

/// Either a trained model or a table of precomputed scores.
struct ScoreSource {
    const NgramModel* model = nullptr;
    const ScoreFile* scores = nullptr;

    std::optional<double> score_of(const Document& d) const {
        if (model != nullptr) return score(*model, d.text);
        if (scores != nullptr) {
            auto it = scores->find(d.doc_id);
            if (it != scores->end()) return it->second;
        }
        return std::nullopt;
    }
};

/// Classifier cut-off used by every model-based stage.
inline constexpr double kScoreThreshold = 0.5;

struct ScoreFilterResult {
    std::vector<Document> kept;
    StageStats stats;
};

/// Keeps documents scoring strictly above `threshold`. Documents without a
/// score are discarded and counted under score_missing.
inline ScoreFilterResult filter_by_score(std::vector<Document> docs, const ScoreSource& source,
                                         double threshold = kScoreThreshold, std::string stage_name = "model_filter") {
    ScoreFilterResult r;
    r.stats.stage_name = std::move(stage_name);
    for (auto& d : docs) {
        ++r.stats.docs_in;
        r.stats.tokens_in += d.word_count;
        auto s = source.score_of(d);
        if (!s) {
            ++r.stats.rule_hit_counts["score_missing"];
            continue;
        }
        if (!(*s > threshold)) {
            ++r.stats.rule_hit_counts["score_below_threshold"];
            continue;
        }
        ++r.stats.docs_out;
        r.stats.tokens_out += d.word_count;
        d.stage_trace.push_back(r.stats.stage_name);
        r.kept.push_back(std::move(d));
    }
    return r;
}

}  // namespace webcurate::classifier
