#pragma once

// MinHash near-duplicate removal with LSH banding: 117 hash functions
// h_i(x) = (a_i x + b_i) mod (2^61 - 1), split into 9 bands of 13 rows.
// Documents sharing any band digest are linked, linked documents are closed
// transitively with union-find, and each cluster keeps its earliest member.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "webcurate/corpus_io.hpp"
#include "webcurate/text.hpp"

namespace webcurate::dedup {

inline constexpr std::size_t kNumHashes = 117;
inline constexpr std::size_t kBands = 9;
inline constexpr std::size_t kRows = 13;
inline constexpr std::uint64_t kMersenne61 = (1ULL << 61) - 1;
inline constexpr std::size_t kShingleWords = 5;
inline constexpr std::uint64_t kDefaultSeed = 0x6d696e68617368ULL;

static_assert(kBands * kRows == kNumHashes);

using Signature = std::array<std::uint64_t, kNumHashes>;

struct MinHashSignature {
    std::string doc_id;
    Signature values{};

    bool operator==(const MinHashSignature&) const = default;
};

struct BandKey {
    std::uint32_t band_index = 0;
    std::uint64_t digest = 0;

    bool operator==(const BandKey&) const = default;
};

/// x mod (2^61 - 1) for x < 2^122.
inline std::uint64_t mod_mersenne61(unsigned __int128 x) {
    std::uint64_t lo = static_cast<std::uint64_t>(x & kMersenne61);
    std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
    std::uint64_t r = lo + (hi & kMersenne61) + static_cast<std::uint64_t>(hi >> 61);
    while (r >= kMersenne61) r -= kMersenne61;
    return r;
}

/// Shingle hashes of a document: word 5-grams over lowercased,
/// whitespace-collapsed text, deduplicated and sorted. Fewer than five words
/// give one shingle for the whole text.
inline std::vector<std::uint64_t> shingles(std::string_view text) {
    std::string norm = collapse_whitespace_lower(text);
    auto words = split_whitespace(norm);
    std::vector<std::uint64_t> out;
    if (words.size() < kShingleWords) {
        out.push_back(fnv1a64(norm));
        return out;
    }
    out.reserve(words.size() - kShingleWords + 1);
    for (std::size_t i = 0; i + kShingleWords <= words.size(); ++i) {
        std::uint64_t h = kFnvOffset;
        for (std::size_t k = 0; k < kShingleWords; ++k) {
            if (k > 0) h = fnv1a64(" ", h);
            h = fnv1a64(words[i + k], h);
        }
        out.push_back(h);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

class MinHasher {
public:
    explicit MinHasher(std::uint64_t seed = kDefaultSeed) {
        std::mt19937_64 rng(seed);
        auto draw = [&](std::uint64_t lo) {
            // rejection sampling into [lo, p-1]
            while (true) {
                std::uint64_t v = rng() >> 3;  // 61 bits
                if (v >= lo && v < kMersenne61) return v;
            }
        };
        for (std::size_t i = 0; i < kNumHashes; ++i) {
            a_[i] = draw(1);
            b_[i] = draw(0);
        }
    }

    std::uint64_t hash(std::size_t i, std::uint64_t x) const {
        unsigned __int128 v = static_cast<unsigned __int128>(a_[i]) * (x % kMersenne61) + b_[i];
        return mod_mersenne61(v);
    }

    Signature signature_of(const std::vector<std::uint64_t>& shingle_set) const {
        if (shingle_set.empty()) throw std::invalid_argument("minhash of an empty shingle set");
        Signature sig;
        sig.fill(kMersenne61);
        for (std::uint64_t x : shingle_set) {
            std::uint64_t xr = x % kMersenne61;
            for (std::size_t i = 0; i < kNumHashes; ++i) {
                unsigned __int128 v = static_cast<unsigned __int128>(a_[i]) * xr + b_[i];
                sig[i] = std::min(sig[i], mod_mersenne61(v));
            }
        }
        return sig;
    }

    MinHashSignature signature(const Document& doc) const {
        if (trim(doc.text).empty()) throw std::invalid_argument("minhash of empty text: " + doc.doc_id);
        return {doc.doc_id, signature_of(shingles(doc.text))};
    }

    const std::array<std::uint64_t, kNumHashes>& a() const { return a_; }
    const std::array<std::uint64_t, kNumHashes>& b() const { return b_; }

private:
    std::array<std::uint64_t, kNumHashes> a_{};
    std::array<std::uint64_t, kNumHashes> b_{};
};

/// Fraction of equal positions; an estimate of the Jaccard similarity.
inline double estimate_jaccard(const Signature& x, const Signature& y) {
    std::size_t eq = 0;
    for (std::size_t i = 0; i < kNumHashes; ++i) eq += x[i] == y[i] ? 1 : 0;
    return static_cast<double>(eq) / static_cast<double>(kNumHashes);
}

inline std::array<BandKey, kBands> band_keys(const Signature& sig) {
    std::array<BandKey, kBands> out{};
    for (std::size_t b = 0; b < kBands; ++b) {
        std::uint64_t h = fnv1a64_u64(b);
        for (std::size_t r = 0; r < kRows; ++r) h = fnv1a64_u64(sig[b * kRows + r], h);
        out[b] = {static_cast<std::uint32_t>(b), mix64(h)};
    }
    return out;
}

/// The similarity at which a pair collides in some band with probability of
/// roughly one half: (1/b)^(1/r).
inline double exact_near_threshold(double bands = kBands, double rows = kRows) {
    return std::pow(1.0 / bands, 1.0 / rows);
}

/// Probability that a pair at Jaccard s shares at least one band.
inline double collision_probability(double s, double bands = kBands, double rows = kRows) {
    return 1.0 - std::pow(1.0 - std::pow(s, rows), bands);
}

// ---------------------------------------------------------------------------
// Clustering

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
};

struct DupCluster {
    std::vector<std::string> member_doc_ids;  // sorted by position, representative first
    std::string representative;

    bool operator==(const DupCluster&) const = default;
};

/// Sort key deciding which member of a cluster survives.
using Position = std::tuple<std::string, std::string, std::uint64_t, std::string>;

inline Position position_of(const Document& d) {
    return {d.snapshot_id, d.shard_id, d.offset, d.doc_id};
}

/// Connected components (size >= 2) of the collision graph. Members without
/// a known position order by doc_id alone. Clusters are listed by their
/// representative's position.
inline std::vector<DupCluster> cluster(const std::vector<std::pair<std::string, std::string>>& pairs,
                                       const std::map<std::string, Position>& positions = {}) {
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::string> names;
    auto id = [&](const std::string& s) {
        auto [it, fresh] = index.emplace(s, names.size());
        if (fresh) names.push_back(s);
        return it->second;
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) edges.emplace_back(id(a), id(b));
    UnionFind uf(names.size());
    for (auto [a, b] : edges) uf.unite(a, b);

    auto key = [&](const std::string& s) {
        auto it = positions.find(s);
        return it != positions.end() ? it->second : Position{{}, {}, 0, s};
    };
    std::map<std::size_t, std::vector<std::string>> groups;
    for (std::size_t i = 0; i < names.size(); ++i) groups[uf.find(i)].push_back(names[i]);
    std::vector<DupCluster> out;
    for (auto& [root, members] : groups) {
        if (members.size() < 2) continue;
        std::sort(members.begin(), members.end(),
                  [&](const std::string& x, const std::string& y) { return key(x) < key(y); });
        DupCluster c;
        c.representative = members.front();
        c.member_doc_ids = std::move(members);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [&](const DupCluster& x, const DupCluster& y) {
        return key(x.representative) < key(y.representative);
    });
    return out;
}

// ---------------------------------------------------------------------------
// End to end

struct DedupResult {
    std::vector<Document> kept;  // input order
    std::vector<DupCluster> clusters;
    std::uint64_t removed = 0;
};

/// Signatures for every document, computed on up to `workers` threads.
/// Results do not depend on the thread count.
inline std::vector<Signature> compute_signatures(const std::vector<Document>& docs, const MinHasher& hasher,
                                                 unsigned workers = 1) {
    std::vector<Signature> sigs(docs.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            sigs[i] = trim(docs[i].text).empty() ? Signature{} : hasher.signature_of(shingles(docs[i].text));
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(docs.size() / 64 + 1)));
    if (workers == 1) {
        work(0, docs.size());
        return sigs;
    }
    std::vector<std::thread> threads;
    std::size_t chunk = (docs.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = std::min(docs.size(), w * chunk);
        std::size_t end = std::min(docs.size(), begin + chunk);
        threads.emplace_back(work, begin, end);
    }
    for (auto& t : threads) t.join();
    return sigs;
}

/// Removes near duplicates, keeping the earliest document of each cluster
/// under (snapshot_id, shard_id, offset, doc_id). Within a band bucket every
/// document is linked to the bucket's earliest member.
inline DedupResult deduplicate(std::vector<Document> docs, std::uint64_t seed = kDefaultSeed,
                               unsigned workers = 1) {
    MinHasher hasher(seed);
    auto sigs = compute_signatures(docs, hasher, workers);

    std::vector<std::size_t> order(docs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::tie(docs[x].snapshot_id, docs[x].shard_id, docs[x].offset, docs[x].doc_id, x) <
               std::tie(docs[y].snapshot_id, docs[y].shard_id, docs[y].offset, docs[y].doc_id, y);
    });

    UnionFind uf(docs.size());
    std::vector<std::unordered_map<std::uint64_t, std::size_t>> buckets(kBands);
    for (std::size_t i : order) {
        if (trim(docs[i].text).empty()) continue;  // never linked
        auto keys = band_keys(sigs[i]);
        for (std::size_t b = 0; b < kBands; ++b) {
            auto [it, fresh] = buckets[b].emplace(keys[b].digest, i);
            if (!fresh) uf.unite(it->second, i);
        }
    }

    // The earliest member in sorted order becomes each root's representative.
    std::vector<std::size_t> rep(docs.size(), SIZE_MAX);
    std::map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t i : order) {
        std::size_t r = uf.find(i);
        if (rep[r] == SIZE_MAX) rep[r] = i;
        members[rep[r]].push_back(i);
    }

    DedupResult res;
    std::vector<bool> keep(docs.size(), true);
    std::vector<std::size_t> cluster_heads;
    for (auto& [head, list] : members) {
        if (list.size() < 2) continue;
        cluster_heads.push_back(head);
        for (std::size_t k = 1; k < list.size(); ++k) keep[list[k]] = false;
    }
    std::vector<std::size_t> rank(docs.size());
    for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
    std::sort(cluster_heads.begin(), cluster_heads.end(),
              [&](std::size_t x, std::size_t y) { return rank[x] < rank[y]; });
    for (std::size_t head : cluster_heads) {
        DupCluster c;
        c.representative = docs[head].doc_id;
        for (std::size_t i : members[head]) c.member_doc_ids.push_back(docs[i].doc_id);
        res.clusters.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (keep[i]) res.kept.push_back(std::move(docs[i]));
        else ++res.removed;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Spill and report files

/// `doc_id<TAB>v0 v1 ... v116`
inline void write_signatures(const std::vector<MinHashSignature>& sigs, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    for (const auto& s : sigs) {
        out << s.doc_id << '\t';
        for (std::size_t i = 0; i < kNumHashes; ++i) out << (i ? " " : "") << s.values[i];
        out << '\n';
    }
    if (!out) throw IoError("short write on " + path.string());
}

inline std::vector<MinHashSignature> read_signatures(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<MinHashSignature> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw FormatError("bad signature line in " + path.string());
        MinHashSignature s;
        s.doc_id = line.substr(0, tab);
        std::istringstream vals(line.substr(tab + 1));
        for (std::size_t i = 0; i < kNumHashes; ++i) {
            if (!(vals >> s.values[i])) throw FormatError("short signature for " + s.doc_id);
        }
        std::string extra;
        if (vals >> extra) throw FormatError("long signature for " + s.doc_id);
        out.push_back(std::move(s));
    }
    return out;
}

/// `representative<TAB>member,member,...`
inline void write_cluster_report(const std::vector<DupCluster>& clusters, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    for (const auto& c : clusters) out << c.representative << '\t' << join(c.member_doc_ids, ",") << '\n';
    if (!out) throw IoError("short write on " + path.string());
}

}  // namespace webcurate::dedup
