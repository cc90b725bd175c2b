#include "newsflow/attribution.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>

#include "newsflow/errors.hpp"

namespace newsflow {

namespace {

// Within-class squared deviation of sorted[i..j], from prefix sums. The
// exact expression shape matters: the enumeration oracle in the tests
// reproduces it verbatim so optimal costs compare bit-equal.
struct ClassCost {
    std::vector<double> sum;    // sum[i] = x[0] + ... + x[i-1]
    std::vector<double> sumsq;

    explicit ClassCost(std::span<const double> sorted) {
        sum.resize(sorted.size() + 1, 0.0);
        sumsq.resize(sorted.size() + 1, 0.0);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            sum[i + 1] = sum[i] + sorted[i];
            sumsq[i + 1] = sumsq[i] + sorted[i] * sorted[i];
        }
    }

    double operator()(std::size_t i, std::size_t j) const {  // inclusive range
        double s = sum[j + 1] - sum[i];
        double q = sumsq[j + 1] - sumsq[i];
        double len = static_cast<double>(j - i + 1);
        return q - (s * s) / len;
    }
};

}  // namespace

JenksBreaks jenks_breaks(std::span<const double> values, int k) {
    if (k < 2) throw ValidationError("jenks: class count must be >= 2");
    const std::size_t n = values.size();
    if (n < static_cast<std::size_t>(k))
        throw ValidationError("jenks: need at least k values");

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() == sorted.back())
        throw ValidationError("jenks: all values equal");

    const ClassCost cost(sorted);
    const auto kk = static_cast<std::size_t>(k);

    // suffix[q][i]: optimal SDCM of partitioning sorted[i..n-1] into q
    // classes, accumulated right to left. Minimum distributes over the
    // rounded addition, so suffix[k][0] equals the exact minimum over all
    // partitions of the identically-folded cost sum.
    std::vector<std::vector<double>> suffix(kk + 1, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i) suffix[1][i] = cost(i, n - 1);
    for (std::size_t q = 2; q <= kk; ++q) {
        // classes are non-empty: last q-1 classes need q-1 elements
        for (std::size_t i = 0; i + q <= n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = i; j + q <= n; ++j) {
                double c = cost(i, j) + suffix[q - 1][j + 1];
                if (c < best) best = c;
            }
            suffix[q][i] = best;
        }
    }

    // Greedy front-first reconstruction: the earliest boundary achieving the
    // optimum at every level yields the lexicographically smallest class-size
    // vector among optimal partitions.
    JenksBreaks result;
    result.k = k;
    result.sdcm = suffix[kk][0];
    std::vector<std::size_t> boundaries;  // index of last element per class, except the final class
    std::size_t i = 0;
    for (std::size_t q = kk; q >= 2; --q) {
        for (std::size_t j = i; j + q <= n; ++j) {
            if (cost(i, j) + suffix[q - 1][j + 1] == suffix[q][i]) {
                boundaries.push_back(j);
                i = j + 1;
                break;
            }
        }
    }

    std::size_t prev = 0;
    for (std::size_t b : boundaries) {
        result.class_sizes.push_back(b - prev + 1);
        result.breaks.push_back((sorted[b] + sorted[b + 1]) / 2.0);
        prev = b + 1;
    }
    result.class_sizes.push_back(n - prev);

    result.sdam = cost(0, n - 1);
    result.gvf = 1.0 - result.sdcm / result.sdam;
    result.gvf = std::clamp(result.gvf, 0.0, 1.0);
    return result;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::vector<std::int32_t>> cluster_replicas(const std::vector<ScoredPair>& edges,
                                                        double threshold,
                                                        std::size_t post_count) {
    UnionFind uf(post_count);
    for (const ScoredPair& e : edges) {
        if (e.score >= threshold)
            uf.unite(static_cast<std::size_t>(e.a), static_cast<std::size_t>(e.b));
    }
    std::vector<std::vector<std::int32_t>> by_root(post_count);
    for (std::size_t p = 0; p < post_count; ++p)
        by_root[uf.find(p)].push_back(static_cast<std::int32_t>(p));
    std::vector<std::vector<std::int32_t>> clusters;
    for (auto& members : by_root) {
        if (!members.empty()) clusters.push_back(std::move(members));
    }
    return clusters;
}

CircadianProfile build_circadian(std::span<const std::int64_t> timestamps) {
    if (timestamps.empty()) throw ValidationError("circadian profile of zero posts");
    std::array<double, 24> counts{};
    for (std::int64_t ts : timestamps) counts[static_cast<std::size_t>(utc_hour(ts))] += 1.0;
    constexpr double kAlpha = 0.5;
    double total = static_cast<double>(timestamps.size()) + 24.0 * kAlpha;
    CircadianProfile profile;
    for (std::size_t h = 0; h < 24; ++h) profile.bins[h] = (counts[h] + kAlpha) / total;
    return profile;
}

std::vector<CircadianProfile> account_circadians(const Corpus& corpus) {
    std::vector<std::vector<std::int64_t>> stamps(corpus.accounts.size());
    for (const Post& p : corpus.posts)
        stamps[static_cast<std::size_t>(p.account_index)].push_back(p.timestamp);
    std::vector<CircadianProfile> profiles(corpus.accounts.size());
    for (std::size_t a = 0; a < corpus.accounts.size(); ++a) {
        if (stamps[a].empty()) {
            profiles[a].bins.fill(1.0 / 24.0);
        } else {
            profiles[a] = build_circadian(stamps[a]);
        }
    }
    return profiles;
}

std::int32_t assign_originator(std::span<const std::int32_t> cluster, const Corpus& corpus,
                               const std::vector<CircadianProfile>& circadians,
                               std::int64_t epsilon_seconds) {
    if (cluster.empty()) throw ValidationError("originator of empty cluster");
    std::int64_t earliest = std::numeric_limits<std::int64_t>::max();
    for (std::int32_t p : cluster)
        earliest = std::min(earliest, corpus.posts[static_cast<std::size_t>(p)].timestamp);

    std::int32_t best = -1;
    double best_bin = -1.0;
    for (std::int32_t p : cluster) {
        const Post& post = corpus.posts[static_cast<std::size_t>(p)];
        if (post.timestamp > earliest + epsilon_seconds) continue;
        double bin =
            circadians[static_cast<std::size_t>(post.account_index)].bins[static_cast<std::size_t>(
                utc_hour(post.timestamp))];
        if (best < 0) {
            best = p;
            best_bin = bin;
            continue;
        }
        const Post& incumbent = corpus.posts[static_cast<std::size_t>(best)];
        if (bin > best_bin ||
            (bin == best_bin && std::pair(post.account_id, post.id) <
                                    std::pair(incumbent.account_id, incumbent.id))) {
            best = p;
            best_bin = bin;
        }
    }
    return best;
}

AttributionResult attribute(const Corpus& corpus, const std::vector<ScoredPair>& edges,
                            int jenks_k, std::int64_t epsilon_seconds) {
    AttributionResult result;

    constexpr double kFallbackThreshold = 0.8;
    std::vector<double> scores;
    scores.reserve(edges.size());
    for (const ScoredPair& e : edges) scores.push_back(e.score);

    std::size_t distinct = 0;
    {
        std::vector<double> uniq(scores);
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        distinct = uniq.size();
    }
    bool degenerate = scores.size() < static_cast<std::size_t>(jenks_k) ||
                      distinct < static_cast<std::size_t>(jenks_k);
    if (degenerate) {
        result.replica_threshold = kFallbackThreshold;
        result.gvf = 0.0;
        result.threshold_fallback = true;
        std::cerr << "[attribution] degenerate edge-score distribution; "
                     "falling back to fixed threshold "
                  << kFallbackThreshold << "\n";
    } else {
        JenksBreaks jb = jenks_breaks(scores, jenks_k);
        result.replica_threshold = jb.breaks.back();
        result.gvf = jb.gvf;
    }

    auto components =
        cluster_replicas(edges, result.replica_threshold, corpus.posts.size());

    // Deterministic cluster order: by smallest member post id.
    std::vector<std::string> min_id(components.size());
    for (std::size_t c = 0; c < components.size(); ++c) {
        for (std::int32_t p : components[c]) {
            const std::string& id = corpus.posts[static_cast<std::size_t>(p)].id;
            if (min_id[c].empty() || id < min_id[c]) min_id[c] = id;
        }
    }
    std::vector<std::size_t> order(components.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return min_id[x] < min_id[y]; });

    auto circadians = account_circadians(corpus);
    std::size_t width = std::max<std::size_t>(std::to_string(components.size()).size(), 1);
    result.clusters.reserve(components.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        ReplicaCluster cluster;
        cluster.post_indices = std::move(components[order[rank]]);
        std::string ordinal = std::to_string(rank);
        cluster.cluster_id = "c" + std::string(width - ordinal.size(), '0') + ordinal;
        cluster.originator_post =
            assign_originator(cluster.post_indices, corpus, circadians, epsilon_seconds);
        cluster.originator_account =
            corpus.posts[static_cast<std::size_t>(cluster.originator_post)].account_id;
        result.clusters.push_back(std::move(cluster));
    }
    return result;
}

}  // namespace newsflow
