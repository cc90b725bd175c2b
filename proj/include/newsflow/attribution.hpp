#ifndef NEWSFLOW_ATTRIBUTION_HPP
#define NEWSFLOW_ATTRIBUTION_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "newsflow/corpus.hpp"
#include "newsflow/profile.hpp"

namespace newsflow {

struct JenksBreaks {
    int k = 2;
    std::vector<double> breaks;             // k-1 ascending break values
    std::vector<std::size_t> class_sizes;   // k sizes, for the sorted input
    double sdcm = 0;                        // sum of within-class squared deviations
    double sdam = 0;                        // squared deviation from the global mean
    double gvf = 0;                         // 1 - sdcm/sdam, clamped to [0,1]
};

// Exact optimal 1-D classification: dynamic program over the sorted values
// minimizing SDCM. Among optimal partitions the lexicographically smallest
// class-size vector wins. Breaks are midpoints between adjacent boundary
// values. Errors if |values| < k, k < 2, or all values are equal.
JenksBreaks jenks_breaks(std::span<const double> values, int k);

// Connected components of the >= threshold similarity graph. Posts without
// a qualifying edge become singletons. Clusters are ordered by their
// smallest post index; members ascending.
std::vector<std::vector<std::int32_t>> cluster_replicas(const std::vector<ScoredPair>& edges,
                                                        double threshold,
                                                        std::size_t post_count);

// Fraction of an account's posts per UTC hour, Laplace-smoothed with
// alpha = 0.5 per bin. Errors on zero posts.
struct CircadianProfile {
    std::array<double, 24> bins{};
};

CircadianProfile build_circadian(std::span<const std::int64_t> timestamps);

// One circadian profile per corpus account (accounts without posts get a
// uniform profile from smoothing alone).
std::vector<CircadianProfile> account_circadians(const Corpus& corpus);

// Earliest-within-epsilon rule: candidates post no later than epsilon after
// the cluster's first timestamp; among them the highest circadian bin value
// at the candidate's own posting hour wins; remaining ties go to the
// smallest account id, then the smallest post id.
std::int32_t assign_originator(std::span<const std::int32_t> cluster, const Corpus& corpus,
                               const std::vector<CircadianProfile>& circadians,
                               std::int64_t epsilon_seconds);

struct ReplicaCluster {
    std::string cluster_id;
    std::vector<std::int32_t> post_indices;  // ascending
    std::int32_t originator_post = -1;
    std::string originator_account;
};

struct AttributionResult {
    std::vector<ReplicaCluster> clusters;  // a partition of all accepted posts
    double replica_threshold = 0;
    double gvf = 0;
    bool threshold_fallback = false;  // degenerate score distribution, fixed 0.8 used
};

// Full author-analysis pass: Jenks (k classes) on the edge scores picks the
// replica threshold (uppermost break); edges below it are dropped as noise;
// connected components become clusters and each gets an originator.
AttributionResult attribute(const Corpus& corpus, const std::vector<ScoredPair>& edges,
                            int jenks_k = 2, std::int64_t epsilon_seconds = 300);

inline int utc_hour(std::int64_t timestamp) {
    return static_cast<int>((timestamp % 86400) / 3600);
}

}  // namespace newsflow

#endif  // NEWSFLOW_ATTRIBUTION_HPP
