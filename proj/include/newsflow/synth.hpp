#ifndef NEWSFLOW_SYNTH_HPP
#define NEWSFLOW_SYNTH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "newsflow/attribution.hpp"
#include "newsflow/corpus.hpp"

namespace newsflow {

// Fixed 5000-word vocabulary backing the seeded token model.
std::span<const char* const> synth_word_list();

struct SynthConfig {
    std::int32_t accounts = 48;
    std::int32_t posts_per_account = 200;
    double replica_rate = 0.3;     // fraction of all posts that are copies
    double mutation_rate = 0.1;    // fraction of tokens edited per replica
    std::int64_t copy_delay_min = 60;   // seconds after the original
    std::int64_t copy_delay_max = 86400;
    double mix_producer = 0.4;     // account archetype fractions
    double mix_provider = 0.3;
    double mix_consumer = 0.3;
    std::uint64_t seed = 1;
};

// Cluster labeling over a post universe: the attribution-dump and
// ground-truth file shapes both reduce to this.
struct ClusterLabeling {
    std::vector<std::string> post_ids;
    std::vector<std::string> account_ids;     // may be empty for truth files
    std::vector<std::int32_t> cluster;        // cluster index per post
    std::vector<std::string> cluster_ids;     // per cluster index
    std::vector<bool> is_originator;          // per post
};

using GroundTruth = ClusterLabeling;

struct SynthCorpus {
    Corpus corpus;
    GroundTruth truth;
};

// Deterministic for a given seed (integer-only randomness). Originals are
// Markov walks over the word list (8+ tokens); replicas copy an earlier
// original from another account with floor(mutation_rate * len) tokens
// deleted or substituted, timestamped within the copy-delay window. Each
// account gets a circadian peak hour, and some posts carry a recurring
// account-specific lead-in segment so the edge-score distribution has a
// non-replica mode above typical similarity floors.
SynthCorpus generate_corpus(const SynthConfig& config);

ClusterLabeling labeling_from_attribution(const AttributionResult& attribution,
                                          const Corpus& corpus);

struct EvalMetrics {
    double pair_precision = 0;
    double pair_recall = 0;
    double pair_f1 = 0;
    double originator_accuracy = 0;
    std::size_t predicted_pairs = 0;
    std::size_t truth_pairs = 0;
    std::size_t agreeing_pairs = 0;
    std::size_t truth_multi_clusters = 0;
    bool vacuous_precision = false;  // zero predicted pairs reported as 1.0
};

// Pairwise precision/recall/F1 over same-cluster post pairs, plus the
// fraction of true multi-post clusters whose best-overlapping predicted
// cluster names the true originator. Errors if the post universes differ.
EvalMetrics evaluate(const ClusterLabeling& predicted, const ClusterLabeling& truth);

}  // namespace newsflow

#endif  // NEWSFLOW_SYNTH_HPP
