#ifndef NEWSFLOW_PROFILE_HPP
#define NEWSFLOW_PROFILE_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "newsflow/corpus.hpp"

namespace newsflow {

// Top-L character n-gram profile of one text. `grams` is ordered by
// frequency descending, ties broken by gram string ascending, truncated to
// the capacity; `gram_set` holds the same grams sorted lexicographically for
// set intersection.
struct NgramProfile {
    int n = 3;
    int capacity = 500;
    std::vector<std::pair<std::string, std::int64_t>> grams;
    std::vector<std::string> gram_set;

    std::size_t size() const { return grams.size(); }
};

// Overlapping character n-grams of the lowercased text (ASCII lowercasing;
// bytes outside ASCII pass through). Errors if the text is shorter than n.
NgramProfile build_profile(std::string_view text, int n = 3, int capacity = 500);

// |grams(a) ∩ grams(b)| / min(|grams(a)|, |grams(b)|); frequencies ignored.
// Errors if the profiles were built with different n.
double similarity(const NgramProfile& a, const NgramProfile& b);

// Post pair with indices into Corpus::posts; the post id of `a` orders
// before the post id of `b`.
struct ScoredPair {
    std::int32_t a = 0;
    std::int32_t b = 0;
    double score = 0;
};

struct PairwiseOptions {
    int n = 3;
    int capacity = 500;
    double floor = 0.5;
    int workers = 0;            // 0 = hardware concurrency
    bool allow_prefilter = true;  // prefix-filter engages only when floor >= 0.2
};

// Every unordered post pair scoring >= floor, sorted by (id_a, id_b).
// Output is byte-identical across runs and worker counts. The prefix filter
// is an internal accelerator that cannot change the result set.
std::vector<ScoredPair> pairwise_similarities(const Corpus& corpus, const PairwiseOptions& opt);

// Mean pairwise similarity over one account's posts; errors with < 2 posts.
double avg_account_similarity(const Corpus& corpus, std::string_view account_id, int n = 3,
                              int capacity = 500);

// CSV dump: header post_a,post_b,score with 6-decimal scores.
void write_edge_csv(std::ostream& out, const Corpus& corpus,
                    const std::vector<ScoredPair>& edges);

}  // namespace newsflow

#endif  // NEWSFLOW_PROFILE_HPP
