#ifndef NEWSFLOW_SERIALIZE_HPP
#define NEWSFLOW_SERIALIZE_HPP

#include <filesystem>
#include <istream>
#include <ostream>

#include "newsflow/attribution.hpp"
#include "newsflow/corpus.hpp"
#include "newsflow/stats.hpp"
#include "newsflow/synth.hpp"

namespace newsflow {

// Newline-delimited JSON, one record per line, UTF-8. All writers are
// byte-deterministic for identical inputs.

void write_posts_jsonl(std::ostream& out, const Corpus& corpus);
void write_accounts_jsonl(std::ostream& out, const Corpus& corpus);

// {post_id, cluster_id, is_originator}
void write_truth_jsonl(std::ostream& out, const ClusterLabeling& labeling);

// {cluster_id, post_id, account_id, is_originator}
void write_attribution_jsonl(std::ostream& out, const AttributionResult& attribution,
                             const Corpus& corpus);

// Reads either shape back into a labeling (account_id optional).
ClusterLabeling read_labeling_jsonl(const std::filesystem::path& path);

void write_fit_json(std::ostream& out, const RegressionFit& fit);
RegressionFit read_fit_json(const std::filesystem::path& path);

}  // namespace newsflow

#endif  // NEWSFLOW_SERIALIZE_HPP
