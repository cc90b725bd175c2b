#include "newsflow/synth.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "newsflow/errors.hpp"

namespace newsflow {

namespace {

// mt19937_64 output is fully specified by the standard; all derived draws
// stay in integer space so corpora are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform in [0, n); modulo bias is irrelevant for corpus generation
    std::uint64_t below(std::uint64_t n) { return n ? engine_() % n : 0; }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t numer, std::uint64_t denom) { return below(denom) < numer; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }

private:
    std::mt19937_64 engine_;
};

constexpr std::size_t kSuccessors = 8;   // Markov fan-out per word
constexpr std::int64_t kEpochBase = 1600000000;  // corpus window start
constexpr int kWindowDays = 30;

std::string zero_pad(std::size_t value, std::size_t width) {
    std::string s = std::to_string(value);
    return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

enum class Archetype { Producer, Provider, Consumer };

}  // namespace

SynthCorpus generate_corpus(const SynthConfig& config) {
    if (config.accounts < 1) throw ValidationError("synth: accounts must be >= 1");
    if (config.posts_per_account < 1)
        throw ValidationError("synth: posts_per_account must be >= 1");
    if (config.replica_rate < 0 || config.replica_rate > 1)
        throw ValidationError("synth: replica_rate must be in [0,1]");
    if (config.mutation_rate < 0 || config.mutation_rate > 1)
        throw ValidationError("synth: mutation_rate must be in [0,1]");
    if (config.copy_delay_min < 0 || config.copy_delay_min > config.copy_delay_max)
        throw ValidationError("synth: copy delay window invalid");
    if (config.replica_rate > 0 && config.accounts < 2)
        throw ValidationError("synth: replicas need at least 2 accounts");
    double mix = config.mix_producer + config.mix_provider + config.mix_consumer;
    if (mix <= 0) throw ValidationError("synth: archetype mix must have positive mass");

    const auto words = synth_word_list();
    const auto n_words = static_cast<std::uint64_t>(words.size());
    Rng rng(config.seed);

    const auto n_accounts = static_cast<std::size_t>(config.accounts);
    const auto per_account = static_cast<std::size_t>(config.posts_per_account);
    const std::size_t total = n_accounts * per_account;
    const auto n_replicas = static_cast<std::size_t>(
        config.replica_rate * static_cast<double>(total));

    // Markov successor table for the token model.
    std::vector<std::uint32_t> successors(static_cast<std::size_t>(n_words) * kSuccessors);
    for (auto& s : successors) s = static_cast<std::uint32_t>(rng.below(n_words));
    auto walk = [&](std::size_t len) {
        std::string text;
        auto state = static_cast<std::uint32_t>(rng.below(n_words));
        for (std::size_t i = 0; i < len; ++i) {
            if (i) text.push_back(' ');
            text.append(words[state]);
            state = successors[static_cast<std::size_t>(state) * kSuccessors + rng.below(kSuccessors)];
        }
        return text;
    };

    // Account archetypes by mix fraction, then per-account flavor: a peak
    // posting hour and a recurring lead-in segment.
    std::vector<Archetype> archetype(n_accounts, Archetype::Consumer);
    {
        auto producers = static_cast<std::size_t>(config.mix_producer / mix *
                                                  static_cast<double>(n_accounts));
        auto providers = static_cast<std::size_t>(config.mix_provider / mix *
                                                  static_cast<double>(n_accounts));
        for (std::size_t a = 0; a < n_accounts; ++a) {
            if (a < producers) archetype[a] = Archetype::Producer;
            else if (a < producers + providers) archetype[a] = Archetype::Provider;
        }
    }
    std::vector<int> peak_hour(n_accounts);
    std::vector<std::string> lead_in(n_accounts);
    for (std::size_t a = 0; a < n_accounts; ++a) {
        peak_hour[a] = static_cast<int>(rng.below(24));
        lead_in[a] = walk(8);
    }

    SynthCorpus out;
    const std::size_t acc_width = std::to_string(n_accounts).size();
    for (std::size_t a = 0; a < n_accounts; ++a) {
        MediaAccount acc;
        acc.id = "acct" + zero_pad(a, acc_width);
        acc.display_name = "Outlet " + std::to_string(a);
        acc.platform = (a % 2 == 0) ? Platform{PlatformKind::Twitter, ""}
                                    : Platform{PlatformKind::Facebook, ""};
        acc.followers = static_cast<std::int64_t>(10000 + rng.below(5000000));
        out.corpus.accounts.push_back(std::move(acc));
    }

    // Replica slots are fixed upfront, weighted toward consumer accounts;
    // sources are drawn from original slots, weighted toward providers.
    auto slot_weight = [&](std::size_t a, bool as_replica) -> std::size_t {
        switch (archetype[a]) {
            case Archetype::Producer: return as_replica ? 1 : 2;
            case Archetype::Provider: return as_replica ? 1 : 8;
            case Archetype::Consumer: return as_replica ? 8 : 1;
        }
        return 1;
    };
    std::vector<std::size_t> slot_pool;  // post slot = account * per_account + ordinal
    for (std::size_t a = 0; a < n_accounts; ++a) {
        for (std::size_t i = 0; i < per_account; ++i) {
            for (std::size_t w = 0; w < slot_weight(a, true); ++w)
                slot_pool.push_back(a * per_account + i);
        }
    }
    rng.shuffle(slot_pool);
    std::vector<bool> is_replica_slot(total, false);
    std::size_t assigned = 0;
    for (std::size_t slot : slot_pool) {
        if (assigned >= n_replicas) break;
        if (!is_replica_slot[slot]) {
            is_replica_slot[slot] = true;
            ++assigned;
        }
    }

    // Originals first: text, timestamp near the account's peak hour.
    struct Draft {
        std::string text;
        std::int64_t timestamp = 0;
        std::size_t account = 0;
        bool replica = false;
        std::size_t source = 0;  // original slot index when replica
    };
    std::vector<Draft> drafts(total);
    std::vector<std::size_t> original_slots;
    std::vector<std::size_t> weighted_sources;
    for (std::size_t slot = 0; slot < total; ++slot) {
        std::size_t a = slot / per_account;
        drafts[slot].account = a;
        if (is_replica_slot[slot]) {
            drafts[slot].replica = true;
            continue;
        }
        std::size_t len = static_cast<std::size_t>(rng.range(8, 18));
        std::string text = walk(len);
        if (rng.chance(3, 20)) text = lead_in[a] + " " + text;  // recurring segment
        drafts[slot].text = std::move(text);
        int hour = rng.chance(4, 5) ? peak_hour[a] : static_cast<int>(rng.below(24));
        drafts[slot].timestamp = kEpochBase +
                                 rng.range(0, kWindowDays - 1) * 86400 +
                                 static_cast<std::int64_t>(hour) * 3600 +
                                 rng.range(0, 3599);
        original_slots.push_back(slot);
        for (std::size_t w = 0; w < slot_weight(a, false); ++w) weighted_sources.push_back(slot);
    }

    std::vector<std::size_t> own_originals(n_accounts, 0);
    for (std::size_t slot : original_slots) ++own_originals[drafts[slot].account];

    for (std::size_t slot = 0; slot < total; ++slot) {
        if (!drafts[slot].replica) continue;
        std::size_t a = drafts[slot].account;
        if (original_slots.size() == own_originals[a])
            throw ValidationError("synth: no foreign originals available for account " +
                                  out.corpus.accounts[a].id);
        std::size_t source = 0;
        for (;;) {
            source = weighted_sources[static_cast<std::size_t>(rng.below(weighted_sources.size()))];
            if (drafts[source].account != a) break;
        }
        drafts[slot].source = source;

        std::vector<std::string_view> tokens;
        {
            std::string_view text = drafts[source].text;
            std::size_t pos = 0;
            while (pos < text.size()) {
                std::size_t space = text.find(' ', pos);
                if (space == std::string_view::npos) space = text.size();
                tokens.push_back(text.substr(pos, space - pos));
                pos = space + 1;
            }
        }
        auto n_edits = static_cast<std::size_t>(config.mutation_rate *
                                                static_cast<double>(tokens.size()));
        std::vector<std::size_t> positions(tokens.size());
        std::iota(positions.begin(), positions.end(), 0);
        rng.shuffle(positions);
        std::vector<int> edit(tokens.size(), 0);  // 0 keep, 1 delete, 2 substitute
        for (std::size_t e = 0; e < n_edits; ++e) edit[positions[e]] = rng.chance(1, 2) ? 1 : 2;

        std::string text;
        std::size_t kept = 0;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (edit[i] == 1) continue;
            if (!text.empty()) text.push_back(' ');
            if (edit[i] == 2) {
                text.append(words[rng.below(n_words)]);
            } else {
                text.append(tokens[i]);
            }
            ++kept;
        }
        if (kept < 3) text = drafts[source].text;  // never mutate below the word floor
        drafts[slot].text = std::move(text);
        drafts[slot].timestamp =
            drafts[source].timestamp +
            rng.range(config.copy_delay_min, config.copy_delay_max);
    }

    // Materialize posts and ground truth. Cluster ids are keyed by the
    // source original's slot.
    const std::size_t post_width = std::to_string(total).size();
    std::unordered_map<std::size_t, std::int32_t> cluster_index_of_source;
    out.truth.post_ids.reserve(total);
    out.truth.cluster.reserve(total);
    for (std::size_t slot = 0; slot < total; ++slot) {
        const Draft& d = drafts[slot];
        Post post;
        post.id = "p" + zero_pad(slot, post_width);
        post.account_id = out.corpus.accounts[d.account].id;
        post.account_index = static_cast<std::int32_t>(d.account);
        post.text = d.text;
        post.timestamp = d.timestamp;
        // reader reactions scale loosely with audience plus noise
        std::int64_t base = out.corpus.accounts[d.account].followers / 2000;
        post.reactions.likes = base + static_cast<std::int64_t>(rng.below(200));
        post.reactions.shares = base / 3 + static_cast<std::int64_t>(rng.below(60));
        post.reactions.comments = static_cast<std::int64_t>(rng.below(40));
        post.reactions.retweets = base / 2 + static_cast<std::int64_t>(rng.below(100));
        post.reactions.favorites = base / 2 + static_cast<std::int64_t>(rng.below(150));
        out.corpus.posts.push_back(std::move(post));

        std::size_t key = d.replica ? d.source : slot;
        auto [it, inserted] = cluster_index_of_source.emplace(
            key, static_cast<std::int32_t>(out.truth.cluster_ids.size()));
        if (inserted)
            out.truth.cluster_ids.push_back("t" + zero_pad(key, post_width));
        out.truth.post_ids.push_back(out.corpus.posts.back().id);
        out.truth.account_ids.push_back(out.corpus.posts.back().account_id);
        out.truth.cluster.push_back(it->second);
        out.truth.is_originator.push_back(!d.replica);
    }
    return out;
}

ClusterLabeling labeling_from_attribution(const AttributionResult& attribution,
                                          const Corpus& corpus) {
    ClusterLabeling labeling;
    labeling.post_ids.resize(corpus.posts.size());
    labeling.account_ids.resize(corpus.posts.size());
    labeling.cluster.resize(corpus.posts.size(), -1);
    labeling.is_originator.resize(corpus.posts.size(), false);
    for (const ReplicaCluster& cluster : attribution.clusters) {
        auto index = static_cast<std::int32_t>(labeling.cluster_ids.size());
        labeling.cluster_ids.push_back(cluster.cluster_id);
        for (std::int32_t p : cluster.post_indices) {
            auto i = static_cast<std::size_t>(p);
            labeling.post_ids[i] = corpus.posts[i].id;
            labeling.account_ids[i] = corpus.posts[i].account_id;
            labeling.cluster[i] = index;
            labeling.is_originator[i] = p == cluster.originator_post;
        }
    }
    return labeling;
}

EvalMetrics evaluate(const ClusterLabeling& predicted, const ClusterLabeling& truth) {
    if (predicted.post_ids.size() != truth.post_ids.size())
        throw ValidationError("evaluate: post universes differ in size");

    // align truth rows to predicted rows by post id
    std::unordered_map<std::string, std::size_t> truth_row;
    truth_row.reserve(truth.post_ids.size());
    for (std::size_t i = 0; i < truth.post_ids.size(); ++i)
        truth_row.emplace(truth.post_ids[i], i);
    std::vector<std::int32_t> truth_cluster(predicted.post_ids.size());
    for (std::size_t i = 0; i < predicted.post_ids.size(); ++i) {
        auto it = truth_row.find(predicted.post_ids[i]);
        if (it == truth_row.end())
            throw ValidationError("evaluate: post \"" + predicted.post_ids[i] +
                                  "\" missing from truth");
        truth_cluster[i] = truth.cluster[it->second];
    }

    auto group = [](const std::vector<std::int32_t>& labels) {
        std::unordered_map<std::int32_t, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(i);
        return groups;
    };
    auto pair_count = [](std::size_t m) { return m * (m - 1) / 2; };

    auto pred_groups = group(predicted.cluster);
    auto truth_groups = group(truth_cluster);

    EvalMetrics metrics;
    for (const auto& [label, members] : pred_groups)
        metrics.predicted_pairs += pair_count(members.size());
    for (const auto& [label, members] : truth_groups)
        metrics.truth_pairs += pair_count(members.size());

    for (const auto& [label, members] : pred_groups) {
        std::unordered_map<std::int32_t, std::size_t> by_truth;
        for (std::size_t row : members) ++by_truth[truth_cluster[row]];
        for (const auto& [tlabel, count] : by_truth)
            metrics.agreeing_pairs += pair_count(count);
    }

    if (metrics.predicted_pairs == 0) {
        metrics.pair_precision = 1.0;
        metrics.vacuous_precision = true;
    } else {
        metrics.pair_precision = static_cast<double>(metrics.agreeing_pairs) /
                                 static_cast<double>(metrics.predicted_pairs);
    }
    metrics.pair_recall = metrics.truth_pairs == 0
                              ? 1.0
                              : static_cast<double>(metrics.agreeing_pairs) /
                                    static_cast<double>(metrics.truth_pairs);
    double pr = metrics.pair_precision + metrics.pair_recall;
    metrics.pair_f1 = pr > 0 ? 2.0 * metrics.pair_precision * metrics.pair_recall / pr : 0.0;

    // originator accuracy over true multi-post clusters
    std::unordered_map<std::int32_t, std::size_t> pred_originator;  // cluster -> row
    for (std::size_t row = 0; row < predicted.post_ids.size(); ++row) {
        if (predicted.is_originator[row]) pred_originator.emplace(predicted.cluster[row], row);
    }
    std::size_t correct = 0;
    for (const auto& [tlabel, members] : truth_groups) {
        if (members.size() < 2) continue;
        ++metrics.truth_multi_clusters;
        std::unordered_map<std::int32_t, std::size_t> overlap;
        for (std::size_t row : members) ++overlap[predicted.cluster[row]];
        std::int32_t best_pred = -1;
        std::size_t best_count = 0;
        for (const auto& [plabel, count] : overlap) {
            if (count > best_count || (count == best_count && plabel < best_pred)) {
                best_pred = plabel;
                best_count = count;
            }
        }
        // true originator post id within this truth cluster
        std::string true_originator;
        for (std::size_t row : members) {
            auto it = truth_row.find(predicted.post_ids[row]);
            if (it != truth_row.end() && truth.is_originator[it->second]) {
                true_originator = predicted.post_ids[row];
                break;
            }
        }
        if (true_originator.empty()) continue;
        auto it = pred_originator.find(best_pred);
        if (it != pred_originator.end() && predicted.post_ids[it->second] == true_originator)
            ++correct;
    }
    metrics.originator_accuracy =
        metrics.truth_multi_clusters == 0
            ? 1.0
            : static_cast<double>(correct) / static_cast<double>(metrics.truth_multi_clusters);
    return metrics;
}

}  // namespace newsflow
