#ifndef NEWSFLOW_GRAPH_HPP
#define NEWSFLOW_GRAPH_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "newsflow/attribution.hpp"
#include "newsflow/corpus.hpp"

namespace newsflow {

// Double-entry interaction bookkeeping for one account. `dispersed` maps a
// consuming account to the number of that account's replica posts this
// account originated; `acquired` is the mirror image.
struct InteractionProfile {
    std::string account_id;
    std::int64_t self_count = 0;
    std::map<std::string, std::int64_t> dispersed;
    std::map<std::string, std::int64_t> acquired;
    std::int64_t in_total = 0;
    double w_self = 0, w_dispersed = 0, w_acquired = 0;
};

struct ChordEdge {
    std::string origin;
    std::string consumer;
    std::int64_t count = 0;
};

struct InteractionGraph {
    std::vector<InteractionProfile> profiles;  // sorted by account id, all accounts
    std::vector<ChordEdge> edges;              // nonzero dispersed entries, by (origin, consumer)

    const InteractionProfile* find(std::string_view account_id) const;
};

// Folds the attribution partition into per-account link counts. Each
// cluster credits its originator's account with one SelfLink; every other
// post becomes a dispersed/acquired pair, except replicas by the
// originator's own account which fold into SelfLink (A->A).
InteractionGraph build_interaction_graph(const AttributionResult& attribution,
                                         const Corpus& corpus);

enum class Role { SelfOriginator, Provider, Consumer };

std::string_view role_name(Role role);

struct RoleThresholds {
    double self = 0.80;
    double dispersed = 0.70;
    double acquired = 0.70;
};

// Strict-inequality threshold predicates; an account may hold several roles
// or none. Zero interactions yield the empty set.
std::vector<Role> classify_roles(const InteractionProfile& profile,
                                 const RoleThresholds& thresholds = {});

struct TopInteractions {
    struct AccountIn {
        std::string account_id;
        std::int64_t in_total = 0;
    };
    struct EdgeShare {
        std::string origin;
        std::string consumer;
        std::int64_t count = 0;
        double share_of_consumer_in = 0;  // count / consumer's In
    };
    std::vector<AccountIn> accounts;  // k highest-In accounts
    std::vector<EdgeShare> edges;     // k heaviest directed edges
};

TopInteractions top_interactions(const InteractionGraph& graph, std::size_t k);

// Chord data as newline-delimited records: edges {origin, consumer, count}
// then nodes {account, in_total, w_self, w_dispersed, w_acquired}, sorted by
// account id. Byte-deterministic.
void write_chord(std::ostream& out, const InteractionGraph& graph);
void export_chord(const InteractionGraph& graph, const std::filesystem::path& path);

// CSV: account,w_self,w_dispersed,w_acquired,in_total,roles
void write_role_csv(std::ostream& out, const InteractionGraph& graph,
                    const RoleThresholds& thresholds = {});

}  // namespace newsflow

#endif  // NEWSFLOW_GRAPH_HPP
