#include "newsflow/graph.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "newsflow/errors.hpp"
#include "newsflow/io.hpp"

namespace newsflow {

using nlohmann::json;

const InteractionProfile* InteractionGraph::find(std::string_view account_id) const {
    auto it = std::lower_bound(
        profiles.begin(), profiles.end(), account_id,
        [](const InteractionProfile& p, std::string_view id) { return p.account_id < id; });
    if (it == profiles.end() || it->account_id != account_id) return nullptr;
    return &*it;
}

InteractionGraph build_interaction_graph(const AttributionResult& attribution,
                                         const Corpus& corpus) {
    InteractionGraph graph;
    graph.profiles.resize(corpus.accounts.size());
    for (std::size_t a = 0; a < corpus.accounts.size(); ++a)
        graph.profiles[a].account_id = corpus.accounts[a].id;  // accounts already sorted

    auto profile_of = [&](std::int32_t post_index) -> InteractionProfile& {
        return graph.profiles[static_cast<std::size_t>(
            corpus.posts[static_cast<std::size_t>(post_index)].account_index)];
    };

    for (const ReplicaCluster& cluster : attribution.clusters) {
        InteractionProfile& origin = profile_of(cluster.originator_post);
        origin.self_count += 1;
        for (std::int32_t p : cluster.post_indices) {
            if (p == cluster.originator_post) continue;
            InteractionProfile& consumer = profile_of(p);
            if (consumer.account_id == origin.account_id) {
                origin.self_count += 1;  // A->A replica folds into SelfLink
            } else {
                origin.dispersed[consumer.account_id] += 1;
                consumer.acquired[origin.account_id] += 1;
            }
        }
    }

    for (InteractionProfile& profile : graph.profiles) {
        std::int64_t disp = 0, acq = 0;
        for (const auto& [id, c] : profile.dispersed) disp += c;
        for (const auto& [id, c] : profile.acquired) acq += c;
        profile.in_total = profile.self_count + disp + acq;
        if (profile.in_total > 0) {
            double in = static_cast<double>(profile.in_total);
            profile.w_self = static_cast<double>(profile.self_count) / in;
            profile.w_dispersed = static_cast<double>(disp) / in;
            profile.w_acquired = static_cast<double>(acq) / in;
        }
        for (const auto& [consumer, count] : profile.dispersed)
            graph.edges.push_back({profile.account_id, consumer, count});
    }
    // profiles are id-sorted and map iteration is ordered, so edges already
    // come out sorted by (origin, consumer)
    return graph;
}

std::string_view role_name(Role role) {
    switch (role) {
        case Role::SelfOriginator: return "SelfOriginator";
        case Role::Provider: return "Provider";
        case Role::Consumer: return "Consumer";
    }
    return "";
}

std::vector<Role> classify_roles(const InteractionProfile& profile,
                                 const RoleThresholds& thresholds) {
    std::vector<Role> roles;
    if (profile.in_total <= 0) return roles;
    if (profile.w_self > thresholds.self) roles.push_back(Role::SelfOriginator);
    if (profile.w_dispersed > thresholds.dispersed) roles.push_back(Role::Provider);
    if (profile.w_acquired > thresholds.acquired) roles.push_back(Role::Consumer);
    return roles;
}

TopInteractions top_interactions(const InteractionGraph& graph, std::size_t k) {
    if (k < 1) throw ValidationError("top_interactions: k must be >= 1");
    TopInteractions top;

    std::vector<const InteractionProfile*> by_in;
    for (const auto& p : graph.profiles) by_in.push_back(&p);
    std::sort(by_in.begin(), by_in.end(), [](const auto* x, const auto* y) {
        if (x->in_total != y->in_total) return x->in_total > y->in_total;
        return x->account_id < y->account_id;
    });
    for (std::size_t i = 0; i < std::min(k, by_in.size()); ++i)
        top.accounts.push_back({by_in[i]->account_id, by_in[i]->in_total});

    std::vector<ChordEdge> edges = graph.edges;
    std::sort(edges.begin(), edges.end(), [](const ChordEdge& x, const ChordEdge& y) {
        if (x.count != y.count) return x.count > y.count;
        return std::tie(x.origin, x.consumer) < std::tie(y.origin, y.consumer);
    });
    for (std::size_t i = 0; i < std::min(k, edges.size()); ++i) {
        const InteractionProfile* consumer = graph.find(edges[i].consumer);
        double share = 0;
        if (consumer && consumer->in_total > 0)
            share = static_cast<double>(edges[i].count) /
                    static_cast<double>(consumer->in_total);
        top.edges.push_back({edges[i].origin, edges[i].consumer, edges[i].count, share});
    }
    return top;
}

void write_chord(std::ostream& out, const InteractionGraph& graph) {
    for (const ChordEdge& e : graph.edges) {
        json rec{{"origin", e.origin}, {"consumer", e.consumer}, {"count", e.count}};
        out << rec.dump() << '\n';
    }
    for (const InteractionProfile& p : graph.profiles) {
        json rec{{"account", p.account_id},
                 {"in_total", p.in_total},
                 {"w_self", p.w_self},
                 {"w_dispersed", p.w_dispersed},
                 {"w_acquired", p.w_acquired}};
        out << rec.dump() << '\n';
    }
}

void export_chord(const InteractionGraph& graph, const std::filesystem::path& path) {
    std::ostringstream buf;
    write_chord(buf, graph);
    atomic_write(path, buf.str());
}

void write_role_csv(std::ostream& out, const InteractionGraph& graph,
                    const RoleThresholds& thresholds) {
    out << "account,w_self,w_dispersed,w_acquired,in_total,roles\n";
    for (const InteractionProfile& p : graph.profiles) {
        out << p.account_id << ',' << format_fixed(p.w_self, 6) << ','
            << format_fixed(p.w_dispersed, 6) << ',' << format_fixed(p.w_acquired, 6) << ','
            << p.in_total << ',';
        auto roles = classify_roles(p, thresholds);
        for (std::size_t i = 0; i < roles.size(); ++i) {
            if (i) out << ';';
            out << role_name(roles[i]);
        }
        out << '\n';
    }
}

}  // namespace newsflow
