#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "newsflow/errors.hpp"
#include "newsflow/graph.hpp"
#include "newsflow/profile.hpp"
#include "newsflow/synth.hpp"

using namespace newsflow;

namespace {

Corpus two_account_corpus() {
    Corpus corpus;
    corpus.accounts.push_back({"aaa", "A", {PlatformKind::Twitter, ""}, 10});
    corpus.accounts.push_back({"bbb", "B", {PlatformKind::Twitter, ""}, 20});
    auto add = [&](const char* id, const char* acct, std::int64_t ts) {
        Post p;
        p.id = id;
        p.account_id = acct;
        p.account_index = corpus.account_index(acct);
        p.text = "text body of the post";
        p.timestamp = ts;
        corpus.posts.push_back(std::move(p));
    };
    add("p0", "aaa", 1000);
    add("p1", "bbb", 2000);
    return corpus;
}

AttributionResult manual_attribution(std::vector<std::vector<std::int32_t>> clusters,
                                     std::vector<std::int32_t> originators,
                                     const Corpus& corpus) {
    AttributionResult result;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        ReplicaCluster cluster;
        cluster.cluster_id = "c" + std::to_string(c);
        cluster.post_indices = clusters[c];
        cluster.originator_post = originators[c];
        cluster.originator_account =
            corpus.posts[static_cast<std::size_t>(originators[c])].account_id;
        result.clusters.push_back(std::move(cluster));
    }
    result.replica_threshold = 0.8;
    return result;
}

InteractionProfile profile_from_weights(double w_self, double w_dispersed, double w_acquired,
                                        std::int64_t scale = 1000) {
    InteractionProfile p;
    p.account_id = "x";
    p.self_count = static_cast<std::int64_t>(w_self * static_cast<double>(scale));
    std::int64_t disp = static_cast<std::int64_t>(w_dispersed * static_cast<double>(scale));
    std::int64_t acq = static_cast<std::int64_t>(w_acquired * static_cast<double>(scale));
    if (disp > 0) p.dispersed["other"] = disp;
    if (acq > 0) p.acquired["other"] = acq;
    p.in_total = p.self_count + disp + acq;
    double in = static_cast<double>(p.in_total);
    p.w_self = static_cast<double>(p.self_count) / in;
    p.w_dispersed = static_cast<double>(disp) / in;
    p.w_acquired = static_cast<double>(acq) / in;
    return p;
}

}  // namespace

TEST_CASE("all singleton clusters: pure self weight, no edges") {
    Corpus corpus = two_account_corpus();
    auto attribution = manual_attribution({{0}, {1}}, {0, 1}, corpus);
    InteractionGraph graph = build_interaction_graph(attribution, corpus);
    CHECK(graph.edges.empty());
    for (const auto& profile : graph.profiles) {
        CHECK(profile.w_self == 1.0);
        CHECK(profile.in_total == 1);
    }
}

TEST_CASE("hand double-entry: one replica from A to B") {
    Corpus corpus = two_account_corpus();
    auto attribution = manual_attribution({{0, 1}}, {0}, corpus);
    InteractionGraph graph = build_interaction_graph(attribution, corpus);

    const InteractionProfile* a = graph.find("aaa");
    const InteractionProfile* b = graph.find("bbb");
    REQUIRE(a != nullptr);
    REQUIRE(b != nullptr);
    CHECK(a->self_count == 1);
    CHECK(a->dispersed.at("bbb") == 1);
    CHECK(a->in_total == 2);
    CHECK(a->w_dispersed == doctest::Approx(0.5));
    CHECK(b->acquired.at("aaa") == 1);
    CHECK(b->in_total == 1);
    CHECK(b->w_acquired == 1.0);
    REQUIRE(graph.edges.size() == 1);
    CHECK(graph.edges[0].origin == "aaa");
    CHECK(graph.edges[0].consumer == "bbb");
    CHECK(graph.edges[0].count == 1);
}

TEST_CASE("same-account replica folds into SelfLink") {
    Corpus corpus;
    corpus.accounts.push_back({"aaa", "A", {PlatformKind::Twitter, ""}, 10});
    for (int i = 0; i < 2; ++i) {
        Post p;
        p.id = "p" + std::to_string(i);
        p.account_id = "aaa";
        p.account_index = 0;
        p.text = "same story reposted";
        p.timestamp = 1000 + i;
        corpus.posts.push_back(std::move(p));
    }
    auto attribution = manual_attribution({{0, 1}}, {0}, corpus);
    InteractionGraph graph = build_interaction_graph(attribution, corpus);
    const InteractionProfile* a = graph.find("aaa");
    CHECK(a->self_count == 2);  // originator + own replica
    CHECK(a->dispersed.empty());
    CHECK(a->w_self == 1.0);
    CHECK(graph.edges.empty());
}

TEST_CASE("role classification thresholds are strict") {
    RoleThresholds thresholds;
    SUBCASE("self originator above 0.80") {
        auto roles = classify_roles(profile_from_weights(0.85, 0.10, 0.05), thresholds);
        REQUIRE(roles.size() == 1);
        CHECK(roles[0] == Role::SelfOriginator);
    }
    SUBCASE("provider above 0.70") {
        auto roles = classify_roles(profile_from_weights(0.05, 0.95, 0.0), thresholds);
        REQUIRE(roles.size() == 1);
        CHECK(roles[0] == Role::Provider);
    }
    SUBCASE("paper-shaped consumer profile") {
        // w_self = 0.056, w_dispersed = 0, w_acquired = 0.944
        auto roles = classify_roles(profile_from_weights(0.056, 0.0, 0.944), thresholds);
        REQUIRE(roles.size() == 1);
        CHECK(roles[0] == Role::Consumer);
    }
    SUBCASE("no strong role") {
        CHECK(classify_roles(profile_from_weights(0.4, 0.3, 0.3), thresholds).empty());
    }
    SUBCASE("exactly at the threshold is not enough") {
        CHECK(classify_roles(profile_from_weights(0.80, 0.10, 0.10), thresholds).empty());
        CHECK(classify_roles(profile_from_weights(0.20, 0.70, 0.10), thresholds).empty());
        CHECK(classify_roles(profile_from_weights(0.20, 0.10, 0.70), thresholds).empty());
    }
    SUBCASE("zero interactions yield no roles") {
        InteractionProfile empty;
        empty.account_id = "idle";
        CHECK(classify_roles(empty, thresholds).empty());
    }
}

TEST_CASE("role classification is scale invariant") {
    RoleThresholds thresholds;
    for (std::int64_t scale : {1000, 2000, 3000, 7000}) {
        auto base = classify_roles(profile_from_weights(0.85, 0.10, 0.05, scale), thresholds);
        REQUIRE(base.size() == 1);
        CHECK(base[0] == Role::SelfOriginator);
    }
}

TEST_CASE("top interactions") {
    Corpus corpus = two_account_corpus();
    auto attribution = manual_attribution({{0, 1}}, {0}, corpus);
    InteractionGraph graph = build_interaction_graph(attribution, corpus);

    TopInteractions top = top_interactions(graph, 5);
    REQUIRE(top.accounts.size() == 2);
    CHECK(top.accounts[0].account_id == "aaa");  // In = 2 beats In = 1
    REQUIRE(top.edges.size() == 1);
    CHECK(top.edges[0].origin == "aaa");
    CHECK(top.edges[0].count == 1);
    CHECK(top.edges[0].share_of_consumer_in == 1.0);  // 1 of B's In = 1

    CHECK_THROWS_AS(top_interactions(graph, 0), ValidationError);
}

TEST_CASE("top interactions on edgeless graph") {
    Corpus corpus = two_account_corpus();
    auto attribution = manual_attribution({{0}, {1}}, {0, 1}, corpus);
    InteractionGraph graph = build_interaction_graph(attribution, corpus);
    TopInteractions top = top_interactions(graph, 3);
    CHECK(top.edges.empty());
    CHECK(top.accounts.size() == 2);
}

TEST_CASE("chord export layout and determinism") {
    Corpus corpus = two_account_corpus();
    auto attribution = manual_attribution({{0, 1}}, {0}, corpus);
    InteractionGraph graph = build_interaction_graph(attribution, corpus);

    std::ostringstream first, second;
    write_chord(first, graph);
    write_chord(second, graph);
    CHECK(first.str() == second.str());

    // 1 edge record + 2 node records
    std::istringstream in(first.str());
    std::string line;
    std::size_t edge_records = 0, node_records = 0;
    while (std::getline(in, line)) {
        if (line.find("\"origin\"") != std::string::npos) ++edge_records;
        if (line.find("\"account\"") != std::string::npos) ++node_records;
    }
    CHECK(edge_records == 1);
    CHECK(node_records == 2);
}

TEST_CASE("singleton-only graph exports zero edge records") {
    Corpus corpus = two_account_corpus();
    auto attribution = manual_attribution({{0}, {1}}, {0, 1}, corpus);
    InteractionGraph graph = build_interaction_graph(attribution, corpus);
    std::ostringstream out;
    write_chord(out, graph);
    CHECK(out.str().find("\"origin\"") == std::string::npos);
    CHECK(out.str().find("\"account\"") != std::string::npos);
}

TEST_CASE("role csv header and rows") {
    Corpus corpus = two_account_corpus();
    auto attribution = manual_attribution({{0, 1}}, {0}, corpus);
    InteractionGraph graph = build_interaction_graph(attribution, corpus);
    std::ostringstream out;
    write_role_csv(out, graph);
    std::string csv = out.str();
    CHECK(csv.find("account,w_self,w_dispersed,w_acquired,in_total,roles\n") == 0);
    CHECK(csv.find("bbb,0.000000,0.000000,1.000000,1,Consumer\n") != std::string::npos);
}

TEST_CASE("pipeline graph satisfies double-entry against a direct tally") {
    SynthConfig config;
    config.accounts = 8;
    config.posts_per_account = 24;
    config.seed = 321;
    SynthCorpus synth = generate_corpus(config);
    PairwiseOptions opt;
    auto edges = pairwise_similarities(synth.corpus, opt);
    AttributionResult attribution = attribute(synth.corpus, edges, 2, 300);
    InteractionGraph graph = build_interaction_graph(attribution, synth.corpus);

    // direct per-cluster tally, independent of the graph fold
    std::int64_t replicas_cross = 0, replicas_same = 0;
    for (const auto& cluster : attribution.clusters) {
        const auto& origin_acct =
            synth.corpus.posts[static_cast<std::size_t>(cluster.originator_post)].account_id;
        for (std::int32_t p : cluster.post_indices) {
            if (p == cluster.originator_post) continue;
            if (synth.corpus.posts[static_cast<std::size_t>(p)].account_id == origin_acct) {
                ++replicas_same;
            } else {
                ++replicas_cross;
            }
        }
    }

    std::int64_t total_dispersed = 0, total_acquired = 0, total_self = 0, total_edges = 0;
    for (const auto& profile : graph.profiles) {
        total_self += profile.self_count;
        for (const auto& [id, c] : profile.dispersed) total_dispersed += c;
        for (const auto& [id, c] : profile.acquired) total_acquired += c;
        if (profile.in_total > 0) {
            CHECK(profile.w_self + profile.w_dispersed + profile.w_acquired ==
                  doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    for (const auto& e : graph.edges) total_edges += e.count;

    CHECK(total_dispersed == replicas_cross);
    CHECK(total_acquired == replicas_cross);
    CHECK(total_edges == replicas_cross);
    CHECK(total_self ==
          static_cast<std::int64_t>(attribution.clusters.size()) + replicas_same);
}
