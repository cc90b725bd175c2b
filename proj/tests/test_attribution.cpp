#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

#include "newsflow/attribution.hpp"
#include "newsflow/errors.hpp"
#include "newsflow/synth.hpp"

using namespace newsflow;

namespace {

// Exhaustive-enumeration oracle. Walks every boundary placement instead of
// the dynamic program, evaluating each partition with the same prefix-sum
// cost expression and the same right-to-left fold, so the optimal SDCM
// matches the implementation bit for bit.
struct OracleBest {
    double sdcm = 0;
    std::vector<std::size_t> class_sizes;
};

OracleBest enumerate_partitions(std::vector<double> values, int k) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    std::vector<double> sum(n + 1, 0.0), sumsq(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        sum[i + 1] = sum[i] + values[i];
        sumsq[i + 1] = sumsq[i] + values[i] * values[i];
    }
    auto cost = [&](std::size_t i, std::size_t j) {
        double s = sum[j + 1] - sum[i];
        double q = sumsq[j + 1] - sumsq[i];
        double len = static_cast<double>(j - i + 1);
        return q - (s * s) / len;
    };

    OracleBest best;
    best.sdcm = std::numeric_limits<double>::infinity();
    // boundaries[q] = index of the last element of class q
    std::vector<std::size_t> boundaries(static_cast<std::size_t>(k - 1));
    auto evaluate = [&]() {
        double acc = cost(boundaries.back() + 1, n - 1);
        for (std::size_t q = boundaries.size(); q-- > 0;) {
            std::size_t lo = q == 0 ? 0 : boundaries[q - 1] + 1;
            acc = cost(lo, boundaries[q]) + acc;
        }
        std::vector<std::size_t> sizes;
        std::size_t prev = 0;
        for (std::size_t b : boundaries) {
            sizes.push_back(b - prev + 1);
            prev = b + 1;
        }
        sizes.push_back(n - prev);
        if (acc < best.sdcm || (acc == best.sdcm && sizes < best.class_sizes)) {
            best.sdcm = acc;
            best.class_sizes = sizes;
        }
    };
    // nested choice of ascending boundaries
    std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t level,
                                                                std::size_t from) {
        if (level == boundaries.size()) {
            evaluate();
            return;
        }
        // leave room for the remaining classes
        for (std::size_t b = from; b + (boundaries.size() - level) < n; ++b) {
            boundaries[level] = b;
            recurse(level + 1, b + 1);
        }
    };
    recurse(0, 0);
    return best;
}

}  // namespace

TEST_CASE("jenks separates two obvious groups") {
    std::vector<double> v{1, 1, 1, 10, 10, 10};
    JenksBreaks jb = jenks_breaks(v, 2);
    REQUIRE(jb.breaks.size() == 1);
    CHECK(jb.breaks[0] == doctest::Approx(5.5));
    CHECK(jb.gvf == doctest::Approx(1.0));
    CHECK(jb.sdcm == 0.0);
    CHECK(jb.class_sizes == std::vector<std::size_t>{3, 3});
}

TEST_CASE("jenks isolates the outlier") {
    std::vector<double> v{1, 2, 3, 4, 100};
    JenksBreaks jb = jenks_breaks(v, 2);
    CHECK(jb.class_sizes == std::vector<std::size_t>{4, 1});
    CHECK(jb.breaks[0] == doctest::Approx(52.0));
    // brute force over the 4 split points agrees
    OracleBest oracle = enumerate_partitions(v, 2);
    CHECK(jb.sdcm == oracle.sdcm);
    CHECK(jb.class_sizes == oracle.class_sizes);
}

TEST_CASE("jenks error cases") {
    CHECK_THROWS_AS(jenks_breaks(std::vector<double>{5, 5, 5}, 2), ValidationError);
    CHECK_THROWS_AS(jenks_breaks(std::vector<double>{1.0}, 2), ValidationError);
    CHECK_THROWS_AS(jenks_breaks(std::vector<double>{1, 2, 3}, 1), ValidationError);
    CHECK_THROWS_AS(jenks_breaks(std::vector<double>{1, 2}, 3), ValidationError);
}

TEST_CASE("jenks tie-break picks the lexicographically smallest sizes") {
    // both {0},{1,2} and {0,1},{2} cost 0.5; sizes (1,2) < (2,1)
    std::vector<double> v{0, 1, 2};
    JenksBreaks jb = jenks_breaks(v, 2);
    CHECK(jb.class_sizes == std::vector<std::size_t>{1, 2});
    CHECK(jb.breaks[0] == doctest::Approx(0.5));
}

TEST_CASE("jenks equals exhaustive enumeration") {
    std::mt19937_64 rng(2024);
    auto uniform = [&rng](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    for (int trial = 0; trial < 300; ++trial) {
        int k = 2 + static_cast<int>(rng() % 2);
        std::size_t n = static_cast<std::size_t>(k) + rng() % (12 - static_cast<std::size_t>(k));
        std::vector<double> v;
        for (std::size_t i = 0; i < n; ++i) {
            // mix of clustered and spread values, occasional duplicates
            double x = (rng() % 2 == 0) ? uniform(0, 1) : uniform(10, 11);
            v.push_back(x);
            if (rng() % 5 == 0 && v.size() < n) v.push_back(x);
        }
        v.resize(n);
        if (std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; })) continue;

        JenksBreaks jb = jenks_breaks(v, k);
        OracleBest oracle = enumerate_partitions(v, k);
        CHECK(jb.sdcm == oracle.sdcm);  // exact, not approximate
        CHECK(jb.class_sizes == oracle.class_sizes);
        CHECK(jb.gvf >= 0.0);
        CHECK(jb.gvf <= 1.0);
        REQUIRE(jb.breaks.size() == static_cast<std::size_t>(k - 1));
        CHECK(std::is_sorted(jb.breaks.begin(), jb.breaks.end()));
    }
}

TEST_CASE("gvf does not decrease with k") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> v;
        for (int i = 0; i < 24; ++i)
            v.push_back(static_cast<double>(rng() % 1000) / 100.0);
        JenksBreaks k2 = jenks_breaks(v, 2);
        JenksBreaks k3 = jenks_breaks(v, 3);
        JenksBreaks k4 = jenks_breaks(v, 4);
        CHECK(k3.gvf >= k2.gvf);
        CHECK(k4.gvf >= k3.gvf);
    }
}

namespace {

Corpus tiny_corpus(const std::vector<std::pair<std::string, std::int64_t>>& account_and_time,
                   const std::vector<std::string>& texts = {}) {
    Corpus corpus;
    std::vector<std::string> ids;
    for (const auto& [acct, ts] : account_and_time) ids.push_back(acct);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (const std::string& id : ids)
        corpus.accounts.push_back({id, id, {PlatformKind::Twitter, ""}, 100});
    std::size_t width = std::to_string(account_and_time.size()).size();
    for (std::size_t i = 0; i < account_and_time.size(); ++i) {
        Post p;
        std::string num = std::to_string(i);
        p.id = "p" + std::string(width - num.size(), '0') + num;
        p.account_id = account_and_time[i].first;
        p.account_index = corpus.account_index(p.account_id);
        p.timestamp = account_and_time[i].second;
        p.text = i < texts.size() ? texts[i] : "placeholder text body";
        corpus.posts.push_back(std::move(p));
    }
    return corpus;
}

}  // namespace

TEST_CASE("cluster_replicas connects transitively") {
    // a-b and b-c above threshold -> {a,b,c}
    std::vector<ScoredPair> edges{{0, 1, 0.9}, {1, 2, 0.9}};
    auto clusters = cluster_replicas(edges, 0.8, 4);
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0] == std::vector<std::int32_t>{0, 1, 2});
    CHECK(clusters[1] == std::vector<std::int32_t>{3});
}

TEST_CASE("cluster_replicas with no edges yields singletons") {
    auto clusters = cluster_replicas({}, 0.5, 3);
    REQUIRE(clusters.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(clusters[i].size() == 1);
    }
}

TEST_CASE("cluster_replicas keeps disjoint pairs apart") {
    std::vector<ScoredPair> edges{{0, 1, 0.95}, {2, 3, 0.9}, {1, 4, 0.3}};
    auto clusters = cluster_replicas(edges, 0.8, 6);
    // two 2-clusters + singletons 4, 5 (the 0.3 edge is below threshold)
    REQUIRE(clusters.size() == 4);
    CHECK(clusters[0] == std::vector<std::int32_t>{0, 1});
    CHECK(clusters[1] == std::vector<std::int32_t>{2, 3});
    CHECK(clusters[2] == std::vector<std::int32_t>{4});
    CHECK(clusters[3] == std::vector<std::int32_t>{5});
}

TEST_CASE("cluster_replicas output is a partition") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 10 + rng() % 40;
        std::vector<ScoredPair> edges;
        for (int e = 0; e < 30; ++e) {
            auto a = static_cast<std::int32_t>(rng() % n);
            auto b = static_cast<std::int32_t>(rng() % n);
            if (a == b) continue;
            edges.push_back({std::min(a, b), std::max(a, b),
                             static_cast<double>(rng() % 100) / 100.0});
        }
        auto clusters = cluster_replicas(edges, 0.5, n);
        std::vector<int> seen(n, 0);
        for (const auto& members : clusters) {
            for (std::int32_t p : members) ++seen[static_cast<std::size_t>(p)];
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("circadian profile") {
    SUBCASE("point mass keeps every bin positive") {
        std::vector<std::int64_t> stamps(5, 9 * 3600);  // hour 9
        CircadianProfile c = build_circadian(stamps);
        auto max_it = std::max_element(c.bins.begin(), c.bins.end());
        CHECK(std::distance(c.bins.begin(), max_it) == 9);
        for (double b : c.bins) CHECK(b > 0.0);
    }
    SUBCASE("uniform posts give uniform bins") {
        std::vector<std::int64_t> stamps;
        for (int h = 0; h < 24; ++h) stamps.push_back(h * 3600);
        CircadianProfile c = build_circadian(stamps);
        for (double b : c.bins) CHECK(b == doctest::Approx(1.0 / 24.0));
    }
    SUBCASE("hand smoothing arithmetic") {
        // posts at hours {0, 0, 12}, alpha = 0.5: total = 3 + 12 = 15
        std::vector<std::int64_t> stamps{0, 86400, 12 * 3600};
        CircadianProfile c = build_circadian(stamps);
        CHECK(c.bins[0] == doctest::Approx(2.5 / 15.0));
        CHECK(c.bins[12] == doctest::Approx(1.5 / 15.0));
        CHECK(c.bins[7] == doctest::Approx(0.5 / 15.0));
    }
    SUBCASE("bins sum to one") {
        std::mt19937_64 rng(8);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<std::int64_t> stamps;
            std::size_t n = 1 + rng() % 50;
            for (std::size_t i = 0; i < n; ++i)
                stamps.push_back(static_cast<std::int64_t>(rng() % 10000000));
            CircadianProfile c = build_circadian(stamps);
            double total = std::accumulate(c.bins.begin(), c.bins.end(), 0.0);
            CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("zero posts error") {
        CHECK_THROWS_AS(build_circadian({}), ValidationError);
    }
}

TEST_CASE("assign_originator") {
    SUBCASE("unique earliest wins") {
        std::int64_t t = 1600000000;
        Corpus corpus = tiny_corpus({{"a", t}, {"b", t + 3600}, {"c", t + 7200}});
        auto circadians = account_circadians(corpus);
        std::vector<std::int32_t> cluster{0, 1, 2};
        CHECK(assign_originator(cluster, corpus, circadians, 120) == 0);
    }
    SUBCASE("circadian bin decides within epsilon") {
        // two candidates 30 s apart; account "night" always posts at hour 2,
        // account "spread" posts all over the clock
        constexpr std::int64_t kMidnight = 1599955200;  // multiple of 86400
        std::int64_t t = kMidnight + 2 * 3600;
        std::vector<std::pair<std::string, std::int64_t>> posts;
        posts.push_back({"spread", t});           // candidate, hour 2
        posts.push_back({"night", t + 30});       // candidate, hour 2
        for (int i = 0; i < 23; ++i)              // spread's history: every hour
            posts.push_back({"spread", kMidnight + (i + 1) * 86400 + i * 3600});
        for (int i = 0; i < 23; ++i)              // night's history: always hour 2
            posts.push_back({"night", kMidnight + (i + 1) * 86400 + 2 * 3600});
        Corpus corpus = tiny_corpus(posts);
        auto circadians = account_circadians(corpus);
        std::vector<std::int32_t> cluster{0, 1};
        // night's bin at hour 2 is 24.5/36; spread's is 2.5/36
        CHECK(assign_originator(cluster, corpus, circadians, 120) == 1);
        // with a tiny epsilon the earlier post wins regardless
        CHECK(assign_originator(cluster, corpus, circadians, 10) == 0);
    }
    SUBCASE("singleton cluster returns its only post") {
        Corpus corpus = tiny_corpus({{"a", 1600000000}});
        auto circadians = account_circadians(corpus);
        std::vector<std::int32_t> cluster{0};
        CHECK(assign_originator(cluster, corpus, circadians, 300) == 0);
    }
    SUBCASE("account id then post id break exact ties") {
        std::int64_t t = 1600000000;
        Corpus corpus = tiny_corpus({{"b", t}, {"a", t}});
        auto circadians = account_circadians(corpus);
        std::vector<std::int32_t> cluster{0, 1};
        CHECK(assign_originator(cluster, corpus, circadians, 300) == 1);  // account "a"
    }
}

TEST_CASE("attribute: planted copies form one cluster") {
    // 10 exact copies of one source + 30 unrelated posts
    std::vector<std::pair<std::string, std::int64_t>> posts;
    std::vector<std::string> texts;
    std::int64_t t = 1600000000;
    for (int i = 0; i < 11; ++i) {
        posts.push_back({i == 0 ? "src" : "copy" + std::to_string(i), t + i * 3600});
        texts.push_back("the one story every outlet keeps repeating verbatim");
    }
    std::mt19937_64 rng(4242);
    auto words = synth_word_list();
    for (int i = 0; i < 30; ++i) {
        posts.push_back({"noise", t + 100000 + i});
        std::string text;
        for (int w = 0; w < 10; ++w) {
            if (w) text.push_back(' ');
            text += words[rng() % words.size()];
        }
        texts.push_back(text);
    }
    Corpus corpus = tiny_corpus(posts, texts);
    PairwiseOptions opt;
    opt.floor = 0.5;
    auto edges = pairwise_similarities(corpus, opt);
    AttributionResult result = attribute(corpus, edges, 2, 300);

    std::size_t eleven = 0;
    for (const auto& cluster : result.clusters) {
        if (cluster.post_indices.size() == 11) {
            ++eleven;
            CHECK(corpus.posts[static_cast<std::size_t>(cluster.originator_post)].account_id ==
                  "src");
        } else {
            CHECK(cluster.post_indices.size() == 1);
        }
    }
    CHECK(eleven == 1);
    CHECK(result.clusters.size() == 31);
}

TEST_CASE("attribute: zero edges means all singletons") {
    Corpus corpus = tiny_corpus({{"a", 1000}, {"b", 2000}, {"c", 3000}},
                                {"aaaa bbbb cccc", "dddd eeee ffff", "gggg hhhh iiii"});
    PairwiseOptions opt;
    opt.floor = 0.5;
    auto edges = pairwise_similarities(corpus, opt);
    REQUIRE(edges.empty());
    AttributionResult result = attribute(corpus, edges, 2, 300);
    CHECK(result.clusters.size() == 3);
    CHECK(result.threshold_fallback);
    for (const auto& cluster : result.clusters) {
        CHECK(cluster.post_indices.size() == 1);
        CHECK(cluster.originator_post == cluster.post_indices[0]);
    }
}

TEST_CASE("attribute: bimodal scores put the threshold in the gap") {
    // synthetic edge list; the posts only anchor ids and timestamps
    std::vector<std::pair<std::string, std::int64_t>> posts;
    for (int i = 0; i < 20; ++i) posts.push_back({"acct", 1600000000 + i});
    Corpus corpus = tiny_corpus(posts);
    std::mt19937_64 rng(11);
    std::vector<ScoredPair> edges;
    for (int i = 0; i < 40; ++i) {
        auto a = static_cast<std::int32_t>(rng() % 20);
        auto b = static_cast<std::int32_t>(rng() % 20);
        if (a == b) continue;
        double noise = 0.25 + static_cast<double>(rng() % 100) / 1000.0;   // ~0.3
        double high = 0.90 + static_cast<double>(rng() % 100) / 1000.0;    // ~0.95
        edges.push_back({std::min(a, b), std::max(a, b), (i % 2 == 0) ? noise : high});
    }
    AttributionResult result = attribute(corpus, edges, 2, 300);
    CHECK_FALSE(result.threshold_fallback);
    CHECK(result.replica_threshold > 0.3);
    CHECK(result.replica_threshold < 0.95);
}

TEST_CASE("attribute: originator timestamp within epsilon of cluster minimum") {
    SynthConfig config;
    config.accounts = 10;
    config.posts_per_account = 30;
    config.seed = 99;
    SynthCorpus synth = generate_corpus(config);
    PairwiseOptions opt;
    auto edges = pairwise_similarities(synth.corpus, opt);
    AttributionResult result = attribute(synth.corpus, edges, 2, 300);
    for (const auto& cluster : result.clusters) {
        std::int64_t earliest = std::numeric_limits<std::int64_t>::max();
        for (std::int32_t p : cluster.post_indices)
            earliest = std::min(earliest, synth.corpus.posts[static_cast<std::size_t>(p)].timestamp);
        std::int64_t orig_ts =
            synth.corpus.posts[static_cast<std::size_t>(cluster.originator_post)].timestamp;
        CHECK(orig_ts <= earliest + 300);
    }
}
