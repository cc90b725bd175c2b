#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "newsflow/errors.hpp"
#include "newsflow/profile.hpp"
#include "newsflow/synth.hpp"

using namespace newsflow;

namespace {

// Minimal in-memory corpus for pairwise tests.
Corpus make_corpus(const std::vector<std::string>& texts) {
    Corpus corpus;
    corpus.accounts.push_back({"acct0", "Acct", {PlatformKind::Twitter, ""}, 10});
    std::size_t width = std::to_string(texts.size()).size();
    for (std::size_t i = 0; i < texts.size(); ++i) {
        Post p;
        std::string num = std::to_string(i);
        p.id = "p" + std::string(width - num.size(), '0') + num;
        p.account_id = "acct0";
        p.account_index = 0;
        p.text = texts[i];
        p.timestamp = 1000 + static_cast<std::int64_t>(i);
        corpus.posts.push_back(std::move(p));
    }
    return corpus;
}

std::string random_text(std::mt19937_64& rng, int min_words, int max_words) {
    auto words = synth_word_list();
    int len = min_words + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                               max_words - min_words + 1));
    std::string text;
    for (int i = 0; i < len; ++i) {
        if (i) text.push_back(' ');
        text += words[rng() % words.size()];
    }
    return text;
}

// Reference: dense brute force over the public similarity() path.
std::vector<ScoredPair> dense_reference(const Corpus& corpus, double floor, int n, int L) {
    std::vector<NgramProfile> profiles;
    for (const Post& p : corpus.posts) profiles.push_back(build_profile(p.text, n, L));
    std::vector<ScoredPair> out;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        for (std::size_t j = i + 1; j < profiles.size(); ++j) {
            double s = similarity(profiles[i], profiles[j]);
            if (s >= floor)
                out.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j), s});
        }
    }
    // corpus ids are index-ordered here, so (i, j) is already canonical
    return out;
}

bool same_edges(const std::vector<ScoredPair>& a, const std::vector<ScoredPair>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].a != b[i].a || a[i].b != b[i].b || a[i].score != b[i].score) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("build_profile counts overlapping grams") {
    NgramProfile p = build_profile("aaaa", 2, 10);
    REQUIRE(p.grams.size() == 1);
    CHECK(p.grams[0].first == "aa");
    CHECK(p.grams[0].second == 3);
}

TEST_CASE("build_profile rejects too-short text") {
    CHECK_THROWS_AS(build_profile("ab", 3, 10), ValidationError);
    CHECK_NOTHROW(build_profile("abc", 3, 10));
}

TEST_CASE("build_profile truncates by frequency then gram") {
    NgramProfile p = build_profile("abab", 2, 1);
    REQUIRE(p.grams.size() == 1);
    CHECK(p.grams[0].first == "ab");  // freq 2 beats "ba" freq 1
    CHECK(p.grams[0].second == 2);

    // tie on frequency: lexicographic order decides
    NgramProfile q = build_profile("ab", 2, 1);
    REQUIRE(q.grams.size() == 1);
    CHECK(q.grams[0].first == "ab");
}

TEST_CASE("build_profile lowercases") {
    NgramProfile a = build_profile("News Today", 3, 100);
    NgramProfile b = build_profile("news today", 3, 100);
    CHECK(similarity(a, b) == 1.0);
}

TEST_CASE("similarity examples") {
    NgramProfile p = build_profile("abcd", 2, 10);
    CHECK(similarity(p, p) == 1.0);

    NgramProfile q = build_profile("wxyz", 2, 10);
    CHECK(similarity(p, q) == 0.0);

    // gram sets {ab,bc,cd} vs {ab,bc,ce}
    NgramProfile r = build_profile("abce", 2, 10);
    CHECK(similarity(p, r) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("similarity requires matching n") {
    NgramProfile a = build_profile("abcdef", 2, 10);
    NgramProfile b = build_profile("abcdef", 3, 10);
    CHECK_THROWS_AS(similarity(a, b), ValidationError);
}

TEST_CASE("similarity symmetry and range on random pairs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        NgramProfile a = build_profile(random_text(rng, 3, 12), 3, 100);
        NgramProfile b = build_profile(random_text(rng, 3, 12), 3, 100);
        double ab = similarity(a, b);
        double ba = similarity(b, a);
        CHECK(ab == ba);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
    }
}

TEST_CASE("pairwise examples") {
    SUBCASE("two identical posts above a high floor") {
        Corpus corpus = make_corpus({"same exact text here", "same exact text here"});
        PairwiseOptions opt;
        opt.floor = 0.9;
        auto edges = pairwise_similarities(corpus, opt);
        REQUIRE(edges.size() == 1);
        CHECK(edges[0].score == 1.0);
    }
    SUBCASE("unattainable floor") {
        Corpus corpus = make_corpus({"same exact text here", "same exact text here"});
        PairwiseOptions opt;
        opt.floor = 1.1;
        CHECK(pairwise_similarities(corpus, opt).empty());
    }
    SUBCASE("two identical pairs among four posts") {
        Corpus corpus = make_corpus({"first duplicate text body", "totally different words again",
                                     "first duplicate text body", "totally different words again"});
        PairwiseOptions opt;
        opt.floor = 0.9;
        auto edges = pairwise_similarities(corpus, opt);
        REQUIRE(edges.size() == 2);
        CHECK(edges[0].a == 0);
        CHECK(edges[0].b == 2);
        CHECK(edges[1].a == 1);
        CHECK(edges[1].b == 3);
        // agrees with brute force over all 6 pairs
        CHECK(same_edges(edges, dense_reference(corpus, 0.9, 3, 500)));
    }
}

TEST_CASE("sparse output equals dense brute force on random corpora") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<std::string> texts;
        std::size_t n = 5 + rng() % 46;
        for (std::size_t i = 0; i < n; ++i) {
            // duplicate an earlier post sometimes so edges exist
            if (!texts.empty() && rng() % 4 == 0) {
                texts.push_back(texts[rng() % texts.size()]);
            } else {
                texts.push_back(random_text(rng, 4, 15));
            }
        }
        Corpus corpus = make_corpus(texts);
        for (double floor : {0.2, 0.5, 0.9}) {
            PairwiseOptions opt;
            opt.floor = floor;
            auto sparse = pairwise_similarities(corpus, opt);
            CHECK(same_edges(sparse, dense_reference(corpus, floor, 3, 500)));
        }
    }
}

TEST_CASE("prefix filter and full enumeration agree") {
    std::mt19937_64 rng(777);
    std::vector<std::string> texts;
    for (int i = 0; i < 120; ++i) {
        if (!texts.empty() && rng() % 3 == 0) {
            texts.push_back(texts[rng() % texts.size()] + " extra");
        } else {
            texts.push_back(random_text(rng, 4, 20));
        }
    }
    Corpus corpus = make_corpus(texts);
    for (double floor : {0.2, 0.35, 0.5, 0.8}) {
        PairwiseOptions with, without;
        with.floor = without.floor = floor;
        with.allow_prefilter = true;
        without.allow_prefilter = false;
        CHECK(same_edges(pairwise_similarities(corpus, with),
                         pairwise_similarities(corpus, without)));
    }
}

TEST_CASE("pairwise output is worker-count independent") {
    std::mt19937_64 rng(555);
    std::vector<std::string> texts;
    for (int i = 0; i < 80; ++i) {
        if (!texts.empty() && rng() % 3 == 0) {
            texts.push_back(texts[rng() % texts.size()]);
        } else {
            texts.push_back(random_text(rng, 4, 15));
        }
    }
    Corpus corpus = make_corpus(texts);
    PairwiseOptions w1, w4;
    w1.workers = 1;
    w4.workers = 4;
    auto e1 = pairwise_similarities(corpus, w1);
    auto e4 = pairwise_similarities(corpus, w4);
    CHECK(same_edges(e1, e4));
}

TEST_CASE("avg_account_similarity") {
    SUBCASE("identical posts") {
        Corpus corpus = make_corpus({"same text body here", "same text body here"});
        CHECK(avg_account_similarity(corpus, "acct0") == 1.0);
    }
    SUBCASE("disjoint posts") {
        Corpus corpus = make_corpus({"aaaa bbbb cccc", "xxxx yyyy zzzz"});
        CHECK(avg_account_similarity(corpus, "acct0") == 0.0);
    }
    SUBCASE("hand mean over three pairs") {
        // pair scores: (0,1) = 1.0, (0,2) = 0.0, (1,2) = 0.0 -> mean 1/3
        Corpus corpus = make_corpus({"abab cdcd", "abab cdcd", "wxyz qrst"});
        CHECK(avg_account_similarity(corpus, "acct0") == doctest::Approx(1.0 / 3.0));
    }
    SUBCASE("fewer than two posts") {
        Corpus corpus = make_corpus({"only one post here"});
        CHECK_THROWS_AS(avg_account_similarity(corpus, "acct0"), ValidationError);
    }
}

TEST_CASE("edge csv format") {
    Corpus corpus = make_corpus({"same exact text here", "same exact text here"});
    PairwiseOptions opt;
    opt.floor = 0.5;
    auto edges = pairwise_similarities(corpus, opt);
    std::ostringstream out;
    write_edge_csv(out, corpus, edges);
    CHECK(out.str() == "post_a,post_b,score\np0,p1,1.000000\n");
}
