#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "newsflow/corpus.hpp"
#include "newsflow/errors.hpp"

using namespace newsflow;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("newsflow_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    fs::path file(const std::string& name, const std::string& content) const {
        fs::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p;
    }
};

const char* kAccounts =
    R"({"id": "alpha", "display_name": "Alpha", "platform": "twitter", "followers": 1000})"
    "\n"
    R"({"id": "beta", "display_name": "Beta", "platform": "facebook", "followers": 2000})"
    "\n";

}  // namespace

TEST_CASE("preprocess strips URL tokens") {
    CHECK(preprocess("Breaking news today http://t.co/ab") == "Breaking news today");
    CHECK(preprocess("see https://example.com/x for the full story") ==
          "see for the full story");
    CHECK(preprocess("update www.site.org more words here") == "update more words here");
    CHECK(preprocess("HTTPS://CAPS.example also counts as a url") == "also counts as a url");
}

TEST_CASE("preprocess rejects short texts") {
    CHECK_FALSE(preprocess("Go!").has_value());
    CHECK_FALSE(preprocess("").has_value());
    CHECK_FALSE(preprocess("   ").has_value());
    CHECK_FALSE(preprocess("two words").has_value());
    CHECK(preprocess("three words here").has_value());
    // only a URL: word count is zero after removal
    CHECK_FALSE(preprocess("http://only.a.link/x").has_value());
    // count taken after URL removal
    CHECK_FALSE(preprocess("hi there http://x.co").has_value());
}

TEST_CASE("preprocess is idempotent") {
    std::mt19937 rng(42);
    const char* pieces[] = {"word",  "news",   "http://t.co/abc", "www.example.com",
                            "a",     "longer", "https://x.io/q",  "token!",
                            "42",    "mixed,", "UPPER",           "tail"};
    for (int trial = 0; trial < 500; ++trial) {
        std::string text;
        int len = static_cast<int>(rng() % 8);
        for (int i = 0; i < len; ++i) {
            text += pieces[rng() % std::size(pieces)];
            text += (rng() % 4 == 0) ? "  " : " ";
        }
        auto once = preprocess(text);
        if (!once) continue;
        auto twice = preprocess(*once);
        REQUIRE(twice.has_value());
        CHECK(*twice == *once);
    }
}

TEST_CASE("load_corpus ingests valid records") {
    TempDir dir;
    auto accounts = dir.file("accounts.jsonl", kAccounts);
    auto posts = dir.file(
        "posts.jsonl",
        R"({"id": "p1", "account_id": "alpha", "text": "first news item", "timestamp": 100, "reactions": {"likes": 2}})"
        "\n"
        R"({"id": "p2", "account_id": "alpha", "text": "second news item", "timestamp": 200, "reactions": {"likes": 4}})"
        "\n"
        R"({"id": "p3", "account_id": "beta", "text": "third news item", "timestamp": 300})"
        "\n");
    Corpus corpus = load_corpus(posts, accounts);
    CHECK(corpus.posts.size() == 3);
    CHECK(corpus.rejected == 0);
    CHECK(corpus.accounts.size() == 2);
    CHECK(corpus.posts[0].reactions.likes == 2);
    CHECK(corpus.posts[2].reactions.likes == 0);
    CHECK(corpus.posts[0].account_index == corpus.account_index("alpha"));
}

TEST_CASE("load_corpus hard errors name the line") {
    TempDir dir;
    auto accounts = dir.file("accounts.jsonl", kAccounts);

    SUBCASE("missing timestamp") {
        auto posts = dir.file(
            "posts.jsonl",
            R"({"id": "p1", "account_id": "alpha", "text": "first news item", "timestamp": 100})"
            "\n"
            R"({"id": "p2", "account_id": "alpha", "text": "no timestamp here"})"
            "\n");
        CHECK_THROWS_WITH_AS(load_corpus(posts, accounts),
                             doctest::Contains("posts.jsonl:2"), ValidationError);
    }
    SUBCASE("duplicate post id") {
        auto posts = dir.file(
            "posts.jsonl",
            R"({"id": "p1", "account_id": "alpha", "text": "first news item", "timestamp": 100})"
            "\n"
            R"({"id": "p1", "account_id": "beta", "text": "same id again oops", "timestamp": 200})"
            "\n");
        CHECK_THROWS_WITH_AS(load_corpus(posts, accounts), doctest::Contains("duplicate post id"),
                             ValidationError);
    }
    SUBCASE("unknown account") {
        auto posts = dir.file(
            "posts.jsonl",
            R"({"id": "p1", "account_id": "gamma", "text": "who posted this", "timestamp": 100})"
            "\n");
        CHECK_THROWS_WITH_AS(load_corpus(posts, accounts), doctest::Contains("unknown account"),
                             ValidationError);
    }
    SUBCASE("non-positive timestamp") {
        auto posts = dir.file(
            "posts.jsonl",
            R"({"id": "p1", "account_id": "alpha", "text": "bad time value", "timestamp": 0})"
            "\n");
        CHECK_THROWS_AS(load_corpus(posts, accounts), ValidationError);
    }
    SUBCASE("negative reaction count") {
        auto posts = dir.file(
            "posts.jsonl",
            R"({"id": "p1", "account_id": "alpha", "text": "bad reactions", "timestamp": 5, "reactions": {"likes": -1}})"
            "\n");
        CHECK_THROWS_AS(load_corpus(posts, accounts), ValidationError);
    }
    SUBCASE("unreadable file") {
        CHECK_THROWS_AS(load_corpus(dir.path / "missing.jsonl", accounts), ValidationError);
    }
}

TEST_CASE("load_corpus counts rejections; accepted + rejected = input") {
    TempDir dir;
    auto accounts = dir.file("accounts.jsonl", kAccounts);
    auto posts = dir.file(
        "posts.jsonl",
        R"({"id": "p1", "account_id": "alpha", "text": "a few good words", "timestamp": 100})"
        "\n"
        R"({"id": "p2", "account_id": "alpha", "text": "http://only.url", "timestamp": 200})"
        "\n"
        R"({"id": "p3", "account_id": "beta", "text": "ok", "timestamp": 300})"
        "\n"
        R"({"id": "p4", "account_id": "beta", "text": "this one is fine", "timestamp": 400})"
        "\n");
    Corpus corpus = load_corpus(posts, accounts);
    CHECK(corpus.posts.size() == 2);
    CHECK(corpus.rejected == 2);
    CHECK(corpus.posts.size() + corpus.rejected == 4);
    CHECK(corpus.rejection_log.size() == 2);
    CHECK(corpus.rejection_log[0].find("p2") != std::string::npos);
}

TEST_CASE("corpus_stats means and quantiles") {
    TempDir dir;
    auto accounts = dir.file("accounts.jsonl", kAccounts);
    auto posts = dir.file(
        "posts.jsonl",
        R"({"id": "p1", "account_id": "alpha", "text": "first news item", "timestamp": 100, "reactions": {"likes": 2}})"
        "\n"
        R"({"id": "p2", "account_id": "alpha", "text": "second news item", "timestamp": 200, "reactions": {"likes": 4}})"
        "\n");
    Corpus corpus = load_corpus(posts, accounts);
    CorpusStats stats = corpus_stats(corpus);
    REQUIRE(stats.accounts.size() == 2);
    CHECK(stats.accounts[0].account_id == "alpha");  // sorted by id
    CHECK(stats.accounts[0].mean_likes == doctest::Approx(3.0));
    CHECK(stats.accounts[1].post_count == 0);
}

TEST_CASE("corpus_stats renders a reaction summary row") {
    // one account whose posts average 1455 likes and 454 shares
    TempDir dir;
    auto accounts = dir.file(
        "accounts.jsonl",
        R"({"id": "fbnews", "display_name": "FB News", "platform": "facebook", "followers": 500})"
        "\n");
    std::string posts_content;
    posts_content +=
        R"({"id": "p1", "account_id": "fbnews", "text": "big story one here", "timestamp": 100, "reactions": {"likes": 1400, "shares": 400}})"
        "\n";
    posts_content +=
        R"({"id": "p2", "account_id": "fbnews", "text": "big story two here", "timestamp": 200, "reactions": {"likes": 1510, "shares": 508}})"
        "\n";
    auto posts = dir.file("posts.jsonl", posts_content);
    Corpus corpus = load_corpus(posts, accounts);
    CorpusStats stats = corpus_stats(corpus);
    CHECK(stats.accounts[0].mean_likes == doctest::Approx(1455.0));
    CHECK(stats.accounts[0].mean_shares == doctest::Approx(454.0));
    CHECK(stats.accounts[0].mean_likes > stats.accounts[0].mean_shares);
}

TEST_CASE("quantiles use linear interpolation") {
    std::vector<double> v{1, 2, 3, 4, 5};
    CHECK(quantile(v, 0.25) == doctest::Approx(2.0));
    CHECK(quantile(v, 0.5) == doctest::Approx(3.0));
    CHECK(quantile(v, 0.75) == doctest::Approx(4.0));
    CHECK(quantile(v, 0.0) == doctest::Approx(1.0));
    CHECK(quantile(v, 1.0) == doctest::Approx(5.0));
    CHECK(quantile({1, 2}, 0.5) == doctest::Approx(1.5));
}

TEST_CASE("corpus_stats means match brute force") {
    TempDir dir;
    auto accounts = dir.file("accounts.jsonl", kAccounts);
    std::mt19937 rng(7);
    std::string content;
    std::vector<std::pair<std::string, std::int64_t>> raw;  // (account, likes)
    for (int i = 0; i < 60; ++i) {
        std::string acct = (rng() % 2 == 0) ? "alpha" : "beta";
        std::int64_t likes = static_cast<std::int64_t>(rng() % 1000);
        raw.emplace_back(acct, likes);
        content += "{\"id\": \"p" + std::to_string(i) + "\", \"account_id\": \"" + acct +
                   "\", \"text\": \"post number " + std::to_string(i) +
                   " text\", \"timestamp\": " + std::to_string(100 + i) +
                   ", \"reactions\": {\"likes\": " + std::to_string(likes) + "}}\n";
    }
    Corpus corpus = load_corpus(dir.file("posts.jsonl", content), accounts);
    CorpusStats stats = corpus_stats(corpus);
    for (const auto& row : stats.accounts) {
        double sum = 0;
        std::size_t count = 0;
        for (const auto& [acct, likes] : raw) {
            if (acct == row.account_id) {
                sum += static_cast<double>(likes);
                ++count;
            }
        }
        REQUIRE(count == row.post_count);
        CHECK(row.mean_likes == doctest::Approx(sum / static_cast<double>(count)));
    }
}

TEST_CASE("corpus_stats rejects an empty corpus") {
    Corpus corpus;
    CHECK_THROWS_AS(corpus_stats(corpus), ValidationError);
}
