#ifndef NEWSFLOW_CORPUS_HPP
#define NEWSFLOW_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace newsflow {

enum class PlatformKind { Twitter, Facebook, Other };

struct Platform {
    PlatformKind kind = PlatformKind::Other;
    std::string name;  // set for Other; empty otherwise

    static Platform from_string(std::string_view s);
    std::string to_string() const;
};

// Absent reaction kinds are stored as 0.
struct ReactionCounts {
    std::int64_t likes = 0;
    std::int64_t shares = 0;
    std::int64_t comments = 0;
    std::int64_t retweets = 0;
    std::int64_t favorites = 0;
};

struct MediaAccount {
    std::string id;
    std::string display_name;
    Platform platform;
    std::int64_t followers = 0;
};

struct Post {
    std::string id;
    std::string account_id;
    std::int32_t account_index = -1;  // into Corpus::accounts
    std::string text;                 // preprocessed
    std::int64_t timestamp = 0;       // UTC epoch seconds
    ReactionCounts reactions;
};

struct Corpus {
    std::vector<MediaAccount> accounts;  // sorted by id
    std::vector<Post> posts;             // accepted posts, input order
    std::size_t rejected = 0;
    std::vector<std::string> rejection_log;

    // Index into accounts, or -1.
    std::int32_t account_index(std::string_view account_id) const;
};

// URL removal + short-text filter. Tokens are maximal non-whitespace runs;
// a token is a URL if it starts with http://, https:// or www. (case
// insensitive). Word count is taken after URL removal; fewer than 3 words
// means rejection (returned as nullopt, not an error). Surviving tokens are
// re-joined with single spaces, which makes the operation idempotent.
std::optional<std::string> preprocess(std::string_view raw_text);

// Reads the accounts file then the posts file (both newline-delimited JSON).
// Schema violations, duplicate ids and unknown account references are hard
// errors naming the offending line; preprocessing rejections only increment
// Corpus::rejected with a logged reason.
Corpus load_corpus(const std::filesystem::path& posts_path,
                   const std::filesystem::path& accounts_path);

struct Quantiles {
    double min = 0, p25 = 0, median = 0, p75 = 0, max = 0;
};

struct AccountSummary {
    std::string account_id;
    std::size_t post_count = 0;
    std::int64_t followers = 0;
    double mean_likes = 0, mean_shares = 0, mean_comments = 0, mean_retweets = 0,
           mean_favorites = 0;
};

struct CorpusStats {
    std::vector<AccountSummary> accounts;  // sorted by account id
    Quantiles post_counts;                 // over per-account post counts
    Quantiles mean_likes, mean_shares, mean_comments, mean_retweets, mean_favorites;
};

// Linear-interpolation quantile over unsorted values.
double quantile(std::vector<double> values, double p);

CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace newsflow

#endif  // NEWSFLOW_CORPUS_HPP
