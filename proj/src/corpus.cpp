#include "newsflow/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "newsflow/errors.hpp"

namespace newsflow {

using nlohmann::json;

Platform Platform::from_string(std::string_view s) {
    if (s == "twitter") return {PlatformKind::Twitter, ""};
    if (s == "facebook") return {PlatformKind::Facebook, ""};
    return {PlatformKind::Other, std::string(s)};
}

std::string Platform::to_string() const {
    switch (kind) {
        case PlatformKind::Twitter: return "twitter";
        case PlatformKind::Facebook: return "facebook";
        case PlatformKind::Other: return name;
    }
    return name;
}

std::int32_t Corpus::account_index(std::string_view account_id) const {
    auto it = std::lower_bound(accounts.begin(), accounts.end(), account_id,
                               [](const MediaAccount& a, std::string_view id) { return a.id < id; });
    if (it == accounts.end() || it->id != account_id) return -1;
    return static_cast<std::int32_t>(it - accounts.begin());
}

namespace {

bool is_url_token(std::string_view tok) {
    auto starts_with_ci = [&](std::string_view prefix) {
        if (tok.size() < prefix.size()) return false;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (std::tolower(static_cast<unsigned char>(tok[i])) != prefix[i]) return false;
        }
        return true;
    };
    return starts_with_ci("http://") || starts_with_ci("https://") || starts_with_ci("www.");
}

}  // namespace

std::optional<std::string> preprocess(std::string_view raw_text) {
    std::string out;
    out.reserve(raw_text.size());
    std::size_t words = 0;
    std::size_t i = 0;
    while (i < raw_text.size()) {
        while (i < raw_text.size() && std::isspace(static_cast<unsigned char>(raw_text[i]))) ++i;
        std::size_t start = i;
        while (i < raw_text.size() && !std::isspace(static_cast<unsigned char>(raw_text[i]))) ++i;
        if (start == i) break;
        std::string_view tok = raw_text.substr(start, i - start);
        if (is_url_token(tok)) continue;
        if (!out.empty()) out.push_back(' ');
        out.append(tok);
        ++words;
    }
    if (words < 3) return std::nullopt;
    return out;
}

namespace {

// One line of newline-delimited JSON, with positional error reporting.
json parse_record(const std::string& line, const std::filesystem::path& file, std::size_t lineno) {
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object()) {
        throw ValidationError(file.filename().string() + ":" + std::to_string(lineno) +
                              ": malformed record (not a JSON object)");
    }
    return rec;
}

[[noreturn]] void schema_error(const std::filesystem::path& file, std::size_t lineno,
                               const std::string& msg) {
    throw ValidationError(file.filename().string() + ":" + std::to_string(lineno) + ": " + msg);
}

std::string require_string(const json& rec, const char* field, const std::filesystem::path& file,
                           std::size_t lineno) {
    auto it = rec.find(field);
    if (it == rec.end()) schema_error(file, lineno, std::string("missing field '") + field + "'");
    if (!it->is_string()) schema_error(file, lineno, std::string("field '") + field + "' must be a string");
    return it->get<std::string>();
}

std::int64_t require_integer(const json& rec, const char* field, const std::filesystem::path& file,
                             std::size_t lineno) {
    auto it = rec.find(field);
    if (it == rec.end()) schema_error(file, lineno, std::string("missing field '") + field + "'");
    if (!it->is_number_integer()) {
        schema_error(file, lineno, std::string("field '") + field + "' must be an integer");
    }
    return it->get<std::int64_t>();
}

std::int64_t reaction_field(const json& obj, const char* field, const std::filesystem::path& file,
                            std::size_t lineno) {
    auto it = obj.find(field);
    if (it == obj.end()) return 0;
    if (!it->is_number_integer())
        schema_error(file, lineno, std::string("reaction '") + field + "' must be an integer");
    std::int64_t v = it->get<std::int64_t>();
    if (v < 0) schema_error(file, lineno, std::string("reaction '") + field + "' must be >= 0");
    return v;
}

std::vector<MediaAccount> load_accounts(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open accounts file: " + path.string());
    std::vector<MediaAccount> accounts;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec = parse_record(line, path, lineno);
        MediaAccount acc;
        acc.id = require_string(rec, "id", path, lineno);
        if (acc.id.empty()) schema_error(path, lineno, "account id must be non-empty");
        if (!seen.insert(acc.id).second)
            schema_error(path, lineno, "duplicate account id \"" + acc.id + "\"");
        acc.platform = Platform::from_string(require_string(rec, "platform", path, lineno));
        if (acc.platform.kind == PlatformKind::Other && acc.platform.name.empty())
            schema_error(path, lineno, "platform name must be non-empty");
        acc.followers = require_integer(rec, "followers", path, lineno);
        if (acc.followers < 0) schema_error(path, lineno, "followers must be >= 0");
        acc.display_name = rec.contains("display_name")
                               ? require_string(rec, "display_name", path, lineno)
                               : acc.id;
        accounts.push_back(std::move(acc));
    }
    std::sort(accounts.begin(), accounts.end(),
              [](const MediaAccount& a, const MediaAccount& b) { return a.id < b.id; });
    return accounts;
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& posts_path,
                   const std::filesystem::path& accounts_path) {
    Corpus corpus;
    corpus.accounts = load_accounts(accounts_path);

    std::ifstream in(posts_path);
    if (!in) throw ValidationError("cannot open posts file: " + posts_path.string());
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec = parse_record(line, posts_path, lineno);

        Post post;
        post.id = require_string(rec, "id", posts_path, lineno);
        if (post.id.empty()) schema_error(posts_path, lineno, "post id must be non-empty");
        if (!seen_ids.insert(post.id).second)
            schema_error(posts_path, lineno, "duplicate post id \"" + post.id + "\"");
        post.account_id = require_string(rec, "account_id", posts_path, lineno);
        post.account_index = corpus.account_index(post.account_id);
        if (post.account_index < 0)
            schema_error(posts_path, lineno, "unknown account \"" + post.account_id + "\"");
        post.timestamp = require_integer(rec, "timestamp", posts_path, lineno);
        if (post.timestamp <= 0) schema_error(posts_path, lineno, "timestamp must be > 0");
        std::string raw_text = require_string(rec, "text", posts_path, lineno);
        if (auto it = rec.find("reactions"); it != rec.end()) {
            if (!it->is_object())
                schema_error(posts_path, lineno, "field 'reactions' must be an object");
            post.reactions.likes = reaction_field(*it, "likes", posts_path, lineno);
            post.reactions.shares = reaction_field(*it, "shares", posts_path, lineno);
            post.reactions.comments = reaction_field(*it, "comments", posts_path, lineno);
            post.reactions.retweets = reaction_field(*it, "retweets", posts_path, lineno);
            post.reactions.favorites = reaction_field(*it, "favorites", posts_path, lineno);
        }

        auto cleaned = preprocess(raw_text);
        if (!cleaned) {
            ++corpus.rejected;
            corpus.rejection_log.push_back(posts_path.filename().string() + ":" +
                                           std::to_string(lineno) + ": post \"" + post.id +
                                           "\" rejected (fewer than 3 words after URL removal)");
            continue;
        }
        post.text = std::move(*cleaned);
        corpus.posts.push_back(std::move(post));
    }
    return corpus;
}

double quantile(std::vector<double> values, double p) {
    if (values.empty()) throw ValidationError("quantile of empty sequence");
    std::sort(values.begin(), values.end());
    if (values.size() == 1) return values[0];
    double pos = p * static_cast<double>(values.size() - 1);
    std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    std::size_t hi = std::min(lo + 1, values.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

namespace {

Quantiles quantiles_of(std::vector<double> v) {
    Quantiles q;
    q.min = quantile(v, 0.0);
    q.p25 = quantile(v, 0.25);
    q.median = quantile(v, 0.5);
    q.p75 = quantile(v, 0.75);
    q.max = quantile(v, 1.0);
    return q;
}

}  // namespace

CorpusStats corpus_stats(const Corpus& corpus) {
    if (corpus.posts.empty()) throw ValidationError("empty corpus");

    CorpusStats stats;
    stats.accounts.reserve(corpus.accounts.size());
    std::vector<std::array<double, 6>> sums(corpus.accounts.size(), {0, 0, 0, 0, 0, 0});
    for (const Post& p : corpus.posts) {
        auto& s = sums[static_cast<std::size_t>(p.account_index)];
        s[0] += 1;
        s[1] += static_cast<double>(p.reactions.likes);
        s[2] += static_cast<double>(p.reactions.shares);
        s[3] += static_cast<double>(p.reactions.comments);
        s[4] += static_cast<double>(p.reactions.retweets);
        s[5] += static_cast<double>(p.reactions.favorites);
    }
    std::vector<double> counts, likes, shares, comments, retweets, favorites;
    for (std::size_t i = 0; i < corpus.accounts.size(); ++i) {
        AccountSummary row;
        row.account_id = corpus.accounts[i].id;
        row.followers = corpus.accounts[i].followers;
        row.post_count = static_cast<std::size_t>(sums[i][0]);
        double n = sums[i][0] > 0 ? sums[i][0] : 1;
        row.mean_likes = sums[i][1] / n;
        row.mean_shares = sums[i][2] / n;
        row.mean_comments = sums[i][3] / n;
        row.mean_retweets = sums[i][4] / n;
        row.mean_favorites = sums[i][5] / n;
        counts.push_back(sums[i][0]);
        likes.push_back(row.mean_likes);
        shares.push_back(row.mean_shares);
        comments.push_back(row.mean_comments);
        retweets.push_back(row.mean_retweets);
        favorites.push_back(row.mean_favorites);
        stats.accounts.push_back(std::move(row));
    }
    stats.post_counts = quantiles_of(std::move(counts));
    stats.mean_likes = quantiles_of(std::move(likes));
    stats.mean_shares = quantiles_of(std::move(shares));
    stats.mean_comments = quantiles_of(std::move(comments));
    stats.mean_retweets = quantiles_of(std::move(retweets));
    stats.mean_favorites = quantiles_of(std::move(favorites));
    return stats;
}

}  // namespace newsflow
