#include "newsflow/profile.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "newsflow/errors.hpp"
#include "newsflow/io.hpp"

namespace newsflow {

NgramProfile build_profile(std::string_view text, int n, int capacity) {
    if (n < 1) throw ValidationError("n-gram length must be >= 1");
    if (capacity < 1) throw ValidationError("profile capacity must be >= 1");
    if (text.size() < static_cast<std::size_t>(n))
        throw ValidationError("text shorter than n-gram length");

    std::string lowered(text);
    for (char& c : lowered) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }

    std::unordered_map<std::string, std::int64_t> counts;
    counts.reserve(lowered.size());
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= lowered.size(); ++i) {
        ++counts[lowered.substr(i, static_cast<std::size_t>(n))];
    }

    NgramProfile profile;
    profile.n = n;
    profile.capacity = capacity;
    profile.grams.assign(counts.begin(), counts.end());
    std::sort(profile.grams.begin(), profile.grams.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return x.first < y.first;
    });
    if (profile.grams.size() > static_cast<std::size_t>(capacity))
        profile.grams.resize(static_cast<std::size_t>(capacity));

    profile.gram_set.reserve(profile.grams.size());
    for (const auto& [gram, freq] : profile.grams) profile.gram_set.push_back(gram);
    std::sort(profile.gram_set.begin(), profile.gram_set.end());
    return profile;
}

double similarity(const NgramProfile& a, const NgramProfile& b) {
    if (a.n != b.n) throw ValidationError("profiles built with different n-gram lengths");
    std::size_t inter = 0;
    std::size_t i = 0, j = 0;
    while (i < a.gram_set.size() && j < b.gram_set.size()) {
        int cmp = a.gram_set[i].compare(b.gram_set[j]);
        if (cmp < 0) {
            ++i;
        } else if (cmp > 0) {
            ++j;
        } else {
            ++inter;
            ++i;
            ++j;
        }
    }
    std::size_t denom = std::min(a.gram_set.size(), b.gram_set.size());
    if (denom == 0) return 0.0;
    return static_cast<double>(inter) / static_cast<double>(denom);
}

namespace {

// Truncated profiles of every post, with grams interned to integer ids.
// Both scoring paths divide the same integer intersection count by the same
// min profile size, so their scores are bit-identical.
struct InternedCorpus {
    std::vector<std::vector<std::int32_t>> post_grams;  // sorted gram ids per post
    std::vector<std::int32_t> doc_freq;                 // per gram id
    std::vector<std::string> gram_text;                 // per gram id

    InternedCorpus(const Corpus& corpus, int n, int capacity) {
        std::unordered_map<std::string, std::int32_t> ids;
        post_grams.resize(corpus.posts.size());
        for (std::size_t p = 0; p < corpus.posts.size(); ++p) {
            NgramProfile profile = build_profile(corpus.posts[p].text, n, capacity);
            auto& grams = post_grams[p];
            grams.reserve(profile.gram_set.size());
            for (const std::string& g : profile.gram_set) {
                auto [it, inserted] = ids.emplace(g, static_cast<std::int32_t>(gram_text.size()));
                if (inserted) {
                    gram_text.push_back(g);
                    doc_freq.push_back(0);
                }
                grams.push_back(it->second);
                ++doc_freq[static_cast<std::size_t>(it->second)];
            }
            std::sort(grams.begin(), grams.end());
        }
    }
};

std::size_t intersection_size(const std::vector<std::int32_t>& a,
                              const std::vector<std::int32_t>& b) {
    std::size_t inter = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++inter;
            ++i;
            ++j;
        }
    }
    return inter;
}

double pair_score(const InternedCorpus& ic, std::size_t p, std::size_t q) {
    const auto& a = ic.post_grams[p];
    const auto& b = ic.post_grams[q];
    std::size_t denom = std::min(a.size(), b.size());
    if (denom == 0) return 0.0;
    return static_cast<double>(intersection_size(a, b)) / static_cast<double>(denom);
}

// Abandons the merge once the intersection provably stays under `required`
// (an underestimate of the overlap needed to reach the floor). Returns -1
// then; pairs at or above the floor always complete with the exact count.
std::ptrdiff_t bounded_intersection(const std::vector<std::int32_t>& a,
                                    const std::vector<std::int32_t>& b, std::size_t required) {
    std::size_t inter = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (inter + std::min(a.size() - i, b.size() - j) < required) return -1;
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++inter;
            ++i;
            ++j;
        }
    }
    return static_cast<std::ptrdiff_t>(inter);
}

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// All pairs, O(N^2), chunked over the first index.
std::vector<ScoredPair> full_enumeration(const InternedCorpus& ic, double floor, int workers) {
    const std::size_t n = ic.post_grams.size();
    std::vector<std::vector<ScoredPair>> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    std::atomic<std::size_t> next{0};
    constexpr std::size_t kChunk = 64;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            auto& out = partial[static_cast<std::size_t>(w)];
            for (;;) {
                std::size_t begin = next.fetch_add(kChunk);
                if (begin >= n) break;
                std::size_t end = std::min(begin + kChunk, n);
                for (std::size_t i = begin; i < end; ++i) {
                    for (std::size_t j = i + 1; j < n; ++j) {
                        double s = pair_score(ic, i, j);
                        if (s >= floor) {
                            out.push_back({static_cast<std::int32_t>(i),
                                           static_cast<std::int32_t>(j), s});
                        }
                    }
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    std::vector<ScoredPair> edges;
    for (auto& p : partial) edges.insert(edges.end(), p.begin(), p.end());
    return edges;
}

// Prefix filter. A pair scoring >= floor shares at least ceil(floor * m)
// grams where m is the smaller profile size, so the m - ceil(floor*m) + 1
// globally rarest grams of the smaller profile must hit the other profile.
// Probing every post's prefix against a full inverted index therefore finds
// every qualifying pair through its smaller member; the larger member skips
// the pair so each is scored exactly once.
std::vector<ScoredPair> prefix_filter_pairs(const InternedCorpus& ic, double floor, int workers) {
    const std::size_t n = ic.post_grams.size();
    const std::size_t n_grams = ic.gram_text.size();

    // Rarity rank per gram: ascending document frequency, ties by gram text.
    std::vector<std::int32_t> rarity(n_grams);
    {
        std::vector<std::int32_t> order(n_grams);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::int32_t x, std::int32_t y) {
            auto dx = ic.doc_freq[static_cast<std::size_t>(x)];
            auto dy = ic.doc_freq[static_cast<std::size_t>(y)];
            if (dx != dy) return dx < dy;
            return ic.gram_text[static_cast<std::size_t>(x)] <
                   ic.gram_text[static_cast<std::size_t>(y)];
        });
        for (std::size_t r = 0; r < order.size(); ++r)
            rarity[static_cast<std::size_t>(order[r])] = static_cast<std::int32_t>(r);
    }

    // Postings sorted by (size, index): a post probes only entries after its
    // own slot, so every pair is scored exactly once, by its smaller member.
    std::vector<std::vector<std::int32_t>> postings(n_grams);
    {
        std::vector<std::int32_t> by_size(n);
        std::iota(by_size.begin(), by_size.end(), 0);
        std::sort(by_size.begin(), by_size.end(), [&](std::int32_t x, std::int32_t y) {
            auto sx = ic.post_grams[static_cast<std::size_t>(x)].size();
            auto sy = ic.post_grams[static_cast<std::size_t>(y)].size();
            if (sx != sy) return sx < sy;
            return x < y;
        });
        for (std::int32_t p : by_size) {
            for (std::int32_t g : ic.post_grams[static_cast<std::size_t>(p)])
                postings[static_cast<std::size_t>(g)].push_back(p);
        }
    }
    auto probe_order_after = [&](std::size_t p, std::size_t q) {
        auto sp = ic.post_grams[p].size(), sq = ic.post_grams[q].size();
        if (sp != sq) return sp < sq;
        return p < q;
    };

    auto required_overlap = [floor](std::size_t size) {
        // floor() of the product underestimates the exact requirement;
        // at worst this admits extra candidates, never drops one.
        auto required = static_cast<std::size_t>(std::floor(floor * static_cast<double>(size)));
        return std::max<std::size_t>(required, 1);
    };

    std::vector<std::vector<ScoredPair>> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    std::atomic<std::size_t> next{0};
    constexpr std::size_t kChunk = 32;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            auto& out = partial[static_cast<std::size_t>(w)];
            std::vector<std::int32_t> last_seen(n, -1);
            std::vector<std::int32_t> prefix;
            for (;;) {
                std::size_t begin = next.fetch_add(kChunk);
                if (begin >= n) break;
                std::size_t end = std::min(begin + kChunk, n);
                for (std::size_t p = begin; p < end; ++p) {
                    const auto& grams = ic.post_grams[p];
                    if (grams.empty()) continue;
                    std::size_t required = required_overlap(grams.size());
                    std::size_t plen = grams.size() - required + 1;
                    prefix.assign(grams.begin(), grams.end());
                    std::partial_sort(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(plen),
                                      prefix.end(), [&](std::int32_t x, std::int32_t y) {
                                          return rarity[static_cast<std::size_t>(x)] <
                                                 rarity[static_cast<std::size_t>(y)];
                                      });
                    prefix.resize(plen);
                    for (std::int32_t g : prefix) {
                        const auto& plist = postings[static_cast<std::size_t>(g)];
                        // entries are ordered by (size, index); p probes its suffix
                        auto it = std::upper_bound(
                            plist.begin(), plist.end(), static_cast<std::int32_t>(p),
                            [&](std::int32_t x, std::int32_t y) {
                                return probe_order_after(static_cast<std::size_t>(x),
                                                         static_cast<std::size_t>(y));
                            });
                        for (; it != plist.end(); ++it) {
                            auto q = static_cast<std::size_t>(*it);
                            if (last_seen[q] == static_cast<std::int32_t>(p)) continue;
                            last_seen[q] = static_cast<std::int32_t>(p);
                            std::ptrdiff_t inter =
                                bounded_intersection(grams, ic.post_grams[q], required);
                            if (inter < 0) continue;
                            double s = static_cast<double>(inter) /
                                       static_cast<double>(grams.size());
                            if (s >= floor) {
                                out.push_back({static_cast<std::int32_t>(std::min(p, q)),
                                               static_cast<std::int32_t>(std::max(p, q)), s});
                            }
                        }
                    }
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    std::vector<ScoredPair> edges;
    for (auto& p : partial) edges.insert(edges.end(), p.begin(), p.end());
    return edges;
}

}  // namespace

std::vector<ScoredPair> pairwise_similarities(const Corpus& corpus, const PairwiseOptions& opt) {
    if (opt.floor < 0.0) throw ValidationError("similarity floor must be >= 0");
    const std::size_t n_posts = corpus.posts.size();
    std::vector<ScoredPair> edges;
    if (n_posts >= 2) {
        InternedCorpus ic(corpus, opt.n, opt.capacity);
        int workers = resolve_workers(opt.workers);
        bool prefilter = opt.allow_prefilter && opt.floor >= 0.2;
        edges = prefilter ? prefix_filter_pairs(ic, opt.floor, workers)
                          : full_enumeration(ic, opt.floor, workers);
    }

    // Canonical order: by post id, pair members ascending.
    std::vector<std::int32_t> rank_of(n_posts);
    {
        std::vector<std::int32_t> order(n_posts);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::int32_t x, std::int32_t y) {
            return corpus.posts[static_cast<std::size_t>(x)].id <
                   corpus.posts[static_cast<std::size_t>(y)].id;
        });
        for (std::size_t r = 0; r < order.size(); ++r)
            rank_of[static_cast<std::size_t>(order[r])] = static_cast<std::int32_t>(r);
    }
    for (ScoredPair& e : edges) {
        if (rank_of[static_cast<std::size_t>(e.a)] > rank_of[static_cast<std::size_t>(e.b)])
            std::swap(e.a, e.b);
    }
    std::sort(edges.begin(), edges.end(), [&](const ScoredPair& x, const ScoredPair& y) {
        auto rx = std::pair(rank_of[static_cast<std::size_t>(x.a)],
                            rank_of[static_cast<std::size_t>(x.b)]);
        auto ry = std::pair(rank_of[static_cast<std::size_t>(y.a)],
                            rank_of[static_cast<std::size_t>(y.b)]);
        return rx < ry;
    });
    return edges;
}

double avg_account_similarity(const Corpus& corpus, std::string_view account_id, int n,
                              int capacity) {
    std::int32_t idx = corpus.account_index(account_id);
    if (idx < 0) throw ValidationError("unknown account \"" + std::string(account_id) + "\"");
    std::vector<NgramProfile> profiles;
    for (const Post& p : corpus.posts) {
        if (p.account_index == idx) profiles.push_back(build_profile(p.text, n, capacity));
    }
    if (profiles.size() < 2)
        throw ValidationError("account \"" + std::string(account_id) + "\" has fewer than 2 posts");
    double sum = 0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        for (std::size_t j = i + 1; j < profiles.size(); ++j) {
            sum += similarity(profiles[i], profiles[j]);
            ++pairs;
        }
    }
    return sum / static_cast<double>(pairs);
}

void write_edge_csv(std::ostream& out, const Corpus& corpus,
                    const std::vector<ScoredPair>& edges) {
    out << "post_a,post_b,score\n";
    for (const ScoredPair& e : edges) {
        out << corpus.posts[static_cast<std::size_t>(e.a)].id << ','
            << corpus.posts[static_cast<std::size_t>(e.b)].id << ','
            << format_fixed(e.score, 6) << '\n';
    }
}

}  // namespace newsflow
