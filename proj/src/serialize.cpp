#include "newsflow/serialize.hpp"

#include <fstream>
#include <limits>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "newsflow/errors.hpp"

namespace newsflow {

using nlohmann::json;

void write_posts_jsonl(std::ostream& out, const Corpus& corpus) {
    for (const Post& p : corpus.posts) {
        json rec{{"id", p.id},
                 {"account_id", p.account_id},
                 {"text", p.text},
                 {"timestamp", p.timestamp},
                 {"reactions",
                  {{"likes", p.reactions.likes},
                   {"shares", p.reactions.shares},
                   {"comments", p.reactions.comments},
                   {"retweets", p.reactions.retweets},
                   {"favorites", p.reactions.favorites}}}};
        out << rec.dump() << '\n';
    }
}

void write_accounts_jsonl(std::ostream& out, const Corpus& corpus) {
    for (const MediaAccount& a : corpus.accounts) {
        json rec{{"id", a.id},
                 {"display_name", a.display_name},
                 {"platform", a.platform.to_string()},
                 {"followers", a.followers}};
        out << rec.dump() << '\n';
    }
}

void write_truth_jsonl(std::ostream& out, const ClusterLabeling& labeling) {
    for (std::size_t i = 0; i < labeling.post_ids.size(); ++i) {
        json rec{{"post_id", labeling.post_ids[i]},
                 {"cluster_id",
                  labeling.cluster_ids[static_cast<std::size_t>(labeling.cluster[i])]},
                 {"is_originator", static_cast<bool>(labeling.is_originator[i])}};
        out << rec.dump() << '\n';
    }
}

void write_attribution_jsonl(std::ostream& out, const AttributionResult& attribution,
                             const Corpus& corpus) {
    for (const ReplicaCluster& cluster : attribution.clusters) {
        for (std::int32_t p : cluster.post_indices) {
            const Post& post = corpus.posts[static_cast<std::size_t>(p)];
            json rec{{"cluster_id", cluster.cluster_id},
                     {"post_id", post.id},
                     {"account_id", post.account_id},
                     {"is_originator", p == cluster.originator_post}};
            out << rec.dump() << '\n';
        }
    }
}

ClusterLabeling read_labeling_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open labeling file: " + path.string());
    ClusterLabeling labeling;
    std::unordered_map<std::string, std::int32_t> cluster_index;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec = json::parse(line, nullptr, false);
        auto fail = [&](const std::string& msg) -> void {
            throw ValidationError(path.filename().string() + ":" + std::to_string(lineno) +
                                  ": " + msg);
        };
        if (rec.is_discarded() || !rec.is_object()) fail("malformed record");
        if (!rec.contains("post_id") || !rec["post_id"].is_string()) fail("missing post_id");
        if (!rec.contains("cluster_id") || !rec["cluster_id"].is_string())
            fail("missing cluster_id");
        if (!rec.contains("is_originator") || !rec["is_originator"].is_boolean())
            fail("missing is_originator");
        std::string cluster_id = rec["cluster_id"].get<std::string>();
        auto [it, inserted] = cluster_index.emplace(
            cluster_id, static_cast<std::int32_t>(labeling.cluster_ids.size()));
        if (inserted) labeling.cluster_ids.push_back(cluster_id);
        labeling.post_ids.push_back(rec["post_id"].get<std::string>());
        labeling.account_ids.push_back(
            rec.contains("account_id") && rec["account_id"].is_string()
                ? rec["account_id"].get<std::string>()
                : "");
        labeling.cluster.push_back(it->second);
        labeling.is_originator.push_back(rec["is_originator"].get<bool>());
    }
    return labeling;
}

void write_fit_json(std::ostream& out, const RegressionFit& fit) {
    json terms = json::array();
    for (const Coefficient& c : fit.coefficients) {
        terms.push_back({{"name", c.name},
                         {"estimate", c.estimate},
                         {"std_error", c.std_error},
                         {"t_value", c.t_value},
                         {"p_value", c.p_value}});
    }
    json rec{{"response", fit.response}, {"coefficients", terms},
             {"r_squared", fit.r_squared}, {"model_f", fit.model_f},
             {"model_p_value", fit.model_p_value}, {"sigma", fit.sigma},
             {"n", fit.n}, {"df_resid", fit.df_resid}};
    out << rec.dump(2) << '\n';
}

RegressionFit read_fit_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open fit file: " + path.string());
    json rec;
    try {
        in >> rec;
    } catch (const json::exception& e) {
        throw ValidationError("malformed fit file " + path.string() + ": " + e.what());
    }
    RegressionFit fit;
    try {
        fit.response = rec.at("response").get<std::string>();
        for (const json& term : rec.at("coefficients")) {
            Coefficient c;
            c.name = term.at("name").get<std::string>();
            c.estimate = term.at("estimate").get<double>();
            c.std_error = term.at("std_error").get<double>();
            // non-finite t serializes as null
            c.t_value = term.at("t_value").is_number()
                            ? term.at("t_value").get<double>()
                            : std::numeric_limits<double>::quiet_NaN();
            c.p_value = term.at("p_value").get<double>();
            fit.coefficients.push_back(std::move(c));
        }
        fit.r_squared = rec.at("r_squared").get<double>();
        fit.model_f = rec.at("model_f").get<double>();
        fit.model_p_value = rec.at("model_p_value").get<double>();
        fit.sigma = rec.at("sigma").get<double>();
        fit.n = rec.at("n").get<std::int64_t>();
        fit.df_resid = rec.at("df_resid").get<std::int64_t>();
    } catch (const json::exception& e) {
        throw ValidationError("fit file " + path.string() + " missing fields: " + e.what());
    }
    return fit;
}

}  // namespace newsflow
