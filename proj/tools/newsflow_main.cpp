#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "newsflow/attribution.hpp"
#include "newsflow/corpus.hpp"
#include "newsflow/errors.hpp"
#include "newsflow/graph.hpp"
#include "newsflow/io.hpp"
#include "newsflow/profile.hpp"
#include "newsflow/serialize.hpp"
#include "newsflow/stats.hpp"
#include "newsflow/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct AnalyzeArgs {
    std::string posts;
    std::string accounts;
    std::string out;
    int ngram = 3;
    int profile_len = 500;
    double floor = 0.5;
    int jenks_k = 2;
    std::int64_t epsilon = 300;
    double self_th = 0.80;
    double dispersed_th = 0.70;
    double acquired_th = 0.70;
    int workers = 0;
    std::uint64_t seed = 1;
    bool dump_edges = false;
};

void add_analyze_flags(CLI::App* cmd, AnalyzeArgs& args) {
    cmd->add_option("--posts", args.posts, "posts file (newline-delimited JSON)")->required();
    cmd->add_option("--accounts", args.accounts, "accounts file (newline-delimited JSON)")
        ->required();
    cmd->add_option("--out", args.out, "output directory")->required();
    cmd->add_option("--ngram", args.ngram, "character n-gram length");
    cmd->add_option("--profile-len", args.profile_len, "profile capacity L");
    cmd->add_option("--floor", args.floor, "similarity floor for the sparse pair output");
    cmd->add_option("--jenks-k", args.jenks_k, "Jenks class count for the replica threshold");
    cmd->add_option("--epsilon", args.epsilon, "originator candidate window, seconds");
    cmd->add_option("--self-th", args.self_th, "SelfOriginator weight threshold");
    cmd->add_option("--dispersed-th", args.dispersed_th, "Provider weight threshold");
    cmd->add_option("--acquired-th", args.acquired_th, "Consumer weight threshold");
    cmd->add_option("--workers", args.workers, "worker threads for pair scoring (0 = auto)");
    cmd->add_option("--seed", args.seed, "seed recorded in the manifest");
    cmd->add_flag("--dump-edges", args.dump_edges, "also write edges.csv");
}

int run_analyze(const AnalyzeArgs& args) {
    if (args.ngram < 1) throw newsflow::ValidationError("--ngram must be >= 1");
    if (args.profile_len < 1) throw newsflow::ValidationError("--profile-len must be >= 1");
    if (args.floor < 0 || args.floor > 1)
        throw newsflow::ValidationError("--floor must be in [0,1]");
    if (args.jenks_k < 2) throw newsflow::ValidationError("--jenks-k must be >= 2");
    if (args.epsilon < 0) throw newsflow::ValidationError("--epsilon must be >= 0");

    newsflow::Corpus corpus = newsflow::load_corpus(args.posts, args.accounts);
    for (const std::string& reason : corpus.rejection_log)
        std::cerr << "[corpus] " << reason << "\n";
    if (corpus.posts.empty()) throw newsflow::ValidationError("empty corpus");

    newsflow::PairwiseOptions opt;
    opt.n = args.ngram;
    opt.capacity = args.profile_len;
    opt.floor = args.floor;
    opt.workers = args.workers;
    auto edges = newsflow::pairwise_similarities(corpus, opt);

    auto attribution = newsflow::attribute(corpus, edges, args.jenks_k, args.epsilon);
    auto graph = newsflow::build_interaction_graph(attribution, corpus);
    auto table = newsflow::build_attribute_table(corpus, graph);
    newsflow::RoleThresholds thresholds{args.self_th, args.dispersed_th, args.acquired_th};

    fs::path out_dir(args.out);
    fs::create_directories(out_dir);

    auto write_artifact = [&](const char* name, const std::string& content) {
        newsflow::atomic_write(out_dir / name, content);
    };
    {
        std::ostringstream buf;
        newsflow::write_attribution_jsonl(buf, attribution, corpus);
        write_artifact("attribution.jsonl", buf.str());
    }
    {
        std::ostringstream buf;
        newsflow::write_chord(buf, graph);
        write_artifact("chord.jsonl", buf.str());
    }
    {
        std::ostringstream buf;
        newsflow::write_role_csv(buf, graph, thresholds);
        write_artifact("roles.csv", buf.str());
    }
    {
        std::ostringstream buf;
        newsflow::write_attribute_csv(buf, table);
        write_artifact("attributes.csv", buf.str());
    }
    if (args.dump_edges) {
        std::ostringstream buf;
        newsflow::write_edge_csv(buf, corpus, edges);
        write_artifact("edges.csv", buf.str());
    }

    json manifest{
        {"tool", "newsflow"},
        {"version", kVersion},
        {"created_utc", newsflow::iso8601_utc_now()},
        {"inputs",
         {{"posts", {{"path", args.posts}, {"sha256", newsflow::sha256_file(args.posts)}}},
          {"accounts",
           {{"path", args.accounts}, {"sha256", newsflow::sha256_file(args.accounts)}}}}},
        {"params",
         {{"ngram", args.ngram},
          {"profile_len", args.profile_len},
          {"floor", args.floor},
          {"jenks_k", args.jenks_k},
          {"epsilon", args.epsilon},
          {"self_th", args.self_th},
          {"dispersed_th", args.dispersed_th},
          {"acquired_th", args.acquired_th},
          {"seed", args.seed}}},
        {"results",
         {{"accounts", corpus.accounts.size()},
          {"posts_accepted", corpus.posts.size()},
          {"posts_rejected", corpus.rejected},
          {"edges", edges.size()},
          {"clusters", attribution.clusters.size()},
          {"replica_threshold", attribution.replica_threshold},
          {"gvf", attribution.gvf},
          {"threshold_fallback", attribution.threshold_fallback}}}};
    json artifacts;
    for (const char* name : {"attribution.jsonl", "chord.jsonl", "roles.csv", "attributes.csv"})
        artifacts[name] = {{"sha256", newsflow::sha256_file(out_dir / name)}};
    if (args.dump_edges)
        artifacts["edges.csv"] = {{"sha256", newsflow::sha256_file(out_dir / "edges.csv")}};
    manifest["artifacts"] = artifacts;
    newsflow::atomic_write(out_dir / "manifest.json", manifest.dump(2) + "\n");

    std::cout << "analyze: " << corpus.posts.size() << " posts, " << edges.size() << " edges, "
              << attribution.clusters.size() << " clusters, threshold "
              << newsflow::format_double(attribution.replica_threshold) << " (gvf "
              << newsflow::format_double(attribution.gvf) << ")\n";
    return 0;
}

int run_fit(const std::string& table_path, const std::string& response,
            const std::string& out_path, const std::string& corr_path) {
    std::ifstream in(table_path);
    if (!in) throw newsflow::ValidationError("cannot open attribute table: " + table_path);
    newsflow::AttributeTable table = newsflow::read_attribute_csv(in);

    const auto& known = newsflow::AttributeTable::numeric_columns();
    std::string column = "mean_" + response;
    if (std::find(known.begin(), known.end(), column) == known.end()) {
        if (std::find(known.begin(), known.end(), response) == known.end())
            throw newsflow::ValidationError("unknown response column \"" + response + "\"");
        column = response;
    }
    auto values = table.column(column);
    if (std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; }))
        throw newsflow::ValidationError("response column \"" + response + "\" has no data");

    const std::vector<std::string> predictors = {"posts", "followers", "in_total"};
    auto fit = newsflow::ols_fit(table, column, predictors);
    std::cout << newsflow::render_regression_report(fit);

    if (!out_path.empty()) {
        std::ostringstream buf;
        newsflow::write_fit_json(buf, fit);
        newsflow::atomic_write(out_path, buf.str());
    }
    if (!corr_path.empty()) {
        std::vector<std::string> cols = {"posts",       "followers",   "in_total",
                                         "w_self",      "w_dispersed", "w_acquired",
                                         column};
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        auto corr = newsflow::correlation_matrix(table, cols);
        std::ostringstream buf;
        newsflow::write_correlation_csv(buf, corr);
        newsflow::atomic_write(corr_path, buf.str());
    }
    return 0;
}

int run_predict(const std::string& fit_path, const std::vector<std::string>& at) {
    newsflow::RegressionFit fit = newsflow::read_fit_json(fit_path);
    std::map<std::string, double> features;
    for (const std::string& assignment : at) {
        auto eq = assignment.find('=');
        if (eq == std::string::npos)
            throw newsflow::ValidationError("--at expects name=value, got \"" + assignment + "\"");
        std::string name = assignment.substr(0, eq);
        try {
            features[name] = std::stod(assignment.substr(eq + 1));
        } catch (const std::exception&) {
            throw newsflow::ValidationError("bad value in --at \"" + assignment + "\"");
        }
        bool known = name == "(Intercept)";
        for (const auto& c : fit.coefficients) known = known || c.name == name;
        if (!known)
            throw newsflow::ValidationError("feature \"" + name + "\" not in fit terms");
    }
    std::cout << newsflow::format_fixed(newsflow::predict(fit, features), 1) << "\n";
    return 0;
}

int run_synth(const newsflow::SynthConfig& config, const std::string& out) {
    newsflow::SynthCorpus synth = newsflow::generate_corpus(config);
    fs::path out_dir(out);
    fs::create_directories(out_dir);
    {
        std::ostringstream buf;
        newsflow::write_posts_jsonl(buf, synth.corpus);
        newsflow::atomic_write(out_dir / "posts.jsonl", buf.str());
    }
    {
        std::ostringstream buf;
        newsflow::write_accounts_jsonl(buf, synth.corpus);
        newsflow::atomic_write(out_dir / "accounts.jsonl", buf.str());
    }
    {
        std::ostringstream buf;
        newsflow::write_truth_jsonl(buf, synth.truth);
        newsflow::atomic_write(out_dir / "truth.jsonl", buf.str());
    }
    std::cout << "synth: " << synth.corpus.accounts.size() << " accounts, "
              << synth.corpus.posts.size() << " posts -> " << out << "\n";
    return 0;
}

int run_eval(const std::string& pred_path, const std::string& truth_path) {
    auto predicted = newsflow::read_labeling_jsonl(pred_path);
    auto truth = newsflow::read_labeling_jsonl(truth_path);
    auto metrics = newsflow::evaluate(predicted, truth);
    std::cout << "pair_precision=" << newsflow::format_double(metrics.pair_precision) << "\n"
              << "pair_recall=" << newsflow::format_double(metrics.pair_recall) << "\n"
              << "pair_f1=" << newsflow::format_double(metrics.pair_f1) << "\n"
              << "originator_accuracy="
              << newsflow::format_double(metrics.originator_accuracy) << "\n"
              << "predicted_pairs=" << metrics.predicted_pairs << "\n"
              << "truth_pairs=" << metrics.truth_pairs << "\n"
              << "vacuous_precision=" << (metrics.vacuous_precision ? "true" : "false") << "\n";
    return 0;
}

int run_stats(const std::string& posts, const std::string& accounts) {
    newsflow::Corpus corpus = newsflow::load_corpus(posts, accounts);
    if (corpus.posts.empty()) throw newsflow::ValidationError("empty corpus");
    newsflow::CorpusStats stats = newsflow::corpus_stats(corpus);
    auto quantiles_json = [](const newsflow::Quantiles& q) {
        return json{{"min", q.min}, {"p25", q.p25}, {"median", q.median},
                    {"p75", q.p75}, {"max", q.max}};
    };
    json accounts_json = json::array();
    for (const auto& row : stats.accounts) {
        accounts_json.push_back({{"account", row.account_id},
                                 {"posts", row.post_count},
                                 {"followers", row.followers},
                                 {"mean_likes", row.mean_likes},
                                 {"mean_shares", row.mean_shares},
                                 {"mean_comments", row.mean_comments},
                                 {"mean_retweets", row.mean_retweets},
                                 {"mean_favorites", row.mean_favorites}});
    }
    json out{{"accounts", accounts_json},
             {"rejected", corpus.rejected},
             {"quantiles",
              {{"post_counts", quantiles_json(stats.post_counts)},
               {"mean_likes", quantiles_json(stats.mean_likes)},
               {"mean_shares", quantiles_json(stats.mean_shares)},
               {"mean_comments", quantiles_json(stats.mean_comments)},
               {"mean_retweets", quantiles_json(stats.mean_retweets)},
               {"mean_favorites", quantiles_json(stats.mean_favorites)}}}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"content-origination analysis for multi-account post corpora"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "detect replicas, build the interaction graph, classify roles");
    add_analyze_flags(analyze, analyze_args);

    std::string fit_table, fit_response, fit_out, fit_corr;
    CLI::App* fit = app.add_subcommand("fit", "OLS regression of reader reactions");
    fit->add_option("--table", fit_table, "attributes.csv from analyze")->required();
    fit->add_option("--response", fit_response,
                    "reaction kind (likes, shares, comments, retweets, favorites)")
        ->required();
    fit->add_option("--out", fit_out, "write the fit as JSON");
    fit->add_option("--corr-out", fit_corr, "write the correlation matrix as CSV");

    std::string predict_fit;
    std::vector<std::string> predict_at;
    CLI::App* predict = app.add_subcommand("predict", "predict reactions from a saved fit");
    predict->add_option("--fit", predict_fit, "fit JSON from the fit subcommand")->required();
    predict->add_option("--at", predict_at, "feature value, name=value (repeatable)");

    newsflow::SynthConfig synth_config;
    std::string synth_out;
    CLI::App* synth = app.add_subcommand("synth", "generate a corpus with planted ground truth");
    synth->add_option("--num-accounts", synth_config.accounts, "number of accounts");
    synth->add_option("--posts-per-account", synth_config.posts_per_account, "posts per account");
    synth->add_option("--replica-rate", synth_config.replica_rate, "fraction of posts copied");
    synth->add_option("--mutation-rate", synth_config.mutation_rate,
                      "fraction of tokens edited per replica");
    synth->add_option("--delay-min", synth_config.copy_delay_min, "min copy delay, seconds");
    synth->add_option("--delay-max", synth_config.copy_delay_max, "max copy delay, seconds");
    synth->add_option("--mix-producer", synth_config.mix_producer, "producer archetype fraction");
    synth->add_option("--mix-provider", synth_config.mix_provider, "provider archetype fraction");
    synth->add_option("--mix-consumer", synth_config.mix_consumer, "consumer archetype fraction");
    synth->add_option("--seed", synth_config.seed, "generator seed");
    synth->add_option("--out", synth_out, "output directory")->required();

    std::string eval_pred, eval_truth;
    CLI::App* eval = app.add_subcommand("eval", "score an attribution dump against ground truth");
    eval->add_option("--pred", eval_pred, "attribution.jsonl from analyze")->required();
    eval->add_option("--truth", eval_truth, "truth.jsonl from synth")->required();

    std::string stats_posts, stats_accounts;
    CLI::App* stats = app.add_subcommand("stats", "descriptive corpus statistics as JSON");
    stats->add_option("--posts", stats_posts, "posts file")->required();
    stats->add_option("--accounts", stats_accounts, "accounts file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // flag errors are validation failures
    }

    try {
        if (*analyze) return run_analyze(analyze_args);
        if (*fit) return run_fit(fit_table, fit_response, fit_out, fit_corr);
        if (*predict) return run_predict(predict_fit, predict_at);
        if (*synth) return run_synth(synth_config, synth_out);
        if (*eval) return run_eval(eval_pred, eval_truth);
        if (*stats) return run_stats(stats_posts, stats_accounts);
    } catch (const newsflow::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
