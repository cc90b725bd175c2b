#ifndef NEWSFLOW_STATS_HPP
#define NEWSFLOW_STATS_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "newsflow/corpus.hpp"
#include "newsflow/graph.hpp"

namespace newsflow {

// One row per account: activity, audience, interaction totals and mean
// reader reactions. Accounts without accepted posts keep zero means and are
// flagged via has_posts.
struct AttributeRow {
    std::string account_id;
    bool has_posts = false;
    double posts = 0;
    double followers = 0;
    double in_total = 0;
    double w_self = 0, w_dispersed = 0, w_acquired = 0;
    double mean_likes = 0, mean_shares = 0, mean_comments = 0, mean_retweets = 0,
           mean_favorites = 0;
};

struct AttributeTable {
    std::vector<AttributeRow> rows;  // sorted by account id

    static const std::vector<std::string>& numeric_columns();
    std::vector<double> column(std::string_view name) const;  // errors on unknown name
};

AttributeTable build_attribute_table(const Corpus& corpus, const InteractionGraph& graph);

void write_attribute_csv(std::ostream& out, const AttributeTable& table);
AttributeTable read_attribute_csv(std::istream& in);

// Sample Pearson r; errors on length mismatch, length < 3 or zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationMatrix {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> r;   // NaN where a column is degenerate
    std::vector<bool> zero_variance;      // flagged columns
};

CorrelationMatrix correlation_matrix(const AttributeTable& table,
                                     std::span<const std::string> columns);

void write_correlation_csv(std::ostream& out, const CorrelationMatrix& m);

struct Coefficient {
    std::string name;
    double estimate = 0;
    double std_error = 0;
    double t_value = 0;
    double p_value = 0;
};

struct RegressionFit {
    std::string response;
    std::vector<Coefficient> coefficients;  // (Intercept) first
    double r_squared = 0;
    double model_f = 0;
    double model_p_value = 0;
    double sigma = 0;  // residual standard error
    std::int64_t n = 0;
    std::int64_t df_resid = 0;
};

// OLS with intercept via column-pivoted Householder QR; standard errors from
// sigma^2 (X^T X)^-1, two-sided t p-values, F-test model p-value. Errors on
// too few rows or a rank-deficient design (naming the collinear columns).
RegressionFit ols_fit(const AttributeTable& table, std::string_view response,
                      std::span<const std::string> predictors);

// intercept + sum estimate * feature; missing features default to 0.
double predict(const RegressionFit& fit, const std::map<std::string, double>& features);

// Aligned-text report: Estimate / Std. Error / t value / Pr(>t) columns,
// significance stars and the code legend, R-squared and model p-value.
std::string render_regression_report(const RegressionFit& fit);

std::string significance_code(double p_value);

// Regularized incomplete beta I_x(a,b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

// Two-sided Student-t tail probability for a given t and integer-free df.
double student_t_two_sided_p(double t, double df);

// Upper tail of the F distribution.
double f_upper_tail_p(double f, double df1, double df2);

}  // namespace newsflow

#endif  // NEWSFLOW_STATS_HPP
