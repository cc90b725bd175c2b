#include "newsflow/stats.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "newsflow/errors.hpp"
#include "newsflow/io.hpp"

namespace newsflow {

const std::vector<std::string>& AttributeTable::numeric_columns() {
    static const std::vector<std::string> kColumns = {
        "posts",      "followers",  "in_total",      "w_self",        "w_dispersed",
        "w_acquired", "mean_likes", "mean_shares",   "mean_comments", "mean_retweets",
        "mean_favorites"};
    return kColumns;
}

namespace {

double cell(const AttributeRow& row, std::string_view name) {
    if (name == "posts") return row.posts;
    if (name == "followers") return row.followers;
    if (name == "in_total") return row.in_total;
    if (name == "w_self") return row.w_self;
    if (name == "w_dispersed") return row.w_dispersed;
    if (name == "w_acquired") return row.w_acquired;
    if (name == "mean_likes") return row.mean_likes;
    if (name == "mean_shares") return row.mean_shares;
    if (name == "mean_comments") return row.mean_comments;
    if (name == "mean_retweets") return row.mean_retweets;
    if (name == "mean_favorites") return row.mean_favorites;
    throw ValidationError("unknown column \"" + std::string(name) + "\"");
}

void set_cell(AttributeRow& row, std::string_view name, double v) {
    if (name == "posts") row.posts = v;
    else if (name == "followers") row.followers = v;
    else if (name == "in_total") row.in_total = v;
    else if (name == "w_self") row.w_self = v;
    else if (name == "w_dispersed") row.w_dispersed = v;
    else if (name == "w_acquired") row.w_acquired = v;
    else if (name == "mean_likes") row.mean_likes = v;
    else if (name == "mean_shares") row.mean_shares = v;
    else if (name == "mean_comments") row.mean_comments = v;
    else if (name == "mean_retweets") row.mean_retweets = v;
    else if (name == "mean_favorites") row.mean_favorites = v;
    else throw ValidationError("unknown column \"" + std::string(name) + "\"");
}

}  // namespace

std::vector<double> AttributeTable::column(std::string_view name) const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const AttributeRow& row : rows) out.push_back(cell(row, name));
    return out;
}

AttributeTable build_attribute_table(const Corpus& corpus, const InteractionGraph& graph) {
    AttributeTable table;
    CorpusStats stats = corpus_stats(corpus);  // account rows sorted by id
    table.rows.reserve(stats.accounts.size());
    for (std::size_t i = 0; i < stats.accounts.size(); ++i) {
        const AccountSummary& summary = stats.accounts[i];
        const InteractionProfile& profile = graph.profiles[i];
        AttributeRow row;
        row.account_id = summary.account_id;
        row.has_posts = summary.post_count > 0;
        row.posts = static_cast<double>(summary.post_count);
        row.followers = static_cast<double>(summary.followers);
        row.in_total = static_cast<double>(profile.in_total);
        row.w_self = profile.w_self;
        row.w_dispersed = profile.w_dispersed;
        row.w_acquired = profile.w_acquired;
        row.mean_likes = summary.mean_likes;
        row.mean_shares = summary.mean_shares;
        row.mean_comments = summary.mean_comments;
        row.mean_retweets = summary.mean_retweets;
        row.mean_favorites = summary.mean_favorites;
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_attribute_csv(std::ostream& out, const AttributeTable& table) {
    out << "account";
    for (const std::string& c : AttributeTable::numeric_columns()) out << ',' << c;
    out << '\n';
    for (const AttributeRow& row : table.rows) {
        out << row.account_id;
        for (const std::string& c : AttributeTable::numeric_columns())
            out << ',' << format_double(cell(row, c));
        out << '\n';
    }
}

AttributeTable read_attribute_csv(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ValidationError("attribute table: empty file");
    std::vector<std::string> names;
    {
        std::stringstream ss(header);
        std::string field;
        while (std::getline(ss, field, ',')) names.push_back(field);
    }
    if (names.empty() || names[0] != "account")
        throw ValidationError("attribute table: first column must be 'account'");

    AttributeTable table;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        AttributeRow row;
        std::size_t col = 0;
        while (std::getline(ss, field, ',')) {
            if (col >= names.size())
                throw ValidationError("attribute table line " + std::to_string(lineno) +
                                      ": too many fields");
            if (col == 0) {
                row.account_id = field;
            } else {
                try {
                    set_cell(row, names[col], std::stod(field));
                } catch (const std::invalid_argument&) {
                    throw ValidationError("attribute table line " + std::to_string(lineno) +
                                          ": bad number \"" + field + "\"");
                }
            }
            ++col;
        }
        if (col != names.size())
            throw ValidationError("attribute table line " + std::to_string(lineno) +
                                  ": missing fields");
        row.has_posts = row.posts > 0;
        table.rows.push_back(std::move(row));
    }
    return table;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ValidationError("pearson: length mismatch");
    if (x.size() < 3) throw ValidationError("pearson: need at least 3 observations");
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw ValidationError("pearson: zero-variance input");
    return sxy / std::sqrt(sxx * syy);
}

CorrelationMatrix correlation_matrix(const AttributeTable& table,
                                     std::span<const std::string> columns) {
    if (table.rows.size() < 3)
        throw ValidationError("correlation matrix: need at least 3 rows");
    CorrelationMatrix m;
    m.columns.assign(columns.begin(), columns.end());
    const std::size_t k = m.columns.size();

    std::vector<std::vector<double>> data;
    data.reserve(k);
    for (const std::string& c : m.columns) data.push_back(table.column(c));

    m.zero_variance.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        double first = data[i][0];
        m.zero_variance[i] =
            std::all_of(data[i].begin(), data[i].end(), [&](double v) { return v == first; });
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    m.r.assign(k, std::vector<double>(k, nan));
    for (std::size_t i = 0; i < k; ++i) {
        if (!m.zero_variance[i]) m.r[i][i] = 1.0;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (m.zero_variance[i] || m.zero_variance[j]) continue;
            double r = pearson(data[i], data[j]);
            m.r[i][j] = r;
            m.r[j][i] = r;
        }
    }
    return m;
}

void write_correlation_csv(std::ostream& out, const CorrelationMatrix& m) {
    out << "column";
    for (const std::string& c : m.columns) out << ',' << c;
    out << '\n';
    for (std::size_t i = 0; i < m.columns.size(); ++i) {
        out << m.columns[i];
        for (std::size_t j = 0; j < m.columns.size(); ++j) {
            out << ',';
            if (std::isnan(m.r[i][j])) {
                out << "";  // flagged empty cell for a zero-variance column
            } else {
                out << format_double(m.r[i][j]);
            }
        }
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// special functions

namespace {

// Continued fraction for the incomplete beta (Lentz's method).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-14;
    constexpr double kTiny = 1e-300;

    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0) throw ValidationError("incomplete_beta: a, b must be > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    // the continued fraction converges fast only for x < (a+1)/(a+b+2)
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * betacf(a, b, x) / a;
    }
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
    if (df <= 0.0) throw ValidationError("student t: df must be > 0");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(t)) return 0.0;
    double x = df / (df + t * t);
    return incomplete_beta(df / 2.0, 0.5, x);
}

double f_upper_tail_p(double f, double df1, double df2) {
    if (df1 <= 0.0 || df2 <= 0.0) throw ValidationError("F test: df must be > 0");
    if (f <= 0.0) return 1.0;
    if (std::isinf(f)) return 0.0;
    return incomplete_beta(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * f));
}

// ---------------------------------------------------------------------------
// regression

RegressionFit ols_fit(const AttributeTable& table, std::string_view response,
                      std::span<const std::string> predictors) {
    const std::size_t n = table.rows.size();
    const std::size_t terms = predictors.size() + 1;  // + intercept
    if (n < terms + 1)
        throw ValidationError("ols: need at least " + std::to_string(terms + 1) + " rows");

    std::vector<double> y = table.column(response);
    Eigen::MatrixXd X(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(terms));
    X.col(0).setOnes();
    for (std::size_t j = 0; j < predictors.size(); ++j) {
        std::vector<double> col = table.column(predictors[j]);
        for (std::size_t i = 0; i < n; ++i)
            X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j + 1)) = col[i];
    }
    Eigen::VectorXd yv = Eigen::Map<Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(n));

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    qr.setThreshold(1e-10);
    if (qr.rank() < static_cast<Eigen::Index>(terms)) {
        // name the columns involved: those whose pivot was deferred past the rank
        std::string names;
        const auto& perm = qr.colsPermutation().indices();
        for (Eigen::Index r = qr.rank(); r < static_cast<Eigen::Index>(terms); ++r) {
            Eigen::Index col = perm(r);
            if (!names.empty()) names += ", ";
            names += col == 0 ? "(Intercept)" : predictors[static_cast<std::size_t>(col) - 1];
        }
        throw ValidationError("ols: design matrix is rank deficient (collinear: " + names + ")");
    }

    Eigen::VectorXd beta = qr.solve(yv);
    Eigen::VectorXd resid = yv - X * beta;
    double ssr = resid.squaredNorm();
    double ybar = yv.mean();
    double sst = (yv.array() - ybar).matrix().squaredNorm();

    RegressionFit fit;
    fit.response = std::string(response);
    fit.n = static_cast<std::int64_t>(n);
    fit.df_resid = static_cast<std::int64_t>(n - terms);
    double sigma2 = ssr / static_cast<double>(fit.df_resid);
    fit.sigma = std::sqrt(sigma2);
    fit.r_squared = sst > 0.0 ? 1.0 - ssr / sst : 1.0;

    // (X^T X)^-1 from the R factor: X P = Q R  =>  (X^T X)^-1 = P R^-1 R^-T P^T
    Eigen::MatrixXd R = qr.matrixR()
                            .topLeftCorner(static_cast<Eigen::Index>(terms),
                                           static_cast<Eigen::Index>(terms))
                            .triangularView<Eigen::Upper>();
    Eigen::MatrixXd Rinv = R.triangularView<Eigen::Upper>().solve(
        Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(terms),
                                  static_cast<Eigen::Index>(terms)));
    Eigen::MatrixXd xtx_inv_permuted = Rinv * Rinv.transpose();
    Eigen::MatrixXd P = qr.colsPermutation();
    Eigen::MatrixXd xtx_inv = P * xtx_inv_permuted * P.transpose();

    for (std::size_t j = 0; j < terms; ++j) {
        Coefficient coef;
        coef.name = j == 0 ? "(Intercept)" : predictors[j - 1];
        coef.estimate = beta(static_cast<Eigen::Index>(j));
        double var = sigma2 * xtx_inv(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j));
        coef.std_error = var > 0.0 ? std::sqrt(var) : 0.0;
        if (coef.std_error > 0.0) {
            coef.t_value = coef.estimate / coef.std_error;
            coef.p_value = student_t_two_sided_p(coef.t_value, static_cast<double>(fit.df_resid));
        } else {
            coef.t_value = coef.estimate == 0.0
                               ? 0.0
                               : std::copysign(std::numeric_limits<double>::infinity(),
                                               coef.estimate);
            coef.p_value = coef.estimate == 0.0 ? 1.0 : 0.0;
        }
        fit.coefficients.push_back(std::move(coef));
    }

    double df_model = static_cast<double>(predictors.size());
    if (df_model > 0.0 && ssr > 0.0 && sst > ssr) {
        fit.model_f = ((sst - ssr) / df_model) / sigma2;
        fit.model_p_value = f_upper_tail_p(fit.model_f, df_model,
                                           static_cast<double>(fit.df_resid));
    } else if (ssr == 0.0) {
        fit.model_f = std::numeric_limits<double>::infinity();
        fit.model_p_value = 0.0;
    } else {
        fit.model_f = 0.0;
        fit.model_p_value = 1.0;
    }
    return fit;
}

double predict(const RegressionFit& fit, const std::map<std::string, double>& features) {
    double value = 0;
    for (const Coefficient& coef : fit.coefficients) {
        if (coef.name == "(Intercept)") {
            value += coef.estimate;
        } else if (auto it = features.find(coef.name); it != features.end()) {
            value += coef.estimate * it->second;
        }
    }
    return value;
}

std::string significance_code(double p_value) {
    if (p_value < 0.001) return "***";
    if (p_value < 0.01) return "**";
    if (p_value < 0.05) return "*";
    if (p_value < 0.1) return ".";
    return "";
}

namespace {

std::string round3(double v) {
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    if (std::isnan(v)) return "NaN";
    std::string s = format_fixed(v, 3);
    return s == "-0.000" ? "0.000" : s;
}

}  // namespace

std::string render_regression_report(const RegressionFit& fit) {
    std::vector<std::array<std::string, 5>> rows;
    rows.push_back({"", "Estimate", "Std. Error", "t value", "Pr(>t)"});
    for (const Coefficient& c : fit.coefficients) {
        std::string p = round3(c.p_value);
        std::string stars = significance_code(c.p_value);
        rows.push_back({c.name, round3(c.estimate), round3(c.std_error), round3(c.t_value),
                        stars.empty() ? p : p + stars});
    }
    std::array<std::size_t, 5> widths{};
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < 5; ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    std::ostringstream out;
    out << "Model " << fit.response << " (n=" << fit.n << ", df=" << fit.df_resid << ")\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < 5; ++i) {
            if (i) out << "  ";
            out << row[i] << std::string(widths[i] - row[i].size(), ' ');
        }
        out << '\n';
    }
    out << "R-squared: " << round3(fit.r_squared)
        << " and P-value: " << round3(fit.model_p_value) << '\n';
    out << "Signif. codes:  0 '***' 0.001 '**' 0.01 '*' 0.05 '.' 0.1 ' ' 1\n";
    return out.str();
}

}  // namespace newsflow
