#include "olab/arma.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <boost/math/special_functions/gamma.hpp>

#include "olab/errors.hpp"
#include "olab/rng.hpp"
#include "olab/timeseries.hpp"

namespace olab {

namespace {

// --- small dense linear algebra (normal equations are (p+q+1)^2) ----------

using Matrix = std::vector<std::vector<double>>;

// solves A x = b for symmetric positive definite A, in place; adds a ridge
// and retries when the factorization stalls
std::vector<double> solve_spd(Matrix a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (int attempt = 0; attempt < 8; ++attempt) {
        Matrix l(n, std::vector<double>(n, 0.0));
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                double sum = a[i][j];
                for (std::size_t k = 0; k < j; ++k) sum -= l[i][k] * l[j][k];
                if (i == j) {
                    if (sum <= 0.0) {
                        ok = false;
                        break;
                    }
                    l[i][i] = std::sqrt(sum);
                } else {
                    l[i][j] = sum / l[j][j];
                }
            }
        }
        if (ok) {
            std::vector<double> y(n), x(n);
            for (std::size_t i = 0; i < n; ++i) {
                double sum = b[i];
                for (std::size_t k = 0; k < i; ++k) sum -= l[i][k] * y[k];
                y[i] = sum / l[i][i];
            }
            for (std::size_t ii = n; ii-- > 0;) {
                double sum = y[ii];
                for (std::size_t k = ii + 1; k < n; ++k) sum -= l[k][ii] * x[k];
                x[ii] = sum / l[ii][ii];
            }
            return x;
        }
        double ridge = 0.0;
        for (std::size_t i = 0; i < n; ++i) ridge = std::max(ridge, std::abs(a[i][i]));
        ridge = std::max(ridge, 1.0) * 1e-10 * std::pow(10.0, attempt);
        for (std::size_t i = 0; i < n; ++i) a[i][i] += ridge;
    }
    throw NonConvergence("normal equations not positive definite");
}

Matrix inverse_spd(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<double>(n, 0.0));
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<double> e(n, 0.0);
        e[col] = 1.0;
        const auto x = solve_spd(a, e);
        for (std::size_t row = 0; row < n; ++row) inv[row][col] = x[row];
    }
    return inv;
}

// ordinary least squares y ~ X, returns coefficients
std::vector<double> ols(const std::vector<std::vector<double>>& rows, const std::vector<double>& y) {
    const std::size_t k = rows.front().size();
    Matrix xtx(k, std::vector<double>(k, 0.0));
    std::vector<double> xty(k, 0.0);
    for (std::size_t t = 0; t < rows.size(); ++t) {
        for (std::size_t i = 0; i < k; ++i) {
            xty[i] += rows[t][i] * y[t];
            for (std::size_t j = 0; j <= i; ++j) xtx[i][j] += rows[t][i] * rows[t][j];
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) xtx[i][j] = xtx[j][i];
    return solve_spd(std::move(xtx), std::move(xty));
}

// --- residual recursion ----------------------------------------------------

// conditional residuals: e_t = y_t - c - sum ar_i y_{t-i} - sum ma_j e_{t-j},
// with e set to zero before the start-up boundary m0 = max(p,q)
void residuals_at(std::span<const double> y, double c, std::span<const double> ar,
                  std::span<const double> ma, std::vector<double>& e) {
    const int p = static_cast<int>(ar.size());
    const int q = static_cast<int>(ma.size());
    const int m0 = std::max(p, q);
    const int len = static_cast<int>(y.size());
    e.assign(len, 0.0);
    for (int t = m0; t < len; ++t) {
        double pred = c;
        for (int i = 0; i < p; ++i) pred += ar[i] * y[t - 1 - i];
        double moving = 0.0;
        for (int j = 0; j < q; ++j) moving += ma[j] * e[t - 1 - j];
        e[t] = y[t] - pred - moving;
    }
}

double sse_of(std::span<const double> e, int m0) {
    double sse = 0.0;
    for (std::size_t t = m0; t < e.size(); ++t) sse += e[t] * e[t];
    return sse;
}

// roots of  coeff[0] + coeff[1] z + ... + coeff[d] z^d  by Durand-Kerner
std::vector<std::complex<double>> poly_roots(std::vector<double> coeff) {
    while (coeff.size() > 1 && std::abs(coeff.back()) < 1e-14) coeff.pop_back();
    const int d = static_cast<int>(coeff.size()) - 1;
    if (d < 1) return {};
    std::vector<std::complex<double>> monic(d + 1);
    for (int i = 0; i <= d; ++i) monic[i] = coeff[i] / coeff[d];
    std::vector<std::complex<double>> roots(d);
    const std::complex<double> start(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (int i = 0; i < d; ++i) {
        acc *= start;
        roots[i] = acc;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double shift = 0.0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> value(0.0, 0.0);
            for (int k = d; k >= 0; --k) value = value * roots[i] + monic[k];
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < d; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            const std::complex<double> delta = value / denom;
            roots[i] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-12) break;
    }
    return roots;
}

}  // namespace

double arma_aic(double sigma2, int p, int q, std::int64_t length) {
    return std::log(sigma2) + 2.0 * (p + q) / static_cast<double>(length);
}

ArmaModel fit_arma(std::span<const double> series, int p, int q) {
    const int len = static_cast<int>(series.size());
    const int k = p + q + 1;
    if (len <= 10 * k)
        throw DomainError("fit_arma: series length must exceed 10(p+q+1)");

    const int m0 = std::max(p, q);

    // --- Hannan-Rissanen initialization ---
    std::vector<double> theta(k, 0.0);  // [c, ar..., ma...]
    {
        double mean = 0.0;
        for (double v : series) mean += v;
        mean /= len;

        std::vector<double> proxy(len, 0.0);  // innovation proxies from a long AR
        if (q > 0) {
            const int m = std::min(len / 4, std::max(20, p + q + 5));
            std::vector<std::vector<double>> rows;
            std::vector<double> rhs;
            for (int t = m; t < len; ++t) {
                std::vector<double> row(m + 1, 1.0);
                for (int i = 0; i < m; ++i) row[i + 1] = series[t - 1 - i];
                rows.push_back(std::move(row));
                rhs.push_back(series[t]);
            }
            const auto beta = ols(rows, rhs);
            for (int t = m; t < len; ++t) {
                double pred = beta[0];
                for (int i = 0; i < m; ++i) pred += beta[i + 1] * series[t - 1 - i];
                proxy[t] = series[t] - pred;
            }
        }
        const int start = std::max(m0, q > 0 ? std::min(len / 4, std::max(20, p + q + 5)) : m0);
        std::vector<std::vector<double>> rows;
        std::vector<double> rhs;
        for (int t = start; t < len; ++t) {
            std::vector<double> row(k, 1.0);
            for (int i = 0; i < p; ++i) row[1 + i] = series[t - 1 - i];
            for (int j = 0; j < q; ++j) row[1 + p + j] = proxy[t - 1 - j];
            rows.push_back(std::move(row));
            rhs.push_back(series[t]);
        }
        if (p + q == 0) {
            theta[0] = mean;
        } else {
            theta = ols(rows, rhs);
        }
    }

    // --- damped Gauss-Newton on the conditional sum of squares ---
    std::vector<double> e, e_try;
    auto unpack = [&](const std::vector<double>& th) {
        return std::tuple<double, std::span<const double>, std::span<const double>>(
            th[0], std::span<const double>(th.data() + 1, p),
            std::span<const double>(th.data() + 1 + p, q));
    };
    auto compute_sse = [&](const std::vector<double>& th, std::vector<double>& buf) {
        auto [c, ar, ma] = unpack(th);
        residuals_at(series, c, ar, ma, buf);
        return sse_of(buf, m0);
    };

    double sse = compute_sse(theta, e);
    double lambda = 1e-3;
    int iterations = 0;
    bool converged = (p + q == 0);

    std::vector<std::vector<double>> jac(k, std::vector<double>(len, 0.0));
    for (int iter = 0; iter < 200 && !converged; ++iter) {
        iterations = iter + 1;
        auto [c, ar, ma] = unpack(theta);

        // derivative recursions share the MA feedback structure of e_t
        for (int col = 0; col < k; ++col) std::fill(jac[col].begin(), jac[col].end(), 0.0);
        for (int t = m0; t < len; ++t) {
            jac[0][t] = -1.0;
            for (int i = 0; i < p; ++i) jac[1 + i][t] = -series[t - 1 - i];
            for (int j = 0; j < q; ++j) jac[1 + p + j][t] = -e[t - 1 - j];
            for (int j = 0; j < q; ++j)
                for (int col = 0; col < k; ++col) jac[col][t] -= ma[j] * jac[col][t - 1 - j];
        }

        Matrix jtj(k, std::vector<double>(k, 0.0));
        std::vector<double> jte(k, 0.0);
        for (int t = m0; t < len; ++t) {
            for (int i = 0; i < k; ++i) {
                jte[i] += jac[i][t] * e[t];
                for (int j = 0; j <= i; ++j) jtj[i][j] += jac[i][t] * jac[j][t];
            }
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) jtj[i][j] = jtj[j][i];

        bool stepped = false;
        for (int inner = 0; inner < 25; ++inner) {
            Matrix damped = jtj;
            for (int i = 0; i < k; ++i) damped[i][i] += lambda * std::max(jtj[i][i], 1e-12);
            std::vector<double> rhs(k);
            for (int i = 0; i < k; ++i) rhs[i] = -jte[i];
            std::vector<double> delta;
            try {
                delta = solve_spd(std::move(damped), std::move(rhs));
            } catch (const NonConvergence&) {
                lambda *= 10.0;
                continue;
            }
            std::vector<double> trial = theta;
            for (int i = 0; i < k; ++i) trial[i] += delta[i];
            const double trial_sse = compute_sse(trial, e_try);
            if (std::isfinite(trial_sse) && trial_sse <= sse) {
                const double rel = (sse - trial_sse) / std::max(sse, 1e-300);
                theta = std::move(trial);
                e.swap(e_try);
                sse = trial_sse;
                lambda = std::max(lambda * 0.1, 1e-12);
                stepped = true;
                if (rel < 1e-10) converged = true;
                break;
            }
            lambda *= 10.0;
            if (lambda > 1e12) break;
        }
        if (!stepped) converged = true;  // no descent direction left
    }
    if (!converged) throw NonConvergence("fit_arma: Gauss-Newton did not converge");

    // --- assemble the model ---
    ArmaModel model;
    model.p = p;
    model.q = q;
    model.sample_length = len;
    model.iterations = iterations;

    const int used = len - m0;
    const double dof_sigma2 = std::max(1, used - k);
    const double resid_var = sse / dof_sigma2;

    std::vector<double> std_errors(k, 0.0);
    {
        auto [c, ar, ma] = unpack(theta);
        for (int col = 0; col < k; ++col) std::fill(jac[col].begin(), jac[col].end(), 0.0);
        residuals_at(series, c, ar, ma, e);
        for (int t = m0; t < len; ++t) {
            jac[0][t] = -1.0;
            for (int i = 0; i < p; ++i) jac[1 + i][t] = -series[t - 1 - i];
            for (int j = 0; j < q; ++j) jac[1 + p + j][t] = -e[t - 1 - j];
            for (int j = 0; j < q; ++j)
                for (int col = 0; col < k; ++col) jac[col][t] -= ma[j] * jac[col][t - 1 - j];
        }
        Matrix jtj(k, std::vector<double>(k, 0.0));
        for (int t = m0; t < len; ++t)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j <= i; ++j) jtj[i][j] += jac[i][t] * jac[j][t];
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) jtj[i][j] = jtj[j][i];
        const auto cov = inverse_spd(jtj);
        for (int i = 0; i < k; ++i) std_errors[i] = std::sqrt(std::max(cov[i][i], 0.0) * resid_var);
    }

    auto make_coef = [&](int idx) {
        ArmaCoefficient coef;
        coef.value = theta[idx];
        coef.std_error = std_errors[idx];
        coef.t_stat = coef.std_error > 0.0 ? std::abs(coef.value) / coef.std_error : 0.0;
        coef.significant = coef.t_stat >= 2.0;
        return coef;
    };
    model.intercept = make_coef(0);
    for (int i = 0; i < p; ++i) model.ar.push_back(make_coef(1 + i));
    for (int j = 0; j < q; ++j) model.ma.push_back(make_coef(1 + p + j));

    model.residuals.assign(e.begin() + m0, e.end());
    model.sigma2 = sse / static_cast<double>(len);
    model.aic = arma_aic(model.sigma2, p, q, len);

    {  // squared correlation of fitted vs observed
        double my = 0.0, mf = 0.0;
        for (int t = m0; t < len; ++t) {
            my += series[t];
            mf += series[t] - e[t];
        }
        my /= used;
        mf /= used;
        double cyf = 0.0, vy = 0.0, vf = 0.0;
        for (int t = m0; t < len; ++t) {
            const double dy = series[t] - my;
            const double df = (series[t] - e[t]) - mf;
            cyf += dy * df;
            vy += dy * dy;
            vf += df * df;
        }
        model.r_squared = (vy > 0.0 && vf > 0.0) ? (cyf * cyf) / (vy * vf) : 0.0;
    }

    if (p > 0) {
        std::vector<double> phi(p + 1, 0.0);
        phi[0] = 1.0;
        for (int i = 0; i < p; ++i) phi[i + 1] = -model.ar[i].value;
        for (const auto& root : poly_roots(phi))
            if (std::abs(root) <= 1.0 + 1e-9) {
                model.warnings.push_back("non-stationary: AR root inside the unit circle");
                break;
            }
    }
    if (q > 0) {
        std::vector<double> th(q + 1, 0.0);
        th[0] = 1.0;
        for (int j = 0; j < q; ++j) th[j + 1] = model.ma[j].value;
        for (const auto& root : poly_roots(th))
            if (std::abs(root) <= 1.0 + 1e-9) {
                model.warnings.push_back("non-invertible: MA root inside the unit circle");
                break;
            }
    }
    return model;
}

std::vector<double> simulate_arma(double c, std::span<const double> ar, std::span<const double> ma,
                                  double sigma, int length, std::uint64_t seed, int burn_in) {
    const int p = static_cast<int>(ar.size());
    const int q = static_cast<int>(ma.size());
    Rng rng(seed);
    auto gaussian = [&rng]() {
        // Box-Muller; independent of any library distribution implementation
        double u1 = rng.unit();
        while (u1 <= 0.0) u1 = rng.unit();
        const double u2 = rng.unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    };
    const int total = length + burn_in;
    std::vector<double> y(total, 0.0), e(total, 0.0);
    for (int t = 0; t < total; ++t) {
        e[t] = sigma * gaussian();
        double v = c + e[t];
        for (int i = 0; i < p; ++i) v += ar[i] * (t - 1 - i >= 0 ? y[t - 1 - i] : 0.0);
        for (int j = 0; j < q; ++j) v += ma[j] * (t - 1 - j >= 0 ? e[t - 1 - j] : 0.0);
        y[t] = v;
    }
    return {y.begin() + burn_in, y.end()};
}

LjungBoxResult ljung_box(std::span<const double> residuals, int h, int fitted_params) {
    if (h <= fitted_params)
        throw DomainError("ljung_box: lags must exceed the fitted parameter count");
    const auto r = acf(residuals, h);
    const double len = static_cast<double>(residuals.size());
    double q_stat = 0.0;
    for (int kk = 1; kk <= h; ++kk) q_stat += r[kk] * r[kk] / (len - kk);
    q_stat *= len * (len + 2.0);

    LjungBoxResult out;
    out.q_stat = q_stat;
    out.dof = h - fitted_params;
    out.p_value = boost::math::gamma_q(out.dof / 2.0, q_stat / 2.0);
    return out;
}

IdentifyResult box_jenkins_identify(std::span<const double> series, int p_max, int q_max) {
    IdentifyResult result;
    const int len = static_cast<int>(series.size());

    const int max_lag = std::min(len - 2, 30);
    const auto partial = pacf(series, max_lag);
    const double band = acf_band(series.size());
    int run = 0;
    for (int kk = 1; kk < static_cast<int>(partial.size()); ++kk) {
        if (std::abs(partial[kk]) > band)
            run = kk;
        else
            break;
    }
    result.pacf_suggested_ar = run;

    for (int p = 0; p <= p_max; ++p) {
        for (int q = 0; q <= q_max; ++q) {
            if (len <= 10 * (p + q + 1)) continue;
            ArmaCandidate cand{p, q, 0.0, false, false};
            try {
                const auto model = fit_arma(series, p, q);
                cand.aic = model.aic;
                cand.converged = true;
                cand.all_significant = true;
                for (const auto& coef : model.ar) cand.all_significant &= coef.significant;
                for (const auto& coef : model.ma) cand.all_significant &= coef.significant;
            } catch (const NumericError&) {
                continue;
            }
            result.ranked.push_back(cand);
        }
    }
    std::sort(result.ranked.begin(), result.ranked.end(),
              [](const ArmaCandidate& a, const ArmaCandidate& b) { return a.aic < b.aic; });
    return result;
}

}  // namespace olab
