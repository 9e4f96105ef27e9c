#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace olab {

struct ArmaCoefficient {
    double value = 0.0;
    double std_error = 0.0;
    double t_stat = 0.0;
    bool significant = false;  // |t| >= 2
};

// ARMA(p,q) fitted by conditional sum of squares:
//   y_t = c + sum_i ar[i] y_{t-i} + e_t + sum_j ma[j] e_{t-j}
struct ArmaModel {
    int p = 0, q = 0;
    ArmaCoefficient intercept;
    std::vector<ArmaCoefficient> ar;
    std::vector<ArmaCoefficient> ma;
    std::vector<double> residuals;  // length L - max(p,q)
    double sigma2 = 0.0;            // sum of squared residuals / L
    double aic = 0.0;               // log(sigma2) + 2(p+q)/L
    double r_squared = 0.0;         // squared correlation of fitted vs observed
    std::int64_t sample_length = 0;
    int iterations = 0;
    std::vector<std::string> warnings;  // non-stationary / non-invertible
};

double arma_aic(double sigma2, int p, int q, std::int64_t length);

// Hannan-Rissanen initialization refined by damped Gauss-Newton on the
// conditional sum of squares. Throws NonConvergence if the refinement does
// not settle, DomainError when the series is too short (L <= 10(p+q+1)).
ArmaModel fit_arma(std::span<const double> series, int p, int q);

std::vector<double> simulate_arma(double c, std::span<const double> ar, std::span<const double> ma,
                                  double sigma, int length, std::uint64_t seed, int burn_in = 500);

struct LjungBoxResult {
    double q_stat = 0.0;
    double p_value = 0.0;
    int dof = 0;
};

// Q = L(L+2) sum_{k=1..h} r_k^2/(L-k), chi-square with h - fitted_params
// degrees of freedom. Throws DomainError when h <= fitted_params.
LjungBoxResult ljung_box(std::span<const double> residuals, int h, int fitted_params);

struct ArmaCandidate {
    int p = 0, q = 0;
    double aic = 0.0;
    bool all_significant = false;
    bool converged = false;
};

struct IdentifyResult {
    std::vector<ArmaCandidate> ranked;  // by AIC, best first
    int pacf_suggested_ar = 0;          // leading run of pacf lags outside the band
};

IdentifyResult box_jenkins_identify(std::span<const double> series, int p_max, int q_max);

}  // namespace olab
