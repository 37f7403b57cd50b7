#pragma once

#include <optional>
#include <span>
#include <vector>

namespace fraclat {

/// First time the spatial spread max-min falls below the threshold.
struct SyncTimeResult {
  std::optional<long> t_n;  // empty: never reached within the series
  double threshold = 0.01;
};

struct PowerLawFit {
  double exponent = 0.0;   // decay exponent (positive for t^-a data)
  double amplitude = 0.0;  // exp(intercept)
  double t_lo = 0.0;
  double t_hi = 0.0;
  double residual_rms = 0.0;  // in log-log space
  long points_used = 0;
  long zeros_excluded = 0;
};

double spatial_mean(std::span<const double> field);

/// Population standard deviation sqrt(mean((x - mean)^2)); the lattice is the
/// whole population. Requires at least 2 sites.
double spatial_std(std::span<const double> field);

/// max(field) - min(field).
double field_spread(std::span<const double> field);

/// First index t with spread_series[t] < threshold.
SyncTimeResult sync_time(std::span<const double> spread_series,
                         double threshold);

/// Same, computing the spread of each field snapshot first.
SyncTimeResult sync_time_fields(const std::vector<std::vector<double>>& fields,
                                double threshold);

/// Ordinary least squares on (log t, log v) restricted to t in [t_lo, t_hi],
/// after averaging consecutive blocks of deoscillate_period samples
/// (period 1 = no smoothing). Non-positive values are excluded and counted.
/// The returned exponent is the negated slope, so exact t^-a data yields a.
/// Throws std::runtime_error when fewer than 10 usable points remain.
PowerLawFit fit_power_law(std::span<const long> times,
                          std::span<const double> values, long t_lo, long t_hi,
                          int deoscillate_period = 1);

/// Smallest k in [1, max_period] with |s[t] - s[t-k]| < tol for every t in
/// the trailing window; empty when none qualifies. Requires
/// series.size() >= window + max_period and max_period < window.
std::optional<int> detect_period(std::span<const double> series,
                                 int max_period, double tol, long window);

enum class MlRegime { SmallTime, LargeTime };

/// Mittag-Leffler asymptotics of e_a(t) = E_a(-t^a):
/// small-t form exp(-t^a / Gamma(1+a)), large-t form t^-a / Gamma(1-a).
/// Requires t > 0; alpha in (0,1] for SmallTime and (0,1) for LargeTime.
double ml_asymptotic(double t, double alpha, MlRegime regime);

/// Least-squares fit of log T_N against log N; exponent is the (positive for
/// growing T_N) slope. Requires at least 3 sizes.
PowerLawFit fit_sync_scaling(std::span<const int> sizes,
                             std::span<const double> t_n_means);

}  // namespace fraclat
