#include "fraclat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fraclat {
namespace {

struct OlsFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
};

OlsFit ols(std::span<const double> xs, std::span<const double> ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  OlsFit fit;
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    rss += r * r;
  }
  fit.residual_rms = std::sqrt(rss / n);
  return fit;
}

}  // namespace

double spatial_mean(std::span<const double> field) {
  if (field.empty()) throw std::domain_error("spatial_mean: empty field");
  double s = 0.0;
  for (double v : field) s += v;
  return s / static_cast<double>(field.size());
}

double spatial_std(std::span<const double> field) {
  if (field.size() < 2)
    throw std::domain_error("spatial_std: need at least 2 sites");
  const double m = spatial_mean(field);
  double ss = 0.0;
  for (double v : field) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(field.size()));
}

double field_spread(std::span<const double> field) {
  if (field.empty()) throw std::domain_error("field_spread: empty field");
  auto [lo, hi] = std::minmax_element(field.begin(), field.end());
  return *hi - *lo;
}

SyncTimeResult sync_time(std::span<const double> spread_series,
                         double threshold) {
  if (!(threshold > 0.0))
    throw std::domain_error("sync_time: threshold must be > 0");
  SyncTimeResult r;
  r.threshold = threshold;
  for (std::size_t t = 0; t < spread_series.size(); ++t) {
    if (spread_series[t] < threshold) {
      r.t_n = static_cast<long>(t);
      return r;
    }
  }
  return r;
}

SyncTimeResult sync_time_fields(const std::vector<std::vector<double>>& fields,
                                double threshold) {
  std::vector<double> spreads;
  spreads.reserve(fields.size());
  for (const auto& f : fields) spreads.push_back(field_spread(f));
  return sync_time(spreads, threshold);
}

PowerLawFit fit_power_law(std::span<const long> times,
                          std::span<const double> values, long t_lo, long t_hi,
                          int deoscillate_period) {
  if (times.size() != values.size())
    throw std::invalid_argument("fit_power_law: times/values length mismatch");
  if (t_lo >= t_hi)
    throw std::invalid_argument("fit_power_law: need t_lo < t_hi");
  if (deoscillate_period < 1)
    throw std::invalid_argument("fit_power_law: deoscillate_period must be >= 1");

  PowerLawFit fit;
  fit.t_lo = static_cast<double>(t_lo);
  fit.t_hi = static_cast<double>(t_hi);

  std::vector<double> ts, vs;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < t_lo || times[i] > t_hi) continue;
    if (!(values[i] > 0.0)) {
      ++fit.zeros_excluded;
      continue;
    }
    ts.push_back(static_cast<double>(times[i]));
    vs.push_back(values[i]);
  }
  if (ts.size() < 10)
    throw std::runtime_error("fit_power_law: fewer than 10 usable points");

  // Block-average consecutive groups to strip period-k oscillations; the
  // trailing partial block is dropped.
  if (deoscillate_period > 1) {
    const std::size_t p = static_cast<std::size_t>(deoscillate_period);
    const std::size_t blocks = ts.size() / p;
    std::vector<double> bt(blocks), bv(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      double st = 0.0, sv = 0.0;
      for (std::size_t k = 0; k < p; ++k) {
        st += ts[b * p + k];
        sv += vs[b * p + k];
      }
      bt[b] = st / static_cast<double>(p);
      bv[b] = sv / static_cast<double>(p);
    }
    ts = std::move(bt);
    vs = std::move(bv);
    if (ts.size() < 2)
      throw std::runtime_error("fit_power_law: smoothing left fewer than 2 blocks");
  }

  std::vector<double> lx(ts.size()), ly(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    lx[i] = std::log(ts[i]);
    ly[i] = std::log(vs[i]);
  }
  const OlsFit o = ols(lx, ly);
  fit.exponent = -o.slope;
  fit.amplitude = std::exp(o.intercept);
  fit.residual_rms = o.residual_rms;
  fit.points_used = static_cast<long>(ts.size());
  return fit;
}

std::optional<int> detect_period(std::span<const double> series,
                                 int max_period, double tol, long window) {
  if (max_period < 1)
    throw std::invalid_argument("detect_period: max_period must be >= 1");
  if (window <= max_period)
    throw std::invalid_argument("detect_period: need max_period < window");
  const long n = static_cast<long>(series.size());
  if (n < window + max_period)
    throw std::invalid_argument(
        "detect_period: series shorter than window + max_period");

  for (int k = 1; k <= max_period; ++k) {
    bool ok = true;
    for (long t = n - window; t < n; ++t) {
      if (std::abs(series[static_cast<std::size_t>(t)] -
                   series[static_cast<std::size_t>(t - k)]) >= tol) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  return std::nullopt;
}

double ml_asymptotic(double t, double alpha, MlRegime regime) {
  if (!(t > 0.0)) throw std::domain_error("ml_asymptotic: t must be > 0");
  if (regime == MlRegime::SmallTime) {
    if (!(alpha > 0.0) || alpha > 1.0)
      throw std::domain_error("ml_asymptotic: alpha must lie in (0, 1]");
    return std::exp(-std::pow(t, alpha) / std::tgamma(1.0 + alpha));
  }
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error(
        "ml_asymptotic: large-time form needs alpha in (0, 1); Gamma(1-alpha) "
        "has a pole at alpha = 1");
  return std::pow(t, -alpha) / std::tgamma(1.0 - alpha);
}

PowerLawFit fit_sync_scaling(std::span<const int> sizes,
                             std::span<const double> t_n_means) {
  if (sizes.size() != t_n_means.size())
    throw std::invalid_argument("fit_sync_scaling: length mismatch");
  if (sizes.size() < 3)
    throw std::runtime_error("fit_sync_scaling: need at least 3 sizes");

  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] <= 0 || !(t_n_means[i] > 0.0))
      throw std::domain_error("fit_sync_scaling: sizes and means must be > 0");
    lx.push_back(std::log(static_cast<double>(sizes[i])));
    ly.push_back(std::log(t_n_means[i]));
  }
  const OlsFit o = ols(lx, ly);
  PowerLawFit fit;
  fit.exponent = o.slope;  // T_N grows with N
  fit.amplitude = std::exp(o.intercept);
  fit.t_lo = static_cast<double>(sizes.front());
  fit.t_hi = static_cast<double>(sizes.back());
  fit.residual_rms = o.residual_rms;
  fit.points_used = static_cast<long>(sizes.size());
  return fit;
}

}  // namespace fraclat
