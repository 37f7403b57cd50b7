#include "fraclat/gauss_map.hpp"

#include <cmath>
#include <stdexcept>

namespace fraclat {

void validate(const GaussMapParams& p) {
  if (!std::isfinite(p.nu) || !std::isfinite(p.beta))
    throw std::domain_error("GaussMapParams: nu and beta must be finite");
  if (!(p.nu > 0.0))
    throw std::domain_error("GaussMapParams: nu must be > 0 (bounded map)");
}

double gauss_eval(const GaussMapParams& p, double x) {
  if (!std::isfinite(x))
    throw std::domain_error("gauss_eval: x must be finite");
  return std::exp(-p.nu * x * x) + p.beta;
}

std::vector<double> classical_iterate(const GaussMapParams& p, double x0,
                                      long steps) {
  if (steps < 0)
    throw std::invalid_argument("classical_iterate: steps must be >= 0");
  std::vector<double> seq;
  seq.reserve(static_cast<std::size_t>(steps) + 1);
  seq.push_back(x0);
  double x = x0;
  for (long t = 0; t < steps; ++t) {
    x = gauss_eval(p, x);
    seq.push_back(x);
  }
  return seq;
}

}  // namespace fraclat
