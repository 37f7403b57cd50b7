#pragma once

#include <vector>

namespace fraclat {

/// On-site Gauss map f(x) = exp(-nu*x^2) + beta.
/// nu > 0 keeps f bounded: f(x) lies in [beta, 1+beta] for every real x.
struct GaussMapParams {
  double nu = 7.5;
  double beta = -0.4;
};

/// Throws std::domain_error unless nu > 0 and both parameters are finite.
void validate(const GaussMapParams& p);

/// f(x); throws std::domain_error on non-finite x.
double gauss_eval(const GaussMapParams& p, double x);

/// Plain iteration x(t+1) = f(x(t)); returns [x0, x1, ..., x_steps].
std::vector<double> classical_iterate(const GaussMapParams& p, double x0,
                                      long steps);

}  // namespace fraclat
