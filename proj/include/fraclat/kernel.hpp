#pragma once

#include <iosfwd>
#include <vector>

namespace fraclat {

/// Power-law memory weights g_a(m) = Gamma(m+a)/Gamma(m+1) for m = 0..horizon,
/// together with the 1/Gamma(a) prefactor of the memory sum.
///
/// The table is the recurrence: weights[0] = Gamma(a),
/// weights[m+1] = weights[m]*(m+a)/(m+1). For a in (0,1) the weights are
/// positive and strictly decreasing; for a = 1 every weight is exactly 1 and
/// the memory sum telescopes to plain iteration. Immutable after
/// construction, safe to share across threads.
struct KernelTable {
  double alpha = 1.0;
  long horizon = 0;
  std::vector<double> weights;  // weights[m] = g_alpha(m)
  double prefactor = 1.0;       // 1/Gamma(alpha)
  bool underflowed = false;     // some weight dropped below DBL_MIN
};

/// Throws std::domain_error unless 0 < alpha <= 1, std::invalid_argument for
/// horizon < 0. Cost O(horizon).
KernelTable build_kernel(double alpha, long horizon);

/// weights[m] / m^(alpha-1); tends to 1 as m grows. m must be in [1, horizon].
double kernel_asymptotic_ratio(const KernelTable& table, long m);

/// CSV dump, header "m,g_alpha", for external verification.
void dump_kernel_csv(const KernelTable& table, std::ostream& out);

}  // namespace fraclat
