#include "fraclat/kernel.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace fraclat {

KernelTable build_kernel(double alpha, long horizon) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::domain_error("build_kernel: alpha must lie in (0, 1]");
  if (horizon < 0)
    throw std::invalid_argument("build_kernel: horizon must be >= 0");

  KernelTable table;
  table.alpha = alpha;
  table.horizon = horizon;
  table.prefactor = 1.0 / std::tgamma(alpha);
  table.weights.resize(static_cast<std::size_t>(horizon) + 1);

  // One gamma call for the first term, then the exact ratio recurrence.
  double w = std::tgamma(alpha);
  table.weights[0] = w;
  for (long m = 0; m < horizon; ++m) {
    w *= (static_cast<double>(m) + alpha) / (static_cast<double>(m) + 1.0);
    table.weights[static_cast<std::size_t>(m) + 1] = w;
    if (w < DBL_MIN) table.underflowed = true;
  }
  return table;
}

double kernel_asymptotic_ratio(const KernelTable& table, long m) {
  if (m < 1 || m > table.horizon)
    throw std::out_of_range("kernel_asymptotic_ratio: m outside [1, horizon]");
  return table.weights[static_cast<std::size_t>(m)] /
         std::pow(static_cast<double>(m), table.alpha - 1.0);
}

void dump_kernel_csv(const KernelTable& table, std::ostream& out) {
  out << "m,g_alpha\n";
  char buf[40];
  for (long m = 0; m <= table.horizon; ++m) {
    std::snprintf(buf, sizeof buf, "%.17g",
                  table.weights[static_cast<std::size_t>(m)]);
    out << m << ',' << buf << '\n';
  }
}

}  // namespace fraclat
