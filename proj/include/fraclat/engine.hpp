#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fraclat/gauss_map.hpp"
#include "fraclat/kernel.hpp"
#include "fraclat/topology.hpp"

namespace fraclat {

enum class CouplingScheme { RingG1, GlobalG2, SmallWorldG3, Classical };

struct CouplingParams {
  double epsilon = 0.0;  // in [0, 1]
  CouplingScheme scheme = CouplingScheme::RingG1;
};

/// (1-eps)*f(a) + (eps/2)*(f(b) + f(c)) - a, the two-neighbor ring increment.
double coupling_increment_g1(double a, double b, double c,
                             const CouplingParams& cp,
                             const GaussMapParams& map);

/// (1-eps)*f(a) + (eps/N)*mapped_sum - a, where mapped_sum is the shared
/// sum of f over all N sites at the previous step.
double coupling_increment_g2(double a, double mapped_sum, int n_sites,
                             const CouplingParams& cp,
                             const GaussMapParams& map);

/// (1-eps)*f(a) + (eps/4)*neighbor_mapped_sum - a, where the sum runs over
/// the site's four xi(i,k) entries.
double coupling_increment_g3(double a, double neighbor_mapped_sum,
                             const CouplingParams& cp,
                             const GaussMapParams& map);

/// One step of the memoryless coupled map lattice:
/// x'(i) = (1-eps)*f(x(i)) + (eps/2)*(f(x(i+1)) + f(x(i-1))), periodic.
std::vector<double> classical_cml_step(std::span<const double> field,
                                       const Topology& ring, double epsilon,
                                       const GaussMapParams& map);

/// Full description of one experiment run.
struct RunConfig {
  double alpha = 0.6;    // fractional order, (0, 1]
  double epsilon = 0.0;  // coupling strength, [0, 1]
  double beta = -0.44;
  double nu = 7.5;
  int n_sites = 100;
  long steps = 1000;  // horizon T
  TopologyKind topology = TopologyKind::Ring;
  double rewire_p = 0.0;
  std::uint64_t topology_seed = 1;
  std::uint64_t init_seed = 1;
  double init_lo = 0.0;  // i.i.d. uniform initial conditions
  double init_hi = 1.0;
  double blowup_bound = 1e6;
  bool classical = false;   // integer-order baseline, no memory kernel
  long memory_window = 0;   // 0 = full memory, otherwise last M increments
  int heatmap_mod = 0;      // record field rows with t % mod == 0; 0 = off
  double stop_threshold = 0.0;  // > 0: stop once spread < threshold
};

/// Collects domain violations; empty means valid.
std::vector<std::string> validate(const RunConfig& cfg);

/// Evolving state of a lattice run. The increment history is append-only:
/// column j holds Delta(i,j) exactly as computed at step j+1 and is never
/// touched again. history is site-major, history[i*capacity + j].
struct SimulationState {
  long t = 0;
  long capacity = 0;  // allocated history columns (== configured steps)
  std::vector<double> x0;
  std::vector<double> current;
  std::vector<double> history;
  double blowup_bound = 1e6;
  bool diverged = false;
  int diverged_site = -1;
  long diverged_time = -1;

  double delta(int site, long j) const {
    return history[static_cast<std::size_t>(site) * capacity + j];
  }
};

/// Per-step scalar observables; index 0 is the initial condition.
struct ObservableSeries {
  std::vector<long> times;
  std::vector<double> mean_field;
  std::vector<double> spatial_std;
  std::vector<double> spread;  // max - min across sites
  bool diverged = false;
  int diverged_site = -1;
  long diverged_time = -1;
};

struct RunResult {
  SimulationState state;
  ObservableSeries series;
  // Field rows recorded at t % heatmap_mod == 0 (row-major, n_sites wide).
  std::vector<long> snapshot_times;
  std::vector<double> snapshot_values;
};

/// Advances the coupled fractional system
///   x(i,t) = x(i,0) + (1/Gamma(a)) * sum_{j=1..t} g_a(t-j) * Delta(i,j-1)
/// recomputing the full memory sum in ascending j each step (the ascending
/// order is contractual: it makes outputs bit-identical at any parallelism
/// level). In classical mode the field is iterated directly instead.
class Engine {
 public:
  Engine(const RunConfig& cfg, KernelTable kernel, Topology topology);
  explicit Engine(const RunConfig& cfg);  // builds kernel and topology itself

  /// One step; returns false when the horizon is reached or the run has
  /// diverged (state().diverged tells which).
  bool step();

  const RunConfig& config() const { return cfg_; }
  const SimulationState& state() const { return state_; }
  const KernelTable& kernel() const { return kernel_; }
  const Topology& topology() const { return topo_; }

 private:
  RunConfig cfg_;
  KernelTable kernel_;
  Topology topo_;
  GaussMapParams map_;
  CouplingParams coupling_;
  SimulationState state_;
  std::vector<double> prev_;    // field at the step being consumed
  std::vector<double> mapped_;  // f(prev), SmallWorld only
};

/// Executes all configured steps (stopping early on divergence or, when
/// stop_threshold > 0, on synchronization), recording observables each step.
/// Deterministic given the two seeds.
RunResult run(const RunConfig& cfg);

struct TruncatedRunResult {
  RunResult result;
  /// Max |x_trunc - x_full| over all sites and steps; NaN unless a
  /// full-memory reference was co-computed.
  double max_deviation;
};

/// Same evolution but summing only the last memory_window increments.
/// Bit-identical to run() when the window covers the horizon. When
/// compare_full is set a full-memory engine is stepped in lockstep (intended
/// for small horizons; doubles the cost).
TruncatedRunResult run_truncated(const RunConfig& cfg, long memory_window,
                                 bool compare_full = false);

}  // namespace fraclat
