#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace fraclat {

enum class TopologyKind { Ring, Global, SmallWorld };

/// Neighbor structure for the coupling term. Ring keeps one neighbor on each
/// side, SmallWorld keeps an ordered list of four (the xi(i,k) slots), Global
/// has no explicit list: every site couples to the full lattice, itself
/// included. Immutable after construction.
struct Topology {
  TopologyKind kind = TopologyKind::Ring;
  int n_sites = 0;
  int degree = 0;              // 2 (ring), 4 (small world), n_sites (global)
  std::vector<int> neighbors;  // flattened n_sites x degree; empty for Global
  double rewire_p = 0.0;       // SmallWorld only
  std::uint64_t seed = 0;      // SmallWorld only

  std::span<const int> site_neighbors(int site) const {
    return {neighbors.data() + static_cast<std::size_t>(site) * degree,
            static_cast<std::size_t>(degree)};
  }
};

/// Periodic ring, neighbors[i] = [i-1 mod N, i+1 mod N]. Requires N >= 3.
Topology build_ring(int n_sites);

/// All-to-all coupling (self included in sums). Requires N >= 2.
Topology build_global(int n_sites);

/// Four-neighbor ring [i-2, i-1, i+1, i+2], then each slot is independently
/// rewired with probability p to a uniformly random site, rejecting self
/// links and duplicates within the site's own list. Deterministic in
/// (n_sites, p, seed). Requires N >= 6 and p in [0, 1].
Topology build_small_world(int n_sites, double p, std::uint64_t seed);

/// Sum of values over the site's neighbors (all sites for Global).
/// values.size() must equal n_sites.
double neighbor_sum(const Topology& topo, int site,
                    std::span<const double> values);

/// Edge-list CSV, header "site,slot,neighbor". Global topologies have no
/// explicit list and produce only the header.
void dump_edges_csv(const Topology& topo, std::ostream& out);

}  // namespace fraclat
