#include "fraclat/topology.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "fraclat/rng.hpp"

namespace fraclat {

Topology build_ring(int n_sites) {
  if (n_sites < 3)
    throw std::invalid_argument("build_ring: need at least 3 sites");
  Topology t;
  t.kind = TopologyKind::Ring;
  t.n_sites = n_sites;
  t.degree = 2;
  t.neighbors.resize(static_cast<std::size_t>(n_sites) * 2);
  for (int i = 0; i < n_sites; ++i) {
    t.neighbors[2 * static_cast<std::size_t>(i)] = (i - 1 + n_sites) % n_sites;
    t.neighbors[2 * static_cast<std::size_t>(i) + 1] = (i + 1) % n_sites;
  }
  return t;
}

Topology build_global(int n_sites) {
  if (n_sites < 2)
    throw std::invalid_argument("build_global: need at least 2 sites");
  Topology t;
  t.kind = TopologyKind::Global;
  t.n_sites = n_sites;
  t.degree = n_sites;
  return t;
}

Topology build_small_world(int n_sites, double p, std::uint64_t seed) {
  if (n_sites < 6)
    throw std::invalid_argument("build_small_world: need at least 6 sites");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("build_small_world: p must lie in [0, 1]");

  Topology t;
  t.kind = TopologyKind::SmallWorld;
  t.n_sites = n_sites;
  t.degree = 4;
  t.rewire_p = p;
  t.seed = seed;
  t.neighbors.resize(static_cast<std::size_t>(n_sites) * 4);
  for (int i = 0; i < n_sites; ++i) {
    int* row = t.neighbors.data() + static_cast<std::size_t>(i) * 4;
    row[0] = (i - 2 + n_sites) % n_sites;
    row[1] = (i - 1 + n_sites) % n_sites;
    row[2] = (i + 1) % n_sites;
    row[3] = (i + 2) % n_sites;
  }

  // Slot-by-slot rewiring in a fixed site-major order; the links are
  // directed, each site owns its list.
  Rng rng = make_rng(seed);
  for (int i = 0; i < n_sites; ++i) {
    int* row = t.neighbors.data() + static_cast<std::size_t>(i) * 4;
    for (int k = 0; k < 4; ++k) {
      if (uniform_unit(rng) >= p) continue;
      for (;;) {
        const int cand = static_cast<int>(
            uniform_below(rng, static_cast<std::uint64_t>(n_sites)));
        if (cand == i) continue;
        if (cand == row[0] || cand == row[1] || cand == row[2] ||
            cand == row[3])
          continue;
        row[k] = cand;
        break;
      }
    }
  }
  return t;
}

double neighbor_sum(const Topology& topo, int site,
                    std::span<const double> values) {
  if (static_cast<int>(values.size()) != topo.n_sites)
    throw std::invalid_argument("neighbor_sum: values length != n_sites");
  if (site < 0 || site >= topo.n_sites)
    throw std::out_of_range("neighbor_sum: site index out of range");

  if (topo.kind == TopologyKind::Global) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  double s = 0.0;
  for (int nb : topo.site_neighbors(site)) s += values[static_cast<std::size_t>(nb)];
  return s;
}

void dump_edges_csv(const Topology& topo, std::ostream& out) {
  out << "site,slot,neighbor\n";
  if (topo.kind == TopologyKind::Global) return;
  for (int i = 0; i < topo.n_sites; ++i) {
    auto row = topo.site_neighbors(i);
    for (int k = 0; k < topo.degree; ++k)
      out << i << ',' << k << ',' << row[static_cast<std::size_t>(k)] << '\n';
  }
}

}  // namespace fraclat
