#pragma once

// Exact Cayley-graph distances, diameters and chain (Schreier) diameters.

#include <cstdint>
#include <iosfwd>

#include "chevsk/bfs.hpp"

namespace chevsk {

struct DistanceTable {
  BfsResult bfs;
  int precision = 1;

  bool generating() const { return bfs.complete; }
  // Throws InvalidElement for an element outside the closure.
  std::uint32_t distance(const GroupElement& g) const;
  // Throws NotGenerating on a partial table.
  std::uint32_t diameter() const;
};

// BFS at precision n <= N over S projected to n. A non-generating S gives a
// partial table (generating() == false) rather than an error.
DistanceTable bfs_distances(const GenSet& s, int n, const BfsOptions& opts = {});

std::uint32_t exact_diameter(const GenSet& s, int n, const BfsOptions& opts = {});

// diam(Gamma_j1 / Gamma_j2; S) inside G_n, for 0 <= j1 <= j2 <= n.
std::uint32_t chain_diameter(const DistanceTable& t, int j1, int j2);
std::uint32_t chain_diameter(const GenSet& s, int n, int j1, int j2, const BfsOptions& opts = {});

// diam(G_j0 / G_j2) <= diam(G_j0 / G_j1) + diam(G_j1 / G_j2), on exact values.
bool check_subadditivity(const DistanceTable& t, int j0, int j1, int j2);

// "key distance" lines, BFS order.
void write_distances(std::ostream& os, const DistanceTable& t);

}  // namespace chevsk
