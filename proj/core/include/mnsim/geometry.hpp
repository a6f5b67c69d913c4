#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mnsim/config.hpp"
#include "mnsim/rng.hpp"

namespace mnsim {

/// One random placement of the K devices. Indices 0..K/2-1 land in the
/// center annulus, K/2..K-1 in the edge annulus. Angles are retained for
/// plotting only; the link model depends on distance alone.
struct DeviceDrop {
  std::vector<double> distance;  // meters
  std::vector<double> angle;     // radians
  std::vector<double> beta;      // linear large-scale gain, noise-normalized

  int device_count() const { return static_cast<int>(beta.size()); }
};

/// Sorted halves of a drop paired into two-device clusters: the c-th
/// strongest device with the c-th weakest one, maximizing the gain gap
/// of every pair.
struct Clustering {
  std::vector<int> center_ids;  // strongest K/2 device ids, gain descending
  std::vector<int> edge_ids;    // weakest K/2 device ids, gain ascending
  std::vector<std::pair<int, int>> pairs;  // pairs[c] = (center, edge)
  std::vector<double> delta_beta;          // gain gap per cluster
  std::vector<double> center_beta;
  std::vector<double> edge_beta;

  int num_clusters() const { return static_cast<int>(pairs.size()); }
  int device_count() const { return 2 * num_clusters(); }
};

/// Linear (noise-normalized) large-scale gain at the given distance.
double pathloss_linear(double distance_m, const SystemConfig& cfg);

/// Samples K/2 devices uniformly over each annulus area (radius through the
/// inverse CDF of r^2) and computes their gains.
DeviceDrop drop_devices(const SystemConfig& cfg, RandomStream& rng);

/// Sorts devices by gain (ties broken by device index) and mirrors the
/// sorted order into pairs. Requires a positive, even device count.
Clustering partition_and_pair(const DeviceDrop& drop);

}  // namespace mnsim
