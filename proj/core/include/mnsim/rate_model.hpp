#pragma once

#include <optional>
#include <vector>

#include "mnsim/config.hpp"
#include "mnsim/geometry.hpp"
#include "mnsim/power_allocation.hpp"

namespace mnsim {

/// Ergodic per-device rates in bits/s/Hz plus per-cluster totals for NOMA.
struct RateReport {
  std::vector<double> per_device_rate;
  std::optional<std::vector<double>> cluster_rate;  // NOMA only
  double sum_rate = 0.0;
  double tau = 0.0;  // data fraction of the coherence interval
};

/// Fraction of the coherence interval left for data after K pilot symbols:
/// 1 - K/iota, clamped at zero.
double data_fraction(const SystemConfig& cfg);

/// Coherent array gain of the cluster-head beams: M + 1 - K/2.
double noma_array_gain(const SystemConfig& cfg);

/// Numerically stable log2(1 + x).
double log2_1p(double x);

/// R_k = tau log2(1 + (M - K) p_k beta_k). All rates are zero once K >= M
/// (nonpositive array gain), which lets sweeps span the full loading axis.
RateReport mimo_rates(const SystemConfig& cfg, const DeviceDrop& drop,
                      const AllocationResult& allocation);

/// Cluster rate = center term tau log2(1 + Mbar beta_c p_c) plus the
/// interference-limited edge term tau log2(1 + beta_e p_e / (beta_e p_c + 1)).
/// Valid for K < 2M - 1; dropped clusters contribute zero.
RateReport noma_rates(const SystemConfig& cfg, const Clustering& clustering,
                      const AllocationResult& allocation);

}  // namespace mnsim
