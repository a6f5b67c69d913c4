#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mnsim/config.hpp"
#include "mnsim/geometry.hpp"

namespace mnsim {

/// Per-device transmit powers for one policy run. Powers of dropped
/// devices are exactly zero. EPA and PICPA never drop anyone; the
/// water-filling variants deactivate devices (or whole clusters) below the
/// water level.
struct AllocationResult {
  std::vector<double> power;         // watts per device
  std::vector<std::uint8_t> active;  // 1 = served
  std::optional<double> water_level;
  Policy policy = Policy::kEpa;
  System system = System::kMmimo;

  double active_fraction() const;
};

/// p_k = P_rf / K for every device.
AllocationResult epa_mimo(const SystemConfig& cfg);

/// Equal power per cluster (2 P_rf / K), split equally inside the pair.
AllocationResult epa_noma(const SystemConfig& cfg, const Clustering& clustering);

/// Power proportional to the inverse gain: p_k = P_rf beta_k^-1 / sum beta^-1.
AllocationResult picpa_mimo(const SystemConfig& cfg, const DeviceDrop& drop);

/// Equal power per cluster; inside a pair the edge device receives the
/// larger share p_ref * (1 - beta_e / (beta_c - beta_e)). When the raw
/// center share exceeds the cluster budget (beta_c < 2 beta_e) the pair
/// falls back to an equal split so both powers stay nonnegative.
AllocationResult picpa_noma(const SystemConfig& cfg, const Clustering& clustering);

/// Classical water-filling on 1/beta with iterative removal of devices
/// whose power hits zero. The surviving set satisfies the KKT conditions of
/// max sum log(1 + beta_k p_k) subject to the budget.
AllocationResult wf_mimo(const SystemConfig& cfg, const DeviceDrop& drop);

/// Water-filling across clusters using the pair gain gaps delta_beta as
/// effective gains; whole clusters are dropped, never single members, and
/// each surviving pair splits its cluster power equally.
AllocationResult dwf_noma(const SystemConfig& cfg, const Clustering& clustering);

struct SicCheck {
  double margin = 0.0;  // decode SINR minus the reference SINR
  bool feasible = false;
};

/// Per-cluster decodability diagnostic for the SIC step: the center
/// device's SINR when decoding the edge symbol, compared against either the
/// edge device's own SINR (kEdgeReference) or the center device's own SINR
/// (kPaperEq11). Reported, not enforced.
std::vector<SicCheck> sic_feasibility(const Clustering& clustering,
                                      const AllocationResult& allocation,
                                      const SystemConfig& cfg, SicMode mode);

/// Dispatch helper used by the sweep: runs the policy matching `combo`.
/// NOMA policies require `clustering`.
AllocationResult allocate(Combo combo, const SystemConfig& cfg,
                          const DeviceDrop& drop, const Clustering* clustering);

}  // namespace mnsim
