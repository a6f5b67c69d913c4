#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mnsim {

/// How distances map to linear, noise-normalized large-scale gains.
enum class PathlossMode {
  kNormalizedReference,  // beta = (d / d_ref)^(-xi)
  kPaperDb,              // beta0_db + 10 xi log10(d), shifted by noise_norm_db
};

enum class System { kMmimo, kNoma };

enum class Policy { kEpa, kPicpa, kWf, kDwf };

/// Reference SINR used by the SIC decodability check.
enum class SicMode { kEdgeReference, kPaperEq11 };

/// Population used as the divisor of the Jain index.
enum class JainPopulation { kDevices, kAntennas };

std::string_view to_string(PathlossMode mode);
std::string_view to_string(System system);
std::string_view to_string(Policy policy);
std::string_view to_string(SicMode mode);
std::string_view to_string(JainPopulation population);

PathlossMode pathloss_mode_from_string(std::string_view s);
System system_from_string(std::string_view s);
Policy policy_from_string(std::string_view s);
SicMode sic_mode_from_string(std::string_view s);
JainPopulation jain_population_from_string(std::string_view s);

/// Consumption model parameters (amplifier, circuitry, compute).
struct EnergyParams {
  double p0 = 2.0;             // backhaul + baseband [W]
  double psyn = 2.0;           // local oscillator [W]
  double pcod = 4.0;           // coding/modulation [W per device]
  double pdec = 0.5;           // decoding [W per device]
  double prx = 0.3;            // receive chain [W per device]
  double ptx = 1.0;            // transmit chain [W per antenna]
  double amp_eff = 0.3;        // power-amplifier efficiency, in (0, 1]
  double ops_per_joule = 1e9;  // baseband compute efficiency

  void validate() const;
};

/// Full scenario description: cell geometry, pathloss, timing, RF budget
/// and the consumption model. `k` is the device count a single evaluation
/// uses; sweeps substitute it grid point by grid point.
struct SystemConfig {
  int m = 64;  // base-station antennas
  int k = 64;  // single-antenna devices

  double d_min = 50.0;   // center annulus [d_min, d1]
  double d1 = 100.0;
  double d2 = 150.0;     // edge annulus [d2, d_max]
  double d_max = 350.0;

  double xi = 3.78;       // pathloss exponent
  double beta0_db = 130.0;
  PathlossMode pathloss_mode = PathlossMode::kNormalizedReference;
  double noise_norm_db = 0.0;  // paper-db mode only
  double d_ref = 350.0;        // normalized-reference mode: unit gain here

  int t_symbols = 512;  // coherence interval in symbol periods
  double p_rf = 1.0;    // RF power budget [W]
  int zeta = 2;         // devices per cluster (fixed)

  EnergyParams energy;

  void validate() const;
  double loading() const { return static_cast<double>(k) / m; }
  SystemConfig with_k(int new_k) const {
    SystemConfig c = *this;
    c.k = new_k;
    return c;
  }
};

/// A (system, policy) combination evaluated by the sweep.
struct Combo {
  System system = System::kMmimo;
  Policy policy = Policy::kEpa;

  friend bool operator==(Combo a, Combo b) {
    return a.system == b.system && a.policy == b.policy;
  }
};

/// WF runs on the mMIMO side only, its delta variant on the NOMA side only.
bool combo_valid(Combo combo);

/// All six valid combinations, mMIMO first.
std::vector<Combo> default_combos();

std::string combo_label(Combo combo);        // "mmimo:epa"
Combo combo_from_label(std::string_view s);  // inverse of combo_label

}  // namespace mnsim
