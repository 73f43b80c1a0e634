#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace passopt {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

struct Point3 {
  double x{};
  double y{};
  double z{};
};

/// Hardware model variants: ideal (no loss, no coupling), dissipative
/// (in-waveguide loss only), actual (loss + finite couplers with spacing).
enum class Scheme { IWS, DWS, AWS };

enum class InterferenceModel { Coherent, PowerSum };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

/// Full experiment description. Powers are stored in linear watts; config
/// files carry them in dBm and are converted once at load time.
struct SystemConfig {
  int K = 9;              // users
  int M = 3;              // waveguides
  int N = 5;              // pinching antennas per waveguide
  double D = 10.0;        // waveguide length (m)
  double h = 3.0;         // waveguide height above the user plane (m)
  double D_wg = 10.0;     // waveguide spacing (m)
  double d1 = 10.0;       // region extent along x (m)
  double d2 = 30.0;       // region extent along y (m)
  double f = 28e9;        // carrier frequency (Hz)
  double eps_c = 2.08;    // relative permittivity
  double tan_delta = 4e-4;
  double chi = 50.0;      // mode coupling coefficient (rad/m)
  double sigma2 = dbm_to_watts(-114.0);  // noise power (W)
  double P = dbm_to_watts(20.0);         // per-slot power budget (W)
  double R_min = 0.5;     // minimum per-user rate (bps/Hz)
  int G = 10000;          // grid resolution of the 1-D position search
  Scheme scheme = Scheme::AWS;
  int mc_trials = 100;
  std::uint64_t rng_seed = 1;
  InterferenceModel interference = InterferenceModel::Coherent;
  bool weighted_slot_surrogate = true;  // frozen-weight slot objective (default) vs plain sum over slots
  bool heatmap_coherent = false;        // combine waveguides coherently in heatmaps

  int slots() const { return K / M; }  // T

  /// Throws std::invalid_argument on violated invariants (K = T*M, positive
  /// physical quantities, G >= N).
  void validate() const;
};

using UserSet = std::vector<Point3>;

/// Binary user scheduling: waveguide-user pairing (C5) and slot assignment
/// (C6). Each waveguide serves exactly one of its paired users per slot.
struct Schedule {
  int K{};
  int M{};
  int T{};
  std::vector<int> wg_of_user;    // K entries, 0-based waveguide index
  std::vector<int> slot_of_user;  // K entries, 0-based slot index

  /// served[m][t] -> user index, rebuilt from the assignment vectors.
  std::vector<std::vector<int>> served;

  void rebuild_served();
  bool feasible() const;  // C4-C6 plus one served user per (waveguide, slot)
};

/// Per-slot complex transmit coefficients, one per waveguide; the ball
/// constraint sum_m |w[t][m]|^2 <= P applies per slot (C3).
struct PowerAllocation {
  std::vector<std::vector<std::complex<double>>> w;  // [T][M]

  double slot_power(int t) const;
};

}  // namespace passopt
