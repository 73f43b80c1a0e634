#pragma once

#include <complex>
#include <span>
#include <vector>

#include "passopt/em.hpp"
#include "passopt/types.hpp"

namespace passopt {

/// Spherical-wave channel between a user and the antennas on one waveguide:
/// entry n = eta * exp(-j*2*pi*d_n/lambda0) / d_n with eta = c/(4*pi*f).
/// Throws std::domain_error on a zero distance.
std::vector<std::complex<double>> channel_vector(const Point3& user,
                                                 std::span<const PinchingAntenna> pas,
                                                 double wg_y, const SystemConfig& cfg);

/// SINR of the user served by waveguide m given the per-waveguide radiated
/// vectors s_i and channel vectors h_i. Interference is summed coherently
/// across waveguides unless the power-sum model is selected.
double sinr(int m, std::span<const std::vector<std::complex<double>>> h_per_wg,
            std::span<const std::vector<std::complex<double>>> s_per_wg, double sigma2,
            InterferenceModel im = InterferenceModel::Coherent);

/// R = (1/T) * log2(1 + SINR).
double user_rate(double sinr_value, int T);

struct RateBreakdown {
  double sum_rate = 0.0;
  std::vector<double> user_rates;

  bool meets_min_rate(double r_min, double tol = 1e-6) const {
    for (double r : user_rates)
      if (r < r_min - tol) return false;
    return true;
  }
};

/// Effective scalar channels e_{m,k} = h_{m,k}^T g_m cached per (layout,
/// users). Moving one antenna updates only that antenna's contribution, so
/// the 1-D position sweeps stay cheap.
class EffectiveChannels {
 public:
  EffectiveChannels(const SystemConfig& cfg, UserSet users, AntennaLayout layout);

  const SystemConfig& config() const { return cfg_; }
  const UserSet& users() const { return users_; }
  const AntennaLayout& layout() const { return layout_; }
  const PropagationConstant& propagation() const { return pc_; }

  double position(int m, int n) const { return layout_.waveguides[m][n].x; }
  void set_position(int m, int n, double x);
  void set_layout(const AntennaLayout& layout);

  std::complex<double> effective(int m, int k) const { return e_[m][k]; }

  /// h_{m,p}^T g_m at an arbitrary probe point (used by heatmaps).
  std::complex<double> effective_at(const Point3& p, int m) const;

  RateBreakdown rates(const Schedule& sched, const PowerAllocation& power) const;
  double sum_rate(const Schedule& sched, const PowerAllocation& power) const;

 private:
  std::complex<double> pa_term(int m, int n, int k, double x) const;
  void rebuild();

  SystemConfig cfg_;
  UserSet users_;
  AntennaLayout layout_;
  PropagationConstant pc_;
  double eta_;
  double wave_number_;  // 2*pi/lambda0
  std::vector<std::vector<double>> xi_;                   // [M][N]
  std::vector<std::vector<std::complex<double>>> term_;   // [M][k*N + n]
  std::vector<std::vector<std::complex<double>>> e_;      // [M][K]
};

/// Sum rate of a feasible schedule under the given layout and power
/// allocation; also returns per-user rates. Throws std::invalid_argument on
/// an infeasible schedule.
RateBreakdown sum_rate(const Schedule& sched, const AntennaLayout& layout,
                       const PowerAllocation& power, const SystemConfig& cfg,
                       const UserSet& users);

}  // namespace passopt
