#pragma once

#include <complex>
#include <span>
#include <vector>

#include "passopt/types.hpp"

namespace passopt {

struct WaveguideMaterial {
  double eps_c;
  double tan_delta;
};

/// Polytetrafluoroethylene.
inline constexpr WaveguideMaterial kPtfe{2.08, 4e-4};

/// gamma = alpha + j*beta in the kappa >> kappa_c regime:
///   alpha = pi*sqrt(eps_c)*tan_delta/lambda0,  beta = 2*pi*sqrt(eps_c)/lambda0.
struct PropagationConstant {
  double alpha;  // Np/m
  double beta;   // rad/m
  std::complex<double> gamma() const { return {alpha, beta}; }
};

PropagationConstant propagation_constants(const WaveguideMaterial& mat, double f_hz);

/// Amplitude split of a directional coupler of length L: `guided` stays in
/// the waveguide, `coupled` leaves through the antenna.
struct CouplerSplit {
  std::complex<double> guided;   // c_g(L)
  std::complex<double> coupled;  // c_p(L)
};

/// Matched propagation constants (delta_gamma = 0):
/// c_g = cos(chi*L), c_p = -j*sin(chi*L).
CouplerSplit coupled_mode_coefficients(double chi, double L);

/// General solution for mismatched constants. Throws when the oscillation
/// parameter phi = sqrt(4*chi^2 - delta_gamma^2) vanishes with
/// delta_gamma != 0.
CouplerSplit coupled_mode_coefficients(double chi, double L, std::complex<double> delta_gamma);

/// Coupler lengths that split the guided power equally over N antennas:
/// sin(chi*L_n) = 1/sqrt(N - n + 1); the last coupler has chi*L = pi/2.
std::vector<double> equal_split_lengths(double chi, int N);

/// Cascaded coupling coefficients xi_n = prod_{i<n} cos(chi*L_i) * sin(chi*L_n).
std::vector<double> cascade_coupling(std::span<const double> lengths, double chi);

/// An activated coupler on a waveguide; x is the x-coordinate of the right
/// (radiating) endpoint, L the coupler length.
struct PinchingAntenna {
  double x;
  double L;
  double left() const { return x - L; }
};

struct AntennaLayout {
  std::vector<std::vector<PinchingAntenna>> waveguides;  // [M][N]
  Scheme scheme = Scheme::AWS;

  int M() const { return static_cast<int>(waveguides.size()); }
  int N() const { return waveguides.empty() ? 0 : static_cast<int>(waveguides[0].size()); }
};

/// Sequential-placement constraint set: L_1 <= x_1, x_n - x_{n-1} >= L_n,
/// x_N <= D. Under IWS/DWS the lengths are treated as zero, so co-location
/// is allowed.
bool layout_satisfies_spacing(std::span<const PinchingAntenna> pas, double D, Scheme scheme,
                              double tol = 1e-9);

/// Per-antenna radiated amplitude factors for one waveguide:
///   AWS: xi_n * exp(-gamma*x_n) * exp(-j*pi/2), xi from the actual cascade;
///   DWS: (1/sqrt(N)) * exp(-gamma*x_n) * exp(-j*pi/2);
///   IWS: (1/sqrt(N)) * exp(-j*beta*x_n)  (loss and coupling removed).
struct CouplingChain {
  std::vector<double> xi;
  std::vector<std::complex<double>> gain;
};

CouplingChain pa_gain_vector(std::span<const PinchingAntenna> pas, const PropagationConstant& pc,
                             double chi, Scheme scheme);

}  // namespace passopt
