#include "passopt/em.hpp"

#include <cmath>
#include <numbers>

namespace passopt {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr std::complex<double> kJ{0.0, 1.0};
}  // namespace

PropagationConstant propagation_constants(const WaveguideMaterial& mat, double f_hz) {
  if (f_hz <= 0) throw std::invalid_argument("carrier frequency must be positive");
  const double lambda0 = kSpeedOfLight / f_hz;
  const double root_eps = std::sqrt(mat.eps_c);
  return {kPi * root_eps * mat.tan_delta / lambda0, 2.0 * kPi * root_eps / lambda0};
}

CouplerSplit coupled_mode_coefficients(double chi, double L) {
  if (L < 0) throw std::invalid_argument("coupler length must be non-negative");
  const double a = chi * L;
  return {std::cos(a), -kJ * std::sin(a)};
}

CouplerSplit coupled_mode_coefficients(double chi, double L, std::complex<double> delta_gamma) {
  if (L < 0) throw std::invalid_argument("coupler length must be non-negative");
  if (std::abs(delta_gamma) == 0.0) return coupled_mode_coefficients(chi, L);
  const std::complex<double> phi = std::sqrt(4.0 * chi * chi - delta_gamma * delta_gamma);
  if (std::abs(phi) < 1e-300)
    throw std::invalid_argument("degenerate coupler parameterization (phi = 0 with delta_gamma != 0)");
  const std::complex<double> half = phi * L / 2.0;
  const std::complex<double> c_g =
      (std::cos(half) + (delta_gamma / phi) * std::sin(half)) * std::exp(-delta_gamma * L / 2.0);
  const std::complex<double> c_p =
      -kJ * (2.0 * chi / phi) * std::sin(half) * std::exp(delta_gamma * L / 2.0);
  return {c_g, c_p};
}

std::vector<double> equal_split_lengths(double chi, int N) {
  if (chi <= 0) throw std::invalid_argument("chi must be positive");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  std::vector<double> lengths(N);
  for (int n = 1; n <= N; ++n) lengths[n - 1] = std::asin(1.0 / std::sqrt(double(N - n + 1))) / chi;
  return lengths;
}

std::vector<double> cascade_coupling(std::span<const double> lengths, double chi) {
  std::vector<double> xi(lengths.size());
  double residual = 1.0;  // product of cos(chi*L_i) over preceding couplers
  for (size_t n = 0; n < lengths.size(); ++n) {
    const double a = chi * lengths[n];
    xi[n] = residual * std::sin(a);
    residual *= std::cos(a);
  }
  return xi;
}

bool layout_satisfies_spacing(std::span<const PinchingAntenna> pas, double D, Scheme scheme,
                              double tol) {
  const bool point_like = scheme != Scheme::AWS;
  double prev = 0.0;
  for (size_t n = 0; n < pas.size(); ++n) {
    const double len = point_like ? 0.0 : pas[n].L;
    if (pas[n].x - prev < len - tol) return false;
    if (pas[n].x > D + tol) return false;
    prev = pas[n].x;
  }
  return true;
}

CouplingChain pa_gain_vector(std::span<const PinchingAntenna> pas, const PropagationConstant& pc,
                             double chi, Scheme scheme) {
  const size_t N = pas.size();
  CouplingChain chain;
  chain.xi.resize(N);
  chain.gain.resize(N);

  if (scheme == Scheme::AWS) {
    std::vector<double> lengths(N);
    for (size_t n = 0; n < N; ++n) lengths[n] = pas[n].L;
    chain.xi = cascade_coupling(lengths, chi);
  } else {
    const double amp = 1.0 / std::sqrt(static_cast<double>(N));
    for (size_t n = 0; n < N; ++n) chain.xi[n] = amp;
  }

  for (size_t n = 0; n < N; ++n) {
    const double x = pas[n].x;
    switch (scheme) {
      case Scheme::IWS:
        chain.gain[n] = chain.xi[n] * std::exp(-kJ * pc.beta * x);
        break;
      case Scheme::DWS:
      case Scheme::AWS:
        chain.gain[n] = chain.xi[n] * std::exp(-(pc.gamma() * x) - kJ * (kPi / 2.0));
        break;
    }
  }
  return chain;
}

}  // namespace passopt
