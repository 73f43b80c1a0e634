#include "passopt/channel.hpp"

#include <cmath>
#include <numbers>

#include "passopt/geometry.hpp"

namespace passopt {

namespace {
constexpr double kPi = std::numbers::pi;

std::complex<double> spherical_entry(double eta, double wave_number, double d) {
  if (d <= 0.0) throw std::domain_error("degenerate geometry: zero user-antenna distance");
  return std::polar(eta / d, -wave_number * d);
}
}  // namespace

std::vector<std::complex<double>> channel_vector(const Point3& user,
                                                 std::span<const PinchingAntenna> pas,
                                                 double wg_y, const SystemConfig& cfg) {
  const double eta = kSpeedOfLight / (4.0 * kPi * cfg.f);
  const double wave_number = 2.0 * kPi * cfg.f / kSpeedOfLight;
  std::vector<std::complex<double>> h(pas.size());
  for (size_t n = 0; n < pas.size(); ++n) {
    const double d = distance_user_pa(user, {pas[n].x, wg_y, cfg.h});
    h[n] = spherical_entry(eta, wave_number, d);
  }
  return h;
}

double sinr(int m, std::span<const std::vector<std::complex<double>>> h_per_wg,
            std::span<const std::vector<std::complex<double>>> s_per_wg, double sigma2,
            InterferenceModel im) {
  auto dot = [](const std::vector<std::complex<double>>& a,
                const std::vector<std::complex<double>>& b) {
    std::complex<double> acc{};
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];  // unconjugated, h^T s
    return acc;
  };
  const double signal = std::norm(dot(h_per_wg[m], s_per_wg[m]));
  double interference = 0.0;
  if (im == InterferenceModel::Coherent) {
    std::complex<double> acc{};
    for (size_t i = 0; i < h_per_wg.size(); ++i)
      if (static_cast<int>(i) != m) acc += dot(h_per_wg[i], s_per_wg[i]);
    interference = std::norm(acc);
  } else {
    for (size_t i = 0; i < h_per_wg.size(); ++i)
      if (static_cast<int>(i) != m) interference += std::norm(dot(h_per_wg[i], s_per_wg[i]));
  }
  return signal / (interference + sigma2);
}

double user_rate(double sinr_value, int T) {
  return std::log2(1.0 + sinr_value) / static_cast<double>(T);
}

EffectiveChannels::EffectiveChannels(const SystemConfig& cfg, UserSet users, AntennaLayout layout)
    : cfg_(cfg),
      users_(std::move(users)),
      layout_(std::move(layout)),
      pc_(propagation_constants({cfg.eps_c, cfg.tan_delta}, cfg.f)),
      eta_(kSpeedOfLight / (4.0 * kPi * cfg.f)),
      wave_number_(2.0 * kPi * cfg.f / kSpeedOfLight) {
  rebuild();
}

void EffectiveChannels::rebuild() {
  const int M = layout_.M();
  const int N = layout_.N();
  const int K = static_cast<int>(users_.size());
  xi_.assign(M, {});
  term_.assign(M, {});
  e_.assign(M, std::vector<std::complex<double>>(K));
  for (int m = 0; m < M; ++m) {
    const auto chain = pa_gain_vector(layout_.waveguides[m], pc_, cfg_.chi, layout_.scheme);
    xi_[m] = chain.xi;
    term_[m].assign(static_cast<size_t>(K) * N, {});
    for (int k = 0; k < K; ++k) {
      std::complex<double> acc{};
      for (int n = 0; n < N; ++n) {
        const auto t = pa_term(m, n, k, layout_.waveguides[m][n].x);
        term_[m][static_cast<size_t>(k) * N + n] = t;
        acc += t;
      }
      e_[m][k] = acc;
    }
  }
}

std::complex<double> EffectiveChannels::pa_term(int m, int n, int k, double x) const {
  const double wy = waveguide_y(m + 1, cfg_);
  const double d = distance_user_pa(users_[k], {x, wy, cfg_.h});
  const auto h = spherical_entry(eta_, wave_number_, d);
  std::complex<double> g;
  switch (layout_.scheme) {
    case Scheme::IWS:
      g = std::polar(xi_[m][n], -pc_.beta * x);
      break;
    case Scheme::DWS:
    case Scheme::AWS:
      g = std::polar(xi_[m][n] * std::exp(-pc_.alpha * x), -pc_.beta * x - kPi / 2.0);
      break;
  }
  return h * g;
}

void EffectiveChannels::set_position(int m, int n, double x) {
  const int N = layout_.N();
  layout_.waveguides[m][n].x = x;
  for (int k = 0; k < static_cast<int>(users_.size()); ++k) {
    const auto t = pa_term(m, n, k, x);
    auto& slot = term_[m][static_cast<size_t>(k) * N + n];
    e_[m][k] += t - slot;
    slot = t;
  }
}

void EffectiveChannels::set_layout(const AntennaLayout& layout) {
  layout_ = layout;
  rebuild();
}

std::complex<double> EffectiveChannels::effective_at(const Point3& p, int m) const {
  const double wy = waveguide_y(m + 1, cfg_);
  std::complex<double> acc{};
  for (int n = 0; n < layout_.N(); ++n) {
    const double x = layout_.waveguides[m][n].x;
    const double d = distance_user_pa(p, {x, wy, cfg_.h});
    const auto h = spherical_entry(eta_, wave_number_, d);
    std::complex<double> g;
    switch (layout_.scheme) {
      case Scheme::IWS:
        g = std::polar(xi_[m][n], -pc_.beta * x);
        break;
      case Scheme::DWS:
      case Scheme::AWS:
        g = std::polar(xi_[m][n] * std::exp(-pc_.alpha * x), -pc_.beta * x - kPi / 2.0);
        break;
    }
    acc += h * g;
  }
  return acc;
}

RateBreakdown EffectiveChannels::rates(const Schedule& sched, const PowerAllocation& power) const {
  const int M = layout_.M();
  const int K = static_cast<int>(users_.size());
  RateBreakdown out;
  out.user_rates.assign(K, 0.0);
  for (int t = 0; t < sched.T; ++t) {
    const auto& w = power.w[t];
    for (int m = 0; m < M; ++m) {
      const int k = sched.served[m][t];
      if (k < 0) continue;
      const double signal = std::norm(e_[m][k] * w[m]);
      double interference = 0.0;
      if (cfg_.interference == InterferenceModel::Coherent) {
        std::complex<double> acc{};
        for (int i = 0; i < M; ++i)
          if (i != m) acc += e_[i][k] * w[i];
        interference = std::norm(acc);
      } else {
        for (int i = 0; i < M; ++i)
          if (i != m) interference += std::norm(e_[i][k] * w[i]);
      }
      const double r = user_rate(signal / (interference + cfg_.sigma2), sched.T);
      out.user_rates[k] = r;
      out.sum_rate += r;
    }
  }
  return out;
}

double EffectiveChannels::sum_rate(const Schedule& sched, const PowerAllocation& power) const {
  return rates(sched, power).sum_rate;
}

RateBreakdown sum_rate(const Schedule& sched, const AntennaLayout& layout,
                       const PowerAllocation& power, const SystemConfig& cfg,
                       const UserSet& users) {
  if (!sched.feasible()) throw std::invalid_argument("infeasible schedule");
  EffectiveChannels ch(cfg, users, layout);
  return ch.rates(sched, power);
}

}  // namespace passopt
