#include "passopt/types.hpp"

#include <algorithm>

namespace passopt {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::IWS: return "IWS";
    case Scheme::DWS: return "DWS";
    case Scheme::AWS: return "AWS";
  }
  return "AWS";
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "IWS" || s == "iws") return Scheme::IWS;
  if (s == "DWS" || s == "dws") return Scheme::DWS;
  if (s == "AWS" || s == "aws") return Scheme::AWS;
  throw std::invalid_argument("unknown scheme: " + s);
}

void SystemConfig::validate() const {
  if (K < 1 || M < 1 || N < 1) throw std::invalid_argument("K, M, N must be positive");
  if (K % M != 0) throw std::invalid_argument("K must be an integer multiple of M (K = T*M)");
  if (D <= 0 || h <= 0 || D_wg <= 0 || d1 <= 0 || d2 <= 0)
    throw std::invalid_argument("geometry dimensions must be strictly positive");
  if (f <= 0) throw std::invalid_argument("carrier frequency must be positive");
  if (eps_c < 1.0) throw std::invalid_argument("relative permittivity must be >= 1");
  if (tan_delta < 0) throw std::invalid_argument("loss tangent must be non-negative");
  if (chi <= 0) throw std::invalid_argument("mode coupling coefficient must be positive");
  if (sigma2 <= 0) throw std::invalid_argument("noise power must be positive");
  if (P <= 0) throw std::invalid_argument("power budget must be positive");
  if (R_min < 0) throw std::invalid_argument("minimum rate must be non-negative");
  if (G < N) throw std::invalid_argument("grid resolution G must be >= N");
  if (mc_trials < 1) throw std::invalid_argument("mc_trials must be >= 1");
}

void Schedule::rebuild_served() {
  served.assign(M, std::vector<int>(T, -1));
  for (int k = 0; k < K; ++k) {
    const int m = wg_of_user[k];
    const int t = slot_of_user[k];
    if (m < 0 || m >= M || t < 0 || t >= T) continue;
    served[m][t] = k;
  }
}

bool Schedule::feasible() const {
  if (static_cast<int>(wg_of_user.size()) != K) return false;
  if (static_cast<int>(slot_of_user.size()) != K) return false;
  std::vector<int> per_wg(M, 0), per_slot(T, 0);
  std::vector<std::vector<int>> per_wg_slot(M, std::vector<int>(T, 0));
  for (int k = 0; k < K; ++k) {
    const int m = wg_of_user[k];
    const int t = slot_of_user[k];
    if (m < 0 || m >= M || t < 0 || t >= T) return false;
    ++per_wg[m];
    ++per_slot[t];
    ++per_wg_slot[m][t];
  }
  for (int m = 0; m < M; ++m) {
    if (per_wg[m] != T) return false;  // C5b
    for (int t = 0; t < T; ++t)
      if (per_wg_slot[m][t] != 1) return false;
  }
  for (int t = 0; t < T; ++t)
    if (per_slot[t] != M) return false;  // C6a
  return true;
}

double PowerAllocation::slot_power(int t) const {
  double p = 0.0;
  for (const auto& wm : w[t]) p += std::norm(wm);
  return p;
}

}  // namespace passopt
