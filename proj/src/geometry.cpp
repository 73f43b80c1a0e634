#include "passopt/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace passopt {

double waveguide_y(int m, const SystemConfig& cfg) {
  return (2.0 * m - 1.0) * cfg.D_wg / 2.0;
}

Point3 feed_point(int m, const SystemConfig& cfg) {
  if (m < 1 || m > cfg.M) throw std::out_of_range("waveguide index out of range");
  return {0.0, waveguide_y(m, cfg), cfg.h};
}

std::pair<int, int> subregion_grid(int K, double d1, double d2) {
  int best_r = 1, best_c = K;
  double best_ratio = std::numeric_limits<double>::infinity();
  for (int r = 1; r <= K; ++r) {
    if (K % r != 0) continue;
    const int c = K / r;
    const double ratio = static_cast<double>(std::max(r, c)) / std::min(r, c);
    // tie-break: more cells along the longer region side
    const bool better =
        ratio < best_ratio - 1e-12 ||
        (std::abs(ratio - best_ratio) <= 1e-12 &&
         ((d2 >= d1 && r > best_r) || (d2 < d1 && c > best_c)));
    if (better) {
      best_r = r;
      best_c = c;
      best_ratio = ratio;
    }
  }
  return {best_r, best_c};
}

UserSet generate_users(const SystemConfig& cfg, std::mt19937_64& rng) {
  const auto [rows, cols] = subregion_grid(cfg.K, cfg.d1, cfg.d2);
  const double cw = cfg.d1 / cols;
  const double ch = cfg.d2 / rows;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  UserSet users;
  users.reserve(cfg.K);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const double x = (c + unit(rng)) * cw;
      const double y = (r + unit(rng)) * ch;
      users.push_back({x, y, 0.0});
    }
  return users;
}

double distance_user_pa(const Point3& u, const Point3& pa) {
  const double dx = u.x - pa.x;
  const double dy = u.y - pa.y;
  const double dz = u.z - pa.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double distance_user_waveguide(const Point3& u, int m, const SystemConfig& cfg) {
  const double cx = std::clamp(u.x, 0.0, cfg.D);
  const double dy = u.y - waveguide_y(m, cfg);
  const double dz = u.z - cfg.h;
  const double dx = u.x - cx;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

std::vector<std::vector<double>> user_distance_matrix(const UserSet& users) {
  const int K = static_cast<int>(users.size());
  std::vector<std::vector<double>> d(K, std::vector<double>(K, 0.0));
  for (int i = 0; i < K; ++i)
    for (int j = i + 1; j < K; ++j) {
      const double dij = std::max(distance_user_pa(users[i], users[j]), 1e-6);
      d[i][j] = dij;
      d[j][i] = dij;
    }
  return d;
}

}  // namespace passopt
