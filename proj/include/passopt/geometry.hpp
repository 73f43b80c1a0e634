#pragma once

#include <random>
#include <utility>

#include "passopt/types.hpp"

namespace passopt {

/// y-coordinate of the m-th waveguide axis, m is 1-based.
double waveguide_y(int m, const SystemConfig& cfg);

/// Feed point of the m-th waveguide: [0, (2m-1)*D_wg/2, h]. Throws on
/// m outside [1, M].
Point3 feed_point(int m, const SystemConfig& cfg);

/// Factor K into rows x cols (rows along y, cols along x) minimizing the
/// grid aspect ratio; ties put the longer grid side along the longer
/// region side.
std::pair<int, int> subregion_grid(int K, double d1, double d2);

/// One uniform draw per subregion of the d1 x d2 rectangle, K users total.
UserSet generate_users(const SystemConfig& cfg, std::mt19937_64& rng);

double distance_user_pa(const Point3& u, const Point3& pa);

/// Distance from u to the segment {x in [0,D], y = (2m-1)*D_wg/2, z = h}.
double distance_user_waveguide(const Point3& u, int m, const SystemConfig& cfg);

/// Pairwise user distances with coincident users (< 1e-6 m apart) treated
/// as exactly 1e-6 m apart, as required by the scheduling proxies.
std::vector<std::vector<double>> user_distance_matrix(const UserSet& users);

}  // namespace passopt
