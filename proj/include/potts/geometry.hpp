#pragma once

#include <complex>
#include <span>
#include <utility>

namespace potts {

using Vec2 = std::complex<double>;

/// Unsigned angle between two nonzero plane vectors, in [0, pi].
double angle_between(Vec2 u, Vec2 v);

/// For nonzero vectors with pairwise angles at most alpha < 2*pi/3, tests
/// the cone lower bound |sum u_i| >= cos(alpha/2) * sum |u_i|. The bound
/// always holds for such inputs, so a false return means a bug or a
/// tolerance problem; the comparison carries a relative rounding slack so
/// exact-equality configurations are not flipped by floating error.
bool cone_sum_bound_holds(std::span<const Vec2> us, double alpha);

/// Membership of z in the product set { b_1*...*b_d : |b_i - 1| < r }.
/// Equivalent to some d-th root of z lying in the open disk B(1,r); the
/// d candidate roots are enumerated directly. `slack` loosens the radius
/// multiplicatively (property tests pass 1e-12; the default is strict).
bool in_disk_power(std::complex<double> z, double r, int d, double slack = 0.0);

/// For nonzero u,v at angle <= phi < pi/3 with modulus ratio in [1/r, r],
/// tests |u - v| <= max{2 sin(phi/2), sqrt(1 + r^-2 - 2 r^-1 cos phi)} * max{|u|,|v|}.
bool pair_distance_bound(Vec2 u, Vec2 v, double r, double phi);

/// Two elementary facts for nonzero u,v:
///   first:  if angle(u,v) <= pi/3 then |u - v| <= max{|u|, |v|}
///           (reported true vacuously when the angle exceeds pi/3);
///   second: sin(angle(u,v)) <= |u - v| / |v|.
std::pair<bool, bool> simple_geom_bounds(Vec2 u, Vec2 v);

} // namespace potts
