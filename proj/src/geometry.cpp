#include "potts/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "potts/errors.hpp"

namespace potts {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kRelSlack = 1e-12;
} // namespace

double angle_between(Vec2 u, Vec2 v) {
    if (u == Vec2{} || v == Vec2{}) throw ContractError("angle_between: zero vector");
    double a = std::abs(std::arg(u) - std::arg(v));
    if (a > kPi) a = 2 * kPi - a;
    return a;
}

bool cone_sum_bound_holds(std::span<const Vec2> us, double alpha) {
    if (!(alpha >= 0.0 && alpha < 2.0 * kPi / 3.0))
        throw ContractError("cone_sum_bound_holds: alpha must lie in [0, 2*pi/3)");
    for (auto u : us) {
        if (u == Vec2{}) throw ContractError("cone_sum_bound_holds: zero vector");
    }
    for (std::size_t i = 0; i < us.size(); ++i) {
        for (std::size_t j = i + 1; j < us.size(); ++j) {
            if (angle_between(us[i], us[j]) > alpha + kRelSlack)
                throw ContractError("cone_sum_bound_holds: pairwise angle exceeds alpha");
        }
    }
    Vec2 sum{};
    double norms = 0.0;
    for (auto u : us) {
        sum += u;
        norms += std::abs(u);
    }
    return std::abs(sum) + kRelSlack * norms >= std::cos(alpha / 2) * norms;
}

bool in_disk_power(std::complex<double> z, double r, int d, double slack) {
    if (!(r > 0.0) || d < 1) throw ContractError("in_disk_power: need r > 0 and d >= 1");
    double r_eff = r * (1.0 + slack);
    if (z == std::complex<double>{}) return r_eff > 1.0;
    double mod_root = std::pow(std::abs(z), 1.0 / d);
    double arg0 = std::arg(z) / d;
    for (int j = 0; j < d; ++j) {
        auto root = std::polar(mod_root, arg0 + 2.0 * kPi * j / d);
        if (std::abs(root - 1.0) < r_eff) return true;
    }
    return false;
}

bool pair_distance_bound(Vec2 u, Vec2 v, double r, double phi) {
    if (u == Vec2{} || v == Vec2{}) throw ContractError("pair_distance_bound: zero vector");
    if (!(r >= 1.0)) throw ContractError("pair_distance_bound: need r >= 1");
    if (!(phi >= 0.0 && phi < kPi / 3.0))
        throw ContractError("pair_distance_bound: need 0 <= phi < pi/3");
    if (angle_between(u, v) > phi + kRelSlack)
        throw ContractError("pair_distance_bound: angle exceeds phi");
    double ratio = std::abs(u) / std::abs(v);
    if (ratio > r * (1 + kRelSlack) || ratio < 1.0 / r * (1 - kRelSlack))
        throw ContractError("pair_distance_bound: modulus ratio outside [1/r, r]");
    double envelope = std::max(2.0 * std::sin(phi / 2.0),
                               std::sqrt(std::max(0.0, 1.0 + 1.0 / (r * r) - 2.0 / r * std::cos(phi))));
    double scale = std::max(std::abs(u), std::abs(v));
    return std::abs(u - v) <= envelope * scale * (1 + kRelSlack) + kRelSlack * scale;
}

std::pair<bool, bool> simple_geom_bounds(Vec2 u, Vec2 v) {
    if (u == Vec2{} || v == Vec2{}) throw ContractError("simple_geom_bounds: zero vector");
    double gamma = angle_between(u, v);
    double scale = std::max(std::abs(u), std::abs(v));
    bool first = true;
    if (gamma <= kPi / 3.0 + kRelSlack)
        first = std::abs(u - v) <= scale * (1 + kRelSlack);
    bool second = std::sin(gamma) <= std::abs(u - v) / std::abs(v) + kRelSlack;
    return {first, second};
}

} // namespace potts
