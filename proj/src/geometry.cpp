// SPDX-License-Identifier: Apache-2.0
//
// xlmimo: spherical-wavefront channel modelling and performance analysis
// for extremely large-scale MIMO arrays
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "xlmimo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace xlmimo {

ArrayConfig::ArrayConfig(int num_elements, double spacing_m, double wavelength_m)
    : num_elements_(num_elements), spacing_m_(spacing_m), wavelength_m_(wavelength_m) {
    if (num_elements < 1)
        throw std::invalid_argument("ArrayConfig: element count must be >= 1, got " +
                                    std::to_string(num_elements));
    if (!(spacing_m > 0.0))
        throw std::invalid_argument("ArrayConfig: element spacing must be positive");
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("ArrayConfig: wavelength must be positive");
    // 1-ulp slack so d derived as lambda/2 from a parsed frequency still passes.
    if (spacing_m > 0.5 * wavelength_m * (1.0 + 1e-12))
        throw std::invalid_argument("ArrayConfig: element spacing must not exceed half a wavelength");
}

double ArrayConfig::element_offset(int index) const {
    if (index < 0 || index >= num_elements_)
        throw std::invalid_argument("ArrayConfig: element index out of range");
    return index - 0.5 * (num_elements_ - 1);
}

UserLocation::UserLocation(double distance_m, double angle_rad)
    : distance_m_(distance_m), angle_rad_(angle_rad) {
    if (!(distance_m > 0.0))
        throw std::invalid_argument("UserLocation: distance must be positive");
    if (!(std::abs(angle_rad) <= 0.5 * std::numbers::pi))
        throw std::invalid_argument("UserLocation: angle must lie in [-pi/2, pi/2]");
}

Point2 user_position(const UserLocation &user) {
    return {user.distance_m() * std::cos(user.angle_rad()),
            user.distance_m() * std::sin(user.angle_rad())};
}

std::vector<Point2> element_positions(const ArrayConfig &cfg) {
    std::vector<Point2> points(static_cast<std::size_t>(cfg.num_elements()));
    for (int i = 0; i < cfg.num_elements(); ++i)
        points[static_cast<std::size_t>(i)] = {0.0, cfg.element_offset(i) * cfg.spacing_m()};
    return points;
}

namespace {

double offset_distance(const ArrayConfig &cfg, const UserLocation &user, double offset) {
    const double r = user.distance_m();
    const double t = offset * cfg.spacing_m() / r;
    const double q = detail::distance_factor_sq(t, std::sin(user.angle_rad()),
                                                std::cos(user.angle_rad()));
    return r * std::sqrt(q);
}

} // namespace

double element_distance(const ArrayConfig &cfg, const UserLocation &user, double offset) {
    const double half_span = 0.5 * (cfg.num_elements() - 1);
    const double index = offset + half_span;
    if (std::abs(index - std::round(index)) > 1e-9 || offset < -half_span - 1e-9 ||
        offset > half_span + 1e-9)
        throw std::invalid_argument("element_distance: offset does not address an element");

    const double dist = offset_distance(cfg, user, offset);
    if (dist < 0.5 * cfg.spacing_m())
        throw degenerate_geometry_error("element distance below d/2; user collocated with array");
    return dist;
}

std::pair<double, double> min_max_element_distance(const ArrayConfig &cfg,
                                                   const UserLocation &user) {
    const double half_span = 0.5 * (cfg.num_elements() - 1);
    if (cfg.num_elements() == 1)
        return {user.distance_m(), user.distance_m()};

    // Continuous minimizer of r_m over the offset is the projection of the
    // user onto the array axis, at offset r*sin(theta)/d.
    const double projected = user.distance_m() * std::sin(user.angle_rad()) / cfg.spacing_m();
    const double lo = std::floor(std::clamp(projected, -half_span, half_span) + half_span);
    double dist_min = offset_distance(cfg, user, std::min(lo - half_span + 1.0, half_span));
    dist_min = std::min(dist_min, offset_distance(cfg, user, lo - half_span));

    const double dist_max = std::max(offset_distance(cfg, user, -half_span),
                                     offset_distance(cfg, user, half_span));
    return {dist_min, dist_max};
}

void require_valid_geometry(const ArrayConfig &cfg, const UserLocation &user) {
    if (min_max_element_distance(cfg, user).first < 0.5 * cfg.spacing_m())
        throw degenerate_geometry_error("element distance below d/2; user collocated with array");
}

} // namespace xlmimo
