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

#include "xlmimo/regions.hpp"

#include <cmath>

namespace xlmimo {

namespace {

void require_aperture(const ArrayConfig &cfg, const char *what) {
    if (cfg.num_elements() < 2)
        throw single_element_error(std::string(what) +
                                   " undefined for a single-element array");
}

void require_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("power-ratio threshold alpha must lie in (0, 1)");
}

} // namespace

const char *to_string(FieldRegion region) {
    switch (region) {
    case FieldRegion::FarField:
        return "FarField";
    case FieldRegion::UpperNearField:
        return "UpperNearField";
    case FieldRegion::LowerNearField:
        return "LowerNearField";
    }
    return "unknown";
}

double rayleigh_distance(const ArrayConfig &cfg) {
    require_aperture(cfg, "Rayleigh distance");
    const double aperture = cfg.aperture_m();
    return 2.0 * aperture * aperture / cfg.wavelength_m();
}

double power_ratio(const ArrayConfig &cfg, const UserLocation &user) {
    if (cfg.num_elements() == 1)
        return 1.0;

    const double half_aperture = 0.5 * cfg.aperture_m();
    const double axial = user.distance_m() * std::abs(std::sin(user.angle_rad()));
    const double lateral = user.distance_m() * std::cos(user.angle_rad());

    const double far_end = axial + half_aperture;
    const double strongest_sq = lateral * lateral + far_end * far_end;
    if (axial <= half_aperture) {
        // Projection falls inside the aperture: nearest point is the foot.
        return lateral * lateral / strongest_sq;
    }
    const double near_end = axial - half_aperture;
    return (lateral * lateral + near_end * near_end) / strongest_sq;
}

double critical_distance(const ArrayConfig &cfg, double alpha) {
    require_aperture(cfg, "critical distance");
    require_alpha(alpha);
    const double root = std::sqrt(alpha);
    return 0.5 * cfg.aperture_m() * (1.0 + root) / (1.0 - root);
}

RegionThresholds region_thresholds(const ArrayConfig &cfg, double alpha) {
    return {rayleigh_distance(cfg), critical_distance(cfg, alpha), alpha};
}

FieldRegion classify_region(const ArrayConfig &cfg, const UserLocation &user, double alpha) {
    const RegionThresholds thresholds = region_thresholds(cfg, alpha);
    if (thresholds.critical_m >= thresholds.rayleigh_m)
        throw threshold_order_error(
            "critical distance is not below the Rayleigh distance for this array");

    if (user.distance_m() >= thresholds.rayleigh_m)
        return FieldRegion::FarField;
    if (user.distance_m() >= thresholds.critical_m)
        return FieldRegion::UpperNearField;
    return FieldRegion::LowerNearField;
}

} // namespace xlmimo
