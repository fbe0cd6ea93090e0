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

#ifndef XLMIMO_REGIONS_HPP
#define XLMIMO_REGIONS_HPP

#include "xlmimo/geometry.hpp"

namespace xlmimo {

// Link-distance partition. The Rayleigh distance bounds the phase spread
// (electrical size); the critical distance bounds the element power spread
// (physical size). Between them the amplitude is flat but the phase is not.
enum class FieldRegion { FarField, UpperNearField, LowerNearField };

const char *to_string(FieldRegion region);

struct RegionThresholds {
    double rayleigh_m;
    double critical_m;
    double alpha; // power-ratio threshold behind critical_m, in (0, 1)
};

// Classical Rayleigh distance 2*D^2/lambda with D = (M-1)*d.
// Throws single_element_error for M = 1 (zero aperture).
double rayleigh_distance(const ArrayConfig &cfg);

// Weakest-to-strongest element power ratio under the 1/r_m amplitude law,
// with the aperture treated as continuous (extremes at +-D/2). In (0, 1];
// exactly 1 for a single element.
double power_ratio(const ArrayConfig &cfg, const UserLocation &user);

// Smallest r such that power_ratio(r, theta) >= alpha for every theta; the
// worst direction is endfire, giving (D/2)*(1+sqrt(alpha))/(1-sqrt(alpha)).
// About 8.97*D at alpha = 0.8.
double critical_distance(const ArrayConfig &cfg, double alpha);

RegionThresholds region_thresholds(const ArrayConfig &cfg, double alpha);

// Half-open intervals, closed at the far end: r >= rayleigh is far field,
// critical <= r < rayleigh is the upper near field, below that the lower
// near field. Throws threshold_order_error if critical >= rayleigh (tiny
// apertures only).
FieldRegion classify_region(const ArrayConfig &cfg, const UserLocation &user, double alpha);

} // namespace xlmimo

#endif
