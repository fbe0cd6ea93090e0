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

#ifndef XLMIMO_GEOMETRY_HPP
#define XLMIMO_GEOMETRY_HPP

#include <utility>
#include <vector>

#include "xlmimo/errors.hpp"

namespace xlmimo {

struct Point2 {
    double x; // meters
    double y; // meters
};

// Uniform linear array along the y-axis, centered at the origin.
// Element i (0-based) sits at y = (i - (M-1)/2) * d, so the signed element
// offsets are integers for odd M and half-integers for even M.
class ArrayConfig {
public:
    // Throws std::invalid_argument unless M >= 1, d > 0, lambda > 0 and
    // d <= lambda/2 (element separation at most half a wavelength).
    ArrayConfig(int num_elements, double spacing_m, double wavelength_m);

    int num_elements() const { return num_elements_; }
    double spacing_m() const { return spacing_m_; }
    double wavelength_m() const { return wavelength_m_; }

    // Physical aperture D = (M-1)*d.
    double aperture_m() const { return (num_elements_ - 1) * spacing_m_; }

    // Signed offset of element i in units of d, i in [0, M).
    double element_offset(int index) const;

private:
    int num_elements_;
    double spacing_m_;
    double wavelength_m_;
};

// Single-antenna user in polar coordinates relative to the array center.
// theta is measured from the x-axis (array boresight); theta = +-pi/2 puts
// the user on the array axis.
class UserLocation {
public:
    // Throws std::invalid_argument unless r > 0 and |theta| <= pi/2.
    UserLocation(double distance_m, double angle_rad);

    double distance_m() const { return distance_m_; }
    double angle_rad() const { return angle_rad_; }

private:
    double distance_m_;
    double angle_rad_;
};

// Cartesian position of the user, (r*cos(theta), r*sin(theta)).
Point2 user_position(const UserLocation &user);

// Element positions in order of element index.
std::vector<Point2> element_positions(const ArrayConfig &cfg);

// Exact distance between the user and the element at signed offset m:
// r * sqrt(1 - 2*m*eps*sin(theta) + m^2*eps^2) with eps = d/r, identical to
// the Euclidean norm between the two positions.
// Throws degenerate_geometry_error if the distance falls below d/2 and
// std::invalid_argument if m is not a valid offset for this array.
double element_distance(const ArrayConfig &cfg, const UserLocation &user, double offset);

// Smallest and largest element distance. O(1): the distance is convex in
// the offset, so the extremes sit at the grid points around the continuous
// minimizer and at the two array ends.
std::pair<double, double> min_max_element_distance(const ArrayConfig &cfg,
                                                   const UserLocation &user);

// Throws degenerate_geometry_error when any element is closer than d/2.
void require_valid_geometry(const ArrayConfig &cfg, const UserLocation &user);

namespace detail {

// (r_m / r)^2 for t = m*eps, written as a sum of squares so large t does
// not cancel against 1.
inline double distance_factor_sq(double t, double sin_theta, double cos_theta) {
    const double u = t - sin_theta;
    return u * u + cos_theta * cos_theta;
}

} // namespace detail

} // namespace xlmimo

#endif
