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

#include "xlmimo/single_user.hpp"

#include <cmath>
#include <numbers>

namespace xlmimo {

namespace {

// Below this |cos(theta)| the main closed-form branch loses precision and
// the endfire limit form is exact, so dispatch there.
constexpr double kEndfireCosEps = 1e-9;

// Half the closed-form aperture in units of r: x = M*d/(2r).
double half_aperture_ratio(const ArrayConfig &cfg, const UserLocation &user) {
    return 0.5 * cfg.num_elements() * cfg.spacing_m() / user.distance_m();
}

bool is_endfire(const UserLocation &user) {
    return std::abs(std::cos(user.angle_rad())) < kEndfireCosEps;
}

void require_endfire_clearance(const ArrayConfig &cfg, const UserLocation &user) {
    if (half_aperture_ratio(cfg, user) >= 1.0)
        throw endfire_too_close_error("endfire user inside M*d/2; closed form undefined");
}

// 1/(1 - x^2) evaluated as the endfire SNR ratio r^2/(r^2 - (M*d/2)^2).
double endfire_ratio(double x) {
    return 1.0 / ((1.0 - x) * (1.0 + x));
}

} // namespace

double snr_exact(const ArrayConfig &cfg, const UserLocation &user, const LinkBudget &budget) {
    require_valid_geometry(cfg, user);

    const double r = user.distance_m();
    const double eps = cfg.spacing_m() / r;
    const double sin_theta = std::sin(user.angle_rad());
    const double cos_theta = std::cos(user.angle_rad());
    const double half_span = 0.5 * (cfg.num_elements() - 1);

    double acc = 0.0;
    for (int i = 0; i < cfg.num_elements(); ++i) {
        const double t = (i - half_span) * eps;
        acc += 1.0 / detail::distance_factor_sq(t, sin_theta, cos_theta);
    }
    return budget.ref_snr() / (r * r) * acc;
}

double angular_span(const ArrayConfig &cfg, const UserLocation &user) {
    const double x = half_aperture_ratio(cfg, user);
    const double cos_theta = std::cos(user.angle_rad());
    if (std::abs(cos_theta) < kEndfireCosEps && x >= 1.0)
        throw endfire_too_close_error("endfire user inside M*d/2; angular span undefined");

    // Single-arctangent form of arctan(x/cos - tan) + arctan(x/cos + tan);
    // the two-term sum cancels catastrophically once both terms approach
    // +-pi/2, this one does not.
    return std::atan2(2.0 * x * cos_theta, (1.0 - x) * (1.0 + x));
}

double angular_span_alt(const ArrayConfig &cfg, const UserLocation &user) {
    const double x = half_aperture_ratio(cfg, user);
    const double cos_theta = std::cos(user.angle_rad());
    if (std::abs(cos_theta) < kEndfireCosEps && x >= 1.0)
        throw endfire_too_close_error("endfire user inside M*d/2; angular span undefined");

    const double sin_theta = std::sin(user.angle_rad());
    // atan2 supplies the +pi continuation when the user sits beyond an
    // aperture end along the array axis (negative denominator).
    return std::atan2(x * cos_theta, 1.0 - x * sin_theta) +
           std::atan2(x * cos_theta, 1.0 + x * sin_theta);
}

double snr_closed_form(const ArrayConfig &cfg, const UserLocation &user,
                       const LinkBudget &budget) {
    if (is_endfire(user)) {
        require_endfire_clearance(cfg, user);
        const double x = half_aperture_ratio(cfg, user);
        const double r = user.distance_m();
        return budget.ref_snr() * cfg.num_elements() / (r * r) * endfire_ratio(x);
    }
    const double denom = cfg.spacing_m() * user.distance_m() * std::cos(user.angle_rad());
    return budget.ref_snr() / denom * angular_span(cfg, user);
}

double snr_upw(const ArrayConfig &cfg, const UserLocation &user, const LinkBudget &budget) {
    const double r = user.distance_m();
    return budget.ref_snr() * cfg.num_elements() / (r * r);
}

double snr_limit(const ArrayConfig &cfg, const UserLocation &user, const LinkBudget &budget) {
    if (is_endfire(user))
        throw endfire_limit_error("large-M SNR limit undefined at endfire");
    const double denom = cfg.spacing_m() * user.distance_m() * std::cos(user.angle_rad());
    return budget.ref_snr() * std::numbers::pi / denom;
}

double snr_ratio(const ArrayConfig &cfg, const UserLocation &user) {
    const double x = half_aperture_ratio(cfg, user);
    if (is_endfire(user)) {
        require_endfire_clearance(cfg, user);
        return endfire_ratio(x);
    }
    return angular_span(cfg, user) / (2.0 * x * std::cos(user.angle_rad()));
}

double snr_special_case(const ArrayConfig &cfg, const UserLocation &user,
                        const LinkBudget &budget) {
    const double theta = user.angle_rad();
    const double r = user.distance_m();
    const double x = half_aperture_ratio(cfg, user);

    if (std::abs(theta) <= 1e-12)
        return budget.ref_snr() * 2.0 / (cfg.spacing_m() * r) * std::atan(x);

    if (std::abs(std::abs(theta) - 0.5 * std::numbers::pi) <= 1e-12) {
        require_endfire_clearance(cfg, user);
        return budget.ref_snr() * cfg.num_elements() / (r * r) * endfire_ratio(x);
    }
    throw wrong_branch_error("special-case SNR defined only at theta = 0 or +-pi/2");
}

bool closed_form_strained(const ArrayConfig &cfg, const UserLocation &user) {
    return cfg.spacing_m() / user.distance_m() > 0.1;
}

SnrReport snr_report(const ArrayConfig &cfg, const UserLocation &user,
                     const LinkBudget &budget) {
    SnrReport report{};
    report.snr_exact = snr_exact(cfg, user, budget);
    report.snr_closed_form = snr_closed_form(cfg, user, budget);
    report.snr_upw = snr_upw(cfg, user, budget);
    report.snr_limit = snr_limit(cfg, user, budget);
    report.angular_span = angular_span(cfg, user);
    report.snr_ratio = snr_ratio(cfg, user);
    return report;
}

} // namespace xlmimo
