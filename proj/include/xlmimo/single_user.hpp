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

#ifndef XLMIMO_SINGLE_USER_HPP
#define XLMIMO_SINGLE_USER_HPP

#include "xlmimo/channel.hpp"
#include "xlmimo/geometry.hpp"

namespace xlmimo {

// Single-user MRC/MRT SNR analysis under the spherical-wavefront model.
// Every quantity is linear; dB conversion is a presentation concern.

// Ground-truth SNR: element-wise summation of the received channel powers,
// P * sum_m beta0 / r_m^2 / sigma^2. This is the oracle the closed forms
// are checked against.
double snr_exact(const ArrayConfig &cfg, const UserLocation &user, const LinkBudget &budget);

// Angle subtended at the user by the two ends of the (continuous) aperture
// M*d. Strictly increasing in M; tends to pi as M grows. For an endfire
// user it requires r > M*d/2 and degenerates to zero (the user is collinear
// with the array).
double angular_span(const ArrayConfig &cfg, const UserLocation &user);

// Same angle partitioned at the user-to-center segment instead; two
// arctangents measured against the array axis. Agrees with angular_span to
// machine precision wherever both are defined.
double angular_span_alt(const ArrayConfig &cfg, const UserLocation &user);

// Closed-form SNR: P * beta0 / (d * r * cos(theta)) * angular_span.
// Dispatches to the endfire limit form when |cos(theta)| < 1e-9.
double snr_closed_form(const ArrayConfig &cfg, const UserLocation &user,
                       const LinkBudget &budget);

// Conventional plane-wave SNR, P * M * beta0 / r^2. Direction-independent.
double snr_upw(const ArrayConfig &cfg, const UserLocation &user, const LinkBudget &budget);

// SNR ceiling as M grows without bound: P * beta0 * pi / (d * r * cos(theta)).
// Throws endfire_limit_error at |theta| = pi/2 where it is undefined.
double snr_limit(const ArrayConfig &cfg, const UserLocation &user, const LinkBudget &budget);

// Ratio of the spherical-wavefront closed form to the plane-wave SNR,
// r * angular_span / (M * d * cos(theta)). Below 1 at boresight, above 1 at
// endfire; the link budget cancels.
double snr_ratio(const ArrayConfig &cfg, const UserLocation &user);

// Reduced expressions for theta = 0 and |theta| = pi/2 only; throws
// wrong_branch_error for any other direction (tolerance 1e-12 on theta).
double snr_special_case(const ArrayConfig &cfg, const UserLocation &user,
                        const LinkBudget &budget);

// True when d/r > 0.1: the closed form rests on d/r << 1, so treat it as
// indicative only and trust snr_exact.
bool closed_form_strained(const ArrayConfig &cfg, const UserLocation &user);

// One-stop evaluation of all single-user quantities.
struct SnrReport {
    double snr_exact;
    double snr_closed_form;
    double snr_upw;
    double snr_limit;
    double angular_span; // radians
    double snr_ratio;    // snr_closed_form / snr_upw
};

SnrReport snr_report(const ArrayConfig &cfg, const UserLocation &user, const LinkBudget &budget);

} // namespace xlmimo

#endif
