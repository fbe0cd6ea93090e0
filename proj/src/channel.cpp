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

#include "xlmimo/channel.hpp"

#include <cmath>
#include <numbers>

namespace xlmimo {

LinkBudget::LinkBudget(double ref_snr) : LinkBudget(ref_snr, 1.0) {}

LinkBudget::LinkBudget(double transmit_snr, double beta0)
    : transmit_snr_(transmit_snr), beta0_(beta0) {
    if (!(transmit_snr > 0.0) || !(beta0 > 0.0))
        throw std::invalid_argument("LinkBudget: reference SNR terms must be positive");
}

LinkBudget LinkBudget::from_db(double ref_snr_db) {
    return LinkBudget(std::pow(10.0, ref_snr_db / 10.0));
}

ArrayResponse array_response(const ArrayConfig &cfg, const UserLocation &user,
                             const LinkBudget &budget, ChannelModelKind kind) {
    require_valid_geometry(cfg, user);

    const double r = user.distance_m();
    const double sin_theta = std::sin(user.angle_rad());
    const double cos_theta = std::cos(user.angle_rad());
    const double eps = cfg.spacing_m() / r;
    const double wavenumber = 2.0 * std::numbers::pi / cfg.wavelength_m();
    const double center_amplitude = std::sqrt(budget.beta0()) / r;

    const std::complex<double> common = std::polar(1.0, -wavenumber * r);

    std::vector<std::complex<double>> entries(static_cast<std::size_t>(cfg.num_elements()));
    for (int i = 0; i < cfg.num_elements(); ++i) {
        const double t = cfg.element_offset(i) * eps;
        double amplitude = center_amplitude;
        double relative_phase = 0.0;
        if (kind == ChannelModelKind::FarFieldUPW) {
            relative_phase = wavenumber * t * r * sin_theta; // +2*pi*m*d*sin(theta)/lambda
        } else {
            const double q = detail::distance_factor_sq(t, sin_theta, cos_theta);
            // r_m - r = r*(sqrt(q) - 1) without cancellation: q - 1 = t*(t - 2*sin).
            const double delta = r * t * (t - 2.0 * sin_theta) / (std::sqrt(q) + 1.0);
            relative_phase = -wavenumber * delta;
            if (kind == ChannelModelKind::Exact)
                amplitude = std::sqrt(budget.beta0()) / (r * std::sqrt(q));
        }
        entries[static_cast<std::size_t>(i)] = std::polar(amplitude, relative_phase) * common;
    }
    return ArrayResponse(std::move(entries));
}

double response_norm_sq(const ArrayResponse &resp) {
    double acc = 0.0;
    for (const auto &entry : resp.entries())
        acc += std::norm(entry);
    return acc;
}

} // namespace xlmimo
