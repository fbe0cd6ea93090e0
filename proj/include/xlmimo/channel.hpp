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

#ifndef XLMIMO_CHANNEL_HPP
#define XLMIMO_CHANNEL_HPP

#include <complex>
#include <span>
#include <vector>

#include "xlmimo/geometry.hpp"

namespace xlmimo {

// Reference SNR terms for one link. The noise power is fixed to sigma^2 = 1
// throughout, so the transmit SNR is P/sigma^2 = P and beta0 is the channel
// power at the 1 m reference distance. Their product is the received SNR at
// the reference distance.
class LinkBudget {
public:
    // Combined reference SNR only; beta0 defaults to 1.
    explicit LinkBudget(double ref_snr);
    LinkBudget(double transmit_snr, double beta0);
    static LinkBudget from_db(double ref_snr_db);

    double transmit_snr() const { return transmit_snr_; }
    double beta0() const { return beta0_; }
    double ref_snr() const { return transmit_snr_ * beta0_; }

private:
    double transmit_snr_;
    double beta0_;
};

// Which simplification of the spherical-wavefront response to apply.
//   Exact          - amplitude and phase from the exact element distance r_m
//   UpperNearField - amplitude from the center distance r, phase from r_m
//   FarFieldUPW    - amplitude from r, linear phase ramp m*d*sin(theta)
enum class ChannelModelKind { Exact, UpperNearField, FarFieldUPW };

// Channel vector of one user across the M elements. Entry m has modulus
// sqrt(beta0)/r_m (or sqrt(beta0)/r for the simplified kinds); construction
// goes through array_response so this always holds.
class ArrayResponse {
public:
    std::size_t size() const { return entries_.size(); }
    std::span<const std::complex<double>> entries() const { return entries_; }
    const std::complex<double> &operator[](std::size_t i) const { return entries_[i]; }

private:
    explicit ArrayResponse(std::vector<std::complex<double>> entries)
        : entries_(std::move(entries)) {}
    friend ArrayResponse array_response(const ArrayConfig &, const UserLocation &,
                                        const LinkBudget &, ChannelModelKind);
    std::vector<std::complex<double>> entries_;
};

// Entry m is (sqrt(beta0)/r_m) * exp(-j*2*pi*r_m/lambda), with r_m replaced
// by r in amplitude and/or phase according to the model kind. Phases are
// evaluated as 2*pi*(r_m - r)/lambda relative to the center element plus one
// common factor exp(-j*2*pi*r/lambda); the common factor cancels in every
// SNR/SINR/correlation quantity, so those stay accurate at r >> lambda.
// Throws degenerate_geometry_error when any element is closer than d/2.
ArrayResponse array_response(const ArrayConfig &cfg, const UserLocation &user,
                             const LinkBudget &budget, ChannelModelKind kind);

// Squared Euclidean norm of the response, i.e. the channel power summed
// over elements.
double response_norm_sq(const ArrayResponse &resp);

} // namespace xlmimo

#endif
