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

#ifndef XLMIMO_ERRORS_HPP
#define XLMIMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xlmimo {

// Base class for failures of the physical model itself, as opposed to bad
// arguments (std::invalid_argument). The CLI maps these to exit code 3.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// User so close that some element distance falls below d/2; the 1/r
// amplitude model is no longer meaningful there.
class degenerate_geometry_error : public domain_error {
public:
    using domain_error::domain_error;
};

// Endfire user (|theta| = pi/2) at r <= M*d/2, outside the validity range
// of the closed-form SNR expressions.
class endfire_too_close_error : public domain_error {
public:
    using domain_error::domain_error;
};

// Operation needs a nonzero aperture but the array has a single element.
class single_element_error : public domain_error {
public:
    using domain_error::domain_error;
};

// critical distance >= Rayleigh distance; the three-region partition does
// not exist for this array (only possible at very small apertures).
class threshold_order_error : public domain_error {
public:
    using domain_error::domain_error;
};

class dimension_mismatch_error : public domain_error {
public:
    using domain_error::domain_error;
};

// The large-M SNR limit is undefined at endfire (projected distance zero).
class endfire_limit_error : public domain_error {
public:
    using domain_error::domain_error;
};

// Special-case SNR evaluation called with a direction that is neither
// boresight nor endfire.
class wrong_branch_error : public domain_error {
public:
    using domain_error::domain_error;
};

} // namespace xlmimo

#endif
