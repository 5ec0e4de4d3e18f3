// SPDX-License-Identifier: Apache-2.0
//
// nearfocus - near-field focusing analysis for sparse linear antenna arrays
// Copyright (C) 2026 The nearfocus Authors
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

#ifndef NEARFOCUS_ERRORS_HPP
#define NEARFOCUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nearfocus
{

// Physical input outside the model's domain (non-positive frequency, z <= 0, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Source-receiver distance below the minimum-distance guard.
class SingularityError : public DomainError
{
public:
    SingularityError(const std::string &what, double distance)
        : DomainError(what), distance_(distance) {}

    double distance() const noexcept { return distance_; }

private:
    double distance_;
};

// Channel matrix with no energy; effective DoF is undefined.
class DegenerateChannelError : public DomainError
{
public:
    using DomainError::DomainError;
};

// Malformed call arguments (empty target list, range not containing z0, ...).
class ArgumentError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace nearfocus

#endif
