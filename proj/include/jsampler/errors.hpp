// Copyright 2026 The jsampler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace jsampler {

/// Qubit count outside the supported register size.
class SizeError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Qubit or basis index outside the register.
class IndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Malformed argument (length mismatch, out-of-range parameter, ...).
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A quantity is undefined for the given input, e.g. information fidelity
/// against a uniform ideal distribution.
class DegenerateError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A numerical identity that must hold did not (e.g. an OTOC trace with a
/// large imaginary part).
class ConsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid experiment configuration. The message names the offending field.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string &field, const std::string &what)
        : std::runtime_error("config field '" + field + "': " + what), field_(field) {}

    const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

} // namespace jsampler
