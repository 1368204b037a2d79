// Copyright 2026 The native_kernels Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace nk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma-type pole or a zero/negative-integer series denominator.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Result not representable in double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A series, quadrature or iteration exhausted its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Kernel parameters outside their validity region.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// Point dimension disagrees with the kernel or the point set.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace nk
