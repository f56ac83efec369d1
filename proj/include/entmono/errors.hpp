// Copyright 2026 The entmono authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTMONO_ERRORS_HPP
#define ENTMONO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace entmono {

/// Base class for all entmono exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// A caller handed us something that violates a precondition or an input
/// format. Maps to CLI exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation failed at runtime (iteration cap, rank deficiency, ...).
/// Maps to CLI exit code 2.
class ComputeError : public Error {
 public:
  using Error::Error;
};

class DimMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotHermitian : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotPsd : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SpectrumInvalid : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidState : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class Unsupported : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NoConvergence : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

class Singular : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

class DegenerateCounts : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

}  // namespace entmono

#endif
