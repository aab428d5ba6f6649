// Copyright 2026 The dqc-equiv Authors
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

namespace dqc {

class DqcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public DqcError {
 public:
  using DqcError::DqcError;
};

class InvalidStateError : public DqcError {
 public:
  using DqcError::DqcError;
};

// Raised when probabilities no longer sum to one; indicates a corrupted state.
class NumericalError : public DqcError {
 public:
  using DqcError::DqcError;
};

class NonUnitaryError : public DqcError {
 public:
  using DqcError::DqcError;
};

class GraphError : public DqcError {
 public:
  using DqcError::DqcError;
};

class MissingDependencyError : public DqcError {
 public:
  using DqcError::DqcError;
};

class SmpcError : public DqcError {
 public:
  using DqcError::DqcError;
};

class RerunExhaustedError : public DqcError {
 public:
  using DqcError::DqcError;
};

class SizeLimitError : public DqcError {
 public:
  using DqcError::DqcError;
};

}  // namespace dqc
