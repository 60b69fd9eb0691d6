// Copyright 2026 The wlkernels Authors
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

namespace wlk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument, parameter range or caller-contract violation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (dataset files, graph construction input).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (k-set count, sample budget) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// File system failure while reading or writing.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wlk
