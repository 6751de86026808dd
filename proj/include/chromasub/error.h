// Copyright 2026 The chromasub Authors
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

#ifndef CHROMASUB_ERROR_H_
#define CHROMASUB_ERROR_H_

#include <stdexcept>
#include <string>

namespace chromasub {

// Base of every error the library throws. The subclasses name the failure
// category so callers (mainly the harness) can report or isolate them.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Block or pixel index outside the image.
class AddressingError : public Error {
 public:
  using Error::Error;
};

// Unknown pattern variant, invalid method combination, bad flag value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Odd dimensions, mismatched plane sizes, wrong up/down-sampling ratio.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Distortion model cannot be minimized (singular normal equations).
class ModelError : public Error {
 public:
  using Error::Error;
};

// Two images that cannot be compared (pattern or geometry mismatch).
class ComparisonError : public Error {
 public:
  using Error::Error;
};

// Metric precondition violated, e.g. image smaller than the SSIM window.
class MetricError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace chromasub

#endif  // CHROMASUB_ERROR_H_
