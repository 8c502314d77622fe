/*
 * Copyright 2026 The gksmote authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace gksmote {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Errors raised while ingesting or validating data.
class ParseError : public Error {
 public:
  using Error::Error;
};
class SchemaError : public Error {
 public:
  using Error::Error;
};
class EmptyClassError : public Error {
 public:
  using Error::Error;
};
class TooSmallError : public Error {
 public:
  using Error::Error;
};
class RateError : public Error {
 public:
  using Error::Error;
};

// Geometry / neighbor search errors.
class DimensionError : public Error {
 public:
  using Error::Error;
};
class PoolTooSmallError : public Error {
 public:
  using Error::Error;
};

// Density estimation and clustering errors.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};
class DegenerateError : public Error {
 public:
  using Error::Error;
};
class AllNoiseError : public Error {
 public:
  using Error::Error;
};
class SingleSampleError : public Error {
 public:
  using Error::Error;
};

// Metric and rank-statistic errors.
class NoPositiveError : public Error {
 public:
  using Error::Error;
};
class ShapeError : public Error {
 public:
  using Error::Error;
};
class UnsupportedAlphaError : public Error {
 public:
  using Error::Error;
};
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace gksmote
