// Copyright 2026 The TrajTok Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trajtok {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A sequence did not have the expected number of elements.
class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

/// A coordinate was NaN or infinite where a finite value is required.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// flip_augment was called on a dataset that was already augmented.
class AlreadyAugmentedError : public Error {
 public:
  using Error::Error;
};

/// Grid bounds are inverted, an interval is non-positive, or a range is
/// not an integer multiple of its interval.
class DegenerateGridError : public Error {
 public:
  using Error::Error;
};

/// No usable trajectory remained after filtering or range checks.
class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

/// Cell classification thresholds violate 1 <= filter <= expand <= k*k.
class BadThresholdsError : public Error {
 public:
  using Error::Error;
};

/// A per-cell trajectory group was empty where data is required.
class EmptyCellError : public Error {
 public:
  using Error::Error;
};

class EmptyVocabularyError : public Error {
 public:
  using Error::Error;
};

class AgentTypeMismatchError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Smoothing mass outside (0, 1) or non-positive distance floor.
class BadEpsilonError : public Error {
 public:
  using Error::Error;
};

/// Ground-truth index outside the vocabulary.
class BadIndexError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace trajtok
