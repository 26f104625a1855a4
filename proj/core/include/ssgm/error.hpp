/*
Copyright 2026 The ssgm Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace ssgm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed file content (bad magic, bad header token, truncated payload).
class FormatError : public Error {
public:
  using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
  using Error::Error;
};

/// A value does not fit the representation it is being written into.
class RangeError : public Error {
public:
  using Error::Error;
};

/// Images or maps whose dimensions do not agree, or are too small.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Unsupported or inconsistent configuration values.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Input with nothing to measure (e.g. no jointly valid pixels).
class DegenerateInputError : public Error {
public:
  using Error::Error;
};

} // namespace ssgm
