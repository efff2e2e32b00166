// Copyright 2026 The parqubo authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

/// @file error.hpp
/// @brief Exception hierarchy shared by every parqubo component.

#ifndef PARQUBO_ERROR_HPP
#define PARQUBO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace parqubo {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller handed us an argument that violates a documented precondition
/// (bad dimension, out-of-range index, malformed structure, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but exceeds a hard resource limit, e.g. an
/// exhaustive solve beyond the exact backend's dimension cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Configuration (CLI flags or config file) could not be interpreted.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// The remote sampler could not be reached at the transport level.
class TransportError : public Error {
 public:
  using Error::Error;
};

/// The remote sampler answered, but with a payload that does not follow
/// the sampling protocol.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace parqubo

#endif  // PARQUBO_ERROR_HPP
