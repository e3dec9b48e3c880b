// Copyright 2026 The qgraph Authors
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

#ifndef QGRAPH_ERRORS_HPP_
#define QGRAPH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qgraph {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument does not hold (bad vertex, not a tree, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed graph6 or edge-list text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The input lies outside every class the decision procedures cover.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A configured size or work budget would be exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Signals a bug or a bad tolerance.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgraph

#endif  // QGRAPH_ERRORS_HPP_
