// Copyright 2026 The unpop Authors
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

#ifndef UNPOP_ERRORS_H_
#define UNPOP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace unpop {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file or document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input violates a structural precondition (bad ids, empty curve, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The arrangement is not simple: a triple point, an overlap, a tangency or a
// near-coincidence closer than the configured tolerance.
class SimplicityViolation : public Error {
 public:
  using Error::Error;
};

// An open curve does not start and end on the frame boundary.
class EndpointError : public Error {
 public:
  using Error::Error;
};

// Some popular face admits no passage at all.
class Infeasible : public Error {
 public:
  Infeasible(int face, const std::string& what) : Error(what), face_(face) {}
  int face() const { return face_; }

 private:
  int face_;
};

// Geometric routing of a curve failed.
class EmbedError : public Error {
 public:
  using Error::Error;
};

// Solution recovery used up its re-randomization budget.
class RetryExhausted : public Error {
 public:
  using Error::Error;
};

// An exhaustive oracle was called on an instance above its size guard.
class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace unpop

#endif  // UNPOP_ERRORS_H_
