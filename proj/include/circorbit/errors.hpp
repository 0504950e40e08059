// Copyright 2026 The circorbit Authors.
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

#ifndef CIRCORBIT_ERRORS_HPP_
#define CIRCORBIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace circorbit {

// Root of every exception thrown by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (bad step sizes, zero lengths, k > l).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Graph parameters violating 0 < a < b < n.
class RejectedParameters : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Counting and lattice operations require gcd(n, a, b) = 1.
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class NotLatticePoint : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// The step sequence does not return to its start vertex.
class DoesNotClose : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Broken exactness invariant. Seeing one of these is a bug.
class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

}  // namespace circorbit

#endif  // CIRCORBIT_ERRORS_HPP_
