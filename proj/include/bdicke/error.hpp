// Copyright 2026 The bdicke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BDICKE_ERROR_HPP
#define BDICKE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bdicke {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or malformed input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A numerical routine failed (no convergence, invalid branch, singular data).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bdicke

#endif  // BDICKE_ERROR_HPP
