// Copyright 2026 The mibs Authors
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

#ifndef MIBS_ERROR_HPP
#define MIBS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mibs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed cycle notation, generator files or certificate JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource limit would be exceeded. The computation refuses
/// rather than returning a truncated answer.
class LimitExceeded : public Error {
 public:
  LimitExceeded(std::string limit, const std::string &what)
      : Error(what), limit_(std::move(limit)) {}

  const std::string &limit() const noexcept { return limit_; }

 private:
  std::string limit_;
};

}  // namespace mibs

#endif  // MIBS_ERROR_HPP
