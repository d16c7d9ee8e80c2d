// Copyright 2026 The cayleymd Authors
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

#include <stdexcept>
#include <string>

namespace cayleymd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two elements (or an element and a group) disagree on the factor list.
class GroupShapeError : public Error {
 public:
  using Error::Error;
};

/// Group order above the configured cap.
class GroupTooLargeError : public Error {
 public:
  using Error::Error;
};

class IdentityInConnectionSetError : public Error {
 public:
  using Error::Error;
};

class NotInverseClosedError : public Error {
 public:
  using Error::Error;
};

class VertexRangeError : public Error {
 public:
  using Error::Error;
};

/// Metric quantities are undefined across components.
class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

class UnreachablePairError : public Error {
 public:
  using Error::Error;
};

/// Raised by the exact matchers when an input is above the desk-scale cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cayleymd
