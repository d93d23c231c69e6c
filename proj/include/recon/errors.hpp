// Copyright 2026 The sweeprecon Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace recon {

// Base class for every failure the pipeline can report. The CLI maps
// subclasses onto its exit-code taxonomy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// No usable foreground found; the terminal segmentation failure.
class EmptyMask : public Error {
 public:
  using Error::Error;
};

// Fewer than two rows could be traced below the top plane.
class ProfileTooShort : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class InvalidAxes : public Error {
 public:
  using Error::Error;
};

class InvalidK : public Error {
 public:
  using Error::Error;
};

class InvalidRatio : public Error {
 public:
  using Error::Error;
};

class DegeneratePolygon : public Error {
 public:
  using Error::Error;
};

class DegenerateRing : public Error {
 public:
  using Error::Error;
};

class EmptyProfile : public Error {
 public:
  using Error::Error;
};

class ZeroAreaAccumulation : public Error {
 public:
  using Error::Error;
};

class NoOverlap : public Error {
 public:
  using Error::Error;
};

class OutOfBounds : public Error {
 public:
  using Error::Error;
};

// Carries the 1-based line number of the offending statement.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace recon
