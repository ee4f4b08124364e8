// Copyright 2026 The qlgasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLGASIM_ERRORS_HPP
#define QLGASIM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace qlgasim {

/// Base class for every error the library throws deliberately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A label map handed to permute() sent two support labels to the same image.
class LabelCollisionError : public Error {
 public:
  using Error::Error;
};

/// A scatter classifier produced an out-of-range or duplicate local index.
class ClassifierError : public Error {
 public:
  using Error::Error;
};

/// A configuration state carries more probability mass outside the embedding
/// image than the caller allows.
class SectorLeakageError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read, written, or atomically replaced.
class IoError : public Error {
 public:
  using Error::Error;
};

/// An experiment configuration was rejected.  Always names the field.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& reason)
      : Error("config field '" + field + "': " + reason), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace qlgasim

#endif
