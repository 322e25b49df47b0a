// Copyright 2026 The typecorpus Authors
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

#ifndef TYPECORPUS_ERRORS_HPP_
#define TYPECORPUS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace typecorpus {

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Manifest loading problems. line_no() is 1-based and 0 when the error is not
// tied to a particular line (e.g. a missing file).
class ManifestError : public std::runtime_error {
 public:
  ManifestError(const std::string& what, std::size_t line_no = 0)
      : std::runtime_error(what), line_no_(line_no) {}
  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

class FetchError : public std::runtime_error {
 public:
  enum class Kind { FetchFailed, CommitNotFound };

  FetchError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class SplitError : public std::invalid_argument {
 public:
  explicit SplitError(const std::string& what) : std::invalid_argument(what) {}
};

class EmitError : public std::runtime_error {
 public:
  explicit EmitError(const std::string& what) : std::runtime_error(what) {}
};

// A record reached serialization without a split label.
class IncompleteRecord : public EmitError {
 public:
  explicit IncompleteRecord(const std::string& what) : EmitError(what) {}
};

class BundleError : public std::runtime_error {
 public:
  explicit BundleError(const std::string& what) : std::runtime_error(what) {}
};

// One of the four bundle inputs is absent; name() says which.
class MissingInput : public BundleError {
 public:
  explicit MissingInput(const std::string& name)
      : BundleError("missing bundle input: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace typecorpus

#endif  // TYPECORPUS_ERRORS_HPP_
