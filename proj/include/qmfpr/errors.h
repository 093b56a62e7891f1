// Copyright 2026 The qmfpr Authors
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

#ifndef QMFPR_ERRORS_H_
#define QMFPR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qmfpr {

// Base for design/certification failures. Invalid arguments are reported as
// std::invalid_argument instead.
class DesignError : public std::runtime_error {
 public:
  DesignError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  // Stable error name, e.g. "SingularSystem".
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Zero pivot while solving for the high-pass mate.
class SingularSystem : public DesignError {
 public:
  explicit SingularSystem(const std::string& what)
      : DesignError("SingularSystem", what) {}
};

// High-pass mate has (numerically) no gain at pi.
class DegeneratePassband : public DesignError {
 public:
  explicit DegeneratePassband(const std::string& what)
      : DesignError("DegeneratePassband", what) {}
};

// Zero-forcing system for the refinement polynomial is singular.
class SingularRefinement : public DesignError {
 public:
  explicit SingularRefinement(const std::string& what)
      : DesignError("SingularRefinement", what) {}
};

// T(z) vanishes: the pair does not reconstruct anything.
class NoDelayFound : public DesignError {
 public:
  explicit NoDelayFound(const std::string& what)
      : DesignError("NoDelayFound", what) {}
};

}  // namespace qmfpr

#endif  // QMFPR_ERRORS_H_
