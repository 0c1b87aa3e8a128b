//  Copyright 2026 The almonoid Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef ALMONOID_ERRORS_HPP_
#define ALMONOID_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace almonoid {

/// A table entry is outside [0, n) or a table block has the wrong shape.
struct MalformedTableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Claims-DSL or algebra-file syntax error with source position.
struct SyntaxError : std::runtime_error {
  int line = 0;
  int col = 0;
  SyntaxError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_),
        col(col_) {}
};

/// A term variable was not declared in the claim's forall list.
struct UnboundVariableError : SyntaxError {
  UnboundVariableError(const std::string& name, int line_, int col_)
      : SyntaxError("unbound variable '" + name + "'", line_, col_) {}
};

/// A construction or search would exceed a configured size bound.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The given partition is not compatible with every operation.
struct IncompatiblePartitionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The DRl residual a-b does not exist for some pair.
struct NotDRlError : std::runtime_error {
  int a = -1;
  int b = -1;
  NotDRlError(const std::string& msg, int a_, int b_)
      : std::runtime_error(msg), a(a_), b(b_) {}
};

/// An analysis that needs a unity was run on a model without one.
struct NoUnityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The positive cone is not closed under some operation.
struct NotClosedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace almonoid

#endif  // ALMONOID_ERRORS_HPP_
