// Copyright 2026 The Hyperpart Authors.
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

#ifndef HYPERPART_ERROR_HPP
#define HYPERPART_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperpart {

enum class ErrorKind {
  kInvalidArgument,
  kIsolatedNode,
  kZeroVolumePart,
  kInfeasibleScale,
  kZeroExpectedDegree,
  kIndivisiblePartition,
  kUnidentifiable,
  kZeroRow,
  kNoConvergence,
  kLengthMismatch,
  kTooFewNodes,
  kParse,
  kIo,
  kSchema,
};

inline std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kIsolatedNode: return "IsolatedNode";
    case ErrorKind::kZeroVolumePart: return "ZeroVolumePart";
    case ErrorKind::kInfeasibleScale: return "InfeasibleScale";
    case ErrorKind::kZeroExpectedDegree: return "ZeroExpectedDegree";
    case ErrorKind::kIndivisiblePartition: return "IndivisiblePartition";
    case ErrorKind::kUnidentifiable: return "Unidentifiable";
    case ErrorKind::kZeroRow: return "ZeroRow";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kTooFewNodes: return "TooFewNodes";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kSchema: return "SchemaError";
  }
  return "Unknown";
}

// Numerical failures map to a different process exit code than data errors.
inline bool IsNumericalError(ErrorKind kind) {
  return kind == ErrorKind::kNoConvergence || kind == ErrorKind::kZeroRow;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void Require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) throw Error(kind, message);
}

}  // namespace hyperpart

#endif  // HYPERPART_ERROR_HPP
