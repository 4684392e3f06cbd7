// Copyright 2026 The ambistl Authors.
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

namespace ambistl {

enum class ErrorKind {
  kInvalidArgument,
  kSyntax,            // malformed lexicon, category, template or formula text
  kEmptyInput,        // empty sentence, lexicon, trajectory
  kCoverage,          // token without a lexical entry
  kNoParse,           // no S over the whole sentence
  kIllTyped,          // beta reduction budget exhausted
  kUnknownAtom,       // proposition without a region
  kHorizonExceeded,   // evaluation window falls off the trajectory
  kNoCandidates,      // every meaning was discarded
  kIo,
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kSyntax: return "syntax-error";
    case ErrorKind::kEmptyInput: return "empty-input";
    case ErrorKind::kCoverage: return "coverage-error";
    case ErrorKind::kNoParse: return "no-parse";
    case ErrorKind::kIllTyped: return "ill-typed-template";
    case ErrorKind::kUnknownAtom: return "unknown-atom";
    case ErrorKind::kHorizonExceeded: return "horizon-exceeded";
    case ErrorKind::kNoCandidates: return "no-candidates";
    case ErrorKind::kIo: return "io-error";
  }
  return "error";
}

// All library failures are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ambistl
