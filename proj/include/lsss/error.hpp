// Copyright 2026 The lsss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace lsss {

enum class Errc {
  // grids and solvers
  InvalidGrid,
  InvalidOrder,
  InvalidPartial,
  InvalidRectangle,
  OrderTooLarge,
  NoCompletion,
  Contradiction,
  NotUnique,
  Inconsistent,
  // packing
  CorruptPacking,
  NotRecoverable,
  // hashing
  InvalidDigestBits,
  BudgetExceeded,
  DuplicateLeaf,
  InvalidLeafCount,
  IndexOutOfRange,
  UnalignedPrefix,
  // sharing schemes
  InvalidThreshold,
  EmptyAccessStructure,
  NotAuthorized,
  NotACriticalSet,
  WrongSquare,
  IncompleteAssignment,
  InvalidParticipants,
  LengthMismatch,
  CommitmentsAbsent,
  // persistence
  SchemaViolation,
  IoError,
};

constexpr const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidGrid: return "InvalidGrid";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::InvalidPartial: return "InvalidPartial";
    case Errc::InvalidRectangle: return "InvalidRectangle";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::NoCompletion: return "NoCompletion";
    case Errc::Contradiction: return "Contradiction";
    case Errc::NotUnique: return "NotUnique";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::CorruptPacking: return "CorruptPacking";
    case Errc::NotRecoverable: return "NotRecoverable";
    case Errc::InvalidDigestBits: return "InvalidDigestBits";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DuplicateLeaf: return "DuplicateLeaf";
    case Errc::InvalidLeafCount: return "InvalidLeafCount";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UnalignedPrefix: return "UnalignedPrefix";
    case Errc::InvalidThreshold: return "InvalidThreshold";
    case Errc::EmptyAccessStructure: return "EmptyAccessStructure";
    case Errc::NotAuthorized: return "NotAuthorized";
    case Errc::NotACriticalSet: return "NotACriticalSet";
    case Errc::WrongSquare: return "WrongSquare";
    case Errc::IncompleteAssignment: return "IncompleteAssignment";
    case Errc::InvalidParticipants: return "InvalidParticipants";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::CommitmentsAbsent: return "CommitmentsAbsent";
    case Errc::SchemaViolation: return "SchemaViolation";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace lsss
