/*
   Copyright 2026 The wittlink authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WITTLINK_ERRORS_HPP
#define WITTLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wittlink {

/* Every rejected precondition in the library throws WittError with one of
   these codes.  The code is stable API; the message text is not. */
enum class ErrorCode {
  EvenVerschiebungOnMinusRing,
  NotInSubring,
  NotSelfConjugate,
  DenominatorTooLarge,
  NotLengthOne,
  BadRing,
  ExponentTooHigh,
  NotASubmodule,
  QuotientNotLengthOne,
  Singular,
  SymmetryViolated,
  QuadraticIncompatible,
  BadTemplateParams,
  RingMismatch,
  NotSubLagrangian,
  BadEvaluationPoint,
  SearchSpaceTooLarge,
  Unsupported,
  ModuleTooLarge,
  NoCandidateMatch,
  NotEvenType,
  NotSymplectic,
  BadDomain,
  NotReducedClass,
  NotInKernelOfQ,
  ObstructionNonzero,
  BadSignOrder,
  ParseError,
  InternalError,
};

const char* error_name(ErrorCode code);

class WittError : public std::runtime_error {
 public:
  WittError(ErrorCode code, const std::string& message,
            std::string detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }

  /* Machine-readable payload, when the error carries one.  ObstructionNonzero
     stores the printed obstruction value here. */
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace wittlink

#endif  // WITTLINK_ERRORS_HPP
