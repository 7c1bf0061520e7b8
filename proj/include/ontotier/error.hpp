// Copyright 2026 The ontotier Authors.
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

#ifndef ONTOTIER_ERROR_HPP_
#define ONTOTIER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ontotier {

// Every domain failure the library reports. The enumerator names are part of
// the wire contract: the HTTP service returns them verbatim.
enum class ErrorCode {
  // Parsing and schemas.
  MalformedXml,
  SchemaViolation,
  CyclicHierarchy,
  DanglingReference,
  ConstraintMismatch,
  InvalidDocument,
  // Lookups.
  NotFound,
  Ambiguous,
  // Profiles.
  EmptySource,
  DuplicateUserTerm,
  EmptyTargets,
  InvalidUserTerm,
  // Tiers and types.
  DuplicateTier,
  DuplicateLinguisticType,
  InvalidLinguisticType,
  UnknownLinguisticType,
  RootMustBeAlignable,
  ParentForbidden,
  ProfileRequired,
  ProfileForbidden,
  ProfileAlreadyBound,
  UnknownParent,
  UnknownTier,
  CycleDetected,
  InvalidId,
  IdInUse,
  // Time slots.
  NegativeTime,
  UnknownSlot,
  WouldInvertInterval,
  WouldEscapeParent,
  WouldOverlapSibling,
  // Annotations.
  NotAlignableTier,
  NotReferringTier,
  InvertedInterval,
  OutsideParentSlot,
  OverlapsSibling,
  AmbiguousParentAnnotation,
  ParentOnWrongTier,
  AssociationAlreadyFilled,
  UnknownParentAnnotation,
  UnknownAnnotation,
  InvalidOrdinal,
  ValueKindMismatch,
  // Ontological values.
  NotOntologicalTier,
  UnknownUserTerm,
  UnresolvedTerm,
  MissingInstanceName,
  MissingPropertyFills,
  DuplicateInstance,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> details)
      : std::runtime_error(message), code_(code), details_(std::move(details)) {}

  ErrorCode code() const { return code_; }
  std::string_view name() const { return error_name(code_); }

  // Supplementary identifiers: ambiguity candidates, cycle members.
  const std::vector<std::string>& details() const { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::string> details_;
};

}  // namespace ontotier

#endif  // ONTOTIER_ERROR_HPP_
