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

#include "ontotier/error.hpp"

namespace ontotier {

std::string_view error_name(ErrorCode code) {
  switch (code) {
#define ONTOTIER_CASE(x) \
  case ErrorCode::x:     \
    return #x;
    ONTOTIER_CASE(MalformedXml)
    ONTOTIER_CASE(SchemaViolation)
    ONTOTIER_CASE(CyclicHierarchy)
    ONTOTIER_CASE(DanglingReference)
    ONTOTIER_CASE(ConstraintMismatch)
    ONTOTIER_CASE(InvalidDocument)
    ONTOTIER_CASE(NotFound)
    ONTOTIER_CASE(Ambiguous)
    ONTOTIER_CASE(EmptySource)
    ONTOTIER_CASE(DuplicateUserTerm)
    ONTOTIER_CASE(EmptyTargets)
    ONTOTIER_CASE(InvalidUserTerm)
    ONTOTIER_CASE(DuplicateTier)
    ONTOTIER_CASE(DuplicateLinguisticType)
    ONTOTIER_CASE(InvalidLinguisticType)
    ONTOTIER_CASE(UnknownLinguisticType)
    ONTOTIER_CASE(RootMustBeAlignable)
    ONTOTIER_CASE(ParentForbidden)
    ONTOTIER_CASE(ProfileRequired)
    ONTOTIER_CASE(ProfileForbidden)
    ONTOTIER_CASE(ProfileAlreadyBound)
    ONTOTIER_CASE(UnknownParent)
    ONTOTIER_CASE(UnknownTier)
    ONTOTIER_CASE(CycleDetected)
    ONTOTIER_CASE(InvalidId)
    ONTOTIER_CASE(IdInUse)
    ONTOTIER_CASE(NegativeTime)
    ONTOTIER_CASE(UnknownSlot)
    ONTOTIER_CASE(WouldInvertInterval)
    ONTOTIER_CASE(WouldEscapeParent)
    ONTOTIER_CASE(WouldOverlapSibling)
    ONTOTIER_CASE(NotAlignableTier)
    ONTOTIER_CASE(NotReferringTier)
    ONTOTIER_CASE(InvertedInterval)
    ONTOTIER_CASE(OutsideParentSlot)
    ONTOTIER_CASE(OverlapsSibling)
    ONTOTIER_CASE(AmbiguousParentAnnotation)
    ONTOTIER_CASE(ParentOnWrongTier)
    ONTOTIER_CASE(AssociationAlreadyFilled)
    ONTOTIER_CASE(UnknownParentAnnotation)
    ONTOTIER_CASE(UnknownAnnotation)
    ONTOTIER_CASE(InvalidOrdinal)
    ONTOTIER_CASE(ValueKindMismatch)
    ONTOTIER_CASE(NotOntologicalTier)
    ONTOTIER_CASE(UnknownUserTerm)
    ONTOTIER_CASE(UnresolvedTerm)
    ONTOTIER_CASE(MissingInstanceName)
    ONTOTIER_CASE(MissingPropertyFills)
    ONTOTIER_CASE(DuplicateInstance)
#undef ONTOTIER_CASE
  }
  return "Unknown";
}

}  // namespace ontotier
