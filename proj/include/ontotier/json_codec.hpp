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

// JSON views of the domain types. Shapes mirror the structs field for field;
// annotation intervals are always resolved.

#ifndef ONTOTIER_JSON_CODEC_HPP_
#define ONTOTIER_JSON_CODEC_HPP_

#include <vector>

#include "json.hpp"
#include "ontotier/document.hpp"
#include "ontotier/ontology.hpp"
#include "ontotier/profile.hpp"
#include "ontotier/search.hpp"

namespace ontotier {

using Json = nlohmann::ordered_json;

Json value_to_json(const AnnotationValue& value);
// Accepts {"text": ...} or {"user_term": ..., ...}.
AnnotationValue value_from_json(const Json& j);

Json annotation_to_json(const AnnotationDocument& doc, const Annotation& a);
Json document_to_json(const AnnotationDocument& doc);

Json hit_to_json(const SearchHit& hit);
Json hits_to_json(const std::vector<SearchHit>& hits);

Json profile_to_json(const Profile& profile);
Profile profile_from_json(const Json& j);

Json term_to_json(const TermDescriptor& term);
Json tree_to_json(const std::vector<TreeNode>& forest);

Json issue_to_json(const Issue& issue);
Json deletion_to_json(const DeletionResult& result);

}  // namespace ontotier

#endif  // ONTOTIER_JSON_CODEC_HPP_
