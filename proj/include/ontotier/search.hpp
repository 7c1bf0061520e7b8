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

#ifndef ONTOTIER_SEARCH_HPP_
#define ONTOTIER_SEARCH_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontotier/document.hpp"

namespace ontotier {

class Ontology;

struct SearchHit {
  std::string annotation;
  std::string tier;
  // Annotation text, or the user-defined term for ontological values.
  std::string value;
  std::optional<Interval> interval;

  bool operator==(const SearchHit&) const = default;
};

struct TextQuery {
  std::string text;
  bool case_sensitive = true;
  // Empty means every tier.
  std::set<std::string> tiers;
};

// Hits are ordered by tier id, then slot position, then ordinal, then id.
std::vector<SearchHit> search_text(const AnnotationDocument& doc,
                                   const TextQuery& query);

struct TermQuery {
  // An instance/term IRI, or a user-defined term name.
  std::string term;
  // With an ontology, a class IRI also matches instances of its subclasses.
  const Ontology* ontology = nullptr;
  bool expand_subclasses = false;
};

std::vector<SearchHit> search_term(const AnnotationDocument& doc,
                                   const TermQuery& query);

}  // namespace ontotier

#endif  // ONTOTIER_SEARCH_HPP_
