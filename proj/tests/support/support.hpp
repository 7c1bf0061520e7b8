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

// Fixtures, generators and oracles shared by the unit and acceptance tests.
// Oracles deliberately avoid the library's own traversal helpers.

#ifndef ONTOTIER_TESTS_SUPPORT_HPP_
#define ONTOTIER_TESTS_SUPPORT_HPP_

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ontotier/document.hpp"
#include "ontotier/error.hpp"
#include "ontotier/ontology.hpp"
#include "ontotier/profile.hpp"
#include "ontotier/search.hpp"

namespace ontotier::testing {

inline constexpr const char* kGoldIri = "http://www.u.arizona.edu/~farrar/gold.owl";
inline constexpr const char* kWaboBase = "file:///C:/wabo4.eaf";
inline constexpr const char* kWaboProfileRef = "C:\\wabo4.prf";

// Name of the ontotier::Error `f` throws, or "" if it returns normally.
template <typename F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return std::string(e.name());
  }
  return {};
}

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);

const Ontology& gold();
const Profile& wabo_profile();

// The six-tier Potawatomi example: Orthographic > {Translation, Words >
// Parse > Gloss > Ontology}. Gloss "PAST" is a31; its ontology annotation
// a42 carries PV.
AnnotationDocument build_wabo4();

// ---------------------------------------------------------------------------
// Generators

struct DocShape {
  int max_tiers = 8;
  int max_root_annotations = 4;
  int max_children = 3;
  double untimed = 0.3;
  bool ontological_tier = true;
};

// A valid document built only through the public mutators.
AnnotationDocument random_document(std::mt19937_64& rng, const DocShape& shape = {});

struct RandomOntology {
  std::string xml;
  std::string base;
  int classes = 0;
  int individuals = 0;
};

// RDF/XML with random acyclic subclass edges, mixing the syntactic forms the
// loader accepts.
RandomOntology random_ontology_xml(std::mt19937_64& rng, int classes, int individuals);

// ---------------------------------------------------------------------------
// Oracles

// IRI -> parent IRIs, from a single regex pass over the raw tags.
std::map<std::string, std::set<std::string>> naive_parent_map(const std::string& xml,
                                                              const std::string& base);

std::set<std::string> tier_closure(const DocumentData& d, const std::string& tier);
// Annotations removed by deleting `tiers`.
std::set<std::string> annotations_on_tiers(const DocumentData& d, const std::set<std::string>& tiers);
// Fixed point of "depends on something already in the set".
std::set<std::string> annotation_closure(const DocumentData& d, const std::string& root);
// Slots used by `removed` annotations that no surviving annotation uses.
std::set<std::string> orphaned_slots(const DocumentData& d, const std::set<std::string>& removed);

// Follows references one hop at a time.
std::optional<Interval> walk_alignment(const DocumentData& d, const std::string& annotation);

std::vector<SearchHit> scan_text(const DocumentData& d, const TextQuery& q);
// With an ontology, expands a class term by a fixed point over raw parent
// sets.
std::vector<SearchHit> scan_term(const DocumentData& d, const std::string& term,
                                 const Ontology* ontology = nullptr);

}  // namespace ontotier::testing

#endif  // ONTOTIER_TESTS_SUPPORT_HPP_
