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

#ifndef ONTOTIER_ONTOLOGY_HPP_
#define ONTOTIER_ONTOLOGY_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontotier {

inline constexpr std::string_view kRdfNs =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs =
    "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";

// An absolute IRI naming an ontology term. The local name is whatever follows
// the last '#', or failing that the last '/' or ':'.
class TermIRI {
 public:
  // Throws Error{InvalidId} unless `value` is absolute with a local name.
  explicit TermIRI(std::string value);

  static bool is_valid(std::string_view value);

  const std::string& str() const { return value_; }
  std::string_view namespace_part() const;
  std::string_view local_name() const;

  auto operator<=>(const TermIRI&) const = default;

 private:
  std::string value_;
};

// Local-name split shared by TermIRI and callers holding raw strings.
std::string_view iri_local_name(std::string_view iri);
std::string_view iri_namespace(std::string_view iri);

enum class TermKind { Class, Individual };

struct TermDescriptor {
  std::string iri;
  TermKind kind = TermKind::Class;
  std::string label;
  // Syntactic presence of an owl:Restriction in the class description.
  bool has_restrictions = false;
  // subClassOf targets for classes, rdf:type targets for individuals.
  std::set<std::string> parents;

  bool operator==(const TermDescriptor&) const = default;
};

struct TreeNode {
  std::string iri;
  // False for parents referenced but not declared in the document.
  bool resolved = true;
  std::vector<TreeNode> children;

  bool operator==(const TreeNode&) const = default;
};

// Immutable after load; safe to share between threads.
class Ontology {
 public:
  Ontology() = default;

  const std::string& source_iri() const { return source_iri_; }
  const std::map<std::string, TermDescriptor>& terms() const { return terms_; }
  // Declared terms with no parent at all.
  const std::set<std::string>& roots() const { return roots_; }
  // Parent IRIs that are referenced but not declared in the document.
  const std::set<std::string>& external_refs() const { return external_; }

  const TermDescriptor* find(std::string_view iri) const;

  // Every term, ordered by case-insensitive label then IRI.
  std::vector<TermDescriptor> list_terms() const;

  // Forest of subclass/type edges. A node with k parents appears k times;
  // undeclared parents show up as unresolved roots.
  std::vector<TreeNode> term_tree() const;

  // Exact IRI match, else unique local-name match. Throws NotFound, or
  // Ambiguous with every candidate IRI in details().
  const TermDescriptor& resolve_term(std::string_view name) const;

  // IRIs of every class strictly below `iri`, plus `iri` itself.
  std::set<std::string> descendant_classes(std::string_view iri) const;

  bool operator==(const Ontology& o) const {
    return source_iri_ == o.source_iri_ && terms_ == o.terms_;
  }

 private:
  friend Ontology build_ontology(std::string source_iri,
                                 std::map<std::string, TermDescriptor> terms);

  std::string source_iri_;
  std::map<std::string, TermDescriptor> terms_;
  std::set<std::string> roots_;
  std::set<std::string> external_;
  std::map<std::string, std::vector<std::string>> by_local_name_;
  std::map<std::string, std::vector<std::string>> children_;
};

// Validates the class hierarchy and builds the derived indexes. Throws
// CyclicHierarchy naming the IRIs on a cycle.
Ontology build_ontology(std::string source_iri,
                        std::map<std::string, TermDescriptor> terms);

struct LoadOptions {
  // Used to resolve rdf:ID and relative IRIs when the document carries no
  // xml:base and no owl:Ontology node.
  std::string base_iri;
};

// Parses an OWL ontology in RDF/XML. Only class declarations, subClassOf,
// named individuals and their types, labels and the presence of restrictions
// are interpreted; everything else is skipped.
Ontology load_ontology(std::string_view rdf_xml, const LoadOptions& options = {});
Ontology load_ontology_file(const std::string& path);

}  // namespace ontotier

#endif  // ONTOTIER_ONTOLOGY_HPP_
