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

// Annotation documents stored as RDF/XML instances of the Multimedia
// Ontology vocabulary (prefix `media`). Intra-document links are written as
// absolute `rdf:resource` IRIs of the form "<base>#<id>".

#ifndef ONTOTIER_PERSISTENCE_HPP_
#define ONTOTIER_PERSISTENCE_HPP_

#include <string>
#include <string_view>

#include "ontotier/document.hpp"

namespace ontotier {

inline constexpr std::string_view kMediaNs =
    "http://www.cs.wayne.edu/~yudeng/project/elan3/multimedia.owl#";

struct SerializeOptions {
  std::string media_ns = std::string(kMediaNs);
};

struct ParseOptions {
  // Used when the document does not bind the `media` prefix itself.
  std::string media_ns = std::string(kMediaNs);
  // Used when the document carries neither xml:base nor a document node IRI.
  std::string base_iri;
};

// Throws InvalidDocument (with the first issue) unless validate_document
// reports nothing.
std::string serialize_document(const AnnotationDocument& doc,
                               const std::string& base_iri,
                               const SerializeOptions& options = {});

// Throws MalformedXml, DanglingReference, ConstraintMismatch or
// SchemaViolation. The result is not otherwise validated.
AnnotationDocument parse_document(std::string_view rdf_xml,
                                  const ParseOptions& options = {});

// "file://" IRI for a local path.
std::string file_iri(const std::string& path);

AnnotationDocument load_document_file(const std::string& path);
void save_document_file(const AnnotationDocument& doc, const std::string& path,
                        const std::string& base_iri = {});

}  // namespace ontotier

#endif  // ONTOTIER_PERSISTENCE_HPP_
