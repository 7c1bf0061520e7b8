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

// Minimal namespace-aware XML tree on top of expat, plus a small writer.
// Element and attribute names are kept as (namespace IRI, local name) pairs.

#ifndef ONTOTIER_XML_HPP_
#define ONTOTIER_XML_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ontotier::xml {

inline constexpr std::string_view kXmlNs = "http://www.w3.org/XML/1998/namespace";

struct Attribute {
  std::string ns;
  std::string local;
  std::string value;
};

struct Element {
  std::string ns;
  std::string local;
  std::vector<Attribute> attributes;
  std::vector<Element> children;
  // Concatenated character data directly inside this element.
  std::string text;
  // Namespace declarations made on this element, as (prefix, iri).
  std::vector<std::pair<std::string, std::string>> namespace_decls;
  long line = 0;

  bool is(std::string_view ns_iri, std::string_view name) const {
    return ns == ns_iri && local == name;
  }
  const std::string* attribute(std::string_view ns_iri,
                               std::string_view name) const;
  // Unqualified attribute lookup (no namespace).
  const std::string* attribute(std::string_view name) const {
    return attribute("", name);
  }
};

// Throws Error{MalformedXml} with the expat message and line on failure.
Element parse(std::string_view bytes);

std::string escape_text(std::string_view s);
std::string escape_attribute(std::string_view s);

// Streaming writer producing indented UTF-8 output. Names are written exactly
// as given, so callers pass qualified names such as "media:Tier".
class Writer {
 public:
  Writer();

  void open(std::string_view name,
            const std::vector<std::pair<std::string, std::string>>& attrs = {});
  void close();
  void empty(std::string_view name,
             const std::vector<std::pair<std::string, std::string>>& attrs = {});
  // <name attrs>text</name> on one line.
  void leaf(std::string_view name, std::string_view text,
            const std::vector<std::pair<std::string, std::string>>& attrs = {});

  std::string finish();

 private:
  void indent();
  void start_tag(std::string_view name,
                 const std::vector<std::pair<std::string, std::string>>& attrs);

  std::string out_;
  std::vector<std::string> stack_;
};

}  // namespace ontotier::xml

#endif  // ONTOTIER_XML_HPP_
