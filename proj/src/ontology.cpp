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

#include "ontotier/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "ontotier/error.hpp"
#include "ontotier/xml.hpp"

namespace ontotier {

// ---------------------------------------------------------------------------
// IRIs

namespace {

bool has_scheme(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
    return false;
  for (size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (c == ':') return i + 1 < s.size();
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
        c != '.')
      return false;
  }
  return false;
}

size_t local_split(std::string_view iri) {
  auto pos = iri.rfind('#');
  if (pos == std::string_view::npos) pos = iri.rfind('/');
  if (pos == std::string_view::npos) pos = iri.rfind(':');
  return pos == std::string_view::npos ? 0 : pos + 1;
}

}  // namespace

std::string_view iri_local_name(std::string_view iri) {
  return iri.substr(local_split(iri));
}

std::string_view iri_namespace(std::string_view iri) {
  return iri.substr(0, local_split(iri));
}

bool TermIRI::is_valid(std::string_view value) {
  return has_scheme(value) && !iri_local_name(value).empty();
}

TermIRI::TermIRI(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_))
    throw Error(ErrorCode::InvalidId, "not an absolute term IRI: " + value_);
}

std::string_view TermIRI::namespace_part() const { return iri_namespace(value_); }
std::string_view TermIRI::local_name() const { return iri_local_name(value_); }

// ---------------------------------------------------------------------------
// Ontology views

namespace {

std::string fold(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool label_less(const TermDescriptor& a, const TermDescriptor& b) {
  auto fa = fold(a.label), fb = fold(b.label);
  if (fa != fb) return fa < fb;
  return a.iri < b.iri;
}

}  // namespace

const TermDescriptor* Ontology::find(std::string_view iri) const {
  auto it = terms_.find(std::string(iri));
  return it == terms_.end() ? nullptr : &it->second;
}

std::vector<TermDescriptor> Ontology::list_terms() const {
  std::vector<TermDescriptor> out;
  out.reserve(terms_.size());
  for (const auto& [_, d] : terms_) out.push_back(d);
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

std::vector<TreeNode> Ontology::term_tree() const {
  std::function<TreeNode(const std::string&, bool)> build =
      [&](const std::string& iri, bool resolved) {
        TreeNode node{iri, resolved, {}};
        if (auto it = children_.find(iri); it != children_.end())
          for (const auto& child : it->second)
            node.children.push_back(build(child, true));
        return node;
      };
  std::vector<TreeNode> forest;
  for (const auto& d : list_terms())
    if (roots_.count(d.iri)) forest.push_back(build(d.iri, true));
  for (const auto& ext : external_) forest.push_back(build(ext, false));
  return forest;
}

const TermDescriptor& Ontology::resolve_term(std::string_view name) const {
  if (auto* d = find(name)) return *d;
  auto it = by_local_name_.find(std::string(name));
  if (it == by_local_name_.end() || it->second.empty())
    throw Error(ErrorCode::NotFound, "term not found: " + std::string(name));
  if (it->second.size() > 1) {
    std::string msg = "term '" + std::string(name) + "' is ambiguous:";
    for (const auto& c : it->second) msg += " " + c;
    throw Error(ErrorCode::Ambiguous, msg, it->second);
  }
  return terms_.at(it->second.front());
}

std::set<std::string> Ontology::descendant_classes(std::string_view iri) const {
  std::set<std::string> seen{std::string(iri)};
  std::deque<std::string> queue{std::string(iri)};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    auto it = children_.find(cur);
    if (it == children_.end()) continue;
    for (const auto& child : it->second) {
      const auto* d = find(child);
      if (d && d->kind == TermKind::Class && seen.insert(child).second)
        queue.push_back(child);
    }
  }
  return seen;
}

Ontology build_ontology(std::string source_iri,
                        std::map<std::string, TermDescriptor> terms) {
  for (auto& [iri, d] : terms) {
    d.parents.erase(iri);
    if (d.kind == TermKind::Individual) d.has_restrictions = false;
    if (d.label.empty()) d.label = std::string(iri_local_name(iri));
  }

  // Kahn's algorithm over declared edges; leftovers sit on or behind a cycle.
  std::map<std::string, int> indegree;
  std::map<std::string, std::vector<std::string>> down;
  for (const auto& [iri, d] : terms) {
    indegree.try_emplace(iri, 0);
    for (const auto& p : d.parents) {
      if (!terms.count(p)) continue;
      ++indegree[iri];
      down[p].push_back(iri);
    }
  }
  std::deque<std::string> ready;
  for (const auto& [iri, n] : indegree)
    if (n == 0) ready.push_back(iri);
  size_t visited = 0;
  while (!ready.empty()) {
    auto cur = std::move(ready.front());
    ready.pop_front();
    ++visited;
    for (const auto& c : down[cur])
      if (--indegree[c] == 0) ready.push_back(c);
  }
  if (visited != terms.size()) {
    // Walk parent links among the unvisited nodes until one repeats.
    std::string start;
    for (const auto& [iri, n] : indegree)
      if (n > 0) { start = iri; break; }
    std::vector<std::string> path;
    std::map<std::string, size_t> pos;
    std::string cur = start;
    while (!pos.count(cur)) {
      pos[cur] = path.size();
      path.push_back(cur);
      for (const auto& p : terms.at(cur).parents)
        if (indegree.count(p) && indegree[p] > 0) { cur = p; break; }
    }
    std::vector<std::string> cycle(path.begin() + static_cast<long>(pos[cur]),
                                   path.end());
    std::string msg = "subclass cycle:";
    for (const auto& c : cycle) msg += " " + c;
    throw Error(ErrorCode::CyclicHierarchy, msg, cycle);
  }

  Ontology o;
  o.source_iri_ = std::move(source_iri);
  o.terms_ = std::move(terms);
  for (const auto& [iri, d] : o.terms_) {
    o.by_local_name_[std::string(iri_local_name(iri))].push_back(iri);
    if (d.parents.empty()) o.roots_.insert(iri);
    for (const auto& p : d.parents) {
      if (!o.terms_.count(p)) o.external_.insert(p);
      o.children_[p].push_back(iri);
    }
  }
  for (auto& [_, kids] : o.children_)
    std::sort(kids.begin(), kids.end(), [&](const auto& a, const auto& b) {
      return label_less(o.terms_.at(a), o.terms_.at(b));
    });
  return o;
}

// ---------------------------------------------------------------------------
// RDF/XML loading

namespace {

const std::string kRdf(kRdfNs);
const std::string kRdfs(kRdfsNs);
const std::string kOwl(kOwlNs);

bool is_schema_vocabulary(const xml::Element& el) {
  static const std::set<std::string> skipped = {
      "Ontology", "ObjectProperty", "DatatypeProperty", "AnnotationProperty",
      "FunctionalProperty", "InverseFunctionalProperty", "TransitiveProperty",
      "SymmetricProperty", "OntologyProperty", "AllDifferent", "DataRange",
      "DeprecatedProperty", "AllDisjointClasses", "AllDisjointProperties",
      "NegativePropertyAssertion", "Axiom", "Restriction"};
  if (el.ns == kOwl) return skipped.count(el.local) > 0;
  if (el.ns == kRdf) return el.local == "Property" || el.local == "List";
  if (el.ns == kRdfs) return el.local == "Datatype" || el.local == "ContainerMembershipProperty";
  return false;
}

bool contains_restriction(const xml::Element& el) {
  if (el.is(kOwl, "Restriction")) return true;
  return std::any_of(el.children.begin(), el.children.end(), contains_restriction);
}

class Loader {
 public:
  explicit Loader(const LoadOptions& options) : options_(options) {}

  Ontology run(std::string_view bytes) {
    xml::Element root = xml::parse(bytes);
    base_ = options_.base_iri;
    if (auto* b = root.attribute(xml::kXmlNs, "base")) base_ = *b;
    if (base_.empty()) {
      for (const auto& child : root.children)
        if (child.is(kOwl, "Ontology"))
          if (auto* about = child.attribute(kRdf, "about"); about && has_scheme(*about))
            base_ = *about;
    }
    while (!base_.empty() && base_.back() == '#') base_.pop_back();

    if (root.is(kRdf, "RDF")) {
      for (const auto& child : root.children) node(child);
    } else {
      node(root);
    }

    // Facts stated on untyped rdf:Description nodes.
    for (auto& [iri, fact] : loose_) {
      auto it = terms_.find(iri);
      if (it == terms_.end()) {
        if (fact.parents.empty() && !fact.has_restrictions) continue;
        fact.kind = TermKind::Class;
        terms_[iri] = fact;
        continue;
      }
      auto& d = it->second;
      if (d.label.empty()) d.label = fact.label;
      if (d.kind == TermKind::Class) {
        d.parents.insert(fact.parents.begin(), fact.parents.end());
        d.has_restrictions = d.has_restrictions || fact.has_restrictions;
      }
    }
    return build_ontology(base_, std::move(terms_));
  }

 private:
  std::string resolve(const std::string& ref) const {
    if (has_scheme(ref)) return ref;
    if (ref.empty()) return base_;
    if (ref[0] == '#') return base_ + ref;
    auto slash = base_.rfind('/');
    return (slash == std::string::npos ? base_ + "/" : base_.substr(0, slash + 1)) + ref;
  }

  std::optional<std::string> subject(const xml::Element& el) const {
    if (auto* about = el.attribute(kRdf, "about")) return resolve(*about);
    if (auto* id = el.attribute(kRdf, "ID")) return base_ + "#" + *id;
    return std::nullopt;
  }

  std::optional<std::string> resource(const xml::Element& prop) const {
    if (auto* r = prop.attribute(kRdf, "resource")) return resolve(*r);
    return std::nullopt;
  }

  static bool is_thing(const std::string& iri) {
    return iri == kOwl + "Thing" || iri == kRdfs + "Resource";
  }

  TermDescriptor& declare(const std::string& iri, TermKind kind) {
    auto [it, inserted] = terms_.try_emplace(iri);
    auto& d = it->second;
    if (inserted) {
      d.iri = iri;
      d.kind = kind;
    } else if (kind == TermKind::Class && d.kind == TermKind::Individual) {
      // Punned IRIs are treated as classes; type edges no longer apply.
      d.kind = TermKind::Class;
      d.parents.clear();
    }
    return d;
  }

  void take_label(TermDescriptor& d, const xml::Element& prop) {
    if (d.label.empty()) d.label = prop.text;
  }

  // Parses a node element; returns its subject IRI when it has one.
  std::optional<std::string> node(const xml::Element& el) {
    if (is_schema_vocabulary(el)) return subject(el);
    auto iri = subject(el);

    if (el.is(kOwl, "Class") || el.is(kRdfs, "Class")) {
      if (!iri) return std::nullopt;  // anonymous class expression
      class_body(declare(*iri, TermKind::Class), el);
      return iri;
    }
    if (el.is(kRdf, "Description")) {
      if (!iri) return std::nullopt;
      std::vector<std::string> types;
      for (const auto& p : el.children)
        if (p.is(kRdf, "type"))
          if (auto r = resource(p)) types.push_back(*r);
      bool is_class = std::any_of(types.begin(), types.end(), [](const auto& t) {
        return t == kOwl + "Class" || t == kRdfs + "Class";
      });
      bool skip = std::any_of(types.begin(), types.end(), [](const auto& t) {
        return t.rfind(kOwl, 0) == 0 && t != kOwl + "Class" &&
               t != kOwl + "NamedIndividual" && t != kOwl + "Thing";
      });
      if (is_class) {
        class_body(declare(*iri, TermKind::Class), el);
      } else if (skip) {
        return iri;
      } else if (types.empty()) {
        class_body(loose(*iri), el);
      } else {
        individual_body(*iri, el, std::nullopt);
      }
      return iri;
    }
    if (el.is(kOwl, "NamedIndividual") || el.is(kOwl, "Thing")) {
      if (iri) individual_body(*iri, el, std::nullopt);
      return iri;
    }
    if (el.ns == kOwl || el.ns == kRdf || el.ns == kRdfs) return iri;
    // Typed node element: an individual of the element's class.
    if (iri) individual_body(*iri, el, el.ns + el.local);
    return iri;
  }

  void class_body(TermDescriptor& d, const xml::Element& el) {
    // `d` may be a reference into terms_; re-find after recursion.
    const std::string iri = d.iri;
    for (const auto& p : el.children) {
      if (p.is(kRdfs, "subClassOf")) {
        if (auto r = resource(p)) {
          if (!is_thing(*r)) target(iri).parents.insert(*r);
          continue;
        }
        for (const auto& inner : p.children) {
          if (contains_restriction(inner)) {
            target(iri).has_restrictions = true;
          } else if (auto parent = node(inner); parent && !is_thing(*parent)) {
            target(iri).parents.insert(*parent);
          }
        }
      } else if (p.is(kOwl, "equivalentClass") || p.is(kOwl, "intersectionOf")) {
        if (contains_restriction(p)) target(iri).has_restrictions = true;
      } else if (p.is(kRdfs, "label")) {
        take_label(target(iri), p);
      }
    }
  }

  TermDescriptor& loose(const std::string& iri) {
    auto& d = loose_[iri];
    d.iri = iri;
    return d;
  }

  TermDescriptor& target(const std::string& iri) {
    if (auto it = terms_.find(iri); it != terms_.end()) return it->second;
    return loose(iri);
  }

  void individual_body(const std::string& iri, const xml::Element& el,
                       std::optional<std::string> element_type) {
    auto existing = terms_.find(iri);
    if (existing != terms_.end() && existing->second.kind == TermKind::Class) {
      for (const auto& p : el.children)
        if (p.is(kRdfs, "label")) take_label(existing->second, p);
      return;
    }
    auto& d = declare(iri, TermKind::Individual);
    if (element_type && !is_thing(*element_type)) d.parents.insert(*element_type);
    for (const auto& p : el.children) {
      if (p.is(kRdf, "type")) {
        auto r = resource(p);
        if (r && !is_thing(*r) && *r != kOwl + "NamedIndividual")
          terms_.at(iri).parents.insert(*r);
      } else if (p.is(kRdfs, "label")) {
        take_label(terms_.at(iri), p);
      }
    }
  }

  const LoadOptions& options_;
  std::string base_;
  std::map<std::string, TermDescriptor> terms_;
  std::map<std::string, TermDescriptor> loose_;
};

}  // namespace

Ontology load_ontology(std::string_view rdf_xml, const LoadOptions& options) {
  return Loader(options).run(rdf_xml);
}

Ontology load_ontology_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  LoadOptions options;
  options.base_iri =
      "file://" + std::filesystem::absolute(path).generic_string();
  return load_ontology(ss.str(), options);
}

}  // namespace ontotier
