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

#include "ontotier/search.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "ontotier/ontology.hpp"

namespace ontotier {
namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

SearchHit make_hit(const AnnotationDocument& doc, const Annotation& a,
                   std::string value) {
  return {a.id, a.tier, std::move(value), doc.resolve_alignment(a.id)};
}

void order_hits(const AnnotationDocument& doc, std::vector<SearchHit>& hits) {
  SlotOrder order(doc.data());
  auto key = [&](const SearchHit& h) {
    auto [begin, _] = doc.resolved_slots(h.annotation);
    const auto& a = doc.data().annotations.at(h.annotation);
    std::int64_t ordinal = 0;
    if (const auto* r = std::get_if<ReferringAnchor>(&a.anchor)) ordinal = r->ordinal;
    return std::tuple{h.tier, order.position(begin), ordinal, h.annotation};
  };
  std::vector<std::pair<decltype(key(hits.front())), SearchHit>> keyed;
  keyed.reserve(hits.size());
  for (auto& h : hits) keyed.emplace_back(key(h), std::move(h));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  hits.clear();
  for (auto& [_, h] : keyed) hits.push_back(std::move(h));
}

}  // namespace

std::vector<SearchHit> search_text(const AnnotationDocument& doc,
                                   const TextQuery& query) {
  std::vector<SearchHit> hits;
  const std::string needle = query.case_sensitive ? query.text : lower(query.text);
  for (const auto& [id, a] : doc.data().annotations) {
    const auto* s = std::get_if<StringValue>(&a.value);
    if (!s) continue;
    if (!query.tiers.empty() && !query.tiers.count(a.tier)) continue;
    const std::string hay = query.case_sensitive ? s->text : lower(s->text);
    if (hay.find(needle) != std::string::npos) hits.push_back(make_hit(doc, a, s->text));
  }
  if (!hits.empty()) order_hits(doc, hits);
  return hits;
}

std::vector<SearchHit> search_term(const AnnotationDocument& doc,
                                   const TermQuery& query) {
  std::set<std::string> wanted{query.term};
  std::set<std::string> classes;
  if (query.ontology && query.expand_subclasses) {
    if (const auto* d = query.ontology->find(query.term); d && d->kind == TermKind::Class) {
      classes = query.ontology->descendant_classes(query.term);
      wanted.insert(classes.begin(), classes.end());
      for (const auto& [iri, t] : query.ontology->terms())
        if (t.kind == TermKind::Individual &&
            std::any_of(t.parents.begin(), t.parents.end(),
                        [&](const auto& p) { return classes.count(p) > 0; }))
          wanted.insert(iri);
    }
  }

  std::vector<SearchHit> hits;
  for (const auto& [id, a] : doc.data().annotations) {
    const auto* v = std::get_if<OntologicalValue>(&a.value);
    if (!v) continue;
    bool match = v->user_term == query.term ||
                 std::any_of(v->instances.begin(), v->instances.end(),
                             [&](const auto& i) { return wanted.count(i) > 0; }) ||
                 std::any_of(v->minted.begin(), v->minted.end(),
                             [&](const auto& m) { return classes.count(m.type) > 0; });
    if (match) hits.push_back(make_hit(doc, a, v->user_term));
  }
  if (!hits.empty()) order_hits(doc, hits);
  return hits;
}

}  // namespace ontotier
