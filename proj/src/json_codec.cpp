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

#include "ontotier/json_codec.hpp"

#include "ontotier/error.hpp"

namespace ontotier {
namespace {

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json interval_json(const std::optional<Interval>& iv) {
  if (!iv) return nullptr;
  return {{"begin", iv->begin}, {"end", iv->end}};
}

}  // namespace

Json value_to_json(const AnnotationValue& value) {
  if (const auto* s = std::get_if<StringValue>(&value))
    return {{"kind", "string"}, {"text", s->text}};
  const auto& o = std::get<OntologicalValue>(value);
  Json minted = Json::array();
  for (const auto& m : o.minted) {
    Json fills = Json::array();
    for (const auto& [p, v] : m.fills) fills.push_back({p, v});
    minted.push_back({{"iri", m.iri}, {"type", m.type}, {"fills", fills}});
  }
  return {{"kind", "ontological"},
          {"user_term", o.user_term},
          {"ont_annotation_id", o.ont_annotation_id},
          {"instances", o.instances},
          {"description", o.description},
          {"minted", minted}};
}

AnnotationValue value_from_json(const Json& j) {
  if (j.is_string()) return StringValue{j.get<std::string>()};
  if (!j.is_object()) throw std::invalid_argument("value must be an object or string");
  if (j.contains("text")) return StringValue{j.at("text").get<std::string>()};
  OntologicalValue o;
  o.user_term = j.at("user_term").get<std::string>();
  o.ont_annotation_id = j.value("ont_annotation_id", "");
  o.description = j.value("description", "");
  if (j.contains("instances")) o.instances = j.at("instances").get<std::vector<std::string>>();
  return o;
}

Json annotation_to_json(const AnnotationDocument& doc, const Annotation& a) {
  Json j = {{"id", a.id}, {"tier", a.tier}};
  if (const auto* al = std::get_if<AlignableAnchor>(&a.anchor)) {
    j["kind"] = "alignable";
    j["begin_slot"] = al->begin;
    j["end_slot"] = al->end;
    j["parent"] = opt(al->parent);
  } else {
    const auto& r = std::get<ReferringAnchor>(a.anchor);
    j["kind"] = "referring";
    j["ref"] = r.ref;
    j["ordinal"] = r.ordinal;
  }
  j["interval"] = interval_json(doc.resolve_alignment(a.id));
  j["value"] = value_to_json(a.value);
  return j;
}

Json document_to_json(const AnnotationDocument& doc) {
  const auto& d = doc.data();
  Json media = Json::array();
  for (const auto& m : d.media)
    media.push_back({{"url", m.url}, {"mime_type", m.mime_type}, {"time_origin", opt(m.time_origin)}});
  Json types = Json::array();
  for (const auto& [id, t] : d.types)
    types.push_back({{"id", id},
                     {"stereotype", std::string(stereotype_name(t.stereotype))},
                     {"ontological", t.ontological},
                     {"time_alignable", t.time_alignable},
                     {"graphic_ref", t.graphic_ref}});
  Json slots = Json::array();
  for (const auto& s : d.time_order) slots.push_back({{"id", s.id}, {"time", opt(s.time)}});
  Json tiers = Json::array();
  Json annotations = Json::array();
  for (const auto& t : d.tiers) {
    tiers.push_back({{"id", t.id}, {"type", t.type}, {"parent", opt(t.parent)}, {"profile", opt(t.profile)}});
    for (const auto& aid : doc.annotations_on(t.id))
      annotations.push_back(annotation_to_json(doc, d.annotations.at(aid)));
  }
  return {{"meta", {{"author", d.meta.author}, {"date", d.meta.date}, {"time_unit", d.meta.time_unit}}},
          {"media", media},
          {"types", types},
          {"slots", slots},
          {"tiers", tiers},
          {"annotations", annotations}};
}

Json hit_to_json(const SearchHit& hit) {
  return {{"tier", hit.tier},
          {"annotation", hit.annotation},
          {"interval", interval_json(hit.interval)},
          {"value", hit.value}};
}

Json hits_to_json(const std::vector<SearchHit>& hits) {
  Json out = Json::array();
  for (const auto& h : hits) out.push_back(hit_to_json(h));
  return out;
}

Json profile_to_json(const Profile& profile) {
  Json terms = Json::array();
  for (const auto& m : profile.mappings())
    terms.push_back({{"name", m.term.name}, {"description", m.term.description}, {"targets", m.targets}});
  return {{"author", profile.author()},
          {"description", profile.description()},
          {"version", profile.version()},
          {"source", profile.source()},
          {"terms", terms}};
}

Profile profile_from_json(const Json& j) {
  Profile p(j.value("author", ""), j.value("description", ""), j.value("version", ""),
            j.value("source", ""));
  if (j.contains("terms"))
    for (const auto& t : j.at("terms"))
      p.add_mapping({t.at("name").get<std::string>(), t.value("description", "")},
                    t.at("targets").get<std::vector<std::string>>());
  return p;
}

Json term_to_json(const TermDescriptor& term) {
  return {{"iri", term.iri},
          {"kind", term.kind == TermKind::Class ? "class" : "individual"},
          {"label", term.label},
          {"has_restrictions", term.has_restrictions},
          {"parents", term.parents}};
}

Json tree_to_json(const std::vector<TreeNode>& forest) {
  Json out = Json::array();
  for (const auto& n : forest)
    out.push_back({{"iri", n.iri}, {"resolved", n.resolved}, {"children", tree_to_json(n.children)}});
  return out;
}

Json issue_to_json(const Issue& issue) {
  return {{"level", issue.level}, {"locus", issue.locus}, {"code", issue.code}, {"message", issue.message}};
}

Json deletion_to_json(const DeletionResult& result) {
  return {{"tiers", result.tiers}, {"annotations", result.annotations}, {"slots", result.slots}};
}

}  // namespace ontotier
