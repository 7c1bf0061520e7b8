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

#include "ontotier/persistence.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "ontotier/error.hpp"
#include "ontotier/ontology.hpp"
#include "ontotier/xml.hpp"

namespace ontotier {
namespace {

using Attrs = std::vector<std::pair<std::string, std::string>>;

const std::string kRdf(kRdfNs);

// ---------------------------------------------------------------------------
// Writing

class DocumentWriter {
 public:
  DocumentWriter(const DocumentData& doc, std::string base, std::string media_ns)
      : doc_(doc), base_(std::move(base)), media_ns_(std::move(media_ns)) {}

  std::string run() {
    collect_prefixes();
    Attrs root = {{"xmlns:rdf", kRdf}, {"xmlns:media", media_ns_}};
    for (const auto& [ns, prefix] : prefixes_) root.emplace_back("xmlns:" + prefix, ns);
    if (!base_.empty()) root.emplace_back("xml:base", base_);
    w_.open("rdf:RDF", root);

    document_node();
    constraints();
    for (size_t i = 0; i < doc_.time_order.size(); ++i) slot(doc_.time_order[i], i);
    for (size_t i = 0; i < doc_.tiers.size(); ++i) tier(doc_.tiers[i], i);
    for (const auto& [id, t] : doc_.types)
      if (!nested_.count(id)) linguistic_type(t);
    for (const auto& [id, a] : doc_.annotations) annotation(a);
    for (const auto& [id, a] : doc_.annotations)
      if (const auto* v = std::get_if<OntologicalValue>(&a.value))
        for (const auto& m : v->minted) minted(m);
    return w_.finish();
  }

 private:
  std::string ref(const std::string& id) const { return base_ + "#" + id; }
  Attrs resource(const std::string& id) const { return {{"rdf:resource", ref(id)}}; }

  void collect_prefixes() {
    auto note = [&](const std::string& ns) {
      if (ns == media_ns_ || ns == kRdf || prefixes_.count(ns)) return;
      prefixes_[ns] = "ns" + std::to_string(prefixes_.size());
    };
    auto note_all = [&](const std::vector<ExtraProperty>& extra) {
      for (const auto& e : extra) note(e.ns);
    };
    note_all(doc_.meta.extra);
    for (const auto& m : doc_.media) note_all(m.extra);
    for (const auto& s : doc_.time_order) note_all(s.extra);
    for (const auto& t : doc_.tiers) note_all(t.extra);
    for (const auto& [_, t] : doc_.types) note_all(t.extra);
    for (const auto& [_, a] : doc_.annotations) {
      note_all(a.extra);
      if (const auto* v = std::get_if<OntologicalValue>(&a.value))
        for (const auto& m : v->minted)
          for (const auto& [prop, _v] : m.fills) note(std::string(iri_namespace(prop)));
    }
  }

  std::string qname(const std::string& ns, const std::string& local) const {
    if (ns == media_ns_) return "media:" + local;
    if (ns == kRdf) return "rdf:" + local;
    return prefixes_.at(ns) + ":" + local;
  }

  void extras(const std::vector<ExtraProperty>& extra) {
    for (const auto& e : extra) {
      if (e.resource)
        w_.empty(qname(e.ns, e.local), {{"rdf:resource", *e.resource}});
      else
        w_.leaf(qname(e.ns, e.local), e.text);
    }
  }

  void document_node() {
    w_.open("media:AnnotationDocument", base_.empty() ? Attrs{} : Attrs{{"rdf:about", base_}});
    w_.leaf("media:hasAuthor", doc_.meta.author);
    w_.leaf("media:hasDate", doc_.meta.date);
    w_.leaf("media:hasTimeUnit", doc_.meta.time_unit);
    for (size_t i = 0; i < doc_.media.size(); ++i) {
      const auto& m = doc_.media[i];
      w_.open("media:hasMediaDescriptor");
      w_.open("media:MediaDescriptor");
      w_.leaf("media:hasMediaURL", m.url);
      w_.leaf("media:hasMimeType", m.mime_type);
      if (m.time_origin) w_.leaf("media:hasTimeOrigin", std::to_string(*m.time_origin));
      w_.leaf("media:hasOrderIndex", std::to_string(i));
      extras(m.extra);
      w_.close();
      w_.close();
    }
    for (const auto& s : doc_.time_order) w_.empty("media:hasTimeSlot", resource(s.id));
    for (const auto& t : doc_.tiers) w_.empty("media:hasTier", resource(t.id));
    extras(doc_.meta.extra);
    w_.close();
  }

  void constraints() {
    std::set<Stereotype> used;
    for (const auto& [_, t] : doc_.types)
      if (t.stereotype != Stereotype::None) used.insert(t.stereotype);
    for (auto s : used)
      w_.empty("media:Constraint", {{"rdf:ID", std::string(stereotype_name(s))}});
  }

  void slot(const TimeSlot& s, size_t index) {
    w_.open("media:TimeSlot", {{"rdf:ID", s.id}});
    w_.leaf("media:hasTimeSlotID", s.id);
    if (s.time) w_.leaf("media:hasTimeValue", std::to_string(*s.time));
    w_.leaf("media:hasOrderIndex", std::to_string(index));
    extras(s.extra);
    w_.close();
  }

  void linguistic_type(const LinguisticType& t) {
    w_.open("media:LinguisticType", {{"rdf:ID", t.id}});
    w_.leaf("media:hasTimeAlignable", t.time_alignable ? "true" : "false");
    w_.leaf("media:hasLinguisticTypeID", t.id);
    if (t.stereotype != Stereotype::None)
      w_.empty("media:hasConstraint", resource(std::string(stereotype_name(t.stereotype))));
    w_.leaf("media:hasGraphicRef", t.graphic_ref ? "true" : "false");
    if (t.ontological) w_.leaf("media:hasOntologicalType", "true");
    extras(t.extra);
    w_.close();
  }

  void tier(const Tier& t, size_t index) {
    w_.open("media:Tier", {{"rdf:ID", t.id}});
    w_.leaf("media:hasTierID", t.id);
    if (t.parent) w_.empty("media:hasParent", resource(*t.parent));
    if (t.profile) w_.leaf("media:hasProfile", *t.profile);
    if (nested_.insert(t.type).second) {
      w_.open("media:hasLinguisticType");
      linguistic_type(doc_.types.at(t.type));
      w_.close();
    } else {
      w_.empty("media:hasLinguisticType", resource(t.type));
    }
    w_.leaf("media:hasOrderIndex", std::to_string(index));
    for (const auto& [id, a] : doc_.annotations)
      if (a.tier == t.id) w_.empty("media:hasAnnotation", resource(id));
    extras(t.extra);
    w_.close();
  }

  void annotation(const Annotation& a) {
    if (const auto* al = std::get_if<AlignableAnchor>(&a.anchor)) {
      w_.open("media:AlignableAnnotation", {{"rdf:ID", a.id}});
      w_.leaf("media:hasAnnotationID", a.id);
      w_.empty("media:hasBeginTimeSlot", resource(al->begin));
      w_.empty("media:hasEndTimeSlot", resource(al->end));
      if (al->parent) w_.empty("media:hasParentAnnotation", resource(*al->parent));
    } else {
      const auto& r = std::get<ReferringAnchor>(a.anchor);
      w_.open("media:RefAnnotation", {{"rdf:ID", a.id}});
      w_.leaf("media:hasAnnotationID", a.id);
      w_.empty("media:hasAnnotationRef", resource(r.ref));
      const auto* type = doc_.type_of_tier(a.tier);
      if (r.ordinal != 0 || type->stereotype == Stereotype::SymbolicSubdivision)
        w_.leaf("media:hasOrdinal", std::to_string(r.ordinal));
    }
    w_.open("media:hasAnnotationValue");
    if (const auto* s = std::get_if<StringValue>(&a.value)) {
      w_.open("media:StringAnnotation", {{"rdf:ID", a.id + "Value"}});
      w_.leaf("media:hasStringValue", s->text);
    } else {
      const auto& v = std::get<OntologicalValue>(a.value);
      w_.open("media:OntologyAnnotation", {{"rdf:ID", a.id + "Value"}});
      w_.leaf("media:hasUserDefinedTerm", v.user_term);
      for (const auto& inst : v.instances)
        w_.empty("media:hasInstances", {{"rdf:resource", inst}});
      w_.leaf("media:hasOntAnnotationDescription", v.description);
      w_.leaf("media:hasOntAnnotationId", v.ont_annotation_id);
    }
    w_.close();
    w_.close();
    extras(a.extra);
    w_.close();
  }

  void minted(const MintedInstance& m) {
    w_.open("rdf:Description", {{"rdf:about", m.iri}});
    w_.empty("rdf:type", {{"rdf:resource", m.type}});
    for (const auto& [prop, value] : m.fills)
      w_.leaf(qname(std::string(iri_namespace(prop)), std::string(iri_local_name(prop))), value);
    w_.close();
  }

  const DocumentData& doc_;
  std::string base_;
  std::string media_ns_;
  std::map<std::string, std::string> prefixes_;
  std::set<std::string> nested_;
  xml::Writer w_;
};

// ---------------------------------------------------------------------------
// Reading

[[noreturn]] void schema(const xml::Element& el, const std::string& message) {
  throw Error(ErrorCode::SchemaViolation,
              "line " + std::to_string(el.line) + ": " + message);
}

std::int64_t to_int(const xml::Element& el) {
  std::int64_t v = 0;
  const auto& s = el.text;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    schema(el, "expected an integer in <" + el.local + ">, got '" + s + "'");
  return v;
}

bool to_bool(const xml::Element& el) {
  if (el.text == "true") return true;
  if (el.text == "false") return false;
  schema(el, "expected true or false in <" + el.local + ">");
}

class DocumentReader {
 public:
  explicit DocumentReader(const ParseOptions& options) : options_(options) {}

  AnnotationDocument run(std::string_view bytes) {
    xml::Element root = xml::parse(bytes);
    if (!root.is(kRdf, "RDF")) schema(root, "root element must be rdf:RDF");
    media_ = options_.media_ns;
    for (const auto& [prefix, iri] : root.namespace_decls)
      if (prefix == "media") media_ = iri;
    base_ = options_.base_iri;
    if (auto* b = root.attribute(xml::kXmlNs, "base")) {
      base_ = *b;
    } else {
      for (const auto& n : root.children)
        if (n.is(media_, "AnnotationDocument"))
          if (auto* about = n.attribute(kRdf, "about")) base_ = *about;
    }

    for (const auto& n : root.children) register_ids(n);
    check_references(root);

    DocumentData data;
    std::vector<std::pair<std::int64_t, MediaDescriptor>> media;
    std::vector<std::pair<std::int64_t, TimeSlot>> slots;
    std::vector<std::pair<std::int64_t, Tier>> tiers;
    std::vector<const xml::Element*> annotation_nodes;
    for (const auto& n : root.children) {
      if (n.is(media_, "AnnotationDocument")) {
        document_node(n, data.meta, media);
      } else if (n.is(media_, "TimeSlot")) {
        slots.push_back(slot(n));
      } else if (n.is(media_, "Tier")) {
        tiers.push_back(tier(n, data.types));
      } else if (n.is(media_, "LinguisticType")) {
        linguistic_type(n, data.types);
      } else if (n.is(media_, "AlignableAnnotation") || n.is(media_, "RefAnnotation") ||
                 n.is(media_, "ReferringAnnotation")) {
        annotation_nodes.push_back(&n);
      } else if (n.is(kRdf, "Description")) {
        if (auto* about = n.attribute(kRdf, "about")) descriptions_[*about] = &n;
      }
    }
    for (auto& [_, m] : ordered(std::move(media))) data.media.push_back(std::move(m));
    for (auto& [_, s] : ordered(std::move(slots))) data.time_order.push_back(std::move(s));
    for (auto& [_, t] : ordered(std::move(tiers))) data.tiers.push_back(std::move(t));
    for (const auto* n : annotation_nodes) {
      Annotation a = annotation(*n);
      auto id = a.id;
      if (!data.annotations.emplace(id, std::move(a)).second)
        schema(*n, "annotation " + id + " appears twice");
    }
    return AnnotationDocument::from_data(std::move(data));
  }

 private:
  template <typename T>
  static std::vector<std::pair<std::int64_t, T>> ordered(
      std::vector<std::pair<std::int64_t, T>> v) {
    std::stable_sort(v.begin(), v.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  void register_ids(const xml::Element& el) {
    if (auto* id = el.attribute(kRdf, "ID")) ids_.insert(*id);
    for (const auto& c : el.children) register_ids(c);
  }

  // Local fragment of an rdf:resource pointing into this document, if any.
  std::optional<std::string> local_fragment(const std::string& iri) const {
    if (!iri.empty() && iri[0] == '#') return iri.substr(1);
    if (!base_.empty() && iri.size() > base_.size() &&
        iri.compare(0, base_.size(), base_) == 0 && iri[base_.size()] == '#')
      return iri.substr(base_.size() + 1);
    return std::nullopt;
  }

  void check_references(const xml::Element& el) const {
    if (auto* r = el.attribute(kRdf, "resource"))
      if (auto frag = local_fragment(*r); frag && !ids_.count(*frag))
        throw Error(ErrorCode::DanglingReference,
                    "line " + std::to_string(el.line) + ": " + *r +
                        " names no node in this document");
    for (const auto& c : el.children) check_references(c);
  }

  std::string target_id(const xml::Element& prop) const {
    auto* r = prop.attribute(kRdf, "resource");
    if (!r) schema(prop, "<" + prop.local + "> needs rdf:resource");
    auto frag = local_fragment(*r);
    if (!frag) schema(prop, *r + " is not a node of this document");
    return *frag;
  }

  std::string node_id(const xml::Element& el) const {
    if (auto* id = el.attribute(kRdf, "ID")) return *id;
    schema(el, "<" + el.local + "> needs rdf:ID");
  }

  ExtraProperty extra(const xml::Element& p) const {
    ExtraProperty e{p.ns, p.local, std::nullopt, p.text};
    if (auto* r = p.attribute(kRdf, "resource")) {
      e.resource = *r;
      e.text.clear();
    }
    return e;
  }

  void document_node(const xml::Element& n, DocumentMetadata& meta,
                     std::vector<std::pair<std::int64_t, MediaDescriptor>>& media) {
    for (const auto& p : n.children) {
      if (p.is(media_, "hasAuthor")) {
        meta.author = p.text;
      } else if (p.is(media_, "hasDate")) {
        meta.date = p.text;
      } else if (p.is(media_, "hasTimeUnit")) {
        meta.time_unit = p.text;
      } else if (p.is(media_, "hasMediaDescriptor")) {
        for (const auto& md : p.children)
          if (md.is(media_, "MediaDescriptor")) media.push_back(media_descriptor(md, media.size()));
      } else if (p.is(media_, "hasTimeSlot") || p.is(media_, "hasTier")) {
        // Derived from the nodes themselves.
      } else {
        meta.extra.push_back(extra(p));
      }
    }
  }

  std::pair<std::int64_t, MediaDescriptor> media_descriptor(const xml::Element& n,
                                                            size_t fallback) {
    std::int64_t index = static_cast<std::int64_t>(fallback);
    MediaDescriptor m;
    for (const auto& p : n.children) {
      if (p.is(media_, "hasMediaURL")) m.url = p.text;
      else if (p.is(media_, "hasMimeType")) m.mime_type = p.text;
      else if (p.is(media_, "hasTimeOrigin")) m.time_origin = to_int(p);
      else if (p.is(media_, "hasOrderIndex")) index = to_int(p);
      else m.extra.push_back(extra(p));
    }
    return {index, std::move(m)};
  }

  std::pair<std::int64_t, TimeSlot> slot(const xml::Element& n) {
    TimeSlot s{node_id(n), std::nullopt, {}};
    std::int64_t index = std::numeric_limits<std::int64_t>::max();
    for (const auto& p : n.children) {
      if (p.is(media_, "hasTimeSlotID")) continue;
      if (p.is(media_, "hasTimeValue")) s.time = to_int(p);
      else if (p.is(media_, "hasOrderIndex")) index = to_int(p);
      else s.extra.push_back(extra(p));
    }
    return {index, std::move(s)};
  }

  std::string linguistic_type(const xml::Element& n,
                              std::map<std::string, LinguisticType>& types) {
    LinguisticType t;
    t.id = node_id(n);
    bool saw_alignable = false;
    for (const auto& p : n.children) {
      if (p.is(media_, "hasLinguisticTypeID")) continue;
      if (p.is(media_, "hasTimeAlignable")) {
        t.time_alignable = to_bool(p);
        saw_alignable = true;
      } else if (p.is(media_, "hasConstraint")) {
        auto name = target_id(p);
        auto s = parse_stereotype(name);
        if (!s)
          throw Error(ErrorCode::ConstraintMismatch,
                      "type " + t.id + ": unknown constraint " + name);
        t.stereotype = *s;
      } else if (p.is(media_, "hasGraphicRef")) {
        t.graphic_ref = to_bool(p);
      } else if (p.is(media_, "hasOntologicalType")) {
        t.ontological = to_bool(p);
      } else {
        t.extra.push_back(extra(p));
      }
    }
    if (!saw_alignable) schema(n, "type " + t.id + " lacks hasTimeAlignable");
    if (auto why = linguistic_type_violation(t))
      throw Error(ErrorCode::ConstraintMismatch, "type " + t.id + ": " + *why);
    auto id = t.id;
    if (!types.emplace(id, std::move(t)).second) schema(n, "type " + id + " appears twice");
    return id;
  }

  std::pair<std::int64_t, Tier> tier(const xml::Element& n,
                                     std::map<std::string, LinguisticType>& types) {
    Tier t;
    t.id = node_id(n);
    std::int64_t index = std::numeric_limits<std::int64_t>::max();
    for (const auto& p : n.children) {
      if (p.is(media_, "hasTierID")) continue;
      if (p.is(media_, "hasParent")) {
        t.parent = target_id(p);
      } else if (p.is(media_, "hasProfile")) {
        t.profile = p.text;
      } else if (p.is(media_, "hasLinguisticType")) {
        if (p.attribute(kRdf, "resource")) {
          t.type = target_id(p);
        } else {
          for (const auto& lt : p.children)
            if (lt.is(media_, "LinguisticType")) t.type = linguistic_type(lt, types);
        }
      } else if (p.is(media_, "hasOrderIndex")) {
        index = to_int(p);
      } else if (p.is(media_, "hasAnnotation")) {
        auto aid = target_id(p);
        if (!tier_of_.emplace(aid, t.id).second)
          schema(p, "annotation " + aid + " is claimed by two tiers");
      } else {
        t.extra.push_back(extra(p));
      }
    }
    if (t.type.empty()) schema(n, "tier " + t.id + " has no linguistic type");
    return {index, std::move(t)};
  }

  Annotation annotation(const xml::Element& n) {
    Annotation a;
    a.id = node_id(n);
    auto tier = tier_of_.find(a.id);
    if (tier == tier_of_.end()) schema(n, "annotation " + a.id + " belongs to no tier");
    a.tier = tier->second;
    bool alignable = n.is(media_, "AlignableAnnotation");
    AlignableAnchor al;
    ReferringAnchor ref;
    bool have_value = false;
    for (const auto& p : n.children) {
      if (p.is(media_, "hasAnnotationID")) continue;
      if (alignable && p.is(media_, "hasBeginTimeSlot")) al.begin = target_id(p);
      else if (alignable && p.is(media_, "hasEndTimeSlot")) al.end = target_id(p);
      else if (alignable && p.is(media_, "hasParentAnnotation")) al.parent = target_id(p);
      else if (!alignable && p.is(media_, "hasAnnotationRef")) ref.ref = target_id(p);
      else if (!alignable && p.is(media_, "hasOrdinal")) ref.ordinal = to_int(p);
      else if (p.is(media_, "hasAnnotationValue")) {
        for (const auto& v : p.children) {
          a.value = value(v);
          have_value = true;
        }
      } else {
        a.extra.push_back(extra(p));
      }
    }
    if (!have_value) schema(n, "annotation " + a.id + " has no value");
    if (alignable) {
      if (al.begin.empty() || al.end.empty())
        schema(n, "annotation " + a.id + " lacks a begin or end slot");
      a.anchor = std::move(al);
    } else {
      if (ref.ref.empty()) schema(n, "annotation " + a.id + " lacks hasAnnotationRef");
      a.anchor = std::move(ref);
    }
    return a;
  }

  AnnotationValue value(const xml::Element& v) {
    if (v.is(media_, "StringAnnotation")) {
      StringValue s;
      for (const auto& p : v.children)
        if (p.is(media_, "hasStringValue")) s.text = p.text;
      return s;
    }
    if (!v.is(media_, "OntologyAnnotation"))
      schema(v, "unexpected annotation value <" + v.local + ">");
    OntologicalValue o;
    for (const auto& p : v.children) {
      if (p.is(media_, "hasUserDefinedTerm")) o.user_term = p.text;
      else if (p.is(media_, "hasOntAnnotationDescription")) o.description = p.text;
      else if (p.is(media_, "hasOntAnnotationId")) o.ont_annotation_id = p.text;
      else if (p.is(media_, "hasInstances")) {
        auto* r = p.attribute(kRdf, "resource");
        if (!r) schema(p, "hasInstances needs rdf:resource");
        o.instances.push_back(*r);
        if (auto d = descriptions_.find(*r); d != descriptions_.end())
          o.minted.push_back(minted(*d->second));
      }
    }
    return o;
  }

  MintedInstance minted(const xml::Element& d) const {
    MintedInstance m{*d.attribute(kRdf, "about"), "", {}};
    for (const auto& p : d.children) {
      if (p.is(kRdf, "type")) {
        if (auto* r = p.attribute(kRdf, "resource")) m.type = *r;
      } else {
        m.fills.emplace_back(p.ns + p.local, p.text);
      }
    }
    return m;
  }

  const ParseOptions& options_;
  std::string media_;
  std::string base_;
  std::set<std::string> ids_;
  std::map<std::string, std::string> tier_of_;
  std::map<std::string, const xml::Element*> descriptions_;
};

}  // namespace

std::string serialize_document(const AnnotationDocument& doc,
                               const std::string& base_iri,
                               const SerializeOptions& options) {
  auto issues = validate_document(doc.data());
  if (!issues.empty())
    throw Error(ErrorCode::InvalidDocument,
                issues.front().locus + ": " + issues.front().message);
  std::string base = base_iri;
  while (!base.empty() && base.back() == '#') base.pop_back();
  return DocumentWriter(doc.data(), base, options.media_ns).run();
}

AnnotationDocument parse_document(std::string_view rdf_xml, const ParseOptions& options) {
  return DocumentReader(options).run(rdf_xml);
}

std::string file_iri(const std::string& path) {
  auto abs = std::filesystem::absolute(path).generic_string();
  if (!abs.empty() && abs[0] != '/') abs = "/" + abs;
  static const char* hex = "0123456789ABCDEF";
  std::string out = "file://";
  for (unsigned char c : abs) {
    if (std::isalnum(c) || std::strchr("/-._~:!$&'()*+,;=@", c)) {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out;
}

AnnotationDocument load_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  ParseOptions options;
  options.base_iri = file_iri(path);
  return parse_document(ss.str(), options);
}

void save_document_file(const AnnotationDocument& doc, const std::string& path,
                        const std::string& base_iri) {
  auto bytes = serialize_document(doc, base_iri.empty() ? file_iri(path) : base_iri);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bytes;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ontotier
