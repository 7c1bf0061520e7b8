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

#include "support.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#ifndef ONTOTIER_FIXTURE_DIR
#error "ONTOTIER_FIXTURE_DIR must be defined"
#endif

namespace ontotier::testing {

std::string fixture_path(const std::string& name) {
  return std::string(ONTOTIER_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Ontology& gold() {
  static const Ontology o = load_ontology_file(fixture_path("gold_sample.owl"));
  return o;
}

const Profile& wabo_profile() {
  static const Profile p = load_profile_file(fixture_path("wabo4.prf"));
  return p;
}

AnnotationDocument build_wabo4() {
  DocumentMetadata meta;
  meta.author = "Artem";
  meta.date = "2004-06-01T00:00:00";
  MediaDescriptor media;
  media.url = "file:///C:/wabo4.wav";
  media.mime_type = "audio/x-wav";
  AnnotationDocument doc(meta, {media});

  auto type = [&](const char* id, Stereotype s, bool ontological = false) {
    LinguisticType t;
    t.id = id;
    t.stereotype = s;
    t.ontological = ontological;
    t.time_alignable = s == Stereotype::None || s == Stereotype::TimeSubdivision;
    doc.add_linguistic_type(t);
  };
  type("orthography", Stereotype::None);
  type("translation", Stereotype::SymbolicAssociation);
  type("words", Stereotype::SymbolicSubdivision);
  type("parse", Stereotype::SymbolicSubdivision);
  type("gloss", Stereotype::SymbolicAssociation);
  type("ontology", Stereotype::SymbolicAssociation, true);

  doc.add_tier("Orthographic", "orthography");
  doc.add_tier("Translation", "translation", "Orthographic");
  doc.add_tier("Words", "words", "Orthographic");
  doc.add_tier("Parse", "parse", "Words");
  doc.add_tier("Gloss", "gloss", "Parse");
  doc.add_tier("Ontology", "ontology", "Gloss", kWaboProfileRef);

  auto begin = doc.add_time_slot(0);
  auto end = doc.add_time_slot(2000);
  doc.add_alignable_annotation("Orthographic", begin, end, StringValue{"Neko gi-bmose."}, "a1");
  doc.add_referring_annotation("Translation", "a1", StringValue{"He used to walk."}, std::nullopt, "a2");
  doc.add_referring_annotation("Words", "a1", StringValue{"neko"}, std::nullopt, "a10");
  doc.add_referring_annotation("Words", "a1", StringValue{"gi-bmose"}, std::nullopt, "a11");
  doc.add_referring_annotation("Parse", "a10", StringValue{"neko"}, std::nullopt, "a20");
  doc.add_referring_annotation("Parse", "a11", StringValue{"gi-"}, std::nullopt, "a21");
  doc.add_referring_annotation("Parse", "a11", StringValue{"bmose"}, std::nullopt, "a22");
  doc.add_referring_annotation("Gloss", "a20", StringValue{"used to"}, std::nullopt, "a30");
  doc.add_referring_annotation("Gloss", "a21", StringValue{"PAST"}, std::nullopt, "a31");
  doc.add_referring_annotation("Gloss", "a22", StringValue{"walk"}, std::nullopt, "a32");

  OntologicalRequest pc;
  pc.user_term = "PC";
  pc.ont_annotation_id = "d";
  pc.instances["Participle"] = {"neko_pc", {}};
  doc.add_referring_annotation(
      "Ontology", "a30", doc.make_ontological_value("Ontology", pc, wabo_profile(), gold()),
      std::nullopt, "a40");

  OntologicalRequest pv;
  pv.user_term = "PV";
  pv.ont_annotation_id = "e";
  doc.add_referring_annotation(
      "Ontology", "a31", doc.make_ontological_value("Ontology", pv, wabo_profile(), gold()),
      std::nullopt, "a42");
  return doc;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[static_cast<size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

std::string random_text(std::mt19937_64& rng) {
  static const std::vector<std::string> words = {
      "neko", "gi-", "bmose", "used to", "walk", "PAST", "Neko", "wabo",
      "", "a<b", "x & y", "\"quoted\"", "it's", "ŋ", "é", "mno-", "NEKO", "  spaced  ",
      "tab\there", "line\nbreak", "]]>", "#frag", "100%"};
  int n = uniform(rng, 1, 3);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += pick(rng, words);
  }
  return out;
}

}  // namespace

AnnotationDocument random_document(std::mt19937_64& rng, const DocShape& shape) {
  DocumentMetadata meta;
  meta.author = random_text(rng);
  meta.date = chance(rng, 0.5) ? "2026-01-0" + std::to_string(uniform(rng, 1, 9)) : "";
  std::vector<MediaDescriptor> media;
  for (int i = uniform(rng, 0, 2); i > 0; --i) {
    MediaDescriptor m;
    m.url = "file:///media/clip" + std::to_string(uniform(rng, 0, 99)) + ".wav";
    m.mime_type = chance(rng, 0.5) ? "audio/x-wav" : "video/mpeg";
    if (chance(rng, 0.4)) m.time_origin = uniform(rng, 0, 5000);
    media.push_back(m);
  }
  AnnotationDocument doc(meta, media);

  auto type = [&](const char* id, Stereotype s, bool ontological = false) {
    LinguisticType t;
    t.id = id;
    t.stereotype = s;
    t.ontological = ontological;
    t.time_alignable = s == Stereotype::None || s == Stereotype::TimeSubdivision;
    t.graphic_ref = chance(rng, 0.2);
    doc.add_linguistic_type(t);
  };
  type("root", Stereotype::None);
  type("tsub", Stereotype::TimeSubdivision);
  type("ssub", Stereotype::SymbolicSubdivision);
  type("sassoc", Stereotype::SymbolicAssociation);
  if (shape.ontological_tier) type("ont", Stereotype::SymbolicAssociation, true);
  if (chance(rng, 0.3)) type("unused", Stereotype::SymbolicSubdivision);

  std::vector<std::string> tiers;
  bool have_ont = false;
  int n = uniform(rng, 1, shape.max_tiers);
  for (int i = 0; i < n; ++i) {
    std::string id = "T" + std::to_string(i);
    if (i == 0 || chance(rng, 0.15)) {
      doc.add_tier(id, "root");
    } else if (shape.ontological_tier && !have_ont && chance(rng, 0.25)) {
      doc.add_tier(id, "ont", pick(rng, tiers), "wabo4.prf");
      have_ont = true;
    } else {
      static const std::vector<std::string> kinds = {"tsub", "ssub", "sassoc"};
      doc.add_tier(id, pick(rng, kinds), pick(rng, tiers));
    }
    tiers.push_back(id);
  }

  static const std::vector<std::string> user_terms = {"PV", "PC", "NI"};
  int minted = 0;
  for (const auto& tier_id : tiers) {
    const Tier& tier = *doc.data().find_tier(tier_id);
    const LinguisticType& lt = *doc.data().type_of(tier);
    if (!tier.parent) {
      int t = uniform(rng, 0, 100);
      std::optional<std::string> shared;
      for (int k = uniform(rng, 0, shape.max_root_annotations); k > 0; --k) {
        std::string b = shared ? *shared : doc.add_time_slot(t);
        int end = t + uniform(rng, 1, 1000);
        std::string e = doc.add_time_slot(end);
        doc.add_alignable_annotation(tier_id, b, e, StringValue{random_text(rng)});
        bool adjacent = chance(rng, 0.3);
        shared = adjacent ? std::optional<std::string>(e) : std::nullopt;
        t = adjacent ? end : end + uniform(rng, 1, 200);
      }
      continue;
    }
    auto parents = doc.annotations_on(*tier.parent);
    for (const auto& pa : parents) {
      if (lt.stereotype == Stereotype::TimeSubdivision) {
        if (!chance(rng, 0.7)) continue;
        auto [pb, pe] = doc.resolved_slots(pa);
        auto pb_time = doc.data().find_slot(pb)->time;
        auto pe_time = doc.data().find_slot(pe)->time;
        std::vector<std::string> bounds{pb};
        std::optional<std::int64_t> last = pb_time;
        for (int j = uniform(rng, 1, shape.max_children) - 1; j > 0; --j) {
          bool timed = last && pe_time && *pe_time - *last >= 2 && !chance(rng, shape.untimed);
          if (timed) {
            auto t = std::uniform_int_distribution<std::int64_t>(*last + 1, *pe_time - 1)(rng);
            bounds.push_back(doc.add_time_slot(t));
            last = t;
          } else {
            bounds.push_back(doc.add_untimed_slot_after(bounds.back()));
          }
        }
        bounds.push_back(pe);
        for (size_t j = 0; j + 1 < bounds.size(); ++j)
          doc.add_alignable_annotation(tier_id, bounds[j], bounds[j + 1],
                                       StringValue{random_text(rng)}, std::nullopt, pa);
      } else if (lt.stereotype == Stereotype::SymbolicSubdivision) {
        if (!chance(rng, 0.7)) continue;
        for (int j = uniform(rng, 1, shape.max_children); j > 0; --j) {
          std::optional<std::int64_t> ordinal;
          if (chance(rng, 0.15)) ordinal = 0;
          doc.add_referring_annotation(tier_id, pa, StringValue{random_text(rng)}, ordinal);
        }
      } else if (lt.ontological) {
        if (!chance(rng, 0.6)) continue;
        OntologicalRequest req;
        req.user_term = pick(rng, user_terms);
        req.ont_annotation_id = chance(rng, 0.5) ? "e" + std::to_string(minted) : "";
        req.description = chance(rng, 0.3) ? random_text(rng) : "";
        for (const auto& target : wabo_profile().lookup(req.user_term))
          req.instances[target] = {"inst" + std::to_string(++minted), {}};
        doc.add_referring_annotation(tier_id, pa,
                                     doc.make_ontological_value(tier_id, req, wabo_profile(), gold()));
      } else {
        if (!chance(rng, 0.7)) continue;
        doc.add_referring_annotation(tier_id, pa, StringValue{random_text(rng)});
      }
    }
  }
  if (chance(rng, 0.2)) doc.add_time_slot(std::nullopt);
  return doc;
}

RandomOntology random_ontology_xml(std::mt19937_64& rng, int classes, int individuals) {
  RandomOntology out;
  out.base = "http://example.org/onto" + std::to_string(uniform(rng, 0, 9999)) + ".owl";
  out.classes = classes;
  out.individuals = individuals;
  const std::string& base = out.base;
  auto ref = [&](const std::string& name) {
    return chance(rng, 0.5) ? "#" + name : base + "#" + name;
  };
  auto subject = [&](const std::string& name) {
    switch (uniform(rng, 0, 2)) {
      case 0: return "rdf:ID=\"" + name + "\"";
      case 1: return "rdf:about=\"#" + name + "\"";
      default: return "rdf:about=\"" + base + "#" + name + "\"";
    }
  };
  std::ostringstream x;
  x << "<?xml version=\"1.0\"?>\n"
    << "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n"
    << "         xmlns:rdfs=\"http://www.w3.org/2000/01/rdf-schema#\"\n"
    << "         xmlns:owl=\"http://www.w3.org/2002/07/owl#\"\n"
    << "         xmlns:ex=\"" << base << "#\"\n"
    << "         xml:base=\"" << base << "\">\n"
    << "  <owl:Ontology rdf:about=\"\"/>\n"
    << "  <owl:ObjectProperty rdf:ID=\"relatesTo\"/>\n";
  for (int i = 0; i < classes; ++i) {
    std::string name = "C" + std::to_string(i);
    x << "  <owl:Class " << subject(name) << ">\n";
    if (chance(rng, 0.3)) x << "    <rdfs:label>class " << i << "</rdfs:label>\n";
    std::set<int> parents;
    if (i > 0)
      for (int k = uniform(rng, 0, 3); k > 0; --k) parents.insert(uniform(rng, 0, i - 1));
    for (int p : parents) {
      std::string pn = "C" + std::to_string(p);
      if (chance(rng, 0.25))
        x << "    <rdfs:subClassOf>\n      <owl:Class rdf:about=\"" << ref(pn)
          << "\"/>\n    </rdfs:subClassOf>\n";
      else
        x << "    <rdfs:subClassOf rdf:resource=\"" << ref(pn) << "\"/>\n";
    }
    if (chance(rng, 0.2))
      x << "    <rdfs:subClassOf>\n      <owl:Restriction>\n"
        << "        <owl:onProperty rdf:resource=\"#relatesTo\"/>\n"
        << "        <owl:allValuesFrom rdf:resource=\"#C0\"/>\n"
        << "      </owl:Restriction>\n    </rdfs:subClassOf>\n";
    x << "  </owl:Class>\n";
  }
  for (int i = 0; i < individuals; ++i) {
    std::string name = "I" + std::to_string(i);
    std::string type = "C" + std::to_string(uniform(rng, 0, classes - 1));
    switch (uniform(rng, 0, 3)) {
      case 0:
        x << "  <owl:Thing " << subject(name) << ">\n    <rdf:type rdf:resource=\"" << ref(type)
          << "\"/>\n  </owl:Thing>\n";
        break;
      case 1:
        x << "  <ex:" << type << " " << subject(name) << "/>\n";
        break;
      case 2:
        x << "  <rdf:Description " << subject(name) << ">\n    <rdf:type rdf:resource=\""
          << ref(type) << "\"/>\n  </rdf:Description>\n";
        break;
      default: {
        std::string second = "C" + std::to_string(uniform(rng, 0, classes - 1));
        x << "  <owl:NamedIndividual " << subject(name) << ">\n    <rdf:type rdf:resource=\""
          << ref(type) << "\"/>\n    <rdf:type rdf:resource=\"" << ref(second)
          << "\"/>\n  </owl:NamedIndividual>\n";
      }
    }
  }
  x << "</rdf:RDF>\n";
  out.xml = x.str();
  return out;
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

std::string attr(const std::string& attrs, const std::string& name) {
  std::smatch m;
  std::regex re(name + R"re(\s*=\s*"([^"]*)")re");
  return std::regex_search(attrs, m, re) ? m[1].str() : std::string();
}

std::string resolve(const std::string& base, const std::string& ref) {
  if (ref.empty()) return base;
  if (ref[0] == '#') return base + ref;
  return ref;
}

}  // namespace

std::map<std::string, std::set<std::string>> naive_parent_map(const std::string& xml,
                                                              const std::string& base) {
  const std::string owl = "http://www.w3.org/2002/07/owl#";
  std::string text = std::regex_replace(xml, std::regex(R"(<!--[\s\S]*?-->)"), "");
  std::map<std::string, std::string> prefixes;
  {
    std::regex decl(R"re(xmlns:([\w.\-]+)\s*=\s*"([^"]*)")re");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), decl); it != std::sregex_iterator(); ++it)
      prefixes[(*it)[1]] = (*it)[2];
  }
  std::map<std::string, std::set<std::string>> parents;
  std::set<std::string> declared;
  std::vector<std::string> stack;
  std::string current;
  bool in_subclass = false;

  std::regex tag(R"(<(/?)([\w.\-]+:[\w.\-]+|[\w.\-]+)([^>]*?)(/?)>)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), tag); it != std::sregex_iterator(); ++it) {
    bool closing = !(*it)[1].str().empty();
    std::string name = (*it)[2];
    std::string attrs = (*it)[3];
    bool empty = !(*it)[4].str().empty();
    if (closing) {
      if (name == "rdfs:subClassOf") in_subclass = false;
      stack.pop_back();
      continue;
    }
    size_t depth = stack.size();  // 1 = child of rdf:RDF
    if (depth == 1) {
      current.clear();
      std::string id = attr(attrs, "rdf:ID");
      std::string about = attr(attrs, "rdf:about");
      std::string iri = !id.empty() ? base + "#" + id : (about.empty() && id.empty() ? "" : resolve(base, about));
      auto colon = name.find(':');
      std::string prefix = name.substr(0, colon);
      std::string local = name.substr(colon + 1);
      if (name == "owl:Class" || name == "owl:Thing" || name == "owl:NamedIndividual") {
        current = iri;
        declared.insert(iri);
        parents[iri];
      } else if (name == "rdf:Description") {
        current = iri;
      } else if (prefix != "owl" && prefix != "rdf" && prefix != "rdfs" && prefixes.count(prefix)) {
        current = iri;
        declared.insert(iri);
        parents[iri].insert(prefixes[prefix] + local);
      }
    } else if (depth == 2 && !current.empty()) {
      std::string res = attr(attrs, "rdf:resource");
      if ((name == "rdfs:subClassOf" || name == "rdf:type") && !res.empty()) {
        std::string p = resolve(base, res);
        if (p.rfind(owl, 0) != 0) parents[current].insert(p);
        if (name == "rdf:type") declared.insert(current);
      }
      if (name == "rdfs:subClassOf" && !empty) in_subclass = true;
    } else if (depth == 3 && in_subclass && name == "owl:Class" && !current.empty()) {
      std::string about = attr(attrs, "rdf:about");
      if (!about.empty()) parents[current].insert(resolve(base, about));
    }
    if (!empty) stack.push_back(name);
  }
  std::map<std::string, std::set<std::string>> out;
  for (const auto& iri : declared) out[iri] = parents[iri];
  return out;
}

std::set<std::string> tier_closure(const DocumentData& d, const std::string& tier) {
  std::set<std::string> out{tier};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& t : d.tiers)
      if (t.parent && out.count(*t.parent) && out.insert(t.id).second) grew = true;
  }
  return out;
}

std::set<std::string> annotations_on_tiers(const DocumentData& d, const std::set<std::string>& tiers) {
  std::set<std::string> out;
  for (const auto& [id, a] : d.annotations)
    if (tiers.count(a.tier)) out.insert(id);
  return out;
}

namespace {

std::optional<std::string> depends_on(const Annotation& a) {
  if (const auto* r = std::get_if<ReferringAnchor>(&a.anchor)) return r->ref;
  return std::get<AlignableAnchor>(a.anchor).parent;
}

}  // namespace

std::set<std::string> annotation_closure(const DocumentData& d, const std::string& root) {
  std::set<std::string> out{root};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [id, a] : d.annotations)
      if (auto p = depends_on(a); p && out.count(*p) && out.insert(id).second) grew = true;
  }
  return out;
}

std::set<std::string> orphaned_slots(const DocumentData& d, const std::set<std::string>& removed) {
  std::set<std::string> touched, kept;
  for (const auto& [id, a] : d.annotations)
    if (const auto* al = std::get_if<AlignableAnchor>(&a.anchor))
      (removed.count(id) ? touched : kept).insert({al->begin, al->end});
  std::set<std::string> out;
  std::set_difference(touched.begin(), touched.end(), kept.begin(), kept.end(),
                      std::inserter(out, out.end()));
  return out;
}

std::optional<Interval> walk_alignment(const DocumentData& d, const std::string& annotation) {
  std::string cur = annotation;
  for (size_t hops = 0; hops <= d.annotations.size(); ++hops) {
    const Annotation& a = d.annotations.at(cur);
    if (const auto* r = std::get_if<ReferringAnchor>(&a.anchor)) {
      cur = r->ref;
      continue;
    }
    const auto& al = std::get<AlignableAnchor>(a.anchor);
    std::optional<std::int64_t> b, e;
    for (const auto& s : d.time_order) {
      if (s.id == al.begin) b = s.time;
      if (s.id == al.end) e = s.time;
    }
    if (!b || !e) return std::nullopt;
    return Interval{*b, *e};
  }
  throw std::logic_error("reference loop");
}

namespace {

using HitKey = std::tuple<std::string, size_t, std::int64_t, std::string>;

HitKey hit_key(const DocumentData& d, const std::string& id) {
  std::string cur = id;
  while (const auto* r = std::get_if<ReferringAnchor>(&d.annotations.at(cur).anchor)) cur = r->ref;
  const std::string& begin = std::get<AlignableAnchor>(d.annotations.at(cur).anchor).begin;
  size_t pos = 0;
  while (d.time_order[pos].id != begin) ++pos;
  const Annotation& a = d.annotations.at(id);
  std::int64_t ordinal = 0;
  if (const auto* r = std::get_if<ReferringAnchor>(&a.anchor)) ordinal = r->ordinal;
  return {a.tier, pos, ordinal, id};
}

std::vector<SearchHit> sorted_hits(const DocumentData& d, std::vector<SearchHit> hits) {
  std::sort(hits.begin(), hits.end(), [&](const SearchHit& x, const SearchHit& y) {
    return hit_key(d, x.annotation) < hit_key(d, y.annotation);
  });
  return hits;
}

std::string fold(std::string s) {
  for (auto& c : s)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return s;
}

}  // namespace

std::vector<SearchHit> scan_text(const DocumentData& d, const TextQuery& q) {
  std::vector<SearchHit> hits;
  for (const auto& [id, a] : d.annotations) {
    const auto* s = std::get_if<StringValue>(&a.value);
    if (!s || (!q.tiers.empty() && !q.tiers.count(a.tier))) continue;
    bool match = q.case_sensitive ? s->text.find(q.text) != std::string::npos
                                  : fold(s->text).find(fold(q.text)) != std::string::npos;
    if (match) hits.push_back({id, a.tier, s->text, walk_alignment(d, id)});
  }
  return sorted_hits(d, std::move(hits));
}

std::vector<SearchHit> scan_term(const DocumentData& d, const std::string& term,
                                 const Ontology* ontology) {
  std::set<std::string> classes;
  std::set<std::string> wanted{term};
  if (ontology) {
    const auto& terms = ontology->terms();
    auto self = terms.find(term);
    if (self != terms.end() && self->second.kind == TermKind::Class) {
      classes.insert(term);
      for (bool grew = true; grew;) {
        grew = false;
        for (const auto& [iri, t] : terms)
          if (t.kind == TermKind::Class && !classes.count(iri))
            for (const auto& p : t.parents)
              if (classes.count(p)) {
                classes.insert(iri);
                grew = true;
                break;
              }
      }
      wanted.insert(classes.begin(), classes.end());
      for (const auto& [iri, t] : terms)
        if (t.kind == TermKind::Individual)
          for (const auto& p : t.parents)
            if (classes.count(p)) wanted.insert(iri);
    }
  }
  std::vector<SearchHit> hits;
  for (const auto& [id, a] : d.annotations) {
    const auto* v = std::get_if<OntologicalValue>(&a.value);
    if (!v) continue;
    bool match = v->user_term == term;
    for (const auto& i : v->instances) match = match || wanted.count(i);
    for (const auto& m : v->minted) match = match || classes.count(m.type);
    if (match) hits.push_back({id, a.tier, v->user_term, walk_alignment(d, id)});
  }
  return sorted_hits(d, std::move(hits));
}

}  // namespace ontotier::testing
