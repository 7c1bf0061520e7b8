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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "ontotier/persistence.hpp"
#include "ontotier/profile.hpp"
#include "ontotier/search.hpp"
#include "support.hpp"

using namespace ontotier;
using namespace ontotier::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string gold_iri(const std::string& local) { return std::string(kGoldIri) + "#" + local; }

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

// ---------------------------------------------------------------------------

Outcome profile_golden() {
  Profile p = parse_profile(read_file(fixture_path("potawatomi.prf")));
  bool fields = p.author() == "Artem" && p.description() == "Potawatomi Language" && p.version() == "1.0" &&
                p.source() == kGoldIri && p.mappings().size() == 1 && p.mappings()[0].term.name == "NI" &&
                p.mappings()[0].targets == std::vector<std::string>{"Noun", "Inanimate"};
  bool round = parse_profile(serialize_profile(p)) == p;
  return {fields && round, std::string("fields ") + (fields ? "match" : "differ") + ", re-parse " +
                               (round ? "equal" : "differs")};
}

// Text between the first occurrence of `open` and the following `close`.
std::string element_block(const std::string& xml, const std::string& open, const std::string& close) {
  auto b = xml.find(open);
  if (b == std::string::npos) return {};
  auto e = xml.find(close, b);
  return xml.substr(b, e == std::string::npos ? std::string::npos : e + close.size() - b);
}

Outcome markup_golden() {
  std::string xml = serialize_document(build_wabo4(), kWaboBase);
  std::string tier = element_block(xml, R"(<media:Tier rdf:ID="Ontology">)", "</media:Tier>");
  std::string ann = element_block(xml, R"(<media:RefAnnotation rdf:ID="a42">)", "</media:RefAnnotation>");
  const std::vector<std::pair<const std::string*, std::string>> want = {
      {&tier, "<media:hasTierID>Ontology</media:hasTierID>"},
      {&tier, R"(<media:hasParent rdf:resource="file:///C:/wabo4.eaf#Gloss"/>)"},
      {&tier, R"(<media:hasProfile>C:\wabo4.prf</media:hasProfile>)"},
      {&tier, R"(<media:LinguisticType rdf:ID="ontology">)"},
      {&tier, "<media:hasTimeAlignable>false</media:hasTimeAlignable>"},
      {&tier, "<media:hasLinguisticTypeID>ontology</media:hasLinguisticTypeID>"},
      {&tier, R"(<media:hasConstraint rdf:resource="file:///C:/wabo4.eaf#Symbolic_Association"/>)"},
      {&tier, "<media:hasGraphicRef>false</media:hasGraphicRef>"},
      {&ann, "<media:hasAnnotationID>a42</media:hasAnnotationID>"},
      {&ann, R"(<media:hasAnnotationRef rdf:resource="file:///C:/wabo4.eaf#a31"/>)"},
      {&ann, R"(<media:OntologyAnnotation rdf:ID="a42Value">)"},
      {&ann, "<media:hasUserDefinedTerm>PV</media:hasUserDefinedTerm>"},
      {&ann, R"(<media:hasInstances rdf:resource="http://www.u.arizona.edu/~farrar/gold.owl#Preverb"/>)"},
      {&ann, "<media:hasOntAnnotationDescription></media:hasOntAnnotationDescription>"},
      {&ann, "<media:hasOntAnnotationId>e</media:hasOntAnnotationId>"},
  };
  int missing = 0;
  std::string first;
  for (const auto& [block, line] : want)
    if (block->find(line) == std::string::npos) {
      if (!missing) first = line;
      ++missing;
    }
  std::ostringstream d;
  d << want.size() - missing << "/" << want.size() << " properties";
  if (missing) d << ", first missing " << first;
  return {missing == 0, d.str()};
}

Outcome hierarchy() {
  int rejected = 0, total = 0;
  std::string bad;
  auto expect = [&](const char* what, const char* code, const std::function<void(AnnotationDocument&)>& op) {
    AnnotationDocument d = build_wabo4();
    const AnnotationDocument before = d;
    ++total;
    if (error_of([&] { op(d); }) == code && d == before) {
      ++rejected;
    } else if (bad.empty()) {
      bad = what;
    }
  };
  bool built = validate_document(build_wabo4().data()).empty() && build_wabo4().data().tiers.size() == 6;

  // Root of every non-None type.
  for (const char* type : {"translation", "words", "parse", "gloss"})
    expect(type, "RootMustBeAlignable", [&](auto& d) { d.add_tier("X", type); });
  expect("ontology root", "RootMustBeAlignable", [](auto& d) { d.add_tier("X", "ontology", std::nullopt, "y.prf"); });
  // A second association on every association tier.
  expect("translation twice", "AssociationAlreadyFilled",
         [](auto& d) { d.add_referring_annotation("Translation", "a1", StringValue{"x"}); });
  for (const char* ref : {"a20", "a21", "a22"})
    expect("gloss twice", "AssociationAlreadyFilled",
           [&](auto& d) { d.add_referring_annotation("Gloss", ref, StringValue{"x"}); });
  for (const char* ref : {"a30", "a31"})
    expect("ontology twice", "AssociationAlreadyFilled", [&](auto& d) {
      OntologicalRequest r;
      r.user_term = "PV";
      d.add_referring_annotation("Ontology", ref, d.make_ontological_value("Ontology", r, wabo_profile(), gold()));
    });
  // Ontological tiers without a profile, under every possible parent.
  for (const char* parent : {"Orthographic", "Translation", "Words", "Parse", "Gloss", "Ontology"})
    expect("no profile", "ProfileRequired", [&](auto& d) { d.add_tier("X", "ontology", parent); });
  // A second tier on the same profile, under every possible parent.
  for (const char* parent : {"Orthographic", "Translation", "Words", "Parse", "Gloss", "Ontology"})
    expect("profile reuse", "ProfileAlreadyBound",
           [&](auto& d) { d.add_tier("X", "ontology", parent, kWaboProfileRef); });
  // None-typed tiers under a parent.
  for (const char* parent : {"Orthographic", "Gloss"})
    expect("None with parent", "ParentForbidden", [&](auto& d) { d.add_tier("X", "orthography", parent); });

  std::ostringstream d;
  d << "six tiers " << (built ? "built" : "NOT built") << ", " << rejected << "/" << total << " violations rejected";
  if (!bad.empty()) d << ", first miss: " << bad;
  return {built && rejected == total, d.str()};
}

Outcome cascade(int docs) {
  std::mt19937_64 rng(1001);
  long checks = 0, mismatches = 0;
  for (int i = 0; i < docs; ++i) {
    AnnotationDocument doc = random_document(rng);
    const auto& data = doc.data();
    for (const auto& t : data.tiers) {
      AnnotationDocument copy = doc;
      auto tiers = tier_closure(data, t.id);
      auto anns = annotations_on_tiers(data, tiers);
      auto r = copy.delete_tier(t.id);
      ++checks;
      mismatches += as_set(r.tiers) != tiers || as_set(r.annotations) != anns ||
                    as_set(r.slots) != orphaned_slots(data, anns);
    }
    for (const auto& [id, _] : data.annotations) {
      AnnotationDocument copy = doc;
      auto anns = annotation_closure(data, id);
      auto r = copy.delete_annotation(id);
      ++checks;
      mismatches += as_set(r.annotations) != anns || as_set(r.slots) != orphaned_slots(data, anns);
    }
  }
  std::ostringstream d;
  d << docs << " documents, " << checks << " deletions, " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

Outcome alignment(int docs) {
  std::mt19937_64 rng(2002);
  long checks = 0, mismatches = 0, moves = 0;
  auto compare = [&](const AnnotationDocument& d) {
    for (const auto& [id, _] : d.data().annotations) {
      ++checks;
      mismatches += d.resolve_alignment(id) != walk_alignment(d.data(), id);
    }
  };
  for (int i = 0; i < docs; ++i) {
    AnnotationDocument doc = random_document(rng);
    compare(doc);
    for (int m = 0; m < 4 && !doc.data().time_order.empty(); ++m) {
      const auto& order = doc.data().time_order;
      std::string slot = order[std::uniform_int_distribution<size_t>(0, order.size() - 1)(rng)].id;
      auto t = std::uniform_int_distribution<std::int64_t>(0, 2000)(rng);
      if (!error_of([&] { doc.move_time_slot(slot, t); }).empty()) continue;
      ++moves;
      compare(doc);
    }
  }
  std::ostringstream d;
  d << docs << " documents, " << moves << " moves, " << checks << " resolutions, " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

Outcome round_trip(int docs) {
  std::mt19937_64 rng(3003);
  int mismatches = 0;
  for (int i = 0; i < docs; ++i) {
    AnnotationDocument d = random_document(rng);
    mismatches += !(parse_document(serialize_document(d, "urn:doc:" + std::to_string(i))) == d);
  }
  bool fixture = parse_document(read_file(fixture_path("wabo4.eaf"))) == build_wabo4() &&
                 parse_document(serialize_document(build_wabo4(), kWaboBase)) == build_wabo4();
  std::ostringstream d;
  d << docs << " documents, " << mismatches << " mismatches, fixture " << (fixture ? "equal" : "differs");
  return {mismatches == 0 && fixture, d.str()};
}

Outcome search(int docs) {
  std::mt19937_64 rng(4004);
  long queries = 0, mismatches = 0;
  const std::vector<std::string> texts = {"", "a", "E", "&", "é", "ab"};
  const std::vector<std::string> terms = {"NI", "PV", "PC", gold_iri("Preverb"), gold_iri("Noun"),
                                          gold_iri("Participle"), gold_iri("Verb"), gold_iri("Entity")};
  for (int i = 0; i < docs; ++i) {
    AnnotationDocument d = random_document(rng);
    for (const auto& q : texts)
      for (bool cs : {true, false}) {
        ++queries;
        mismatches += search_text(d, {q, cs, {}}) != scan_text(d.data(), {q, cs, {}});
      }
    for (const auto& t : terms) {
      queries += 2;
      mismatches += search_term(d, {t}) != scan_term(d.data(), t);
      mismatches += search_term(d, {t, &gold(), true}) != scan_term(d.data(), t, &gold());
    }
  }
  auto hits = search_term(build_wabo4(), {gold_iri("Preverb")});
  bool preverb = hits.size() == 1 && hits[0].annotation == "a42";
  std::ostringstream d;
  d << queries << " queries on " << docs << " documents, " << mismatches << " mismatches, Preverb -> "
    << (preverb ? "a42" : "wrong hits");
  return {mismatches == 0 && preverb, d.str()};
}

Outcome ontology_loader() {
  const Ontology& o = gold();
  int classes = 0, individuals = 0, multi = 0;
  std::set<std::pair<std::string, std::string>> parent_edges, tree_edges;
  for (const auto& [iri, t] : o.terms()) {
    (t.kind == TermKind::Class ? classes : individuals)++;
    multi += t.parents.size() > 1;
    for (const auto& p : t.parents) parent_edges.insert({p, iri});
  }
  std::function<void(const TreeNode&)> walk = [&](const TreeNode& n) {
    for (const auto& c : n.children) {
      tree_edges.insert({n.iri, c.iri});
      walk(c);
    }
  };
  for (const auto& r : o.term_tree()) walk(r);

  auto index = o.list_terms();
  bool sorted = index.size() == o.terms().size();
  auto key = [](const TermDescriptor& t) {
    std::string l = t.label;
    for (auto& c : l) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return std::pair{l, t.iri};
  };
  for (size_t i = 1; i < index.size(); ++i) sorted = sorted && key(index[i - 1]) < key(index[i]);

  // DAG: repeatedly strip terms whose parents are all stripped.
  std::set<std::string> stripped;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [iri, t] : o.terms()) {
      if (stripped.count(iri)) continue;
      bool ready = true;
      for (const auto& p : t.parents) ready = ready && (stripped.count(p) || !o.terms().count(p));
      if (ready) {
        stripped.insert(iri);
        grew = true;
      }
    }
  }
  bool dag = stripped.size() == o.terms().size();
  bool kinds = o.resolve_term("Preverb").kind == TermKind::Individual && o.resolve_term("Noun").kind == TermKind::Class;
  bool naive = [&] {
    std::map<std::string, std::set<std::string>> got;
    for (const auto& [iri, t] : o.terms()) got[iri] = t.parents;
    return got == naive_parent_map(read_file(fixture_path("gold_sample.owl")), kGoldIri);
  }();

  bool ok = classes >= 50 && individuals >= 10 && multi > 0 && sorted && tree_edges == parent_edges && dag &&
            kinds && naive;
  std::ostringstream d;
  d << classes << " classes, " << individuals << " individuals, " << multi << " multi-parent, index "
    << (sorted ? "sorted" : "unsorted") << ", tree " << (tree_edges == parent_edges ? "==" : "!=")
    << " parents, DAG " << (dag ? "yes" : "no") << ", kinds " << (kinds ? "ok" : "wrong") << ", raw parents "
    << (naive ? "agree" : "disagree");
  return {ok, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;  // 0 when untimed
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"profile-golden", 1, profile_golden},
      {"markup-golden", 1, markup_golden},
      {"tier-hierarchy", 0, hierarchy},
      {"cascade", 30, [] { return cascade(1000); }},
      {"alignment", 0, [] { return alignment(1000); }},
      {"round-trip", 60, [] { return round_trip(500); }},
      {"search-oracle", 0, [] { return search(300); }},
      {"ontology-loader", 0, ontology_loader},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_s == 0 || secs < c.limit_s;
    bool pass = o.ok && in_time;
    all = all && pass;
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs << "s";
    if (c.limit_s) t << " (limit " << static_cast<int>(c.limit_s) << "s)";
    std::cout << (pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << "; " << t.str() << std::endl;
  }
  return all ? 0 : 1;
}
