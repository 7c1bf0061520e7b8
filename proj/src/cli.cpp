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

#include "ontotier/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "ontotier/error.hpp"
#include "ontotier/json_codec.hpp"
#include "ontotier/persistence.hpp"
#include "ontotier/search.hpp"
#include "ontotier/service.hpp"

namespace ontotier {
namespace {

namespace fs = std::filesystem;

// Failures that are the caller's fault rather than the data's.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string basename_of(std::string_view ref) {
  auto cut = ref.find_last_of("/\\");
  return std::string(cut == std::string_view::npos ? ref : ref.substr(cut + 1));
}

void print_issue(std::ostream& out, const Issue& i) {
  out << i.level << ' ' << i.locus << ' ' << i.code << ": " << i.message << '\n';
}

struct ValidateArgs {
  std::string doc;
  std::string ontology;
  std::string profiles;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  std::optional<Ontology> ontology;
  if (!a.ontology.empty()) ontology = load_ontology_file(a.ontology);
  std::map<std::string, Profile> available;
  if (!a.profiles.empty()) {
    if (!fs::is_directory(a.profiles)) throw std::runtime_error("not a directory: " + a.profiles);
    for (const auto& entry : fs::directory_iterator(a.profiles))
      if (entry.path().extension() == ".prf")
        available.emplace(entry.path().filename().string(), load_profile_file(entry.path().string()));
  }

  AnnotationDocument doc;
  try {
    doc = load_document_file(a.doc);
  } catch (const Error& e) {
    print_issue(out, {"ERROR", "document", std::string(e.name()), e.what()});
    return 1;
  }

  // Profiles bind to tiers by the file name of the tier's profile reference.
  std::map<std::string, Profile> bound;
  for (const auto& t : doc.data().tiers)
    if (t.profile)
      if (auto it = available.find(basename_of(*t.profile)); it != available.end())
        bound.emplace(*t.profile, it->second);

  auto issues = validate_document(doc.data(), ontology ? &*ontology : nullptr,
                                  a.profiles.empty() ? nullptr : &bound);
  for (const auto& i : issues) print_issue(out, i);
  return issues.empty() ? 0 : 1;
}

std::string time_text(const std::optional<Interval>& iv, bool begin) {
  if (!iv) return "-";
  return std::to_string(begin ? iv->begin : iv->end);
}

struct SearchArgs {
  std::string doc;
  std::string text;
  std::string term;
  std::string ontology;
  std::vector<std::string> tiers;
  bool ignore_case = false;
  bool expand = false;
  bool json = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  if (a.text.empty() == a.term.empty()) throw UsageError("give exactly one of --text or --term");
  AnnotationDocument doc = load_document_file(a.doc);
  std::vector<SearchHit> hits;
  std::optional<Ontology> ontology;
  if (!a.text.empty()) {
    TextQuery q{a.text, !a.ignore_case, {a.tiers.begin(), a.tiers.end()}};
    hits = search_text(doc, q);
  } else {
    TermQuery q{a.term};
    if (!a.ontology.empty()) {
      ontology = load_ontology_file(a.ontology);
      q.ontology = &*ontology;
      q.expand_subclasses = a.expand;
    }
    hits = search_term(doc, q);
  }
  if (a.json) {
    out << hits_to_json(hits).dump(2) << '\n';
    return 0;
  }
  for (const auto& h : hits)
    out << h.tier << '\t' << h.annotation << '\t' << time_text(h.interval, true) << '\t'
        << time_text(h.interval, false) << '\t' << h.value << '\n';
  return 0;
}

void print_tier(const AnnotationDocument& doc, const std::string& id, int depth, std::ostream& out) {
  const Tier* t = doc.data().find_tier(id);
  const LinguisticType* type = doc.data().type_of(*t);
  out << std::string(2 * depth, ' ') << id << " [" << t->type;
  if (type) out << ", " << stereotype_name(type->stereotype) << (type->ontological ? ", ontological" : "");
  out << "] " << doc.annotations_on(id).size() << " annotations\n";
  for (const auto& c : doc.child_tiers(id)) print_tier(doc, c, depth + 1, out);
}

int cmd_info(const std::string& path, bool json, std::ostream& out) {
  AnnotationDocument doc = load_document_file(path);
  if (json) {
    out << document_to_json(doc).dump(2) << '\n';
    return 0;
  }
  for (const auto& t : doc.data().tiers)
    if (!t.parent || !doc.data().find_tier(*t.parent)) print_tier(doc, t.id, 0, out);
  out << doc.data().tiers.size() << " tiers\n";
  return 0;
}

int cmd_convert(const std::string& path, const std::string& base, const std::string& output,
                bool json, std::ostream& out) {
  AnnotationDocument doc = load_document_file(path);
  std::string bytes = json ? document_to_json(doc).dump(2) + "\n"
                           : serialize_document(doc, base.empty() ? file_iri(path) : base);
  if (output.empty()) {
    out << bytes;
    return 0;
  }
  std::ofstream f(output, std::ios::binary | std::ios::trunc);
  if (!f || !(f << bytes)) throw std::runtime_error("cannot write " + output);
  return 0;
}

struct ProfileArgs {
  std::string file;
  std::string author, description, version, source;
  std::string name, new_name, term_description;
  std::vector<std::string> targets;
  std::string ontology;
};

int cmd_profile_check(const ProfileArgs& a, std::ostream& out) {
  Profile p = load_profile_file(a.file);
  Ontology o = load_ontology_file(a.ontology);
  auto issues = validate_profile(p, o);
  for (const auto& i : issues) {
    out << i.user_term << '\t' << i.target << '\t' << i.reason;
    for (size_t k = 0; k < i.candidates.size(); ++k) out << (k ? ',' : '\t') << i.candidates[k];
    out << '\n';
  }
  return issues.empty() ? 0 : 1;
}

struct ServeArgs {
  int port = 0;
  std::string host = "0.0.0.0";
  std::vector<std::string> ontologies, profiles, docs;
};

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

int cmd_serve(const ServeArgs& a, std::ostream& out) {
  Service service;
  for (const auto& f : a.ontologies) service.put_ontology(stem(f), load_ontology_file(f));
  for (const auto& f : a.profiles) service.put_profile(fs::path(f).filename().string(), load_profile_file(f));
  for (const auto& f : a.docs) service.put_document(stem(f), load_document_file(f), file_iri(f));
  int port = a.port ? a.port : service_port_from_env();
  out << "listening on " << a.host << ':' << port << std::endl;
  return service.listen(a.host, port) ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tiered, time-aligned annotation documents with ontology-backed values", "ontotier"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check a document's invariants");
  validate->add_option("doc", va.doc, "Annotation document")->required();
  validate->add_option("--ontology", va.ontology, "Ontology for checking ontological values");
  validate->add_option("--profiles", va.profiles, "Directory of .prf files");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Find annotations by text or ontology term");
  search->add_option("doc", sa.doc, "Annotation document")->required();
  search->add_option("--text", sa.text, "Substring of string values");
  search->add_option("--term", sa.term, "Term IRI or user-defined term");
  search->add_option("--tier", sa.tiers, "Restrict text search to these tiers");
  search->add_flag("--ignore-case", sa.ignore_case, "ASCII case-insensitive text match");
  search->add_option("--ontology", sa.ontology, "Ontology for --expand");
  search->add_flag("--expand", sa.expand, "Also match subclasses of a class term");
  search->add_flag("--json", sa.json, "Emit a JSON array");

  std::string info_doc;
  bool info_json = false;
  auto* info = app.add_subcommand("info", "Print the tier tree with annotation counts");
  info->add_option("doc", info_doc, "Annotation document")->required();
  info->add_flag("--json", info_json, "Emit the whole document as JSON");

  std::string conv_doc, conv_base, conv_out;
  bool conv_json = false;
  auto* convert = app.add_subcommand("convert", "Rewrite a document as RDF/XML or JSON");
  convert->add_option("doc", conv_doc, "Annotation document")->required();
  convert->add_option("--base", conv_base, "Base IRI of the output");
  convert->add_option("-o,--output", conv_out, "Output file (default: standard output)");
  convert->add_flag("--json", conv_json, "Emit JSON");

  ProfileArgs pa;
  auto* profile = app.add_subcommand("profile", "Create and edit language profiles");
  profile->require_subcommand(1);
  auto* pnew = profile->add_subcommand("new", "Create an empty profile");
  pnew->add_option("--author", pa.author);
  pnew->add_option("--desc", pa.description);
  pnew->add_option("--version", pa.version);
  pnew->add_option("--source", pa.source, "Source ontology IRI")->required();
  pnew->add_option("file", pa.file)->required();
  auto* padd = profile->add_subcommand("add-term", "Map a user-defined term onto ontology terms");
  padd->add_option("file", pa.file)->required();
  padd->add_option("name", pa.name)->required();
  padd->add_option("targets", pa.targets)->required();
  padd->add_option("--desc", pa.term_description);
  auto* prename = profile->add_subcommand("rename", "Rename a user-defined term");
  prename->add_option("file", pa.file)->required();
  prename->add_option("old", pa.name)->required();
  prename->add_option("new", pa.new_name)->required();
  auto* pcheck = profile->add_subcommand("check", "Resolve every mapping target");
  pcheck->add_option("file", pa.file)->required();
  pcheck->add_option("--ontology", pa.ontology)->required();

  ServeArgs sv;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", sv.port, "Listen port (default: $PORT or 8470)");
  serve->add_option("--host", sv.host);
  serve->add_option("--ontology", sv.ontologies, "Preload ontologies (id = file stem)");
  serve->add_option("--profile", sv.profiles, "Preload profiles (id = file name)");
  serve->add_option("--doc", sv.docs, "Preload documents (id = file stem)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(va, out);
    if (*search) return cmd_search(sa, out);
    if (*info) return cmd_info(info_doc, info_json, out);
    if (*convert) return cmd_convert(conv_doc, conv_base, conv_out, conv_json, out);
    if (*serve) return cmd_serve(sv, out);
    if (*pnew) {
      save_profile_file(Profile(pa.author, pa.description, pa.version, pa.source), pa.file);
      return 0;
    }
    if (*padd) {
      Profile p = load_profile_file(pa.file);
      p.add_mapping({pa.name, pa.term_description}, pa.targets);
      save_profile_file(p, pa.file);
      return 0;
    }
    if (*prename) {
      Profile p = load_profile_file(pa.file);
      p.rename_user_term(pa.name, pa.new_name);
      save_profile_file(p, pa.file);
      return 0;
    }
    if (*pcheck) return cmd_profile_check(pa, out);
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ontotier
