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

#include "ontotier/profile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ontotier/error.hpp"
#include "ontotier/ontology.hpp"
#include "ontotier/xml.hpp"

namespace ontotier {

Profile::Profile(std::string author, std::string description,
                 std::string version, std::string source_ontology)
    : author_(std::move(author)),
      description_(std::move(description)),
      version_(std::move(version)),
      source_(std::move(source_ontology)) {
  if (source_.empty())
    throw Error(ErrorCode::EmptySource, "profile needs a source ontology");
}

bool Profile::contains(std::string_view name) const {
  return std::any_of(mappings_.begin(), mappings_.end(),
                     [&](const auto& m) { return m.term.name == name; });
}

void Profile::add_mapping(UserTerm term, const std::vector<std::string>& targets) {
  if (term.name.empty())
    throw Error(ErrorCode::InvalidUserTerm, "user-defined term needs a name");
  if (contains(term.name))
    throw Error(ErrorCode::DuplicateUserTerm,
                "user-defined term already exists: " + term.name);
  TermMapping m{std::move(term), {}};
  for (const auto& t : targets) {
    if (t.empty())
      throw Error(ErrorCode::InvalidUserTerm, "empty ontological term name");
    if (std::find(m.targets.begin(), m.targets.end(), t) == m.targets.end())
      m.targets.push_back(t);
  }
  if (m.targets.empty())
    throw Error(ErrorCode::EmptyTargets,
                "user-defined term " + m.term.name + " maps to no terms");
  mappings_.push_back(std::move(m));
}

void Profile::rename_user_term(std::string_view old_name, std::string new_name) {
  auto it = std::find_if(mappings_.begin(), mappings_.end(),
                         [&](const auto& m) { return m.term.name == old_name; });
  if (it == mappings_.end())
    throw Error(ErrorCode::NotFound,
                "no user-defined term " + std::string(old_name));
  if (new_name.empty())
    throw Error(ErrorCode::InvalidUserTerm, "user-defined term needs a name");
  if (new_name == old_name) return;
  if (contains(new_name))
    throw Error(ErrorCode::DuplicateUserTerm,
                "user-defined term already exists: " + new_name);
  it->term.name = std::move(new_name);
}

const std::vector<std::string>& Profile::lookup(std::string_view name) const {
  for (const auto& m : mappings_)
    if (m.term.name == name) return m.targets;
  throw Error(ErrorCode::NotFound, "no user-defined term " + std::string(name));
}

namespace {

const std::string& required(const xml::Element& el, std::string_view attr) {
  if (auto* v = el.attribute(attr)) return *v;
  throw Error(ErrorCode::SchemaViolation,
              "line " + std::to_string(el.line) + ": <" + el.local +
                  "> is missing " + std::string(attr));
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
}

}  // namespace

Profile parse_profile(std::string_view xml_bytes) {
  xml::Element root = xml::parse(xml_bytes);
  if (!root.ns.empty() || root.local != "PROFILE")
    throw Error(ErrorCode::SchemaViolation, "root element must be PROFILE");
  const auto& source = required(root, "SOURCE");
  if (source.empty())
    throw Error(ErrorCode::SchemaViolation, "PROFILE SOURCE is empty");
  Profile profile(required(root, "AUTHOR"), required(root, "DESCRIPTION"),
                  required(root, "VERSION"), source);
  if (!is_blank(root.text))
    throw Error(ErrorCode::SchemaViolation, "unexpected text inside PROFILE");

  for (const auto& term : root.children) {
    if (!term.ns.empty() || term.local != "USER_DEFINED_TERM")
      throw Error(ErrorCode::SchemaViolation,
                  "line " + std::to_string(term.line) + ": unexpected <" +
                      term.local + "> in PROFILE");
    UserTerm user{required(term, "NAME"), ""};
    if (auto* d = term.attribute("DESCRIPTION")) user.description = *d;
    std::vector<std::string> targets;
    for (const auto& target : term.children) {
      if (!target.ns.empty() || target.local != "ONTOLOGY_TERM")
        throw Error(ErrorCode::SchemaViolation,
                    "line " + std::to_string(target.line) + ": unexpected <" +
                        target.local + "> in USER_DEFINED_TERM");
      targets.push_back(required(target, "NAME"));
    }
    if (targets.empty())
      throw Error(ErrorCode::SchemaViolation,
                  "USER_DEFINED_TERM " + user.name + " has no ONTOLOGY_TERM");
    try {
      profile.add_mapping(std::move(user), targets);
    } catch (const Error& e) {
      throw Error(ErrorCode::SchemaViolation, e.what());
    }
  }
  return profile;
}

std::string serialize_profile(const Profile& profile) {
  xml::Writer w;
  std::vector<std::pair<std::string, std::string>> attrs = {
      {"AUTHOR", profile.author()},
      {"DESCRIPTION", profile.description()},
      {"VERSION", profile.version()},
      {"SOURCE", profile.source()}};
  if (profile.mappings().empty()) {
    w.empty("PROFILE", attrs);
    return w.finish();
  }
  w.open("PROFILE", attrs);
  for (const auto& m : profile.mappings()) {
    w.open("USER_DEFINED_TERM",
           {{"DESCRIPTION", m.term.description}, {"NAME", m.term.name}});
    for (const auto& t : m.targets) w.empty("ONTOLOGY_TERM", {{"NAME", t}});
    w.close();
  }
  return w.finish();
}

Profile load_profile_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_profile(ss.str());
}

void save_profile_file(const Profile& profile, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_profile(profile);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<ProfileIssue> validate_profile(const Profile& profile,
                                           const Ontology& ontology) {
  std::vector<ProfileIssue> issues;
  for (const auto& m : profile.mappings()) {
    for (const auto& target : m.targets) {
      try {
        ontology.resolve_term(target);
      } catch (const Error& e) {
        issues.push_back({m.term.name, target, std::string(e.name()), e.details()});
      }
    }
  }
  return issues;
}

}  // namespace ontotier
