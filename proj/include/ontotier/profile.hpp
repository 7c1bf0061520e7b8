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

#ifndef ONTOTIER_PROFILE_HPP_
#define ONTOTIER_PROFILE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace ontotier {

class Ontology;

struct UserTerm {
  std::string name;
  std::string description;

  bool operator==(const UserTerm&) const = default;
};

struct TermMapping {
  UserTerm term;
  // Ontological term names as written in the profile, in display order.
  std::vector<std::string> targets;

  bool operator==(const TermMapping&) const = default;
};

// A language profile: user-defined terms mapped many-to-many onto the terms
// of one source ontology. Mutators either succeed or leave the profile as it
// was.
class Profile {
 public:
  // Throws EmptySource when `source_ontology` is empty.
  Profile(std::string author, std::string description, std::string version,
          std::string source_ontology);

  const std::string& author() const { return author_; }
  const std::string& description() const { return description_; }
  const std::string& version() const { return version_; }
  const std::string& source() const { return source_; }
  const std::vector<TermMapping>& mappings() const { return mappings_; }

  // Duplicate targets collapse onto their first occurrence.
  void add_mapping(UserTerm term, const std::vector<std::string>& targets);
  void rename_user_term(std::string_view old_name, std::string new_name);
  const std::vector<std::string>& lookup(std::string_view name) const;
  bool contains(std::string_view name) const;

  bool operator==(const Profile&) const = default;

 private:
  std::string author_;
  std::string description_;
  std::string version_;
  std::string source_;
  std::vector<TermMapping> mappings_;
};

Profile parse_profile(std::string_view xml_bytes);
std::string serialize_profile(const Profile& profile);

Profile load_profile_file(const std::string& path);
void save_profile_file(const Profile& profile, const std::string& path);

struct ProfileIssue {
  std::string user_term;
  std::string target;
  // "NotFound" or "Ambiguous".
  std::string reason;
  std::vector<std::string> candidates;

  bool operator==(const ProfileIssue&) const = default;
};

// One entry per mapping target that does not resolve to exactly one term.
std::vector<ProfileIssue> validate_profile(const Profile& profile,
                                           const Ontology& ontology);

}  // namespace ontotier

#endif  // ONTOTIER_PROFILE_HPP_
