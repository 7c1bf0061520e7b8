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

// Tiered, time-aligned annotation documents.
//
// A document owns linguistic types, tiers arranged as a forest, an ordered
// list of time slots, and annotations. Alignable annotations sit on a pair of
// slots; referring annotations point at an annotation on the parent tier and
// inherit its interval. Every mutating member either applies completely or
// throws ontotier::Error and leaves the document untouched.

#ifndef ONTOTIER_DOCUMENT_HPP_
#define ONTOTIER_DOCUMENT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ontotier {

class Ontology;
class Profile;

enum class Stereotype {
  None,
  TimeSubdivision,
  SymbolicSubdivision,
  SymbolicAssociation,
};

// "None", "Time_Subdivision", "Symbolic_Subdivision", "Symbolic_Association".
std::string_view stereotype_name(Stereotype s);
std::optional<Stereotype> parse_stereotype(std::string_view name);

// A property read from a stored document that this library does not model.
// Kept so it can be written back out unchanged.
struct ExtraProperty {
  std::string ns;
  std::string local;
  std::optional<std::string> resource;
  std::string text;

  bool operator==(const ExtraProperty&) const = default;
};

struct LinguisticType {
  std::string id;
  Stereotype stereotype = Stereotype::None;
  bool ontological = false;
  bool time_alignable = true;
  bool graphic_ref = false;
  std::vector<ExtraProperty> extra;

  bool operator==(const LinguisticType&) const = default;
};

// Empty when the type's flags are mutually consistent.
std::optional<std::string> linguistic_type_violation(const LinguisticType& t);

struct TimeSlot {
  std::string id;
  std::optional<std::int64_t> time;
  std::vector<ExtraProperty> extra;

  bool operator==(const TimeSlot&) const = default;
};

struct Tier {
  std::string id;
  std::string type;
  std::optional<std::string> parent;
  // Profile reference exactly as authored, e.g. a file path.
  std::optional<std::string> profile;
  std::vector<ExtraProperty> extra;

  bool operator==(const Tier&) const = default;
};

struct AlignableAnchor {
  std::string begin;
  std::string end;
  // Enclosing annotation for time-subdivision tiers.
  std::optional<std::string> parent;

  bool operator==(const AlignableAnchor&) const = default;
};

struct ReferringAnchor {
  std::string ref;
  std::int64_t ordinal = 0;

  bool operator==(const ReferringAnchor&) const = default;
};

struct StringValue {
  std::string text;

  bool operator==(const StringValue&) const = default;
};

// An instance created for a class-typed ontological term.
struct MintedInstance {
  std::string iri;
  std::string type;
  // (property IRI, literal value), in entry order.
  std::vector<std::pair<std::string, std::string>> fills;

  bool operator==(const MintedInstance&) const = default;
};

struct OntologicalValue {
  std::string ont_annotation_id;
  std::string user_term;
  // One IRI per ontological term the user term maps to.
  std::vector<std::string> instances;
  std::string description;
  std::vector<MintedInstance> minted;

  bool operator==(const OntologicalValue&) const = default;
};

using AnnotationValue = std::variant<StringValue, OntologicalValue>;

struct Annotation {
  std::string id;
  std::string tier;
  std::variant<AlignableAnchor, ReferringAnchor> anchor;
  AnnotationValue value;
  std::vector<ExtraProperty> extra;

  bool is_alignable() const { return std::holds_alternative<AlignableAnchor>(anchor); }
  bool is_ontological() const { return std::holds_alternative<OntologicalValue>(value); }
  // The enclosing annotation, if any: the ref of a referring annotation or the
  // parent of a time-subdivision unit.
  std::optional<std::string> parent_annotation() const;

  bool operator==(const Annotation&) const = default;
};

struct MediaDescriptor {
  std::string url;
  std::string mime_type;
  std::optional<std::int64_t> time_origin;
  std::vector<ExtraProperty> extra;

  bool operator==(const MediaDescriptor&) const = default;
};

struct DocumentMetadata {
  std::string author;
  std::string date;
  // Declared time unit; only milliseconds are interpreted.
  std::string time_unit = "milliseconds";
  std::vector<ExtraProperty> extra;

  bool operator==(const DocumentMetadata&) const = default;
};

// Plain storage. Equality is structural.
struct DocumentData {
  DocumentMetadata meta;
  std::vector<MediaDescriptor> media;
  std::map<std::string, LinguisticType> types;
  std::vector<TimeSlot> time_order;
  // Insertion order.
  std::vector<Tier> tiers;
  std::map<std::string, Annotation> annotations;

  const Tier* find_tier(std::string_view id) const;
  const TimeSlot* find_slot(std::string_view id) const;
  const Annotation* find_annotation(std::string_view id) const;
  const LinguisticType* type_of(const Tier& tier) const;
  const LinguisticType* type_of_tier(std::string_view tier_id) const;

  bool operator==(const DocumentData&) const = default;
};

struct Interval {
  std::int64_t begin = 0;
  std::int64_t end = 0;

  bool operator==(const Interval&) const = default;
};

struct DeletionResult {
  std::vector<std::string> tiers;
  std::vector<std::string> annotations;
  std::vector<std::string> slots;
};

struct InstanceSpec {
  std::string name;
  // (property IRI or name, literal value).
  std::vector<std::pair<std::string, std::string>> fills;
};

struct OntologicalRequest {
  std::string user_term;
  std::string ont_annotation_id;
  std::string description;
  // Keyed by the ontological term as written in the profile, or by its IRI.
  std::map<std::string, InstanceSpec> instances;
};

class AnnotationDocument {
 public:
  explicit AnnotationDocument(DocumentMetadata meta = {},
                              std::vector<MediaDescriptor> media = {});

  // Wraps already-built storage without checking it; see validate_document.
  static AnnotationDocument from_data(DocumentData data);

  const DocumentData& data() const { return data_; }

  void add_linguistic_type(LinguisticType type);

  void add_tier(const std::string& id, const std::string& type,
                std::optional<std::string> parent = std::nullopt,
                std::optional<std::string> profile = std::nullopt);
  // Removes the tier, its descendants and their annotations, plus slots left
  // unused. Tier ids come back in pre-order.
  DeletionResult delete_tier(std::string_view id);

  // Timed slots go before the first strictly later timed slot; untimed ones
  // are appended.
  std::string add_time_slot(std::optional<std::int64_t> time = std::nullopt);
  // An untimed slot placed directly after `slot` in the time order.
  std::string add_untimed_slot_after(std::string_view slot);
  void move_time_slot(std::string_view slot, std::int64_t time);

  std::string add_alignable_annotation(
      const std::string& tier, const std::string& begin, const std::string& end,
      AnnotationValue value, std::optional<std::string> id = std::nullopt,
      std::optional<std::string> parent = std::nullopt);
  std::string add_referring_annotation(
      const std::string& tier, const std::string& parent, AnnotationValue value,
      std::optional<std::int64_t> ordinal = std::nullopt,
      std::optional<std::string> id = std::nullopt);

  // Builds the value an ontological tier annotation would carry for
  // `request`, minting instance IRIs where the ontology calls for it.
  OntologicalValue make_ontological_value(
      std::string_view tier, const OntologicalRequest& request,
      const Profile& profile, const Ontology& ontology,
      std::string_view replacing = {}) const;
  void set_ontological_value(std::string_view annotation,
                             const OntologicalRequest& request,
                             const Profile& profile, const Ontology& ontology);
  void set_string_value(std::string_view annotation, std::string text);

  // Removes the annotation and everything that depends on it, plus any slot
  // the removed annotations used that nothing else uses.
  DeletionResult delete_annotation(std::string_view id);

  // Begin/end slots after walking up referring links.
  std::pair<std::string, std::string> resolved_slots(std::string_view annotation) const;
  // std::nullopt when either resolved slot carries no time.
  std::optional<Interval> resolve_alignment(std::string_view annotation) const;

  // Children of `tier` in insertion order.
  std::vector<std::string> child_tiers(std::string_view tier) const;
  std::vector<std::string> annotations_on(std::string_view tier) const;
  std::vector<std::string> child_annotations(std::string_view annotation) const;

  // True if `id` would clash with any identifier the stored form uses.
  bool id_in_use(std::string_view id) const;

  bool operator==(const AnnotationDocument& o) const { return data_ == o.data_; }

 private:
  std::string fresh_id(std::string_view prefix) const;
  void claim_id(const std::string& id, bool is_tier = false) const;
  void check_value_kind(const Tier& tier, const AnnotationValue& value) const;

  DocumentData data_;
};

// Slot order used for interval checks: by time when both slots are timed,
// otherwise by position in the time order.
class SlotOrder {
 public:
  explicit SlotOrder(const DocumentData& doc);
  bool known(std::string_view slot) const { return pos_.count(std::string(slot)) > 0; }
  int compare(std::string_view a, std::string_view b) const;
  size_t position(std::string_view slot) const { return pos_.at(std::string(slot)); }

 private:
  const DocumentData& doc_;
  std::map<std::string, size_t> pos_;
};

struct Issue {
  std::string level;  // "ERROR"
  std::string locus;
  std::string code;
  std::string message;

  bool operator==(const Issue&) const = default;
};

// Reports every violated document invariant. When an ontology and the
// profiles bound to ontological tiers (keyed by the tier's profile reference)
// are supplied, ontological values are also checked against them.
std::vector<Issue> validate_document(
    const DocumentData& doc, const Ontology* ontology = nullptr,
    const std::map<std::string, Profile>* profiles = nullptr);

bool is_ncname(std::string_view id);

}  // namespace ontotier

#endif  // ONTOTIER_DOCUMENT_HPP_
