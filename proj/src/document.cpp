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

#include "ontotier/document.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "ontotier/error.hpp"
#include "ontotier/ontology.hpp"
#include "ontotier/profile.hpp"

namespace ontotier {

std::string_view stereotype_name(Stereotype s) {
  switch (s) {
    case Stereotype::None: return "None";
    case Stereotype::TimeSubdivision: return "Time_Subdivision";
    case Stereotype::SymbolicSubdivision: return "Symbolic_Subdivision";
    case Stereotype::SymbolicAssociation: return "Symbolic_Association";
  }
  return "None";
}

std::optional<Stereotype> parse_stereotype(std::string_view name) {
  for (auto s : {Stereotype::None, Stereotype::TimeSubdivision,
                 Stereotype::SymbolicSubdivision, Stereotype::SymbolicAssociation})
    if (stereotype_name(s) == name) return s;
  return std::nullopt;
}

std::optional<std::string> linguistic_type_violation(const LinguisticType& t) {
  bool symbolic = t.stereotype == Stereotype::SymbolicSubdivision ||
                  t.stereotype == Stereotype::SymbolicAssociation;
  if (t.stereotype == Stereotype::None && t.ontological)
    return "an ontological type needs a referring stereotype";
  if (symbolic && t.time_alignable)
    return std::string(stereotype_name(t.stereotype)) + " cannot be time-alignable";
  if (!symbolic && !t.time_alignable)
    return std::string(stereotype_name(t.stereotype)) + " must be time-alignable";
  return std::nullopt;
}

bool is_ncname(std::string_view id) {
  if (id.empty()) return false;
  auto start = [](unsigned char c) {
    return std::isalpha(c) || c == '_' || c >= 0x80;
  };
  auto rest = [&](unsigned char c) {
    return start(c) || std::isdigit(c) || c == '-' || c == '.';
  };
  if (!start(static_cast<unsigned char>(id[0]))) return false;
  return std::all_of(id.begin() + 1, id.end(),
                     [&](char c) { return rest(static_cast<unsigned char>(c)); });
}

std::optional<std::string> Annotation::parent_annotation() const {
  if (auto* r = std::get_if<ReferringAnchor>(&anchor)) return r->ref;
  return std::get<AlignableAnchor>(anchor).parent;
}

// ---------------------------------------------------------------------------
// DocumentData lookups

const Tier* DocumentData::find_tier(std::string_view id) const {
  for (const auto& t : tiers)
    if (t.id == id) return &t;
  return nullptr;
}

const TimeSlot* DocumentData::find_slot(std::string_view id) const {
  for (const auto& s : time_order)
    if (s.id == id) return &s;
  return nullptr;
}

const Annotation* DocumentData::find_annotation(std::string_view id) const {
  auto it = annotations.find(std::string(id));
  return it == annotations.end() ? nullptr : &it->second;
}

const LinguisticType* DocumentData::type_of(const Tier& tier) const {
  auto it = types.find(tier.type);
  return it == types.end() ? nullptr : &it->second;
}

const LinguisticType* DocumentData::type_of_tier(std::string_view tier_id) const {
  const Tier* t = find_tier(tier_id);
  return t ? type_of(*t) : nullptr;
}

SlotOrder::SlotOrder(const DocumentData& doc) : doc_(doc) {
  for (size_t i = 0; i < doc.time_order.size(); ++i)
    pos_.emplace(doc.time_order[i].id, i);
}

int SlotOrder::compare(std::string_view a, std::string_view b) const {
  size_t pa = position(a), pb = position(b);
  const auto& ta = doc_.time_order[pa].time;
  const auto& tb = doc_.time_order[pb].time;
  if (ta && tb) return *ta < *tb ? -1 : (*ta > *tb ? 1 : 0);
  return pa < pb ? -1 : (pa > pb ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Helpers

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

bool is_symbolic(Stereotype s) {
  return s == Stereotype::SymbolicSubdivision ||
         s == Stereotype::SymbolicAssociation;
}

const std::set<std::string>& reserved_ids() {
  static const std::set<std::string> ids = {
      "Time_Subdivision", "Symbolic_Subdivision", "Symbolic_Association"};
  return ids;
}

// Index at which a slot with `time` goes: before the first timed slot that is
// strictly later, else at the end.
size_t insertion_point(const std::vector<TimeSlot>& order, std::int64_t time) {
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i].time && *order[i].time > time) return i;
  return order.size();
}

bool timed_sorted(const std::vector<TimeSlot>& order) {
  std::optional<std::int64_t> last;
  for (const auto& s : order) {
    if (!s.time) continue;
    if (last && *s.time < *last) return false;
    last = s.time;
  }
  return true;
}

// Checks every alignable annotation's interval against the slot order.
// Returns the first failure as (code, message).
std::optional<std::pair<ErrorCode, std::string>> interval_failure(
    const AnnotationDocument& doc) {
  const auto& data = doc.data();
  SlotOrder order(data);
  for (const auto& [id, a] : data.annotations) {
    const auto* anchor = std::get_if<AlignableAnchor>(&a.anchor);
    if (!anchor) continue;
    if (order.compare(anchor->begin, anchor->end) >= 0)
      return std::pair{ErrorCode::WouldInvertInterval,
                       "annotation " + id + " would end before it begins"};
    if (!anchor->parent) continue;
    auto [pb, pe] = doc.resolved_slots(*anchor->parent);
    if (order.compare(pb, anchor->begin) > 0 || order.compare(anchor->end, pe) > 0)
      return std::pair{ErrorCode::WouldEscapeParent,
                       "annotation " + id + " would leave its parent " +
                           *anchor->parent};
  }
  // Sibling overlap among time-subdivision units.
  std::map<std::pair<std::string, std::string>, std::vector<const AlignableAnchor*>> groups;
  for (const auto& [id, a] : data.annotations)
    if (const auto* anchor = std::get_if<AlignableAnchor>(&a.anchor);
        anchor && anchor->parent)
      groups[{a.tier, *anchor->parent}].push_back(anchor);
  for (const auto& [key, members] : groups)
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        if (order.compare(members[i]->begin, members[j]->end) < 0 &&
            order.compare(members[j]->begin, members[i]->end) < 0)
          return std::pair{ErrorCode::WouldOverlapSibling,
                           "units under " + key.second + " on tier " +
                               key.first + " would overlap"};
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// AnnotationDocument

AnnotationDocument::AnnotationDocument(DocumentMetadata meta,
                                       std::vector<MediaDescriptor> media) {
  data_.meta = std::move(meta);
  data_.media = std::move(media);
}

AnnotationDocument AnnotationDocument::from_data(DocumentData data) {
  AnnotationDocument doc;
  doc.data_ = std::move(data);
  return doc;
}

bool AnnotationDocument::id_in_use(std::string_view id) const {
  std::string key(id);
  if (reserved_ids().count(key) || data_.types.count(key) ||
      data_.find_tier(id) || data_.find_slot(id) || data_.annotations.count(key))
    return true;
  // Value nodes are stored as "<annotation id>Value".
  if (data_.annotations.count(key + "Value")) return true;
  constexpr std::string_view kSuffix = "Value";
  if (id.size() > kSuffix.size() && id.substr(id.size() - kSuffix.size()) == kSuffix &&
      data_.annotations.count(std::string(id.substr(0, id.size() - kSuffix.size()))))
    return true;
  return false;
}

void AnnotationDocument::claim_id(const std::string& id, bool is_tier) const {
  if (!is_ncname(id)) fail(ErrorCode::InvalidId, "not a valid identifier: '" + id + "'");
  if (is_tier && data_.find_tier(id)) fail(ErrorCode::DuplicateTier, "tier exists: " + id);
  if (id_in_use(id)) fail(ErrorCode::IdInUse, "identifier already in use: " + id);
}

std::string AnnotationDocument::fresh_id(std::string_view prefix) const {
  size_t n = prefix == "ts" ? data_.time_order.size() + 1 : data_.annotations.size() + 1;
  for (;; ++n) {
    std::string id = std::string(prefix) + std::to_string(n);
    if (!id_in_use(id)) return id;
  }
}

void AnnotationDocument::add_linguistic_type(LinguisticType type) {
  if (!is_ncname(type.id))
    fail(ErrorCode::InvalidId, "not a valid identifier: '" + type.id + "'");
  if (data_.types.count(type.id))
    fail(ErrorCode::DuplicateLinguisticType, "linguistic type exists: " + type.id);
  if (id_in_use(type.id)) fail(ErrorCode::IdInUse, "identifier already in use: " + type.id);
  if (auto why = linguistic_type_violation(type))
    fail(ErrorCode::InvalidLinguisticType, type.id + ": " + *why);
  auto id = type.id;
  data_.types.emplace(std::move(id), std::move(type));
}

void AnnotationDocument::add_tier(const std::string& id, const std::string& type,
                                  std::optional<std::string> parent,
                                  std::optional<std::string> profile) {
  claim_id(id, true);
  auto t = data_.types.find(type);
  if (t == data_.types.end())
    fail(ErrorCode::UnknownLinguisticType, "unknown linguistic type: " + type);
  const LinguisticType& lt = t->second;
  if (lt.stereotype == Stereotype::None) {
    if (parent)
      fail(ErrorCode::ParentForbidden,
           "tier " + id + " has type None and must be a root");
  } else if (!parent) {
    fail(ErrorCode::RootMustBeAlignable,
         "tier " + id + " has type " + std::string(stereotype_name(lt.stereotype)) +
             " and needs a parent tier");
  }
  if (parent && !data_.find_tier(*parent))
    fail(ErrorCode::UnknownParent, "unknown parent tier: " + *parent);
  if (lt.ontological && !profile)
    fail(ErrorCode::ProfileRequired, "ontological tier " + id + " needs a profile");
  if (!lt.ontological && profile)
    fail(ErrorCode::ProfileForbidden, "tier " + id + " is not ontological");
  if (profile)
    for (const auto& other : data_.tiers)
      if (other.profile == profile)
        fail(ErrorCode::ProfileAlreadyBound,
             "profile " + *profile + " is already bound to tier " + other.id);
  data_.tiers.push_back(Tier{id, type, std::move(parent), std::move(profile), {}});
}

std::vector<std::string> AnnotationDocument::child_tiers(std::string_view tier) const {
  std::vector<std::string> out;
  for (const auto& t : data_.tiers)
    if (t.parent && *t.parent == tier) out.push_back(t.id);
  return out;
}

std::vector<std::string> AnnotationDocument::annotations_on(std::string_view tier) const {
  std::vector<std::string> out;
  for (const auto& [id, a] : data_.annotations)
    if (a.tier == tier) out.push_back(id);
  return out;
}

std::vector<std::string> AnnotationDocument::child_annotations(
    std::string_view annotation) const {
  std::vector<std::string> out;
  for (const auto& [id, a] : data_.annotations)
    if (auto p = a.parent_annotation(); p && *p == annotation) out.push_back(id);
  return out;
}

DeletionResult AnnotationDocument::delete_tier(std::string_view id) {
  if (!data_.find_tier(id)) fail(ErrorCode::UnknownTier, "unknown tier: " + std::string(id));
  DeletionResult result;
  std::vector<std::string> stack{std::string(id)};
  while (!stack.empty()) {
    auto cur = std::move(stack.back());
    stack.pop_back();
    result.tiers.push_back(cur);
    auto kids = child_tiers(cur);
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  std::set<std::string> doomed(result.tiers.begin(), result.tiers.end());
  std::set<std::string> touched_slots;
  for (auto it = data_.annotations.begin(); it != data_.annotations.end();) {
    if (doomed.count(it->second.tier)) {
      if (auto* a = std::get_if<AlignableAnchor>(&it->second.anchor)) {
        touched_slots.insert(a->begin);
        touched_slots.insert(a->end);
      }
      result.annotations.push_back(it->first);
      it = data_.annotations.erase(it);
    } else {
      ++it;
    }
  }
  std::erase_if(data_.tiers, [&](const Tier& t) { return doomed.count(t.id) > 0; });
  std::set<std::string> still_used;
  for (const auto& [_, a] : data_.annotations)
    if (auto* al = std::get_if<AlignableAnchor>(&a.anchor)) {
      still_used.insert(al->begin);
      still_used.insert(al->end);
    }
  std::erase_if(data_.time_order, [&](const TimeSlot& s) {
    if (touched_slots.count(s.id) && !still_used.count(s.id)) {
      result.slots.push_back(s.id);
      return true;
    }
    return false;
  });
  return result;
}

std::string AnnotationDocument::add_time_slot(std::optional<std::int64_t> time) {
  if (time && *time < 0) fail(ErrorCode::NegativeTime, "time slots cannot be negative");
  TimeSlot slot{fresh_id("ts"), time, {}};
  auto id = slot.id;
  size_t at = time ? insertion_point(data_.time_order, *time) : data_.time_order.size();
  data_.time_order.insert(data_.time_order.begin() + static_cast<long>(at), std::move(slot));
  return id;
}

std::string AnnotationDocument::add_untimed_slot_after(std::string_view slot) {
  auto& order = data_.time_order;
  auto it = std::find_if(order.begin(), order.end(),
                         [&](const TimeSlot& s) { return s.id == slot; });
  if (it == order.end()) fail(ErrorCode::UnknownSlot, "unknown slot: " + std::string(slot));
  TimeSlot fresh{fresh_id("ts"), std::nullopt, {}};
  auto id = fresh.id;
  order.insert(it + 1, std::move(fresh));
  return id;
}

void AnnotationDocument::move_time_slot(std::string_view slot, std::int64_t time) {
  if (!data_.find_slot(slot)) fail(ErrorCode::UnknownSlot, "unknown slot: " + std::string(slot));
  if (time < 0) fail(ErrorCode::NegativeTime, "time slots cannot be negative");
  AnnotationDocument trial = *this;
  auto& order = trial.data_.time_order;
  auto it = std::find_if(order.begin(), order.end(),
                         [&](const TimeSlot& s) { return s.id == slot; });
  it->time = time;
  if (!timed_sorted(order)) {
    TimeSlot moved = std::move(*it);
    order.erase(it);
    size_t at = insertion_point(order, time);
    order.insert(order.begin() + static_cast<long>(at), std::move(moved));
  }
  if (auto failure = interval_failure(trial)) fail(failure->first, failure->second);
  data_ = std::move(trial.data_);
}

void AnnotationDocument::check_value_kind(const Tier& tier,
                                          const AnnotationValue& value) const {
  const auto* type = data_.type_of(tier);
  bool ontological = std::holds_alternative<OntologicalValue>(value);
  if (ontological && !type->ontological)
    fail(ErrorCode::NotOntologicalTier, "tier " + tier.id + " is not ontological");
  if (!ontological && type->ontological)
    fail(ErrorCode::ValueKindMismatch,
         "tier " + tier.id + " only takes values from its profile");
  if (ontological && std::get<OntologicalValue>(value).instances.empty())
    fail(ErrorCode::ValueKindMismatch, "ontological value lists no instances");
}

std::string AnnotationDocument::add_alignable_annotation(
    const std::string& tier_id, const std::string& begin, const std::string& end,
    AnnotationValue value, std::optional<std::string> id,
    std::optional<std::string> parent) {
  const Tier* tier = data_.find_tier(tier_id);
  if (!tier) fail(ErrorCode::UnknownTier, "unknown tier: " + tier_id);
  const auto* type = data_.type_of(*tier);
  if (!type->time_alignable)
    fail(ErrorCode::NotAlignableTier, "tier " + tier_id + " is not time-alignable");
  SlotOrder order(data_);
  for (const auto* s : {&begin, &end})
    if (!order.known(*s)) fail(ErrorCode::UnknownSlot, "unknown slot: " + *s);
  if (order.compare(begin, end) >= 0)
    fail(ErrorCode::InvertedInterval, "begin " + begin + " does not precede end " + end);
  check_value_kind(*tier, value);

  if (type->stereotype == Stereotype::TimeSubdivision) {
    auto contains = [&](const std::string& candidate) {
      auto [pb, pe] = resolved_slots(candidate);
      return order.compare(pb, begin) <= 0 && order.compare(end, pe) <= 0;
    };
    if (parent) {
      const Annotation* p = data_.find_annotation(*parent);
      if (!p) fail(ErrorCode::UnknownParentAnnotation, "unknown annotation: " + *parent);
      if (p->tier != *tier->parent)
        fail(ErrorCode::ParentOnWrongTier,
             *parent + " is not on parent tier " + *tier->parent);
      if (!contains(*parent))
        fail(ErrorCode::OutsideParentSlot, "interval lies outside " + *parent);
    } else {
      std::vector<std::string> candidates;
      for (const auto& pid : annotations_on(*tier->parent))
        if (contains(pid)) candidates.push_back(pid);
      if (candidates.empty())
        fail(ErrorCode::OutsideParentSlot,
             "no annotation on " + *tier->parent + " contains the interval");
      if (candidates.size() > 1)
        fail(ErrorCode::AmbiguousParentAnnotation,
             "several annotations on " + *tier->parent + " contain the interval");
      parent = candidates.front();
    }
    for (const auto& sid : annotations_on(tier_id)) {
      const auto& sib = std::get<AlignableAnchor>(data_.annotations.at(sid).anchor);
      if (sib.parent != parent) continue;
      if (order.compare(begin, sib.end) < 0 && order.compare(sib.begin, end) < 0)
        fail(ErrorCode::OverlapsSibling, "interval overlaps " + sid);
    }
  } else if (parent) {
    fail(ErrorCode::ParentOnWrongTier, "root tier annotations take no parent");
  }

  std::string aid = id ? *id : fresh_id("a");
  claim_id(aid);
  data_.annotations.emplace(
      aid, Annotation{aid, tier_id, AlignableAnchor{begin, end, std::move(parent)},
                      std::move(value), {}});
  return aid;
}

std::string AnnotationDocument::add_referring_annotation(
    const std::string& tier_id, const std::string& parent, AnnotationValue value,
    std::optional<std::int64_t> ordinal, std::optional<std::string> id) {
  const Tier* tier = data_.find_tier(tier_id);
  if (!tier) fail(ErrorCode::UnknownTier, "unknown tier: " + tier_id);
  const auto* type = data_.type_of(*tier);
  if (!tier->parent || !is_symbolic(type->stereotype))
    fail(ErrorCode::NotReferringTier, "tier " + tier_id + " does not hold referring annotations");
  const Annotation* p = data_.find_annotation(parent);
  if (!p) fail(ErrorCode::UnknownParentAnnotation, "unknown annotation: " + parent);
  if (p->tier != *tier->parent)
    fail(ErrorCode::ParentOnWrongTier, parent + " is not on parent tier " + *tier->parent);
  if (ordinal && *ordinal < 0) fail(ErrorCode::InvalidOrdinal, "ordinal must be >= 0");

  std::vector<Annotation*> siblings;
  for (auto& [sid, a] : data_.annotations)
    if (a.tier == tier_id)
      if (auto* r = std::get_if<ReferringAnchor>(&a.anchor); r && r->ref == parent)
        siblings.push_back(&a);

  std::int64_t slot_ordinal = 0;
  if (type->stereotype == Stereotype::SymbolicAssociation) {
    if (!siblings.empty())
      fail(ErrorCode::AssociationAlreadyFilled,
           parent + " already has an annotation on tier " + tier_id);
    if (ordinal && *ordinal != 0)
      fail(ErrorCode::InvalidOrdinal, "association annotations have ordinal 0");
  } else if (ordinal) {
    slot_ordinal = *ordinal;
  } else {
    for (auto* s : siblings)
      slot_ordinal = std::max(slot_ordinal, std::get<ReferringAnchor>(s->anchor).ordinal + 1);
  }
  check_value_kind(*tier, value);
  std::string aid = id ? *id : fresh_id("a");
  claim_id(aid);

  bool taken = std::any_of(siblings.begin(), siblings.end(), [&](Annotation* s) {
    return std::get<ReferringAnchor>(s->anchor).ordinal == slot_ordinal;
  });
  if (taken)
    for (auto* s : siblings) {
      auto& r = std::get<ReferringAnchor>(s->anchor);
      if (r.ordinal >= slot_ordinal) ++r.ordinal;
    }
  data_.annotations.emplace(
      aid, Annotation{aid, tier_id, ReferringAnchor{parent, slot_ordinal},
                      std::move(value), {}});
  return aid;
}

OntologicalValue AnnotationDocument::make_ontological_value(
    std::string_view tier_id, const OntologicalRequest& request,
    const Profile& profile, const Ontology& ontology,
    std::string_view replacing) const {
  const Tier* tier = data_.find_tier(tier_id);
  if (!tier) fail(ErrorCode::UnknownTier, "unknown tier: " + std::string(tier_id));
  if (!data_.type_of(*tier)->ontological)
    fail(ErrorCode::NotOntologicalTier, "tier " + tier->id + " is not ontological");
  if (!profile.contains(request.user_term))
    fail(ErrorCode::UnknownUserTerm,
         "profile has no user-defined term " + request.user_term);

  std::set<std::string> taken;
  for (const auto& [id, a] : data_.annotations) {
    if (id == replacing) continue;
    if (const auto* v = std::get_if<OntologicalValue>(&a.value))
      for (const auto& m : v->minted) taken.insert(m.iri);
  }

  OntologicalValue value;
  value.ont_annotation_id = request.ont_annotation_id;
  value.user_term = request.user_term;
  value.description = request.description;
  for (const auto& target : profile.lookup(request.user_term)) {
    const TermDescriptor* term = nullptr;
    try {
      term = &ontology.resolve_term(target);
    } catch (const Error& e) {
      throw Error(ErrorCode::UnresolvedTerm,
                  "profile term " + target + " does not resolve: " + e.what(),
                  e.details());
    }
    if (term->kind == TermKind::Individual) {
      value.instances.push_back(term->iri);
      continue;
    }
    auto spec = request.instances.find(target);
    if (spec == request.instances.end()) spec = request.instances.find(term->iri);
    if (spec == request.instances.end() || spec->second.name.empty())
      fail(ErrorCode::MissingInstanceName,
           "an instance name is needed for class " + term->iri);
    if (term->has_restrictions && spec->second.fills.empty())
      fail(ErrorCode::MissingPropertyFills,
           "class " + term->iri + " is restricted; property values are needed");
    const auto& name = spec->second.name;
    std::string iri = TermIRI::is_valid(name) && name.find(':') != std::string::npos &&
                              name.find("//") != std::string::npos
                          ? name
                          : std::string(iri_namespace(term->iri)) + name;
    if (!TermIRI::is_valid(iri))
      fail(ErrorCode::InvalidId, "cannot mint an instance IRI from '" + name + "'");
    if (ontology.find(iri) || !taken.insert(iri).second)
      fail(ErrorCode::DuplicateInstance, "instance " + iri + " already exists");
    MintedInstance minted{iri, term->iri, {}};
    for (const auto& [prop, v] : spec->second.fills) {
      std::string prop_iri = TermIRI::is_valid(prop) && prop.find("//") != std::string::npos
                                 ? prop
                                 : std::string(iri_namespace(term->iri)) + prop;
      minted.fills.emplace_back(std::move(prop_iri), v);
    }
    value.instances.push_back(iri);
    value.minted.push_back(std::move(minted));
  }
  return value;
}

void AnnotationDocument::set_ontological_value(std::string_view annotation,
                                               const OntologicalRequest& request,
                                               const Profile& profile,
                                               const Ontology& ontology) {
  auto it = data_.annotations.find(std::string(annotation));
  if (it == data_.annotations.end())
    fail(ErrorCode::UnknownAnnotation, "unknown annotation: " + std::string(annotation));
  auto value = make_ontological_value(it->second.tier, request, profile, ontology, annotation);
  it->second.value = std::move(value);
}

void AnnotationDocument::set_string_value(std::string_view annotation, std::string text) {
  auto it = data_.annotations.find(std::string(annotation));
  if (it == data_.annotations.end())
    fail(ErrorCode::UnknownAnnotation, "unknown annotation: " + std::string(annotation));
  AnnotationValue value = StringValue{std::move(text)};
  check_value_kind(*data_.find_tier(it->second.tier), value);
  it->second.value = std::move(value);
}

DeletionResult AnnotationDocument::delete_annotation(std::string_view id) {
  if (!data_.find_annotation(id))
    fail(ErrorCode::UnknownAnnotation, "unknown annotation: " + std::string(id));
  std::map<std::string, std::vector<std::string>> children;
  for (const auto& [aid, a] : data_.annotations)
    if (auto p = a.parent_annotation()) children[*p].push_back(aid);

  DeletionResult result;
  std::set<std::string> doomed{std::string(id)};
  std::deque<std::string> queue{std::string(id)};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    result.annotations.push_back(cur);
    for (const auto& c : children[cur])
      if (doomed.insert(c).second) queue.push_back(c);
  }
  std::set<std::string> touched;
  for (const auto& aid : doomed) {
    const auto& a = data_.annotations.at(aid);
    if (auto* al = std::get_if<AlignableAnchor>(&a.anchor)) {
      touched.insert(al->begin);
      touched.insert(al->end);
    }
    data_.annotations.erase(aid);
  }
  std::set<std::string> still_used;
  for (const auto& [_, a] : data_.annotations)
    if (auto* al = std::get_if<AlignableAnchor>(&a.anchor)) {
      still_used.insert(al->begin);
      still_used.insert(al->end);
    }
  std::erase_if(data_.time_order, [&](const TimeSlot& s) {
    if (touched.count(s.id) && !still_used.count(s.id)) {
      result.slots.push_back(s.id);
      return true;
    }
    return false;
  });
  return result;
}

std::pair<std::string, std::string> AnnotationDocument::resolved_slots(
    std::string_view annotation) const {
  const Annotation* a = data_.find_annotation(annotation);
  if (!a) fail(ErrorCode::UnknownAnnotation, "unknown annotation: " + std::string(annotation));
  for (size_t steps = 0; steps <= data_.annotations.size(); ++steps) {
    if (const auto* al = std::get_if<AlignableAnchor>(&a->anchor))
      return {al->begin, al->end};
    const auto& ref = std::get<ReferringAnchor>(a->anchor).ref;
    a = data_.find_annotation(ref);
    if (!a)
      fail(ErrorCode::UnknownParentAnnotation,
           "reference chain of " + std::string(annotation) + " is dangling at " + ref);
  }
  fail(ErrorCode::CycleDetected,
       "reference chain of " + std::string(annotation) + " loops");
}

std::optional<Interval> AnnotationDocument::resolve_alignment(
    std::string_view annotation) const {
  auto [b, e] = resolved_slots(annotation);
  const TimeSlot* begin = data_.find_slot(b);
  const TimeSlot* end = data_.find_slot(e);
  if (!begin || !end || !begin->time || !end->time) return std::nullopt;
  return Interval{*begin->time, *end->time};
}

}  // namespace ontotier
