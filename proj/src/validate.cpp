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

#include <algorithm>
#include <set>

#include "ontotier/document.hpp"
#include "ontotier/error.hpp"
#include "ontotier/ontology.hpp"
#include "ontotier/profile.hpp"

namespace ontotier {
namespace {

class Validator {
 public:
  Validator(const DocumentData& doc, const Ontology* ontology,
            const std::map<std::string, Profile>* profiles)
      : doc_(doc), ontology_(ontology), profiles_(profiles) {}

  std::vector<Issue> run() {
    identifiers();
    types();
    slots();
    tiers();
    for (const auto& [key, a] : doc_.annotations) annotation(key, a);
    associations();
    subdivisions();
    return std::move(issues_);
  }

 private:
  void report(std::string locus, ErrorCode code, std::string message) {
    issues_.push_back({"ERROR", std::move(locus), std::string(error_name(code)),
                       std::move(message)});
  }

  void identifiers() {
    std::map<std::string, int> seen;
    auto note = [&](const std::string& id, const std::string& what) {
      if (!is_ncname(id)) report(what + " " + id, ErrorCode::InvalidId, "not a valid identifier");
      ++seen[id];
    };
    for (const auto& [id, t] : doc_.types) note(id, "type");
    for (const auto& t : doc_.tiers) note(t.id, "tier");
    for (const auto& s : doc_.time_order) note(s.id, "slot");
    for (const auto& [id, a] : doc_.annotations) {
      note(id, "annotation");
      ++seen[id + "Value"];
    }
    for (auto name : {Stereotype::TimeSubdivision, Stereotype::SymbolicSubdivision,
                      Stereotype::SymbolicAssociation})
      ++seen[std::string(stereotype_name(name))];
    for (const auto& [id, n] : seen)
      if (n > 1) report("id " + id, ErrorCode::IdInUse, "identifier used " + std::to_string(n) + " times");
  }

  void types() {
    for (const auto& [key, t] : doc_.types) {
      if (key != t.id)
        report("type " + key, ErrorCode::InvalidDocument, "stored under a different id");
      if (auto why = linguistic_type_violation(t))
        report("type " + key, ErrorCode::InvalidLinguisticType, *why);
    }
  }

  void slots() {
    std::optional<std::int64_t> last;
    for (const auto& s : doc_.time_order) {
      if (!s.time) continue;
      if (*s.time < 0) report("slot " + s.id, ErrorCode::NegativeTime, "negative time");
      if (last && *s.time < *last)
        report("slot " + s.id, ErrorCode::InvalidDocument, "timed slots are out of order");
      last = s.time;
    }
    slot_order_.emplace(doc_);
  }

  void tiers() {
    std::map<std::string, int> profile_uses;
    for (const auto& t : doc_.tiers) {
      std::string locus = "tier " + t.id;
      const LinguisticType* type = doc_.type_of(t);
      if (!type) {
        report(locus, ErrorCode::UnknownLinguisticType, "unknown type " + t.type);
      } else {
        if (type->stereotype == Stereotype::None && t.parent)
          report(locus, ErrorCode::ParentForbidden, "a None tier must be a root");
        if (type->stereotype != Stereotype::None && !t.parent)
          report(locus, ErrorCode::RootMustBeAlignable, "root tier is not of type None");
        if (type->ontological && !t.profile)
          report(locus, ErrorCode::ProfileRequired, "ontological tier has no profile");
        if (!type->ontological && t.profile)
          report(locus, ErrorCode::ProfileForbidden, "profile on a non-ontological tier");
      }
      if (t.parent && !doc_.find_tier(*t.parent))
        report(locus, ErrorCode::UnknownParent, "unknown parent " + *t.parent);
      if (t.profile && ++profile_uses[*t.profile] == 2)
        report(locus, ErrorCode::ProfileAlreadyBound, "profile " + *t.profile + " bound twice");
      // Walk up; more steps than tiers means a loop.
      const Tier* cur = &t;
      for (size_t steps = 0; cur && cur->parent; ++steps) {
        if (steps > doc_.tiers.size()) {
          report(locus, ErrorCode::CycleDetected, "tier parents form a cycle");
          break;
        }
        cur = doc_.find_tier(*cur->parent);
      }
    }
  }

  bool slot_known(const std::string& id) const { return slot_order_->known(id); }

  // Resolved begin/end for an annotation, when its chain is sound.
  std::optional<std::pair<std::string, std::string>> resolved(const Annotation& a) const {
    const Annotation* cur = &a;
    for (size_t steps = 0; cur && steps <= doc_.annotations.size(); ++steps) {
      if (const auto* al = std::get_if<AlignableAnchor>(&cur->anchor)) {
        if (!slot_known(al->begin) || !slot_known(al->end)) return std::nullopt;
        return std::pair{al->begin, al->end};
      }
      cur = doc_.find_annotation(std::get<ReferringAnchor>(cur->anchor).ref);
    }
    return std::nullopt;
  }

  void annotation(const std::string& key, const Annotation& a) {
    std::string locus = "annotation " + key;
    if (key != a.id) report(locus, ErrorCode::InvalidDocument, "stored under a different id");
    const Tier* tier = doc_.find_tier(a.tier);
    if (!tier) {
      report(locus, ErrorCode::UnknownTier, "unknown tier " + a.tier);
      return;
    }
    const LinguisticType* type = doc_.type_of(*tier);
    if (!type) return;

    if (const auto* al = std::get_if<AlignableAnchor>(&a.anchor)) {
      alignable(locus, *al, *tier, *type);
    } else {
      referring(locus, a, std::get<ReferringAnchor>(a.anchor), *tier, *type);
    }
    value(locus, a, *tier, *type);
  }

  void alignable(const std::string& locus, const AlignableAnchor& al, const Tier& tier,
                 const LinguisticType& type) {
    if (!type.time_alignable) {
      report(locus, ErrorCode::NotAlignableTier, "alignable annotation on tier " + tier.id);
      return;
    }
    bool slots_ok = true;
    for (const auto* s : {&al.begin, &al.end})
      if (!slot_known(*s)) {
        report(locus, ErrorCode::UnknownSlot, "unknown slot " + *s);
        slots_ok = false;
      }
    if (slots_ok && slot_order_->compare(al.begin, al.end) >= 0)
      report(locus, ErrorCode::InvertedInterval, "begin does not precede end");

    if (type.stereotype != Stereotype::TimeSubdivision) {
      if (al.parent)
        report(locus, ErrorCode::ParentOnWrongTier, "root tier annotation names a parent");
      return;
    }
    if (!al.parent) {
      report(locus, ErrorCode::UnknownParentAnnotation, "subdivision unit has no parent annotation");
      return;
    }
    const Annotation* parent = doc_.find_annotation(*al.parent);
    if (!parent) {
      report(locus, ErrorCode::UnknownParentAnnotation, "unknown parent " + *al.parent);
      return;
    }
    if (!tier.parent || parent->tier != *tier.parent)
      report(locus, ErrorCode::ParentOnWrongTier, *al.parent + " is not on the parent tier");
    auto range = resolved(*parent);
    if (slots_ok && range &&
        (slot_order_->compare(range->first, al.begin) > 0 ||
         slot_order_->compare(al.end, range->second) > 0))
      report(locus, ErrorCode::OutsideParentSlot, "interval leaves parent " + *al.parent);
  }

  void referring(const std::string& locus, const Annotation& a,
                 const ReferringAnchor& r, const Tier& tier,
                 const LinguisticType& type) {
    if (type.stereotype != Stereotype::SymbolicSubdivision &&
        type.stereotype != Stereotype::SymbolicAssociation) {
      report(locus, ErrorCode::NotReferringTier, "referring annotation on tier " + tier.id);
    }
    if (r.ordinal < 0) report(locus, ErrorCode::InvalidOrdinal, "negative ordinal");
    if (type.stereotype == Stereotype::SymbolicAssociation && r.ordinal != 0)
      report(locus, ErrorCode::InvalidOrdinal, "association annotations have ordinal 0");
    const Annotation* parent = doc_.find_annotation(r.ref);
    if (!parent) {
      report(locus, ErrorCode::UnknownParentAnnotation, "dangling reference to " + r.ref);
    } else if (!tier.parent || parent->tier != *tier.parent) {
      report(locus, ErrorCode::ParentOnWrongTier, r.ref + " is not on the parent tier");
    }
    if (!resolved(a))
      report(locus, ErrorCode::RootMustBeAlignable,
             "reference chain does not end at an alignable annotation");
  }

  void value(const std::string& locus, const Annotation& a, const Tier& tier,
             const LinguisticType& type) {
    const auto* ov = std::get_if<OntologicalValue>(&a.value);
    if (ov && !type.ontological)
      report(locus, ErrorCode::NotOntologicalTier, "ontological value on tier " + tier.id);
    if (!ov && type.ontological)
      report(locus, ErrorCode::ValueKindMismatch, "string value on ontological tier " + tier.id);
    if (!ov) return;
    if (ov->instances.empty())
      report(locus, ErrorCode::ValueKindMismatch, "ontological value lists no instances");
    for (const auto& m : ov->minted)
      if (std::find(ov->instances.begin(), ov->instances.end(), m.iri) == ov->instances.end())
        report(locus, ErrorCode::InvalidDocument, "minted instance " + m.iri + " is not listed");
    if (ontology_ && profiles_ && tier.profile) semantic(locus, *ov, tier);
  }

  void semantic(const std::string& locus, const OntologicalValue& v, const Tier& tier) {
    auto p = profiles_->find(*tier.profile);
    if (p == profiles_->end()) {
      report(locus, ErrorCode::NotFound, "profile " + *tier.profile + " was not supplied");
      return;
    }
    const Profile& profile = p->second;
    if (!profile.contains(v.user_term)) {
      report(locus, ErrorCode::UnknownUserTerm, "profile has no term " + v.user_term);
      return;
    }
    const auto& targets = profile.lookup(v.user_term);
    if (targets.size() != v.instances.size()) {
      report(locus, ErrorCode::InvalidDocument,
             std::to_string(v.instances.size()) + " instances for " +
                 std::to_string(targets.size()) + " mapped terms");
      return;
    }
    for (size_t i = 0; i < targets.size(); ++i) {
      const TermDescriptor* term = nullptr;
      try {
        term = &ontology_->resolve_term(targets[i]);
      } catch (const Error& e) {
        report(locus, ErrorCode::UnresolvedTerm, e.what());
        continue;
      }
      const auto& inst = v.instances[i];
      if (term->kind == TermKind::Individual) {
        if (inst != term->iri)
          report(locus, ErrorCode::InvalidDocument, inst + " should be " + term->iri);
        continue;
      }
      auto m = std::find_if(v.minted.begin(), v.minted.end(),
                            [&](const auto& x) { return x.iri == inst; });
      if (m == v.minted.end() || m->type != term->iri)
        report(locus, ErrorCode::InvalidDocument, inst + " is not an instance of " + term->iri);
      else if (term->has_restrictions && m->fills.empty())
        report(locus, ErrorCode::MissingPropertyFills, inst + " has no property values");
    }
  }

  void associations() {
    std::map<std::pair<std::string, std::string>, int> count;
    for (const auto& [id, a] : doc_.annotations) {
      const auto* r = std::get_if<ReferringAnchor>(&a.anchor);
      const auto* type = doc_.type_of_tier(a.tier);
      if (r && type && type->stereotype == Stereotype::SymbolicAssociation &&
          ++count[{a.tier, r->ref}] == 2)
        report("annotation " + id, ErrorCode::AssociationAlreadyFilled,
               r->ref + " has more than one annotation on " + a.tier);
    }
  }

  void subdivisions() {
    std::map<std::pair<std::string, std::string>, std::vector<const Annotation*>> groups;
    for (const auto& [id, a] : doc_.annotations)
      if (auto p = a.parent_annotation())
        if (const auto* type = doc_.type_of_tier(a.tier);
            type && (type->stereotype == Stereotype::SymbolicSubdivision ||
                     type->stereotype == Stereotype::TimeSubdivision))
          groups[{a.tier, *p}].push_back(&a);
    for (const auto& [key, members] : groups) {
      std::set<std::int64_t> ordinals;
      for (size_t i = 0; i < members.size(); ++i) {
        const auto* r = std::get_if<ReferringAnchor>(&members[i]->anchor);
        if (r && !ordinals.insert(r->ordinal).second)
          report("annotation " + members[i]->id, ErrorCode::InvalidOrdinal,
                 "ordinal repeats under " + key.second);
        const auto* ai = std::get_if<AlignableAnchor>(&members[i]->anchor);
        if (!ai || !slot_known(ai->begin) || !slot_known(ai->end)) continue;
        for (size_t j = i + 1; j < members.size(); ++j) {
          const auto* aj = std::get_if<AlignableAnchor>(&members[j]->anchor);
          if (!aj || !slot_known(aj->begin) || !slot_known(aj->end)) continue;
          if (slot_order_->compare(ai->begin, aj->end) < 0 &&
              slot_order_->compare(aj->begin, ai->end) < 0)
            report("annotation " + members[i]->id, ErrorCode::OverlapsSibling,
                   "overlaps " + members[j]->id);
        }
      }
    }
  }

  const DocumentData& doc_;
  const Ontology* ontology_;
  const std::map<std::string, Profile>* profiles_;
  std::optional<SlotOrder> slot_order_;
  std::vector<Issue> issues_;
};

}  // namespace

std::vector<Issue> validate_document(const DocumentData& doc,
                                     const Ontology* ontology,
                                     const std::map<std::string, Profile>* profiles) {
  return Validator(doc, ontology, profiles).run();
}

}  // namespace ontotier
