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

#include "ontotier/service.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <thread>

#include "httplib.h"
#include "ontotier/error.hpp"
#include "ontotier/json_codec.hpp"
#include "ontotier/persistence.hpp"
#include "ontotier/search.hpp"

namespace ontotier {
namespace {

using httplib::Request;
using httplib::Response;

struct HttpError {
  int status;
  Json body;
};

[[noreturn]] void http_fail(int status, const std::string& name,
                            const std::string& message) {
  throw HttpError{status, {{"error", name}, {"message", message}}};
}

[[noreturn]] void not_found(const std::string& what, const std::string& id) {
  http_fail(404, "NotFound", "unknown " + what + ": " + id);
}

void send(Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

Json error_json(const Error& e) {
  Json j = {{"error", std::string(e.name())}, {"message", e.what()}};
  if (!e.details().empty()) j["details"] = e.details();
  return j;
}

bool is_xml(const Request& req) {
  return req.get_header_value("Content-Type").find("xml") != std::string::npos;
}

Json parse_body(const Request& req) {
  if (req.body.empty()) return Json::object();
  Json j;
  try {
    j = Json::parse(req.body);
  } catch (const Json::parse_error& e) {
    http_fail(400, "MalformedRequest", e.what());
  }
  if (!j.is_object()) http_fail(400, "MalformedRequest", "body must be a JSON object");
  return j;
}

std::optional<std::uint64_t> expected_revision(const Request& req, const Json& body) {
  if (body.contains("revision") && !body["revision"].is_null())
    return body["revision"].get<std::uint64_t>();
  if (req.has_param("revision")) {
    try {
      return std::stoull(req.get_param_value("revision"));
    } catch (const std::exception&) {
      http_fail(400, "MalformedRequest", "revision must be an integer");
    }
  }
  return std::nullopt;
}

bool flag(const Request& req, const char* name) {
  if (!req.has_param(name)) return false;
  auto v = req.get_param_value(name);
  return v.empty() || v == "1" || v == "true";
}

std::string basename_of(std::string_view ref) {
  auto cut = ref.find_last_of("/\\");
  return std::string(cut == std::string_view::npos ? ref : ref.substr(cut + 1));
}

OntologicalRequest request_from_json(const Json& j) {
  OntologicalRequest r;
  r.user_term = j.at("user_term").get<std::string>();
  r.ont_annotation_id = j.value("ont_annotation_id", "");
  r.description = j.value("description", "");
  if (j.contains("instances")) {
    for (const auto& [term, spec] : j.at("instances").items()) {
      InstanceSpec s;
      s.name = spec.value("name", "");
      if (spec.contains("fills")) {
        const auto& f = spec.at("fills");
        if (f.is_object())
          for (const auto& [p, v] : f.items()) s.fills.emplace_back(p, v.get<std::string>());
        else
          for (const auto& pair : f)
            s.fills.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
      }
      r.instances.emplace(term, std::move(s));
    }
  }
  return r;
}

// Document bytes from a raw XML body, a multipart "file" part, or a JSON
// "rdf" member.
std::optional<std::string> uploaded_bytes(const Request& req, const Json& body) {
  if (req.is_multipart_form_data()) {
    if (!req.has_file("file")) http_fail(400, "MalformedRequest", "multipart upload needs a 'file' part");
    return req.get_file_value("file").content;
  }
  if (is_xml(req)) return req.body;
  if (body.contains("rdf")) return body.at("rdf").get<std::string>();
  return std::nullopt;
}

std::string form_or_param(const Request& req, const Json& body, const char* name) {
  if (req.is_multipart_form_data() && req.has_file(name)) return req.get_file_value(name).content;
  if (req.has_param(name)) return req.get_param_value(name);
  if (body.contains(name)) return body.at(name).get<std::string>();
  return {};
}

struct DocEntry {
  std::shared_mutex mu;
  AnnotationDocument doc;
  std::string base_iri;
  std::uint64_t revision = 0;
};

}  // namespace

int service_port_from_env() {
  if (const char* p = std::getenv("PORT")) {
    try {
      int port = std::stoi(p);
      if (port > 0 && port < 65536) return port;
    } catch (const std::exception&) {
    }
  }
  return kDefaultPort;
}

struct Service::Impl {
  httplib::Server server;
  std::thread thread;

  std::shared_mutex registry_mu;
  std::map<std::string, std::shared_ptr<DocEntry>> docs;
  std::map<std::string, std::shared_ptr<const Ontology>> ontologies;
  std::map<std::string, Profile> profiles;
  std::uint64_t counter = 0;

  Impl() { routes(); }

  std::string fresh_id(const char* prefix, const auto& table) {
    for (;;) {
      std::string id = prefix + std::to_string(++counter);
      if (!table.count(id)) return id;
    }
  }

  std::shared_ptr<DocEntry> doc(const std::string& id) {
    std::shared_lock lk(registry_mu);
    auto it = docs.find(id);
    if (it == docs.end()) not_found("document", id);
    return it->second;
  }

  std::shared_ptr<const Ontology> ontology(const std::string& id) {
    std::shared_lock lk(registry_mu);
    auto it = ontologies.find(id);
    if (it == ontologies.end()) not_found("ontology", id);
    return it->second;
  }

  Profile profile(const std::string& id) {
    std::shared_lock lk(registry_mu);
    auto it = profiles.find(id);
    if (it == profiles.end()) not_found("profile", id);
    return it->second;
  }

  // Profile and ontology an ontological tier resolves against. The body may
  // name them; otherwise the tier's profile reference is matched against
  // registered profile ids and the profile's source against ontology IRIs.
  std::pair<Profile, std::shared_ptr<const Ontology>> context_for(
      const AnnotationDocument& d, const std::string& tier_id, const Json& body) {
    const Tier* tier = d.data().find_tier(tier_id);
    if (!tier) not_found("tier", tier_id);
    std::shared_lock lk(registry_mu);
    const Profile* p = nullptr;
    auto find_profile = [&](const std::string& key) {
      auto it = profiles.find(key);
      if (it != profiles.end()) p = &it->second;
    };
    if (body.contains("profile")) {
      find_profile(body.at("profile").get<std::string>());
    } else if (tier->profile) {
      std::string base = basename_of(*tier->profile);
      for (const auto& key : {*tier->profile, base, base.substr(0, base.rfind('.'))})
        if (!p) find_profile(key);
    }
    if (!p) http_fail(404, "NotFound", "no registered profile for tier " + tier_id);
    std::shared_ptr<const Ontology> o;
    if (body.contains("ontology")) {
      auto it = ontologies.find(body.at("ontology").get<std::string>());
      if (it != ontologies.end()) o = it->second;
    } else {
      auto strip = [](std::string s) {
        while (!s.empty() && (s.back() == '#' || s.back() == '/')) s.pop_back();
        return s;
      };
      for (const auto& [_, candidate] : ontologies)
        if (strip(candidate->source_iri()) == strip(p->source())) o = candidate;
    }
    if (!o) http_fail(404, "NotFound", "no registered ontology for profile source " + p->source());
    return {*p, o};
  }

  // Runs `f` on a copy of the document and commits it when the result still
  // validates. `f` returns the response body; the new revision is added.
  void mutate(const Request& req, Response& res, const Json& body,
              const std::function<Json(AnnotationDocument&)>& f) {
    auto e = doc(req.path_params.at("id"));
    std::unique_lock lk(e->mu);
    if (auto want = expected_revision(req, body); want && *want != e->revision)
      throw HttpError{409, {{"error", "RevisionConflict"},
                            {"message", "document is at revision " + std::to_string(e->revision)},
                            {"revision", e->revision}}};
    AnnotationDocument trial = e->doc;
    Json out = f(trial);
    if (flag(req, "dry_run")) {
      out["revision"] = e->revision;
      send(res, 200, out);
      return;
    }
    if (auto issues = validate_document(trial.data()); !issues.empty()) {
      Json j = {{"error", "InvalidDocument"}, {"message", issues.front().message}};
      for (const auto& i : issues) j["issues"].push_back(issue_to_json(i));
      throw HttpError{422, j};
    }
    e->doc = std::move(trial);
    out["revision"] = ++e->revision;
    send(res, 200, out);
  }

  void add_document(const std::string& id, AnnotationDocument d, std::string base) {
    auto e = std::make_shared<DocEntry>();
    e->doc = std::move(d);
    e->base_iri = base.empty() ? "urn:ontotier:" + id : std::move(base);
    std::unique_lock lk(registry_mu);
    if (!docs.emplace(id, std::move(e)).second)
      throw Error(ErrorCode::IdInUse, "document id in use: " + id);
  }

  using H = std::function<void(const Request&, Response&)>;

  static httplib::Server::Handler wrap(H h) {
    return [h = std::move(h)](const Request& req, Response& res) {
      try {
        h(req, res);
      } catch (const HttpError& e) {
        send(res, e.status, e.body);
      } catch (const Error& e) {
        send(res, 422, error_json(e));
      } catch (const Json::exception& e) {
        send(res, 400, {{"error", "MalformedRequest"}, {"message", e.what()}});
      } catch (const std::invalid_argument& e) {
        send(res, 400, {{"error", "MalformedRequest"}, {"message", e.what()}});
      } catch (const std::exception& e) {
        send(res, 500, {{"error", "Internal"}, {"message", e.what()}});
      }
    };
  }

  void routes();
  void document_routes();
  void catalog_routes();
};

void Service::Impl::routes() {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, PUT, PATCH, DELETE, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(".*", [](const Request&, Response& res) { res.status = 204; });
  server.set_error_handler([](const Request&, Response& res) {
    if (res.body.empty() && res.status == 404)
      send(res, 404, {{"error", "NotFound"}, {"message", "no such route"}});
  });
  document_routes();
  catalog_routes();
}

void Service::Impl::document_routes() {
  server.Get("/docs", wrap([this](const Request&, Response& res) {
    Json out = Json::array();
    std::map<std::string, std::shared_ptr<DocEntry>> snapshot;
    {
      std::shared_lock lk(registry_mu);
      snapshot = docs;
    }
    for (const auto& [id, e] : snapshot) {
      std::shared_lock dl(e->mu);
      out.push_back({{"id", id}, {"revision", e->revision}});
    }
    send(res, 200, out);
  }));

  server.Post("/docs", wrap([this](const Request& req, Response& res) {
    Json body = (is_xml(req) || req.is_multipart_form_data()) ? Json::object() : parse_body(req);
    std::string id = form_or_param(req, body, "id");
    std::string base = form_or_param(req, body, "base");
    if (!id.empty() && !is_ncname(id)) http_fail(400, "MalformedRequest", "bad document id: " + id);
    AnnotationDocument d;
    if (auto bytes = uploaded_bytes(req, body)) {
      ParseOptions po;
      po.base_iri = base;
      d = parse_document(*bytes, po);
      if (auto issues = validate_document(d.data()); !issues.empty()) {
        Json j = {{"error", "InvalidDocument"}, {"message", issues.front().message}};
        for (const auto& i : issues) j["issues"].push_back(issue_to_json(i));
        throw HttpError{422, j};
      }
    } else {
      DocumentMetadata meta;
      meta.author = body.value("author", "");
      meta.date = body.value("date", "");
      std::vector<MediaDescriptor> media;
      if (body.contains("media"))
        for (const auto& m : body.at("media")) {
          MediaDescriptor md;
          md.url = m.at("url").get<std::string>();
          md.mime_type = m.value("mime_type", "");
          if (m.contains("time_origin") && !m["time_origin"].is_null())
            md.time_origin = m["time_origin"].get<std::int64_t>();
          media.push_back(std::move(md));
        }
      d = AnnotationDocument(std::move(meta), std::move(media));
    }
    if (id.empty()) {
      std::unique_lock lk(registry_mu);
      id = fresh_id("d", docs);
    }
    add_document(id, std::move(d), base);
    send(res, 201, {{"id", id}, {"revision", 0}});
  }));

  server.Get("/docs/:id", wrap([this](const Request& req, Response& res) {
    auto e = doc(req.path_params.at("id"));
    std::shared_lock lk(e->mu);
    Json out = {{"id", req.path_params.at("id")}, {"revision", e->revision}};
    out.update(document_to_json(e->doc));
    send(res, 200, out);
  }));

  auto do_export = wrap([this](const Request& req, Response& res) {
    auto e = doc(req.path_params.at("id"));
    std::shared_lock lk(e->mu);
    res.status = 200;
    res.set_content(serialize_document(e->doc, e->base_iri), "application/rdf+xml");
  });
  server.Put("/docs/:id/export", do_export);
  server.Get("/docs/:id/export", do_export);

  server.Get("/docs/:id/validate", wrap([this](const Request& req, Response& res) {
    auto e = doc(req.path_params.at("id"));
    std::shared_lock lk(e->mu);
    Json out = Json::array();
    for (const auto& i : validate_document(e->doc.data())) out.push_back(issue_to_json(i));
    send(res, 200, out);
  }));

  server.Post("/docs/:id/types", wrap([this](const Request& req, Response& res) {
    Json body = parse_body(req);
    mutate(req, res, body, [&](AnnotationDocument& d) {
      LinguisticType t;
      t.id = body.at("id").get<std::string>();
      auto st = parse_stereotype(body.value("stereotype", "None"));
      if (!st) http_fail(400, "MalformedRequest", "unknown stereotype");
      t.stereotype = *st;
      t.ontological = body.value("ontological", false);
      t.time_alignable = body.value(
          "time_alignable", t.stereotype == Stereotype::None || t.stereotype == Stereotype::TimeSubdivision);
      t.graphic_ref = body.value("graphic_ref", false);
      d.add_linguistic_type(t);
      return Json{{"type", t.id}};
    });
  }));

  server.Post("/docs/:id/tiers", wrap([this](const Request& req, Response& res) {
    Json body = parse_body(req);
    mutate(req, res, body, [&](AnnotationDocument& d) {
      auto opt_str = [&](const char* k) -> std::optional<std::string> {
        if (!body.contains(k) || body[k].is_null()) return std::nullopt;
        return body[k].get<std::string>();
      };
      std::string id = body.at("id").get<std::string>();
      d.add_tier(id, body.at("type").get<std::string>(), opt_str("parent"), opt_str("profile"));
      return Json{{"tier", id}};
    });
  }));

  server.Delete("/docs/:id/tiers/:tier", wrap([this](const Request& req, Response& res) {
    mutate(req, res, Json::object(), [&](AnnotationDocument& d) {
      const auto& tier = req.path_params.at("tier");
      if (!d.data().find_tier(tier)) not_found("tier", tier);
      auto r = d.delete_tier(tier);
      return Json{{"deleted", r.tiers}, {"annotations", r.annotations}, {"slots", r.slots}};
    });
  }));

  server.Post("/docs/:id/slots", wrap([this](const Request& req, Response& res) {
    Json body = parse_body(req);
    mutate(req, res, body, [&](AnnotationDocument& d) {
      std::optional<std::int64_t> t;
      if (body.contains("time") && !body["time"].is_null()) t = body["time"].get<std::int64_t>();
      return Json{{"slot", d.add_time_slot(t)}};
    });
  }));

  server.Patch("/docs/:id/slots/:sid", wrap([this](const Request& req, Response& res) {
    Json body = parse_body(req);
    mutate(req, res, body, [&](AnnotationDocument& d) {
      const auto& sid = req.path_params.at("sid");
      if (!d.data().find_slot(sid)) not_found("slot", sid);
      d.move_time_slot(sid, body.at("time").get<std::int64_t>());
      return Json{{"slot", sid}};
    });
  }));

  server.Post("/docs/:id/annotations", wrap([this](const Request& req, Response& res) {
    Json body = parse_body(req);
    mutate(req, res, body, [&](AnnotationDocument& d) {
      std::string tier = body.at("tier").get<std::string>();
      std::optional<std::string> id;
      if (body.contains("id")) id = body["id"].get<std::string>();
      AnnotationValue value = StringValue{};
      if (body.contains("value")) {
        const Json& v = body["value"];
        if (v.is_object() && v.contains("user_term") && !v.contains("instances")) {
          auto [p, o] = context_for(d, tier, body);
          value = d.make_ontological_value(tier, request_from_json(v), p, *o);
        } else {
          value = value_from_json(v);
        }
      }
      std::string aid;
      if (body.contains("ref")) {
        std::optional<std::int64_t> ordinal;
        if (body.contains("ordinal") && !body["ordinal"].is_null()) ordinal = body["ordinal"].get<std::int64_t>();
        aid = d.add_referring_annotation(tier, body["ref"].get<std::string>(), value, ordinal, id);
      } else {
        auto slot = [&](const char* slot_key, const char* time_key) {
          if (body.contains(slot_key)) return body[slot_key].get<std::string>();
          if (!body.contains(time_key))
            http_fail(400, "MalformedRequest", std::string("need ") + slot_key + " or " + time_key);
          std::optional<std::int64_t> t;
          if (!body[time_key].is_null()) t = body[time_key].get<std::int64_t>();
          return d.add_time_slot(t);
        };
        std::string begin = slot("begin_slot", "begin_time");
        std::string end = slot("end_slot", "end_time");
        std::optional<std::string> parent;
        if (body.contains("parent") && !body["parent"].is_null()) parent = body["parent"].get<std::string>();
        aid = d.add_alignable_annotation(tier, begin, end, value, id, parent);
      }
      return Json{{"annotation", annotation_to_json(d, d.data().annotations.at(aid))}};
    });
  }));

  server.Patch("/docs/:id/annotations/:aid", wrap([this](const Request& req, Response& res) {
    Json body = parse_body(req);
    mutate(req, res, body, [&](AnnotationDocument& d) {
      const auto& aid = req.path_params.at("aid");
      if (!d.data().find_annotation(aid)) not_found("annotation", aid);
      d.set_string_value(aid, body.at("value").at("text").get<std::string>());
      return Json{{"annotation", annotation_to_json(d, d.data().annotations.at(aid))}};
    });
  }));

  server.Delete("/docs/:id/annotations/:aid", wrap([this](const Request& req, Response& res) {
    mutate(req, res, Json::object(), [&](AnnotationDocument& d) {
      const auto& aid = req.path_params.at("aid");
      if (!d.data().find_annotation(aid)) not_found("annotation", aid);
      auto r = d.delete_annotation(aid);
      return Json{{"deleted", r.annotations}, {"slots", r.slots}};
    });
  }));

  server.Post("/docs/:id/annotations/:aid/ontological", wrap([this](const Request& req, Response& res) {
    Json body = parse_body(req);
    mutate(req, res, body, [&](AnnotationDocument& d) {
      const auto& aid = req.path_params.at("aid");
      const Annotation* a = d.data().find_annotation(aid);
      if (!a) not_found("annotation", aid);
      auto [p, o] = context_for(d, a->tier, body);
      d.set_ontological_value(aid, request_from_json(body), p, *o);
      return Json{{"annotation", annotation_to_json(d, d.data().annotations.at(aid))}};
    });
  }));

  server.Get("/docs/:id/search", wrap([this](const Request& req, Response& res) {
    auto e = doc(req.path_params.at("id"));
    std::shared_lock lk(e->mu);
    std::vector<SearchHit> hits;
    if (req.has_param("text")) {
      TextQuery q;
      q.text = req.get_param_value("text");
      q.case_sensitive = !flag(req, "ignore_case");
      for (size_t i = 0; i < req.get_param_value_count("tier"); ++i)
        q.tiers.insert(req.get_param_value("tier", i));
      hits = search_text(e->doc, q);
    } else if (req.has_param("term")) {
      TermQuery q;
      q.term = req.get_param_value("term");
      std::shared_ptr<const Ontology> o;
      if (req.has_param("ontology")) {
        o = ontology(req.get_param_value("ontology"));
        q.ontology = o.get();
        q.expand_subclasses = flag(req, "expand");
      }
      hits = search_term(e->doc, q);
    } else {
      http_fail(400, "MalformedRequest", "need text or term");
    }
    send(res, 200, hits_to_json(hits));
  }));
}

void Service::Impl::catalog_routes() {
  server.Post("/ontologies", wrap([this](const Request& req, Response& res) {
    Json body = (is_xml(req) || req.is_multipart_form_data()) ? Json::object() : parse_body(req);
    auto bytes = uploaded_bytes(req, body);
    if (!bytes) http_fail(400, "MalformedRequest", "no ontology content");
    LoadOptions lo;
    lo.base_iri = form_or_param(req, body, "base");
    auto o = std::make_shared<const Ontology>(load_ontology(*bytes, lo));
    std::string id = form_or_param(req, body, "id");
    std::unique_lock lk(registry_mu);
    if (id.empty()) id = fresh_id("o", ontologies);
    if (!ontologies.emplace(id, o).second) throw Error(ErrorCode::IdInUse, "ontology id in use: " + id);
    send(res, 201, {{"id", id}, {"source", o->source_iri()}, {"terms", o->terms().size()}});
  }));

  server.Get("/ontologies", wrap([this](const Request&, Response& res) {
    Json out = Json::array();
    std::shared_lock lk(registry_mu);
    for (const auto& [id, o] : ontologies) out.push_back({{"id", id}, {"source", o->source_iri()}});
    send(res, 200, out);
  }));

  server.Get("/ontologies/:oid/index", wrap([this](const Request& req, Response& res) {
    auto o = ontology(req.path_params.at("oid"));
    Json out = Json::array();
    for (const auto& t : o->list_terms()) out.push_back(term_to_json(t));
    send(res, 200, out);
  }));

  server.Get("/ontologies/:oid/tree", wrap([this](const Request& req, Response& res) {
    send(res, 200, tree_to_json(ontology(req.path_params.at("oid"))->term_tree()));
  }));

  server.Post("/profiles", wrap([this](const Request& req, Response& res) {
    Json body = is_xml(req) ? Json::object() : parse_body(req);
    Profile p = is_xml(req) ? parse_profile(req.body) : profile_from_json(body);
    std::string id = form_or_param(req, body, "id");
    std::unique_lock lk(registry_mu);
    if (id.empty()) id = fresh_id("p", profiles);
    if (!profiles.emplace(id, p).second) throw Error(ErrorCode::IdInUse, "profile id in use: " + id);
    send(res, 201, {{"id", id}});
  }));

  server.Get("/profiles", wrap([this](const Request&, Response& res) {
    Json out = Json::array();
    std::shared_lock lk(registry_mu);
    for (const auto& [id, p] : profiles) out.push_back({{"id", id}, {"source", p.source()}});
    send(res, 200, out);
  }));

  server.Get("/profiles/:pid", wrap([this](const Request& req, Response& res) {
    Profile p = profile(req.path_params.at("pid"));
    if (req.get_param_value("format") == "xml") {
      res.status = 200;
      res.set_content(serialize_profile(p), "application/xml");
      return;
    }
    send(res, 200, profile_to_json(p));
  }));

  server.Post("/profiles/:pid/terms", wrap([this](const Request& req, Response& res) {
    Json body = parse_body(req);
    const auto& pid = req.path_params.at("pid");
    std::unique_lock lk(registry_mu);
    auto it = profiles.find(pid);
    if (it == profiles.end()) not_found("profile", pid);
    it->second.add_mapping({body.at("name").get<std::string>(), body.value("description", "")},
                           body.at("targets").get<std::vector<std::string>>());
    send(res, 200, profile_to_json(it->second));
  }));
}

Service::Service() : impl_(std::make_unique<Impl>()) {}

Service::~Service() { stop(); }

void Service::put_document(const std::string& id, AnnotationDocument doc, std::string base_iri) {
  impl_->add_document(id, std::move(doc), std::move(base_iri));
}

void Service::put_ontology(const std::string& id, Ontology ontology) {
  std::unique_lock lk(impl_->registry_mu);
  if (!impl_->ontologies.emplace(id, std::make_shared<const Ontology>(std::move(ontology))).second)
    throw Error(ErrorCode::IdInUse, "ontology id in use: " + id);
}

void Service::put_profile(const std::string& id, Profile profile) {
  std::unique_lock lk(impl_->registry_mu);
  if (!impl_->profiles.emplace(id, std::move(profile)).second)
    throw Error(ErrorCode::IdInUse, "profile id in use: " + id);
}

bool Service::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int Service::start_background(const std::string& host) {
  int port = impl_->server.bind_to_any_port(host);
  if (port <= 0) throw std::runtime_error("cannot bind " + host);
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return port;
}

void Service::stop() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace ontotier
