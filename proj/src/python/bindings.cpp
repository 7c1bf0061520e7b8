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

// Python bindings. Structured results cross the boundary as JSON text; the
// package's __init__ decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ontotier/error.hpp"
#include "ontotier/json_codec.hpp"
#include "ontotier/ontology.hpp"
#include "ontotier/persistence.hpp"
#include "ontotier/profile.hpp"
#include "ontotier/search.hpp"

namespace py = pybind11;
using namespace ontotier;

namespace {

std::string issues_json(const std::vector<Issue>& issues) {
  Json out = Json::array();
  for (const auto& i : issues) out.push_back(issue_to_json(i));
  return out.dump();
}

std::map<std::string, Profile> bound_profiles(const AnnotationDocument& doc,
                                              const std::map<std::string, Profile>& by_ref) {
  std::map<std::string, Profile> out;
  for (const auto& t : doc.data().tiers)
    if (t.profile)
      if (auto it = by_ref.find(*t.profile); it != by_ref.end()) out.emplace(*t.profile, it->second);
  return out;
}

}  // namespace

PYBIND11_MODULE(_ontotier, m) {
  // Instances carry `code` (the error name) and `details`.
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&] { return py::object(py::exception<Error>(m, "OntotierError")); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      py::object exc = type(py::str(e.what()));
      exc.attr("code") = std::string(e.name());
      exc.attr("details") = e.details();
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<Ontology>(m, "Ontology")
      .def_property_readonly("source_iri", &Ontology::source_iri)
      .def("__len__", [](const Ontology& o) { return o.terms().size(); })
      .def("index_json",
           [](const Ontology& o) {
             Json out = Json::array();
             for (const auto& t : o.list_terms()) out.push_back(term_to_json(t));
             return out.dump();
           })
      .def("tree_json", [](const Ontology& o) { return tree_to_json(o.term_tree()).dump(); })
      .def("resolve_json", [](const Ontology& o, const std::string& name) {
        return term_to_json(o.resolve_term(name)).dump();
      });
  m.def("load_ontology", [](const std::string& xml) { return load_ontology(xml); });
  m.def("load_ontology_file", &load_ontology_file);

  py::class_<Profile>(m, "Profile")
      .def(py::init<std::string, std::string, std::string, std::string>(), py::arg("author"),
           py::arg("description"), py::arg("version"), py::arg("source"))
      .def("add_mapping",
           [](Profile& p, const std::string& name, const std::vector<std::string>& targets,
              const std::string& description) { p.add_mapping({name, description}, targets); },
           py::arg("name"), py::arg("targets"), py::arg("description") = "")
      .def("rename", &Profile::rename_user_term)
      .def("lookup", [](const Profile& p, const std::string& name) { return p.lookup(name); })
      .def("to_json", [](const Profile& p) { return profile_to_json(p).dump(); })
      .def("to_xml", [](const Profile& p) { return serialize_profile(p); })
      .def("check_json",
           [](const Profile& p, const Ontology& o) {
             Json out = Json::array();
             for (const auto& i : validate_profile(p, o))
               out.push_back({{"user_term", i.user_term}, {"target", i.target}, {"reason", i.reason},
                              {"candidates", i.candidates}});
             return out.dump();
           })
      .def("__eq__", [](const Profile& a, const Profile& b) { return a == b; });
  m.def("parse_profile", [](const std::string& xml) { return parse_profile(xml); });

  py::class_<AnnotationDocument>(m, "Document")
      .def(py::init<>())
      .def("to_json", [](const AnnotationDocument& d) { return document_to_json(d).dump(); })
      .def("to_rdf", [](const AnnotationDocument& d, const std::string& base) { return serialize_document(d, base); })
      .def("validate_json",
           [](const AnnotationDocument& d, const Ontology* o, const std::map<std::string, Profile>& profiles) {
             if (!o) return issues_json(validate_document(d.data()));
             auto bound = bound_profiles(d, profiles);
             return issues_json(validate_document(d.data(), o, &bound));
           },
           py::arg("ontology") = nullptr, py::arg("profiles") = std::map<std::string, Profile>{})
      .def("delete_tier_json",
           [](AnnotationDocument& d, const std::string& id) { return deletion_to_json(d.delete_tier(id)).dump(); })
      .def("delete_annotation_json",
           [](AnnotationDocument& d, const std::string& id) {
             return deletion_to_json(d.delete_annotation(id)).dump();
           })
      .def("move_time_slot", [](AnnotationDocument& d, const std::string& s, std::int64_t t) { d.move_time_slot(s, t); })
      .def("resolve_alignment",
           [](const AnnotationDocument& d, const std::string& id) -> std::optional<std::pair<std::int64_t, std::int64_t>> {
             auto iv = d.resolve_alignment(id);
             if (!iv) return std::nullopt;
             return std::pair{iv->begin, iv->end};
           })
      .def("search_text_json",
           [](const AnnotationDocument& d, const std::string& text, bool case_sensitive,
              const std::set<std::string>& tiers) {
             return hits_to_json(search_text(d, {text, case_sensitive, tiers})).dump();
           },
           py::arg("text"), py::arg("case_sensitive") = true, py::arg("tiers") = std::set<std::string>{})
      .def("search_term_json",
           [](const AnnotationDocument& d, const std::string& term, const Ontology* o, bool expand) {
             return hits_to_json(search_term(d, {term, o, expand})).dump();
           },
           py::arg("term"), py::arg("ontology") = nullptr, py::arg("expand") = false)
      .def("copy", [](const AnnotationDocument& d) { return AnnotationDocument(d); })
      .def("__eq__", [](const AnnotationDocument& a, const AnnotationDocument& b) { return a == b; });
  m.def("parse_document", [](const std::string& xml, const std::string& base) {
    ParseOptions po;
    po.base_iri = base;
    return parse_document(xml, po);
  }, py::arg("xml"), py::arg("base") = "");
  m.def("load_document_file", &load_document_file);
}
