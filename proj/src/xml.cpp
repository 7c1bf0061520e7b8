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

#include "ontotier/xml.hpp"

#include <expat.h>

#include <memory>

#include "ontotier/error.hpp"

namespace ontotier::xml {
namespace {

constexpr char kSep = '\x01';

std::pair<std::string, std::string> split_name(const XML_Char* raw) {
  std::string_view name(raw);
  auto pos = name.find(kSep);
  if (pos == std::string_view::npos) return {"", std::string(name)};
  return {std::string(name.substr(0, pos)), std::string(name.substr(pos + 1))};
}

struct BuildState {
  XML_Parser parser = nullptr;
  Element root;
  bool have_root = false;
  std::vector<Element*> stack;
  std::vector<std::pair<std::string, std::string>> pending_decls;
};

void on_start(void* data, const XML_Char* name, const XML_Char** atts) {
  auto* st = static_cast<BuildState*>(data);
  Element el;
  std::tie(el.ns, el.local) = split_name(name);
  el.line = static_cast<long>(XML_GetCurrentLineNumber(st->parser));
  for (int i = 0; atts[i] != nullptr; i += 2) {
    auto [ns, local] = split_name(atts[i]);
    el.attributes.push_back({std::move(ns), std::move(local), atts[i + 1]});
  }
  el.namespace_decls = std::move(st->pending_decls);
  st->pending_decls.clear();
  if (st->stack.empty()) {
    st->root = std::move(el);
    st->have_root = true;
    st->stack.push_back(&st->root);
  } else {
    Element* parent = st->stack.back();
    parent->children.push_back(std::move(el));
    st->stack.push_back(&parent->children.back());
  }
}

void on_end(void* data, const XML_Char*) {
  static_cast<BuildState*>(data)->stack.pop_back();
}

void on_text(void* data, const XML_Char* s, int len) {
  auto* st = static_cast<BuildState*>(data);
  if (!st->stack.empty()) st->stack.back()->text.append(s, len);
}

void on_ns_decl(void* data, const XML_Char* prefix, const XML_Char* uri) {
  static_cast<BuildState*>(data)->pending_decls.emplace_back(
      prefix ? prefix : "", uri ? uri : "");
}

struct ParserDeleter {
  void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};

}  // namespace

const std::string* Element::attribute(std::string_view ns_iri,
                                      std::string_view name) const {
  for (const auto& a : attributes)
    if (a.ns == ns_iri && a.local == name) return &a.value;
  return nullptr;
}

Element parse(std::string_view bytes) {
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(
      XML_ParserCreateNS("UTF-8", kSep));
  if (!parser) throw Error(ErrorCode::MalformedXml, "cannot allocate parser");
  BuildState st;
  st.parser = parser.get();
  XML_SetUserData(parser.get(), &st);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);
  XML_SetStartNamespaceDeclHandler(parser.get(), on_ns_decl);
  // Vectors of children are appended to while a pointer to the parent is on
  // the stack; pointers to earlier siblings are never held, so this is safe.
  if (XML_Parse(parser.get(), bytes.data(), static_cast<int>(bytes.size()),
                XML_TRUE) == XML_STATUS_ERROR) {
    throw Error(ErrorCode::MalformedXml,
                std::string("line ") +
                    std::to_string(XML_GetCurrentLineNumber(parser.get())) +
                    ": " + XML_ErrorString(XML_GetErrorCode(parser.get())));
  }
  if (!st.have_root) throw Error(ErrorCode::MalformedXml, "no root element");
  return std::move(st.root);
}

std::string escape_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_attribute(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      case '\t': out += "&#9;"; break;
      default: out += c;
    }
  }
  return out;
}

Writer::Writer() { out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"; }

void Writer::indent() { out_.append(stack_.size() * 2, ' '); }

void Writer::start_tag(
    std::string_view name,
    const std::vector<std::pair<std::string, std::string>>& attrs) {
  indent();
  out_ += '<';
  out_ += name;
  for (const auto& [k, v] : attrs) {
    out_ += ' ';
    out_ += k;
    out_ += "=\"";
    out_ += escape_attribute(v);
    out_ += '"';
  }
}

void Writer::open(std::string_view name,
                  const std::vector<std::pair<std::string, std::string>>& attrs) {
  start_tag(name, attrs);
  out_ += ">\n";
  stack_.emplace_back(name);
}

void Writer::close() {
  std::string name = std::move(stack_.back());
  stack_.pop_back();
  indent();
  out_ += "</" + name + ">\n";
}

void Writer::empty(std::string_view name,
                   const std::vector<std::pair<std::string, std::string>>& attrs) {
  start_tag(name, attrs);
  out_ += "/>\n";
}

void Writer::leaf(std::string_view name, std::string_view text,
                  const std::vector<std::pair<std::string, std::string>>& attrs) {
  start_tag(name, attrs);
  out_ += '>';
  out_ += escape_text(text);
  out_ += "</";
  out_ += name;
  out_ += ">\n";
}

std::string Writer::finish() {
  while (!stack_.empty()) close();
  return std::move(out_);
}

}  // namespace ontotier::xml
