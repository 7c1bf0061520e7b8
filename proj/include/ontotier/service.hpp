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

// HTTP/JSON facade over documents, ontologies and profiles.
//
// Status codes: 400 malformed request, 404 unknown id, 409 stale revision,
// 422 domain error with body {"error": "<ErrorCode name>", ...}. Every
// mutation answers with the document's new revision. Mutations of one
// document are applied one at a time; each is tried on a copy and committed
// only if the result still validates.

#ifndef ONTOTIER_SERVICE_HPP_
#define ONTOTIER_SERVICE_HPP_

#include <memory>
#include <string>

#include "ontotier/document.hpp"
#include "ontotier/ontology.hpp"
#include "ontotier/profile.hpp"

namespace ontotier {

inline constexpr int kDefaultPort = 8470;

// Port from the PORT environment variable, else kDefaultPort.
int service_port_from_env();

class Service {
 public:
  Service();
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Preloading, mainly for tests and the command line. Ids must be unused.
  void put_document(const std::string& id, AnnotationDocument doc,
                    std::string base_iri = {});
  void put_ontology(const std::string& id, Ontology ontology);
  void put_profile(const std::string& id, Profile profile);

  // Blocks until stop().
  bool listen(const std::string& host, int port);
  // Binds an ephemeral port and serves on a background thread.
  int start_background(const std::string& host = "127.0.0.1");
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ontotier

#endif  // ONTOTIER_SERVICE_HPP_
