# Copyright 2026 The ontotier Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Tiered, time-aligned annotation documents with ontology-backed values."""

import json

from ._ontotier import (
    Document,
    Ontology,
    OntotierError,
    Profile,
    load_document_file,
    load_ontology,
    load_ontology_file,
    parse_document,
    parse_profile,
)

__all__ = [
    "Document",
    "Ontology",
    "OntotierError",
    "Profile",
    "document_dict",
    "load_document_file",
    "load_ontology",
    "load_ontology_file",
    "parse_document",
    "parse_profile",
    "search_term",
    "search_text",
    "validate",
]


def document_dict(doc):
    return json.loads(doc.to_json())


def validate(doc, ontology=None, profiles=None):
    """Issues as dicts; empty when the document is valid."""
    return json.loads(doc.validate_json(ontology, profiles or {}))


def search_text(doc, text, case_sensitive=True, tiers=()):
    return json.loads(doc.search_text_json(text, case_sensitive, set(tiers)))


def search_term(doc, term, ontology=None, expand=False):
    return json.loads(doc.search_term_json(term, ontology, expand))
