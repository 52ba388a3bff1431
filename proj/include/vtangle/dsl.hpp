#pragma once

#include <string>

#include "vtangle/term.hpp"

namespace vtangle {

// Line-oriented term language: an optional "dom <object>" header followed by
// one slice per line, cells separated by whitespace. "#" starts a comment.
// Empty input denotes the identity on the unit object. Grammar in the README.
MorphismTerm parse_term(const std::string& text);

// Canonical text; parse_term(render(t)) == t, and render . parse_term is
// idempotent on valid input.
std::string render(const MorphismTerm& t);

// Object / word text helpers (the same syntax cells use).
SeqObject parse_object(const std::string& text);
PWord parse_pword(const std::string& text);

// JSON interop, schema in the README.
std::string term_to_json(const MorphismTerm& t);
MorphismTerm term_from_json(const std::string& text);

}  // namespace vtangle
