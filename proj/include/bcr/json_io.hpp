#pragma once

#include <string>

#include "json.hpp"

#include "bcr/seifert.hpp"

namespace bcr {

// Parses an input document (UTF-8 JSON text) into SeifertData.
//
// Schema:
//   {
//     "n": <positive integer>,
//     "integral": <bool, optional; defaults to n >= 2>,
//     "blocks": [ {"d": <1..n>, "v_plus": [[...]], "v_minus": [[...], optional]} ]
//   }
//
// Matrix entries are JSON integers or strings "p" / "p/q"; floats are
// rejected. A missing v_minus defaults to v_plus + I; a degree d absent from
// "blocks" gets an empty (0 x 0) block. Malformed input throws
// bcr::parse_error with a field path.
SeifertData parse_input_document(const std::string& text);

// Same, from an already-parsed JSON value (used to re-read embedded inputs).
SeifertData input_document_from_json(const nlohmann::ordered_json& j);

// Canonical JSON form of the data: explicit "integral", one entry per degree
// 1..n, explicit "v_minus", all entries as strings. Parsing the result
// reproduces the data exactly.
nlohmann::ordered_json input_document_to_json(const SeifertData& data);

// input_document_to_json rendered as pretty-printed text (2-space indent,
// trailing newline).
std::string input_document_to_text(const SeifertData& data);

}  // namespace bcr
