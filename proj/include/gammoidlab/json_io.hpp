#pragma once

#include "json.hpp"
#include <string>

#include "gammoidlab/bimaze.hpp"
#include "gammoidlab/dimaze.hpp"
#include "gammoidlab/lazy.hpp"

namespace gammoidlab {

using Json = nlohmann::json;

// Documents are plain JSON objects; keys come out sorted and dumps are
// newline-terminated, so equal structures have equal bytes.

Json dimaze_doc(const Dimaze& d);
Dimaze parse_dimaze(const Json& j);

// Dimaze document with an optional "frontier" list.
Json truncation_doc(const Truncation& t);
Truncation parse_truncation(const Json& j);

Json bimaze_doc(const Bimaze& b);
Bimaze parse_bimaze(const Json& j);

Json linkage_doc(const Dimaze& d, const PathSystem& p);
PathSystem parse_linkage(const Dimaze& d, const Json& j);

Json matching_doc(const BipartiteGraph& g, const Matching& m);
Matching parse_matching(const BipartiteGraph& g, const Json& j);

Json separator_doc(const Dimaze& d, const Separator& s);
Json certificate_doc(const Dimaze& d, const PatternCertificate& c);

std::string dump_doc(const Json& j);

// Reads a whole file, or stdin for "-"; throws InputError with the parser's
// position message on malformed JSON.
Json load_doc(const std::string& path);
Json parse_doc(const std::string& text, const std::string& origin);

}  // namespace gammoidlab
