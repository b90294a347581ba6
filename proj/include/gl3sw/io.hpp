#pragma once

#include <json.hpp>

#include "gl3sw/alcoves.hpp"
#include "gl3sw/chars.hpp"
#include "gl3sw/extcmp.hpp"
#include "gl3sw/fq.hpp"
#include "gl3sw/tensor.hpp"

namespace gl3sw {

using Json = nlohmann::json;

Json char_to_json(const FormalCharacter& c);
Json summands_to_json(const SummandList& list);
Json socle_to_json(const SocleReport& report);
Json verdict_to_json(const ExtVerdict& v);
Json support_to_json(const std::vector<SupportEntry>& entries);
Json scan_to_json(const ScanResult& result, bool with_records);
std::string scan_to_csv(const ScanResult& result);

}  // namespace gl3sw
