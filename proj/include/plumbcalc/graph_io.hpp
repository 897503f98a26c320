#pragma once

#include <string>

#include <json.hpp>

#include "plumbcalc/graph.hpp"

namespace plumbcalc {

inline constexpr const char* kGraphFormat = "plumbing-v1";

nlohmann::json to_json(const PlumbingGraph& g);
// Throws std::invalid_argument on schema violations.
PlumbingGraph graph_from_json(const nlohmann::json& j);

// Bit-stable text: sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);
std::string to_dot(const PlumbingGraph& g);

PlumbingGraph read_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace plumbcalc
