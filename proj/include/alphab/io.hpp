#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "alphab/broadcast.hpp"
#include "alphab/gadget.hpp"
#include "alphab/graph.hpp"

namespace alphab {

// Text formats.  All are line-based and deterministic:
//   graph:      "n m" header, then m lines "u v" with u < v, sorted
//   broadcast:  lines "v value" for positive values only, sorted by v
//   role map:   one line "v role owner" per vertex; roles orig/sub/ctr/leaf,
//               owner "-" on the core
// '#'-prefixed lines are ignored on input.

std::string graph_to_text(const Graph& g);
Graph graph_from_text(std::string_view text);

std::string broadcast_to_text(const Broadcast& f);
// vertex_count bounds the vertex ids; unlisted vertices get value 0.
Broadcast broadcast_from_text(std::string_view text, int vertex_count);

std::string role_map_to_text(const GadgetGraph& gg);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

// FNV-1a, used to fingerprint inputs in run reports.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace alphab
