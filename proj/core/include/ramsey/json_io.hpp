#pragma once

#include "ramsey/colouring.hpp"
#include "ramsey/partition.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace ramsey {

// Interchange schema: {"n": N, "r": R, "edges": [[u, v, [c...]], ...]} with
// pairs listed canonically (u < v, lexicographic). For an EdgeColouring every
// pair appears with a single colour; loaders validate totality.
nlohmann::json to_json(const EdgeColouring& g);
nlohmann::json to_json(const MultiColouredGraph& g);
nlohmann::json to_json(const Partition& pi);

EdgeColouring edge_colouring_from_json(const nlohmann::json& j);
MultiColouredGraph multicoloured_from_json(const nlohmann::json& j);
Partition partition_from_json(const nlohmann::json& j);

// File helpers; parse errors carry the byte position reported by the parser.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const nlohmann::json& j, const std::string& path);

EdgeColouring load_edge_colouring(const std::string& path);
MultiColouredGraph load_multicoloured(const std::string& path);

// Plain text "u v" lines, one per edge.
void write_edge_list(std::ostream& os, const SimpleGraph& g);

}  // namespace ramsey
