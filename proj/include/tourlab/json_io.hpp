#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>

#include "tourlab/arborescence.hpp"
#include "tourlab/instance.hpp"
#include "tourlab/partition.hpp"
#include "tourlab/tour.hpp"
#include "tourlab/uncross.hpp"

namespace tourlab {

// Instance: {"id": ..., "points": [[x, y] | [x_num, x_den, y_num, y_den], ...]}.
// Integer points use the 2-element shorthand.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

// Tours are bare index arrays; {"order": [...]} is accepted on input.
nlohmann::json tour_to_json(const Tour& t);
Tour tour_from_json(const nlohmann::json& j);

// Subdivided pair: the instance plus both re-threaded tours.
nlohmann::json subdivided_to_json(const SubdividedPair& sp);

nlohmann::json partition_to_json(const EdgePartition& part);

// {"root": id, "edges": [{"from", "to", "c", "w"}, ...]}
nlohmann::json arborescence_to_json(const Arborescence& a);
Arborescence arborescence_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace tourlab
