#pragma once

#include <json.hpp>

#include <map>
#include <string>

#include "kmw/cartan.hpp"
#include "kmw/engine.hpp"
#include "kmw/weights.hpp"

namespace kmw {

using Json = nlohmann::json;

// Algebra descriptor: a built-in label, {"type": "A2"}, or {"cartan": [[...]]}.
Gcm parse_algebra_json(const Json& j);
// Accepts a label, inline JSON (leading '{'), or a path to a JSON file.
Gcm parse_algebra_arg(const std::string& arg);

HighestWeight parse_lambda_json(const Json& j);          // ["3","-1/2"] or [3, ...]
HighestWeight parse_lambda_csv(const std::string& arg);  // "3,-1/2"

NodeSet parse_nodes_csv(const std::string& arg, int n);  // "" | "0,2"
DepthVector parse_depth_csv(const std::string& arg, int n);

std::vector<Word> parse_relations_json(const Json& j);  // [[[0,2],[1,1]], ...]
std::vector<Word> parse_relations_arg(const std::string& arg);

ModulePresentation parse_presentation_json(const Json& j);

Json lambda_json(const HighestWeight& lam);
Json depth_json(const DepthVector& d);
Json nodes_json(const NodeSet& s);
Json weight_set_json(const TruncatedWeightSet& s);

}  // namespace kmw
