#pragma once

#include "piercing/hypergraph.hpp"
#include "piercing/interval.hpp"
#include "piercing/tree.hpp"
#include "piercing/treewidth.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace piercing {

using AnyFamily = std::variant<DIntervalFamily, SubforestFamily, TwInstance>;

// Instance documents:
//   {"type":"d_intervals","d":2,"edges":[[["0","1/2"],["3","4"]],...],
//    "general_position":false}
//   {"type":"tree_subgraphs","d":2,"tree":{"n":5,"edges":[[0,1],...]},
//    "subgraphs":[[0,1,3],...]}
//   {"type":"tw_graph","k":1,"d":2,"graph":{"n":4,"edges":[[0,1],...]},
//    "bags":[[0,1],...],"bag_tree":[[0,1],...],"subgraphs":[[0,2],...]}
// Rationals are strings "num/den" or integer strings; JSON integers are also
// accepted. For tw_graph, "d" is optional and defaults to the largest
// component count among the subgraphs.
//
// Errors: InvalidInstance whose where() is a JSON pointer to the offending
// field ("/edges/3/1/0"); syntax errors carry nlohmann's line/column text.
AnyFamily parse_instance(const nlohmann::json& doc);
AnyFamily parse_instance_text(std::string_view text);
AnyFamily load_instance(const std::string& path);

nlohmann::json to_json(const DIntervalFamily& family);
nlohmann::json to_json(const SubforestFamily& family);
nlohmann::json to_json(const TwInstance& instance);
nlohmann::json to_json(const AnyFamily& family);

HypergraphInstance incidence_of(const AnyFamily& family);
int family_d(const AnyFamily& family);

}  // namespace piercing
