#pragma once

#include <json.hpp>

#include "isotree/coloring.hpp"
#include "isotree/constructive.hpp"
#include "isotree/families.hpp"
#include "isotree/oracle.hpp"
#include "isotree/predicates.hpp"
#include "isotree/tree.hpp"

namespace isotree {

using json = nlohmann::json;

json tree_to_json(const Tree& t);
Tree tree_from_json(const json& j);

json to_json(const VertexSet& s);
json to_json(const Certificate& cert);
json to_json(const SolveResult& r);
json to_json(const Coloring& c);
json to_json(const StepTrace& st);
json to_json(const ConstructiveResult& r);
json to_json(const BranchReport& r);
json to_json(const TkResult& r);
json to_json(const HkReport& r);

ExtremalRecipe extremal_recipe_from_json(const json& j);
GapGadgetRecipe gap_recipe_from_json(const json& j);

}  // namespace isotree
