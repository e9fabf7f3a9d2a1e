#ifndef ALCOVE_IO_HPP
#define ALCOVE_IO_HPP

#include <string>

#include <json.hpp>

#include "alcove/admissible.hpp"
#include "alcove/chains.hpp"
#include "alcove/characters.hpp"
#include "alcove/crystal.hpp"

namespace alcove {

using json = nlohmann::json;

json chain_to_json(const RootSystem& rs, const LambdaChain& chain);
LambdaChain chain_from_json(const RootSystem& rs, const json& j);

json subset_to_json(const LambdaChain& chain, const std::vector<int>& positions);
std::vector<int> subset_from_json(const json& j);

json character_to_json(const CharacterPoly& ch);
CharacterPoly character_from_json(const json& j);

json graph_to_json(const RootSystem& rs, const CrystalGraph& g);

// head:i,j+tail:k,l with 1-based indices inside each segment; either part may
// be absent. Requires a special-form chain.
std::vector<int> parse_subset_spec(const LambdaChain& chain, const std::string& spec);
std::string format_subset_spec(const LambdaChain& chain, const std::vector<int>& positions);

}  // namespace alcove

#endif
