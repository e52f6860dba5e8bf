#pragma once

// JSON forms of the engine's objects, as used by the CLI:
//   permutation      "2,5,1,4,3" (compact "25143" accepted on input, n <= 9)
//   polynomial       {"x1^2*x2": "1", "1": "-3"}  (decimal strings)
//   chain            {"perms": [...], "labels": [...]}; bare arrays accepted
//   pd               {"n": N, "rows": [["cross","bump","elbow"], ...]}
//   bpd              {"n": N, "rows": [["blank","h","v","cross","es","nw"], ...]}
//   hpd              {"n": N, "tau": "PBBPB", "labels": [...], "rows": [[...], ...]}
//   flagged tableau  {"n": N, "rows": [[0,2,1], ...]} (0 = empty cell)
//   algebra element  {"3,2,1": {polynomial}, ...}

#include <nlohmann/json.hpp>

#include "schubert/algebra.hpp"
#include "schubert/bumpless.hpp"
#include "schubert/chains.hpp"
#include "schubert/hybrid.hpp"
#include "schubert/perm.hpp"
#include "schubert/pipedreams.hpp"
#include "schubert/poly.hpp"

namespace schubert {

using json = nlohmann::ordered_json;

json poly_to_json(const Polynomial& f);

json chain_to_json(const BruhatChain& c);
BruhatChain chain_from_json(const json& j);

json pd_to_json(const PdGrid& g);
PdGrid pd_from_json(const json& j);

json bpd_to_json(const BpdGrid& g);
BpdGrid bpd_from_json(const json& j);

json hpd_to_json(const HpdGrid& g);
HpdGrid hpd_from_json(const json& j);

json ft_to_json(const FlaggedTableau& t);
FlaggedTableau ft_from_json(const json& j);

json algebra_to_json(const GroupAlgebraElement& a);

}  // namespace schubert
