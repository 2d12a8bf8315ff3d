#pragma once

#include <json.hpp>

#include "hyperoct/famsets.hpp"
#include "hyperoct/signed_perm.hpp"
#include "hyperoct/symring.hpp"
#include "hyperoct/tableaux.hpp"

namespace hyperoct {

using json = nlohmann::json;

json to_json(const SignedPerm& w);            // [-5,-2,...]
SignedPerm signed_perm_from_json(const json& j);

json to_json(const SignedSet& s);             // {"word":"10*0"}
SignedSet signed_set_from_json(const json& j);

json to_json(const Partition& p);             // [3,1]
json to_json(const Bipartition& bp);          // {"lambda":[...],"mu":[...]}
Bipartition bipartition_from_json(const json& j);

json to_json(const SignedComposition& g);     // [2,-1,3]
SignedComposition signed_composition_from_json(const json& j);

json to_json(const Tableau& t);               // rows
json to_json(const Bitableau& t);             // {"plus":...,"minus":...}

json to_json(const SchurVecB& v);             // [{"lambda":..,"mu":..,"coeff":"p/q"}]
json to_json(const SchurVecA& v);             // [{"lambda":..,"coeff":"p/q"}]

json to_json(const DescentDistributionB& d);  // [{"word":"..","count":k}]
DescentDistributionB descent_distribution_b_from_json(const json& j, int degree);
json to_json(const DescentDistributionA& d);  // [{"set":[..],"count":k}]
DescentDistributionA descent_distribution_a_from_json(const json& j, int degree);

json to_json(const FineSetReport& r);

}  // namespace hyperoct
