#include "hyperoct/json_io.hpp"

#include <stdexcept>

namespace hyperoct {

json to_json(const SignedPerm& w) { return json(w.window()); }

SignedPerm signed_perm_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("signed permutation must be an array");
  return SignedPerm(j.get<std::vector<int>>());
}

json to_json(const SignedSet& s) { return json{{"word", s.word()}}; }

SignedSet signed_set_from_json(const json& j) {
  return SignedSet(j.at("word").get<std::string>());
}

json to_json(const Partition& p) { return json(p.parts); }

json to_json(const Bipartition& bp) {
  return json{{"lambda", bp.lambda.parts}, {"mu", bp.mu.parts}};
}

Bipartition bipartition_from_json(const json& j) {
  return Bipartition(Partition(j.at("lambda").get<std::vector<int>>()),
                     Partition(j.at("mu").get<std::vector<int>>()));
}

json to_json(const SignedComposition& g) { return json(g.parts); }

SignedComposition signed_composition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("signed composition must be an array");
  return SignedComposition(j.get<std::vector<int>>());
}

json to_json(const Tableau& t) { return json(t.rows); }

json to_json(const Bitableau& t) {
  return json{{"plus", t.plus.rows}, {"minus", t.minus.rows}};
}

json to_json(const SchurVecB& v) {
  json out = json::array();
  for (const auto& [bp, c] : v.coeffs) {
    if (c == 0) continue;
    out.push_back(json{{"lambda", bp.lambda.parts},
                       {"mu", bp.mu.parts},
                       {"coeff", rat_to_string(c)}});
  }
  return out;
}

json to_json(const SchurVecA& v) {
  json out = json::array();
  for (const auto& [p, c] : v.coeffs) {
    if (c == 0) continue;
    out.push_back(json{{"lambda", p.parts}, {"coeff", rat_to_string(c)}});
  }
  return out;
}

json to_json(const DescentDistributionB& d) {
  json out = json::array();
  for (const auto& [sigma, count] : d.counts)
    out.push_back(json{{"word", sigma.word()}, {"count", count}});
  return out;
}

DescentDistributionB descent_distribution_b_from_json(const json& j, int degree) {
  DescentDistributionB d;
  d.degree = degree;
  for (const auto& item : j) {
    const SignedSet sigma(item.at("word").get<std::string>());
    if (sigma.n() != degree) throw std::invalid_argument("word of wrong degree");
    d.counts[sigma] += item.at("count").get<long long>();
  }
  return d;
}

json to_json(const DescentDistributionA& d) {
  json out = json::array();
  for (const auto& [s, count] : d.counts)
    out.push_back(json{{"set", std::vector<int>(s.begin(), s.end())}, {"count", count}});
  return out;
}

DescentDistributionA descent_distribution_a_from_json(const json& j, int degree) {
  DescentDistributionA d;
  d.degree = degree;
  for (const auto& item : j) {
    const auto v = item.at("set").get<std::vector<int>>();
    for (int i : v)
      if (i < 1 || i >= degree) throw std::invalid_argument("descent out of range");
    d.counts[std::set<int>(v.begin(), v.end())] += item.at("count").get<long long>();
  }
  return d;
}

json to_json(const FineSetReport& r) {
  json out{{"family", r.family}, {"n", r.n},       {"params", r.params},
           {"pass", r.pass},     {"detail", r.detail}};
  if (r.schur_b) out["schur"] = to_json(*r.schur_b);
  if (r.schur_a) out["schur"] = to_json(*r.schur_a);
  if (r.expected_b) out["expected"] = to_json(*r.expected_b);
  if (r.expected_a) out["expected"] = to_json(*r.expected_a);
  if (r.dist_b) out["distribution"] = to_json(*r.dist_b);
  if (r.dist_a) out["distribution"] = to_json(*r.dist_a);
  return out;
}

}  // namespace hyperoct
