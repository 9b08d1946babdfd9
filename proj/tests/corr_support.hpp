#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tgs/algebra/parse.hpp"
#include "tgs/corr/correspondence.hpp"

namespace tgs::testing {

inline VarietyPtr variety(const std::string& name, const FieldPtr& K, std::vector<std::string> vars,
                          const std::vector<std::string>& gens = {}) {
  std::vector<MPoly> I;
  for (const auto& g : gens) I.push_back(parse_polynomial(K, vars, g));
  return std::make_shared<const AffineVariety>(name, K, vars, I);
}

inline Correspondence corr(const std::string& name, const VarietyPtr& X, const VarietyPtr& Y,
                           const std::vector<std::pair<long, std::vector<std::string>>>& comps) {
  std::vector<std::string> vars = X->vars();
  vars.insert(vars.end(), Y->vars().begin(), Y->vars().end());
  std::vector<Component> cs;
  for (const auto& [m, gens] : comps) {
    Component c;
    c.multiplicity = m;
    for (const auto& g : gens) c.gens.push_back(parse_polynomial(X->base(), vars, g));
    cs.push_back(c);
  }
  return Correspondence(name, X, Y, cs);
}

inline Correspondence graph(const std::string& name, const VarietyPtr& X, const VarietyPtr& Y,
                            const std::vector<std::string>& images) {
  std::vector<MPoly> im;
  for (const auto& s : images) im.push_back(parse_polynomial(X->base(), X->vars(), s));
  return Correspondence::graph(name, X, Y, im);
}

inline std::string poly(const VarietyPtr& X, const MPoly& f) { return f.str(X->vars()); }


}  // namespace tgs::testing
