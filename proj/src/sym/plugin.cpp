#include "tgs/sym/plugin.hpp"

#include "tgs/error.hpp"

namespace tgs {

GroupPlugin GroupPlugin::parse(const std::string& s) {
  std::vector<Factor> fs;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t star = s.find('*', pos);
    std::string part = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    if (part == "Ga") {
      fs.push_back({Factor::Kind::Ga});
    } else if (part == "Gm") {
      fs.push_back({Factor::Kind::Gm});
    } else if (part.size() > 4 && part.compare(0, 3, "Mu(") == 0 && part.back() == ')') {
      std::string num = part.substr(3, part.size() - 4);
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num.size() > 9)
        throw InvalidArgument("bad order in '" + part + "'");
      unsigned n = static_cast<unsigned>(std::stoul(num));
      if (n == 0) throw InvalidArgument("Mu(0) is not a group scheme here");
      fs.push_back({Factor::Kind::Mu, n});
    } else {
      throw InvalidArgument("unknown group factor '" + part + "'");
    }
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return GroupPlugin(std::move(fs));
}

std::string GroupPlugin::str() const {
  std::string s;
  for (const Factor& f : fs_) {
    if (!s.empty()) s += "*";
    switch (f.kind) {
      case Factor::Kind::Ga: s += "Ga"; break;
      case Factor::Kind::Gm: s += "Gm"; break;
      case Factor::Kind::Mu: s += "Mu(" + std::to_string(f.n) + ")"; break;
    }
  }
  return s;
}

void check_point(const GroupPlugin& G, const GroupPoint& g) {
  if (g.size() != G.arity())
    throw InvalidArgument(G.str() + " takes " + std::to_string(G.arity()) + " coordinates, got " +
                          std::to_string(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& f = G.factors()[i];
    if (f.kind == GroupPlugin::Factor::Kind::Ga) continue;
    if (g[i].is_zero()) throw NotAUnit("0 is not a unit");
    if (f.kind == GroupPlugin::Factor::Kind::Mu && !g[i].pow(f.n).is_one())
      throw InvalidArgument(g[i].str() + " is not an " + std::to_string(f.n) + "-th root of unity");
  }
}

GroupPoint group_identity(const GroupPlugin& G, const FieldPtr& K) {
  GroupPoint r;
  for (const auto& f : G.factors())
    r.push_back(TowerElem::integer(K, f.kind == GroupPlugin::Factor::Kind::Ga ? 0 : 1));
  return r;
}

GroupPoint group_add(const GroupPlugin& G, const GroupPoint& a, const GroupPoint& b) {
  GroupPoint r;
  for (std::size_t i = 0; i < G.arity(); ++i)
    r.push_back(G.factors()[i].kind == GroupPlugin::Factor::Kind::Ga ? a[i] + b[i] : a[i] * b[i]);
  return r;
}

GroupPoint group_scale(const GroupPlugin& G, const GroupPoint& g, long m) {
  GroupPoint r;
  for (std::size_t i = 0; i < G.arity(); ++i) {
    if (G.factors()[i].kind == GroupPlugin::Factor::Kind::Ga)
      r.push_back(TowerElem::integer(g[i].field(), m) * g[i]);
    else
      r.push_back(g[i].pow(m));
  }
  return r;
}

bool group_equal(const GroupPoint& a, const GroupPoint& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

GroupPoint lift_point(const GroupPoint& g, const FieldPtr& ext) {
  GroupPoint r;
  for (const auto& x : g) r.push_back(x.lift_to(ext));
  return r;
}

std::string point_str(const GroupPoint& g) {
  if (g.size() == 1) return g[0].str();
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ", ";
    s += g[i].str();
  }
  return s + ")";
}

}  // namespace tgs
