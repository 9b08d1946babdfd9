#pragma once

#include <string>
#include <vector>

#include "tgs/algebra/tower_elem.hpp"

namespace tgs {

/// A commutative group scheme given as a product of Ga, Gm and mu_n.
class GroupPlugin {
 public:
  struct Factor {
    enum class Kind { Ga, Gm, Mu };
    Kind kind;
    unsigned n = 0;  // order for Mu
  };

  GroupPlugin() = default;
  explicit GroupPlugin(std::vector<Factor> fs) : fs_(std::move(fs)) {}
  static GroupPlugin ga() { return GroupPlugin({{Factor::Kind::Ga}}); }
  static GroupPlugin gm() { return GroupPlugin({{Factor::Kind::Gm}}); }
  static GroupPlugin mu(unsigned n) { return GroupPlugin({{Factor::Kind::Mu, n}}); }
  /// "Ga", "Gm", "Mu(3)" joined by '*'; throws InvalidArgument.
  static GroupPlugin parse(const std::string& s);

  const std::vector<Factor>& factors() const { return fs_; }
  std::size_t arity() const { return fs_.size(); }
  std::string str() const;
  bool operator==(const GroupPlugin& o) const { return str() == o.str(); }

 private:
  std::vector<Factor> fs_;
};

/// A point of the plugin over a field: one coordinate per factor.
using GroupPoint = std::vector<TowerElem>;

/// Throws NotAUnit (Gm, Mu) or InvalidArgument (wrong arity, g^n != 1).
void check_point(const GroupPlugin& G, const GroupPoint& g);
GroupPoint group_identity(const GroupPlugin& G, const FieldPtr& K);
GroupPoint group_add(const GroupPlugin& G, const GroupPoint& a, const GroupPoint& b);
/// m·g in the group law; negative m uses the inverse.
GroupPoint group_scale(const GroupPlugin& G, const GroupPoint& g, long m);
bool group_equal(const GroupPoint& a, const GroupPoint& b);
GroupPoint lift_point(const GroupPoint& g, const FieldPtr& ext);
std::string point_str(const GroupPoint& g);

}  // namespace tgs
