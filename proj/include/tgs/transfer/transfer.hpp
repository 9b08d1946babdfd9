#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgs/corr/correspondence.hpp"
#include "tgs/sym/plugin.hpp"

namespace tgs {

struct TransferOptions {
  /// Points of degree at most this are also pushed forward through the
  /// symmetric power.
  std::size_t max_degree = 6;
};

struct TransferResult {
  /// Over K(X), one coordinate per plugin factor.
  GroupPoint value;
  /// Per factor, a polynomial on X representing the value, when there is one.
  std::vector<std::optional<MPoly>> regular;
  /// Points confirmed by the symmetric power pushforward, and points above
  /// the degree threshold.
  std::size_t crosschecked = 0;
  std::size_t skipped = 0;
};

/// Sum of traces (Ga) or product of norms (Gm, mu_n) of g at the points of
/// c, weighted by multiplicity.  g has one polynomial per plugin factor in
/// the target's variables.  Throws NotInvertibleAtPoint, InvalidArgument
/// (g is not a point of the plugin) and Error if the symmetric power
/// disagrees.
TransferResult transfer(const GenericCycle& c, const GroupPlugin& G, const std::vector<MPoly>& g,
                        const VarietyPtr& source = nullptr, const TransferOptions& opt = {});
TransferResult transfer(const Correspondence& a, const GroupPlugin& G, const std::vector<MPoly>& g,
                        const TransferOptions& opt = {});

struct FunctorialityReport {
  /// a^*(b^* g) and (b o a)^* g.
  GroupPoint lhs, rhs;
  /// b^* g as polynomials on Y.
  std::vector<MPoly> intermediate;
  bool equal = false;
};

/// Throws NotRegularizable when b^* g is not a regular function on Y.
FunctorialityReport functoriality_check(const Correspondence& a, const Correspondence& b, const GroupPlugin& G,
                                        const std::vector<MPoly>& g, const TransferOptions& opt = {});

/// A correspondence with one component whose generic fiber is purely
/// inseparable over K(X).
struct RadicialDatum {
  Correspondence V;
  FieldPtr K, L;
  std::size_t degree;
  /// Target coordinates at the generic point, in L.
  std::vector<TowerElem> q;
};

/// Throws InvalidArgument unless V is radicial.
RadicialDatum radicial_datum(const Correspondence& V);

struct RadicialResult {
  /// t_V(g) in K(X).
  GroupPoint h;
  /// p^* h = d q^* g in L.
  bool pullback_identity = false;
  /// h agrees with the transfer along [V].
  bool matches_transfer = false;
};

/// Throws NotInSubfield if d q^* g does not descend to K(X).
RadicialResult radicial_transfer(const RadicialDatum& V, const GroupPlugin& G, const std::vector<MPoly>& g);

struct ProbeEntry {
  const RadicialDatum* datum;
  GroupPlugin plugin;
  std::vector<MPoly> g;
  GroupPoint claimed;
};

/// Indices of entries whose claimed value differs from t_V(g).
std::vector<std::size_t> characterization_probe(const std::vector<ProbeEntry>& entries);

/// When g and h agree at the generic point of Y, whether they agree modulo
/// its ideal; nullopt when they differ generically.
std::optional<bool> dominant_injectivity_check(const AffineVariety& Y, const MPoly& g, const MPoly& h);

/// Specializes the transfer along a at a K-point of the source and compares
/// with the transfer of the specialized cycle.  nullopt if the point is bad:
/// a denominator vanishes or a specialized component is not a reduced point.
std::optional<bool> specialization_check(const Correspondence& a, const GroupPlugin& G, const std::vector<MPoly>& g,
                                         const std::vector<Value>& point);

}  // namespace tgs
