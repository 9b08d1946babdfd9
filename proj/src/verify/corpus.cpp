#include <functional>
#include <memory>

#include "tgs/algebra/parse.hpp"
#include "tgs/error.hpp"
#include "tgs/transfer/transfer.hpp"
#include "tgs/verify/suites.hpp"

namespace tgs {

namespace {

void run(CheckResult& r, const std::string& what, const std::function<bool()>& body) {
  ++r.instances;
  try {
    if (!body()) r.failures.push_back(what);
  } catch (const std::exception& e) {
    r.failures.push_back(what + ": " + e.what());
  }
}

VarietyPtr variety(const std::string& name, const FieldPtr& K, std::vector<std::string> vars,
                   const std::vector<std::string>& gens = {}) {
  std::vector<MPoly> I;
  for (const auto& g : gens) I.push_back(parse_polynomial(K, vars, g));
  return std::make_shared<const AffineVariety>(name, K, vars, I);
}

Correspondence corr(const std::string& name, const VarietyPtr& X, const VarietyPtr& Y,
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

Correspondence graph(const std::string& name, const VarietyPtr& X, const VarietyPtr& Y,
                     const std::vector<std::string>& images) {
  std::vector<MPoly> im;
  for (const auto& s : images) im.push_back(parse_polynomial(X->base(), X->vars(), s));
  return Correspondence::graph(name, X, Y, im);
}

std::vector<MPoly> fns(const VarietyPtr& Y, const std::vector<std::string>& gs) {
  std::vector<MPoly> out;
  for (const auto& g : gs) out.push_back(parse_polynomial(Y->base(), Y->vars(), g));
  return out;
}

struct Triple {
  std::string label;
  Correspondence a, b;
  /// One function on Z for Ga, Gm and mu_n respectively.
  std::string ga, gm, mu;
  unsigned n;
};

std::vector<Triple> functoriality_corpus() {
  std::vector<Triple> t;
  FieldPtr Q = rationals(), F5 = prime_field(5), F3 = prime_field(3), F7 = prime_field(7);
  {
    auto pt = variety("pt", Q, {});
    auto Y = variety("Y", Q, {"y"});
    auto Z = variety("Z", Q, {"z"});
    auto a = corr("a", pt, Y, {{1, {"y^2 - 2"}}});
    t.push_back({"sqrt 2 then squaring over Q", a, graph("sq", Y, Z, {"y^2"}), "z", "z", "-1", 2});
    t.push_back({"sqrt 2 then square roots over Q", a, corr("b", Y, Z, {{1, {"z^2 - y"}}}), "z^3 + z^2", "z + 1", "-1", 2});
    t.push_back({"weighted sums over Q", corr("a", pt, Y, {{3, {"y^2 - 2"}}, {-2, {"y - 1"}}}),
                 corr("b", Y, Z, {{1, {"z^2 - y"}}, {2, {"z - y - 1"}}}), "z^2 + z", "z + 3", "-1", 2});
  }
  {
    auto pt = variety("pt", F5, {});
    auto Y = variety("Y", F5, {"y"});
    auto Z = variety("Z", F5, {"z"});
    t.push_back({"split and non-split fibers over GF(5)", corr("a", pt, Y, {{1, {"y^2 - 2"}}, {1, {"y - 4"}}}),
                 corr("b", Y, Z, {{1, {"z^2 - y"}}}), "z", "z + 1", "2", 4});
  }
  {
    auto X = variety("X", Q, {"x"});
    auto Y = variety("Y", Q, {"y"});
    auto Z = variety("Z", Q, {"z"});
    t.push_back({"square root of x then a shift", corr("a", X, Y, {{1, {"y^2 - x"}}}), graph("s", Y, Z, {"y + 1"}),
                 "z^2", "z", "-1", 2});
    t.push_back({"x^2 then square roots", graph("f", X, Y, {"x^2"}), corr("b", Y, Z, {{1, {"z^2 - y"}}}), "z^3 + z",
                 "z^2 + 1", "-1", 2});
  }
  {
    auto pt = variety("pt", Q, {});
    auto Y = variety("Y", Q, {"y"}, {"y^2 + 1"});
    auto Z = variety("Z", Q, {"z"}, {"z^2 + 1"});
    t.push_back({"fourth roots of unity over Q(i)", corr("a", pt, Y, {{1, {"y^2 + 1"}}}), graph("c", Y, Z, {"y^3"}),
                 "z", "z", "z", 4});
  }
  {
    auto pt = variety("pt", F3, {});
    auto Y = variety("Y", F3, {"y"});
    auto Z = variety("Z", F3, {"z"});
    t.push_back({"Artin-Schreier fibers over GF(9)", corr("a", pt, Y, {{1, {"y^2 + 1"}}}),
                 corr("b", Y, Z, {{1, {"z^3 - z - y"}}}), "z", "z", "2", 2});
  }
  {
    auto X = variety("X", F7, {"x"});
    auto Y = variety("Y", F7, {"y"});
    auto Z = variety("Z", F7, {"z"});
    t.push_back({"conic over GF(7)(x)", corr("a", X, Y, {{2, {"y^2 - x - 1"}}}), graph("g", Y, Z, {"y^2 + y"}), "z",
                 "z", "6", 2});
  }
  return t;
}

}  // namespace

CheckResult functoriality_suite() {
  CheckResult r{"functoriality", 0, {}};
  for (const Triple& t : functoriality_corpus()) {
    const auto& Z = t.b.target();
    run(r, t.label + " (Ga)", [&] { return functoriality_check(t.a, t.b, GroupPlugin::ga(), fns(Z, {t.ga})).equal; });
    run(r, t.label + " (Gm)", [&] { return functoriality_check(t.a, t.b, GroupPlugin::gm(), fns(Z, {t.gm})).equal; });
    run(r, t.label + " (Mu(" + std::to_string(t.n) + "))",
        [&] { return functoriality_check(t.a, t.b, GroupPlugin::mu(t.n), fns(Z, {t.mu})).equal; });
  }
  return r;
}

namespace {

struct RadicialCase {
  std::string label;
  Correspondence V;
  std::vector<std::string> g;
};

std::vector<RadicialCase> radicial_corpus() {
  std::vector<RadicialCase> out;
  for (std::uint64_t p : {2u, 3u, 5u}) {
    FieldPtr F = prime_field(p);
    auto S = variety("S", F, {"s"});
    auto T = variety("T", F, {"t"});
    const std::string ps = std::to_string(p);
    out.push_back({"GF(" + ps + ")(s^(1/" + ps + "))", corr("V", S, T, {{1, {"t^" + ps + " - s"}}}), {"t", "t^2 + 1", "t + 1"}});
    out.push_back({"GF(" + ps + ")((s^2 + s)^(1/" + ps + "))", corr("V", S, T, {{1, {"t^" + ps + " - s^2 - s"}}}),
                   {"t", "t^3 + 1"}});
  }
  for (std::uint64_t p : {2u, 3u}) {
    FieldPtr F = prime_field(p);
    auto S = variety("S", F, {"s"});
    auto T = variety("T", F, {"u", "t"});
    const std::string ps = std::to_string(p);
    out.push_back({"GF(" + ps + ")(s^(1/" + ps + "^2)) as a tower",
                   corr("V", S, T, {{1, {"u^" + ps + " - s", "t^" + ps + " - u"}}}), {"t", "t + u", "t*u + 1"}});
  }
  return out;
}

}  // namespace

CheckResult radicial_suite() {
  CheckResult r{"radicial", 0, {}};
  for (const auto& c : radicial_corpus()) {
    RadicialDatum V = radicial_datum(c.V);
    for (const auto& g : c.g)
      for (const GroupPlugin& G : {GroupPlugin::ga(), GroupPlugin::gm()})
        run(r, c.label + ", " + G.str() + ", g = " + g, [&] {
          RadicialResult res = radicial_transfer(V, G, fns(c.V.target(), {g}));
          return res.pullback_identity && res.matches_transfer;
        });
  }
  return r;
}

CheckResult probe_suite() {
  CheckResult r{"characterization probe", 0, {}};
  std::vector<RadicialCase> cases = radicial_corpus();
  std::vector<RadicialDatum> data;
  for (const auto& c : cases) data.push_back(radicial_datum(c.V));
  std::vector<ProbeEntry> entries;
  for (std::size_t i = 0; i < cases.size(); ++i)
    for (const auto& g : cases[i].g)
      for (const GroupPlugin& G : {GroupPlugin::ga(), GroupPlugin::gm()}) {
        auto gs = fns(cases[i].V.target(), {g});
        entries.push_back({&data[i], G, gs, radicial_transfer(data[i], G, gs).h});
      }
  run(r, "empty assignment", [&] { return characterization_probe({}).empty(); });
  run(r, "canonical assignment", [&] { return characterization_probe(entries).empty(); });
  std::vector<std::size_t> perturbed;
  for (std::size_t i = 0; i < entries.size(); i += 5)
    if (entries[i].plugin == GroupPlugin::ga()) {
      auto& v = entries[i].claimed[0];
      v = v + TowerElem::integer(v.field(), 1);
      perturbed.push_back(i);
    }
  run(r, "perturbed assignment", [&] { return !perturbed.empty() && characterization_probe(entries) == perturbed; });
  return r;
}

namespace {

struct CompositionCase {
  std::string label;
  Correspondence a, b, c;
};

std::vector<CompositionCase> composition_corpus() {
  std::vector<CompositionCase> out;
  FieldPtr Q = rationals(), F5 = prime_field(5), F3 = prime_field(3);
  {
    auto pt = variety("pt", Q, {});
    auto Y = variety("Y", Q, {"y"});
    auto Z = variety("Z", Q, {"z"});
    auto W = variety("W", Q, {"w"});
    out.push_back({"sqrt 2, square roots, squaring", corr("a", pt, Y, {{1, {"y^2 - 2"}}}),
                   corr("b", Y, Z, {{1, {"z^2 - y"}}}), graph("c", Z, W, {"z^2"})});
    out.push_back({"weighted sums", corr("a", pt, Y, {{2, {"y^2 - 2"}}, {-1, {"y - 1"}}}),
                   corr("b", Y, Z, {{1, {"z^2 - y"}}, {3, {"z - y"}}}), graph("c", Z, W, {"z + 1"})});
    out.push_back({"zero summand", corr("a", pt, Y, {{1, {"y^2 - 3"}}, {0, {"y - 5"}}}),
                   corr("b", Y, Z, {{1, {"z^3 - y"}}}), corr("c", Z, W, {{1, {"w^2 - z"}}})});
  }
  {
    auto X = variety("X", Q, {"x"});
    auto Y = variety("Y", Q, {"y"});
    auto Z = variety("Z", Q, {"z"});
    auto W = variety("W", Q, {"w"});
    out.push_back({"three graphs", graph("a", X, Y, {"x + 1"}), graph("b", Y, Z, {"y^2"}), graph("c", Z, W, {"z^2 + 1"})});
    out.push_back({"square roots over A^1", corr("a", X, Y, {{1, {"y^2 - x"}}}), corr("b", Y, Z, {{1, {"z^2 - y"}}}),
                   graph("c", Z, W, {"z^3"})});
  }
  {
    auto pt = variety("pt", F5, {});
    auto Y = variety("Y", F5, {"y"});
    auto Z = variety("Z", F5, {"z"});
    auto W = variety("W", F5, {"w"});
    out.push_back({"mixed fibers over GF(5)", corr("a", pt, Y, {{1, {"y^2 - 2"}}, {1, {"y - 4"}}}),
                   corr("b", Y, Z, {{1, {"z^2 - y"}}}), corr("c", Z, W, {{1, {"w^2 - z"}}})});
  }
  {
    auto pt = variety("pt", F3, {});
    auto Y = variety("Y", F3, {"y"});
    auto Z = variety("Z", F3, {"z"});
    auto W = variety("W", F3, {"w"});
    out.push_back({"Artin-Schreier over GF(3)", corr("a", pt, Y, {{1, {"y^2 + 1"}}}),
                   corr("b", Y, Z, {{1, {"z^3 - z - y"}}}), graph("c", Z, W, {"z^2"})});
  }
  return out;
}

}  // namespace

CheckResult associativity_suite() {
  CheckResult r{"associativity", 0, {}};
  for (const auto& c : composition_corpus()) run(r, c.label, [&] { return associativity_check(c.a, c.b, c.c); });
  return r;
}

CheckResult graph_substitution_suite() {
  CheckResult r{"composition with a graph", 0, {}};
  FieldPtr Q = rationals(), F5 = prime_field(5);
  for (const FieldPtr& K : {Q, F5}) {
    auto X = variety("X", K, {"x"});
    auto P = variety("P", K, {"u", "v"}, {"v^2 - u^3 - u"});
    auto Y = variety("Y", K, {"y"});
    auto Z = variety("Z", K, {"z"});
    const std::vector<std::pair<VarietyPtr, std::string>> maps{{X, "x + 1"}, {X, "x^2"}, {X, "x^3 - x"}, {P, "v + u"}};
    const std::vector<Correspondence> bs{corr("b", Y, Z, {{1, {"z^2 - y"}}}),
                                         corr("b", Y, Z, {{2, {"z^3 - y*z - 1"}}, {-1, {"z - y"}}})};
    for (const auto& [S, f] : maps)
      for (const auto& b : bs)
        run(r, K->describe() + ": " + b.describe() + " after " + f, [&] {
          return graph_substitution_check(S, {parse_polynomial(K, S->vars(), f)}, b);
        });
  }
  return r;
}

CheckResult degree_suite() {
  CheckResult r{"degree multiplicativity", 0, {}};
  for (const auto& c : composition_corpus()) {
    run(r, c.label + " (first pair)", [&] { return degree(compose(c.a, c.b)) == degree(c.a) * degree(c.b); });
    run(r, c.label + " (second pair)", [&] { return degree(compose(c.b, c.c)) == degree(c.b) * degree(c.c); });
  }
  return r;
}

CheckResult length_conservation_suite() {
  CheckResult r{"length conservation", 0, {}};
  for (const auto& c : composition_corpus()) {
    for (const Correspondence* pair : {&c.b, &c.c}) {
      const Correspondence& src = pair == &c.b ? c.a : c.b;
      GenericCycle g = generic_fiber(src);
      for (std::size_t i = 0; i < g.points.size(); ++i)
        run(r, c.label + ": " + pair->name() + " over point " + std::to_string(i + 1), [&] {
          Pullback pb = pullback_along_point(*pair, g.points[i].coords, g.points[i].field);
          return pb.accounted == pb.fiber_dimension;
        });
    }
  }
  // special fibers where lengths exceed one
  FieldPtr Q = rationals();
  auto Y = variety("Y", Q, {"y"});
  auto Z = variety("Z", Q, {"z"});
  auto b = corr("b", Y, Z, {{1, {"z^2 - y"}}, {2, {"z^3 - y^2"}}});
  for (long y0 : {0, 1, 4}) {
    run(r, "special fiber at y = " + std::to_string(y0), [&] {
      Pullback pb = pullback_along_point(b, {TowerElem::integer(Q, y0)}, Q);
      return pb.accounted == pb.fiber_dimension;
    });
  }
  return r;
}

}  // namespace tgs
