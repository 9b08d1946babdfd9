#include <random>

#include "doctest.h"
#include "json.hpp"
#include "tgs/cli/report.hpp"

using namespace tgs;
using namespace tgs::cli;

namespace {

ScriptError parse_error(const std::string& text, const ParseOptions& opt = {}) {
  try {
    parse(text, opt);
  } catch (const ScriptError& e) {
    return e;
  }
  FAIL("no error for: " << text);
  return ScriptError("", "", {});
}

const Result* find(const CommandReport& c, const std::string& label) {
  for (const Result& r : c.results)
    if (r.label == label) return &r;
  return nullptr;
}

const char* kSqrt2 =
    "variety pt over Q vars () ideal ();\n"
    "variety Y over Q vars (y) ideal ();\n"
    "variety Z over Q vars (z) ideal ();\n"
    "corr a : pt -> Y = 1*[y^2 - 2];\n"
    "corr sq : Y -> Z = 1*[z - y^2];\n"
    "verify functoriality a sq Ga (z);\n"
    "verify functoriality a sq Gm (z);\n";

// Power sums and the product of the roots of t^2 - c: p1 = 0, p2 = 2c, e2 = -c.
mpq_class trace_of_square(const mpq_class& c) { return 2 * c; }
mpq_class norm_of_square(const mpq_class& c) { return c * c; }

}  // namespace

TEST_CASE("declarations") {
  Script s = parse("field k = GF(5);");
  REQUIRE(s.statements().size() == 1);
  CHECK(s.statements()[0].kind == Statement::Kind::Field);
  CHECK(s.statements()[0].name == "k");
  CHECK(s.field("k")->characteristic() == 5);

  s = parse(
      "variety X over Q vars (x) ideal ();\n"
      "variety Y over Q vars (y) ideal ();\n"
      "corr a : X -> Y = 2*[y^2 - x] + -1*[y - x];\n"
      "transfer a Gm (1 + y);\n");
  const Correspondence& a = s.corr("a");
  REQUIRE(a.components().size() == 2);
  CHECK(a.components()[0].multiplicity == 2);
  CHECK(a.components()[1].multiplicity == -1);
  const Statement& t = s.statements().back();
  CHECK(t.kind == Statement::Kind::Command);
  REQUIRE(t.command);
  CHECK(t.command->kind == Command::Kind::Transfer);
  CHECK(t.command->plugin.str() == "Gm");
  CHECK(t.text == "transfer a Gm (y + 1);");

  s = parse("field k = Q(i : i^2 + 1); field K = k(s, t); plugin G = Ga*Mu(4)*Gm;");
  CHECK(s.field("K")->generator_names() == std::vector<std::string>{"i", "s", "t"});
  CHECK(s.statements()[2].text == "plugin G = Ga*Mu(4)*Gm;");
}

TEST_CASE("errors carry positions and expected tokens") {
  ScriptError e = parse_error("field k = GF(5);\nvariety X over k vars (x) ideal (x^2;\n");
  CHECK(e.kind() == "SyntaxError");
  CHECK(e.location().line == 2);
  CHECK(e.location().column == 37);
  CHECK(e.expected() == std::vector<std::string>{",", ")"});

  e = parse_error("frobnicate;");
  CHECK(e.kind() == "SyntaxError");
  CHECK(e.location().column == 1);
  CHECK(e.expected().size() == 11);

  e = parse_error("variety X over k vars (x) ideal ();");
  CHECK(e.kind() == "NameError");
  CHECK(e.location().column == 16);

  e = parse_error("variety X over Q vars (x) ideal (x*w);");
  CHECK(e.kind() == "NameError");
  CHECK(e.location().column == 36);

  e = parse_error(
      "variety X over Q vars (x) ideal ();\nvariety Y over Q vars (y) ideal ();\n"
      "corr a : X -> Y = 1*[y - x];\ntransfer a Ga*Gm (y);");
  CHECK(e.kind() == "TypeError");
  CHECK(e.location().line == 4);
  CHECK(e.location().column == 18);

  CHECK(parse_error("field k = GF(6);").kind() == "TypeError");
  CHECK(parse_error("field k = Q; field k = Q;").kind() == "NameError");
  CHECK(parse_error("field k = Q(a : a^2 - 4);").kind() == "InvalidArgument");
  CHECK(parse_error("field k = Q(a : a^2 - 2); field K = k(a);").kind() == "NameError");
  CHECK(parse_error("plugin Gm = Ga;").kind() == "NameError");

  // Columns count characters.
  e = parse_error("# \xc3\xa9t\xc3\xa9\nfield k = \xc3\xa9;");
  CHECK(e.location().line == 2);
  CHECK(e.location().column == 11);

  e = parse_error(
      "variety X over Q vars (x) ideal ();\nvariety Y over Q vars (y) ideal ();\n"
      "corr a : X -> Y = 1*[y^2 - x^2];");
  CHECK(e.kind() == "InvalidComponent");
  CHECK(e.location().line == 3);
}

TEST_CASE("irreducibility policy") {
  const char* big = "field k = Q(a : a^9 - 2);";
  CHECK(parse(big).flags().size() == 1);
  CHECK(parse(big, {IrreducibilityCheck::On}).flags().empty());
  // Finite fields are always checked.  Roots satisfy a^(3^2k) = a + k, so
  // they lie in GF(3^6) and the polynomial cannot be irreducible.
  CHECK(parse_error("field k = GF(3)(a : a^9 - a - 1);").kind() == "InvalidArgument");
  CHECK(parse("field k = Q(a : a^2 - 2);", {IrreducibilityCheck::Off}).flags().size() == 1);
  CHECK(parse_error("field k = Q(a : a^9 - 1);", {IrreducibilityCheck::On}).kind() == "InvalidArgument");
}

TEST_CASE("the square root of 2 script") {
  Report r = execute(parse(kSqrt2));
  REQUIRE(r.commands.size() == 2);
  std::string tr = trace_of_square(2).get_str(), nm = norm_of_square(2).get_str();
  for (std::size_t i = 0; i < 2; ++i) {
    const CommandReport& c = r.commands[i];
    const std::string& expect = i == 0 ? tr : nm;
    REQUIRE(find(c, "a^*(sq^* g)"));
    CHECK(*find(c, "a^*(sq^* g)")->value == expect);
    CHECK(*find(c, "(sq o a)^* g")->value == expect);
    CHECK(find(c, "functoriality")->status == Status::Pass);
  }
  CHECK(tr == "4");
  CHECK(nm == "4");
  CHECK(!r.failed());
}

TEST_CASE("commands") {
  Script s = parse(
      "variety X over Q vars (x) ideal ();\n"
      "variety Y over Q vars (y) ideal ();\n"
      "corr f : X -> Y = 1*[y - x^3 - 1];\n"
      "corr r : X -> Y = 1*[y^2 - x] + -1*[y - 1];\n"
      "degree f;\n"
      "degree r;\n"
      "validate r;\n"
      "explain r;\n"
      "transfer r Gm (y);\n");
  Report rep = execute(s);
  REQUIRE(rep.commands.size() == 5);
  CHECK(*rep.commands[0].results[0].value == "1");
  CHECK(*rep.commands[1].results[0].value == "1");
  CHECK(find(rep.commands[2], "unverified")->status == Status::Unverified);
  CHECK(*find(rep.commands[3], "cycle")->value == "-1*[y - 1] + 1*[y^2 - x]");
  // Nm(y) = -x over y^2 = x, divided by the value 1 at y = 1.
  CHECK(*find(rep.commands[4], "transfer")->value == "-x");
  CHECK(!rep.failed());

  // A module error becomes a failing result with the statement position.
  rep = execute(parse(
      "variety pt over Q vars () ideal ();\nvariety Y over Q vars (y) ideal ();\n"
      "corr r : pt -> Y = 1*[y^2 - 2];\ntransfer r Gm (y^2 - 2);"));
  REQUIRE(rep.commands[0].results.size() == 1);
  CHECK(rep.commands[0].results[0].label == "NotInvertibleAtPoint");
  CHECK(rep.commands[0].results[0].value->rfind("line 4, column 1: ", 0) == 0);
  CHECK(rep.failed());
}

TEST_CASE("normality flag") {
  const char* text =
      "variety C over Q vars (u, v) ideal (v^2 - u^3);\n"
      "variety D over Q vars (u, v) ideal (v^2 - u^3 - 1);\n"
      "variety Y over Q vars (y) ideal ();\n"
      "corr a : C -> Y = 1*[y^2 - v];\n"
      "corr b : D -> Y = 1*[y^2 - v];\n"
      "transfer a Gm (y + 1);\n"
      "transfer b Gm (y + 1);\n"
      "degree a;\n";
  Report r = execute(parse(text));
  REQUIRE(r.commands.size() == 3);
  REQUIRE(r.commands[0].flags.size() == 1);
  CHECK(r.commands[0].flags[0].find("normality of C") == 0);
  CHECK(r.commands[1].flags.empty());
  CHECK(r.commands[2].flags.empty());
  CHECK(*find(r.commands[0], "transfer")->value == "-v + 1");
}

TEST_CASE("lemma battery from the script") {
  Report r = execute(parse("verify lemmas seed=1 size=small;"));
  REQUIRE(r.commands.size() == 1);
  CHECK(r.commands[0].results.size() == 8);
  for (const Result& x : r.commands[0].results) CHECK_MESSAGE(x.status == Status::Pass, x.label);
  // The script seed wins over the command line seed.
  CHECK(to_json(r) == to_json(execute(parse("verify lemmas seed=1 size=small;"), {7, 6})));
}

TEST_CASE("report renderings") {
  Report r = execute(parse(kSqrt2));
  auto j = nlohmann::json::parse(to_json(r));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  std::string text = to_text(r);
  for (const auto& c : j) {
    CHECK(c.size() == 3);
    CHECK(c["command"].is_string());
    CHECK(c["flags"].is_array());
    CHECK(text.find("> " + c["command"].get<std::string>() + "\n") != std::string::npos);
    for (const auto& x : c["results"]) {
      std::string st = x["status"];
      CHECK((st == "pass" || st == "fail" || st == "unverified"));
      std::string line = "[" + st + "] " + x["label"].get<std::string>();
      if (!x["value"].is_null()) line += ": " + x["value"].get<std::string>();
      CHECK(text.find(line + "\n") != std::string::npos);
    }
  }
  Report one = execute(parse("field k = GF(2); verify lemmas seed=3;"));
  CHECK(nlohmann::json::parse(to_json(one)).is_object());
  auto e = nlohmann::json::parse(error_json(parse_error("field k = ;")));
  CHECK(e["error"]["kind"] == "SyntaxError");
  CHECK(e["error"]["line"] == 1);
  CHECK(e["error"]["column"] == 11);
}

namespace {

struct ScriptGen {
  std::mt19937_64 rng;

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

  std::string gap() {
    switch (pick(6)) {
      case 0: return "  ";
      case 1: return "\n";
      case 2: return " # note\n";
      case 3: return "\t";
      default: return " ";
    }
  }

  /// A random polynomial in one variable, written loosely.
  std::string poly(const std::string& v, int maxdeg) {
    std::string s;
    int terms = 1 + static_cast<int>(pick(3));
    for (int k = 0; k < terms; ++k) {
      int c = static_cast<int>(pick(7)) - 3;
      if (c == 0) c = 1;
      int d = static_cast<int>(pick(static_cast<std::size_t>(maxdeg) + 1));
      if (k) s += pick(2) ? " + " : "+";
      s += "(" + std::to_string(c) + ")";
      if (d) s += "*" + v + (d > 1 ? "^" + std::to_string(d) : "");
    }
    return s;
  }

  std::string script() {
    std::vector<std::string> st;
    const char* fields[] = {"Q", "GF(2)", "GF(3)", "GF(7)", "k"};
    std::string K = fields[pick(5)];
    if (K == "k") st.push_back("field k =" + gap() + "Q(a:a^2 - 3);");
    st.push_back("variety X over " + K + " vars (x) ideal ();");
    st.push_back("variety Y over " + K + gap() + "vars(y)ideal( );");
    st.push_back("variety Z over " + K + " vars (z) ideal ();");
    if (pick(2)) st.push_back("plugin G =" + gap() + "Ga * Gm;");
    std::size_t ncorr = 2 + pick(2);
    for (std::size_t i = 0; i < ncorr; ++i) {
      bool first = i % 2 == 0;
      std::string v = first ? "y" : "z", u = first ? "x" : "y";
      std::string c = "corr c" + std::to_string(i) + " : " + (first ? "X -> Y" : "Y -> Z") + " =";
      std::size_t comps = 1 + pick(2);
      for (std::size_t j = 0; j < comps; ++j) {
        if (j) c += pick(2) ? " + " : " - ";
        if (pick(2)) c += std::to_string(1 + pick(3)) + "*";
        c += "[" + gap() + v + " - (" + poly(u, 3) + ")]";
      }
      st.push_back(c + ";");
    }
    st.push_back("degree c0;");
    st.push_back("compose" + gap() + "c0 c1;");
    st.push_back("transfer c1 Ga (" + poly("z", 2) + ");");
    if (pick(2)) st.push_back("verify functoriality c0 c1 Ga (" + poly("z", 2) + ");");
    if (pick(2)) st.push_back("verify lemmas size=small;");
    std::string out;
    for (const auto& s : st) out += s + gap();
    return out;
  }
};

}  // namespace

TEST_CASE("parse and render round trip") {
  ScriptGen g{std::mt19937_64(2024)};
  for (int i = 0; i < 40; ++i) {
    std::string text = g.script();
    Script s = parse(text);
    std::string canon = s.render();
    CHECK_MESSAGE(parse(canon).render() == canon, text);
    CHECK(parse(canon).statements().size() == s.statements().size());
  }
}

TEST_CASE("reports are deterministic") {
  ScriptGen g{std::mt19937_64(99)};
  for (int i = 0; i < 6; ++i) {
    std::string text = g.script();
    std::string a = to_json(execute(parse(text), {5, 6}));
    std::string b = to_json(execute(parse(text), {5, 6}));
    CHECK(a == b);
    CHECK(to_json(execute(parse(parse(text).render()), {5, 6})) == a);
  }
}
