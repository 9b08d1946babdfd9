#include "tgs/cli/script.hpp"

#include <algorithm>
#include <cctype>

#include "tgs/algebra/factor.hpp"
#include "tgs/algebra/parse.hpp"

namespace tgs::cli {

Location locate(std::string_view text, std::size_t offset) {
  Location loc;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '\n') {
      ++loc.line;
      loc.column = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++loc.column;
    }
  }
  return loc;
}

std::vector<std::string> Script::flags_before(std::size_t i) const {
  std::size_t n = i < flag_counts_.size() ? flag_counts_[i] : flags_.size();
  return {flags_.begin(), flags_.begin() + static_cast<long>(n)};
}

std::string Script::render() const {
  std::string out;
  for (const Statement& s : statements_) out += s.text + "\n";
  return out;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

const std::vector<std::string> kStatementStarts = {"field",  "variety", "corr",   "plugin",  "compose", "transfer",
                                                   "degree", "validate", "explain", "verify", "radicial"};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

}  // namespace

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opt) : s_(text), opt_(opt) {}

  Script run() {
    try {
      for (;;) {
        blanks();
        if (pos_ >= s_.size()) break;
        start_ = pos_;
        statement();
        out_.flag_counts_.push_back(out_.flags_.size());
      }
    } catch (const ScriptError&) {
      throw;
    } catch (const SyntaxError& e) {
      throw ScriptError(e.kind(), e.what(), locate(s_, e.offset()), e.expected());
    } catch (const SourceError& e) {
      throw ScriptError(e.kind(), e.what(), locate(s_, e.offset()));
    } catch (const Error& e) {
      throw ScriptError(e.kind(), e.what(), locate(s_, start_));
    }
    return std::move(out_);
  }

 private:
  // Lexical helpers.

  void blanks() { skip_blanks(s_, pos_); }

  [[noreturn]] void syntax(const std::string& what, std::vector<std::string> expected) {
    throw SyntaxError(what, pos_, std::move(expected));
  }

  std::string found() {
    if (pos_ >= s_.size()) return "end of input";
    if (ident_start(s_[pos_])) return "'" + peek_word() + "'";
    return std::string("'") + s_[pos_] + "'";
  }

  std::string peek_word() {
    blanks();
    std::size_t e = pos_;
    if (e < s_.size() && ident_start(s_[e]))
      while (e < s_.size() && ident_char(s_[e])) ++e;
    return std::string(s_.substr(pos_, e - pos_));
  }

  bool accept_word(const std::string& w) {
    if (peek_word() != w) return false;
    pos_ += w.size();
    return true;
  }

  void expect_word(const std::string& w) {
    if (!accept_word(w)) syntax("expected '" + w + "', found " + found(), {w});
  }

  bool accept(std::string_view tok) {
    blanks();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok, std::vector<std::string> also = {}) {
    if (accept(tok)) return;
    also.insert(also.begin(), std::string(tok));
    syntax("expected '" + std::string(tok) + "', found " + found(), also);
  }

  std::string ident(const std::string& what) {
    std::string w = peek_word();
    if (w.empty()) syntax("expected " + what + ", found " + found(), {what});
    pos_ += w.size();
    return w;
  }

  std::uint64_t integer(const std::string& what) {
    blanks();
    std::size_t e = pos_;
    while (e < s_.size() && std::isdigit(static_cast<unsigned char>(s_[e]))) ++e;
    if (e == pos_) syntax("expected " + what + ", found " + found(), {"integer"});
    if (e - pos_ > 18) throw TypeError(what + " is too large");
    std::uint64_t v = std::stoull(std::string(s_.substr(pos_, e - pos_)));
    pos_ = e;
    return v;
  }

  [[noreturn]] void name_error(const std::string& what, std::size_t at) { throw NameError(what, at); }
  [[noreturn]] void type_error(const std::string& what, std::size_t at) {
    throw SourceError("TypeError", what, at);
  }

  MPoly expr(const FieldPtr& K, const std::vector<std::string>& vars) {
    blanks();
    std::size_t at = pos_;
    try {
      return ExprParser(K, vars).parse(s_, pos_);
    } catch (const SourceError&) {
      throw;
    } catch (const Error& e) {
      throw SourceError(e.kind(), e.what(), at);
    }
  }

  /// '(' e1, e2, ... ')'; possibly empty.
  std::vector<MPoly> expr_list(const FieldPtr& K, const std::vector<std::string>& vars, const std::string& close) {
    std::vector<MPoly> out;
    if (accept(close)) return out;
    for (;;) {
      out.push_back(expr(K, vars));
      if (accept(close)) return out;
      expect(",", {close});
    }
  }

  std::string render_list(const std::vector<MPoly>& ps, const std::vector<std::string>& vars) {
    std::vector<std::string> xs;
    for (const MPoly& p : ps) xs.push_back(p.str(vars));
    return join(xs, ", ");
  }

  void check_fresh_names(const FieldPtr& K, const std::vector<std::string>& names, std::size_t at,
                         const std::string& what) {
    auto gens = K->generator_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (std::find(gens.begin(), gens.end(), names[i]) != gens.end())
        name_error(what + " '" + names[i] + "' clashes with a generator of " + K->describe(), at);
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j]) name_error(what + " '" + names[i] + "' is repeated", at);
    }
  }

  // References.

  /// Q | GF(p) | NAME; appends canonical text.
  FieldPtr field_ref(std::string& text) {
    std::size_t at = (blanks(), pos_);
    std::string w = ident("field");
    if (w == "Q") {
      text += "Q";
      return rationals();
    }
    if (w == "GF") {
      expect("(");
      std::size_t pat = (blanks(), pos_);
      std::uint64_t p = integer("characteristic");
      expect(")");
      if (p > 0xFFFFFFFFull || !is_prime(p)) type_error("GF(" + std::to_string(p) + "): modulus is not a prime", pat);
      text += "GF(" + std::to_string(p) + ")";
      return prime_field(p);
    }
    auto it = out_.fields_.find(w);
    if (it == out_.fields_.end()) name_error("unknown field '" + w + "'", at);
    text += w;
    return it->second;
  }

  VarietyPtr variety_ref() {
    std::size_t at = (blanks(), pos_);
    std::string w = ident("variety name");
    auto it = out_.varieties_.find(w);
    if (it == out_.varieties_.end()) name_error("unknown variety '" + w + "'", at);
    return it->second;
  }

  std::shared_ptr<const Correspondence> corr_ref(std::string& text) {
    std::size_t at = (blanks(), pos_);
    std::string w = ident("correspondence name");
    auto it = out_.corrs_.find(w);
    if (it == out_.corrs_.end()) name_error("unknown correspondence '" + w + "'", at);
    text += " " + w;
    return it->second;
  }

  GroupPlugin plugin_literal() {
    std::vector<GroupPlugin::Factor> fs;
    do {
      std::size_t at = (blanks(), pos_);
      std::string w = ident("Ga, Gm or Mu");
      if (w == "Ga") {
        fs.push_back({GroupPlugin::Factor::Kind::Ga});
      } else if (w == "Gm") {
        fs.push_back({GroupPlugin::Factor::Kind::Gm});
      } else if (w == "Mu") {
        expect("(");
        std::size_t nat = (blanks(), pos_);
        std::uint64_t n = integer("order");
        expect(")");
        if (n == 0 || n > 1000000) type_error("Mu(" + std::to_string(n) + ") is not supported", nat);
        fs.push_back({GroupPlugin::Factor::Kind::Mu, static_cast<unsigned>(n)});
      } else {
        pos_ = at;
        syntax("expected a group factor, found " + found(), {"Ga", "Gm", "Mu"});
      }
    } while (accept("*"));
    return GroupPlugin(std::move(fs));
  }

  GroupPlugin plugin_ref(std::string& text) {
    std::string w = peek_word();
    auto it = out_.plugins_.find(w);
    if (it != out_.plugins_.end()) {
      pos_ += w.size();
      text += " " + w;
      return it->second;
    }
    if (!w.empty() && w != "Ga" && w != "Gm" && w != "Mu") name_error("unknown plugin '" + w + "'", pos_);
    GroupPlugin G = plugin_literal();
    text += " " + G.str();
    return G;
  }

  /// Functions on Y, one per factor of G.
  std::vector<MPoly> functions(const VarietyPtr& Y, const GroupPlugin& G, std::string& text) {
    std::size_t at = (blanks(), pos_);
    expect("(");
    auto fs = expr_list(Y->base(), Y->vars(), ")");
    if (fs.size() != G.arity())
      type_error(G.str() + " takes " + std::to_string(G.arity()) + " function" + (G.arity() == 1 ? "" : "s") +
                     ", got " + std::to_string(fs.size()),
                 at);
    text += " (" + render_list(fs, Y->vars()) + ")";
    return fs;
  }

  void composable(const std::vector<std::shared_ptr<const Correspondence>>& cs, std::size_t at) {
    for (std::size_t i = 0; i + 1 < cs.size(); ++i)
      if (cs[i]->target() != cs[i + 1]->source())
        type_error(cs[i]->name() + " ends at " + cs[i]->target()->name() + " but " + cs[i + 1]->name() +
                       " starts at " + cs[i + 1]->source()->name(),
                   at);
  }

  // Statements.

  void statement() {
    std::string w = peek_word();
    if (w == "field") return field_decl();
    if (w == "variety") return variety_decl();
    if (w == "corr") return corr_decl();
    if (w == "plugin") return plugin_decl();
    if (w == "compose" || w == "transfer" || w == "degree" || w == "validate" || w == "explain" || w == "verify" ||
        w == "radicial")
      return command();
    syntax("expected a statement, found " + found(), kStatementStarts);
  }

  void push(Statement::Kind kind, std::string name, std::string text, std::optional<Command> cmd = std::nullopt) {
    out_.statements_.push_back({kind, std::move(name), locate(s_, start_), std::move(text), std::move(cmd)});
  }

  std::string declared_name(const std::string& what, bool taken) {
    std::size_t at = (blanks(), pos_);
    std::string name = ident(what + " name");
    if (taken) name_error(what + " '" + name + "' is already declared", at);
    return name;
  }

  void field_decl() {
    expect_word("field");
    std::size_t at = (blanks(), pos_);
    std::string name = ident("field name");
    if (name == "Q" || name == "GF") name_error("'" + name + "' is reserved", at);
    if (out_.fields_.count(name)) name_error("field '" + name + "' is already declared", at);
    expect("=");
    std::string text;
    FieldPtr F = field_ref(text);
    if (accept("(")) {
      std::size_t gat = (blanks(), pos_);
      std::vector<std::string> names{ident("generator name")};
      if (accept(":")) {
        check_fresh_names(F, names, gat, "generator");
        MPoly m = expr(F, names);
        expect(")");
        if (m.total_degree() < 1) type_error("minimal polynomial of " + names[0] + " must have positive degree", gat);
        m = m.monic();
        text += "(" + names[0] + " : " + m.str(names) + ")";
        Coeffs c(static_cast<std::size_t>(m.total_degree()) + 1, F->zero());
        for (const Term& t : m.terms()) c[static_cast<std::size_t>(t.mono[0])] = t.coef;
        F = adjoin(F, names[0], std::move(c), m.str(names));
      } else {
        while (accept(",")) names.push_back(ident("generator name"));
        expect(")", {",", ":"});
        check_fresh_names(F, names, gat, "generator");
        text += "(" + join(names, ", ") + ")";
        for (const auto& t : names) F = adjoin_transcendental(F, t);
      }
    }
    expect(";");
    out_.fields_[name] = F;
    push(Statement::Kind::Field, name, "field " + name + " = " + text + ";");
  }

  FieldPtr adjoin(const FieldPtr& F, const std::string& gen, Coeffs c, const std::string& shown) {
    int deg = static_cast<int>(c.size()) - 1;
    bool check = true;
    std::string why;
    if (opt_.irreducibility == IrreducibilityCheck::Off) {
      check = false;
      why = "checking disabled";
    } else if (opt_.irreducibility == IrreducibilityCheck::Auto && F->characteristic() == 0 &&
               deg > opt_.auto_bound) {
      check = false;
      why = "degree " + std::to_string(deg) + " above the check bound " + std::to_string(opt_.auto_bound);
    }
    if (check) return adjoin_checked(F, gen, std::move(c));
    out_.flags_.push_back("irreducibility of " + shown + " over " + F->describe() + " asserted, not checked (" + why +
                          ")");
    return adjoin_root(F, gen, std::move(c));
  }

  void variety_decl() {
    expect_word("variety");
    std::string name = declared_name("variety", out_.varieties_.count(peek_word()) > 0);
    expect_word("over");
    std::string ftext;
    FieldPtr K = field_ref(ftext);
    expect_word("vars");
    expect("(");
    std::size_t vat = (blanks(), pos_);
    std::vector<std::string> vars;
    if (!accept(")")) {
      for (;;) {
        vars.push_back(ident("variable name"));
        if (accept(")")) break;
        expect(",", {")"});
      }
    }
    check_fresh_names(K, vars, vat, "variable");
    expect_word("ideal");
    expect("(");
    auto I = expr_list(K, vars, ")");
    expect(";");
    auto V = std::make_shared<const AffineVariety>(name, K, vars, I);
    out_.varieties_[name] = V;
    push(Statement::Kind::Variety, name,
         "variety " + name + " over " + ftext + " vars (" + join(vars, ", ") + ") ideal (" + render_list(I, vars) +
             ");");
  }

  void corr_decl() {
    expect_word("corr");
    std::string name = declared_name("correspondence", out_.corrs_.count(peek_word()) > 0);
    expect(":");
    VarietyPtr X = variety_ref();
    expect("->");
    VarietyPtr Y = variety_ref();
    if (X->base() != Y->base()) type_error(X->name() + " and " + Y->name() + " have different base fields", start_);
    std::vector<std::string> vars = X->vars();
    for (const auto& v : Y->vars()) {
      if (std::find(vars.begin(), vars.end(), v) != vars.end())
        name_error("variable '" + v + "' is shared by " + X->name() + " and " + Y->name(), start_);
      vars.push_back(v);
    }
    expect("=");
    std::vector<Component> comps;
    std::vector<std::string> shown;
    bool first = true;
    for (;;) {
      long sign = 1;
      if (!first) {
        if (accept("-")) {
          sign = -1;
        } else if (!accept("+")) {
          break;
        }
      }
      if (accept("-")) sign = -sign;
      std::size_t mat = (blanks(), pos_);
      long m = 1;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::uint64_t v = integer("multiplicity");
        if (v > 1000000000ull) type_error("multiplicity is too large", mat);
        m = static_cast<long>(v);
        expect("*");
      }
      m *= sign;
      if (m == 0) type_error("multiplicity 0", mat);
      expect("[");
      Component c;
      c.multiplicity = m;
      c.gens = expr_list(X->base(), vars, "]");
      if (c.gens.empty()) type_error("a component needs at least one generator", mat);
      shown.push_back(std::to_string(m) + "*[" + render_list(c.gens, vars) + "]");
      comps.push_back(std::move(c));
      first = false;
    }
    expect(";", {"+", "-"});
    auto a = std::make_shared<const Correspondence>(name, X, Y, std::move(comps));
    validate(*a);
    out_.corrs_[name] = a;
    push(Statement::Kind::Corr, name,
         "corr " + name + " : " + X->name() + " -> " + Y->name() + " = " + join(shown, " + ") + ";");
  }

  void plugin_decl() {
    expect_word("plugin");
    std::size_t at = (blanks(), pos_);
    std::string name = ident("plugin name");
    if (name == "Ga" || name == "Gm" || name == "Mu") name_error("'" + name + "' is reserved", at);
    if (out_.plugins_.count(name)) name_error("plugin '" + name + "' is already declared", at);
    expect("=");
    GroupPlugin G = plugin_literal();
    expect(";", {"*"});
    out_.plugins_[name] = G;
    push(Statement::Kind::Plugin, name, "plugin " + name + " = " + G.str() + ";");
  }

  void command() {
    Command c{};
    std::string text;
    std::vector<std::shared_ptr<const Correspondence>> cs;
    std::string w = ident("command");
    text = w;
    std::size_t at = (blanks(), pos_);
    auto corrs = [&](std::size_t n, bool at_least) {
      for (std::size_t i = 0; i < n; ++i) cs.push_back(corr_ref(text));
      if (at_least)
        while (!peek_word().empty()) cs.push_back(corr_ref(text));
      composable(cs, at);
    };
    if (w == "compose") {
      c.kind = Command::Kind::Compose;
      corrs(2, true);
    } else if (w == "transfer" || w == "radicial") {
      c.kind = w == "transfer" ? Command::Kind::Transfer : Command::Kind::Radicial;
      corrs(1, false);
      c.plugin = plugin_ref(text);
      c.functions = functions(cs[0]->target(), c.plugin, text);
    } else if (w == "degree" || w == "validate" || w == "explain") {
      c.kind = w == "degree" ? Command::Kind::Degree : w == "validate" ? Command::Kind::Validate : Command::Kind::Explain;
      corrs(1, false);
    } else {
      std::string what = peek_word();
      if (what == "functoriality") {
        pos_ += what.size();
        text += " functoriality";
        c.kind = Command::Kind::Functoriality;
        at = (blanks(), pos_);
        corrs(2, false);
        c.plugin = plugin_ref(text);
        c.functions = functions(cs[1]->target(), c.plugin, text);
      } else if (what == "associativity") {
        pos_ += what.size();
        text += " associativity";
        c.kind = Command::Kind::Associativity;
        at = (blanks(), pos_);
        corrs(3, false);
      } else if (what == "lemmas") {
        pos_ += what.size();
        text += " lemmas";
        c.kind = Command::Kind::Lemmas;
        lemma_options(c, text);
      } else {
        syntax("expected a check, found " + found(), {"functoriality", "associativity", "lemmas"});
      }
    }
    for (const auto& a : cs) c.corrs.push_back(a->name());
    expect(";");
    push(Statement::Kind::Command, "", text + ";", std::move(c));
  }

  void lemma_options(Command& c, std::string& text) {
    for (;;) {
      std::string k = peek_word();
      if (k == "seed" && !c.seed) {
        pos_ += k.size();
        expect("=");
        c.seed = integer("seed");
        text += " seed=" + std::to_string(*c.seed);
      } else if (k == "size" && !c.size) {
        pos_ += k.size();
        expect("=");
        std::size_t at = (blanks(), pos_);
        std::string v = ident("small or full");
        if (v != "small" && v != "full") {
          pos_ = at;
          syntax("expected small or full, found '" + v + "'", {"small", "full"});
        }
        c.size = v == "small" ? SuiteSize::Small : SuiteSize::Full;
        text += " size=" + v;
      } else {
        return;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
  ParseOptions opt_;
  Script out_;
};

Script parse(std::string_view text, const ParseOptions& opt) { return Parser(text, opt).run(); }

}  // namespace tgs::cli
