#include "json.hpp"

#include "tgs/cli/report.hpp"
#include "tgs/transfer/transfer.hpp"

namespace tgs::cli {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unverified: return "unverified";
  }
  return "fail";
}

bool CommandReport::failed() const {
  for (const Result& r : results)
    if (r.status == Status::Fail) return true;
  return false;
}

bool Report::failed() const {
  for (const CommandReport& c : commands)
    if (c.failed()) return true;
  return false;
}

namespace {

Status check(bool ok) { return ok ? Status::Pass : Status::Fail; }

std::string polys_str(const std::vector<MPoly>& ps, const std::vector<std::string>& vars) {
  if (ps.size() == 1) return ps[0].str(vars);
  std::string s = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].str(vars);
  return s + ")";
}

std::string coords_str(const std::vector<TowerElem>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].str();
  return s + ")";
}

class Runner {
 public:
  Runner(const Script& s, const ExecOptions& opt) : s_(s), opt_(opt) {}

  void run(const Command& c, std::vector<Result>& out, std::vector<std::string>& flags) {
    std::vector<std::string> sources;
    if (c.kind == Command::Kind::Transfer || c.kind == Command::Kind::Radicial) sources = {c.corrs[0]};
    if (c.kind == Command::Kind::Functoriality) sources = {c.corrs[0], c.corrs[1]};
    for (const auto& n : sources) {
      const auto& X = s_.corr(n).source();
      if (!X->certified_smooth())
        flags.push_back("normality of " + X->name() + " is not certified; transfers are canonical only on normal sources");
    }
    switch (c.kind) {
      case Command::Kind::Compose: return compose_cmd(c, out);
      case Command::Kind::Transfer: return transfer_cmd(c, out);
      case Command::Kind::Degree:
        out.push_back({"degree", Status::Pass, std::to_string(degree(s_.corr(c.corrs[0])))});
        return;
      case Command::Kind::Validate: return validate_cmd(c, out);
      case Command::Kind::Explain: return explain_cmd(c, out);
      case Command::Kind::Functoriality: return functoriality_cmd(c, out);
      case Command::Kind::Associativity: return associativity_cmd(c, out);
      case Command::Kind::Lemmas: return lemmas_cmd(c, out);
      case Command::Kind::Radicial: return radicial_cmd(c, out);
    }
  }

 private:
  GenericCycle chain(const std::vector<std::string>& names) {
    GenericCycle g = compose(s_.corr(names[0]), s_.corr(names[1]));
    for (std::size_t i = 2; i < names.size(); ++i) g = compose(g, s_.corr(names[i]));
    return g;
  }

  static std::string composite_name(const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = names.size(); i-- > 0;) s += names[i] + (i ? " o " : "");
    return s;
  }

  void compose_cmd(const Command& c, std::vector<Result>& out) {
    GenericCycle g = chain(c.corrs);
    out.push_back({composite_name(c.corrs), Status::Pass, describe(g)});
    out.push_back({"degree", Status::Pass, std::to_string(degree(g))});
  }

  void transfer_cmd(const Command& c, std::vector<Result>& out) {
    const Correspondence& a = s_.corr(c.corrs[0]);
    TransferResult r = transfer(a, c.plugin, c.functions, {opt_.max_degree});
    out.push_back({"transfer", Status::Pass, point_str(r.value)});
    std::vector<MPoly> reg;
    for (const auto& p : r.regular)
      if (p) reg.push_back(*p);
    if (reg.size() == r.regular.size())
      out.push_back({"regular on " + a.source()->name(), Status::Pass, polys_str(reg, a.source()->vars())});
    else
      out.push_back({"regular on " + a.source()->name(), Status::Unverified, std::nullopt});
    std::size_t total = r.crosschecked + r.skipped;
    out.push_back({"sym-power cross-check", r.skipped ? Status::Unverified : Status::Pass,
                   std::to_string(r.crosschecked) + " of " + std::to_string(total) + " points"});
  }

  void validate_cmd(const Command& c, std::vector<Result>& out) {
    ValidationReport v = validate(s_.corr(c.corrs[0]));
    for (std::size_t i = 0; i < v.components.size(); ++i) {
      std::string label = "component " + std::to_string(i + 1);
      std::string line = v.components[i];
      if (line.rfind(label + ": ", 0) == 0) line = line.substr(label.size() + 2);
      out.push_back({label, Status::Pass, line});
    }
    for (const auto& u : v.unverified) out.push_back({"unverified", Status::Unverified, u});
  }

  void explain_cmd(const Command& c, std::vector<Result>& out) {
    GenericCycle g = generic_fiber(s_.corr(c.corrs[0]));
    out.push_back({"generic point", Status::Pass, g.base->describe()});
    for (std::size_t i = 0; i < g.points.size(); ++i) {
      const CyclePoint& p = g.points[i];
      std::string ext = p.field->describe_over(*g.base);
      out.push_back({"point " + std::to_string(i + 1), Status::Pass,
                     std::to_string(p.multiplicity) + "*" + coords_str(p.coords) +
                         (ext.empty() ? "" : " over " + ext)});
    }
    out.push_back({"cycle", Status::Pass, describe(g)});
    out.push_back({"degree", Status::Pass, std::to_string(degree(g))});
  }

  void functoriality_cmd(const Command& c, std::vector<Result>& out) {
    const Correspondence& a = s_.corr(c.corrs[0]);
    const Correspondence& b = s_.corr(c.corrs[1]);
    FunctorialityReport r = functoriality_check(a, b, c.plugin, c.functions, {opt_.max_degree});
    out.push_back({b.name() + "^* g", Status::Pass, polys_str(r.intermediate, b.source()->vars())});
    out.push_back({a.name() + "^*(" + b.name() + "^* g)", Status::Pass, point_str(r.lhs)});
    out.push_back({"(" + b.name() + " o " + a.name() + ")^* g", Status::Pass, point_str(r.rhs)});
    out.push_back({"functoriality", check(r.equal), std::nullopt});
  }

  void associativity_cmd(const Command& c, std::vector<Result>& out) {
    const auto& n = c.corrs;
    out.push_back({composite_name(n), Status::Pass, describe(chain(n))});
    bool ok = associativity_check(s_.corr(n[0]), s_.corr(n[1]), s_.corr(n[2]));
    out.push_back({"associativity", check(ok), std::nullopt});
  }

  void lemmas_cmd(const Command& c, std::vector<Result>& out) {
    std::uint64_t seed = c.seed.value_or(opt_.seed);
    SuiteSize size = c.size.value_or(SuiteSize::Small);
    for (const CheckResult& r : lemma_suites(seed, size)) {
      std::string v = std::to_string(r.instances - r.failures.size()) + "/" + std::to_string(r.instances) + " passed";
      if (!r.failures.empty()) v += "; first failure: " + r.failures.front();
      out.push_back({r.label, check(r.passed()), v});
    }
  }

  void radicial_cmd(const Command& c, std::vector<Result>& out) {
    RadicialDatum d = radicial_datum(s_.corr(c.corrs[0]));
    RadicialResult r = radicial_transfer(d, c.plugin, c.functions);
    out.push_back({"degree", Status::Pass, std::to_string(d.degree)});
    out.push_back({"t_" + c.corrs[0] + "(g)", Status::Pass, point_str(r.h)});
    out.push_back({"p^* t = d q^* g", check(r.pullback_identity), std::nullopt});
    out.push_back({"agrees with transfer", check(r.matches_transfer), std::nullopt});
  }

  const Script& s_;
  ExecOptions opt_;
};

}  // namespace

Report execute(const Script& script, const ExecOptions& opt) {
  Report rep;
  Runner runner(script, opt);
  const auto& st = script.statements();
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (!st[i].command) continue;
    CommandReport c;
    c.command = st[i].text.substr(0, st[i].text.size() - 1);
    c.loc = st[i].loc;
    c.flags = script.flags_before(i);
    std::string where = "line " + std::to_string(c.loc.line) + ", column " + std::to_string(c.loc.column) + ": ";
    try {
      runner.run(*st[i].command, c.results, c.flags);
    } catch (const Error& e) {
      c.results.push_back({e.kind(), Status::Fail, where + e.what()});
    } catch (const std::exception& e) {
      c.results.push_back({"error", Status::Fail, where + e.what()});
    }
    rep.commands.push_back(std::move(c));
  }
  return rep;
}

namespace {

nlohmann::ordered_json command_json(const CommandReport& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["results"] = nlohmann::ordered_json::array();
  for (const Result& r : c.results) {
    nlohmann::ordered_json x;
    x["label"] = r.label;
    x["status"] = status_name(r.status);
    if (r.value)
      x["value"] = *r.value;
    else
      x["value"] = nullptr;
    j["results"].push_back(x);
  }
  j["flags"] = c.flags;
  return j;
}

}  // namespace

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  if (r.commands.size() == 1) {
    j = command_json(r.commands[0]);
  } else {
    j = nlohmann::ordered_json::array();
    for (const auto& c : r.commands) j.push_back(command_json(c));
  }
  return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  std::string s;
  for (std::size_t i = 0; i < r.commands.size(); ++i) {
    const CommandReport& c = r.commands[i];
    if (i) s += "\n";
    s += "> " + c.command + "\n";
    for (const Result& x : c.results) {
      s += std::string("  [") + status_name(x.status) + "] " + x.label;
      if (x.value) s += ": " + *x.value;
      s += "\n";
    }
    for (const auto& f : c.flags) s += "  flag: " + f + "\n";
  }
  return s;
}

std::string error_json(const ScriptError& e) {
  nlohmann::ordered_json j;
  j["error"]["kind"] = e.kind();
  j["error"]["message"] = e.what();
  j["error"]["line"] = e.location().line;
  j["error"]["column"] = e.location().column;
  j["error"]["expected"] = e.expected();
  return j.dump(2) + "\n";
}

std::string error_text(const ScriptError& e, const std::string& where) {
  std::string s = where + ":" + std::to_string(e.location().line) + ":" + std::to_string(e.location().column) + ": " +
                  e.kind() + ": " + e.what();
  if (!e.expected().empty()) {
    s += " (expected ";
    for (std::size_t i = 0; i < e.expected().size(); ++i) s += (i ? ", " : "") + e.expected()[i];
    s += ")";
  }
  return s + "\n";
}

}  // namespace tgs::cli
