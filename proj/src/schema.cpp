#include "intensio/schema.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace intensio::schema {

using lang::Formula;
using lang::Term;

Type SchemaInstance::target_type() const {
  if (kind == SchemaKind::ConceptComprehension) return Type::fun(xType, Type::t());
  if (!y) throw SchemaError("typed instance is missing its output variable");
  return Type::fun(xType, y->second);
}

namespace {

struct MatrixScan {
  // bound variables with their types, and implicit type-indexed symbols
  std::vector<std::pair<std::string, Type>> bound;
  std::vector<std::pair<std::string, Type>> implicit;
  std::set<std::string> seenBound, seenImplicit;

  void add_bound(const std::string& name, const Type& ty) {
    std::string key = name + ":" + print_type(ty);
    if (seenBound.insert(key).second) bound.emplace_back(name, ty);
  }

  void add_implicit(const std::string& name, const Type& ty) {
    if (seenImplicit.insert(name).second) implicit.emplace_back(name, ty);
  }

  void scan_term(const Term& term) {
    switch (term.kind()) {
      case Term::Kind::Const0:
      case Term::Kind::Const1:
      case Term::Kind::Var:
        return;
      case Term::Kind::EApp:
        scan_term(term.fun());
        scan_term(term.arg());
        return;
      case Term::Kind::Rep: {
        scan_term(term.arg());
        return;
      }
    }
  }

  // representation nodes need the argument's type, so they are indexed
  // during a typed walk in classify(); here we only collect quantifiers
  // and the explicitly indexed atoms
  void scan(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Eq:
        for (auto& t : f.terms()) scan_term(t);
        return;
      case Formula::Kind::Pres:
        add_implicit("pres:" + print_type(f.types()[0]), f.types()[0]);
        for (auto& t : f.terms()) scan_term(t);
        return;
      case Formula::Kind::IApp: {
        Type index = Type::fun(f.types()[0], f.types()[1]);
        add_implicit("iapp:" + print_type(index), index);
        for (auto& t : f.terms()) scan_term(t);
        return;
      }
      case Formula::Kind::Not:
        scan(f.body());
        return;
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Implies:
        scan(f.left());
        scan(f.right());
        return;
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        add_bound(f.binder_name(), f.binder_type());
        scan(f.body());
        return;
    }
  }
};

void collect_rep_indices(const lang::Context& ctx, const Term& term, MatrixScan& scan) {
  switch (term.kind()) {
    case Term::Kind::Const0:
    case Term::Kind::Const1:
    case Term::Kind::Var:
      return;
    case Term::Kind::EApp:
      collect_rep_indices(ctx, term.fun(), scan);
      collect_rep_indices(ctx, term.arg(), scan);
      return;
    case Term::Kind::Rep: {
      Type argTy = lang::typecheck_term(ctx, term.arg());
      scan.add_implicit("rep:" + print_type(argTy), argTy);
      collect_rep_indices(ctx, term.arg(), scan);
      return;
    }
  }
}

void collect_rep_indices(lang::Context ctx, const Formula& f, MatrixScan& scan) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Pres:
    case Formula::Kind::IApp:
      for (auto& t : f.terms()) collect_rep_indices(ctx, t, scan);
      return;
    case Formula::Kind::Not:
      collect_rep_indices(ctx, f.body(), scan);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_rep_indices(ctx, f.left(), scan);
      collect_rep_indices(ctx, f.right(), scan);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      lang::Context extended;
      for (auto& [n, t] : ctx.decls())
        if (n != f.binder_name()) extended.declare(n, t);
      extended.declare(f.binder_name(), f.binder_type());
      collect_rep_indices(extended, f.body(), scan);
      return;
    }
  }
}

} // namespace

SchemaVerdict classify(const SchemaInstance& inst) {
  lang::Context ctx;
  ctx.declare(inst.xName, inst.xType);
  if (inst.kind != SchemaKind::ConceptComprehension) {
    if (!inst.y) throw SchemaError("typed instance is missing its output variable");
    ctx.declare(inst.y->first, inst.y->second);
  } else if (inst.y) {
    throw SchemaError("concept comprehension takes no output variable");
  }
  for (auto& [n, t] : inst.params) ctx.declare(n, t);

  // the matrix must be well-typed over exactly the declared roles
  lang::typecheck_formula(ctx, inst.matrix);
  for (auto& [name, ty] : lang::free_vars(inst.matrix)) {
    if (name == inst.xName || (inst.y && name == inst.y->first)) continue;
    bool declared = std::any_of(inst.params.begin(), inst.params.end(),
                                [&](auto& p) { return p.first == name; });
    if (!declared)
      throw SchemaError("stray free variable " + name +
                        " in matrix (the target variable must not occur free)");
  }

  Type target = inst.target_type();
  int bound = degree(target);

  MatrixScan scan;
  scan.scan(inst.matrix);
  collect_rep_indices(ctx, inst.matrix, scan);

  SchemaVerdict verdict;
  for (auto& [name, ty] : inst.params) {
    int d = degree(ty);
    if (d > bound)
      verdict.violations.push_back({name, Violation::Role::Parameter, d, bound});
  }
  for (auto& [name, ty] : scan.implicit) {
    int d = degree(ty);
    if (d > bound)
      verdict.violations.push_back({name, Violation::Role::Parameter, d, bound});
  }
  for (auto& [name, ty] : scan.bound) {
    int d = degree(ty);
    if (d >= bound)
      verdict.violations.push_back({name, Violation::Role::Bound, d, bound});
  }
  verdict.predicative = verdict.violations.empty();

  if (verdict.predicative && inst.kind != SchemaKind::ConceptComprehension) {
    verdict.configuration = degree(inst.xType) >= degree(inst.y->second)
                                ? SchemaVerdict::Configuration::First
                                : SchemaVerdict::Configuration::Second;
  } else {
    verdict.configuration = SchemaVerdict::Configuration::NotApplicable;
  }
  return verdict;
}

std::string explain(const SchemaVerdict& verdict) {
  std::ostringstream out;
  if (verdict.predicative) {
    out << "predicative";
  } else {
    out << "impredicative:\n";
    for (auto& v : verdict.violations) {
      if (v.role == Violation::Role::Parameter)
        out << "  parameter " << v.variable << " has degree " << v.degree << " > " << v.bound
            << " (parameters must not exceed the target degree)\n";
      else
        out << "  bound variable " << v.variable << " has degree " << v.degree
            << ", not < " << v.bound << " (bound variables must stay below the target degree)\n";
    }
  }
  switch (verdict.configuration) {
    case SchemaVerdict::Configuration::First:
      out << "\nconfiguration: first (input degree >= output degree)";
      break;
    case SchemaVerdict::Configuration::Second:
      out << "\nconfiguration: second (input degree < output degree)";
      break;
    case SchemaVerdict::Configuration::NotApplicable:
      out << "\nconfiguration: not applicable";
      break;
  }
  return out.str();
}

SchemaInstance concept_to_typed(const SchemaInstance& inst) {
  if (inst.kind != SchemaKind::ConceptComprehension)
    throw SchemaError("rewrite applies to concept comprehension instances");
  std::set<std::string> taken;
  taken.insert(inst.xName);
  for (auto& [n, t] : inst.params) taken.insert(n);
  for (auto& [n, t] : lang::free_vars(inst.matrix)) taken.insert(n);
  std::string yName = "y";
  int suffix = 0;
  while (taken.count(yName)) yName = "y_" + std::to_string(++suffix);

  Term yVar = Term::var(yName, Type::t());
  Formula psi = inst.matrix;
  Formula phi = Formula::disj(
      Formula::conj(psi, Formula::eq(yVar, Term::const1())),
      Formula::conj(Formula::negation(psi), Formula::eq(yVar, Term::const0())));

  SchemaInstance typed;
  typed.kind = SchemaKind::TypedComprehension;
  typed.matrix = phi;
  typed.xName = inst.xName;
  typed.xType = inst.xType;
  typed.y = {yName, Type::t()};
  typed.params = inst.params;
  return typed;
}

namespace {

const char* kind_name(SchemaKind kind) {
  switch (kind) {
    case SchemaKind::TypedComprehension:
      return "typed-comprehension";
    case SchemaKind::ConceptComprehension:
      return "concept-comprehension";
    case SchemaKind::TypedChoice:
      return "typed-choice";
  }
  return "";
}

} // namespace

SchemaInstance parse_instance(std::string_view text) {
  // pull the header apart with a small scan, then hand the matrix text to
  // the formula parser with the roles in scope via a decl block
  struct Reader {
    std::string_view text;
    size_t pos = 0;
    void skip_ws() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }
    std::string symbol() {
      skip_ws();
      size_t s = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
             text[pos] != '(' && text[pos] != ')')
        pos++;
      if (pos == s) fail("expected symbol");
      return std::string(text.substr(s, pos - s));
    }
    void expect(char c) {
      skip_ws();
      if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
      pos++;
    }
    bool peek(char c) {
      skip_ws();
      return pos < text.size() && text[pos] == c;
    }
    // captures a balanced expression verbatim
    std::string balanced() {
      skip_ws();
      size_t start = pos;
      if (pos >= text.size()) fail("expected expression");
      if (text[pos] != '(') {
        (void)symbol();
      } else {
        int depth = 0;
        do {
          if (pos >= text.size()) fail("unbalanced input");
          if (text[pos] == '(') depth++;
          if (text[pos] == ')') depth--;
          pos++;
        } while (depth > 0);
        while (pos < text.size() && text[pos] == '\'') pos++;
      }
      return std::string(text.substr(start, pos - start));
    }
  };

  Reader r{text};
  r.expect('(');
  if (r.symbol() != "instance") throw ParseError("expected (instance ...)", 0);
  std::string kindName = r.symbol();
  SchemaInstance inst;
  if (kindName == "typed-comprehension")
    inst.kind = SchemaKind::TypedComprehension;
  else if (kindName == "concept-comprehension")
    inst.kind = SchemaKind::ConceptComprehension;
  else if (kindName == "typed-choice")
    inst.kind = SchemaKind::TypedChoice;
  else
    throw ParseError("unknown instance kind " + kindName, r.pos);

  // (x TYPE)
  r.expect('(');
  inst.xName = r.symbol();
  inst.xType = parse_type(r.balanced());
  r.expect(')');

  // optional (y TYPE) before (params ...)
  std::string matrixText;
  bool sawParams = false, sawMatrix = false;
  while (r.peek('(')) {
    size_t mark = r.pos;
    r.expect('(');
    std::string head = r.symbol();
    if (head == "params") {
      sawParams = true;
      while (r.peek('(')) {
        r.expect('(');
        std::string name = r.symbol();
        Type ty = parse_type(r.balanced());
        r.expect(')');
        inst.params.emplace_back(name, ty);
      }
      r.expect(')');
    } else if (head == "matrix") {
      sawMatrix = true;
      matrixText = r.balanced();
      r.expect(')');
    } else if (!sawParams && !sawMatrix && !inst.y) {
      // (NAME TYPE): the output variable
      inst.y = {head, parse_type(r.balanced())};
      r.expect(')');
    } else {
      r.pos = mark;
      r.fail("unexpected clause in instance");
    }
  }
  r.expect(')');
  if (!sawMatrix) throw ParseError("instance is missing its (matrix ...) clause", r.pos);

  // build the matrix with the roles in scope via a decl block
  std::string declText = "(decl (" + inst.xName + " " + print_type(inst.xType) + ")";
  if (inst.y) declText += " (" + inst.y->first + " " + print_type(inst.y->second) + ")";
  for (auto& [n, t] : inst.params) declText += " (" + n + " " + print_type(t) + ")";
  declText += " " + matrixText + ")";
  inst.matrix = lang::parse_formula(declText).formula;
  return inst;
}

std::string print_instance(const SchemaInstance& inst) {
  std::string out = "(instance ";
  out += kind_name(inst.kind);
  out += " (" + inst.xName + " " + print_type(inst.xType) + ")";
  if (inst.y) out += " (" + inst.y->first + " " + print_type(inst.y->second) + ")";
  out += " (params";
  for (auto& [n, t] : inst.params) out += " (" + n + " " + print_type(t) + ")";
  out += ")";
  out += " (matrix " + lang::print_formula(inst.matrix) + "))";
  return out;
}

std::string verdict_to_json(const SchemaVerdict& verdict) {
  nlohmann::ordered_json j;
  j["predicative"] = verdict.predicative;
  j["violations"] = nlohmann::ordered_json::array();
  for (auto& v : verdict.violations) {
    nlohmann::ordered_json vj;
    vj["variable"] = v.variable;
    vj["role"] = v.role == Violation::Role::Bound ? "bound" : "parameter";
    vj["degree"] = v.degree;
    vj["bound"] = v.bound;
    vj["relation"] = v.role == Violation::Role::Bound ? "<" : "<=";
    j["violations"].push_back(vj);
  }
  switch (verdict.configuration) {
    case SchemaVerdict::Configuration::First:
      j["configuration"] = "first";
      break;
    case SchemaVerdict::Configuration::Second:
      j["configuration"] = "second";
      break;
    case SchemaVerdict::Configuration::NotApplicable:
      j["configuration"] = "not-applicable";
      break;
  }
  return j.dump(2);
}

} // namespace intensio::schema
