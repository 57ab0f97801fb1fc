#include "intensio/lang.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace intensio::lang {

// ---------------------------------------------------------------- terms

Term Term::const0() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Const0, "", {}, nullptr, nullptr});
  return Term(n);
}

Term Term::const1() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Const1, "", {}, nullptr, nullptr});
  return Term(n);
}

Term Term::var(std::string name, Type ty) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Var, std::move(name), std::move(ty), nullptr, nullptr}));
}

Term Term::eapp(Term fun, Term arg) {
  return Term(std::make_shared<const Node>(
      Node{Kind::EApp, "", {}, std::move(fun.node_), std::move(arg.node_)}));
}

Term Term::rep(Term arg) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Rep, "", {}, std::move(arg.node_), nullptr}));
}

int Term::compare(const Term& other) const {
  if (node_ == other.node_) return 0;
  if (node_->kind != other.node_->kind)
    return node_->kind < other.node_->kind ? -1 : 1;
  switch (node_->kind) {
    case Kind::Const0:
    case Kind::Const1:
      return 0;
    case Kind::Var: {
      if (int c = node_->name.compare(other.node_->name)) return c < 0 ? -1 : 1;
      return node_->type->compare(*other.node_->type);
    }
    case Kind::EApp: {
      if (int c = Term(node_->a).compare(Term(other.node_->a))) return c;
      return Term(node_->b).compare(Term(other.node_->b));
    }
    case Kind::Rep:
      return Term(node_->a).compare(Term(other.node_->a));
  }
  return 0;
}

// ------------------------------------------------------------- formulas

Formula Formula::eq(Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Eq, {std::move(lhs), std::move(rhs)}, {}, "", nullptr, nullptr}));
}

Formula Formula::pres(Type ty, Term sense, Term denot) {
  return Formula(std::make_shared<const Node>(Node{
      Kind::Pres, {std::move(sense), std::move(denot)}, {std::move(ty)}, "", nullptr, nullptr}));
}

Formula Formula::iapp(Type a, Type b, Term fun, Term arg, Term result) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::IApp,
           {std::move(fun), std::move(arg), std::move(result)},
           {std::move(a), std::move(b)},
           "",
           nullptr,
           nullptr}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Not, {}, {}, "", std::move(f.node_), nullptr}));
}

Formula Formula::conj(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, {}, {}, "", std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::disj(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, {}, {}, "", std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::implies(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Implies, {}, {}, "", std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::forall(std::string var, Type ty, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Forall, {}, {std::move(ty)}, std::move(var), std::move(body.node_), nullptr}));
}

Formula Formula::exists(std::string var, Type ty, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Exists, {}, {std::move(ty)}, std::move(var), std::move(body.node_), nullptr}));
}

int Formula::compare(const Formula& other) const {
  if (node_ == other.node_) return 0;
  if (node_->kind != other.node_->kind)
    return node_->kind < other.node_->kind ? -1 : 1;
  if (int c = node_->name.compare(other.node_->name)) return c < 0 ? -1 : 1;
  if (node_->types.size() != other.node_->types.size())
    return node_->types.size() < other.node_->types.size() ? -1 : 1;
  for (size_t i = 0; i < node_->types.size(); i++)
    if (int c = node_->types[i].compare(other.node_->types[i])) return c;
  if (node_->terms.size() != other.node_->terms.size())
    return node_->terms.size() < other.node_->terms.size() ? -1 : 1;
  for (size_t i = 0; i < node_->terms.size(); i++)
    if (int c = node_->terms[i].compare(other.node_->terms[i])) return c;
  bool la = node_->a != nullptr, lb = other.node_->a != nullptr;
  if (la != lb) return la < lb ? -1 : 1;
  if (la)
    if (int c = Formula(node_->a).compare(Formula(other.node_->a))) return c;
  bool ra = node_->b != nullptr, rb = other.node_->b != nullptr;
  if (ra != rb) return ra < rb ? -1 : 1;
  if (ra)
    if (int c = Formula(node_->b).compare(Formula(other.node_->b))) return c;
  return 0;
}

// -------------------------------------------------------------- context

void Context::declare(const std::string& name, const Type& ty) {
  for (auto& [n, t] : decls_)
    if (n == name) throw TypecheckError("duplicate declaration of " + name, "");
  decls_.emplace_back(name, ty);
}

const Type* Context::lookup(const std::string& name) const {
  for (auto it = decls_.rbegin(); it != decls_.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

// ---------------------------------------------------------- typechecking

namespace {

Type check_term(const Context& ctx, const Term& term, const std::string& path) {
  switch (term.kind()) {
    case Term::Kind::Const0:
    case Term::Kind::Const1:
      return Type::t();
    case Term::Kind::Var: {
      const Type* declared = ctx.lookup(term.var_name());
      if (!declared) throw TypecheckError("unbound variable " + term.var_name(), path);
      if (*declared != term.var_type())
        throw TypecheckError("variable " + term.var_name() + " declared " +
                                 print_type(*declared) + " but annotated " +
                                 print_type(term.var_type()),
                             path);
      return *declared;
    }
    case Term::Kind::EApp: {
      Type tf = check_term(ctx, term.fun(), path + "/app-fun");
      Type tx = check_term(ctx, term.arg(), path + "/app-arg");
      if (tf.kind() != Type::Kind::Fun)
        throw TypecheckError("applied term has non-function type " + print_type(tf), path);
      if (tf.domain() != tx)
        throw TypecheckError("application type mismatch: expected " + print_type(tf.domain()) +
                                 ", got " + print_type(tx),
                             path);
      return tf.codomain();
    }
    case Term::Kind::Rep:
      return Type::sense(check_term(ctx, term.arg(), path + "/rep"));
  }
  throw TypecheckError("malformed term", path);
}

int max_free_degree(const Context& ctx, const Term& term) {
  int best = 1;
  for (auto& [name, ty] : free_vars(term)) {
    (void)name;
    best = std::max(best, degree(ty));
  }
  (void)ctx;
  return best;
}

void check_formula(const Context& ctx, const Formula& f, const std::string& path) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      // identity is untyped: both sides only need to be well-typed
      check_term(ctx, f.terms()[0], path + "/=lhs");
      check_term(ctx, f.terms()[1], path + "/=rhs");
      return;
    case Formula::Kind::Pres: {
      const Type& ty = f.types()[0];
      Type ts = check_term(ctx, f.terms()[0], path + "/pres-sense");
      Type td = check_term(ctx, f.terms()[1], path + "/pres-denot");
      if (ts != Type::sense(ty))
        throw TypecheckError("sense slot needs type " + print_type(Type::sense(ty)) + ", got " +
                                 print_type(ts),
                             path);
      if (td != ty)
        throw TypecheckError("denotation slot needs type " + print_type(ty) + ", got " +
                                 print_type(td),
                             path);
      return;
    }
    case Formula::Kind::IApp: {
      const Type& a = f.types()[0];
      const Type& b = f.types()[1];
      Type tf = check_term(ctx, f.terms()[0], path + "/iapp-fun");
      Type tx = check_term(ctx, f.terms()[1], path + "/iapp-arg");
      Type tr = check_term(ctx, f.terms()[2], path + "/iapp-result");
      Type wf = Type::sense(Type::fun(a, b));
      if (tf != wf)
        throw TypecheckError("intensional function slot needs type " + print_type(wf) +
                                 ", got " + print_type(tf),
                             path);
      if (tx != Type::sense(a))
        throw TypecheckError("intensional argument slot needs type " +
                                 print_type(Type::sense(a)) + ", got " + print_type(tx),
                             path);
      if (tr != Type::sense(b))
        throw TypecheckError("intensional result slot needs type " +
                                 print_type(Type::sense(b)) + ", got " + print_type(tr),
                             path);
      return;
    }
    case Formula::Kind::Not:
      check_formula(ctx, f.body(), path + "/not");
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      const char* tag = f.kind() == Formula::Kind::And     ? "/and"
                        : f.kind() == Formula::Kind::Or    ? "/or"
                                                           : "/implies";
      check_formula(ctx, f.left(), path + tag + "-l");
      check_formula(ctx, f.right(), path + tag + "-r");
      return;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      // binders may shadow an outer declaration; the inner binding wins
      Context extended;
      for (auto& [n, t] : ctx.decls())
        if (n != f.binder_name()) extended.declare(n, t);
      extended.declare(f.binder_name(), f.binder_type());
      check_formula(extended, f.body(), path + "/" + f.binder_name());
      return;
    }
  }
  throw TypecheckError("malformed formula", path);
}

} // namespace

Type typecheck_term(const Context& ctx, const Term& term) {
  Type ty = check_term(ctx, term, "");
  // terms do not raise degree: the type's degree is bounded by the free
  // variables' degrees (1 for closed terms)
  if (degree(ty) > max_free_degree(ctx, term))
    throw TypecheckError("internal: term raised degree beyond its free variables", "");
  return ty;
}

void typecheck_formula(const Context& ctx, const Formula& f) { check_formula(ctx, f, ""); }

// ------------------------------------------------------------ free vars

namespace {

void collect_free(const Term& term, std::set<std::string> bound,
                  std::map<std::string, Type>& out) {
  switch (term.kind()) {
    case Term::Kind::Const0:
    case Term::Kind::Const1:
      return;
    case Term::Kind::Var:
      if (!bound.count(term.var_name())) out.emplace(term.var_name(), term.var_type());
      return;
    case Term::Kind::EApp:
      collect_free(term.fun(), bound, out);
      collect_free(term.arg(), bound, out);
      return;
    case Term::Kind::Rep:
      collect_free(term.arg(), bound, out);
      return;
  }
}

void collect_free(const Formula& f, std::set<std::string> bound,
                  std::map<std::string, Type>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Pres:
    case Formula::Kind::IApp:
      for (auto& t : f.terms()) collect_free(t, bound, out);
      return;
    case Formula::Kind::Not:
      collect_free(f.body(), bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      bound.insert(f.binder_name());
      collect_free(f.body(), bound, out);
      return;
  }
}

} // namespace

std::map<std::string, Type> free_vars(const Term& term) {
  std::map<std::string, Type> out;
  collect_free(term, {}, out);
  return out;
}

std::map<std::string, Type> free_vars(const Formula& f) {
  std::map<std::string, Type> out;
  collect_free(f, {}, out);
  return out;
}

// ---------------------------------------------------------- substitution

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string name = base;
  int suffix = 0;
  while (avoid.count(name)) name = base + "_" + std::to_string(++suffix);
  return name;
}

Term subst_term(const Term& term, const std::string& name, const Term& replacement) {
  switch (term.kind()) {
    case Term::Kind::Const0:
    case Term::Kind::Const1:
      return term;
    case Term::Kind::Var:
      return term.var_name() == name ? replacement : term;
    case Term::Kind::EApp:
      return Term::eapp(subst_term(term.fun(), name, replacement),
                        subst_term(term.arg(), name, replacement));
    case Term::Kind::Rep:
      return Term::rep(subst_term(term.arg(), name, replacement));
  }
  return term;
}

Formula subst_formula(const Formula& f, const std::string& name, const Term& replacement,
                      const std::map<std::string, Type>& replacementFrees);

Formula rename_bound(const Formula& f, const std::string& from, const Type& ty,
                     const std::string& to) {
  // rename the free occurrences of `from` (of the binder's type) to `to`
  std::map<std::string, Type> frees; // Var(to, ty) is closed w.r.t. capture here
  return subst_formula(f, from, Term::var(to, ty), frees);
}

Formula subst_formula(const Formula& f, const std::string& name, const Term& replacement,
                      const std::map<std::string, Type>& replacementFrees) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return Formula::eq(subst_term(f.terms()[0], name, replacement),
                         subst_term(f.terms()[1], name, replacement));
    case Formula::Kind::Pres:
      return Formula::pres(f.types()[0], subst_term(f.terms()[0], name, replacement),
                           subst_term(f.terms()[1], name, replacement));
    case Formula::Kind::IApp:
      return Formula::iapp(f.types()[0], f.types()[1],
                           subst_term(f.terms()[0], name, replacement),
                           subst_term(f.terms()[1], name, replacement),
                           subst_term(f.terms()[2], name, replacement));
    case Formula::Kind::Not:
      return Formula::negation(subst_formula(f.body(), name, replacement, replacementFrees));
    case Formula::Kind::And:
      return Formula::conj(subst_formula(f.left(), name, replacement, replacementFrees),
                           subst_formula(f.right(), name, replacement, replacementFrees));
    case Formula::Kind::Or:
      return Formula::disj(subst_formula(f.left(), name, replacement, replacementFrees),
                           subst_formula(f.right(), name, replacement, replacementFrees));
    case Formula::Kind::Implies:
      return Formula::implies(subst_formula(f.left(), name, replacement, replacementFrees),
                              subst_formula(f.right(), name, replacement, replacementFrees));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool isForall = f.kind() == Formula::Kind::Forall;
      if (f.binder_name() == name)
        return f; // the substituted variable is shadowed below this point
      std::string binder = f.binder_name();
      Formula body = f.body();
      if (replacementFrees.count(binder)) {
        // the binder would capture a free variable of the replacement
        std::set<std::string> avoid;
        for (auto& [n, t] : replacementFrees) avoid.insert(n);
        for (auto& [n, t] : free_vars(body)) avoid.insert(n);
        avoid.insert(name);
        std::string renamed = fresh_name(binder, avoid);
        body = rename_bound(body, binder, f.binder_type(), renamed);
        binder = renamed;
      }
      Formula newBody = subst_formula(body, name, replacement, replacementFrees);
      return isForall ? Formula::forall(binder, f.binder_type(), newBody)
                      : Formula::exists(binder, f.binder_type(), newBody);
    }
  }
  return f;
}

} // namespace

Term substitute(const Term& term, const std::string& name, const Type& ty,
                const Term& replacement) {
  Context ctx;
  for (auto& [n, t] : free_vars(replacement)) ctx.declare(n, t);
  Type replTy = typecheck_term(ctx, replacement);
  if (replTy != ty)
    throw TypecheckError("substitution type mismatch: variable " + name + " has type " +
                             print_type(ty) + ", replacement has type " + print_type(replTy),
                         "");
  return subst_term(term, name, replacement);
}

Formula substitute(const Formula& f, const std::string& name, const Type& ty,
                   const Term& replacement) {
  Context ctx;
  for (auto& [n, t] : free_vars(replacement)) ctx.declare(n, t);
  Type replTy = typecheck_term(ctx, replacement);
  if (replTy != ty)
    throw TypecheckError("substitution type mismatch: variable " + name + " has type " +
                             print_type(ty) + ", replacement has type " + print_type(replTy),
                         "");
  return subst_formula(f, name, replacement, free_vars(replacement));
}

// -------------------------------------------------------------- parsing

namespace {

// S-expressions: atoms and lists. A prime after a closing paren becomes a
// (prime X) wrapper; primes inside symbols stay part of the symbol.
struct Sexp {
  bool atom = false;
  std::string text;
  std::vector<Sexp> items;
  size_t offset = 0;
};

struct SexpParser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  bool symbol_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')';
  }

  Sexp parse() {
    Sexp s = parse_one();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return s;
  }

  Sexp parse_one() {
    skip_ws();
    if (pos >= text.size()) fail("expected expression");
    size_t start = pos;
    Sexp result;
    if (text[pos] == '(') {
      pos++;
      result.offset = start;
      for (;;) {
        skip_ws();
        if (pos >= text.size()) fail("expected ')'");
        if (text[pos] == ')') {
          pos++;
          break;
        }
        result.items.push_back(parse_one());
      }
    } else {
      size_t s = pos;
      while (pos < text.size() && symbol_char(text[pos])) pos++;
      if (pos == s) fail("unexpected character");
      result.atom = true;
      result.text = std::string(text.substr(s, pos - s));
      result.offset = s;
    }
    // postfix primes after a closing paren wrap the expression
    while (pos < text.size() && text[pos] == '\'' && !result.atom) {
      pos++;
      Sexp wrapped;
      wrapped.offset = start;
      Sexp tag;
      tag.atom = true;
      tag.text = "prime";
      wrapped.items.push_back(tag);
      wrapped.items.push_back(std::move(result));
      result = std::move(wrapped);
    }
    return result;
  }
};

Type type_from_sexp(const Sexp& s) {
  if (s.atom) {
    std::string_view text = s.text;
    size_t primes = 0;
    while (!text.empty() && text.back() == '\'') {
      text.remove_suffix(1);
      primes++;
    }
    Type base = Type::e();
    if (text == "e")
      base = Type::e();
    else if (text == "t")
      base = Type::t();
    else
      throw ParseError("expected type", s.offset);
    for (size_t i = 0; i < primes; i++) base = Type::sense(base);
    return base;
  }
  if (!s.items.empty() && s.items[0].atom && s.items[0].text == "prime") {
    if (s.items.size() != 2) throw ParseError("malformed prime", s.offset);
    return Type::sense(type_from_sexp(s.items[1]));
  }
  if (s.items.size() != 2) throw ParseError("function type needs two components", s.offset);
  return Type::fun(type_from_sexp(s.items[0]), type_from_sexp(s.items[1]));
}

struct Binder {
  std::string name;
  Type ty;
};

Binder binder_from_sexp(const Sexp& s) {
  if (s.atom || s.items.size() != 2 || !s.items[0].atom)
    throw ParseError("expected (name TYPE)", s.offset);
  return Binder{s.items[0].text, type_from_sexp(s.items[1])};
}

struct FormulaReader {
  // binders in scope, innermost last
  std::vector<Binder> scope;

  const Type* lookup(const std::string& name) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->name == name) return &it->ty;
    return nullptr;
  }

  Term term(const Sexp& s) {
    if (s.atom) {
      if (s.text == "0") return Term::const0();
      if (s.text == "1") return Term::const1();
      const Type* ty = lookup(s.text);
      if (!ty) throw ParseError("undeclared variable " + s.text, s.offset);
      return Term::var(s.text, *ty);
    }
    if (s.items.empty() || !s.items[0].atom) throw ParseError("expected term", s.offset);
    const std::string& head = s.items[0].text;
    if (head == "app") {
      if (s.items.size() != 3) throw ParseError("app needs two arguments", s.offset);
      return Term::eapp(term(s.items[1]), term(s.items[2]));
    }
    if (head == "rep") {
      if (s.items.size() != 2) throw ParseError("rep needs one argument", s.offset);
      return Term::rep(term(s.items[1]));
    }
    throw ParseError("expected term", s.offset);
  }

  Formula formula(const Sexp& s) {
    if (s.atom || s.items.empty() || !s.items[0].atom)
      throw ParseError("expected formula", s.offset);
    const std::string& head = s.items[0].text;
    auto arity = [&](size_t n, const char* what) {
      if (s.items.size() != n + 1) throw ParseError(std::string(what), s.offset);
    };
    if (head == "=") {
      arity(2, "= needs two terms");
      return Formula::eq(term(s.items[1]), term(s.items[2]));
    }
    if (head == "pres") {
      arity(3, "pres needs a type and two terms");
      return Formula::pres(type_from_sexp(s.items[1]), term(s.items[2]), term(s.items[3]));
    }
    if (head == "iapp") {
      arity(5, "iapp needs two types and three terms");
      return Formula::iapp(type_from_sexp(s.items[1]), type_from_sexp(s.items[2]),
                           term(s.items[3]), term(s.items[4]), term(s.items[5]));
    }
    if (head == "not") {
      arity(1, "not needs one formula");
      return Formula::negation(formula(s.items[1]));
    }
    if (head == "and" || head == "or" || head == "implies") {
      arity(2, "binary connective needs two formulas");
      Formula l = formula(s.items[1]);
      Formula r = formula(s.items[2]);
      if (head == "and") return Formula::conj(l, r);
      if (head == "or") return Formula::disj(l, r);
      return Formula::implies(l, r);
    }
    if (head == "forall" || head == "exists") {
      arity(2, "binder needs (name TYPE) and a body");
      Binder b = binder_from_sexp(s.items[1]);
      scope.push_back(b);
      Formula body = formula(s.items[2]);
      scope.pop_back();
      return head == "forall" ? Formula::forall(b.name, b.ty, body)
                              : Formula::exists(b.name, b.ty, body);
    }
    throw ParseError("unknown formula head " + head, s.offset);
  }
};

} // namespace

ParsedFormula parse_formula(std::string_view text) {
  SexpParser sp{text};
  Sexp root = sp.parse();
  FormulaReader reader;
  Context ctx;
  const Sexp* body = &root;
  if (!root.atom && !root.items.empty() && root.items[0].atom && root.items[0].text == "decl") {
    if (root.items.size() < 2) throw ParseError("decl needs a body", root.offset);
    for (size_t i = 1; i + 1 < root.items.size(); i++) {
      Binder b = binder_from_sexp(root.items[i]);
      ctx.declare(b.name, b.ty);
      reader.scope.push_back(b);
    }
    body = &root.items.back();
  }
  Formula f = reader.formula(*body);
  return ParsedFormula{ctx, f};
}

Term parse_term(std::string_view text) {
  SexpParser sp{text};
  Sexp root = sp.parse();
  FormulaReader reader;
  return reader.term(root);
}

std::string print_term(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::Const0:
      return "0";
    case Term::Kind::Const1:
      return "1";
    case Term::Kind::Var:
      return term.var_name();
    case Term::Kind::EApp:
      return "(app " + print_term(term.fun()) + " " + print_term(term.arg()) + ")";
    case Term::Kind::Rep:
      return "(rep " + print_term(term.arg()) + ")";
  }
  return "";
}

std::string print_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return "(= " + print_term(f.terms()[0]) + " " + print_term(f.terms()[1]) + ")";
    case Formula::Kind::Pres:
      return "(pres " + print_type(f.types()[0]) + " " + print_term(f.terms()[0]) + " " +
             print_term(f.terms()[1]) + ")";
    case Formula::Kind::IApp:
      return "(iapp " + print_type(f.types()[0]) + " " + print_type(f.types()[1]) + " " +
             print_term(f.terms()[0]) + " " + print_term(f.terms()[1]) + " " +
             print_term(f.terms()[2]) + ")";
    case Formula::Kind::Not:
      return "(not " + print_formula(f.body()) + ")";
    case Formula::Kind::And:
      return "(and " + print_formula(f.left()) + " " + print_formula(f.right()) + ")";
    case Formula::Kind::Or:
      return "(or " + print_formula(f.left()) + " " + print_formula(f.right()) + ")";
    case Formula::Kind::Implies:
      return "(implies " + print_formula(f.left()) + " " + print_formula(f.right()) + ")";
    case Formula::Kind::Forall:
      return "(forall (" + f.binder_name() + " " + print_type(f.binder_type()) + ") " +
             print_formula(f.body()) + ")";
    case Formula::Kind::Exists:
      return "(exists (" + f.binder_name() + " " + print_type(f.binder_type()) + ") " +
             print_formula(f.body()) + ")";
  }
  return "";
}

} // namespace intensio::lang
