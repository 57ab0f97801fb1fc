#ifndef INTENSIO_LANG_HPP
#define INTENSIO_LANG_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "intensio/types.hpp"

namespace intensio::lang {

// Object-language terms: truth constants, typed variables, extensional
// application, and the representation operator (term of type a').
class Term {
public:
  enum class Kind { Const0, Const1, Var, EApp, Rep };

  static Term const0();
  static Term const1();
  static Term var(std::string name, Type ty);
  static Term eapp(Term fun, Term arg);
  static Term rep(Term arg);

  Kind kind() const { return node_->kind; }
  const std::string& var_name() const { return node_->name; }
  const Type& var_type() const { return *node_->type; }
  Term fun() const { return Term(node_->a); }
  Term arg() const { return Term(node_->kind == Kind::EApp ? node_->b : node_->a); }

  int compare(const Term& other) const;
  bool operator==(const Term& other) const { return compare(other) == 0; }

private:
  struct Node {
    Kind kind;
    std::string name;
    std::optional<Type> type;
    std::shared_ptr<const Node> a, b;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Formulas. Presentation and intensional application are relation-style
// atoms (both are partial on their intended interpretations); identity is
// a single untyped atom.
class Formula {
public:
  enum class Kind { Eq, Pres, IApp, Not, And, Or, Implies, Forall, Exists };

  static Formula eq(Term lhs, Term rhs);
  static Formula pres(Type ty, Term sense, Term denot);
  static Formula iapp(Type a, Type b, Term fun, Term arg, Term result);
  static Formula negation(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula forall(std::string var, Type ty, Formula body);
  static Formula exists(std::string var, Type ty, Formula body);

  Kind kind() const { return node_->kind; }
  const std::vector<Term>& terms() const { return node_->terms; }
  const std::vector<Type>& types() const { return node_->types; }
  Formula left() const { return Formula(node_->a); }
  Formula right() const { return Formula(node_->b); }
  Formula body() const { return Formula(node_->a); }
  const std::string& binder_name() const { return node_->name; }
  const Type& binder_type() const { return node_->types.front(); }

  int compare(const Formula& other) const;
  bool operator==(const Formula& other) const { return compare(other) == 0; }

private:
  struct Node {
    Kind kind;
    std::vector<Term> terms;
    std::vector<Type> types;
    std::string name;
    std::shared_ptr<const Node> a, b;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Ordered list of typed variable declarations; names are unique.
class Context {
public:
  Context() = default;
  void declare(const std::string& name, const Type& ty);
  const Type* lookup(const std::string& name) const;
  const std::vector<std::pair<std::string, Type>>& decls() const { return decls_; }

private:
  std::vector<std::pair<std::string, Type>> decls_;
};

struct TypecheckError : std::runtime_error {
  std::string path;
  TypecheckError(const std::string& what, std::string where)
      : std::runtime_error(what + (where.empty() ? "" : " [at " + where + "]")),
        path(std::move(where)) {}
};

Type typecheck_term(const Context& ctx, const Term& term);
void typecheck_formula(const Context& ctx, const Formula& f);

std::map<std::string, Type> free_vars(const Term& term);
std::map<std::string, Type> free_vars(const Formula& f);

// Capture-avoiding substitution of `replacement` for the free variable
// `name` (which must carry type `ty`); the replacement must have that type.
Term substitute(const Term& term, const std::string& name, const Type& ty,
                const Term& replacement);
Formula substitute(const Formula& f, const std::string& name, const Type& ty,
                   const Term& replacement);

struct ParsedFormula {
  Context context; // from a leading (decl ...) block, if any
  Formula formula;
};

ParsedFormula parse_formula(std::string_view text);
Term parse_term(std::string_view text);
std::string print_term(const Term& term);
std::string print_formula(const Formula& f);

} // namespace intensio::lang

#endif
