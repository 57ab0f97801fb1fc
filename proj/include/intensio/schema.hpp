#ifndef INTENSIO_SCHEMA_HPP
#define INTENSIO_SCHEMA_HPP

#include <optional>
#include <string>
#include <vector>

#include "intensio/lang.hpp"
#include "intensio/types.hpp"

namespace intensio::schema {

enum class SchemaKind { TypedComprehension, ConceptComprehension, TypedChoice };

// A candidate schema instance, supplied structurally: the matrix formula
// plus the declared roles of its free variables. The target variable (of
// the function asserted to exist) must not occur in the matrix.
struct SchemaInstance {
  SchemaKind kind = SchemaKind::ConceptComprehension;
  lang::Formula matrix = lang::Formula::eq(lang::Term::const0(), lang::Term::const0());
  std::string xName;
  Type xType = Type::e();
  std::optional<std::pair<std::string, Type>> y; // absent for concept comprehension
  std::vector<std::pair<std::string, Type>> params;

  Type target_type() const;
};

struct Violation {
  std::string variable;
  enum class Role { Bound, Parameter } role = Role::Parameter;
  int degree = 0;
  int bound = 0; // parameters must have degree <= bound, bound variables < bound
};

struct SchemaVerdict {
  bool predicative = false;
  std::vector<Violation> violations;
  enum class Configuration { First, Second, NotApplicable } configuration =
      Configuration::NotApplicable;
};

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Applies the degree restrictions: every parameter degree <= deg(target),
// every bound-variable degree < deg(target). Presentation, intensional
// application, and representation atoms in the matrix are counted as
// implicit parameters at their type index. Predicative typed instances
// additionally get their configuration (first iff deg(a) >= deg(b)).
SchemaVerdict classify(const SchemaInstance& inst);

std::string explain(const SchemaVerdict& verdict);

// The standard rewrite from a concept instance psi(x, zs) to the typed
// matrix [(psi /\ y=1) \/ (~psi /\ y=0)].
SchemaInstance concept_to_typed(const SchemaInstance& inst);

// Instance files:
//   (instance KIND (x TYPE) [(y TYPE)] (params (z TYPE)...) (matrix F))
// with KIND one of typed-comprehension, concept-comprehension, typed-choice.
SchemaInstance parse_instance(std::string_view text);
std::string print_instance(const SchemaInstance& inst);

std::string verdict_to_json(const SchemaVerdict& verdict);

} // namespace intensio::schema

#endif
