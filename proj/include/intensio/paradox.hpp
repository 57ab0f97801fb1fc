#ifndef INTENSIO_PARADOX_HPP
#define INTENSIO_PARADOX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intensio/models.hpp"

namespace intensio::paradox {

using models::Model;
using models::Value;

struct ParadoxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A non-injectivity witness produced by the diagonal construction: two
// distinct concepts that the candidate injection sends to the same point,
// one of which is the diagonal itself.
struct RefutationWitness {
  Value f = Value::truth(0);
  Value g = Value::truth(0); // the diagonal
  Value collisionPoint = Value::truth(0);
  Value diagonal = Value::truth(0);
  nlohmann::ordered_json to_json() const;
};

// iota maps the full domain of Fun(a,t) into the domain of a; tables are
// indices into the canonical enumerations.
RefutationWitness cantor_refute(const Model& model, const Type& a,
                                const std::vector<int>& iotaTable);

// Parameter-smuggling construction: the constant-function builder, the
// higher-order diagonal over it, and the reconstructed diagonal, checked
// against the direct definition at every point.
struct SmuggleResult {
  Value constantBuilder = Value::truth(0); // type a(aa)
  Value higherDiagonal = Value::truth(0);  // type (aa)t
  Value rebuiltDiagonal = Value::truth(0); // type at
  bool verified = false;
  nlohmann::ordered_json to_json() const;
};
SmuggleResult smuggle(const Model& model, const Type& a, const std::vector<int>& iotaTable);

// Semantic replay of the propositions paradox: check surjectivity at the
// collections-of-propositions type, then the cardinality dichotomy, then
// assemble the injection and run the diagonal against it. Exactly one of
// the four constituent axioms is reported broken, unless the frame's data
// actually yields the collision, in which case the witness is returned.
struct RMOutcome {
  enum class Kind { AxiomFailure, Contradiction } kind = Kind::AxiomFailure;
  std::string axiom; // failing axiom name, or "cantor" for the injection itself
  std::vector<Type> types;
  nlohmann::ordered_json witness;
  std::optional<RefutationWitness> refutation;
  std::vector<std::pair<Value, Value>> iota; // collection -> proposition
  nlohmann::ordered_json to_json() const;
};
RMOutcome rm_pipeline(const Model& model);

// One step of the extension-operator construction: diagonalize against
// the current definite concept h, land on a new extension or fall off the
// operator's domain.
struct ExtensionStep {
  Value gh = Value::truth(0);
  std::optional<Value> extensionPoint;
  std::optional<Value> hTilde;
  enum class Status { Verified, UndefinedExtension } status = Status::UndefinedExtension;
  nlohmann::ordered_json to_json() const;
};

// partial and gamma are given over canonical indices: partial maps
// concept-index -> object-index (injectively), gamma object-index ->
// concept-index.
ExtensionStep extension_step(const Model& model, const std::map<int, int>& partial,
                             const std::map<int, int>& gamma, const Value& h);

struct ProbeResult {
  std::vector<Value> chain; // strictly growing concepts reached
  bool undefinedExtension = false;
  nlohmann::ordered_json to_json() const;
};
ProbeResult indefinite_extensibility_probe(const Model& model, const std::map<int, int>& partial,
                                           const std::map<int, int>& gamma, int budget);

// helpers shared with the CLI and tests
Value concept_from_char(const Model& model, const std::vector<int>& memberObjIds);
std::vector<int> iota_constant(const Model& model, const Type& a, int targetIndex);

} // namespace intensio::paradox

#endif
