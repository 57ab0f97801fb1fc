#ifndef INTENSIO_MODELS_HPP
#define INTENSIO_MODELS_HPP

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "intensio/bignat.hpp"
#include "intensio/lang.hpp"
#include "intensio/types.hpp"
#include "intensio/value.hpp"

namespace intensio::models {

enum class FrameKind { Standard, Kaplan, Custom };

struct TooLarge : std::runtime_error {
  Type type;
  std::string cardinality;
  TooLarge(Type ty, std::string card)
      : std::runtime_error("domain of " + print_type(ty) + " has " + card +
                           " values, beyond the cap"),
        type(std::move(ty)),
        cardinality(std::move(card)) {}
};

struct Unpopulated : std::runtime_error {
  Type type;
  explicit Unpopulated(Type ty)
      : std::runtime_error("domain of " + print_type(ty) + " is unpopulated in this frame"),
        type(std::move(ty)) {}
};

struct FrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Frame data. Standard frames populate only the extensional types.
// Kaplan frames interpret senses as world-indexed functions, with the
// presentation map evaluating at the designated world w0. Custom frames
// carry explicit tables: per-type domains, presentation relations,
// representation maps, and optional intensional-application tables.
struct Frame {
  FrameKind kind = FrameKind::Standard;
  int numObjects = 0;
  int numWorlds = 0;
  int w0 = 0;
  long long domainCap = 1'000'000;

  std::map<Type, std::vector<Value>> domains;
  std::map<Type, std::vector<std::pair<Value, Value>>> delta; // relation: sense -> denotation
  std::map<Type, std::vector<std::pair<Value, Value>>> nabla; // map: denotation -> sense
  struct IappTable {
    Type a = Type::e(), b = Type::e();
    std::vector<std::array<Value, 3>> rows;
  };
  std::vector<IappTable> iapp;

  static Frame standard(int nE, long long cap = 1'000'000);
  static Frame kaplan(int nE, int nW, int w0 = 0, long long cap = 1'000'000);

  static Frame from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

// Materialization and table access over an immutable frame; domain lists
// are memoized. Copies of a Model share nothing mutable, so treat one
// Model as single-threaded and clone per worker if parallelizing.
class Model {
public:
  explicit Model(Frame frame);

  const Frame& frame() const { return frame_; }

  // canonical-ordered full domain of the type; throws TooLarge or Unpopulated
  const std::vector<Value>& domain(const Type& ty) const;
  // least element of the domain without materializing it
  Value least(const Type& ty) const;
  // exact size, no materialization
  BigNat cardinality(const Type& ty) const;
  bool member(const Type& ty, const Value& v) const;

  // presentation: all denotations the sense is related to (empty if none)
  std::vector<Value> delta_image(const Type& ty, const Value& sense) const;
  bool delta_functional(const Type& ty) const;
  // representation: the chosen presenting sense, if tables provide one
  std::optional<Value> nabla_of(const Type& ty, const Value& denot) const;
  bool has_nabla(const Type& ty) const;

  // intensional application results (relation view); uses explicit tables
  // when present, otherwise derives through delta/nabla
  std::vector<Value> iapp_results(const Type& a, const Type& b, const Value& fSense,
                                  const Value& xSense) const;

  // sanity checks for custom tables (nabla functional/injective shape,
  // delta inverting nabla); throws FrameError on violation
  void validate() const;

private:
  Frame frame_;
  mutable std::map<Type, std::shared_ptr<const std::vector<Value>>> memo_;

  std::vector<Value> build_domain(const Type& ty) const;
};

// Exact domain size for standard/Kaplan frames as a function of |E|, |W|.
BigNat cardinality(FrameKind kind, int numObjects, int numWorlds, const Type& ty);

// The cardinality facts a frame shape settles: the domain sizes of the
// requested types plus the comparison chain between propositions,
// collections of propositions, and their senses.
struct CardinalityReport {
  std::vector<std::pair<std::string, std::string>> sizes; // type text -> exact size
  bool fineGrainedHolds = false;                          // |D_e| <= |D_t'|
  bool chainHolds = false; // |D_(t't)'| >= |D_(t't)| > |D_t'| >= |D_e|
  std::string summary;
};
CardinalityReport cardinality_report(FrameKind kind, int numObjects, int numWorlds,
                                     const std::vector<Type>& types);

// --------------------------------------------------------------- eval

using Assignment = std::map<std::string, Value>;

Value eval_term(const Model& model, const lang::Context& ctx, const Assignment& assignment,
                const lang::Term& term);
bool eval(const Model& model, const lang::Context& ctx, const Assignment& assignment,
          const lang::Formula& f);

// ------------------------------------------------------------- axioms

enum class Axiom {
  SenseDeterminesReference,
  TypedComposition,
  Surjectivity,
  SensesAreObjects,
  FineGrained,
  Iterative,
  Contrapositive16,
  Representation,
  CharIntensionalApplication,
  CharIntensionalInjectivity,
  GallinA2,
  GallinA3,
  GallinAS6,
};

const char* axiom_name(Axiom axiom);
std::optional<Axiom> axiom_from_name(std::string_view name);
// number of type arguments the axiom instance takes (0, 1 or 2)
int axiom_arity(Axiom axiom);

struct AxiomCheck {
  Axiom axiom = Axiom::SenseDeterminesReference;
  std::vector<Type> types;
  bool holds = false;
  nlohmann::ordered_json witness; // null when holds
  std::string note;
  nlohmann::ordered_json to_json() const;
};

AxiomCheck check_axiom(const Model& model, Axiom axiom, const std::vector<Type>& types);

} // namespace intensio::models

#endif
