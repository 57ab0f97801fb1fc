#include "intensio/paradox.hpp"

#include <algorithm>

namespace intensio::paradox {

using models::Axiom;
using models::BigNat;
using models::FrameKind;

nlohmann::ordered_json RefutationWitness::to_json() const {
  return {{"f", f.to_json()},
          {"g", g.to_json()},
          {"collision-point", collisionPoint.to_json()},
          {"diagonal", diagonal.to_json()}};
}

nlohmann::ordered_json SmuggleResult::to_json() const {
  return {{"constant-builder", constantBuilder.to_json()},
          {"higher-diagonal", higherDiagonal.to_json()},
          {"rebuilt-diagonal", rebuiltDiagonal.to_json()},
          {"verified", verified}};
}

nlohmann::ordered_json RMOutcome::to_json() const {
  nlohmann::ordered_json j;
  j["outcome"] = kind == Kind::AxiomFailure ? "axiom-failure" : "contradiction";
  if (kind == Kind::AxiomFailure) {
    j["axiom"] = axiom;
    auto types_json = nlohmann::ordered_json::array();
    for (auto& ty : types) types_json.push_back(print_type(ty));
    j["types"] = types_json;
    j["witness"] = witness;
  } else {
    j["refutation"] = refutation->to_json();
    auto iota_json = nlohmann::ordered_json::array();
    for (auto& [c, p] : iota) iota_json.push_back({c.to_json(), p.to_json()});
    j["iota"] = iota_json;
  }
  return j;
}

nlohmann::ordered_json ExtensionStep::to_json() const {
  nlohmann::ordered_json j;
  j["g_h"] = gh.to_json();
  j["status"] = status == Status::Verified ? "verified" : "undefined-extension";
  if (extensionPoint) j["extension-point"] = extensionPoint->to_json();
  if (hTilde) j["h-tilde"] = hTilde->to_json();
  return j;
}

nlohmann::ordered_json ProbeResult::to_json() const {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (auto& h : chain) arr.push_back(h.to_json());
  j["chain"] = arr;
  j["undefined-extension"] = undefinedExtension;
  return j;
}

namespace {

size_t index_of(const std::vector<Value>& domain, const Value& v) {
  auto it = std::lower_bound(domain.begin(), domain.end(), v);
  if (it == domain.end() || !(*it == v))
    throw ParadoxError("value " + v.to_string() + " lies outside the materialized domain");
  return static_cast<size_t>(it - domain.begin());
}

bool truth_of(const Value& graph, const Value& at) {
  auto r = graph.apply(at);
  if (!r) throw ParadoxError("concept " + graph.to_string() + " undefined at " + at.to_string());
  return r->kind() == Value::Kind::Truth && r->scalar() == 1;
}

// re-verification of equalities through the evaluator, so witnesses never
// rest on the refuter's own bookkeeping
bool eval_equal(const Model& model, const Value& l, const Value& r) {
  lang::Context ctx;
  ctx.declare("l", Type::e());
  ctx.declare("r", Type::e());
  models::Assignment assignment{{"l", l}, {"r", r}};
  return models::eval(model, ctx, assignment,
                      lang::Formula::eq(lang::Term::var("l", Type::e()),
                                        lang::Term::var("r", Type::e())));
}

// d(x) = 1 iff some f with iota(f) = x has f(x) = 0
Value build_diagonal(const std::vector<Value>& concepts, const std::vector<Value>& points,
                     const std::vector<Value>& iota) {
  std::vector<std::pair<Value, Value>> entries;
  for (auto& x : points) {
    bool hit = false;
    for (size_t i = 0; i < concepts.size(); i++) {
      if (!(iota[i] == x)) continue;
      if (!truth_of(concepts[i], x)) {
        hit = true;
        break;
      }
    }
    entries.emplace_back(x, Value::truth(hit ? 1 : 0));
  }
  return Value::graph(std::move(entries));
}

} // namespace

std::vector<int> iota_constant(const Model& model, const Type& a, int targetIndex) {
  const auto& concepts = model.domain(Type::fun(a, Type::t()));
  return std::vector<int>(concepts.size(), targetIndex);
}

RefutationWitness cantor_refute(const Model& model, const Type& a,
                                const std::vector<int>& iotaTable) {
  const auto& concepts = model.domain(Type::fun(a, Type::t()));
  const auto& points = model.domain(a);
  if (iotaTable.size() != concepts.size())
    throw ParadoxError("iota table must cover the whole concept domain (" +
                       std::to_string(concepts.size()) + " entries)");
  std::vector<Value> iota;
  iota.reserve(iotaTable.size());
  for (int idx : iotaTable) {
    if (idx < 0 || static_cast<size_t>(idx) >= points.size())
      throw ParadoxError("iota table index out of range");
    iota.push_back(points[static_cast<size_t>(idx)]);
  }

  Value d = build_diagonal(concepts, points, iota);
  size_t dIdx = index_of(concepts, d);
  Value y = iota[dIdx];

  // d(y) = 1 is forced: were it 0, d itself would witness the defining
  // condition at y
  if (!truth_of(d, y))
    throw ParadoxError("diagonal failed to take value 1 at its own image point");

  // least witness with the same image point and opposite value there
  for (size_t i = 0; i < concepts.size(); i++) {
    if (!(iota[i] == y)) continue;
    if (truth_of(concepts[i], y)) continue;
    RefutationWitness w;
    w.f = concepts[i];
    w.g = d;
    w.diagonal = d;
    w.collisionPoint = y;
    // re-check through the evaluator
    if (eval_equal(model, w.f, w.g))
      throw ParadoxError("refutation witness failed re-verification: f = g");
    if (!eval_equal(model, iota[i], iota[dIdx]))
      throw ParadoxError("refutation witness failed re-verification: iota(f) != iota(g)");
    if (truth_of(w.f, y) || !truth_of(w.g, y))
      throw ParadoxError("refutation witness failed re-verification at the collision point");
    return w;
  }
  throw ParadoxError("no witness found; the diagonal construction is broken");
}

SmuggleResult smuggle(const Model& model, const Type& a, const std::vector<int>& iotaTable) {
  const auto& points = model.domain(a);
  const auto& concepts = model.domain(Type::fun(a, Type::t()));
  const auto& selfMaps = model.domain(Type::fun(a, a));
  if (iotaTable.size() != concepts.size())
    throw ParadoxError("iota table must cover the whole concept domain");
  std::vector<Value> iota;
  for (int idx : iotaTable) {
    if (idx < 0 || static_cast<size_t>(idx) >= points.size())
      throw ParadoxError("iota table index out of range");
    iota.push_back(points[static_cast<size_t>(idx)]);
  }

  // constant-function builder of type a(aa)
  std::vector<std::pair<Value, Value>> builderEntries;
  for (auto& q : points) {
    std::vector<std::pair<Value, Value>> constEntries;
    for (auto& x : points) constEntries.emplace_back(x, q);
    builderEntries.emplace_back(q, Value::graph(std::move(constEntries)));
  }
  Value builder = Value::graph(std::move(builderEntries));

  // higher-order diagonal over self-maps: picks out the constant maps
  // whose fixed value the direct diagonal accepts
  auto directDiagonalAt = [&](const Value& q) {
    for (size_t i = 0; i < concepts.size(); i++)
      if (iota[i] == q && !truth_of(concepts[i], q)) return true;
    return false;
  };
  std::vector<std::pair<Value, Value>> higherEntries;
  for (auto& alpha : selfMaps) {
    bool hit = false;
    for (auto& q : points) {
      auto built = builder.apply(q);
      if (!built || !(*built == alpha)) continue;
      Value alphaQ = *alpha.apply(q);
      for (size_t i = 0; i < concepts.size(); i++) {
        if (!(iota[i] == alphaQ)) continue;
        if (!truth_of(concepts[i], alphaQ)) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    higherEntries.emplace_back(alpha, Value::truth(hit ? 1 : 0));
  }
  Value higher = Value::graph(std::move(higherEntries));

  // rebuild the diagonal through the two parameters
  std::vector<std::pair<Value, Value>> rebuiltEntries;
  for (auto& q : points) {
    Value constQ = *builder.apply(q);
    rebuiltEntries.emplace_back(q, *higher.apply(constQ));
  }
  Value rebuilt = Value::graph(std::move(rebuiltEntries));

  SmuggleResult result;
  result.constantBuilder = builder;
  result.higherDiagonal = higher;
  result.rebuiltDiagonal = rebuilt;
  result.verified = true;
  for (auto& q : points)
    if (truth_of(rebuilt, q) != directDiagonalAt(q)) result.verified = false;
  return result;
}

RMOutcome rm_pipeline(const Model& model) {
  RMOutcome outcome;
  Type tPrime = Type::sense(Type::t());
  Type coll = Type::fun(tPrime, Type::t());
  Type collPrime = Type::sense(coll);

  if (model.frame().kind == FrameKind::Standard)
    throw ParadoxError("the pipeline needs populated sense domains (kaplan or custom frame)");

  if (model.frame().kind == FrameKind::Kaplan) {
    // surjectivity holds via constant intensions whenever the collection
    // domain exists at all; check it honestly at the collection type
    auto surj = models::check_axiom(model, Axiom::Surjectivity, {coll});
    if (!surj.holds) {
      outcome.kind = RMOutcome::Kind::AxiomFailure;
      outcome.axiom = models::axiom_name(Axiom::Surjectivity);
      outcome.types = {coll};
      outcome.witness = surj.witness;
      return outcome;
    }
    // the cardinality dichotomy: too few propositions breaks the
    // injection from objects; otherwise the sense domain outgrows the
    // objects and senses cannot all be objects
    BigNat ne = model.cardinality(Type::e());
    BigNat np = model.cardinality(tPrime);
    if (np < ne) {
      outcome.kind = RMOutcome::Kind::AxiomFailure;
      outcome.axiom = models::axiom_name(Axiom::FineGrained);
      outcome.types = {};
      outcome.witness = {{"objects", ne.to_string()}, {"propositions", np.to_string()}};
      return outcome;
    }
    outcome.kind = RMOutcome::Kind::AxiomFailure;
    outcome.axiom = models::axiom_name(Axiom::SensesAreObjects);
    outcome.types = {coll};
    outcome.witness = {{"sense-not-an-object", model.least(collPrime).to_json()},
                       {"collection-senses", model.cardinality(collPrime).to_string()},
                       {"objects", ne.to_string()}};
    return outcome;
  }

  // custom frame: run the three checks exhaustively over the tables
  auto surj = models::check_axiom(model, Axiom::Surjectivity, {coll});
  if (!surj.holds) {
    outcome.kind = RMOutcome::Kind::AxiomFailure;
    outcome.axiom = models::axiom_name(Axiom::Surjectivity);
    outcome.types = {coll};
    outcome.witness = surj.witness;
    return outcome;
  }
  auto fine = models::check_axiom(model, Axiom::FineGrained, {});
  if (!fine.holds) {
    outcome.kind = RMOutcome::Kind::AxiomFailure;
    outcome.axiom = models::axiom_name(Axiom::FineGrained);
    outcome.types = {};
    outcome.witness = fine.witness;
    return outcome;
  }
  auto sao = models::check_axiom(model, Axiom::SensesAreObjects, {coll});
  if (!sao.holds) {
    outcome.kind = RMOutcome::Kind::AxiomFailure;
    outcome.axiom = models::axiom_name(Axiom::SensesAreObjects);
    outcome.types = {coll};
    outcome.witness = sao.witness;
    return outcome;
  }

  // all three hold: build the map from collections to objects (least
  // presenting sense, an object by the previous check), then compose
  // with the least injection into propositions
  const auto& collections = model.domain(coll);
  const auto& senses = model.domain(collPrime);
  const auto& objects = model.domain(Type::e());
  const auto& props = model.domain(tPrime);

  std::vector<Value> deltaMap; // per collection: the chosen presenting sense
  for (auto& c : collections) {
    std::optional<Value> chosen;
    for (auto& s : senses) {
      auto image = model.delta_image(coll, s);
      if (std::any_of(image.begin(), image.end(), [&](const Value& v) { return v == c; })) {
        chosen = s;
        break;
      }
    }
    if (!chosen) throw ParadoxError("surjectivity check passed but no presenting sense found");
    deltaMap.push_back(*chosen);
  }

  // chi: least injection from objects into propositions
  std::map<Value, Value> chi;
  for (size_t i = 0; i < objects.size(); i++) chi.emplace(objects[i], props[i]);

  std::vector<Value> iota;
  for (auto& s : deltaMap) {
    auto it = chi.find(s);
    if (it == chi.end())
      throw ParadoxError("presenting sense " + s.to_string() + " is not an enumerated object");
    iota.push_back(it->second);
  }
  for (size_t i = 0; i < collections.size(); i++)
    outcome.iota.emplace_back(collections[i], iota[i]);

  // diagonal against iota over the collection domain
  Value d = build_diagonal(collections, props, iota);
  auto dPos = std::lower_bound(collections.begin(), collections.end(), d);
  if (dPos == collections.end() || !(*dPos == d)) {
    // the diagonal escapes the listed collection domain: the frame simply
    // fails the type-theoretic form of the diagonalization premise, i.e.
    // the injection exists and breaks the remaining axiom of the paradox
    bool injective = true;
    nlohmann::ordered_json clash;
    for (size_t i = 0; i < iota.size() && injective; i++)
      for (size_t j = i + 1; j < iota.size(); j++)
        if (iota[i] == iota[j]) {
          injective = false;
          clash = {{"first", collections[i].to_json()}, {"second", collections[j].to_json()}};
          break;
        }
    outcome.kind = RMOutcome::Kind::AxiomFailure;
    outcome.axiom = "cantor";
    outcome.types = {tPrime};
    outcome.witness = {{"injection-exists", injective},
                       {"escaping-diagonal", d.to_json()},
                       {"detail", injective
                                      ? nlohmann::ordered_json(
                                            "iota injects collections into propositions; the "
                                            "diagonal lies outside the collection domain")
                                      : clash}};
    return outcome;
  }

  size_t dIdx = static_cast<size_t>(dPos - collections.begin());
  Value y = iota[dIdx];
  if (!truth_of(d, y))
    throw ParadoxError("diagonal failed to take value 1 at its own image point");
  for (size_t i = 0; i < collections.size(); i++) {
    if (!(iota[i] == y) || truth_of(collections[i], y)) continue;
    RefutationWitness w;
    w.f = collections[i];
    w.g = d;
    w.diagonal = d;
    w.collisionPoint = y;
    if (eval_equal(model, w.f, w.g) || !eval_equal(model, iota[i], y))
      throw ParadoxError("refutation witness failed re-verification");
    outcome.kind = RMOutcome::Kind::Contradiction;
    outcome.refutation = w;
    return outcome;
  }
  throw ParadoxError("diagonal landed in the domain but produced no witness");
}

Value concept_from_char(const Model& model, const std::vector<int>& memberObjIds) {
  const auto& objects = model.domain(Type::e());
  std::vector<std::pair<Value, Value>> entries;
  for (auto& o : objects) {
    bool member = std::any_of(memberObjIds.begin(), memberObjIds.end(),
                              [&](int id) { return Value::obj(id) == o; });
    entries.emplace_back(o, Value::truth(member ? 1 : 0));
  }
  return Value::graph(std::move(entries));
}

ExtensionStep extension_step(const Model& model, const std::map<int, int>& partial,
                             const std::map<int, int>& gamma, const Value& h) {
  Type et = Type::fun(Type::e(), Type::t());
  const auto& concepts = model.domain(et);
  const auto& objects = model.domain(Type::e());

  auto conceptAt = [&](int idx) -> const Value& {
    if (idx < 0 || static_cast<size_t>(idx) >= concepts.size())
      throw ParadoxError("concept index out of range");
    return concepts[static_cast<size_t>(idx)];
  };
  auto objectAt = [&](int idx) -> const Value& {
    if (idx < 0 || static_cast<size_t>(idx) >= objects.size())
      throw ParadoxError("object index out of range");
    return objects[static_cast<size_t>(idx)];
  };

  // partial must be injective
  {
    std::map<int, int> seen;
    for (auto& [g, o] : partial) {
      (void)objectAt(o);
      (void)conceptAt(g);
      auto [it, fresh] = seen.emplace(o, g);
      if (!fresh)
        throw ParadoxError("the extension operator is not injective: concepts " +
                           conceptAt(it->second).to_string() + " and " + conceptAt(g).to_string() +
                           " share extension " + objectAt(o).to_string());
    }
  }

  // h must live inside the operator's range
  for (auto& o : objects) {
    if (!truth_of(h, o)) continue;
    bool inRange = false;
    for (auto& [g, oi] : partial)
      if (objectAt(oi) == o) inRange = true;
    if (!inRange)
      throw ParadoxError("h holds at " + o.to_string() +
                         ", which is not an extension of any concept");
  }

  // gamma must invert the operator on h: gamma(partial(g)) = g whenever
  // h(partial(g)) = 1
  for (auto& [gIdx, oIdx] : partial) {
    const Value& o = objectAt(oIdx);
    if (!truth_of(h, o)) continue;
    auto it = gamma.find(oIdx);
    if (it == gamma.end() || it->second != gIdx)
      throw ParadoxError("gamma fails to invert the operator at concept " +
                         conceptAt(gIdx).to_string());
  }

  // g_h(x) = 1 iff h(x) = 1 and gamma(x) does not hold at x
  std::vector<std::pair<Value, Value>> ghEntries;
  for (size_t oi = 0; oi < objects.size(); oi++) {
    const Value& x = objects[oi];
    bool val = false;
    if (truth_of(h, x)) {
      auto it = gamma.find(static_cast<int>(oi));
      if (it == gamma.end())
        throw ParadoxError("gamma undefined at " + x.to_string() + " although h holds there");
      val = !truth_of(conceptAt(it->second), x);
    }
    ghEntries.emplace_back(x, Value::truth(val ? 1 : 0));
  }
  Value gh = Value::graph(std::move(ghEntries));

  ExtensionStep step;
  step.gh = gh;
  size_t ghIdx = index_of(concepts, gh);
  auto it = partial.find(static_cast<int>(ghIdx));
  if (it == partial.end()) {
    step.status = ExtensionStep::Status::UndefinedExtension;
    return step;
  }
  const Value& point = objectAt(it->second);
  if (truth_of(h, point))
    throw ParadoxError("h holds at the extension of its own diagonal; the operator data is "
                       "inconsistent");
  std::vector<std::pair<Value, Value>> extended;
  for (auto& o : objects)
    extended.emplace_back(o, Value::truth(truth_of(h, o) || o == point ? 1 : 0));
  step.extensionPoint = point;
  step.hTilde = Value::graph(std::move(extended));
  step.status = ExtensionStep::Status::Verified;
  return step;
}

ProbeResult indefinite_extensibility_probe(const Model& model, const std::map<int, int>& partial,
                                           const std::map<int, int>& gamma, int budget) {
  ProbeResult result;
  Value h = concept_from_char(model, {});
  for (int i = 0; i < budget; i++) {
    ExtensionStep step = extension_step(model, partial, gamma, h);
    if (step.status == ExtensionStep::Status::UndefinedExtension) {
      result.undefinedExtension = true;
      return result;
    }
    h = *step.hTilde;
    result.chain.push_back(h);
  }
  return result;
}

} // namespace intensio::paradox
