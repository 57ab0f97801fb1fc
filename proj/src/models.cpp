#include "intensio/models.hpp"

#include <algorithm>
#include <cstdlib>

namespace intensio::models {

// ---------------------------------------------------------------- frame

Frame Frame::standard(int nE, long long cap) {
  Frame f;
  f.kind = FrameKind::Standard;
  f.numObjects = nE;
  f.domainCap = cap;
  return f;
}

Frame Frame::kaplan(int nE, int nW, int w0, long long cap) {
  Frame f;
  f.kind = FrameKind::Kaplan;
  f.numObjects = nE;
  f.numWorlds = nW;
  f.w0 = w0;
  f.domainCap = cap;
  return f;
}

Frame Frame::from_json(const nlohmann::json& j) {
  Frame f;
  std::string kind = j.value("kind", "standard");
  if (kind == "standard")
    f.kind = FrameKind::Standard;
  else if (kind == "kaplan")
    f.kind = FrameKind::Kaplan;
  else if (kind == "custom")
    f.kind = FrameKind::Custom;
  else
    throw FrameError("unknown frame kind: " + kind);
  f.numObjects = j.value("E", 0);
  f.numWorlds = j.value("W", 0);
  f.w0 = j.value("w0", 0);
  f.domainCap = j.value("domainCap", 1'000'000LL);
  if (const char* cap = std::getenv("INTENSIO_CAP")) f.domainCap = std::atoll(cap);
  if (f.numObjects < 0 || f.numWorlds < 0) throw FrameError("negative domain size");
  if (f.kind == FrameKind::Kaplan && (f.w0 < 0 || f.w0 >= std::max(1, f.numWorlds)))
    throw FrameError("designated world out of range");
  if (j.contains("custom")) {
    const auto& c = j.at("custom");
    if (c.contains("domains"))
      for (auto& [key, arr] : c.at("domains").items()) {
        std::vector<Value> vals;
        for (auto& v : arr) vals.push_back(Value::from_json(v));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        f.domains.emplace(parse_type(key), std::move(vals));
      }
    if (c.contains("delta"))
      for (auto& [key, arr] : c.at("delta").items()) {
        std::vector<std::pair<Value, Value>> rel;
        for (auto& row : arr) {
          if (!row.is_array() || row.size() != 2)
            throw FrameError("delta rows are [sense, denotation] pairs");
          rel.emplace_back(Value::from_json(row[0]), Value::from_json(row[1]));
        }
        f.delta.emplace(parse_type(key), std::move(rel));
      }
    if (c.contains("nabla"))
      for (auto& [key, arr] : c.at("nabla").items()) {
        std::vector<std::pair<Value, Value>> map;
        for (auto& row : arr) {
          if (!row.is_array() || row.size() != 2)
            throw FrameError("nabla rows are [denotation, sense] pairs");
          map.emplace_back(Value::from_json(row[0]), Value::from_json(row[1]));
        }
        f.nabla.emplace(parse_type(key), std::move(map));
      }
    if (c.contains("iapp"))
      for (auto& tj : c.at("iapp")) {
        IappTable table;
        table.a = parse_type(tj.at("a").get<std::string>());
        table.b = parse_type(tj.at("b").get<std::string>());
        for (auto& row : tj.at("table")) {
          if (!row.is_array() || row.size() != 3)
            throw FrameError("iapp rows are [fun, arg, result] triples");
          table.rows.push_back({Value::from_json(row[0]), Value::from_json(row[1]),
                                Value::from_json(row[2])});
        }
        f.iapp.push_back(std::move(table));
      }
  }
  return f;
}

nlohmann::ordered_json Frame::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind == FrameKind::Standard ? "standard"
              : kind == FrameKind::Kaplan ? "kaplan"
                                          : "custom";
  j["E"] = numObjects;
  if (kind == FrameKind::Kaplan) {
    j["W"] = numWorlds;
    j["w0"] = w0;
  }
  j["domainCap"] = domainCap;
  if (kind == FrameKind::Custom) {
    nlohmann::ordered_json c;
    nlohmann::ordered_json doms;
    for (auto& [ty, vals] : domains) {
      auto arr = nlohmann::ordered_json::array();
      for (auto& v : vals) arr.push_back(v.to_json());
      doms[print_type(ty)] = arr;
    }
    c["domains"] = doms;
    nlohmann::ordered_json dj;
    for (auto& [ty, rel] : delta) {
      auto arr = nlohmann::ordered_json::array();
      for (auto& [s, d] : rel) arr.push_back({s.to_json(), d.to_json()});
      dj[print_type(ty)] = arr;
    }
    c["delta"] = dj;
    nlohmann::ordered_json nj;
    for (auto& [ty, map] : nabla) {
      auto arr = nlohmann::ordered_json::array();
      for (auto& [d, s] : map) arr.push_back({d.to_json(), s.to_json()});
      nj[print_type(ty)] = arr;
    }
    c["nabla"] = nj;
    auto ij = nlohmann::ordered_json::array();
    for (auto& table : iapp) {
      nlohmann::ordered_json tj;
      tj["a"] = print_type(table.a);
      tj["b"] = print_type(table.b);
      auto arr = nlohmann::ordered_json::array();
      for (auto& row : table.rows)
        arr.push_back({row[0].to_json(), row[1].to_json(), row[2].to_json()});
      tj["table"] = arr;
      ij.push_back(tj);
    }
    c["iapp"] = ij;
    j["custom"] = c;
  }
  return j;
}

// ---------------------------------------------------------- cardinality

BigNat cardinality(FrameKind kind, int numObjects, int numWorlds, const Type& ty) {
  switch (ty.kind()) {
    case Type::Kind::BaseE:
      return BigNat(static_cast<uint64_t>(numObjects));
    case Type::Kind::BaseT:
      return BigNat(2);
    case Type::Kind::Fun: {
      BigNat da = cardinality(kind, numObjects, numWorlds, ty.domain());
      BigNat db = cardinality(kind, numObjects, numWorlds, ty.codomain());
      return BigNat::pow(db, da);
    }
    case Type::Kind::Sense: {
      if (kind != FrameKind::Kaplan) return BigNat(0); // unpopulated
      BigNat base = cardinality(kind, numObjects, numWorlds, ty.inner());
      return BigNat::pow(base, BigNat(static_cast<uint64_t>(numWorlds)));
    }
  }
  return BigNat(0);
}

CardinalityReport cardinality_report(FrameKind kind, int numObjects, int numWorlds,
                                     const std::vector<Type>& types) {
  CardinalityReport report;
  for (auto& ty : types) {
    std::string size;
    try {
      size = cardinality(kind, numObjects, numWorlds, ty).to_string();
    } catch (const CardinalityOverflow&) {
      size = "beyond representation";
    }
    report.sizes.emplace_back(print_type(ty), size);
  }
  Type tPrime = Type::sense(Type::t());
  Type coll = Type::fun(tPrime, Type::t());
  Type collPrime = Type::sense(coll);
  BigNat e = cardinality(kind, numObjects, numWorlds, Type::e());
  BigNat props = cardinality(kind, numObjects, numWorlds, tPrime);
  BigNat colls = cardinality(kind, numObjects, numWorlds, coll);
  BigNat senses = cardinality(kind, numObjects, numWorlds, collPrime);
  report.fineGrainedHolds = e <= props;
  report.chainHolds = senses >= colls && colls > props && props >= e;
  std::string chain = "|D_(t' t)'| " + std::string(senses >= colls ? ">=" : "<") + " |D_(t' t)| " +
                      std::string(colls > props ? ">" : "<=") + " |D_t'| " +
                      std::string(props >= e ? ">=" : "<") + " |D_e|";
  if (!report.fineGrainedHolds)
    report.summary = "fine-grained fails: |D_t'| = " + props.to_string() + " < " + e.to_string() +
                     " = |D_e|";
  else
    report.summary = chain;
  return report;
}

// ---------------------------------------------------------------- model

Model::Model(Frame frame) : frame_(std::move(frame)) {
  if (frame_.kind == FrameKind::Custom) validate();
}

void Model::validate() const {
  for (auto& [ty, map] : frame_.nabla) {
    std::map<Value, Value> seen;
    for (auto& [denot, sense] : map) {
      auto [it, fresh] = seen.emplace(denot, sense);
      if (!fresh && !(it->second == sense))
        throw FrameError("nabla at " + print_type(ty) + " maps " + denot.to_string() +
                         " to two senses");
    }
    // the presentation must invert the representation
    for (auto& [denot, sense] : map) {
      auto image = delta_image(ty, sense);
      bool ok = std::any_of(image.begin(), image.end(), [&](const Value& v) { return v == denot; });
      if (!ok)
        throw FrameError("delta does not invert nabla at " + print_type(ty) + " for " +
                         denot.to_string());
      if (image.size() != 1)
        throw FrameError("delta is not functional at the representation of " + denot.to_string() +
                         " (type " + print_type(ty) + ")");
    }
  }
}

const std::vector<Value>& Model::domain(const Type& ty) const {
  auto it = memo_.find(ty);
  if (it == memo_.end()) {
    auto built = std::make_shared<const std::vector<Value>>(build_domain(ty));
    it = memo_.emplace(ty, std::move(built)).first;
  }
  return *it->second;
}

std::vector<Value> Model::build_domain(const Type& ty) const {
  if (frame_.kind == FrameKind::Custom) {
    auto it = frame_.domains.find(ty);
    if (it != frame_.domains.end()) return it->second;
  }
  BigNat size;
  try {
    size = cardinality(ty);
  } catch (const CardinalityOverflow&) {
    throw TooLarge(ty, "unrepresentably many");
  }
  if (size > BigNat(static_cast<uint64_t>(frame_.domainCap)))
    throw TooLarge(ty, size.to_string());
  switch (ty.kind()) {
    case Type::Kind::BaseE: {
      std::vector<Value> out;
      out.reserve(frame_.numObjects);
      for (int i = 0; i < frame_.numObjects; i++) out.push_back(Value::obj(i));
      return out;
    }
    case Type::Kind::BaseT:
      return {Value::truth(0), Value::truth(1)};
    case Type::Kind::Fun: {
      const auto& da = domain(ty.domain());
      const auto& db = domain(ty.codomain());
      if (db.empty() && !da.empty()) return {};
      // odometer enumeration; the least graph (all keys at the least
      // value) comes first, matching the lexicographic order on graphs
      std::vector<Value> out;
      std::vector<size_t> digits(da.size(), 0);
      for (;;) {
        std::vector<std::pair<Value, Value>> entries;
        entries.reserve(da.size());
        for (size_t i = 0; i < da.size(); i++) entries.emplace_back(da[i], db[digits[i]]);
        out.push_back(Value::graph(std::move(entries)));
        size_t k = da.size();
        while (k > 0) {
          k--;
          if (++digits[k] < db.size()) break;
          digits[k] = 0;
          if (k == 0) return out; // odometer order is already ascending
        }
        if (da.empty()) {
          return out; // single empty graph
        }
      }
    }
    case Type::Kind::Sense: {
      if (frame_.kind != FrameKind::Kaplan) throw Unpopulated(ty);
      const auto& base = domain(ty.inner());
      std::vector<Value> worlds;
      for (int i = 0; i < frame_.numWorlds; i++) worlds.push_back(Value::world(i));
      if (base.empty() && !worlds.empty()) return {};
      std::vector<Value> out;
      std::vector<size_t> digits(worlds.size(), 0);
      for (;;) {
        std::vector<std::pair<Value, Value>> entries;
        entries.reserve(worlds.size());
        for (size_t i = 0; i < worlds.size(); i++) entries.emplace_back(worlds[i], base[digits[i]]);
        out.push_back(Value::graph(std::move(entries)));
        size_t k = worlds.size();
        while (k > 0) {
          k--;
          if (++digits[k] < base.size()) break;
          digits[k] = 0;
          if (k == 0) return out;
        }
        if (worlds.empty()) return out;
      }
    }
  }
  return {};
}

Value Model::least(const Type& ty) const {
  if (frame_.kind == FrameKind::Custom) {
    auto it = frame_.domains.find(ty);
    if (it != frame_.domains.end()) {
      if (it->second.empty()) throw Unpopulated(ty);
      return it->second.front();
    }
  }
  switch (ty.kind()) {
    case Type::Kind::BaseE:
      if (frame_.numObjects == 0) throw Unpopulated(ty);
      return Value::obj(0);
    case Type::Kind::BaseT:
      return Value::truth(0);
    case Type::Kind::Fun: {
      // the least graph maps every key to the least codomain value; note
      // graphs compare by sorted entry list, so this is minimal
      const auto& da = domain(ty.domain());
      Value lo = least(ty.codomain());
      std::vector<std::pair<Value, Value>> entries;
      for (auto& k : da) entries.emplace_back(k, lo);
      return Value::graph(std::move(entries));
    }
    case Type::Kind::Sense: {
      if (frame_.kind != FrameKind::Kaplan) throw Unpopulated(ty);
      Value lo = least(ty.inner());
      std::vector<std::pair<Value, Value>> entries;
      for (int i = 0; i < frame_.numWorlds; i++) entries.emplace_back(Value::world(i), lo);
      return Value::graph(std::move(entries));
    }
  }
  throw Unpopulated(ty);
}

BigNat Model::cardinality(const Type& ty) const {
  if (frame_.kind == FrameKind::Custom) {
    auto it = frame_.domains.find(ty);
    if (it != frame_.domains.end()) return BigNat(it->second.size());
    switch (ty.kind()) {
      case Type::Kind::BaseE:
        return BigNat(static_cast<uint64_t>(frame_.numObjects));
      case Type::Kind::BaseT:
        return BigNat(2);
      case Type::Kind::Fun:
        return BigNat::pow(cardinality(ty.codomain()), cardinality(ty.domain()));
      case Type::Kind::Sense:
        return BigNat(0);
    }
  }
  return models::cardinality(frame_.kind, frame_.numObjects, frame_.numWorlds, ty);
}

bool Model::member(const Type& ty, const Value& v) const {
  if (frame_.kind == FrameKind::Custom) {
    auto it = frame_.domains.find(ty);
    if (it != frame_.domains.end())
      return std::binary_search(it->second.begin(), it->second.end(), v);
  }
  switch (ty.kind()) {
    case Type::Kind::BaseE:
      return v.kind() == Value::Kind::Obj && v.scalar() >= 0 && v.scalar() < frame_.numObjects;
    case Type::Kind::BaseT:
      return v.kind() == Value::Kind::Truth;
    case Type::Kind::Fun: {
      if (v.kind() != Value::Kind::Graph) return false;
      const auto& da = domain(ty.domain());
      if (v.entries().size() != da.size()) return false;
      size_t i = 0;
      for (auto& [k, val] : v.entries()) {
        if (!(k == da[i])) return false;
        if (!member(ty.codomain(), val)) return false;
        i++;
      }
      return true;
    }
    case Type::Kind::Sense: {
      if (frame_.kind != FrameKind::Kaplan) return false;
      if (v.kind() != Value::Kind::Graph) return false;
      if (v.entries().size() != static_cast<size_t>(frame_.numWorlds)) return false;
      int i = 0;
      for (auto& [k, val] : v.entries()) {
        if (!(k == Value::world(i))) return false;
        if (!member(ty.inner(), val)) return false;
        i++;
      }
      return true;
    }
  }
  return false;
}

std::vector<Value> Model::delta_image(const Type& ty, const Value& sense) const {
  switch (frame_.kind) {
    case FrameKind::Standard:
      return {};
    case FrameKind::Kaplan: {
      auto at = sense.apply(Value::world(frame_.w0));
      if (!at) return {};
      return {*at};
    }
    case FrameKind::Custom: {
      std::vector<Value> out;
      auto it = frame_.delta.find(ty);
      if (it == frame_.delta.end()) return out;
      for (auto& [s, d] : it->second)
        if (s == sense) out.push_back(d);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }
  return {};
}

bool Model::delta_functional(const Type& ty) const {
  if (frame_.kind != FrameKind::Custom) return true;
  auto it = frame_.delta.find(ty);
  if (it == frame_.delta.end()) return true;
  std::map<Value, Value> seen;
  for (auto& [s, d] : it->second) {
    auto [pos, fresh] = seen.emplace(s, d);
    if (!fresh && !(pos->second == d)) return false;
  }
  return true;
}

std::optional<Value> Model::nabla_of(const Type& ty, const Value& denot) const {
  switch (frame_.kind) {
    case FrameKind::Standard:
      return std::nullopt;
    case FrameKind::Kaplan: {
      std::vector<std::pair<Value, Value>> entries;
      for (int i = 0; i < frame_.numWorlds; i++) entries.emplace_back(Value::world(i), denot);
      return Value::graph(std::move(entries));
    }
    case FrameKind::Custom: {
      auto it = frame_.nabla.find(ty);
      if (it == frame_.nabla.end()) return std::nullopt;
      for (auto& [d, s] : it->second)
        if (d == denot) return s;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool Model::has_nabla(const Type& ty) const {
  if (frame_.kind == FrameKind::Kaplan) return true;
  if (frame_.kind == FrameKind::Custom) return frame_.nabla.count(ty) > 0;
  return false;
}

std::vector<Value> Model::iapp_results(const Type& a, const Type& b, const Value& fSense,
                                       const Value& xSense) const {
  if (frame_.kind == FrameKind::Kaplan) {
    // pointwise application across worlds
    std::vector<std::pair<Value, Value>> entries;
    for (int i = 0; i < frame_.numWorlds; i++) {
      Value w = Value::world(i);
      auto fw = fSense.apply(w);
      auto xw = xSense.apply(w);
      if (!fw || !xw) return {};
      auto r = fw->apply(*xw);
      if (!r) return {};
      entries.emplace_back(w, *r);
    }
    return {Value::graph(std::move(entries))};
  }
  if (frame_.kind == FrameKind::Custom) {
    Type ab = Type::fun(a, b);
    for (auto& table : frame_.iapp)
      if (table.a == a && table.b == b) {
        std::vector<Value> out;
        for (auto& row : table.rows)
          if (row[0] == fSense && row[1] == xSense) out.push_back(row[2]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      }
    // derived: present both senses, apply, then represent the result
    std::vector<Value> out;
    for (auto& f : delta_image(ab, fSense))
      for (auto& x : delta_image(a, xSense)) {
        auto r = f.apply(x);
        if (!r) continue;
        auto rSense = nabla_of(b, *r);
        if (rSense) out.push_back(*rSense);
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  return {};
}

// ----------------------------------------------------------------- eval

namespace {

// Rep terms need a type index; infer term types from the context so that
// ∇ can consult the frame's representation tables.
Value eval_term_typed(const Model& model, const lang::Context& ctx, const Assignment& assignment,
                      const lang::Term& term, Type* outType) {
  switch (term.kind()) {
    case lang::Term::Kind::Const0:
    case lang::Term::Kind::Const1:
      if (outType) *outType = Type::t();
      return term.kind() == lang::Term::Kind::Const1 ? Value::truth(1) : Value::truth(0);
    case lang::Term::Kind::Var: {
      if (outType) *outType = term.var_type();
      auto it = assignment.find(term.var_name());
      if (it == assignment.end())
        throw std::invalid_argument("no value assigned to variable " + term.var_name());
      return it->second;
    }
    case lang::Term::Kind::EApp: {
      Type tf = Type::e();
      Value f = eval_term_typed(model, ctx, assignment, term.fun(), &tf);
      Value x = eval_term_typed(model, ctx, assignment, term.arg(), nullptr);
      if (outType) *outType = tf.kind() == Type::Kind::Fun ? tf.codomain() : Type::e();
      auto r = f.apply(x);
      if (!r)
        throw std::invalid_argument("graph " + f.to_string() + " is not defined at " +
                                    x.to_string());
      return *r;
    }
    case lang::Term::Kind::Rep: {
      Type argTy = Type::e();
      Value x = eval_term_typed(model, ctx, assignment, term.arg(), &argTy);
      if (outType) *outType = Type::sense(argTy);
      auto s = model.nabla_of(argTy, x);
      if (!s)
        throw std::invalid_argument("this frame has no representation table at " +
                                    print_type(argTy));
      return *s;
    }
  }
  throw std::invalid_argument("malformed term");
}

} // namespace

Value eval_term(const Model& model, const lang::Context& ctx, const Assignment& assignment,
                const lang::Term& term) {
  return eval_term_typed(model, ctx, assignment, term, nullptr);
}

bool eval(const Model& model, const lang::Context& ctx, const Assignment& assignment,
          const lang::Formula& f) {
  switch (f.kind()) {
    case lang::Formula::Kind::Eq: {
      Value l = eval_term_typed(model, ctx, assignment, f.terms()[0], nullptr);
      Value r = eval_term_typed(model, ctx, assignment, f.terms()[1], nullptr);
      return l == r;
    }
    case lang::Formula::Kind::Pres: {
      Value sense = eval_term_typed(model, ctx, assignment, f.terms()[0], nullptr);
      Value denot = eval_term_typed(model, ctx, assignment, f.terms()[1], nullptr);
      auto image = model.delta_image(f.types()[0], sense);
      return std::any_of(image.begin(), image.end(), [&](const Value& v) { return v == denot; });
    }
    case lang::Formula::Kind::IApp: {
      Value fs = eval_term_typed(model, ctx, assignment, f.terms()[0], nullptr);
      Value xs = eval_term_typed(model, ctx, assignment, f.terms()[1], nullptr);
      Value rs = eval_term_typed(model, ctx, assignment, f.terms()[2], nullptr);
      auto results = model.iapp_results(f.types()[0], f.types()[1], fs, xs);
      return std::any_of(results.begin(), results.end(),
                         [&](const Value& v) { return v == rs; });
    }
    case lang::Formula::Kind::Not:
      return !eval(model, ctx, assignment, f.body());
    case lang::Formula::Kind::And:
      return eval(model, ctx, assignment, f.left()) && eval(model, ctx, assignment, f.right());
    case lang::Formula::Kind::Or:
      return eval(model, ctx, assignment, f.left()) || eval(model, ctx, assignment, f.right());
    case lang::Formula::Kind::Implies:
      return !eval(model, ctx, assignment, f.left()) || eval(model, ctx, assignment, f.right());
    case lang::Formula::Kind::Forall:
    case lang::Formula::Kind::Exists: {
      bool isForall = f.kind() == lang::Formula::Kind::Forall;
      const auto& dom = model.domain(f.binder_type());
      Assignment inner = assignment;
      for (auto& v : dom) {
        inner[f.binder_name()] = v;
        bool holds = eval(model, ctx, inner, f.body());
        if (isForall && !holds) return false;
        if (!isForall && holds) return true;
      }
      return isForall;
    }
  }
  throw std::invalid_argument("malformed formula");
}

} // namespace intensio::models
