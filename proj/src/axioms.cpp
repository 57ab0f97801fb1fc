#include "intensio/models.hpp"

#include <algorithm>

namespace intensio::models {

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::SenseDeterminesReference: return "sdr";
    case Axiom::TypedComposition: return "composition";
    case Axiom::Surjectivity: return "surjectivity";
    case Axiom::SensesAreObjects: return "senses-objects";
    case Axiom::FineGrained: return "fine-grained";
    case Axiom::Iterative: return "iterative";
    case Axiom::Contrapositive16: return "contrapositive-composition";
    case Axiom::Representation: return "representation";
    case Axiom::CharIntensionalApplication: return "char-iapp";
    case Axiom::CharIntensionalInjectivity: return "char-injectivity";
    case Axiom::GallinA2: return "gallin-a2";
    case Axiom::GallinA3: return "gallin-a3";
    case Axiom::GallinAS6: return "gallin-as6";
  }
  return "";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  static const std::pair<const char*, Axiom> table[] = {
      {"sdr", Axiom::SenseDeterminesReference},
      {"composition", Axiom::TypedComposition},
      {"surjectivity", Axiom::Surjectivity},
      {"senses-objects", Axiom::SensesAreObjects},
      {"fine-grained", Axiom::FineGrained},
      {"iterative", Axiom::Iterative},
      {"contrapositive-composition", Axiom::Contrapositive16},
      {"representation", Axiom::Representation},
      {"char-iapp", Axiom::CharIntensionalApplication},
      {"char-injectivity", Axiom::CharIntensionalInjectivity},
      {"gallin-a2", Axiom::GallinA2},
      {"gallin-a3", Axiom::GallinA3},
      {"gallin-as6", Axiom::GallinAS6},
  };
  for (auto& [n, a] : table)
    if (name == n) return a;
  return std::nullopt;
}

int axiom_arity(Axiom axiom) {
  switch (axiom) {
    case Axiom::FineGrained:
      return 0;
    case Axiom::SenseDeterminesReference:
    case Axiom::Surjectivity:
    case Axiom::SensesAreObjects:
    case Axiom::Representation:
    case Axiom::GallinAS6:
      return 1;
    default:
      return 2;
  }
}

nlohmann::ordered_json AxiomCheck::to_json() const {
  nlohmann::ordered_json j;
  j["axiom"] = axiom_name(axiom);
  auto types_json = nlohmann::ordered_json::array();
  for (auto& ty : types) types_json.push_back(print_type(ty));
  j["types"] = types_json;
  j["holds"] = holds;
  j["witness"] = witness;
  if (!note.empty()) j["note"] = note;
  return j;
}

namespace {

// the unique presented denotation, if the presentation behaves as a
// (partial) function at this sense
std::optional<Value> delta_value(const Model& m, const Type& ty, const Value& sense) {
  auto image = m.delta_image(ty, sense);
  if (image.size() != 1) return std::nullopt;
  return image.front();
}

// intensional application followed by presentation at the result type;
// the value the object language writes as delta_b(f'<x'>)
std::optional<Value> iapp_then_delta(const Model& m, const Type& a, const Type& b,
                                     const Value& fs, const Value& xs) {
  auto results = m.iapp_results(a, b, fs, xs);
  if (results.size() != 1) return std::nullopt;
  return delta_value(m, b, results.front());
}

AxiomCheck fail(AxiomCheck check, nlohmann::ordered_json witness, std::string note = "") {
  check.holds = false;
  check.witness = std::move(witness);
  check.note = std::move(note);
  return check;
}

Value total_apply(const Value& f, const Value& x) {
  auto r = f.apply(x);
  if (!r)
    throw FrameError("graph " + f.to_string() + " is not total: missing " + x.to_string());
  return *r;
}

AxiomCheck pass(AxiomCheck check, std::string note = "") {
  check.holds = true;
  check.note = std::move(note);
  return check;
}

} // namespace

AxiomCheck check_axiom(const Model& m, Axiom axiom, const std::vector<Type>& types) {
  AxiomCheck check;
  check.axiom = axiom;
  check.types = types;
  if (static_cast<int>(types.size()) != axiom_arity(axiom))
    throw std::invalid_argument(std::string("axiom ") + axiom_name(axiom) + " takes " +
                                std::to_string(axiom_arity(axiom)) + " type argument(s)");

  switch (axiom) {
    case Axiom::SenseDeterminesReference: {
      // presentation is functional at each sense
      const Type& a = types[0];
      if (m.frame().kind == FrameKind::Kaplan)
        return pass(check, "evaluation at the designated world is single-valued");
      for (auto& sense : m.domain(Type::sense(a))) {
        auto image = m.delta_image(a, sense);
        if (image.size() > 1)
          return fail(check, {{"sense", sense.to_json()},
                              {"denotations", {image[0].to_json(), image[1].to_json()}}});
      }
      return pass(check);
    }

    case Axiom::TypedComposition: {
      const Type& a = types[0];
      const Type& b = types[1];
      Type ab = Type::fun(a, b);
      for (auto& fs : m.domain(Type::sense(ab)))
        for (auto& xs : m.domain(Type::sense(a))) {
          auto f = delta_value(m, ab, fs);
          auto x = delta_value(m, a, xs);
          if (!f || !x) continue;
          auto fx = f->apply(*x);
          if (!fx) continue;
          for (auto& rs : m.iapp_results(a, b, fs, xs)) {
            auto r = delta_value(m, b, rs);
            if (!r || !(*r == *fx))
              return fail(check, {{"fun-sense", fs.to_json()},
                                  {"arg-sense", xs.to_json()},
                                  {"result-sense", rs.to_json()},
                                  {"expected", fx->to_json()}});
          }
        }
      return pass(check);
    }

    case Axiom::Surjectivity: {
      const Type& a = types[0];
      if (m.frame().kind == FrameKind::Kaplan) {
        // constant intensions witness surjectivity pointwise
        for (auto& f : m.domain(a)) {
          auto sense = m.nabla_of(a, f);
          auto back = sense ? delta_value(m, a, *sense) : std::nullopt;
          if (!back || !(*back == f)) return fail(check, {{"unpresented", f.to_json()}});
        }
        return pass(check, "witnessed by constant intensions");
      }
      for (auto& f : m.domain(a)) {
        bool presented = false;
        for (auto& sense : m.domain(Type::sense(a))) {
          auto image = m.delta_image(a, sense);
          if (std::any_of(image.begin(), image.end(), [&](const Value& v) { return v == f; })) {
            presented = true;
            break;
          }
        }
        if (!presented) return fail(check, {{"unpresented", f.to_json()}});
      }
      return pass(check);
    }

    case Axiom::SensesAreObjects: {
      const Type& a = types[0];
      for (auto& sense : m.domain(Type::sense(a)))
        if (!m.member(Type::e(), sense))
          return fail(check, {{"sense-not-an-object", sense.to_json()}});
      return pass(check);
    }

    case Axiom::FineGrained: {
      // cardinality comparison plus the least injection when one exists
      Type tPrime = Type::sense(Type::t());
      BigNat ne = m.cardinality(Type::e());
      BigNat np = m.cardinality(tPrime);
      if (ne > np)
        return fail(check,
                    {{"objects", ne.to_string()}, {"propositions", np.to_string()}},
                    "no injection from objects into propositions");
      check.holds = true;
      check.note = "least injection pairs the i-th object with the i-th proposition";
      if (ne <= BigNat(4096) && np <= BigNat(static_cast<uint64_t>(m.frame().domainCap))) {
        const auto& de = m.domain(Type::e());
        const auto& dp = m.domain(tPrime);
        auto chi = nlohmann::ordered_json::array();
        for (size_t i = 0; i < de.size(); i++)
          chi.push_back({de[i].to_json(), dp[i].to_json()});
        check.witness = {{"injection", chi}};
      }
      return check;
    }

    case Axiom::Iterative: {
      const Type& a = types[0];
      const Type& b = types[1];
      Type ab = Type::fun(a, b);
      for (auto& fs : m.domain(Type::sense(ab)))
        for (auto& gs : m.domain(Type::sense(ab))) {
          auto f = delta_value(m, ab, fs);
          auto g = delta_value(m, ab, gs);
          if (!f || !g || *f == *g) continue;
          bool separated = false;
          for (auto& xs : m.domain(Type::sense(a))) {
            auto x = delta_value(m, a, xs);
            if (!x) continue;
            auto rf = iapp_then_delta(m, a, b, fs, xs);
            auto rg = iapp_then_delta(m, a, b, gs, xs);
            if (rf && rg && !(*rf == *rg)) {
              separated = true;
              break;
            }
          }
          if (!separated)
            return fail(check, {{"fun-sense", fs.to_json()}, {"other-sense", gs.to_json()}},
                        "presented functions differ but no presented argument separates them");
        }
      return pass(check);
    }

    case Axiom::Contrapositive16: {
      const Type& a = types[0];
      const Type& b = types[1];
      Type ab = Type::fun(a, b);
      for (auto& fs : m.domain(Type::sense(ab))) {
        auto presented = delta_value(m, ab, fs);
        if (!presented) continue;
        for (auto& f : m.domain(ab)) {
          // antecedent: every presented argument composes through f
          bool agrees = true;
          for (auto& xs : m.domain(Type::sense(a))) {
            auto x = delta_value(m, a, xs);
            if (!x) continue;
            auto r = iapp_then_delta(m, a, b, fs, xs);
            auto fx = f.apply(*x);
            if (!r || !fx || !(*r == *fx)) {
              agrees = false;
              break;
            }
          }
          if (agrees && !(*presented == f))
            return fail(check, {{"fun-sense", fs.to_json()}, {"agreeing-fun", f.to_json()}},
                        "agreement at every presented argument must force presentation");
        }
      }
      return pass(check);
    }

    case Axiom::Representation: {
      const Type& a = types[0];
      if (!m.has_nabla(a)) throw Unpopulated(Type::sense(a));
      for (auto& f : m.domain(a)) {
        auto sense = m.nabla_of(a, f);
        if (!sense) return fail(check, {{"unrepresented", f.to_json()}});
        auto back = delta_value(m, a, *sense);
        if (!back || !(*back == f))
          return fail(check, {{"value", f.to_json()}, {"sense", sense->to_json()}},
                      "presentation does not invert representation");
      }
      return pass(check);
    }

    case Axiom::CharIntensionalApplication: {
      const Type& a = types[0];
      const Type& b = types[1];
      Type ab = Type::fun(a, b);
      for (auto& fs : m.domain(Type::sense(ab)))
        for (auto& xs : m.domain(Type::sense(a))) {
          auto results = m.iapp_results(a, b, fs, xs);
          auto f = delta_value(m, ab, fs);
          auto x = delta_value(m, a, xs);
          std::optional<Value> expected;
          if (f && x) {
            auto fx = f->apply(*x);
            if (fx) expected = m.nabla_of(b, *fx);
          }
          bool matches = expected ? (results.size() == 1 && results.front() == *expected)
                                  : results.empty();
          if (!matches)
            return fail(check, {{"fun-sense", fs.to_json()}, {"arg-sense", xs.to_json()}},
                        "explicit application table disagrees with the derived route");
        }
      return pass(check);
    }

    case Axiom::CharIntensionalInjectivity: {
      const Type& a = types[0];
      const Type& b = types[1];
      Type ab = Type::fun(a, b);
      const auto& da = m.domain(a);
      for (auto& f : m.domain(ab)) {
        bool injective = true;
        for (size_t i = 0; i < da.size() && injective; i++)
          for (size_t j = i + 1; j < da.size(); j++)
            if (total_apply(f, da[i]) == total_apply(f, da[j])) {
              injective = false;
              break;
            }
        // right-hand side: every presenting sense is injective up to
        // presentation of the arguments
        bool rhs = true;
        nlohmann::ordered_json rhsWitness;
        for (auto& fs : m.domain(Type::sense(ab))) {
          auto presented = delta_value(m, ab, fs);
          if (!presented || !(*presented == f)) continue;
          for (auto& xs : m.domain(Type::sense(a))) {
            for (auto& ys : m.domain(Type::sense(a))) {
              auto rx = m.iapp_results(a, b, fs, xs);
              auto ry = m.iapp_results(a, b, fs, ys);
              if (rx.size() != 1 || ry.size() != 1 || !(rx.front() == ry.front())) continue;
              auto dx = delta_value(m, a, xs);
              auto dy = delta_value(m, a, ys);
              if (!dx || !dy || !(*dx == *dy)) {
                rhs = false;
                rhsWitness = {{"fun-sense", fs.to_json()},
                              {"arg-sense", xs.to_json()},
                              {"other-arg-sense", ys.to_json()}};
                break;
              }
            }
            if (!rhs) break;
          }
          if (!rhs) break;
        }
        if (injective != rhs)
          return fail(check,
                      {{"function", f.to_json()},
                       {"injective", injective},
                       {"intensionally-injective", rhs},
                       {"detail", rhsWitness}},
                      "the two sides of the biconditional disagree");
      }
      return pass(check);
    }

    case Axiom::GallinA2: {
      const Type& a = types[0];
      const Type& b = types[1];
      Type ab = Type::fun(a, b);
      if (!m.has_nabla(a) || !m.has_nabla(b)) throw Unpopulated(Type::sense(a));
      for (auto& f : m.domain(ab))
        for (auto& x : m.domain(a))
          for (auto& y : m.domain(a)) {
            auto sx = m.nabla_of(a, x);
            auto sy = m.nabla_of(a, y);
            if (!sx || !sy || !(*sx == *sy)) continue;
            auto rx = m.nabla_of(b, total_apply(f, x));
            auto ry = m.nabla_of(b, total_apply(f, y));
            if (!rx || !ry || !(*rx == *ry))
              return fail(check, {{"function", f.to_json()},
                                  {"x", x.to_json()},
                                  {"y", y.to_json()}});
          }
      return pass(check);
    }

    case Axiom::GallinA3: {
      const Type& a = types[0];
      const Type& b = types[1];
      Type ab = Type::fun(a, b);
      if (!m.has_nabla(b) || !m.has_nabla(ab)) throw Unpopulated(Type::sense(ab));
      for (auto& f : m.domain(ab))
        for (auto& g : m.domain(ab)) {
          bool pointwise = true;
          for (auto& x : m.domain(a)) {
            auto rf = m.nabla_of(b, total_apply(f, x));
            auto rg = m.nabla_of(b, total_apply(g, x));
            if (!rf || !rg || !(*rf == *rg)) {
              pointwise = false;
              break;
            }
          }
          if (!pointwise) continue;
          auto sf = m.nabla_of(ab, f);
          auto sg = m.nabla_of(ab, g);
          if (!sf || !sg || !(*sf == *sg))
            return fail(check, {{"function", f.to_json()}, {"other", g.to_json()}});
        }
      return pass(check);
    }

    case Axiom::GallinAS6: {
      const Type& a = types[0];
      if (!m.has_nabla(a)) throw Unpopulated(Type::sense(a));
      for (auto& f : m.domain(a)) {
        auto sense = m.nabla_of(a, f);
        auto back = sense ? delta_value(m, a, *sense) : std::nullopt;
        if (!back || !(*back == f)) return fail(check, {{"value", f.to_json()}});
      }
      return pass(check);
    }
  }
  throw std::invalid_argument("unknown axiom");
}

} // namespace intensio::models
