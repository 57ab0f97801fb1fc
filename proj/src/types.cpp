#include "intensio/types.hpp"

#include <algorithm>
#include <cctype>

namespace intensio {

Type Type::e() {
  static const auto node = std::make_shared<const Node>(Node{Kind::BaseE, nullptr, nullptr});
  return Type(node);
}

Type Type::t() {
  static const auto node = std::make_shared<const Node>(Node{Kind::BaseT, nullptr, nullptr});
  return Type(node);
}

Type Type::fun(Type domain, Type codomain) {
  return Type(std::make_shared<const Node>(
      Node{Kind::Fun, std::move(domain.node_), std::move(codomain.node_)}));
}

Type Type::sense(Type inner) {
  return Type(std::make_shared<const Node>(Node{Kind::Sense, std::move(inner.node_), nullptr}));
}

int Type::compare(const Type& other) const {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  if (x == y) return 0;
  if (x->kind != y->kind) return x->kind < y->kind ? -1 : 1;
  switch (x->kind) {
    case Kind::BaseE:
    case Kind::BaseT:
      return 0;
    case Kind::Sense:
      return Type(x->a).compare(Type(y->a));
    case Kind::Fun: {
      int c = Type(x->a).compare(Type(y->a));
      if (c != 0) return c;
      return Type(x->b).compare(Type(y->b));
    }
  }
  return 0;
}

int Type::depth() const {
  switch (kind()) {
    case Kind::BaseE:
    case Kind::BaseT:
      return 1;
    case Kind::Sense:
      return 1 + Type(node_->a).depth();
    case Kind::Fun:
      return 1 + std::max(Type(node_->a).depth(), Type(node_->b).depth());
  }
  return 1;
}

int degree(const Type& ty) {
  switch (ty.kind()) {
    case Type::Kind::BaseE:
    case Type::Kind::BaseT:
      return 1;
    case Type::Kind::Sense:
      return degree(ty.inner());
    case Type::Kind::Fun: {
      int da = degree(ty.domain());
      int db = degree(ty.codomain());
      return da >= db ? da + 1 : db;
    }
  }
  return 1;
}

Type reduce_type(const Type& ty) {
  switch (ty.kind()) {
    case Type::Kind::BaseE:
    case Type::Kind::BaseT:
      return ty;
    case Type::Kind::Fun:
      return Type::fun(reduce_type(ty.domain()), reduce_type(ty.codomain()));
    case Type::Kind::Sense: {
      Type in = reduce_type(ty.inner());
      if (in.kind() == Type::Kind::Fun)
        return Type::fun(reduce_type(Type::sense(in.domain())),
                         reduce_type(Type::sense(in.codomain())));
      return Type::sense(in);
    }
  }
  return ty;
}

namespace {

struct TypeParser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  Type parse() {
    Type ty = parse_type();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return ty;
  }

  Type parse_type() {
    skip_ws();
    if (pos >= text.size()) fail("expected type");
    Type base = parse_primary();
    // postfix primes bind tighter than application; application is
    // handled explicitly by the parenthesized form
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == '\'') {
        pos++;
        base = Type::sense(base);
      } else {
        break;
      }
    }
    return base;
  }

  Type parse_primary() {
    char c = text[pos];
    if (c == 'e') {
      pos++;
      return Type::e();
    }
    if (c == 't') {
      pos++;
      return Type::t();
    }
    if (c == '(') {
      pos++;
      Type a = parse_type();
      Type b = parse_type();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      pos++;
      return Type::fun(a, b);
    }
    fail("expected type");
  }
};

} // namespace

Type parse_type(std::string_view text) {
  TypeParser p{text};
  return p.parse();
}

std::string print_type(const Type& ty) {
  switch (ty.kind()) {
    case Type::Kind::BaseE:
      return "e";
    case Type::Kind::BaseT:
      return "t";
    case Type::Kind::Fun:
      return "(" + print_type(ty.domain()) + " " + print_type(ty.codomain()) + ")";
    case Type::Kind::Sense:
      return print_type(ty.inner()) + "'";
  }
  return "";
}

} // namespace intensio
