#ifndef INTENSIO_TYPES_HPP
#define INTENSIO_TYPES_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace intensio {

// The type grammar: e | t | (a b) | a'. Types are immutable trees shared
// via refcounted nodes; structural equality and a total order are provided
// so types can be used as map keys.
class Type {
public:
  enum class Kind { BaseE, BaseT, Fun, Sense };

  static Type e();
  static Type t();
  static Type fun(Type domain, Type codomain);
  static Type sense(Type inner);

  Kind kind() const { return node_->kind; }
  bool is_base() const { return kind() == Kind::BaseE || kind() == Kind::BaseT; }
  // Fun accessors
  Type domain() const { return Type(node_->a); }
  Type codomain() const { return Type(node_->b); }
  // Sense accessor
  Type inner() const { return Type(node_->a); }

  int compare(const Type& other) const;
  bool operator==(const Type& other) const { return compare(other) == 0; }
  bool operator!=(const Type& other) const { return compare(other) != 0; }
  bool operator<(const Type& other) const { return compare(other) < 0; }

  int depth() const;

private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> a, b; // Fun: a=domain,b=codomain; Sense: a=inner
  };
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ParseError : std::runtime_error {
  size_t offset;
  ParseError(const std::string& what, size_t off)
      : std::runtime_error(what + " at offset " + std::to_string(off)), offset(off) {}
};

// Degree of a type, a positive integer:
//   deg(e) = deg(t) = 1,  deg(a') = deg(a),
//   deg(ab) = deg(a)+1 when deg(a) >= deg(b), else deg(b).
int degree(const Type& ty);

// Normal form under the rewrite (ab)' -> a'b', applied exhaustively. This
// is the identification made by the rejected reduction axiom; nothing else
// in the library applies it implicitly.
Type reduce_type(const Type& ty);

// Surface syntax. parse accepts arbitrary whitespace; print emits the
// canonical form (minimal spacing, primes glued).
Type parse_type(std::string_view text);
std::string print_type(const Type& ty);

} // namespace intensio

#endif
