#ifndef INTENSIO_VALUE_HPP
#define INTENSIO_VALUE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace intensio::models {

// Universal value universe: truth values, object atoms, world atoms, and
// finite function graphs. Identity is structural and untyped; graphs keep
// their entries sorted by key so equality is canonical.
class Value {
public:
  enum class Kind { Truth, Obj, World, Graph };

  static Value truth(int b);
  static Value obj(int id);
  static Value world(int id);
  static Value graph(std::vector<std::pair<Value, Value>> entries); // sorts by key

  Kind kind() const { return kind_; }
  int scalar() const { return scalar_; }
  const std::vector<std::pair<Value, Value>>& entries() const { return *entries_; }

  // graph lookup; nullopt off the key set or on non-graphs
  std::optional<Value> apply(const Value& key) const;

  int compare(const Value& other) const;
  bool operator==(const Value& o) const { return compare(o) == 0; }
  bool operator!=(const Value& o) const { return compare(o) != 0; }
  bool operator<(const Value& o) const { return compare(o) < 0; }

  std::string to_string() const;
  nlohmann::ordered_json to_json() const;
  static Value from_json(const nlohmann::json& j);

private:
  Kind kind_ = Kind::Truth;
  int scalar_ = 0;
  std::shared_ptr<const std::vector<std::pair<Value, Value>>> entries_;
};

} // namespace intensio::models

#endif
