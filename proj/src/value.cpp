#include "intensio/value.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace intensio::models {

Value Value::truth(int b) {
  Value v;
  v.kind_ = Kind::Truth;
  v.scalar_ = b ? 1 : 0;
  return v;
}

Value Value::obj(int id) {
  Value v;
  v.kind_ = Kind::Obj;
  v.scalar_ = id;
  return v;
}

Value Value::world(int id) {
  Value v;
  v.kind_ = Kind::World;
  v.scalar_ = id;
  return v;
}

Value Value::graph(std::vector<std::pair<Value, Value>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < entries.size(); i++)
    if (entries[i].first == entries[i + 1].first)
      throw std::invalid_argument("graph has a duplicate key: " + entries[i].first.to_string());
  Value v;
  v.kind_ = Kind::Graph;
  v.entries_ = std::make_shared<const std::vector<std::pair<Value, Value>>>(std::move(entries));
  return v;
}

std::optional<Value> Value::apply(const Value& key) const {
  if (kind_ != Kind::Graph) return std::nullopt;
  auto it = std::lower_bound(entries_->begin(), entries_->end(), key,
                             [](const auto& e, const Value& k) { return e.first < k; });
  if (it == entries_->end() || !(it->first == key)) return std::nullopt;
  return it->second;
}

int Value::compare(const Value& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_ ? -1 : 1;
  if (kind_ != Kind::Graph) return scalar_ == other.scalar_ ? 0 : (scalar_ < other.scalar_ ? -1 : 1);
  const auto& a = *entries_;
  const auto& b = *other.entries_;
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; i++) {
    if (int c = a[i].first.compare(b[i].first)) return c;
    if (int c = a[i].second.compare(b[i].second)) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

std::string Value::to_string() const {
  switch (kind_) {
    case Kind::Truth:
      return std::to_string(scalar_);
    case Kind::Obj:
      return "o" + std::to_string(scalar_);
    case Kind::World:
      return "w" + std::to_string(scalar_);
    case Kind::Graph: {
      std::ostringstream out;
      out << "{";
      bool first = true;
      for (auto& [k, v] : *entries_) {
        if (!first) out << ", ";
        first = false;
        out << k.to_string() << "->" << v.to_string();
      }
      out << "}";
      return out.str();
    }
  }
  return "";
}

nlohmann::ordered_json Value::to_json() const {
  nlohmann::ordered_json j;
  switch (kind_) {
    case Kind::Truth:
      j["b"] = scalar_;
      break;
    case Kind::Obj:
      j["o"] = scalar_;
      break;
    case Kind::World:
      j["w"] = scalar_;
      break;
    case Kind::Graph: {
      auto arr = nlohmann::ordered_json::array();
      for (auto& [k, v] : *entries_) arr.push_back({k.to_json(), v.to_json()});
      j["g"] = arr;
      break;
    }
  }
  return j;
}

Value Value::from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1)
    throw std::invalid_argument("value must be one of {\"b\":..}, {\"o\":..}, {\"w\":..}, {\"g\":..}");
  if (j.contains("b")) return truth(j.at("b").get<int>());
  if (j.contains("o")) return obj(j.at("o").get<int>());
  if (j.contains("w")) return world(j.at("w").get<int>());
  if (j.contains("g")) {
    std::vector<std::pair<Value, Value>> entries;
    for (auto& e : j.at("g")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("graph entries are [key, value] pairs");
      entries.emplace_back(from_json(e[0]), from_json(e[1]));
    }
    return graph(std::move(entries));
  }
  throw std::invalid_argument("unknown value tag");
}

} // namespace intensio::models
