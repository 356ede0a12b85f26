// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_ENTITY_ID_HPP
#define PLINT_ENTITY_ID_HPP

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace plint {

/// Opaque identity of a model entity. Ordering is lexicographic on the
/// underlying token, which fixes every iteration order in the model.
class EntityId {
 public:
  EntityId() = default;
  explicit EntityId(std::string value) : value_(std::move(value)) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  auto operator<=>(const EntityId&) const = default;
  bool operator==(const EntityId&) const = default;

 private:
  std::string value_;
};

inline std::ostream& operator<<(std::ostream& os, const EntityId& id) { return os << id.str(); }

struct EntityIdHash {
  std::size_t operator()(const EntityId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};

}  // namespace plint

#endif  // PLINT_ENTITY_ID_HPP
