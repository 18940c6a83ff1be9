#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mrc/words.hpp"

namespace mrc {

/// One component of a routing key: a small integer or a short symbolic tag.
/// Components are totally ordered (integers sort before tags at the same
/// position) so that machine assignment is deterministic.
class KeyPart {
 public:
  KeyPart(std::int64_t v) : part_(v) {}
  KeyPart(std::string tag) : part_(std::move(tag)) {}
  KeyPart(const char* tag) : part_(std::string(tag)) {}

  bool is_int() const { return part_.index() == 0; }
  std::int64_t as_int() const { return std::get<0>(part_); }
  const std::string& as_tag() const { return std::get<1>(part_); }

  std::strong_ordering operator<=>(const KeyPart& o) const {
    if (part_.index() != o.part_.index())
      return part_.index() <=> o.part_.index();
    if (is_int()) return as_int() <=> o.as_int();
    return as_tag() <=> o.as_tag();
  }
  bool operator==(const KeyPart& o) const = default;

 private:
  std::variant<std::int64_t, std::string> part_;
};

/// Lexicographically ordered tuple of components.
class Key {
 public:
  Key() = default;
  Key(std::initializer_list<KeyPart> parts) : parts_(parts) {}
  explicit Key(std::vector<KeyPart> parts) : parts_(std::move(parts)) {}

  const std::vector<KeyPart>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  const KeyPart& operator[](std::size_t i) const { return parts_[i]; }
  std::int64_t at_int(std::size_t i) const { return parts_[i].as_int(); }

  std::strong_ordering operator<=>(const Key& o) const {
    const std::size_t n = std::min(parts_.size(), o.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto c = parts_[i] <=> o.parts_[i];
      if (c != std::strong_ordering::equal) return c;
    }
    return parts_.size() <=> o.parts_.size();
  }
  bool operator==(const Key& o) const = default;

  std::string repr() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += parts_[i].is_int() ? std::to_string(parts_[i].as_int())
                              : parts_[i].as_tag();
    }
    return s + ")";
  }

 private:
  std::vector<KeyPart> parts_;
};

/// A keyed message routed through the shuffle.
struct KeyValue {
  Key key;
  Value value;
};

}  // namespace mrc
