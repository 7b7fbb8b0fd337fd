#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace patmine {

/// Interned vertex label. Two labels compare equal iff their symbols are
/// equal; the intern table is process-wide so labels from different files
/// and datasets can be compared directly.
class Label {
 public:
  explicit Label(std::string_view symbol);

  std::string_view symbol() const noexcept { return *symbol_; }
  std::uint32_t id() const noexcept { return id_; }

  friend bool operator==(const Label& a, const Label& b) noexcept {
    return a.id_ == b.id_;
  }
  /// Orders by interning id, which is stable within a process only. Use
  /// `symbol()` when output order must not depend on load history.
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) noexcept {
    return a.id_ <=> b.id_;
  }

 private:
  std::uint32_t id_;
  const std::string* symbol_;
};

}  // namespace patmine

template <>
struct std::hash<patmine::Label> {
  std::size_t operator()(const patmine::Label& l) const noexcept { return l.id(); }
};
