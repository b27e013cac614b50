#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "binf/root_system.hpp"

namespace binf {

// Integer extended by -infinity. -inf absorbs addition and compares below
// every finite value; two -inf values compare equal.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v), finite_(true) {}  // NOLINT: implicit by intent

  static constexpr ExtInt neg_inf() { return ExtInt(Tag{}); }

  constexpr bool is_neg_inf() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }
  // Precondition: finite.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr ExtInt operator+(ExtInt a, std::int64_t b) { return a.finite_ ? ExtInt(a.value_ + b) : a; }
  friend constexpr ExtInt operator-(ExtInt a, std::int64_t b) { return a.finite_ ? ExtInt(a.value_ - b) : a; }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(ExtInt a, ExtInt b) {
    if (!b.finite_) return false;
    if (!a.finite_) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return !(b < a); }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return !(a < b); }

  std::string str() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  struct Tag {};
  constexpr explicit ExtInt(Tag) : finite_(false) {}

  std::int64_t value_ = 0;
  bool finite_ = true;
};

enum class Direction { Raise, Lower };

std::string to_string(Direction d);

// b_i(k) of the elementary crystal B_i.
struct ElementaryElement {
  int color = 1;
  std::int64_t level = 0;

  friend bool operator==(const ElementaryElement&, const ElementaryElement&) = default;
};

// wt(b_i(k)) = k alpha_i.
WeightVector elementary_wt(LieType t, ElementaryElement e);
ExtInt elementary_eps(ElementaryElement e, int color);
ExtInt elementary_phi(ElementaryElement e, int color);
// nullopt is the crystal's 0.
std::optional<ElementaryElement> elementary_apply(ElementaryElement e, int color, Direction dir);

// One tensor factor as seen by a single color: its epsilon and <h_i, wt>.
struct ComponentView {
  ExtInt eps = ExtInt::neg_inf();
  std::int64_t pairing = 0;
};

// Position (0-based) the Kashiwara operator acts on in
// components[0] (x) components[1] (x) ... , using
//   a_k = eps_k - sum_{v<k} pairing_v.
// Raise takes the earliest position attaining max a_k, lower the latest.
// nullopt only if every a_k is -inf.
std::optional<std::size_t> tensor_select(std::span<const ComponentView> components, Direction dir);

ExtInt tensor_eps(std::span<const ComponentView> components);
// phi = eps + total <h_i, wt>.
ExtInt tensor_phi(std::span<const ComponentView> components, std::int64_t total_pairing);

}  // namespace binf
