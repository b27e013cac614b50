#include "binf/crystal_core.hpp"

namespace binf {

std::string to_string(Direction d) { return d == Direction::Raise ? "raise" : "lower"; }

WeightVector elementary_wt(LieType t, ElementaryElement e) {
  return static_cast<int>(e.level) * simple_root_as_weight(t, e.color);
}

ExtInt elementary_eps(ElementaryElement e, int color) {
  return e.color == color ? ExtInt(-e.level) : ExtInt::neg_inf();
}

ExtInt elementary_phi(ElementaryElement e, int color) {
  return e.color == color ? ExtInt(e.level) : ExtInt::neg_inf();
}

std::optional<ElementaryElement> elementary_apply(ElementaryElement e, int color, Direction dir) {
  if (e.color != color) return std::nullopt;
  e.level += dir == Direction::Raise ? 1 : -1;
  return e;
}

std::optional<std::size_t> tensor_select(std::span<const ComponentView> components, Direction dir) {
  std::int64_t prefix = 0;
  ExtInt best = ExtInt::neg_inf();
  std::optional<std::size_t> where;
  for (std::size_t k = 0; k < components.size(); ++k) {
    const ExtInt a = components[k].eps - prefix;
    prefix += components[k].pairing;
    if (a.is_neg_inf()) continue;
    if (!where || a > best || (dir == Direction::Lower && a == best)) {
      best = a;
      where = k;
    }
  }
  return where;
}

ExtInt tensor_eps(std::span<const ComponentView> components) {
  std::int64_t prefix = 0;
  ExtInt best = ExtInt::neg_inf();
  for (const ComponentView& c : components) {
    const ExtInt a = c.eps - prefix;
    prefix += c.pairing;
    if (a > best) best = a;
  }
  return best;
}

ExtInt tensor_phi(std::span<const ComponentView> components, std::int64_t total_pairing) {
  return tensor_eps(components) + total_pairing;
}

}  // namespace binf
