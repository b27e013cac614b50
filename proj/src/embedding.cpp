#include "binf/embedding.hpp"

#include <numeric>
#include <stdexcept>

#include "binf/coordinates.hpp"

namespace binf {

TensorOrder TensorOrder::canonical(LieType t) {
  TensorOrder o;
  o.type_ = t;
  o.positions_.resize(CrystalModel::get(t).reduced_size());
  std::iota(o.positions_.begin(), o.positions_.end(), 0);
  return o;
}

TensorOrder TensorOrder::from_paths(LieType t, const std::vector<std::vector<int>>& paths) {
  const CrystalModel& m = CrystalModel::get(t);
  if (static_cast<int>(paths.size()) != m.row_count()) throw std::invalid_argument("one path per row required");
  TensorOrder o;
  o.type_ = t;
  std::vector<bool> used(m.reduced_size(), false);
  for (int r = m.row_count(); r >= 1; --r) {
    const RowGraph& rg = m.row(r);
    const auto& path = paths[r - 1];
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const int pos = m.reduced_position(r, rg.arrow_groups()[rg.group_of_arrow(*it)].head);
      if (used[pos]) throw std::invalid_argument("path crosses an arrow group twice");
      used[pos] = true;
      o.positions_.push_back(pos);
    }
  }
  if (static_cast<int>(o.positions_.size()) != m.reduced_size())
    throw std::invalid_argument("paths do not cross every arrow group");
  return o;
}

TensorOrder TensorOrder::random(LieType t, std::mt19937_64& rng) {
  const CrystalModel& m = CrystalModel::get(t);
  std::vector<std::vector<int>> paths;
  for (int r = 1; r <= m.row_count(); ++r) paths.push_back(m.row(r).random_path(rng));
  return from_paths(t, paths);
}

EmbeddedElement theta(const MLTableau& t) { return EmbeddedElement{reduced_counts(t)}; }

bool in_image(LieType t, std::span<const int> values) {
  const CrystalModel& m = CrystalModel::get(t);
  if (static_cast<int>(values.size()) != m.reduced_size()) return false;
  return !find_violation(ReducedCounts{t, std::vector<int>(values.begin(), values.end())});
}

std::vector<ComponentView> embedded_views(const EmbeddedElement& x, int color, const TensorOrder& order) {
  const CrystalModel& m = CrystalModel::get(x.coords.type);
  const CartanMatrix& a = m.cartan();
  std::vector<ComponentView> views;
  views.reserve(order.positions().size() + 1);
  views.push_back(ComponentView{ExtInt(0), 0});
  for (int pos : order.positions()) {
    const int j = m.reduced_index()[pos].color;
    const ElementaryElement e{j, -static_cast<std::int64_t>(x.coords.values[pos])};
    // <h_color, k alpha_j> = k a(color, j)
    views.push_back(ComponentView{elementary_eps(e, color), e.level * a(color, j)});
  }
  return views;
}

EmbeddedSelection select_embedded(const EmbeddedElement& x, int color, Direction dir, const TensorOrder& order,
                                  const Selector& selector) {
  const auto views = embedded_views(x, color, order);
  const auto pick = selector(views, dir);
  // b_inf has a finite a-value, so some position is always selected.
  if (!pick) throw std::logic_error("tensor rule selected nothing");
  if (*pick == 0) return EmbeddedSelection::at_infinity();
  return EmbeddedSelection::at(order.positions()[*pick - 1]);
}

std::optional<EmbeddedElement> apply_embedded(const EmbeddedElement& x, int color, Direction dir,
                                              const TensorOrder& order, const Selector& selector) {
  if (color < 1 || color > x.coords.type.rank()) throw std::out_of_range("color out of range");
  const EmbeddedSelection sel = select_embedded(x, color, dir, order, selector);
  if (sel.infinity) {
    if (dir == Direction::Lower) throw std::logic_error("lowering selected the b_inf factor");
    return std::nullopt;
  }
  EmbeddedElement out = x;
  out.coords.values[sel.index] += dir == Direction::Lower ? 1 : -1;
  if (!in_image(out.coords.type, out.coords.values)) throw std::logic_error("operator result left the image");
  return out;
}

std::optional<EmbeddedElement> apply_embedded(const EmbeddedElement& x, int color, Direction dir) {
  return apply_embedded(x, color, dir, TensorOrder::canonical(x.coords.type));
}

EmbeddedSelection color1_oracle_e6(const EmbeddedElement& x, Direction dir) {
  const LieType t = x.coords.type;
  if (t != LieType::e6()) throw std::invalid_argument("color-1 oracle is defined for E6 only");
  const CrystalModel& m = CrystalModel::get(t);
  const int top = m.row_count();
  auto pos = [&](const char* label) { return m.reduced_position(top, m.basic().find_label(label)); };
  const int p15 = pos("-1+5"), p12 = pos("-1+2");
  auto v = [&](int p) { return x.coords.values[p]; };
  const int t15 = v(p15), t26 = v(pos("-2+6")), t215 = v(pos("-2+1+5")), t12 = v(p12), t23 = v(pos("-2+3"));
  const int lhs = t215 - t15;
  const int rhs = t12 - t23;
  if (dir == Direction::Raise) {
    if (lhs >= rhs) return t15 == t26 ? EmbeddedSelection::at_infinity() : EmbeddedSelection::at(p15);
    return EmbeddedSelection::at(p12);
  }
  return lhs > rhs ? EmbeddedSelection::at(p15) : EmbeddedSelection::at(p12);
}

int eps_embedded(const EmbeddedElement& x, int color) {
  const auto views = embedded_views(x, color, TensorOrder::canonical(x.coords.type));
  return static_cast<int>(tensor_eps(views).value());
}

int phi_embedded(const EmbeddedElement& x, int color) {
  return eps_embedded(x, color) + weight(x.coords)[color];
}

}  // namespace binf
