#pragma once

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "binf/crystal_core.hpp"
#include "binf/tableaux.hpp"

namespace binf {

// b_inf (x) (x)_{c} b(-t_c): the coordinates, read in a tensor order.
struct EmbeddedElement {
  ReducedCounts coords;

  friend bool operator==(const EmbeddedElement&, const EmbeddedElement&) = default;
};

// Order of the reduced coordinates as tensor factors after b_inf. The
// canonical order is the identity on CrystalModel::reduced_index().
class TensorOrder {
 public:
  static TensorOrder canonical(LieType t);
  // One source-to-sink arrow path per row (index r-1); each arrow contributes
  // the coordinate of its group's head, sink side first within a row.
  static TensorOrder from_paths(LieType t, const std::vector<std::vector<int>>& paths);
  static TensorOrder random(LieType t, std::mt19937_64& rng);

  LieType type() const { return type_; }
  const std::vector<int>& positions() const { return positions_; }

 private:
  LieType type_;
  std::vector<int> positions_;
};

// Which factor an operator acts on: b_inf, or the reduced coordinate `index`.
struct EmbeddedSelection {
  bool infinity = false;
  int index = -1;

  static EmbeddedSelection at_infinity() { return {true, -1}; }
  static EmbeddedSelection at(int i) { return {false, i}; }
  friend bool operator==(const EmbeddedSelection&, const EmbeddedSelection&) = default;
};

using Selector = std::function<std::optional<std::size_t>(std::span<const ComponentView>, Direction)>;

EmbeddedElement theta(const MLTableau& t);

// Nonnegative and monotone along <= within each C-bar_r.
bool in_image(LieType t, std::span<const int> values);

// Component views for one color: b_inf as (eps 0, pairing 0), then each
// coordinate b_i(-t_c) in the given order.
std::vector<ComponentView> embedded_views(const EmbeddedElement& x, int color, const TensorOrder& order);

EmbeddedSelection select_embedded(const EmbeddedElement& x, int color, Direction dir, const TensorOrder& order,
                                  const Selector& selector = tensor_select);

// nullopt when raise selects b_inf. Throws std::logic_error if lower selects
// b_inf or a result leaves the image.
std::optional<EmbeddedElement> apply_embedded(const EmbeddedElement& x, int color, Direction dir,
                                              const TensorOrder& order, const Selector& selector = tensor_select);
std::optional<EmbeddedElement> apply_embedded(const EmbeddedElement& x, int color, Direction dir);

// Closed-form e_1/f_1 case table for E6, reading the top-row coordinates.
EmbeddedSelection color1_oracle_e6(const EmbeddedElement& x, Direction dir);

int eps_embedded(const EmbeddedElement& x, int color);
int phi_embedded(const EmbeddedElement& x, int color);

}  // namespace binf
