#pragma once

#include <memory>
#include <string>
#include <vector>

#include "binf/basic_crystal.hpp"
#include "binf/root_system.hpp"

namespace binf {

// A tensor-factor slot: row r and node c of C-circle_r (full) or C-bar_r (reduced).
struct Coordinate {
  int row = 0;
  NodeId node = -1;
  int color = 0;  // component color; 0 for full-only coordinates

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

// Everything derived once per Lie type: Cartan data, basic crystal, row
// graphs, and the coordinate indexings. Immutable after construction.
//
// Reduced coordinates are numbered in canonical tensor order: top row
// first, and within a row the canonical path read from the sink back to
// the source (the component next to the source comes last).
class CrystalModel {
 public:
  explicit CrystalModel(LieType t);

  // Shared, lazily built instance.
  static const CrystalModel& get(LieType t);

  LieType type() const { return type_; }
  const CartanMatrix& cartan() const { return cartan_; }
  const BasicCrystalGraph& basic() const { return *basic_; }
  std::shared_ptr<const BasicCrystalGraph> basic_ptr() const { return basic_; }

  int row_count() const { return type_.row_count(); }
  // Throws std::out_of_range for r outside 1..row_count().
  const RowGraph& row(int r) const;

  const std::vector<Coordinate>& reduced_index() const { return reduced_; }
  int reduced_size() const { return static_cast<int>(reduced_.size()); }
  // -1 when (r, c) is not a reduced coordinate.
  int reduced_position(int r, NodeId c) const;

  const std::vector<Coordinate>& full_index() const { return full_; }
  int full_size() const { return static_cast<int>(full_.size()); }
  int full_position(int r, NodeId c) const;

  // "row:label", e.g. "5:-1+2".
  std::string coordinate_key(const Coordinate& c) const;

 private:
  LieType type_;
  CartanMatrix cartan_;
  std::shared_ptr<const BasicCrystalGraph> basic_;
  std::vector<RowGraph> rows_;
  std::vector<Coordinate> reduced_, full_;
  std::vector<std::vector<int>> reduced_pos_, full_pos_;
};

}  // namespace binf
