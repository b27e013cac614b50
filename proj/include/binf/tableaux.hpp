#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "binf/crystal_core.hpp"
#include "binf/model.hpp"

namespace binf {

struct Run {
  NodeId elem = -1;
  int count = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

// Marginally large tableau. rows[0] is row 1 (the bottom, shortest row);
// each row is a run list from the source side to the sink side.
struct MLTableau {
  LieType type;
  std::vector<std::vector<Run>> rows;

  const std::vector<Run>& row(int r) const { return rows.at(r - 1); }
  int row_length(int r) const;
  int box_count() const;

  friend bool operator==(const MLTableau&, const MLTableau&) = default;
};

// Accumulated box counts t_{r,c} for every c in C-circle_r, indexed by
// CrystalModel::full_index().
struct FullCounts {
  LieType type;
  std::vector<int> values;

  friend bool operator==(const FullCounts&, const FullCounts&) = default;
};

// Counts restricted to C-bar_r, indexed by CrystalModel::reduced_index()
// (canonical tensor order).
struct ReducedCounts {
  LieType type;
  std::vector<int> values;

  static ReducedCounts zeros(LieType t);
  int total() const;

  friend bool operator==(const ReducedCounts&, const ReducedCounts&) = default;
  friend auto operator<=>(const ReducedCounts& a, const ReducedCounts& b) { return a.values <=> b.values; }
};

struct ReducedCountsHash {
  std::size_t operator()(const ReducedCounts& rc) const noexcept;
};

// mu with wt = -mu, mu = sum_c t_c alpha_{color(c)}.
RootVector depth_vector(const ReducedCounts& rc);
WeightVector weight(const ReducedCounts& rc);

MLTableau highest_tableau(LieType t);

bool is_large(const MLTableau& t);
bool is_marginally_large(const MLTableau& t);

struct BoxRef {
  int row = 0;
  NodeId elem = -1;

  friend bool operator==(const BoxRef&, const BoxRef&) = default;
};

// Middle-eastern reading: top row first, each row right to left.
std::vector<BoxRef> reading_word(const MLTableau& t);

// Kashiwara operator on T(infinity). nullopt when a raise annihilates.
// Throws std::invalid_argument if the input is not marginally large and
// std::logic_error if the result would leave T(infinity).
std::optional<MLTableau> apply(const MLTableau& t, int color, Direction dir);

// t_{r,c} = number of row-r boxes x with x <= c.
FullCounts accumulated_counts(const MLTableau& t);
ReducedCounts reduced_counts(const MLTableau& t);

// Restores the source-node count of every row, bottom to top, to
// (length of the row below) + 1, merging or inserting the source run.
void renormalize(MLTableau& t);

}  // namespace binf
