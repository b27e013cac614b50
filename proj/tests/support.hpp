#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "binf/model.hpp"
#include "binf/tableaux.hpp"

namespace binf::testing {

inline NodeId N(LieType t, const char* label) { return CrystalModel::get(t).basic().find_label(label); }

// Reduced vector with the given (row, label) entries set, zeros elsewhere.
inline ReducedCounts reduced(LieType t, std::initializer_list<std::pair<std::pair<int, const char*>, int>> entries) {
  const CrystalModel& m = CrystalModel::get(t);
  ReducedCounts rc = ReducedCounts::zeros(t);
  for (const auto& [key, value] : entries) {
    const int pos = m.reduced_position(key.first, N(t, key.second));
    if (pos < 0) throw std::invalid_argument(std::string("not a reduced coordinate: ") + key.second);
    rc.values[pos] = value;
  }
  return rc;
}

inline int full_at(const FullCounts& fc, int row, const char* label) {
  return fc.values[CrystalModel::get(fc.type).full_position(row, N(fc.type, label))];
}

inline int reduced_at(const ReducedCounts& rc, int row, const char* label) {
  return rc.values[CrystalModel::get(rc.type).reduced_position(row, N(rc.type, label))];
}

}  // namespace binf::testing
