#include "binf/coordinates.hpp"

#include <algorithm>

namespace binf {

std::string OrderViolation::describe(LieType t) const {
  const BasicCrystalGraph& g = CrystalModel::get(t).basic();
  const std::string lo = std::to_string(row) + ":" + g.label(lower);
  if (lower == upper) return "coordinate " + lo + " is negative (" + std::to_string(lower_value) + ")";
  const std::string hi = std::to_string(row) + ":" + g.label(upper);
  return "monotonicity violated: " + lo + " <= " + hi + " but s[" + lo + "] = " + std::to_string(lower_value) +
         " > s[" + hi + "] = " + std::to_string(upper_value);
}

bool is_path_consistent_full(const FullCounts& fc) {
  const CrystalModel& m = CrystalModel::get(fc.type);
  if (static_cast<int>(fc.values.size()) != m.full_size()) return false;
  for (int r = 1; r <= m.row_count(); ++r) {
    const RowGraph& rg = m.row(r);
    const auto circ = rg.circ();
    auto s = [&](NodeId c) { return fc.values[m.full_position(r, c)]; };
    for (NodeId c : circ) {
      if (s(c) < 0) return false;
      for (NodeId d : circ)
        if (c != d && rg.comes_from(c, d) && s(c) > s(d)) return false;
      const auto ps = rg.parents(c);
      for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a + 1; b < ps.size(); ++b)
          if (s(c) != std::min(s(ps[a]), s(ps[b]))) return false;
    }
  }
  return true;
}

std::vector<OrderViolation> find_violations(const ReducedCounts& rc) {
  const CrystalModel& m = CrystalModel::get(rc.type);
  if (static_cast<int>(rc.values.size()) != m.reduced_size())
    throw std::invalid_argument("reduced coordinate vector has the wrong length");
  std::vector<OrderViolation> out;
  for (int k = 0; k < m.reduced_size(); ++k) {
    const Coordinate& c = m.reduced_index()[k];
    if (rc.values[k] < 0) out.push_back(OrderViolation{c.row, c.node, c.node, rc.values[k], rc.values[k]});
  }
  for (int k = 0; k < m.reduced_size(); ++k) {
    const Coordinate& lo = m.reduced_index()[k];
    for (int j = 0; j < m.reduced_size(); ++j) {
      const Coordinate& hi = m.reduced_index()[j];
      if (j == k || hi.row != lo.row) continue;
      if (m.row(lo.row).comes_from(lo.node, hi.node) && rc.values[k] > rc.values[j])
        out.push_back(OrderViolation{lo.row, lo.node, hi.node, rc.values[k], rc.values[j]});
    }
  }
  return out;
}

std::optional<OrderViolation> find_violation(const ReducedCounts& rc) {
  auto all = find_violations(rc);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool is_path_consistent_reduced(const ReducedCounts& rc) { return !find_violation(rc); }

FullCounts extend_reduced(const ReducedCounts& rc) {
  if (const auto all = find_violations(rc); !all.empty()) {
    std::string what = "coordinates are not path-consistent: " + all.front().describe(rc.type);
    for (std::size_t k = 1; k < all.size(); ++k) what += "\n  " + all[k].describe(rc.type);
    throw PathConsistencyError(what, all.front());
  }
  const CrystalModel& m = CrystalModel::get(rc.type);
  FullCounts fc{rc.type, std::vector<int>(m.full_size(), -1)};
  for (int r = 1; r <= m.row_count(); ++r) {
    const RowGraph& rg = m.row(r);
    // circ() is ordered by distance from the source, so parents come first.
    for (NodeId c : rg.circ()) {
      const int pos = m.full_position(r, c);
      if (rg.in_bar(c)) {
        fc.values[pos] = rc.values[m.reduced_position(r, c)];
        continue;
      }
      const auto ps = rg.parents(c);
      int lo = fc.values[m.full_position(r, ps[0])];
      for (NodeId p : ps) lo = std::min(lo, fc.values[m.full_position(r, p)]);
      for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a + 1; b < ps.size(); ++b)
          if (std::min(fc.values[m.full_position(r, ps[a])], fc.values[m.full_position(r, ps[b])]) != lo)
            throw std::logic_error("pairwise parent minima disagree at " + m.basic().label(c));
      fc.values[pos] = lo;
    }
  }
  return fc;
}

MLTableau reconstruct(const FullCounts& fc) {
  const CrystalModel& m = CrystalModel::get(fc.type);
  if (static_cast<int>(fc.values.size()) != m.full_size())
    throw std::invalid_argument("full coordinate vector has the wrong length");
  MLTableau out{fc.type, {}};
  for (int r = 1; r <= m.row_count(); ++r) {
    const RowGraph& rg = m.row(r);
    auto circ = rg.circ();
    std::stable_sort(circ.begin(), circ.end(),
                     [&](NodeId a, NodeId b) { return rg.distance_to_sink(a) < rg.distance_to_sink(b); });
    std::vector<std::pair<NodeId, int>> counts;
    for (NodeId c : circ) {
      int n = fc.values[m.full_position(r, c)];
      for (const auto& [x, nx] : counts)
        if (rg.comes_from(x, c)) n -= nx;
      if (n < 0) {
        throw PathConsistencyError("negative box count for " + std::to_string(r) + ":" + m.basic().label(c),
                                   std::nullopt);
      }
      counts.emplace_back(c, n);
    }
    std::vector<Run> runs;
    for (const auto& [x, n] : counts)
      if (n > 0) runs.push_back(Run{x, n});
    std::stable_sort(runs.begin(), runs.end(), [&](const Run& a, const Run& b) {
      return rg.distance_from_source(a.elem) < rg.distance_from_source(b.elem);
    });
    for (std::size_t k = 1; k < runs.size(); ++k)
      if (!rg.comes_from(runs[k].elem, runs[k - 1].elem))
        throw PathConsistencyError("row " + std::to_string(r) + " entries " + m.basic().label(runs[k - 1].elem) +
                                       " and " + m.basic().label(runs[k].elem) + " do not lie on one path",
                                   std::nullopt);
    runs.insert(runs.begin(), Run{rg.source(), out.row_length(r - 1) + 1});
    out.rows.push_back(std::move(runs));
  }
  return out;
}

MLTableau tableau_from_reduced(const ReducedCounts& rc) { return reconstruct(extend_reduced(rc)); }

ReducedCounts reduced_from_tableau(const MLTableau& t) { return reduced_counts(t); }

}  // namespace binf
