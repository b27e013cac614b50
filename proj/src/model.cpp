#include "binf/model.hpp"

#include <stdexcept>

namespace binf {

CrystalModel::CrystalModel(LieType t)
    : type_(t), cartan_(t), basic_(std::make_shared<const BasicCrystalGraph>(generate_basic(t))) {
  const BasicCrystalGraph& g = *basic_;
  NodeId lowest = -1;
  for (NodeId c = 0; c < g.size(); ++c)
    if (g.out_degree(c) == 0) lowest = c;

  for (int r = 1; r <= row_count(); ++r) {
    const RowInterval iv = row_interval(t, r);
    const NodeId src = g.find_label(iv.source);
    const NodeId snk = iv.sink.empty() ? lowest : g.find_label(iv.sink);
    rows_.emplace_back(basic_, r, src, snk);
  }

  reduced_pos_.assign(row_count() + 1, std::vector<int>(g.size(), -1));
  full_pos_.assign(row_count() + 1, std::vector<int>(g.size(), -1));
  for (int r = row_count(); r >= 1; --r) {
    const RowGraph& rg = row(r);
    const auto& path = rg.canonical_path();
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const NodeId head = rg.arrow_groups()[rg.group_of_arrow(*it)].head;
      reduced_pos_[r][head] = static_cast<int>(reduced_.size());
      reduced_.push_back(Coordinate{r, head, rg.component_color(head)});
    }
    for (NodeId c : rg.circ()) {
      full_pos_[r][c] = static_cast<int>(full_.size());
      full_.push_back(Coordinate{r, c, rg.in_bar(c) ? rg.component_color(c) : 0});
    }
  }
}

const CrystalModel& CrystalModel::get(LieType t) {
  static const CrystalModel e6(LieType::e6());
  static const CrystalModel e7(LieType::e7());
  return t.kind() == LieKind::E6 ? e6 : e7;
}

const RowGraph& CrystalModel::row(int r) const {
  if (r < 1 || r > row_count())
    throw std::out_of_range("row index " + std::to_string(r) + " out of range for " + type_.name());
  return rows_[r - 1];
}

int CrystalModel::reduced_position(int r, NodeId c) const {
  if (r < 1 || r > row_count() || c < 0 || c >= basic_->size()) return -1;
  return reduced_pos_[r][c];
}

int CrystalModel::full_position(int r, NodeId c) const {
  if (r < 1 || r > row_count() || c < 0 || c >= basic_->size()) return -1;
  return full_pos_[r][c];
}

std::string CrystalModel::coordinate_key(const Coordinate& c) const {
  return std::to_string(c.row) + ":" + basic_->label(c.node);
}

}  // namespace binf
