#include "binf/tableaux.hpp"

#include <stdexcept>

namespace binf {

int MLTableau::row_length(int r) const {
  if (r < 1) return 0;
  int n = 0;
  for (const Run& run : row(r)) n += run.count;
  return n;
}

int MLTableau::box_count() const {
  int n = 0;
  for (int r = 1; r <= static_cast<int>(rows.size()); ++r) n += row_length(r);
  return n;
}

ReducedCounts ReducedCounts::zeros(LieType t) {
  return ReducedCounts{t, std::vector<int>(CrystalModel::get(t).reduced_size(), 0)};
}

int ReducedCounts::total() const {
  int s = 0;
  for (int v : values) s += v;
  return s;
}

std::size_t ReducedCountsHash::operator()(const ReducedCounts& rc) const noexcept {
  std::size_t h = rc.type.kind() == LieKind::E6 ? 0x9e3779b97f4a7c15ULL : 0x7f4a7c159e3779b9ULL;
  for (int v : rc.values) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}

RootVector depth_vector(const ReducedCounts& rc) {
  const CrystalModel& m = CrystalModel::get(rc.type);
  RootVector mu(rc.type.rank());
  for (int k = 0; k < m.reduced_size(); ++k) mu[m.reduced_index()[k].color] += rc.values[k];
  return mu;
}

WeightVector weight(const ReducedCounts& rc) { return -1 * to_weight(rc.type, depth_vector(rc)); }

MLTableau highest_tableau(LieType t) {
  const CrystalModel& m = CrystalModel::get(t);
  MLTableau out{t, {}};
  for (int r = 1; r <= m.row_count(); ++r) out.rows.push_back({Run{m.row(r).source(), r}});
  return out;
}

namespace {

bool check_rows(const MLTableau& t, bool marginal) {
  const CrystalModel& m = CrystalModel::get(t.type);
  if (static_cast<int>(t.rows.size()) != m.row_count()) return false;
  for (int r = 1; r <= m.row_count(); ++r) {
    const RowGraph& rg = m.row(r);
    const auto& runs = t.row(r);
    if (runs.empty() || runs.front().elem != rg.source()) return false;  // L4: leftmost is the source
    for (std::size_t k = 0; k < runs.size(); ++k) {
      if (runs[k].count < 1 || !rg.contains(runs[k].elem)) return false;  // L1
      // L3/L4: strictly descending along <= (a chain, left to right).
      if (k > 0 && (runs[k].elem == runs[k - 1].elem || !rg.comes_from(runs[k].elem, runs[k - 1].elem))) return false;
    }
    const int below = t.row_length(r - 1);
    const int src = runs.front().count;
    if (marginal ? src != below + 1 : src <= below) return false;  // L2 / L2'
  }
  return true;
}

}  // namespace

bool is_large(const MLTableau& t) { return check_rows(t, false); }
bool is_marginally_large(const MLTableau& t) { return check_rows(t, true); }

std::vector<BoxRef> reading_word(const MLTableau& t) {
  std::vector<BoxRef> word;
  for (int r = static_cast<int>(t.rows.size()); r >= 1; --r) {
    const auto& runs = t.row(r);
    for (auto it = runs.rbegin(); it != runs.rend(); ++it)
      for (int k = 0; k < it->count; ++k) word.push_back(BoxRef{r, it->elem});
  }
  return word;
}

void renormalize(MLTableau& t) {
  const CrystalModel& m = CrystalModel::get(t.type);
  for (int r = 1; r <= m.row_count(); ++r) {
    auto& runs = t.rows[r - 1];
    const NodeId src = m.row(r).source();
    const int want = t.row_length(r - 1) + 1;
    if (runs.empty() || runs.front().elem != src)
      runs.insert(runs.begin(), Run{src, want});
    else
      runs.front().count = want;
  }
}

std::optional<MLTableau> apply(const MLTableau& t, int color, Direction dir) {
  if (!is_marginally_large(t)) throw std::invalid_argument("tableau is not marginally large");
  const CrystalModel& m = CrystalModel::get(t.type);
  const BasicCrystalGraph& g = m.basic();
  if (color < 1 || color > t.type.rank()) throw std::out_of_range("color out of range");

  const std::vector<BoxRef> word = reading_word(t);
  std::vector<ComponentView> views;
  views.reserve(word.size());
  for (const BoxRef& b : word) views.push_back(ComponentView{g.eps(b.elem, color), g.pairing(b.elem, color)});

  const auto pick = tensor_select(views, dir);
  if (!pick) return std::nullopt;
  const BoxRef box = word[*pick];
  const auto target = dir == Direction::Raise ? g.in(box.elem, color) : g.out(box.elem, color);
  if (!target) {
    if (dir == Direction::Raise) return std::nullopt;
    throw std::logic_error("lowering selected a box with phi = 0");
  }
  if (!m.row(box.row).contains(*target))
    throw std::logic_error("operator moved a row-" + std::to_string(box.row) + " box outside its row graph");

  // Position of the selected box inside its row, counted from the right.
  std::size_t from_right = 0;
  for (std::size_t k = 0; k < *pick; ++k)
    if (word[k].row == box.row) ++from_right;

  MLTableau out = t;
  std::vector<NodeId> boxes;
  for (const Run& run : t.row(box.row))
    for (int k = 0; k < run.count; ++k) boxes.push_back(run.elem);
  boxes[boxes.size() - 1 - from_right] = *target;
  auto& runs = out.rows[box.row - 1];
  runs.clear();
  for (NodeId x : boxes) {
    if (!runs.empty() && runs.back().elem == x)
      ++runs.back().count;
    else
      runs.push_back(Run{x, 1});
  }
  renormalize(out);
  if (!is_marginally_large(out)) throw std::logic_error("operator result is not marginally large");
  return out;
}

FullCounts accumulated_counts(const MLTableau& t) {
  const CrystalModel& m = CrystalModel::get(t.type);
  FullCounts fc{t.type, std::vector<int>(m.full_size(), 0)};
  for (int k = 0; k < m.full_size(); ++k) {
    const Coordinate& c = m.full_index()[k];
    const RowGraph& rg = m.row(c.row);
    for (const Run& run : t.row(c.row))
      if (rg.comes_from(run.elem, c.node)) fc.values[k] += run.count;
  }
  return fc;
}

ReducedCounts reduced_counts(const MLTableau& t) {
  const CrystalModel& m = CrystalModel::get(t.type);
  const FullCounts fc = accumulated_counts(t);
  ReducedCounts rc{t.type, std::vector<int>(m.reduced_size(), 0)};
  for (int k = 0; k < m.reduced_size(); ++k) {
    const Coordinate& c = m.reduced_index()[k];
    rc.values[k] = fc.values[m.full_position(c.row, c.node)];
  }
  return rc;
}

}  // namespace binf
