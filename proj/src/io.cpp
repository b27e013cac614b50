#include "binf/io.hpp"

#include <sstream>

namespace binf {

LieType type_from_json(const nlohmann::json& j, std::optional<LieType> expected) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw FormatError("missing string field \"type\"");
  LieType t;
  try {
    t = LieType::parse(j["type"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  if (expected && *expected != t)
    throw FormatError("file type " + t.name() + " does not match --type " + expected->name());
  return t;
}

ojson tableau_to_json(const MLTableau& t) {
  const BasicCrystalGraph& g = CrystalModel::get(t.type).basic();
  ojson rows = ojson::array();
  for (const auto& runs : t.rows) {
    ojson row = ojson::array();
    for (const Run& run : runs) row.push_back(ojson{{"elem", g.label(run.elem)}, {"count", run.count}});
    rows.push_back(std::move(row));
  }
  return ojson{{"type", t.type.name()}, {"rows", std::move(rows)}};
}

MLTableau tableau_from_json(const nlohmann::json& j, std::optional<LieType> expected) {
  const LieType t = type_from_json(j, expected);
  const CrystalModel& m = CrystalModel::get(t);
  if (!j.contains("rows") || !j["rows"].is_array()) throw FormatError("missing array field \"rows\"");
  const auto& rows = j["rows"];
  if (static_cast<int>(rows.size()) != m.row_count())
    throw FormatError("expected " + std::to_string(m.row_count()) + " rows, got " + std::to_string(rows.size()));
  MLTableau out{t, {}};
  for (int r = 1; r <= m.row_count(); ++r) {
    const auto& row = rows[r - 1];
    if (!row.is_array()) throw FormatError("row " + std::to_string(r) + " is not an array");
    std::vector<Run> runs;
    for (const auto& entry : row) {
      if (!entry.is_object() || !entry.contains("elem") || !entry["elem"].is_string() || !entry.contains("count") ||
          !entry["count"].is_number_integer() || entry.size() != 2)
        throw FormatError("row " + std::to_string(r) + ": entries must be {\"elem\": label, \"count\": integer}");
      const int count = entry["count"].get<int>();
      if (count < 1) throw FormatError("row " + std::to_string(r) + ": counts must be positive");
      NodeId id;
      try {
        id = m.basic().find_label(entry["elem"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
      }
      if (!m.row(r).contains(id))
        throw FormatError(m.basic().label(id) + " may not appear on row " + std::to_string(r));
      runs.push_back(Run{id, count});
    }
    out.rows.push_back(std::move(runs));
  }
  return out;
}

ojson coords_to_json(const ReducedCounts& rc) {
  const CrystalModel& m = CrystalModel::get(rc.type);
  ojson coords = ojson::object();
  for (int k = 0; k < m.reduced_size(); ++k) coords[m.coordinate_key(m.reduced_index()[k])] = rc.values[k];
  return ojson{{"type", rc.type.name()}, {"coords", std::move(coords)}};
}

ReducedCounts coords_from_json(const nlohmann::json& j, std::optional<LieType> expected) {
  const LieType t = type_from_json(j, expected);
  const CrystalModel& m = CrystalModel::get(t);
  if (!j.contains("coords") || !j["coords"].is_object()) throw FormatError("missing object field \"coords\"");
  ReducedCounts rc = ReducedCounts::zeros(t);
  for (const auto& [key, value] : j["coords"].items()) {
    const auto colon = key.find(':');
    if (colon == std::string::npos) throw FormatError("coordinate key '" + key + "' is not of the form row:label");
    int row = 0;
    try {
      std::size_t used = 0;
      row = std::stoi(key.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw FormatError("coordinate key '" + key + "' has a malformed row");
    }
    int pos = -1;
    try {
      pos = m.reduced_position(row, m.basic().find_label(key.substr(colon + 1)));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    if (pos < 0) throw FormatError("'" + key + "' is not a reduced coordinate of " + t.name());
    if (!value.is_number_integer()) throw FormatError("coordinate '" + key + "' must be an integer");
    rc.values[pos] = value.get<int>();
  }
  return rc;
}

ojson graph_to_json(LieType t, std::optional<int> row) {
  const CrystalModel& m = CrystalModel::get(t);
  const BasicCrystalGraph& g = m.basic();
  ojson nodes = ojson::array();
  ojson arrows = ojson::array();
  const RowGraph* rg = row ? &m.row(*row) : nullptr;
  if (rg) {
    for (NodeId c : rg->nodes()) {
      nodes.push_back(ojson{{"label", g.label(c)},
                            {"flagged", rg->in_bar(c)},
                            {"source", c == rg->source()},
                            {"sink", c == rg->sink()},
                            {"distance_from_source", rg->distance_from_source(c)},
                            {"distance_to_sink", rg->distance_to_sink(c)}});
    }
    for (std::size_t k = 0; k < rg->arrows().size(); ++k) {
      const Arrow& a = rg->arrows()[k];
      const auto& grp = rg->arrow_groups()[rg->group_of_arrow(static_cast<int>(k))];
      arrows.push_back(ojson{{"from", g.label(a.from)},
                             {"color", a.color},
                             {"to", g.label(a.to)},
                             {"group_head", g.label(grp.head)}});
    }
  } else {
    for (NodeId c = 0; c < g.size(); ++c)
      nodes.push_back(ojson{{"label", g.label(c)}, {"flagged", g.in_degree(c) == 1}});
    for (const Arrow& a : g.arrows())
      arrows.push_back(ojson{{"from", g.label(a.from)}, {"color", a.color}, {"to", g.label(a.to)}});
  }
  ojson out{{"type", t.name()}};
  out["row"] = row ? ojson(*row) : ojson("basic");
  out["nodes"] = std::move(nodes);
  out["arrows"] = std::move(arrows);
  return out;
}

std::string graph_to_dot(LieType t, std::optional<int> row) {
  const CrystalModel& m = CrystalModel::get(t);
  const BasicCrystalGraph& g = m.basic();
  const RowGraph* rg = row ? &m.row(*row) : nullptr;
  std::ostringstream os;
  os << "digraph \"" << t.name() << (row ? "_row" + std::to_string(*row) : std::string("_basic")) << "\" {\n";
  os << "  rankdir=TB;\n  node [shape=box];\n";
  auto emit_node = [&](NodeId c, bool flagged) {
    os << "  \"" << g.label(c) << "\" [label=\"" << pretty_label(g.element(c).weight) << "\""
       << (flagged ? ", shape=doublecircle" : "") << "];\n";
  };
  auto emit_arrow = [&](const Arrow& a) {
    os << "  \"" << g.label(a.from) << "\" -> \"" << g.label(a.to) << "\" [label=\"" << a.color << "\"];\n";
  };
  if (rg) {
    for (NodeId c : rg->nodes()) emit_node(c, rg->in_bar(c));
    for (const Arrow& a : rg->arrows()) emit_arrow(a);
  } else {
    for (NodeId c = 0; c < g.size(); ++c) emit_node(c, g.in_degree(c) == 1);
    for (const Arrow& a : g.arrows()) emit_arrow(a);
  }
  os << "}\n";
  return os.str();
}

}  // namespace binf
