// binf: generate, convert, apply operators to, enumerate, and verify B(infinity)
// for E6 and E7.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "binf/coordinates.hpp"
#include "binf/io.hpp"
#include "binf/verify.hpp"

using namespace binf;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::optional<LieType> parse_type(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return LieType::parse(text);
}

LieType require_type(const std::string& text, const char* why) {
  if (text.empty()) throw UsageError(std::string("--type is required ") + why);
  return LieType::parse(text);
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

// A tableau file when "rows" is present, otherwise a coordinates file.
MLTableau read_element(const std::string& path, std::optional<LieType> type) {
  const nlohmann::json j = read_json(path);
  if (j.is_object() && j.contains("rows")) {
    MLTableau t = tableau_from_json(j, type);
    if (!is_marginally_large(t)) throw FormatError(path + ": tableau is not marginally large");
    return t;
  }
  return tableau_from_reduced(coords_from_json(j, type));
}

ojson element_json(const MLTableau& t) {
  ojson j = tableau_to_json(t);
  j["coords"] = coords_to_json(reduced_counts(t))["coords"];
  return j;
}

struct Op {
  int color;
  Direction dir;
};

std::vector<Op> parse_word(const std::string& word, LieType t) {
  std::vector<Op> ops;
  std::istringstream in(word);
  for (std::string tok; in >> tok;) {
    const bool ok = tok.size() == 2 && (tok[0] == 'e' || tok[0] == 'f') && tok[1] >= '1' && tok[1] <= '0' + t.rank();
    if (!ok) throw FormatError("malformed operator '" + tok + "' (expected e1..e" + std::to_string(t.rank()) + " or f1..f" +
                               std::to_string(t.rank()) + ")");
    ops.push_back(Op{tok[1] - '0', tok[0] == 'e' ? Direction::Raise : Direction::Lower});
  }
  return ops;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal B(infinity) for E6 and E7: tableaux and embedding coordinates"};
  app.require_subcommand(1);

  std::string type_text, out_path, format, input, word, to, suite = "all", as = "coords";
  std::optional<int> row;
  int depth = -1;
  bool depth_given = false;
  VerifyConfig config;

  auto add_type = [&](CLI::App* cmd) {
    cmd->add_option("--type", type_text, "e6 or e7")->check(CLI::IsMember({"e6", "e7"}));
  };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "write to PATH instead of stdout"); };

  auto* graph = app.add_subcommand("graph", "export the basic crystal or a row graph");
  add_type(graph);
  graph->add_option("--row", row, "row index; the whole basic crystal when omitted");
  graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->default_val("dot");
  add_out(graph);

  auto* apply_cmd = app.add_subcommand("apply", "apply a word of Kashiwara operators, left to right");
  add_type(apply_cmd);
  apply_cmd->add_option("--word", word, "e.g. \"f1 f3 e2\"")->required();
  apply_cmd->add_option("input", input, "\"highest\" or a tableau/coordinates file")->required();
  add_out(apply_cmd);

  auto* convert = app.add_subcommand("convert", "convert between tableau and coordinate files");
  add_type(convert);
  convert->add_option("--to", to, "coords or tableau")->check(CLI::IsMember({"coords", "tableau"}))->required();
  convert->add_option("input", input, "input file")->required();
  add_out(convert);

  auto* enumerate = app.add_subcommand("enumerate", "all elements up to a depth");
  add_type(enumerate);
  enumerate->add_option("--depth", depth, "number of lowering steps")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--format", format, "json or jsonl")->check(CLI::IsMember({"json", "jsonl"}))->default_val("jsonl");
  enumerate->add_option("--as", as, "coords or tableau")->check(CLI::IsMember({"coords", "tableau"}));
  add_out(enumerate);

  auto* verify = app.add_subcommand("verify", "run verification suites, one JSON report per line");
  add_type(verify);
  verify->add_option("--suite", suite, "suite name or all");
  verify->add_option("--depth", depth, "enumeration depth")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", config.seed, "seed for randomized suites");
  verify->add_option("--samples", config.samples, "random samples per suite")->check(CLI::NonNegativeNumber);
  add_out(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  depth_given = depth >= 0;

  try {
    Output out(out_path);
    std::ostream& os = out.stream();

    if (*graph) {
      const LieType t = require_type(type_text, "for graph");
      if (row && (*row < 1 || *row > t.row_count()))
        throw UsageError("row must be between 1 and " + std::to_string(t.row_count()) + " for " + t.name());
      if (format == "json")
        os << graph_to_json(t, row).dump(2) << "\n";
      else
        os << graph_to_dot(t, row);
      return kOk;
    }

    if (*apply_cmd) {
      MLTableau current = input == "highest" ? highest_tableau(require_type(type_text, "with \"highest\""))
                                             : read_element(input, parse_type(type_text));
      for (const Op& op : parse_word(word, current.type)) {
        auto next = apply(current, op.color, op.dir);
        if (!next) {
          os << "zero\n";
          return kOk;
        }
        current = std::move(*next);
      }
      os << element_json(current).dump(2) << "\n";
      return kOk;
    }

    if (*convert) {
      const nlohmann::json j = read_json(input);
      const auto type = parse_type(type_text);
      if (to == "tableau") {
        os << tableau_to_json(tableau_from_reduced(coords_from_json(j, type))).dump(2) << "\n";
      } else {
        const MLTableau t = tableau_from_json(j, type);
        if (!is_marginally_large(t)) throw FormatError(input + ": tableau is not marginally large");
        os << coords_to_json(reduced_counts(t)).dump(2) << "\n";
      }
      return kOk;
    }

    if (*enumerate) {
      const LieType t = require_type(type_text, "for enumerate");
      const int d = depth_given ? depth : default_depth(t);
      std::vector<ojson> items;
      if (as == "tableau") {
        for (const MLTableau& tab : enumerate_tableaux(t, d).tableaux) items.push_back(tableau_to_json(tab));
      } else {
        for (const ReducedCounts& rc : enumerate_embedded(t, d).elements) items.push_back(coords_to_json(rc));
      }
      if (format == "jsonl") {
        for (const ojson& item : items) os << item.dump() << "\n";
      } else {
        ojson all{{"type", t.name()}, {"depth", d}, {"count", items.size()}, {"elements", items}};
        os << all.dump(2) << "\n";
      }
      return kOk;
    }

    if (*verify) {
      std::vector<LieType> types;
      if (type_text.empty())
        types = {LieType::e6(), LieType::e7()};
      else
        types = {LieType::parse(type_text)};
      std::vector<std::string> suites;
      if (suite == "all") {
        suites = suite_names();
      } else {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
          throw UsageError("unknown suite '" + suite + "'");
        suites = {suite};
      }
      if (depth_given) config.depth = depth;
      bool all_pass = true;
      for (LieType t : types)
        for (const std::string& s : suites) {
          const VerificationReport rep = run_suite(s, t, config);
          os << rep.to_json().dump() << std::endl;
          all_pass = all_pass && rep.pass;
        }
      return all_pass ? kOk : kVerifyFailed;
    }
  } catch (const PathConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
