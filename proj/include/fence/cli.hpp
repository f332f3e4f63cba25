// Command-line front end. Every command takes --n and prints
// machine-readable output; JSON is the primary format, CSV covers the
// tabular commands, and DOT renders the egg-box diagram of the monoid.
// Exit codes: 0 success (and, for verify/count, full agreement), 1 any
// mismatch, 2 usage errors.

#pragma once

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fence/fence.hpp"
#include "fence/json_io.hpp"

namespace fence {
namespace cli {

namespace detail {

inline std::string csv_points(PointSet s) {
  std::string out;
  for (int e : s.elements()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

inline void print_enumerate(ChainSize n, const std::string& format,
                            std::ostream& out) {
  const auto elems = enumerate_elements(n);
  if (format == "csv") {
    out << "rank,dom,img\n";
    for (const PartialInjection& a : elems) {
      out << a.rank() << ",\"" << csv_points(a.dom()) << "\",\""
          << csv_points(a.img()) << "\"\n";
    }
    return;
  }
  out << nlohmann::json(elems).dump(2) << "\n";
}

inline void print_classes(ChainSize n, const std::string& format,
                          std::ostream& out) {
  const auto classes = similarity_classes(n);
  if (format == "csv") {
    out << "class,member\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (PointSet s : classes[i]) {
        out << i << ",\"" << csv_points(s) << "\"\n";
      }
    }
    return;
  }
  out << nlohmann::json(classes).dump(2) << "\n";
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Egg-box diagram: one table per J-class, rows indexed by domains (R-classes),
// columns by images (L-classes), each cell one H-class. Edges are the
// covering relations of the J-order.
inline void print_eggbox(ChainSize n, std::ostream& out) {
  const auto classes = similarity_classes(n);
  const std::size_t m = classes.size();

  out << "digraph eggbox {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < m; ++i) {
    out << "  j" << i
        << " [label=<<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\">";
    for (PointSet dom : classes[i]) {
      out << "<TR>";
      for (PointSet img : classes[i]) {
        out << "<TD>"
            << dot_escape(PartialInjection(dom, img).to_string())
            << "</TD>";
      }
      out << "</TR>";
    }
    out << "</TABLE>>];\n";
  }

  // strictly_below[i]: J-classes of proper subsets of class i's sets.
  std::map<std::uint64_t, std::size_t> by_signature;
  for (std::size_t i = 0; i < m; ++i) {
    by_signature[signature(classes[i].front()).packed()] = i;
  }
  std::vector<std::vector<bool>> strictly_below(
      m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint32_t rep = classes[i].front().mask();
    if (rep == 0) continue;
    for (std::uint32_t s = rep & (rep - 1);; s = (s - 1) & rep) {
      strictly_below[i][by_signature.at(
          signature(PointSet::from_mask(s)).packed())] = true;
      if (s == 0) break;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!strictly_below[i][j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < m && covering; ++k) {
        if (strictly_below[i][k] && strictly_below[k][j]) covering = false;
      }
      if (covering) out << "  j" << i << " -> j" << j << ";\n";
    }
  }
  out << "}\n";
}

inline void print_green(ChainSize n, GreenKind kind, const std::string& format,
                        std::ostream& out) {
  if (format == "dot") {
    print_eggbox(n, out);
    return;
  }
  const auto blocks = green_classes(kind, n);
  if (format == "csv") {
    out << "block,dom,img\n";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (const PartialInjection& a : blocks[i]) {
        out << i << ",\"" << csv_points(a.dom()) << "\",\""
            << csv_points(a.img()) << "\"\n";
      }
    }
    return;
  }
  out << nlohmann::json(blocks).dump(2) << "\n";
}

inline void print_ideals(ChainSize n, bool minimal, const std::string& format,
                         std::ostream& out) {
  if (minimal) {
    const auto families = minimal_ideals(n);
    if (format == "csv") {
      out << "ideal,member\n";
      for (std::size_t i = 0; i < families.size(); ++i) {
        for (PointSet s : families[i].members()) {
          out << i << ",\"" << csv_points(s) << "\"\n";
        }
      }
    } else {
      out << nlohmann::json(families).dump(2) << "\n";
    }
    return;
  }
  // The full listing can be large; stream one family at a time.
  if (format == "csv") {
    out << "ideal,member\n";
    std::size_t i = 0;
    for (const IdealFamily& f : enumerate_ideals(n)) {
      for (PointSet s : f.members()) {
        out << i << ",\"" << csv_points(s) << "\"\n";
      }
      ++i;
    }
    return;
  }
  out << "[";
  bool first = true;
  for (const IdealFamily& f : enumerate_ideals(n)) {
    out << (first ? "\n" : ",\n") << nlohmann::json(f).dump(2);
    first = false;
  }
  out << "\n]\n";
}

inline void print_maxsub(ChainSize n, const std::string& spec,
                         bool materialize_flag, std::ostream& out) {
  const IdealFamily f = close_family(parse_ideal_spec(spec, n), n);
  nlohmann::json report{{"n", n.value()}, {"ideal", f}};
  nlohmann::json descriptors = nlohmann::json::array();
  for (const MaxSubDescriptor& d : classify_maximal(f)) {
    nlohmann::json entry = d;
    if (materialize_flag) entry["materialized"] = materialize(d, f);
    descriptors.push_back(std::move(entry));
  }
  report["descriptors"] = std::move(descriptors);
  out << report.dump(2) << "\n";
}

inline OracleBudget budget_from_env() {
  OracleBudget budget;
  if (const char* env = std::getenv("FENCE_BUDGET")) {
    try {
      budget.layer_max = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("FENCE_BUDGET must be a number, got \"" +
                                  std::string(env) + "\"");
    }
  }
  return budget;
}

// Conformance run: for every non-trivial ideal, compare the classifier's
// materialized subsemigroups against the brute-force enumeration.
inline int run_verify(ChainSize n, const OracleBudget& budget,
                      std::ostream& out) {
  nlohmann::json results = nlohmann::json::array();
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t refused = 0;
  bool all_match = true;
  for (const IdealFamily& f : enumerate_ideals(n)) {
    nlohmann::json entry{{"ideal", f}};
    if (f.trivial()) {
      entry["status"] = "skipped: trivial";
      ++skipped;
      results.push_back(std::move(entry));
      continue;
    }
    std::vector<std::vector<PartialInjection>> predicted;
    for (const MaxSubDescriptor& d : classify_maximal(f)) {
      predicted.push_back(materialize(d, f));
    }
    std::sort(predicted.begin(), predicted.end());

    std::vector<std::vector<PartialInjection>> found;
    try {
      const ElementTable table(elements_of_ideal(f));
      for (IndexSet m : brute_maximal(table.universe(), table, budget)) {
        std::vector<PartialInjection> sub;
        for (std::size_t i = 0; i < table.size(); ++i) {
          if ((m >> i) & 1u) sub.push_back(table.element(i));
        }
        found.push_back(std::move(sub));
      }
    } catch (const std::invalid_argument& e) {
      entry["status"] = std::string("refused: ") + e.what();
      ++refused;
      results.push_back(std::move(entry));
      continue;
    }
    std::sort(found.begin(), found.end());

    const bool match = predicted == found;
    entry["status"] = match ? "ok" : "mismatch";
    entry["match"] = match;
    entry["predicted"] = predicted;
    entry["found"] = found;
    all_match = all_match && match;
    ++checked;
    results.push_back(std::move(entry));
  }
  const nlohmann::json report{
      {"n", n.value()},          {"ideals", results.size()},
      {"checked", checked},      {"skipped_trivial", skipped},
      {"refused_budget", refused}, {"all_match", all_match},
      {"results", results}};
  out << report.dump(2) << "\n";
  return all_match ? 0 : 1;
}

inline int run_count(ChainSize n, const std::string& format,
                     std::ostream& out) {
  bool all_ok = true;
  std::vector<std::tuple<int, std::uint64_t, std::uint64_t, bool>> rows;
  for (int m = 1; m <= n.value(); ++m) {
    const std::uint64_t enumerated =
        enumerate_elements(ChainSize(m)).size();
    const std::uint64_t by_classes = element_count_by_classes(ChainSize(m));
    const bool ok = enumerated == by_classes;
    all_ok = all_ok && ok;
    rows.emplace_back(m, enumerated, by_classes, ok);
  }
  if (format == "csv") {
    out << "n,enumerated,by_classes,ok\n";
    for (const auto& [m, a, b, ok] : rows) {
      out << m << "," << a << "," << b << "," << (ok ? "ok" : "MISMATCH")
          << "\n";
    }
  } else {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [m, a, b, ok] : rows) {
      table.push_back({{"n", m},
                       {"enumerated", a},
                       {"by_classes", b},
                       {"ok", ok}});
    }
    out << table.dump(2) << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"computations in the inverse monoid of order-, fence- and "
               "parity-preserving partial injections on a chain"};
  app.require_subcommand(1);

  int n_value = 0;
  std::string format = "json";
  std::string kind_name = "J";
  std::string ideal_spec;
  bool minimal = false;
  bool materialize_flag = false;
  std::optional<std::size_t> layer_budget;
  std::optional<std::size_t> exhaustive_budget;

  const auto add_common = [&](CLI::App* cmd,
                              const std::vector<std::string>& formats) {
    cmd->add_option("-n,--n", n_value, "chain size")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember(formats));
    return cmd;
  };

  auto* enumerate =
      add_common(app.add_subcommand("enumerate", "list all elements"),
                 {"json", "csv"});
  auto* classes = add_common(
      app.add_subcommand("classes", "list the similarity classes of subsets"),
      {"json", "csv"});
  auto* green = add_common(
      app.add_subcommand("green", "list Green's classes or the egg-box"),
      {"json", "csv", "dot"});
  green->add_option("-k,--kind", kind_name, "relation: L, R, H or J")
      ->check(CLI::IsMember({"L", "R", "H", "J"}));
  auto* ideals_cmd = add_common(
      app.add_subcommand("ideals", "list all ideals, or just the minimal ones"),
      {"json", "csv"});
  ideals_cmd->add_flag("--minimal", minimal, "only the minimal ideals");
  auto* maxsub = add_common(
      app.add_subcommand("maxsub",
                         "classify the maximal subsemigroups of an ideal"),
      {"json"});
  maxsub
      ->add_option("--ideal", ideal_spec,
                   "ideal generators, e.g. \"1,3;2\" (empty for the trivial "
                   "ideal)")
      ->required();
  maxsub->add_flag("--materialize", materialize_flag,
                   "include each maximal subsemigroup's elements");
  auto* verify = add_common(
      app.add_subcommand(
          "verify", "compare the classifier against the brute-force oracle"),
      {"json"});
  verify->add_option("--budget", layer_budget,
                     "per-rank-layer limit for the oracle");
  verify->add_option("--budget-exhaustive", exhaustive_budget,
                     "size limit for full subset enumeration");
  auto* count = add_common(
      app.add_subcommand("count", "element counts by two independent routes"),
      {"json", "csv"});

  std::vector<const char*> argv;
  argv.push_back("fence");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const ChainSize n(n_value);
    if (enumerate->parsed()) {
      detail::print_enumerate(n, format, out);
    } else if (classes->parsed()) {
      detail::print_classes(n, format, out);
    } else if (green->parsed()) {
      const GreenKind kind = kind_name == "L"   ? GreenKind::L
                             : kind_name == "R" ? GreenKind::R
                             : kind_name == "H" ? GreenKind::H
                                                : GreenKind::J;
      detail::print_green(n, kind, format, out);
    } else if (ideals_cmd->parsed()) {
      detail::print_ideals(n, minimal, format, out);
    } else if (maxsub->parsed()) {
      detail::print_maxsub(n, ideal_spec, materialize_flag, out);
    } else if (verify->parsed()) {
      OracleBudget budget = detail::budget_from_env();
      if (layer_budget) budget.layer_max = *layer_budget;
      if (exhaustive_budget) budget.exhaustive_max = *exhaustive_budget;
      return detail::run_verify(n, budget, out);
    } else if (count->parsed()) {
      return detail::run_count(n, format, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace cli
}  // namespace fence
