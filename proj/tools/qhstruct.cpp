// qhstruct: quasi-hereditary structures on path algebras of finite acyclic
// quivers -- enumeration, counting, lattice diagnostics, deconcatenation,
// tilting supports, Tamari bijections.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qhstruct/acceptance.hpp"
#include "qhstruct/binary_tree.hpp"
#include "qhstruct/counting.hpp"
#include "qhstruct/deconcat.hpp"
#include "qhstruct/io.hpp"
#include "qhstruct/qh_poset.hpp"

using namespace qhstruct;

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? (int)hc : 1;
}

struct CountMethod {
  std::string name;
  BigInt value;
};

std::vector<CountMethod> count_methods(const std::string& spec, const Quiver& q,
                                       const std::string& method,
                                       EnumerateOptions opts) {
  std::vector<CountMethod> out;
  bool want_all = method == "verify";
  auto wants = [&](const std::string& m) { return want_all || method == m; };

  auto formula = [&]() -> std::optional<CountMethod> {
    if (spec.empty()) return std::nullopt;
    if (spec[0] == 'A' && catalog(spec))
      return CountMethod{"formula (Catalan)", catalan(q.n)};
    if (spec[0] == 'K' && catalog(spec))
      return CountMethod{"formula (n!)", factorial(q.n)};
    if (spec.rfind("D1", 0) == 0 && catalog(spec))
      return CountMethod{"formula (2c_n - 3c_{n-1})", count_D1(q.n)};
    if (spec.rfind("D2", 0) == 0 && catalog(spec))
      return CountMethod{"formula (3c_{n-1} - c_{n-2})", count_D2(q.n)};
    return std::nullopt;
  };
  auto recursive = [&]() -> std::optional<CountMethod> {
    if (spec.empty()) return std::nullopt;
    int r = -1, s = -1, t = -1;
    if (spec[0] == 'A' && catalog(spec)) r = q.n - 1, s = 0, t = 0;
    if (spec.rfind("D1", 0) == 0 && catalog(spec)) r = q.n - 3, s = 1, t = 1;
    if (spec.rfind("D2", 0) == 0 && catalog(spec)) r = 1, s = q.n - 3, t = 1;
    if (spec[0] == 'Q' && catalog(spec)) {
      // recover the arm lengths from the name
      int vals[3], k = 0;
      std::string body = spec.substr(2, spec.size() - 3);
      std::size_t pos = 0;
      while (k < 3) {
        std::size_t comma = body.find(',', pos);
        vals[k++] = std::stoi(body.substr(pos, comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      r = vals[0], s = vals[1], t = vals[2];
    }
    if (r < 0) return std::nullopt;
    return CountMethod{"recursive (idempotent reduction)", count_star(r, s, t)};
  };

  if (method == "auto") {  // cheapest applicable method, alone
    if (auto m = formula()) return {*m};
    if (auto m = recursive()) return {*m};
  }
  if (wants("formula"))
    if (auto m = formula()) out.push_back(*m);
  if (wants("recursive"))
    if (auto m = recursive()) out.push_back(*m);
  if (want_all || method == "brute" || method == "auto")
    out.push_back({"brute force (" + std::to_string(q.n) + " vertices)",
                   BigInt(enumerate_structures(q, 0, opts).size())});
  if (out.empty())
    throw Error("method '" + method + "' is not applicable to '" + spec + "'");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-hereditary structures on path algebras"};
  app.require_subcommand(1);
  int threads = default_threads();
  app.add_option("--threads", threads, "worker count for enumeration shards");

  std::string input, json_out, dot_out, order_path, method = "auto", subset_arg,
                                                    parens;
  int at_vertex = 0, tamari_n = 0;
  bool verify_count = false;

  auto* cmd_enum = app.add_subcommand("enumerate",
                                      "enumerate all quasi-hereditary structures");
  cmd_enum->add_option("input", input, "catalog name or quiver JSON file")
      ->required();
  cmd_enum->add_option("--json", json_out, "write the structure poset as JSON");
  cmd_enum->add_option("--dot", dot_out, "write the Hasse diagram as DOT");

  auto* cmd_count = app.add_subcommand("count", "count quasi-hereditary structures");
  cmd_count->add_option("input", input)->required();
  cmd_count->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "brute", "formula", "recursive"}));
  cmd_count->add_flag("--verify", verify_count,
                      "run every applicable method and require agreement");

  auto* cmd_lattice = app.add_subcommand("lattice", "lattice diagnostics");
  cmd_lattice->add_option("input", input)->required();

  auto* cmd_dec = app.add_subcommand("deconcat", "deconcatenate at a sink/source");
  cmd_dec->add_option("input", input)->required();
  cmd_dec->add_option("--at", at_vertex, "cut vertex (1-based)")->required();

  auto* cmd_tilt = app.add_subcommand("tilting",
                                      "characteristic tilting supports");
  cmd_tilt->add_option("input", input)->required();
  cmd_tilt->add_option("--order", order_path, "adapted order JSON")->required();

  auto* cmd_tamari = app.add_subcommand("tamari", "Tamari lattice on binary trees");
  cmd_tamari->add_option("n", tamari_n, "tree size")->required();
  cmd_tamari->add_option("--dot", dot_out, "write the Hasse diagram as DOT");

  auto* cmd_tree = app.add_subcommand("tree-order",
                                      "partial order of a binary tree");
  cmd_tree->add_option("parens", parens, "tree in (L)R parenthesis form")
      ->required();

  auto* cmd_lift = app.add_subcommand("lift",
                                      "lift an order along a full subposet");
  cmd_lift->add_option("input", input)->required();
  cmd_lift->add_option("--subset", subset_arg, "comma-separated 1-based vertices")
      ->required();
  cmd_lift->add_option("--order", order_path, "adapted order on the subset")
      ->required();

  auto* cmd_verify = app.add_subcommand("verify", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    EnumerateOptions opts;
    opts.threads = threads;

    if (cmd_enum->parsed()) {
      Quiver q = load_quiver(input);
      QhPoset p = enumerate_structures(q, 0, opts);
      if (is_tree(q)) {
        try {
          for (QhStructure& s : p.structures)
            s.tilting = tree_tilting_supports(q, s.min_order);
        } catch (const UnsupportedError&) {
          for (QhStructure& s : p.structures) s.tilting.reset();
        }
      }
      if (json_out != "-" && dot_out != "-")
        std::cout << p.size() << " structures\n";
      if (!json_out.empty()) write_text(json_out, to_json(p).dump(2) + "\n");
      if (!dot_out.empty()) write_text(dot_out, to_dot(p));
    } else if (cmd_count->parsed()) {
      Quiver q = load_quiver(input);
      auto methods = count_methods(input, q, verify_count ? "verify" : method, opts);
      if (methods.size() == 1 && !verify_count) {
        std::cout << methods[0].value << "\n";
      } else {
        for (const auto& m : methods)
          std::cout << m.name << ": " << m.value << "\n";
        for (const auto& m : methods)
          if (m.value != methods[0].value) throw Error("methods disagree");
        if (verify_count) std::cout << "all methods agree\n";
      }
    } else if (cmd_lattice->parsed()) {
      QhPoset p = enumerate_structures(load_quiver(input), 0, opts);
      LatticeReport rep = is_lattice(p);
      if (rep.lattice) {
        std::cout << "lattice (" << p.size() << " structures)\n";
      } else {
        auto [s, t] = *rep.witness;
        std::cout << "not a lattice: " << rep.reason << " for\n  "
                  << order_label(p.structures[s].min_order) << "\n  "
                  << order_label(p.structures[t].min_order) << "\n";
      }
    } else if (cmd_dec->parsed()) {
      Quiver q = load_quiver(input);
      if (at_vertex < 1 || at_vertex > q.n)
        throw Error("cut vertex out of range");
      auto d = deconcatenate(q, at_vertex - 1);
      if (!d) {
        std::cout << "vertex " << at_vertex << " does not disconnect the quiver\n";
        return 1;
      }
      std::cout << to_json(*d).dump(2) << "\n";
    } else if (cmd_tilt->parsed()) {
      Quiver q = load_quiver(input);
      PartialOrder o = load_order(order_path);
      if (o.n != q.n) throw Error("order and quiver sizes differ");
      if (!is_adapted(o, q))
        throw Error("the given order is not adapted to the quiver");
      std::vector<Vset> supp = is_type_a(q)
                                   ? tilting_supports(minimal_adapted(o, q), q)
                                   : tree_tilting_supports(q, o);
      json t = json::object();
      for (int i = 0; i < q.n; ++i)
        t[std::to_string(i + 1)] = vset_to_json(supp[i]);
      std::cout << json{{"schema", kSchema}, {"tilting_supports", t}}.dump(2)
                << "\n";
    } else if (cmd_tamari->parsed()) {
      TreePoset tp = tamari_poset(tamari_n);
      std::cout << tp.trees.size() << " trees\n";
      if (!dot_out.empty()) write_text(dot_out, to_dot(tp));
    } else if (cmd_tree->parsed()) {
      BinaryTree t = from_parens(parens);
      PartialOrder o = tree_to_order(t);
      for (auto [i, j] : o.pairs())
        std::cout << i + 1 << " < " << j + 1 << "\n";
    } else if (cmd_lift->parsed()) {
      Quiver q = load_quiver(input);
      ReachPoset p = reachability(q);
      Vset subset = 0;
      std::size_t pos = 0;
      while (pos < subset_arg.size()) {
        std::size_t comma = subset_arg.find(',', pos);
        int v = std::stoi(subset_arg.substr(pos, comma - pos));
        if (v < 1 || v > q.n) throw Error("subset vertex out of range");
        subset |= bit(v - 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      PartialOrder o = load_order(order_path);
      if (o.n != q.n) throw Error("order and quiver sizes differ");
      ReachPoset induced{q.n, std::vector<Vset>(q.n)};
      for (int v = 0; v < q.n; ++v)
        induced.up[v] = has(subset, v) ? (p.up[v] & subset) : bit(v);
      if (!is_adapted(restrict(o, subset), hasse(induced), subset))
        throw Error("the given order is not adapted on the subset");
      PartialOrder lifted = lift_order(p, subset, restrict(o, subset));
      std::cout << to_json(lifted).dump(2) << "\n";
    } else if (cmd_verify->parsed()) {
      bool ok = accept::run_all([](const accept::CriterionResult& r) {
        std::printf("[%2d] %s  (%5.2fs)  %s\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.seconds, r.name.c_str());
        if (!r.pass) std::printf("     %s\n", r.detail.c_str());
        std::fflush(stdout);
      });
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
