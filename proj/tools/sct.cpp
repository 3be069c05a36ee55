// Command-line driver: parse a program, build the call graphs, run the
// size-change check per recursive group, and report.
//
// Exit status: 0 = every group terminates, 1 = at least one Unknown,
// 2 = the input could not be analyzed (syntax or shape errors).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sct/engine.hpp"

using namespace sct;
using nlohmann::json;

namespace {

struct Options {
  std::string file;
  int depth = 2;
  int bound = 1;
  bool depth_set = false;
  bool bound_set = false;
  bool show_graph = false;
  bool show_paths = false;
  bool do_sweep = false;
  int sweep_dmax = 3;
  int sweep_bmax = 3;
  std::string format = "text";
};

Bounds bounds_for(const Group &g, const Options &o) {
  Bounds b;
  b.D = o.depth_set ? o.depth : g.pragma_depth.value_or(o.depth);
  b.B = o.bound_set ? o.bound : g.pragma_bound.value_or(o.bound);
  return b;
}

std::string group_name(const CFG &g) {
  std::string n;
  for (size_t i = 0; i < g.fns.size(); ++i) n += (i ? ", " : "") + g.fns[i];
  return n;
}

void print_arcs(const std::vector<Arc> &arcs) {
  for (const Arc &a : arcs)
    std::cout << "  " << a.src << " -> " << a.dst << " : " << show(a.sub)
              << "\n";
}

json arc_json(const Arc &a) {
  return {{"src", a.src}, {"dst", a.dst}, {"label", show(a.sub)}};
}

json witness_json(const Decrease &d) {
  DSeq seq{d.steps, d.param};
  return {{"param", d.param},
          {"branch", show(seq)},
          {"drop", d.drop.inf ? json("inf") : json(d.drop.v)}};
}

}  // namespace

int main(int argc, char **argv) {
  Options o;
  CLI::App app{"size-change termination checker"};
  app.add_option("file", o.file, "program to check")->required();
  auto *od = app.add_option("--depth", o.depth, "term depth bound D");
  auto *ob = app.add_option("--bound", o.bound, "weight bound B");
  app.add_flag("--show-graph", o.show_graph, "print the call graph arcs");
  app.add_flag("--show-paths", o.show_paths,
               "print the saturated graph and its coherent loops");
  app.add_flag("--sweep", o.do_sweep, "try a grid of bounds per group");
  app.add_option("--sweep-dmax", o.sweep_dmax, "sweep depth up to this D");
  app.add_option("--sweep-bmax", o.sweep_bmax, "sweep bound up to this B");
  app.add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json", "json-like-structured"}));
  CLI11_PARSE(app, argc, argv);
  o.depth_set = od->count() > 0;
  o.bound_set = ob->count() > 0;
  if (o.format == "json-like-structured") o.format = "json";
  if (o.depth < 0 || o.bound < 1) {
    std::cerr << "error: need depth >= 0 and bound >= 1\n";
    return 2;
  }

  std::ifstream in(o.file);
  if (!in) {
    std::cerr << "error: cannot open " << o.file << "\n";
    return 2;
  }
  std::stringstream ss;
  ss << in.rdbuf();

  try {
    Program prog = desugar(parse(ss.str()));
    auto diags = validate(prog);
    if (!diags.empty()) {
      for (const Diagnostic &d : diags)
        std::cerr << o.file << ":" << d.pos.line << ":" << d.pos.col
                  << ": error: " << d.message << "\n";
      return 2;
    }

    bool all_terminating = true;
    json out{{"version", 1}, {"groups", json::array()}};
    for (const Group &g : prog.groups) {
      CFG cfg = build_cfg(g, prog);
      Bounds b = bounds_for(g, o);
      GroupReport r = check(cfg, b);
      if (r.verdict != Verdict::Terminating) all_terminating = false;

      std::vector<SweepEntry> grid;
      if (o.do_sweep) {
        std::vector<Bounds> cells;
        for (int D = 0; D <= o.sweep_dmax; ++D)
          for (int B = 1; B <= o.sweep_bmax; ++B) cells.push_back({D, B});
        grid = sweep(cfg, cells);
      }

      if (o.format == "text") {
        std::cout << group_name(cfg) << ": " << show(r.verdict) << " (D=" << b.D
                  << ", B=" << b.B << ")\n";
        if (o.show_graph) {
          std::cout << " call graph:\n";
          print_arcs(r.initial);
        }
        if (o.show_paths) {
          std::cout << " graph of paths (" << r.paths.size() << " arcs):\n";
          print_arcs(r.paths);
          std::cout << " coherent loops:\n";
          for (const LoopReport &l : r.loops) {
            std::cout << "  " << l.fn << " : " << show(l.sub);
            if (l.witness) {
              DSeq d{l.witness->steps, l.witness->param};
              std::cout << "  decreasing <0>" << show(d) << " by "
                        << show(l.witness->drop);
            } else {
              std::cout << "  no decreasing parameter";
            }
            std::cout << "\n";
          }
        }
        for (const SweepEntry &e : grid)
          std::cout << "  sweep D=" << e.bounds.D << " B=" << e.bounds.B
                    << ": " << show(e.verdict) << "\n";
      } else {
        json jg{{"functions", cfg.fns},
                {"depth", b.D},
                {"bound", b.B},
                {"verdict", show(r.verdict)}};
        if (o.show_graph) {
          jg["arcs"] = json::array();
          for (const Arc &a : r.initial) jg["arcs"].push_back(arc_json(a));
        }
        if (o.show_paths) {
          jg["paths"] = json::array();
          for (const Arc &a : r.paths) jg["paths"].push_back(arc_json(a));
          jg["loops"] = json::array();
          for (const LoopReport &l : r.loops) {
            json jl{{"fn", l.fn}, {"label", show(l.sub)}};
            if (l.witness) jl["witness"] = witness_json(*l.witness);
            jg["loops"].push_back(std::move(jl));
          }
        }
        if (o.do_sweep) {
          jg["sweep"] = json::array();
          for (const SweepEntry &e : grid)
            jg["sweep"].push_back({{"depth", e.bounds.D},
                                   {"bound", e.bounds.B},
                                   {"verdict", show(e.verdict)}});
        }
        out["groups"].push_back(std::move(jg));
      }
    }
    if (o.format == "json") std::cout << out.dump(2) << "\n";
    return all_terminating ? 0 : 1;
  } catch (const ParseError &e) {
    std::cerr << o.file << ":" << e.what() << "\n";
    return 2;
  } catch (const AnalysisError &e) {
    std::cerr << o.file << ": error: " << e.what() << "\n";
    return 2;
  }
}
