#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "slimcon/builtins.hpp"
#include "slimcon/congruence.hpp"
#include "slimcon/diagram.hpp"
#include "slimcon/eval.hpp"
#include "slimcon/io.hpp"
#include "slimcon/parser.hpp"
#include "slimcon/props.hpp"
#include "slimcon/verify.hpp"

namespace {

using namespace slimcon;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // tool ran fine, the property is false
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty())
    std::cout << text << "\n";
  else
    writeTextFile(outPath, text + "\n");
}

void emitJson(const Json& j, const std::string& outPath) { emit(j.dump(2), outPath); }

// name[:k] -> (name, param)
std::pair<std::string, std::optional<int>> splitBuiltin(const std::string& spec) {
  auto pos = spec.find(':');
  if (pos == std::string::npos) return {spec, std::nullopt};
  return {spec.substr(0, pos), std::stoi(spec.substr(pos + 1))};
}

int runBuild(const std::string& what, int n, int m, int k, const std::string& inPath,
             const std::string& outPath) {
  if (what == "crown") {
    emitJson(posetToJson(crown(n)), outPath);
  } else if (what == "circle") {
    emitJson(structureToJson(circleGraph(n).structure()), outPath);
  } else if (what == "path") {
    emitJson(structureToJson(pathGraph(m).structure()), outPath);
  } else if (what == "fence") {
    emitJson(posetToJson(fenceSegment(m)), outPath);
  } else if (what == "chain") {
    emitJson(latticeToJson(chain(m)), outPath);
  } else if (what == "grid") {
    emitJson(latticeToJson(grid(k)), outPath);
  } else if (what == "zn") {
    emitJson(structureToJson(cyclicGroup(n)), outPath);
  } else if (what == "ln") {
    emitJson(diagramToJson(buildLn(n)), outPath);
  } else if (what == "downset") {
    if (inPath.empty()) throw InvalidParameter("build downset needs --in POSET.json");
    emitJson(latticeToJson(downsetLattice(posetFromJson(readJsonFile(inPath))).lattice), outPath);
  } else if (what == "fd3") {
    emitJson(latticeToJson(downsetLattice(crown(3)).lattice), outPath);
  } else {
    throw InvalidParameter("unknown build target: " + what);
  }
  return kExitOk;
}

int runEval(const std::string& formulaSrc, const std::string& builtinSpec,
            const std::string& inPath, const std::vector<std::string>& binds,
            const std::string& outPath) {
  LoadedInput in = loadInput(readJsonFile(inPath));
  FiniteStructure s = evalStructure(in);
  Formula f = [&] {
    if (!builtinSpec.empty()) {
      auto [name, param] = splitBuiltin(builtinSpec);
      return builtinFormula(name, param);
    }
    return parse(formulaSrc, s.signature());
  }();
  Valuation v;
  for (const auto& b : binds) {
    auto pos = b.find('=');
    if (pos == std::string::npos) throw InvalidParameter("--bind expects var=value");
    v[b.substr(0, pos)] = std::stoi(b.substr(pos + 1));
  }
  bool result = Evaluator(f, s).eval(v);
  Json out{{"formula", prettyPrint(f)}, {"value", result}};
  if (!v.empty()) out["valuation"] = v;
  emitJson(out, outPath);
  return result ? kExitOk : kExitNegative;
}

Json bipartiteWitness(const BipartiteResult& r) {
  if (r.bipartite) return Json{{"coloring", r.coloring}};
  return Json{{"oddClosedWalk", r.oddClosedWalk}};
}

// Reruns the cheap validation of a reported witness.
bool recheckWitness(const std::string& prop, const Json& report, const LoadedInput& in);

int runCheck(const std::string& prop, const std::string& inPath, bool recheck,
             const std::string& outPath) {
  LoadedInput in = loadInput(readJsonFile(inPath));
  Json report;
  report["property"] = prop;
  bool verdict = false;

  if (prop == "bipartite") {
    if (in.kind != LoadedInput::Kind::Structure)
      throw InvalidParameter("check bipartite expects a graph structure");
    GraphView g(*in.structure);
    auto r = checkBipartite(g);
    verdict = r.bipartite;
    report["witness"] = bipartiteWitness(r);
  } else {
    Lattice d = latticeOf(in);
    if (prop == "two-cover") {
      auto r = hasTwoCover(d);
      verdict = r.ok;
      if (!r.ok) report["witness"] = Json{{"element", r.offender}, {"covers", r.covers}};
    } else if (prop == "bmep") {
      auto r = hasBmep(d);
      verdict = r.ok;
      report["witness"] = r.ok ? Json{{"parts", Json::array({r.parts[0], r.parts[1]})}}
                               : Json{{"oddCircle", r.oddCircle}};
      if (!r.readingsAgree)
        report["notes"] = Json::array({"common-lower-bound reading disagrees with the cover reading"});
    } else if (prop == "dcep") {
      auto r = hasDcep(d);
      verdict = r.ok;
      if (r.ok) {
        Json decs = Json::array();
        for (const auto& dec : r.decompositions)
          decs.push_back(Json{{"x", dec.x},
                              {"y", dec.y},
                              {"z", dec.z},
                              {"maxBelowY", dec.maxBelowY},
                              {"maxBelowZ", dec.maxBelowZ},
                              {"alternating", dec.fromAlternatingPartition}});
        report["witness"] = Json{{"decompositions", decs}};
      } else {
        report["witness"] = Json{{"refuter", r.refuter}, {"circle", r.refuterCircle}};
      }
    } else if (prop == "cyclic") {
      auto r = cyclicElements(d);
      verdict = !r.elements.empty();
      report["witness"] = Json{{"elements", r.elements}, {"circles", r.circles}};
    } else if (prop == "multicyclic") {
      auto core = analyzeDistributive(d);
      std::vector<int> found;
      for (int x = 0; x < d.size(); ++x)
        if (isMulticyclic(d, x)) found.push_back(x);
      verdict = !found.empty();
      report["witness"] = Json{{"elements", found}};
    } else if (prop == "slim") {
      auto r = checkSlim(d);
      verdict = r.ok;
      if (!r.ok) report["witness"] = Json{{"antichain", *r.witness}};
    } else if (prop == "semimodular") {
      auto r = checkSemimodular(d);
      verdict = r.ok;
      if (!r.ok) report["witness"] = Json{{"triple", *r.witness}};
    } else if (prop == "distributive") {
      auto r = checkDistributive(d);
      verdict = r.ok;
      if (!r.ok) report["witness"] = Json{{"triple", *r.witness}};
    } else {
      throw InvalidParameter("unknown property: " + prop);
    }
  }

  report["verdict"] = verdict;
  if (recheck) {
    bool ok = recheckWitness(prop, report, in);
    report["witnessRecheck"] = ok ? "accepted" : "rejected";
    if (!ok) {
      emitJson(report, outPath);
      return kExitUsage;
    }
  }
  emitJson(report, outPath);
  return verdict ? kExitOk : kExitNegative;
}

bool recheckWitness(const std::string& prop, const Json& report, const LoadedInput& in) {
  if (!report.contains("witness")) return true;
  const Json& w = report.at("witness");
  bool verdict = report.at("verdict").get<bool>();
  if (prop == "bipartite") {
    GraphView g(*in.structure);
    if (verdict) {
      auto coloring = w.at("coloring").get<std::vector<int>>();
      for (int x = 0; x < g.size(); ++x) {
        bool ok = true;
        g.neighbors(x).forEach([&](int y) {
          if (coloring[x] == coloring[y]) ok = false;
        });
        if (!ok) return false;
      }
      return true;
    }
    auto walk = w.at("oddClosedWalk").get<std::vector<int>>();
    if (walk.size() % 2 == 0 || walk.size() < 3) return false;
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (!g.edge(walk[i], walk[(i + 1) % walk.size()])) return false;
    return true;
  }
  Lattice d = latticeOf(in);
  if (prop == "two-cover" && !verdict) {
    auto j = joinIrreducibles(d);
    int offender = w.at("element").get<int>();
    auto covers = w.at("covers").get<std::vector<int>>();
    auto pos = std::find(j.elements.begin(), j.elements.end(), offender);
    if (pos == j.elements.end() || covers.size() < 3) return false;
    int pi = static_cast<int>(pos - j.elements.begin());
    for (int c : covers) {
      auto cpos = std::find(j.elements.begin(), j.elements.end(), c);
      if (cpos == j.elements.end()) return false;
      if (!j.order.covers(pi, static_cast<int>(cpos - j.elements.begin()))) return false;
    }
    return true;
  }
  if (prop == "bmep") {
    auto core = analyzeDistributive(d);
    auto posOf = [&](int elem) {
      for (int i = 0; i < static_cast<int>(core.maxJir.size()); ++i)
        if (core.maxJir[i] == elem) return i;
      return -1;
    };
    if (verdict) {
      auto parts = w.at("parts");
      std::vector<int> color(core.maxJir.size(), -1);
      for (int side = 0; side < 2; ++side)
        for (int elem : parts.at(side).get<std::vector<int>>()) {
          int p = posOf(elem);
          if (p < 0) return false;
          color[p] = side;
        }
      for (int i = 0; i < core.graph.m; ++i)
        for (int j2 = 0; j2 < core.graph.m; ++j2)
          if (core.graph.adj[i][j2] && (color[i] == -1 || color[i] == color[j2])) return false;
      return true;
    }
    auto circle = w.at("oddCircle").get<std::vector<int>>();
    if (circle.size() % 2 == 0 || circle.size() < 3) return false;
    std::vector<int> pos;
    for (int elem : circle) {
      int p = posOf(elem);
      if (p < 0) return false;
      pos.push_back(p);
    }
    // Spanned circle: adjacency exactly between cyclic neighbours.
    int n = static_cast<int>(pos.size());
    for (int i = 0; i < n; ++i)
      for (int j2 = i + 1; j2 < n; ++j2) {
        bool expect = (j2 == i + 1) || (i == 0 && j2 == n - 1);
        if (core.graph.adj[pos[i]][pos[j2]] != expect) return false;
      }
    return true;
  }
  if (prop == "dcep") {
    if (verdict) {
      for (const auto& dec : w.at("decompositions")) {
        int x = dec.at("x").get<int>(), y = dec.at("y").get<int>(), z = dec.at("z").get<int>();
        if (d.join(y, z) != x) return false;
        if (!isVwElement(d, y).ok || !isVwElement(d, z).ok) return false;
        auto core = analyzeDistributive(d);
        for (int i : core.maxJir)
          if (d.leq(i, y) && d.leq(i, z)) return false;
      }
      return true;
    }
    int x = w.at("refuter").get<int>();
    auto core = analyzeDistributive(d);
    auto below = core.maxJirBelow(x);
    return inducedCircleOrder(core.graph, below).has_value() && core.joinOfMaxJirBelowIs(x);
  }
  if (prop == "cyclic") {
    auto core = analyzeDistributive(d);
    auto elements = w.at("elements").get<std::vector<int>>();
    for (int x : elements) {
      auto below = core.maxJirBelow(x);
      if (!inducedCircleOrder(core.graph, below) || !core.joinOfMaxJirBelowIs(x)) return false;
    }
    return true;
  }
  if (prop == "multicyclic") {
    for (int x : w.at("elements").get<std::vector<int>>())
      if (!isMulticyclic(d, x)) return false;
    return true;
  }
  if (prop == "slim" && !verdict) {
    auto a = w.at("antichain").get<std::vector<int>>();
    if (a.size() != 3) return false;
    auto j = joinIrreducibles(d);
    for (int x : a)
      if (std::find(j.elements.begin(), j.elements.end(), x) == j.elements.end()) return false;
    for (int i = 0; i < 3; ++i)
      for (int k = i + 1; k < 3; ++k)
        if (d.leq(a[i], a[k]) || d.leq(a[k], a[i])) return false;
    return true;
  }
  if (prop == "semimodular" && !verdict) {
    auto t = w.at("triple").get<std::vector<int>>();
    int x = t[0], y = t[1], z = t[2];
    int a = d.join(x, z), b = d.join(y, z);
    return d.poset().covers(x, y) && a != b && !d.poset().covers(a, b);
  }
  if (prop == "distributive" && !verdict) {
    auto t = w.at("triple").get<std::vector<int>>();
    int x = t[0], y = t[1], z = t[2];
    return d.meet(x, d.join(y, z)) != d.join(d.meet(x, y), d.meet(x, z));
  }
  return true;
}

int runCon(const std::string& inPath, bool jirOnly, const std::string& outPath) {
  Lattice l = latticeOf(loadInput(readJsonFile(inPath)));
  if (jirOnly) {
    auto j = jirCongruencePoset(l);
    Json out = posetToJson(j.order);
    Json parts = Json::array();
    for (const auto& c : j.congruences) parts.push_back(partitionToJson(c));
    out["congruences"] = parts;
    emitJson(out, outPath);
    return kExitOk;
  }
  emitJson(conLatticeToJson(congruenceLattice(l)), outPath);
  return kExitOk;
}

int runLn(int n, const std::string& outPath) {
  PlanarSlimLattice l = buildLn(n);
  auto jir = jirCongruencePoset(l.lattice());
  bool ok = isomorphic(jir.order, crown(n));
  Json out;
  out["n"] = n;
  out["size"] = l.size();
  out["jirCongruences"] = jir.congruences.size();
  out["jirConIsomorphicToCrown"] = ok;
  out["diagram"] = diagramToJson(l);
  emitJson(out, outPath);
  return ok ? kExitOk : kExitNegative;
}

int runVerify(const std::string& which, int maxPoset, int count, std::uint64_t seed, int gridK,
              int maxForks, int workers, bool timings, const std::string& outPath) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationRun run;
  if (which == "theorem-a")
    run = verifyTheoremA(count, seed, gridK, maxForks, workers);
  else if (which == "theorem-b")
    run = verifyTheoremB(maxPoset, workers);
  else if (which == "theorem-c")
    run = verifyTheoremC(maxPoset, workers);
  else if (which == "remark-18")
    run = verifyRemark18(maxPoset, workers);
  else if (which == "birkhoff")
    run = verifyBirkhoff(maxPoset, workers);
  else
    throw InvalidParameter("unknown verification: " + which);
  std::cout << run.summaryText() << "\n";
  if (timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << "elapsed: " << ms << " ms\n";
  }
  if (!outPath.empty()) emitJson(run.toJson(), outPath);
  return run.pass() ? kExitOk : kExitNegative;
}

int runExport(const std::string& inPath, const std::string& outPath) {
  LoadedInput in = loadInput(readJsonFile(inPath));
  std::string dot;
  switch (in.kind) {
    case LoadedInput::Kind::Structure:
      dot = graphToDot(GraphView(*in.structure));
      break;
    case LoadedInput::Kind::Diagram:
      dot = diagramToDot(*in.diagram);
      break;
    case LoadedInput::Kind::Poset:
      dot = posetToDot(*in.poset);
      break;
  }
  emit(dot, outPath);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lattice and finite model theory toolkit"};
  app.require_subcommand(1);

  std::string outPath;

  auto* build = app.add_subcommand("build", "construct a structure and write it as JSON");
  std::string buildWhat, buildIn;
  int buildN = 0, buildM = 0, buildK = 0;
  build->add_option("what", buildWhat,
                    "crown|circle|path|fence|chain|grid|zn|ln|downset|fd3")->required();
  build->add_option("--n", buildN, "size parameter n");
  build->add_option("--m", buildM, "size parameter m");
  build->add_option("--k", buildK, "size parameter k");
  build->add_option("--in", buildIn, "input poset (build downset)");
  build->add_option("--out", outPath, "output file (default: stdout)");

  auto* eval = app.add_subcommand("eval", "evaluate a formula on a structure");
  std::string evalFormula, evalBuiltin, evalIn;
  std::vector<std::string> evalBinds;
  eval->add_option("--formula", evalFormula, "formula source text");
  eval->add_option("--builtin", evalBuiltin, "library formula name[:param]");
  eval->add_option("--in", evalIn, "structure/poset/diagram JSON")->required();
  eval->add_option("--bind", evalBinds, "free variable binding var=value")->take_all();
  eval->add_option("--out", outPath, "output file");

  auto* check = app.add_subcommand("check", "run a property checker");
  std::string checkProp, checkIn;
  bool recheck = false;
  check->add_option("property", checkProp,
                    "bipartite|two-cover|bmep|dcep|cyclic|multicyclic|slim|semimodular|distributive")
      ->required();
  check->add_option("--in", checkIn, "input JSON")->required();
  check->add_flag("--recheck-witness", recheck, "independently validate the witness");
  check->add_option("--out", outPath, "output file");

  auto* con = app.add_subcommand("con", "congruence lattice of a lattice");
  std::string conIn;
  bool conJir = false;
  con->add_option("--in", conIn, "lattice JSON")->required();
  con->add_flag("--jir", conJir, "only the poset of join-irreducible congruences");
  con->add_option("--out", outPath, "output file");

  auto* ln = app.add_subcommand("ln", "build L_n and check J(Con L_n) against the n-crown");
  int lnN = 0;
  ln->add_option("--n", lnN, "even n >= 4")->required();
  ln->add_option("--out", outPath, "output file");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string verifyWhich;
  int maxPoset = 6, count = 100, gridK = 4, maxForks = 6, workers = 1;
  std::uint64_t seed = 1;
  bool timings = false;
  verify->add_option("which", verifyWhich, "theorem-a|theorem-b|theorem-c|remark-18|birkhoff")
      ->required();
  verify->add_option("--max-poset", maxPoset, "poset size bound (catalog suites)");
  verify->add_option("--count", count, "random lattice count (theorem-a)");
  verify->add_option("--seed", seed, "random seed (theorem-a)");
  verify->add_option("--grid-k", gridK, "largest starting grid (theorem-a)");
  verify->add_option("--max-forks", maxForks, "most forks per lattice (theorem-a)");
  verify->add_option("--workers", workers, "worker threads");
  verify->add_flag("--timings", timings, "print elapsed time (off for byte-stable output)");
  verify->add_option("--out", outPath, "write the full run as JSON");

  auto* exp = app.add_subcommand("export", "export DOT");
  std::string expIn;
  bool expDot = false;
  exp->add_flag("--dot", expDot, "DOT output (the only format)");
  exp->add_option("--in", expIn, "input JSON")->required();
  exp->add_option("--out", outPath, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return runBuild(buildWhat, buildN, buildM, buildK, buildIn, outPath);
    if (eval->parsed()) {
      if (evalFormula.empty() == evalBuiltin.empty())
        throw InvalidParameter("eval needs exactly one of --formula or --builtin");
      return runEval(evalFormula, evalBuiltin, evalIn, evalBinds, outPath);
    }
    if (check->parsed()) return runCheck(checkProp, checkIn, recheck, outPath);
    if (con->parsed()) return runCon(conIn, conJir, outPath);
    if (ln->parsed()) return runLn(lnN, outPath);
    if (verify->parsed())
      return runVerify(verifyWhich, maxPoset, count, seed, gridK, maxForks, workers, timings,
                       outPath);
    if (exp->parsed()) return runExport(expIn, outPath);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
