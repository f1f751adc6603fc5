#include "slimcon/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace slimcon {

Json structureToJson(const FiniteStructure& s) {
  Json j;
  Json rels = Json::array(), funs = Json::array();
  for (const auto& r : s.signature().relations) rels.push_back({{"name", r.name}, {"arity", r.arity}});
  for (const auto& f : s.signature().functions) funs.push_back({{"name", f.name}, {"arity", f.arity}});
  j["signature"] = {{"relations", rels}, {"functions", funs}};
  j["size"] = s.size();
  Json relData = Json::object();
  for (const auto& r : s.signature().relations) relData[r.name] = s.tuples(r.name);
  j["relations"] = relData;
  Json funData = Json::object();
  for (const auto& f : s.signature().functions)
    funData[f.name] = Json{{"table", s.functionTable(f.name)}};
  j["functions"] = funData;
  return j;
}

FiniteStructure structureFromJson(const Json& j) {
  std::vector<SymbolDecl> rels, funs;
  for (const auto& r : j.at("signature").at("relations"))
    rels.push_back({r.at("name").get<std::string>(), r.at("arity").get<int>()});
  for (const auto& f : j.at("signature").at("functions"))
    funs.push_back({f.at("name").get<std::string>(), f.at("arity").get<int>()});
  FiniteStructure s(Signature(std::move(rels), std::move(funs)), j.at("size").get<int>());
  if (j.contains("relations"))
    for (const auto& [name, tuples] : j.at("relations").items())
      for (const auto& t : tuples) s.addTuple(name, t.get<std::vector<int>>());
  if (j.contains("functions"))
    for (const auto& [name, data] : j.at("functions").items())
      s.setFunctionTable(name, data.at("table").get<std::vector<int>>());
  s.validate();
  s.sortTuples();
  return s;
}

Json posetToJson(const Poset& p) {
  Json j;
  j["size"] = p.size();
  Json covers = Json::array();
  for (auto [x, y] : p.coverPairs()) covers.push_back({x, y});
  j["covers"] = covers;
  return j;
}

Poset posetFromJson(const Json& j) {
  int n = j.at("size").get<int>();
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  return Poset::fromCovers(n, covers);
}

Json latticeToJson(const Lattice& l) { return posetToJson(l.poset()); }

Lattice latticeFromJson(const Json& j) { return Lattice(posetFromJson(j)); }

Json diagramToJson(const PlanarSlimLattice& l) {
  Json j = posetToJson(l.lattice().poset());
  j["coverOrder"] = l.upperLists();
  j["lowerCoverOrder"] = l.lowerLists();
  Json labels = Json::object();
  for (const auto& [name, e] : l.labels()) labels[name] = {e.first, e.second};
  j["labels"] = labels;
  return j;
}

PlanarSlimLattice diagramFromJson(const Json& j) {
  auto upper = j.at("coverOrder").get<std::vector<std::vector<int>>>();
  std::vector<std::vector<int>> lower;
  if (j.contains("lowerCoverOrder")) {
    lower = j.at("lowerCoverOrder").get<std::vector<std::vector<int>>>();
  } else {
    // Reconstruct lower lists from the upper orders: the recorded pairwise
    // left-to-right relation is total enough on shared cover sets.
    int n = static_cast<int>(upper.size());
    lower.assign(n, {});
    for (int x = 0; x < n; ++x)
      for (int y : upper[x]) lower[y].push_back(x);
    std::map<std::pair<int, int>, int> order;
    for (const auto& ups : upper)
      for (std::size_t i = 0; i < ups.size(); ++i)
        for (std::size_t k = i + 1; k < ups.size(); ++k) order[{ups[i], ups[k]}] = 1;
    for (auto& lows : lower)
      std::stable_sort(lows.begin(), lows.end(), [&](int a, int b) {
        return order.count({a, b}) > 0;
      });
  }
  std::map<std::string, std::pair<int, int>> labels;
  if (j.contains("labels"))
    for (const auto& [name, e] : j.at("labels").items())
      labels[name] = {e.at(0).get<int>(), e.at(1).get<int>()};
  return PlanarSlimLattice(std::move(upper), std::move(lower), std::move(labels));
}

Json conLatticeToJson(const ConLattice& c) {
  Json j = latticeToJson(c.lattice);
  Json blocks = Json::array();
  for (const auto& p : c.congruences) blocks.push_back(p.blocks());
  j["blocks"] = blocks;
  j["generators"] = c.generators;
  return j;
}

Json partitionToJson(const Partition& p) { return Json(p.reps()); }

std::string graphToDot(const GraphView& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int x = 0; x < g.size(); ++x) os << "  " << x << ";\n";
  for (int x = 0; x < g.size(); ++x)
    g.neighbors(x).forEach([&](int y) {
      if (x < y) os << "  " << x << " -- " << y << ";\n";
    });
  os << "}\n";
  return os.str();
}

std::string posetToDot(const Poset& p) {
  std::ostringstream os;
  os << "digraph H {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < p.size(); ++x) os << "  " << x << ";\n";
  for (auto [x, y] : p.coverPairs()) os << "  " << x << " -> " << y << ";\n";
  os << "}\n";
  return os.str();
}

std::string diagramToDot(const PlanarSlimLattice& l) {
  std::ostringstream os;
  os << "digraph H {\n  rankdir=BT;\n  node [shape=circle];\n";
  std::map<std::pair<int, int>, std::string> edgeLabel;
  for (const auto& [name, e] : l.labels()) edgeLabel[e] = name;
  for (int x = 0; x < l.size(); ++x) os << "  " << x << ";\n";
  for (int x = 0; x < l.size(); ++x) {
    // Emit in left-to-right order so layout engines keep the diagram shape.
    for (int y : l.upper(x)) {
      os << "  " << x << " -> " << y;
      auto it = edgeLabel.find({x, y});
      if (it != edgeLabel.end()) os << " [label=\"" << it->second << "\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

LoadedInput loadInput(const Json& j) {
  LoadedInput in{LoadedInput::Kind::Structure, std::nullopt, std::nullopt, std::nullopt};
  if (j.contains("signature")) {
    in.kind = LoadedInput::Kind::Structure;
    in.structure = structureFromJson(j);
  } else if (j.contains("coverOrder")) {
    in.kind = LoadedInput::Kind::Diagram;
    in.diagram = diagramFromJson(j);
    in.poset = in.diagram->lattice().poset();
  } else if (j.contains("covers")) {
    in.kind = LoadedInput::Kind::Poset;
    in.poset = posetFromJson(j);
  } else {
    throw InvalidParameter("input JSON is neither a structure, poset, nor diagram");
  }
  return in;
}

FiniteStructure evalStructure(const LoadedInput& in) {
  if (in.kind == LoadedInput::Kind::Structure) return *in.structure;
  if (in.kind == LoadedInput::Kind::Diagram) return latticeStructure(in.diagram->lattice());
  try {
    Lattice l(*in.poset);
    return latticeStructure(l);
  } catch (const InvalidStructure&) {
    return posetStructure(*in.poset);
  }
}

Lattice latticeOf(const LoadedInput& in) {
  if (in.kind == LoadedInput::Kind::Diagram) return in.diagram->lattice();
  if (in.kind == LoadedInput::Kind::Poset) return Lattice(*in.poset);
  throw InvalidParameter("expected a lattice (poset or diagram JSON)");
}

Json readJsonFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidParameter("cannot open file: " + path);
  Json j;
  f >> j;
  return j;
}

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidParameter("cannot open file for writing: " + path);
  f << text;
}

}  // namespace slimcon
