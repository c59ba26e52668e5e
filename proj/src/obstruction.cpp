#include "spine/obstruction.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace spine {

namespace {

int wing_dir(const SimplePolyhedron& p, const BranchArc& arc, const std::string& sheet) {
  for (const auto& flag : arc.slots) {
    if (flag.sheet != sheet) continue;
    const SheetSpec* s = p.find_sheet(sheet);
    return s->circuits[static_cast<std::size_t>(flag.circuit)]
        [static_cast<std::size_t>(flag.position)].dir;
  }
  return 0;
}

std::multiset<std::tuple<std::string, std::string, std::string>> edge_multiset(const IncidenceGraph& g) {
  std::multiset<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& e : g.edges) out.insert({e.arc, std::min(e.u, e.v), std::max(e.u, e.v)});
  return out;
}

}  // namespace

bool IncidenceGraph::contains(const IncidenceGraph& other) const {
  if (!std::includes(vertices.begin(), vertices.end(), other.vertices.begin(), other.vertices.end()))
    return false;
  const auto mine = edge_multiset(*this), theirs = edge_multiset(other);
  return std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end());
}

IncidenceGraph build_graph(const BornMap& c, const DiskInP& d) {
  const SimplePolyhedron& p = c.polyhedron;
  IncidenceGraph g;
  g.disk = d.id;
  std::set<std::string> vertices;
  for (const auto& s : d.sheets) {
    const SheetSpec* sheet = p.find_sheet(s);
    if (sheet == nullptr) throw Error("BadDisk", "disk " + d.id + " meets unknown sheet " + s);
    if (!sheet->orientable)
      throw Error("NonOrientableSheetMeetsDisk", "sheet " + s + " meets disk " + d.id);
    vertices.insert(s);
  }
  for (const auto& da : d.arcs) {
    const BranchArc* arc = p.find_arc(da.arc);
    if (arc == nullptr || arc->kind != ArcKind::Triple)
      throw Error("BadDisk", "disk " + d.id + " meets " + da.arc + ", which is not a triple arc");
    const int du = wing_dir(p, *arc, da.sheet_a), dv = wing_dir(p, *arc, da.sheet_b);
    if (du == 0 || dv == 0 || !vertices.count(da.sheet_a) || !vertices.count(da.sheet_b))
      throw Error("BadDisk", "disk " + d.id + " crosses " + da.arc + " between sheets it does not meet");
    if (da.sheet_a == da.sheet_b) continue;
    g.edges.push_back({da.arc, da.sheet_a, da.sheet_b, -du * dv});
  }
  g.vertices.assign(vertices.begin(), vertices.end());
  return g;
}

std::optional<int> maximal_graph(const std::vector<IncidenceGraph>& graphs) {
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const bool top = std::all_of(graphs.begin(), graphs.end(),
                                 [&](const IncidenceGraph& h) { return graphs[i].contains(h); });
    if (top) return static_cast<int>(i);
  }
  return std::nullopt;
}

Orientation orient_sheets(const BornMap& c, const IncidenceGraph& g,
                          const std::pair<std::string, int>& seed) {
  (void)c;
  if (!std::binary_search(g.vertices.begin(), g.vertices.end(), seed.first))
    throw Error("SeedNotInGraph", "sheet " + seed.first + " is not a vertex of the graph");
  Orientation out;
  std::map<std::string, std::vector<std::pair<std::string, int>>> adj;
  for (const auto& e : g.edges) {
    adj[e.u].push_back({e.v, e.parity});
    adj[e.v].push_back({e.u, e.parity});
  }
  std::map<std::string, std::string> parent;
  std::deque<std::string> queue;
  auto start = [&](const std::string& v, int sign) {
    out.signs[v] = sign;
    parent[v] = "";
    queue.push_back(v);
  };
  auto path_to_root = [&](std::string v) {
    std::vector<std::string> path{v};
    while (!parent[v].empty()) path.push_back(v = parent[v]);
    return path;
  };
  start(seed.first, seed.second >= 0 ? 1 : -1);
  for (std::size_t next = 0;; ++next) {
    while (!queue.empty()) {
      const std::string u = queue.front();
      queue.pop_front();
      for (const auto& [v, parity] : adj[u]) {
        const int want = out.signs[u] * parity;
        auto it = out.signs.find(v);
        if (it == out.signs.end()) {
          out.signs[v] = want;
          parent[v] = u;
          queue.push_back(v);
        } else if (it->second != want && out.consistent) {
          out.consistent = false;
          auto pu = path_to_root(u), pv = path_to_root(v);
          while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          out.cycle.assign(pu.begin(), pu.end());
          for (auto r = pv.rbegin() + 1; r != pv.rend(); ++r) out.cycle.push_back(*r);
        }
      }
    }
    while (next < g.vertices.size() && out.signs.count(g.vertices[next])) ++next;
    if (next >= g.vertices.size()) break;
    start(g.vertices[next], 1);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "obstructed";
    case Verdict::NonOrientableSubsurfaceOnly: return "non-orientable-subsurface-only";
    case Verdict::NotObstructed: return "not-obstructed-by-this-criterion";
  }
  return "unknown";
}

std::string ObstructionReport::to_text() const {
  std::ostringstream os;
  os << "verdict " << to_string(verdict) << "\n";
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    os << "graph " << k << " (" << graphs[k].disk << "): vertices";
    for (const auto& v : graphs[k].vertices) os << " " << v;
    os << "; edges";
    for (const auto& e : graphs[k].edges) os << " " << e.arc << ":" << e.u << "-" << e.v;
    os << "\n";
  }
  os << "maximal " << (maximal ? std::to_string(*maximal) : std::string("absent")) << "\n";
  if (orientation.consistent) {
    os << "orientation";
    for (const auto& [s, sign] : orientation.signs) os << " " << s << (sign > 0 ? "+" : "-");
    os << "\n";
  } else {
    os << "orientation contradiction along";
    for (const auto& s : orientation.cycle) os << " " << s;
    os << "\n";
  }
  for (const auto& sel : non_orientable) {
    os << "non-orientable closed subsurface chi=" << sel.euler << ":";
    for (const auto& s : sel.sheets) os << " " << s;
    os << "\n";
  }
  if (truncated) os << "search truncated\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  return os.str();
}

ObstructionReport check_mt3_case2(const BornMap& c, const std::vector<DiskInP>& disks,
                                  const BornMap& surgered, bool in_closed_submanifold, long bound) {
  if (disks.size() <= 1)
    throw Error("TooFewDisks", "the criterion needs more than one circle, got " +
                                   std::to_string(disks.size()));
  require_valid(c);
  require_valid(surgered);
  ObstructionReport r;
  for (const auto& d : disks) r.graphs.push_back(build_graph(c, d));
  r.maximal = maximal_graph(r.graphs);
  if (!r.maximal) throw Error("NoMaximalGraph", "no graph contains all the others");
  r.notes.push_back("graphs are ordered by containment of vertex sets and of edge multisets");
  const IncidenceGraph& top = r.graphs[static_cast<std::size_t>(*r.maximal)];
  r.orientation = orient_sheets(c, top, {top.vertices.front(), 1});

  const SurfaceSearch search = find_closed_surfaces(surgered.polyhedron, bound);
  r.truncated = search.truncated;
  for (const auto& sel : search.selections)
    if (!sel.orientable) r.non_orientable.push_back(sel);
  if (r.non_orientable.empty())
    r.verdict = Verdict::NotObstructed;
  else if (in_closed_submanifold)
    r.verdict = Verdict::Obstructed;
  else
    r.verdict = Verdict::NonOrientableSubsurfaceOnly;
  if (!in_closed_submanifold)
    r.notes.push_back("the disks were not declared to lie in a closed submanifold of P");
  return r;
}

std::string TargetManifold::describe() const {
  std::ostringstream os;
  os << "X_" << base_genus;
  for (bool t : twisted) os << " # " << (t ? "S^2 ~x S^1" : "S^2 x S^1");
  return os.str();
}

TargetManifold heegaard_target(const EmbeddingWitness& w, int l, std::vector<bool> twisted) {
  if (w.heegaard_genus < 0) throw Error("BadWitness", "Heegaard genus must be non-negative");
  if (l < 1) throw Error("BadCircleCount", "the number of circles must be positive");
  if (!twisted.empty() && static_cast<int>(twisted.size()) != l - 1)
    throw Error("BadCircleCount", "one twist flag is needed per summand");
  TargetManifold t;
  t.base_genus = w.heegaard_genus;
  t.twisted = twisted.empty() ? std::vector<bool>(static_cast<std::size_t>(l - 1), false) : twisted;
  return t;
}

TargetManifold heegaard_target(const EmbeddingWitness& w, const std::vector<DiskInP>& disks,
                               std::vector<bool> twisted) {
  for (const auto& d : disks)
    if (d.arcs.size() > 1)
      throw Error("DiskBranchHypothesisFailed",
                  "disk " + d.id + " meets the branch in " + std::to_string(d.arcs.size()) +
                      " intervals");
  return heegaard_target(w, static_cast<int>(disks.size()), std::move(twisted));
}

std::string S3Verdict::to_text() const {
  std::ostringstream os;
  os << (obstructed ? "obstructed" : "not obstructed") << " (" << examined << " nodes examined"
     << (truncated ? ", truncated" : "") << ")\n";
  if (witness) {
    os << "witness chi=" << witness->euler << ":";
    for (const auto& s : witness->sheets) os << " " << s;
    os << "\n";
  }
  return os.str();
}

S3Verdict s3_obstruction(const SimplePolyhedron& p, long bound) {
  const SurfaceSearch search = find_closed_surfaces(p, bound);
  S3Verdict v;
  v.truncated = search.truncated;
  v.examined = search.examined;
  for (const auto& sel : search.selections)
    if (!sel.orientable) {
      v.obstructed = true;
      v.witness = sel;
      break;
    }
  return v;
}

}  // namespace spine
