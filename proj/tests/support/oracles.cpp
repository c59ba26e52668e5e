#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <cstdint>
#include <functional>
#include <numeric>
#include <tuple>

namespace spine::testing {

namespace {

using Row = std::vector<bool>;

int rank_mod2(std::vector<Row> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    auto pivot = std::find_if(m.begin() + rank, m.end(), [&](const Row& r) { return r[c]; });
    if (pivot == m.end()) continue;
    std::iter_swap(m.begin() + rank, pivot);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (static_cast<int>(r) != rank && m[r][c])
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] != m[static_cast<std::size_t>(rank)][k];
    ++rank;
  }
  return rank;
}

std::vector<std::array<int, 2>> all_edges(const Simplicial& k) {
  std::set<std::array<int, 2>> e;
  auto add = [&](int a, int b) { e.insert({std::min(a, b), std::max(a, b)}); };
  for (const auto& t : k.triangles) {
    add(t[0], t[1]);
    add(t[1], t[2]);
    add(t[0], t[2]);
  }
  for (const auto& x : k.extra_edges) add(x[0], x[1]);
  return {e.begin(), e.end()};
}

int wing_dir(const SimplePolyhedron& p, const SlotFlag& f) {
  const SheetSpec* s = p.find_sheet(f.sheet);
  return s->circuits[static_cast<std::size_t>(f.circuit)][static_cast<std::size_t>(f.position)].dir;
}

bool satisfiable(const std::vector<std::string>& vertices,
                 const std::vector<std::tuple<std::string, std::string, int>>& constraints) {
  const std::size_t n = vertices.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[vertices[i]] = i;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto sign = [&](const std::string& v) { return (mask >> index.at(v)) & 1 ? -1 : 1; };
    if (std::all_of(constraints.begin(), constraints.end(), [&](const auto& c) {
          return sign(std::get<0>(c)) * sign(std::get<1>(c)) == std::get<2>(c);
        }))
      return true;
  }
  return false;
}

}  // namespace

Z2Betti simplicial_betti(const Simplicial& k) {
  const auto edges = all_edges(k);
  std::map<std::array<int, 2>, std::size_t> edge_index;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_index[edges[i]] = i;

  std::vector<Row> d1(edges.size(), Row(static_cast<std::size_t>(k.vertex_count), false));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    d1[i][static_cast<std::size_t>(edges[i][0])] = true;
    d1[i][static_cast<std::size_t>(edges[i][1])] = true;
  }
  std::vector<Row> d2(k.triangles.size(), Row(edges.size(), false));
  for (std::size_t i = 0; i < k.triangles.size(); ++i) {
    const auto& t = k.triangles[i];
    for (auto [a, b] : {std::pair{t[0], t[1]}, {t[1], t[2]}, {t[0], t[2]}})
      d2[i][edge_index.at({std::min(a, b), std::max(a, b)})] = true;
  }
  const int r1 = rank_mod2(d1), r2 = rank_mod2(d2);
  Z2Betti b;
  b.b0 = k.vertex_count - r1;
  b.b1 = static_cast<int>(edges.size()) - r1 - r2;
  b.b2 = static_cast<int>(k.triangles.size()) - r2;
  return b;
}

int simplicial_euler(const Simplicial& k) {
  return k.vertex_count - static_cast<int>(all_edges(k).size()) + static_cast<int>(k.triangles.size());
}

Simplicial theta_triangulation() {
  // Triangle 0-1-2 is the triple circle; 3, 4 and 5 are cone points.
  Simplicial k;
  k.vertex_count = 6;
  for (int apex = 3; apex < 6; ++apex)
    for (int i = 0; i < 3; ++i) k.triangles.push_back({i, (i + 1) % 3, apex});
  return k;
}

Simplicial sphere_triangulation() {
  Simplicial k;
  k.vertex_count = 4;
  k.triangles = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return k;
}

Simplicial torus_triangulation() {
  Simplicial k;
  k.vertex_count = 9;
  auto v = [](int i, int j) { return ((i + 3) % 3) * 3 + (j + 3) % 3; };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      k.triangles.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      k.triangles.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  return k;
}

int euler_from_counts(const BornMap& c) {
  const CurveArrangement& a = c.arrangement;
  std::map<std::string, std::string> edge_to_arc;
  for (const auto& [arc, edge] : c.arc_to_edge) edge_to_arc[edge] = arc;
  auto count = [&](const std::string& f) { return a.find_face(f)->count; };

  // Boundary cycles per face: walk darts keeping the face on the left. At a
  // crossing the next dart leaves along the clockwise neighbour of the
  // arriving end.
  std::map<std::string, int> cycles;
  std::set<std::pair<std::string, bool>> seen;
  for (const auto& e : a.edges) {
    if (e.tail.empty()) {
      ++cycles[e.left];
      ++cycles[e.right];
      continue;
    }
    for (bool forward : {true, false}) {
      if (seen.count({e.id, forward})) continue;
      const std::string face = forward ? e.left : e.right;
      std::pair<std::string, bool> dart{e.id, forward};
      while (!seen.count(dart)) {
        seen.insert(dart);
        const ArrEdge* de = a.find_edge(dart.first);
        const Crossing* x = a.find_crossing(dart.second ? de->head : de->tail);
        const EdgeEnd arriving{dart.first, dart.second};
        const auto it = std::find(x->ends.begin(), x->ends.end(), arriving);
        const std::size_t k = static_cast<std::size_t>(it - x->ends.begin());
        const EdgeEnd& leave = x->ends[(k + 3) % 4];
        dart = {leave.edge, !leave.head};
      }
      ++cycles[face];
    }
  }

  int chi = 0;
  for (const auto& f : a.faces) {
    const int b = cycles[f.id];
    chi += f.count * (f.unbounded ? 1 - b : 2 - b);
  }
  for (const auto& e : a.edges) {
    if (e.tail.empty()) continue;
    const BranchArc* arc = c.polyhedron.find_arc(edge_to_arc.at(e.id));
    const int lo = std::min(count(e.left), count(e.right)), hi = std::max(count(e.left), count(e.right));
    chi -= arc->kind == ArcKind::Triple ? lo : hi;
  }
  for (const auto& x : a.crossings) {
    int lo = 1 << 30;
    for (const auto& end : x.ends) {
      const ArrEdge* e = a.find_edge(end.edge);
      lo = std::min({lo, count(e->left), count(e->right)});
    }
    chi += lo;
  }
  return chi;
}

bool brute_orientable(const SimplePolyhedron& p, const std::vector<std::string>& sheets) {
  const std::set<std::string> chosen(sheets.begin(), sheets.end());
  for (const auto& s : sheets)
    if (!p.find_sheet(s)->orientable) return false;
  std::vector<std::tuple<std::string, std::string, int>> constraints;
  for (const auto& arc : p.arcs) {
    std::vector<const SlotFlag*> used;
    for (const auto& f : arc.slots)
      if (chosen.count(f.sheet)) used.push_back(&f);
    if (used.size() != 2) continue;
    // The two sheets must induce opposite orientations on the arc.
    constraints.push_back({used[0]->sheet, used[1]->sheet, -wing_dir(p, *used[0]) * wing_dir(p, *used[1])});
  }
  return satisfiable(sheets, constraints);
}

std::set<std::vector<std::string>> brute_closed_surfaces(const SimplePolyhedron& p) {
  std::set<std::vector<std::string>> out;
  const std::size_t n = p.sheets.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::set<std::string> chosen;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) chosen.insert(p.sheets[i].id);
    bool closed = true;
    std::map<std::string, std::string> parent;
    for (const auto& s : chosen) parent[s] = s;
    std::function<std::string(const std::string&)> find = [&](const std::string& s) {
      return parent[s] == s ? s : parent[s] = find(parent[s]);
    };
    for (const auto& arc : p.arcs) {
      std::vector<std::string> used;
      for (const auto& f : arc.slots)
        if (chosen.count(f.sheet)) used.push_back(f.sheet);
      const std::size_t want = arc.kind == ArcKind::Triple ? 2 : 0;
      if (!used.empty() && used.size() != want) closed = false;
      for (std::size_t k = 1; k < used.size(); ++k) parent[find(used[k])] = find(used[0]);
    }
    if (!closed) continue;
    std::set<std::string> roots;
    for (const auto& s : chosen) roots.insert(find(s));
    if (roots.size() == 1) out.insert({chosen.begin(), chosen.end()});
  }
  return out;
}

bool brute_graph_orientable(const IncidenceGraph& g) {
  std::vector<std::tuple<std::string, std::string, int>> constraints;
  for (const auto& e : g.edges) constraints.push_back({e.u, e.v, e.parity});
  return satisfiable(g.vertices, constraints);
}

}  // namespace spine::testing
