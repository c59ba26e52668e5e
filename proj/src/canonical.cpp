#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

#include "spine/gallery.hpp"
#include "spine/io.hpp"

namespace spine {

namespace {

using Colours = std::map<std::string, int>;
using Signatures = std::map<std::string, std::vector<int>>;

struct Partition {
  Colours face;
  Colours edge;
  Colours sheet;
};

// Replaces signatures by their rank among the distinct signatures.
std::pair<Colours, std::size_t> compress(const Signatures& sig) {
  std::set<std::vector<int>> distinct;
  for (const auto& [id, v] : sig) distinct.insert(v);
  Colours colour;
  for (const auto& [id, v] : sig)
    colour[id] = static_cast<int>(std::distance(distinct.begin(), distinct.find(v)));
  return {colour, distinct.size()};
}

std::size_t class_count(const Colours& c) {
  std::set<int> seen;
  for (const auto& [id, v] : c) seen.insert(v);
  return seen.size();
}

// Smallest colour shared by several members, as (colour, members).
std::optional<std::vector<std::string>> first_tie(const Colours& c) {
  std::map<int, std::vector<std::string>> classes;
  for (const auto& [id, v] : c) classes[v].push_back(id);
  for (const auto& [v, members] : classes)
    if (members.size() > 1) return members;
  return std::nullopt;
}

constexpr int kLeafLimit = 512;

class Canonizer {
 public:
  explicit Canonizer(const BornMap& c) : c_(c), a_(c.arrangement), p_(c.polyhedron) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : a_.edges) {
      adj[e.left].push_back(e.right);
      adj[e.right].push_back(e.left);
    }
    std::deque<std::string> q;
    if (const Face* u = a_.unbounded_face()) {
      dist_[u->id] = 0;
      q.push_back(u->id);
    }
    while (!q.empty()) {
      const std::string f = q.front();
      q.pop_front();
      for (const auto& g : adj[f])
        if (!dist_.count(g)) {
          dist_[g] = dist_[f] + 1;
          q.push_back(g);
        }
    }
    for (const auto& [arc, edge] : c_.arc_to_edge) arc_of_edge_[edge] = p_.find_arc(arc);
  }

  BornMap run() {
    search(refine(initial()));
    return best_->second;
  }

 private:
  Partition initial() const {
    Signatures face_sig, edge_sig, sheet_sig;
    for (const auto& f : a_.faces) face_sig[f.id] = {dist_.count(f.id) ? dist_.at(f.id) : -1, f.count, f.unbounded ? 1 : 0};
    for (const auto& e : a_.edges) {
      const Curve* cv = a_.find_curve(e.curve);
      std::vector<int> sig{cv && cv->is_branch() ? 1 : 0, e.loop() ? 1 : 0};
      if (auto it = arc_of_edge_.find(e.id); it != arc_of_edge_.end() && it->second) {
        sig.push_back(it->second->kind == ArcKind::Triple ? 1 : 0);
        sig.push_back(it->second->monodromy == Monodromy::Swap ? 1 : 0);
      }
      edge_sig[e.id] = sig;
    }
    for (const auto& sh : p_.sheets)
      sheet_sig[sh.id] = {sh.orientable ? 1 : 0, sh.genus, static_cast<int>(sh.circuits.size())};
    return {compress(face_sig).first, compress(edge_sig).first, compress(sheet_sig).first};
  }

  // Splits classes by their neighbourhoods until the partition is stable.
  Partition refine(Partition part) const {
    std::size_t classes = class_count(part.face) + class_count(part.edge) + class_count(part.sheet);
    for (;;) {
      Signatures next_face, next_edge, next_sheet;
      std::map<std::string, std::vector<std::vector<int>>> around;
      for (const auto& e : a_.edges) {
        around[e.left].push_back({0, part.edge[e.id], part.face[e.right]});
        around[e.right].push_back({1, part.edge[e.id], part.face[e.left]});
        std::vector<int> sig{part.edge[e.id], part.face[e.left], part.face[e.right]};
        if (auto it = arc_of_edge_.find(e.id); it != arc_of_edge_.end() && it->second) {
          std::vector<std::vector<int>> met;
          for (const auto& flag : it->second->slots) {
            const SheetSpec* sh = p_.find_sheet(flag.sheet);
            int dir = 0;
            if (sh && flag.circuit >= 0 && flag.circuit < static_cast<int>(sh->circuits.size()))
              for (const auto& w : sh->circuits[static_cast<std::size_t>(flag.circuit)])
                if (w.arc == it->second->id) dir = w.dir;
            met.push_back({part.sheet.count(flag.sheet) ? part.sheet[flag.sheet] : -1, dir});
          }
          std::sort(met.begin(), met.end());
          for (const auto& m : met) sig.insert(sig.end(), m.begin(), m.end());
        }
        next_edge[e.id] = sig;
      }
      for (const auto& f : a_.faces) {
        auto& list = around[f.id];
        std::sort(list.begin(), list.end());
        std::vector<int> sig{part.face[f.id]};
        for (const auto& item : list) sig.insert(sig.end(), item.begin(), item.end());
        next_face[f.id] = sig;
      }
      // The other ends at each crossing, read counter-clockwise from this one.
      std::map<std::string, std::vector<std::vector<int>>> ends_of;
      for (const auto& x : a_.crossings)
        for (std::size_t k = 0; k < x.ends.size(); ++k) {
          std::vector<int> seen{x.ends[k].head ? 1 : 0};
          for (std::size_t j = 1; j < x.ends.size(); ++j) {
            const EdgeEnd& other = x.ends[(k + j) % x.ends.size()];
            seen.push_back(part.edge[other.edge] * 2 + (other.head ? 1 : 0));
          }
          ends_of[x.ends[k].edge].push_back(seen);
        }
      for (auto& [edge, list] : ends_of) {
        std::sort(list.begin(), list.end());
        for (const auto& seen : list) {
          next_edge[edge].push_back(-1);
          next_edge[edge].insert(next_edge[edge].end(), seen.begin(), seen.end());
        }
      }
      for (const auto& sh : p_.sheets) {
        std::vector<std::vector<int>> circuits;
        for (const auto& circuit : sh.circuits) {
          std::vector<int> cyc;
          for (const auto& w : circuit)
            if (auto it = c_.arc_to_edge.find(w.arc); it != c_.arc_to_edge.end())
              cyc.push_back(part.edge[it->second] * 2 + (w.dir > 0 ? 1 : 0));
          std::sort(cyc.begin(), cyc.end());
          circuits.push_back(cyc);
        }
        std::sort(circuits.begin(), circuits.end());
        std::vector<int> sig{part.sheet[sh.id]};
        for (const auto& cyc : circuits) {
          sig.push_back(-1);
          sig.insert(sig.end(), cyc.begin(), cyc.end());
        }
        next_sheet[sh.id] = sig;
      }
      auto [fc, fn] = compress(next_face);
      auto [ec, en] = compress(next_edge);
      auto [sc, sn] = compress(next_sheet);
      part = {fc, ec, sc};
      if (fn + en + sn == classes) return part;
      classes = fn + en + sn;
    }
  }

  // Individualises each member of the first tied class in turn and keeps the
  // smallest relabelled map.
  void search(const Partition& part) {
    if (leaves_ >= kLeafLimit) return;
    Colours Partition::*which = nullptr;
    std::optional<std::vector<std::string>> tie = first_tie(part.face);
    if (tie) which = &Partition::face;
    else if ((tie = first_tie(part.edge))) which = &Partition::edge;
    else if ((tie = first_tie(part.sheet))) which = &Partition::sheet;
    if (!tie) {
      ++leaves_;
      BornMap out = build(part);
      std::string text = emit_spoly(out.polyhedron) + emit_arr(out.arrangement, out.arc_to_edge, out.vertex_to_crossing);
      if (!best_ || text < best_->first) best_ = std::pair(std::move(text), std::move(out));
      return;
    }
    for (const auto& member : *tie) {
      Partition next = part;
      for (auto& [id, v] : next.*which) v = 2 * v + (id == member ? 0 : 1);
      search(refine(next));
    }
  }

  BornMap build(const Partition& part) const {
    const auto& a = a_;
    const auto& p = p_;
    std::vector<const Face*> faces;
    for (const auto& f : a.faces) faces.push_back(&f);
    std::stable_sort(faces.begin(), faces.end(),
                     [&](const Face* x, const Face* y) { return part.face.at(x->id) < part.face.at(y->id); });
    std::map<std::string, std::string> face_name;
    std::map<std::string, int> face_rank;
    for (std::size_t k = 0; k < faces.size(); ++k) {
      face_name[faces[k]->id] = "f" + std::to_string(k);
      face_rank[faces[k]->id] = static_cast<int>(k);
    }
    std::vector<const ArrEdge*> edges;
    for (const auto& e : a.edges) edges.push_back(&e);
    std::stable_sort(edges.begin(), edges.end(), [&](const ArrEdge* x, const ArrEdge* y) {
      return std::tuple(face_rank[x->left], face_rank[x->right], part.edge.at(x->id)) <
             std::tuple(face_rank[y->left], face_rank[y->right], part.edge.at(y->id));
    });
  std::map<std::string, std::string> edge_name, curve_name, arc_name;
  std::map<std::string, int> arc_rank;
  std::map<std::string, int> edge_rank;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    edge_name[edges[k]->id] = "e" + std::to_string(k);
    edge_rank[edges[k]->id] = static_cast<int>(k);
    if (!curve_name.count(edges[k]->curve))
      curve_name[edges[k]->curve] = "c" + std::to_string(curve_name.size());
  }
  for (const auto& [arc, edge] : c_.arc_to_edge) {
    auto it = std::find_if(edges.begin(), edges.end(), [&](const ArrEdge* e) { return e->id == edge; });
    const int k = static_cast<int>(it - edges.begin());
    arc_name[arc] = "a" + std::to_string(k);
    arc_rank[arc] = k;
  }
  std::map<std::string, std::string> crossing_name, vertex_name;
  {
    std::vector<std::pair<std::vector<int>, std::string>> keyed;
    for (const auto& x : a.crossings) {
      std::vector<int> faces_key, ends_key;
      for (const auto& end : x.ends) {
        faces_key.push_back(face_rank[a.find_edge(end.edge)->left]);
        ends_key.push_back(edge_rank[end.edge] * 2 + (end.head ? 1 : 0));
      }
      std::sort(faces_key.begin(), faces_key.end());
      std::rotate(ends_key.begin(), std::min_element(ends_key.begin(), ends_key.end()), ends_key.end());
      faces_key.insert(faces_key.end(), ends_key.begin(), ends_key.end());
      keyed.push_back({faces_key, x.id});
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t k = 0; k < keyed.size(); ++k) crossing_name[keyed[k].second] = "x" + std::to_string(k);
    for (const auto& [v, x] : c_.vertex_to_crossing) vertex_name[v] = "v" + crossing_name[x].substr(1);
  }

  auto sheet_key = [&](const SheetSpec& s) {
    std::vector<std::pair<int, int>> key;
    for (const auto& circuit : s.circuits)
      for (const auto& w : circuit) key.push_back({arc_rank[w.arc], w.dir});
    std::sort(key.begin(), key.end());
    return std::tuple(key, s.orientable, s.genus);
  };
  std::vector<const SheetSpec*> sheets;
  for (const auto& s : p.sheets) sheets.push_back(&s);
  std::stable_sort(sheets.begin(), sheets.end(), [&](const SheetSpec* x, const SheetSpec* y) {
    return std::pair(sheet_key(*x), part.sheet.at(x->id)) < std::pair(sheet_key(*y), part.sheet.at(y->id));
  });
  std::map<std::string, std::string> sheet_name;
  std::map<std::string, int> sheet_rank;
  for (std::size_t k = 0; k < sheets.size(); ++k) {
    sheet_name[sheets[k]->id] = "s" + std::to_string(k);
    sheet_rank[sheets[k]->id] = static_cast<int>(k);
  }

  // Closed arcs get their slots renumbered by sheet rank; arcs at vertices
  // keep theirs since vertex roles refer to them.
  std::map<std::pair<std::string, int>, int> slot_map;
  for (const auto& arc : p.arcs) {
    std::vector<int> order(arc.slots.size());
    std::iota(order.begin(), order.end(), 0);
    if (arc.closed())
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return sheet_rank[arc.slots[static_cast<std::size_t>(x)].sheet] <
               sheet_rank[arc.slots[static_cast<std::size_t>(y)].sheet];
      });
    for (std::size_t k = 0; k < order.size(); ++k) slot_map[{arc.id, order[k]}] = static_cast<int>(k);
  }

  BornMap out;
  SimplePolyhedron& op = out.polyhedron;
  for (const SheetSpec* s : sheets) {
    SheetSpec ns{sheet_name[s->id], s->orientable, s->genus, {}};
    for (const auto& circuit : s->circuits) {
      Circuit nc;
      for (const auto& w : circuit) nc.push_back({arc_name[w.arc], slot_map[{w.arc, w.slot}], w.dir});
      std::rotate(nc.begin(), std::min_element(nc.begin(), nc.end(), [](const WingRef& x, const WingRef& y) {
                    return std::tuple(x.arc, x.slot) < std::tuple(y.arc, y.slot);
                  }), nc.end());
      ns.circuits.push_back(std::move(nc));
    }
    std::sort(ns.circuits.begin(), ns.circuits.end(), [](const Circuit& x, const Circuit& y) {
      return std::tuple(x.front().arc, x.front().slot) < std::tuple(y.front().arc, y.front().slot);
    });
    op.sheets.push_back(std::move(ns));
  }
  for (const auto& arc : p.arcs) {
    BranchArc na = arc;
    na.id = arc_name[arc.id];
    if (na.endpoints)
      for (auto& end : *na.endpoints) end.vertex = vertex_name[end.vertex];
    op.arcs.push_back(std::move(na));
  }
  std::sort(op.arcs.begin(), op.arcs.end(), [&](const BranchArc& x, const BranchArc& y) {
    return std::stoi(x.id.substr(1)) < std::stoi(y.id.substr(1));
  });
  for (const auto& v : p.vertices) {
    VertexSpec nv = v;
    nv.id = vertex_name[v.id];
    op.vertices.push_back(std::move(nv));
  }
  std::sort(op.vertices.begin(), op.vertices.end(), [](const VertexSpec& x, const VertexSpec& y) {
    return std::stoi(x.id.substr(1)) < std::stoi(y.id.substr(1));
  });
  assign_slot_flags(op);

  CurveArrangement& oa = out.arrangement;
  for (const Face* f : faces) oa.faces.push_back({face_name[f->id], f->count, f->unbounded});
  for (const ArrEdge* e : edges)
    oa.edges.push_back({edge_name[e->id], curve_name[e->curve],
                        e->tail.empty() ? "" : crossing_name[e->tail],
                        e->head.empty() ? "" : crossing_name[e->head], face_name[e->left],
                        face_name[e->right]});
  for (const auto& x : a.crossings) {
    Crossing nx{crossing_name[x.id], {}};
    for (const auto& end : x.ends) nx.ends.push_back({edge_name[end.edge], end.head});
    std::rotate(nx.ends.begin(), std::min_element(nx.ends.begin(), nx.ends.end(), [](const EdgeEnd& l, const EdgeEnd& r) {
                  return std::pair(std::stoi(l.edge.substr(1)), l.head) < std::pair(std::stoi(r.edge.substr(1)), r.head);
                }), nx.ends.end());
    oa.crossings.push_back(std::move(nx));
  }
  std::sort(oa.crossings.begin(), oa.crossings.end(), [](const Crossing& x, const Crossing& y) {
    return std::stoi(x.id.substr(1)) < std::stoi(y.id.substr(1));
  });
  for (const auto& cv : a.curves) {
    Curve nc{curve_name[cv.id], cv.is_branch() ? "branch" : "aux", {}};
    for (const auto& e : cv.edges) nc.edges.push_back(edge_name[e]);
    std::rotate(nc.edges.begin(), std::min_element(nc.edges.begin(), nc.edges.end(), [](const std::string& x, const std::string& y) {
                  return std::stoi(x.substr(1)) < std::stoi(y.substr(1));
                }), nc.edges.end());
    oa.curves.push_back(std::move(nc));
  }
  std::sort(oa.curves.begin(), oa.curves.end(), [](const Curve& x, const Curve& y) {
    return std::stoi(x.id.substr(1)) < std::stoi(y.id.substr(1));
  });
  for (const auto& [arc, edge] : c_.arc_to_edge) out.arc_to_edge[arc_name[arc]] = edge_name[edge];
  for (const auto& [v, x] : c_.vertex_to_crossing) out.vertex_to_crossing[vertex_name[v]] = crossing_name[x];
  return out;
  }

  const BornMap& c_;
  const CurveArrangement& a_;
  const SimplePolyhedron& p_;
  std::map<std::string, int> dist_;
  std::map<std::string, const BranchArc*> arc_of_edge_;
  int leaves_ = 0;
  std::optional<std::pair<std::string, BornMap>> best_;
};

}  // namespace

BornMap canonical_form(const BornMap& c) { return Canonizer(c).run(); }

}  // namespace spine
