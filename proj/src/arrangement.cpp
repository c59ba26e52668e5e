#include "spine/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace spine {

namespace {

template <class T>
const T* find_by_id(const std::vector<T>& items, const std::string& id) {
  auto it = std::find_if(items.begin(), items.end(), [&](const T& t) { return t.id == id; });
  return it == items.end() ? nullptr : &*it;
}

struct StringUnionFind {
  std::map<std::string, std::string> parent;
  void add(const std::string& x) { parent.emplace(x, x); }
  std::string find(std::string x) {
    while (parent.at(x) != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(const std::string& a, const std::string& b) { parent[find(a)] = find(b); }
  std::size_t classes() {
    std::set<std::string> roots;
    for (auto& [k, _] : parent) roots.insert(find(k));
    return roots.size();
  }
};

// Face on the counter-clockwise side just after / just before an edge end.
std::string face_after(const ArrEdge& e, bool head) { return head ? e.right : e.left; }
std::string face_before(const ArrEdge& e, bool head) { return head ? e.left : e.right; }

}  // namespace

const Crossing* CurveArrangement::find_crossing(const std::string& id) const {
  return find_by_id(crossings, id);
}
const ArrEdge* CurveArrangement::find_edge(const std::string& id) const {
  return find_by_id(edges, id);
}
const Curve* CurveArrangement::find_curve(const std::string& id) const {
  return find_by_id(curves, id);
}
const Face* CurveArrangement::find_face(const std::string& id) const { return find_by_id(faces, id); }
Face* CurveArrangement::find_face(const std::string& id) {
  auto it = std::find_if(faces.begin(), faces.end(), [&](const Face& f) { return f.id == id; });
  return it == faces.end() ? nullptr : &*it;
}
const Face* CurveArrangement::unbounded_face() const {
  auto it = std::find_if(faces.begin(), faces.end(), [](const Face& f) { return f.unbounded; });
  return it == faces.end() ? nullptr : &*it;
}

CurveArrangement empty_arrangement(int count, std::string face_id) {
  CurveArrangement a;
  a.faces.push_back({std::move(face_id), count, true});
  return a;
}

int curve_components(const CurveArrangement& a) {
  StringUnionFind uf;
  for (const auto& e : a.edges) uf.add("e:" + e.id);
  for (const auto& x : a.crossings) {
    uf.add("x:" + x.id);
    for (const auto& end : x.ends)
      if (uf.parent.count("e:" + end.edge)) uf.unite("e:" + end.edge, "x:" + x.id);
  }
  return static_cast<int>(uf.classes());
}

ValidationReport validate_arrangement(const CurveArrangement& a) {
  ValidationReport r;
  std::set<std::string> ids;
  for (const auto& x : a.crossings)
    if (!ids.insert("x:" + x.id).second) r.add("DuplicateId", "crossing " + x.id);
  for (const auto& e : a.edges)
    if (!ids.insert("e:" + e.id).second) r.add("DuplicateId", "edge " + e.id);
  for (const auto& c : a.curves)
    if (!ids.insert("c:" + c.id).second) r.add("DuplicateId", "curve " + c.id);
  for (const auto& f : a.faces) {
    if (!ids.insert("f:" + f.id).second) r.add("DuplicateId", "face " + f.id);
    if (f.count < 0) r.add("NegativeCount", "face " + f.id + " has a negative count");
  }
  const auto unbounded = std::count_if(a.faces.begin(), a.faces.end(),
                                       [](const Face& f) { return f.unbounded; });
  if (unbounded != 1)
    r.add("UnboundedFace", "expected exactly one unbounded face, found " + std::to_string(unbounded));

  for (const auto& e : a.edges) {
    if (a.find_curve(e.curve) == nullptr) r.add("UnknownCurve", "edge " + e.id + " cites " + e.curve);
    if (a.find_face(e.left) == nullptr || a.find_face(e.right) == nullptr)
      r.add("UnknownFace", "edge " + e.id + " cites an unknown face");
    else if (e.left == e.right)
      r.add("EdgeSidesEqual", "edge " + e.id + " has the same face on both sides");
    if (e.tail.empty() != e.head.empty())
      r.add("DanglingEdge", "edge " + e.id + " has only one end at a crossing");
    for (const auto& x : {e.tail, e.head})
      if (!x.empty() && a.find_crossing(x) == nullptr)
        r.add("UnknownCrossing", "edge " + e.id + " cites crossing " + x);
  }
  if (!r.ok()) return r;

  std::map<std::string, int> edge_listed;
  for (const auto& c : a.curves) {
    if (c.edges.empty()) r.add("CurveOpen", "curve " + c.id + " has no edges");
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
      const ArrEdge* e = a.find_edge(c.edges[k]);
      if (e == nullptr) {
        r.add("UnknownEdge", "curve " + c.id + " cites edge " + c.edges[k]);
        continue;
      }
      ++edge_listed[e->id];
      if (e->curve != c.id) r.add("CurveOpen", "edge " + e->id + " is listed by curve " + c.id);
      const ArrEdge* next = a.find_edge(c.edges[(k + 1) % c.edges.size()]);
      if (next == nullptr) continue;
      if (e->loop() && c.edges.size() != 1)
        r.add("CurveOpen", "loop edge " + e->id + " shares curve " + c.id);
      if (!e->loop() && e->head != next->tail)
        r.add("CurveOpen", "curve " + c.id + " breaks after edge " + e->id);
    }
  }
  for (const auto& e : a.edges)
    if (edge_listed[e.id] != 1)
      r.add("CurveOpen", "edge " + e.id + " is listed " + std::to_string(edge_listed[e.id]) +
                             " times by curves");

  std::map<std::pair<std::string, bool>, int> end_seen;
  for (const auto& x : a.crossings) {
    if (x.ends.size() != 4) {
      r.add("NotFourValent", "crossing " + x.id + " has " + std::to_string(x.ends.size()) + " ends");
      continue;
    }
    bool ends_ok = true;
    for (const auto& end : x.ends) {
      const ArrEdge* e = a.find_edge(end.edge);
      if (e == nullptr || (end.head ? e->head : e->tail) != x.id) {
        r.add("NotFourValent", "crossing " + x.id + " lists end " + end.edge +
                                   " that does not meet it");
        ends_ok = false;
        continue;
      }
      ++end_seen[{end.edge, end.head}];
    }
    if (!ends_ok) continue;
    for (int s = 0; s < 2; ++s) {
      const EdgeEnd& u = x.ends[static_cast<std::size_t>(s)];
      const EdgeEnd& v = x.ends[static_cast<std::size_t>(s + 2)];
      const ArrEdge* eu = a.find_edge(u.edge);
      const ArrEdge* ev = a.find_edge(v.edge);
      if (eu->curve != ev->curve || u.head == v.head)
        r.add("NotTransverse", "crossing " + x.id + " strand " + std::to_string(s) +
                                   " does not pass straight through");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      const EdgeEnd& u = x.ends[k];
      const EdgeEnd& v = x.ends[(k + 1) % 4];
      if (face_after(*a.find_edge(u.edge), u.head) != face_before(*a.find_edge(v.edge), v.head))
        r.add("FaceMismatch", "crossing " + x.id + " sector " + std::to_string(k) +
                                  " has inconsistent faces");
    }
  }
  for (const auto& e : a.edges) {
    if (e.loop()) continue;
    if (end_seen[{e.id, false}] != 1 || end_seen[{e.id, true}] != 1)
      r.add("DanglingEdge", "edge " + e.id + " is not attached at both crossings");
  }
  if (!r.ok()) return r;

  std::set<std::string> touched;
  for (const auto& e : a.edges) touched.insert({e.left, e.right});
  if (!a.edges.empty())
    for (const auto& f : a.faces)
      if (!touched.count(f.id)) r.add("IsolatedFace", "face " + f.id + " borders no edge");

  int loops = 0;
  for (const auto& e : a.edges) loops += e.loop() ? 1 : 0;
  const int v = static_cast<int>(a.crossings.size()) + loops;
  const int e = static_cast<int>(a.edges.size());
  const int f = static_cast<int>(a.faces.size());
  const int comps = curve_components(a);
  if (v - e + f != 1 + comps)
    r.add("EulerFormula", "V - E + F = " + std::to_string(v - e + f) + " but " +
                              std::to_string(comps) + " component(s) require " +
                              std::to_string(1 + comps));
  return r;
}

std::map<std::string, int> face_winding(const CurveArrangement& a,
                                        const std::map<std::string, int>& weight) {
  std::map<std::string, int> value;
  const Face* start = a.unbounded_face();
  if (start == nullptr) throw Error("UnboundedFace", "arrangement has no unbounded face");
  std::map<std::string, std::vector<std::pair<std::string, int>>> adj;
  for (const auto& e : a.edges) {
    auto it = weight.find(e.curve);
    const int w = it == weight.end() ? 0 : it->second;
    adj[e.right].push_back({e.left, w});
    adj[e.left].push_back({e.right, -w});
  }
  std::deque<std::string> queue{start->id};
  value[start->id] = 0;
  while (!queue.empty()) {
    const std::string f = queue.front();
    queue.pop_front();
    for (const auto& [g, w] : adj[f]) {
      auto it = value.find(g);
      if (it == value.end()) {
        value[g] = value[f] + w;
        queue.push_back(g);
      } else if (it->second != value[f] + w) {
        throw Error("InconsistentWinding", "face " + g + " gets two different values");
      }
    }
  }
  for (const auto& f : a.faces) value.emplace(f.id, 0);
  return value;
}

std::set<std::string> faces_inside(const CurveArrangement& a, const std::string& curve) {
  std::set<std::string> out;
  for (const auto& [f, w] : face_winding(a, {{curve, 1}}))
    if (w % 2 != 0) out.insert(f);
  return out;
}

std::vector<std::string> crossings_between(const CurveArrangement& a, const std::string& c1,
                                           const std::string& c2) {
  std::vector<std::string> out;
  for (const auto& x : a.crossings) {
    if (x.ends.size() != 4) continue;
    const std::string s0 = a.find_edge(x.ends[0].edge)->curve;
    const std::string s1 = a.find_edge(x.ends[1].edge)->curve;
    if ((s0 == c1 && s1 == c2) || (s0 == c2 && s1 == c1)) out.push_back(x.id);
  }
  return out;
}

Reduction reduce_to_base(const CurveArrangement& combined, const CurveArrangement& base,
                         const std::set<std::string>& removed_curves) {
  Reduction out;
  ValidationReport& r = out.report;

  StringUnionFind faces;
  for (const auto& f : combined.faces) faces.add(f.id);
  for (const auto& e : combined.edges)
    if (removed_curves.count(e.curve)) faces.unite(e.left, e.right);

  std::set<std::string> kept_crossings;
  for (const auto& x : combined.crossings) {
    const bool kept = std::all_of(x.ends.begin(), x.ends.end(), [&](const EdgeEnd& end) {
      return !removed_curves.count(combined.find_edge(end.edge)->curve);
    });
    if (kept) kept_crossings.insert(x.id);
  }
  std::set<std::string> base_crossings;
  for (const auto& x : base.crossings) base_crossings.insert(x.id);
  if (kept_crossings != base_crossings)
    r.add("ImageMismatch", "crossings among the remaining curves differ from the base");

  std::set<std::string> kept_curves, base_curves;
  for (const auto& c : combined.curves)
    if (!removed_curves.count(c.id)) kept_curves.insert(c.id);
  for (const auto& c : base.curves) base_curves.insert(c.id);
  if (kept_curves != base_curves)
    r.add("ImageMismatch", "remaining curves differ from the base curves");
  if (!r.ok()) return out;

  std::map<std::string, std::string> class_to_base, base_to_class;
  auto bind = [](std::map<std::string, std::string>& fwd, std::map<std::string, std::string>& bwd,
                 const std::string& cls, const std::string& bf) {
    auto f = fwd.find(cls);
    auto b = bwd.find(bf);
    if (f != fwd.end() && f->second != bf) return false;
    if (b != bwd.end() && b->second != cls) return false;
    fwd[cls] = bf;
    bwd[bf] = cls;
    return true;
  };

  for (const auto& bc : base.curves) {
    const Curve& cc = *combined.find_curve(bc.id);
    // Split the combined curve into segments between kept crossings.
    struct Segment {
      std::string tail, head;
      std::vector<std::string> edges;
    };
    std::vector<Segment> segs;
    std::size_t first = 0;
    for (std::size_t k = 0; k < cc.edges.size(); ++k) {
      const ArrEdge* e = combined.find_edge(cc.edges[k]);
      if (!e->loop() && kept_crossings.count(e->tail)) {
        first = k;
        break;
      }
    }
    const bool anchored = std::any_of(cc.edges.begin(), cc.edges.end(), [&](const std::string& id) {
      const ArrEdge* e = combined.find_edge(id);
      return !e->loop() && kept_crossings.count(e->tail);
    });
    if (!anchored) {
      segs.push_back({"", "", cc.edges});
    } else {
      for (std::size_t k = 0; k < cc.edges.size(); ++k) {
        const ArrEdge* e = combined.find_edge(cc.edges[(first + k) % cc.edges.size()]);
        if (kept_crossings.count(e->tail)) segs.push_back({e->tail, "", {}});
        segs.back().edges.push_back(e->id);
        if (kept_crossings.count(e->head)) segs.back().head = e->head;
      }
    }
    const std::size_t n = bc.edges.size();
    if (segs.size() != n) {
      r.add("ImageMismatch", "curve " + bc.id + " has a different number of edges after reduction");
      return out;
    }
    bool matched = false;
    for (std::size_t rot = 0; rot < n && !matched; ++rot) {
      auto fwd = class_to_base;
      auto bwd = base_to_class;
      std::map<std::string, std::string> edge_map;
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        const ArrEdge* be = base.find_edge(bc.edges[(k + rot) % n]);
        const Segment& s = segs[k];
        if (be->tail != s.tail || be->head != s.head) {
          ok = false;
          break;
        }
        for (const auto& eid : s.edges) {
          const ArrEdge* ce = combined.find_edge(eid);
          ok = ok && bind(fwd, bwd, faces.find(ce->left), be->left) &&
               bind(fwd, bwd, faces.find(ce->right), be->right);
          edge_map[eid] = be->id;
        }
      }
      if (ok) {
        matched = true;
        class_to_base = std::move(fwd);
        base_to_class = std::move(bwd);
        out.edge_to_base.insert(edge_map.begin(), edge_map.end());
      }
    }
    if (!matched) {
      r.add("ImageMismatch", "curve " + bc.id + " does not match its base edges and faces");
      return out;
    }
  }

  if (base.edges.empty()) {
    if (faces.classes() != 1 || base.faces.size() != 1) {
      r.add("ImageMismatch", "base has one face but the reduction does not");
      return out;
    }
    class_to_base[faces.find(combined.faces.front().id)] = base.faces.front().id;
  }
  for (const auto& f : combined.faces) {
    auto it = class_to_base.find(faces.find(f.id));
    if (it == class_to_base.end()) {
      r.add("ImageMismatch", "face " + f.id + " has no base face");
      continue;
    }
    const Face* bf = base.find_face(it->second);
    out.face_to_base[f.id] = bf->id;
    if (bf->count != f.count)
      r.add("CountMismatch", "face " + f.id + " count " + std::to_string(f.count) +
                                 " differs from base face " + bf->id);
    if (f.unbounded && !bf->unbounded)
      r.add("ImageMismatch", "unbounded face maps to bounded base face " + bf->id);
  }
  return out;
}

std::string add_loop_in_face(CurveArrangement& a, const std::string& face,
                             const std::string& curve_id, const std::string& source) {
  const Face* outer = a.find_face(face);
  if (outer == nullptr) throw Error("UnknownFace", "no face " + face);
  const std::string inner = curve_id + ".in";
  const std::string edge = curve_id + ".e";
  a.faces.push_back({inner, outer->count, false});
  a.edges.push_back({edge, curve_id, "", "", inner, face});
  a.curves.push_back({curve_id, source, {edge}});
  return inner;
}

void add_lens_across_loop(CurveArrangement& a, const std::string& loop_edge,
                          const std::string& curve_id, const std::string& source) {
  auto it = std::find_if(a.edges.begin(), a.edges.end(),
                         [&](const ArrEdge& e) { return e.id == loop_edge; });
  if (it == a.edges.end() || !it->loop())
    throw Error("UnknownEdge", loop_edge + " is not a crossing-free loop");
  const ArrEdge loop = *it;
  a.edges.erase(it);

  const std::string x1 = curve_id + ".x1", x2 = curve_id + ".x2";
  const std::string outer = loop.id + ".o", chord = loop.id + ".c";
  const std::string t1 = curve_id + ".t1", t2 = curve_id + ".t2";
  const std::string fl = curve_id + ".fl", fr = curve_id + ".fr";
  const int left_count = a.find_face(loop.left)->count;
  const int right_count = a.find_face(loop.right)->count;
  a.faces.push_back({fl, left_count, false});
  a.faces.push_back({fr, right_count, false});

  a.edges.push_back({outer, loop.curve, x1, x2, loop.left, loop.right});
  a.edges.push_back({chord, loop.curve, x2, x1, fl, fr});
  a.edges.push_back({t1, curve_id, x1, x2, fl, loop.left});
  a.edges.push_back({t2, curve_id, x2, x1, fr, loop.right});

  for (auto& c : a.curves)
    if (c.id == loop.curve) c.edges = {outer, chord};
  a.curves.push_back({curve_id, source, {t1, t2}});

  a.crossings.push_back({x1, {{outer, false}, {t1, false}, {chord, true}, {t2, true}}});
  a.crossings.push_back({x2, {{chord, false}, {t1, true}, {outer, true}, {t2, false}}});
}

}  // namespace spine
