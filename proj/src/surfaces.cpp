#include "spine/surfaces.hpp"

#include <algorithm>
#include <set>

#include "parity_union_find.hpp"

namespace spine {

namespace {

int wing_dir(const SimplePolyhedron& p, const SlotFlag& f) {
  const SheetSpec* s = p.find_sheet(f.sheet);
  return s->circuits[static_cast<std::size_t>(f.circuit)][static_cast<std::size_t>(f.position)].dir;
}

void require_normal(const SimplePolyhedron& p) {
  if (!is_normal(p)) throw Error("NotNormal", "operation requires trivial monodromy on every arc");
}

}  // namespace

SurfaceSelection selection_from_sheets(const SimplePolyhedron& p, std::vector<std::string> sheets) {
  std::sort(sheets.begin(), sheets.end());
  sheets.erase(std::unique(sheets.begin(), sheets.end()), sheets.end());
  SurfaceSelection sel;
  sel.sheets = sheets;
  const std::set<std::string> chosen(sheets.begin(), sheets.end());
  for (const auto& a : p.arcs) {
    std::vector<int> slots;
    for (std::size_t s = 0; s < a.slots.size(); ++s)
      if (chosen.count(a.slots[s].sheet)) slots.push_back(static_cast<int>(s));
    if (!slots.empty()) sel.arc_slots[a.id] = slots;
  }
  return sel;
}

std::vector<SignConstraint> selection_constraints(const SimplePolyhedron& p,
                                                  const SurfaceSelection& sel) {
  std::vector<SignConstraint> out;
  for (const auto& [arc_id, slots] : sel.arc_slots) {
    if (slots.size() != 2) continue;
    const BranchArc& a = *p.find_arc(arc_id);
    const SlotFlag& f0 = a.slots[static_cast<std::size_t>(slots[0])];
    const SlotFlag& f1 = a.slots[static_cast<std::size_t>(slots[1])];
    // sigma_u * d_u == -sigma_v * d_v
    out.push_back({f0.sheet, f1.sheet, -wing_dir(p, f0) * wing_dir(p, f1)});
  }
  return out;
}

ValidationReport check_selection(const SimplePolyhedron& p, const SurfaceSelection& sel) {
  ValidationReport r;
  if (sel.sheets.empty()) r.add("NotClosed", "empty selection");
  for (const auto& s : sel.sheets)
    if (p.find_sheet(s) == nullptr) r.add("UnknownSheet", "selection cites unknown sheet " + s);
  if (!r.ok()) return r;
  const SurfaceSelection induced = selection_from_sheets(p, sel.sheets);
  if (induced.sheets.size() != sel.sheets.size()) r.add("NotClosed", "duplicate sheets in selection");
  if (induced.arc_slots != sel.arc_slots)
    r.add("NotClosed", "arc slot choices disagree with the selected sheets");
  for (const auto& [arc_id, slots] : induced.arc_slots) {
    const BranchArc& a = *p.find_arc(arc_id);
    if (a.kind == ArcKind::Boundary)
      r.add("NotClosed", "selection reaches boundary arc " + arc_id);
    else if (slots.size() != 2)
      r.add("NotClosed", "arc " + arc_id + " has " + std::to_string(slots.size()) +
                             " selected wings");
  }
  if (!r.ok()) return r;

  std::map<std::string, std::size_t> index;
  for (const auto& s : sel.sheets) index.emplace(s, index.size());
  detail::ParityUnionFind uf(index.size());
  for (const auto& c : selection_constraints(p, sel)) uf.unite(index[c.u], index[c.v], 0);
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < index.size(); ++i) roots.insert(uf.find(i).first);
  if (roots.size() != 1) r.add("Disconnected", "selection has " + std::to_string(roots.size()) +
                                                   " components");
  return r;
}

int selection_euler(const SimplePolyhedron& p, const SurfaceSelection& sel) {
  int chi = 0;
  for (const auto& s : sel.sheets) chi += p.find_sheet(s)->euler_characteristic();
  std::set<std::string> used_vertices;
  for (const auto& [arc_id, slots] : sel.arc_slots) {
    const BranchArc& a = *p.find_arc(arc_id);
    if (a.closed()) continue;
    --chi;
    for (const auto& e : *a.endpoints) used_vertices.insert(e.vertex);
  }
  return chi + static_cast<int>(used_vertices.size());
}

SurfaceType surface_orientability(const SimplePolyhedron& p, const SurfaceSelection& sel) {
  require_normal(p);
  const ValidationReport check = check_selection(p, sel);
  if (!check.ok())
    throw Error(check.issues.front().code, check.issues.front().message);
  const int chi = selection_euler(p, sel);
  bool orientable = std::all_of(sel.sheets.begin(), sel.sheets.end(),
                                [&](const std::string& s) { return p.find_sheet(s)->orientable; });
  if (orientable) {
    std::map<std::string, std::size_t> index;
    for (const auto& s : sel.sheets) index.emplace(s, index.size());
    detail::ParityUnionFind uf(index.size());
    for (const auto& c : selection_constraints(p, sel)) {
      if (!uf.unite(index[c.u], index[c.v], c.parity > 0 ? 0 : 1)) {
        orientable = false;
        break;
      }
    }
  }
  return orientable ? SurfaceType{true, (2 - chi) / 2} : SurfaceType{false, 2 - chi};
}

SurfaceSearch find_closed_surfaces(const SimplePolyhedron& p, long bound) {
  require_normal(p);
  if (bound <= 0) throw Error("BadBound", "bound must be positive");
  SurfaceSearch out;

  std::map<std::string, std::size_t> sheet_index;
  for (const auto& s : p.sheets) sheet_index.emplace(s.id, sheet_index.size());
  const std::size_t n = p.sheets.size();

  std::vector<bool> candidate(n, true);
  for (const auto& a : p.arcs)
    if (a.kind == ArcKind::Boundary)
      for (const auto& f : a.slots) candidate[sheet_index.at(f.sheet)] = false;

  // Per arc: how many of its wings each sheet owns, and the last sheet index
  // deciding it.
  struct ArcInfo {
    std::map<std::size_t, int> owners;
    std::size_t last = 0;
  };
  std::vector<ArcInfo> arcs;
  std::vector<std::vector<std::size_t>> arcs_of(n), closing(n);
  for (const auto& a : p.arcs) {
    if (a.kind != ArcKind::Triple) continue;
    ArcInfo info;
    for (const auto& f : a.slots) {
      const std::size_t si = sheet_index.at(f.sheet);
      ++info.owners[si];
      info.last = std::max(info.last, si);
    }
    const std::size_t ai = arcs.size();
    for (auto& [si, _] : info.owners) arcs_of[si].push_back(ai);
    closing[info.last].push_back(ai);
    arcs.push_back(std::move(info));
  }

  std::vector<int> count(arcs.size(), 0);
  std::vector<bool> chosen(n, false);

  auto emit = [&] {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i)
      if (chosen[i]) ids.push_back(p.sheets[i].id);
    if (ids.empty()) return;
    SurfaceSelection sel = selection_from_sheets(p, ids);
    if (!check_selection(p, sel).ok()) return;
    const SurfaceType t = surface_orientability(p, sel);
    sel.orientable = t.orientable;
    sel.euler = selection_euler(p, sel);
    out.selections.push_back(std::move(sel));
  };

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (out.truncated) return;
    if (++out.examined > bound) {
      out.truncated = true;
      return;
    }
    if (i == n) {
      emit();
      return;
    }
    for (int take = 0; take < 2; ++take) {
      if (take == 1 && !candidate[i]) continue;
      chosen[i] = take == 1;
      bool feasible = true;
      if (take == 1) {
        for (std::size_t ai : arcs_of[i]) {
          count[ai] += arcs[ai].owners.at(i);
          if (count[ai] > 2) feasible = false;
        }
      }
      for (std::size_t ai : closing[i])
        if (count[ai] != 0 && count[ai] != 2) feasible = false;
      if (feasible) self(self, i + 1);
      if (take == 1)
        for (std::size_t ai : arcs_of[i]) count[ai] -= arcs[ai].owners.at(i);
      chosen[i] = false;
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace spine
