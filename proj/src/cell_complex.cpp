#include "spine/cell_complex.hpp"

#include <map>

namespace spine {

CellComplex cellulate(const SimplePolyhedron& p) {
  require_valid(p);
  CellComplex k;
  std::map<std::string, int> vertex_cell;
  for (const auto& v : p.vertices) vertex_cell[v.id] = k.vertex_count++;

  std::map<std::string, int> arc_cell;
  std::map<std::string, int> loop_point;
  for (const auto& a : p.arcs) {
    if (a.closed()) {
      const int pt = k.vertex_count++;
      loop_point[a.id] = pt;
      arc_cell[a.id] = k.c1();
      k.edges.push_back({pt, pt});
    } else {
      arc_cell[a.id] = k.c1();
      k.edges.push_back({vertex_cell.at((*a.endpoints)[0].vertex),
                         vertex_cell.at((*a.endpoints)[1].vertex)});
    }
  }

  auto tail_point = [&](const WingRef& w) {
    const BranchArc& a = *p.find_arc(w.arc);
    if (a.closed()) return loop_point.at(a.id);
    return vertex_cell.at((*a.endpoints)[w.dir > 0 ? 0 : 1].vertex);
  };

  for (const auto& s : p.sheets) {
    const int base = k.vertex_count++;
    std::vector<int> word;
    const int generators = s.orientable ? 2 * s.genus : s.genus;
    std::vector<int> gens;
    for (int g = 0; g < generators; ++g) {
      gens.push_back(k.c1());
      k.edges.push_back({base, base});
    }
    if (s.orientable) {
      for (int g = 0; g < s.genus; ++g) {
        const int x = gens[2 * g], y = gens[2 * g + 1];
        word.insert(word.end(), {x, y, x, y});
      }
    } else {
      for (int g : gens) word.insert(word.end(), {g, g});
    }
    for (const auto& circ : s.circuits) {
      const int tether = k.c1();
      k.edges.push_back({base, tail_point(circ.front())});
      word.push_back(tether);
      for (const auto& w : circ) word.push_back(arc_cell.at(w.arc));
      word.push_back(tether);
    }
    k.faces.push_back(std::move(word));
  }
  return k;
}

int gf2_rank(std::vector<std::vector<std::uint64_t>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  const std::size_t words = rows.front().size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < words * 64 && next < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = next;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && (rows[r][w] & bit))
        for (std::size_t j = 0; j < words; ++j) rows[r][j] ^= rows[next][j];
    }
    ++next;
    ++rank;
  }
  return rank;
}

Z2Betti z2_betti(const CellComplex& k) {
  auto packed = [](int n) { return std::vector<std::uint64_t>((static_cast<std::size_t>(n) + 63) / 64 + 1, 0); };
  auto flip = [](std::vector<std::uint64_t>& row, int i) {
    row[static_cast<std::size_t>(i) / 64] ^= std::uint64_t{1} << (i % 64);
  };

  std::vector<std::vector<std::uint64_t>> d1;
  for (const auto& e : k.edges) {
    auto row = packed(k.c0());
    flip(row, e[0]);
    flip(row, e[1]);
    d1.push_back(std::move(row));
  }
  std::vector<std::vector<std::uint64_t>> d2;
  for (const auto& f : k.faces) {
    auto row = packed(k.c1());
    for (int e : f) flip(row, e);
    d2.push_back(std::move(row));
  }
  const int r1 = gf2_rank(std::move(d1));
  const int r2 = gf2_rank(std::move(d2));
  return {k.c0() - r1, k.c1() - r1 - r2, k.c2() - r2};
}

Z2Betti z2_homology(const SimplePolyhedron& p) { return z2_betti(cellulate(p)); }

}  // namespace spine
