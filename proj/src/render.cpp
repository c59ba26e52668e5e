#include "spine/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace spine {

namespace {

struct Disc {
  double cx = 0, cy = 0, r = 1;
};

std::string num(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, std::round(v * 1000.0) / 1000.0 + 0.0);
  return std::string(buf, p);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

bool strict_subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool meets(const std::set<std::string>& a, const std::set<std::string>& b) {
  for (const auto& x : a)
    if (b.count(x)) return true;
  return false;
}

class Layout {
 public:
  Layout(const CurveArrangement& a, std::map<std::string, std::set<std::string>> inside)
      : a_(a), inside_(std::move(inside)) {
    for (const auto& c : a_.curves) {
      std::string parent;
      for (const auto& d : a_.curves) {
        if (d.id == c.id || !strict_subset(inside_[c.id], inside_[d.id])) continue;
        if (parent.empty() || inside_[d.id].size() < inside_[parent].size()) parent = d.id;
      }
      children_[parent].push_back(c.id);
    }
  }

  std::map<std::string, Disc> place() {
    std::map<std::string, Disc> out;
    const double r = extent("");
    arrange("", {0, 0, r}, out);
    return out;
  }

 private:
  // Siblings whose interiors overlap share a group and are drawn overlapping.
  std::vector<std::vector<std::string>> groups(const std::string& parent) {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : children_[parent]) {
      auto hit = std::find_if(out.begin(), out.end(), [&](const std::vector<std::string>& g) {
        return std::any_of(g.begin(), g.end(),
                           [&](const std::string& d) { return meets(inside_[c], inside_[d]); });
      });
      if (hit == out.end()) out.push_back({c});
      else hit->push_back(c);
    }
    return out;
  }

  double radius(const std::string& c) {
    if (auto it = radius_.find(c); it != radius_.end()) return it->second;
    const double r = std::max(1.0, extent(c) + 0.6);
    radius_[c] = r;
    return r;
  }

  static double step(double r0, double r1) { return std::max(r0, r1) + 0.2 * std::min(r0, r1); }

  double group_width(const std::vector<std::string>& g) {
    double w = radius(g.front()) + radius(g.back());
    for (std::size_t k = 1; k < g.size(); ++k) w += step(radius(g[k - 1]), radius(g[k]));
    return w;
  }

  // Half the width of the row of sibling groups inside `parent`.
  double extent(const std::string& parent) {
    double w = 0;
    const auto gs = groups(parent);
    for (const auto& g : gs) w += group_width(g);
    w += 0.6 * static_cast<double>(gs.empty() ? 0 : gs.size() - 1);
    return w / 2.0;
  }

  void arrange(const std::string& parent, const Disc& at, std::map<std::string, Disc>& out) {
    const auto gs = groups(parent);
    double x = at.cx - extent(parent);
    for (const auto& g : gs) {
      double cx = x + radius(g.front());
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (k > 0) cx += step(radius(g[k - 1]), radius(g[k]));
        const Disc d{cx, at.cy, radius(g[k])};
        out[g[k]] = d;
        arrange(g[k], d, out);
      }
      x += group_width(g) + 0.6;
    }
  }

  const CurveArrangement& a_;
  std::map<std::string, std::set<std::string>> inside_;
  std::map<std::string, std::vector<std::string>> children_;
  std::map<std::string, double> radius_;
};

}  // namespace

std::string render_svg(const BornMap& c) {
  const CurveArrangement& a = c.arrangement;
  std::map<std::string, std::set<std::string>> inside;
  for (const auto& curve : a.curves) inside[curve.id] = faces_inside(a, curve.id);

  std::map<std::string, Disc> discs;
  const bool decorated = std::all_of(a.curves.begin(), a.curves.end(), [&](const Curve& cv) {
    return std::any_of(a.decor.begin(), a.decor.end(),
                       [&](const CurveDecor& d) { return d.curve == cv.id; });
  });
  if (decorated && !a.curves.empty()) {
    for (const auto& d : a.decor) discs[d.curve] = {d.cx, -d.cy, d.r};
  } else {
    discs = Layout(a, inside).place();
  }

  double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
  for (const auto& [id, d] : discs) {
    lo_x = std::min(lo_x, d.cx - d.r);
    hi_x = std::max(hi_x, d.cx + d.r);
    lo_y = std::min(lo_y, d.cy - d.r);
    hi_y = std::max(hi_y, d.cy + d.r);
  }
  const double pad = 0.15 * std::max(hi_x - lo_x, hi_y - lo_y) + 0.5;
  lo_x -= pad, hi_x += pad, lo_y -= pad, hi_y += pad;
  const double scale = 480.0 / std::max(hi_x - lo_x, hi_y - lo_y);

  std::map<std::string, std::string> edge_to_arc;
  for (const auto& [arc, edge] : c.arc_to_edge) edge_to_arc[edge] = arc;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num((hi_x - lo_x) * scale)
     << "\" height=\"" << num((hi_y - lo_y) * scale) << "\" viewBox=\"" << num(lo_x) << " "
     << num(lo_y) << " " << num(hi_x - lo_x) << " " << num(hi_y - lo_y) << "\">\n";
  os << "<title>" << escape(a.name) << "</title>\n";
  const double stroke = 1.5 / scale;
  for (const auto& curve : a.curves) {
    const Disc& d = discs[curve.id];
    std::string color = "black", dash;
    if (curve.source.rfind("aux", 0) == 0) {
      color = "steelblue";
      dash = " stroke-dasharray=\"" + num(6 / scale) + " " + num(4 / scale) + "\"";
    } else if (!curve.edges.empty()) {
      auto it = edge_to_arc.find(curve.edges.front());
      const BranchArc* arc = it == edge_to_arc.end() ? nullptr : c.polyhedron.find_arc(it->second);
      if (arc != nullptr && arc->kind == ArcKind::Triple) color = "gray";
    }
    os << "<circle class=\"curve\" id=\"" << escape(curve.id) << "\" cx=\"" << num(d.cx) << "\" cy=\""
       << num(d.cy) << "\" r=\"" << num(d.r) << "\" fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"" << num(stroke) << "\"" << dash << "/>\n";
  }

  // Label placement: a grid point belongs to the face whose inside-set equals
  // the set of discs containing it. Among matching points the one farthest
  // from every circle wins.
  std::map<std::set<std::string>, std::vector<std::string>> faces_by_signature;
  for (const auto& f : a.faces) {
    std::set<std::string> sig;
    for (const auto& [curve, faces] : inside)
      if (faces.count(f.id)) sig.insert(curve);
    faces_by_signature[sig].push_back(f.id);
  }
  const int n = 120;
  std::map<std::set<std::string>, std::vector<std::pair<double, std::pair<double, double>>>> candidates;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const double x = lo_x + (hi_x - lo_x) * i / n, y = lo_y + (hi_y - lo_y) * j / n;
      std::set<std::string> sig;
      double clearance = 1e9;
      for (const auto& [id, d] : discs) {
        const double dist = std::hypot(x - d.cx, y - d.cy);
        if (dist < d.r) sig.insert(id);
        clearance = std::min(clearance, std::abs(dist - d.r));
      }
      clearance = std::min({clearance, x - lo_x, hi_x - x, y - lo_y, hi_y - y});
      candidates[sig].push_back({clearance, {x, y}});
    }
  const double font = 14.0 / scale;
  for (const auto& [sig, faces] : faces_by_signature) {
    auto pts = candidates[sig];
    std::stable_sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) { return p.first > q.first; });
    std::vector<std::pair<double, double>> chosen;
    for (const auto& fid : faces) {
      std::pair<double, double> at{lo_x + pad / 2, lo_y + pad / 2};
      double best = -1;
      for (const auto& [clear, pt] : pts) {
        double sep = 1e9;
        for (const auto& q : chosen) sep = std::min(sep, std::hypot(pt.first - q.first, pt.second - q.second));
        const double score = std::min(clear, sep / 2);
        if (score > best + 1e-12) best = score, at = pt;
      }
      chosen.push_back(at);
      os << "<text class=\"count\" data-face=\"" << escape(fid) << "\" x=\"" << num(at.first) << "\" y=\""
         << num(at.second + font / 3) << "\" font-size=\"" << num(font)
         << "\" text-anchor=\"middle\" font-family=\"sans-serif\">" << a.find_face(fid)->count
         << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string graph_dot(const IncidenceGraph& g) {
  std::ostringstream os;
  os << "graph \"" << g.disk << "\" {\n";
  for (const auto& v : g.vertices) os << "  \"" << v << "\";\n";
  for (const auto& e : g.edges)
    os << "  \"" << e.u << "\" -- \"" << e.v << "\" [label=\"" << e.arc << " " << (e.parity > 0 ? "+" : "-")
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string graphs_dot(const std::vector<IncidenceGraph>& graphs) {
  std::string out;
  for (const auto& g : graphs) out += graph_dot(g);
  return out;
}

}  // namespace spine
