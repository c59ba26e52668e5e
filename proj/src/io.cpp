#include "spine/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace spine {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text, int first_line = 1) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int n = first_line - 1;
  while (std::getline(in, raw)) {
    ++n;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{n, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& msg) {
  throw Error("ParseError", "line " + std::to_string(l.number) + ": " + msg);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int to_int(const Line& l, const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) fail(l, "expected an integer, got '" + s + "'");
  return v;
}

double to_double(const Line& l, const std::string& s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) fail(l, "expected a number, got '" + s + "'");
  return v;
}

std::string fmt_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

bool to_orient(const Line& l, const std::string& s) {
  if (s == "o") return true;
  if (s == "n") return false;
  fail(l, "orientation must be 'o' or 'n', got '" + s + "'");
}

int to_dir(const Line& l, const std::string& s) {
  if (s == "+") return 1;
  if (s == "-") return -1;
  fail(l, "direction must be '+' or '-', got '" + s + "'");
}

bool is_section(const std::string& tok, const std::vector<std::string>& names) {
  return std::find(names.begin(), names.end(), tok) != names.end();
}

SimplePolyhedron parse_spoly_lines(const std::vector<Line>& lines) {
  static const std::vector<std::string> kSections{"SHEETS", "ARCS", "VERTICES"};
  SimplePolyhedron p;
  std::string section;
  for (const auto& l : lines) {
    const auto& t = l.tokens;
    if (t[0] == "NAME") {
      p.name = t.size() > 1 ? t[1] : "";
      continue;
    }
    if (is_section(t[0], kSections) && t.size() == 1) {
      section = t[0];
      continue;
    }
    if (section == "SHEETS") {
      if (t.size() < 3) fail(l, "sheet needs id, orientation and genus");
      SheetSpec s{t[0], to_orient(l, t[1]), to_int(l, t[2]), {}};
      Circuit cur;
      for (std::size_t k = 3; k < t.size(); ++k) {
        if (t[k] == "|") {
          if (cur.empty()) fail(l, "empty circuit");
          s.circuits.push_back(std::move(cur));
          cur.clear();
          continue;
        }
        const auto parts = split(t[k], ':');
        if (parts.size() != 3) fail(l, "wing must be arc:slot:dir, got '" + t[k] + "'");
        cur.push_back({parts[0], to_int(l, parts[1]), to_dir(l, parts[2])});
      }
      if (!cur.empty()) s.circuits.push_back(std::move(cur));
      else if (t.size() > 3) fail(l, "empty circuit");
      p.sheets.push_back(std::move(s));
    } else if (section == "ARCS") {
      if (t.size() < 4) fail(l, "arc needs id, kind, endpoints and monodromy");
      BranchArc a;
      a.id = t[0];
      if (t[1] == "B") a.kind = ArcKind::Boundary;
      else if (t[1] == "T") a.kind = ArcKind::Triple;
      else fail(l, "arc kind must be B or T");
      if (t[2] != "closed") {
        const auto ends = split(t[2], ',');
        if (ends.size() != 2) fail(l, "endpoints must be v:p,v:p");
        std::array<ArcEnd, 2> e;
        for (int k = 0; k < 2; ++k) {
          const auto vp = split(ends[static_cast<std::size_t>(k)], ':');
          if (vp.size() != 2) fail(l, "endpoint must be vertex:port");
          e[static_cast<std::size_t>(k)] = {vp[0], to_int(l, vp[1])};
        }
        a.endpoints = e;
      }
      if (t[3] == "trivial") a.monodromy = Monodromy::Trivial;
      else if (t[3] == "swap") a.monodromy = Monodromy::Swap;
      else fail(l, "monodromy must be trivial or swap");
      for (std::size_t k = 4; k < t.size(); ++k) {
        const auto parts = split(t[k], ':');
        if (parts.size() != 3) fail(l, "slot flag must be sheet:circuit:position");
        a.slots.push_back({parts[0], to_int(l, parts[1]), to_int(l, parts[2])});
      }
      p.arcs.push_back(std::move(a));
    } else if (section == "VERTICES") {
      if (t.size() != 5) fail(l, "vertex needs id and four role triples");
      VertexSpec v;
      v.id = t[0];
      for (int k = 0; k < 4; ++k) {
        const std::string& r = t[static_cast<std::size_t>(k + 1)];
        if (r.size() != 3 || r.find_first_not_of("012") != std::string::npos)
          fail(l, "role triple must be three slot digits, got '" + r + "'");
        v.roles[static_cast<std::size_t>(k)] = {r[0] - '0', r[1] - '0', r[2] - '0'};
      }
      p.vertices.push_back(std::move(v));
    } else {
      fail(l, "record outside of a section");
    }
  }
  return p;
}

CurveArrangement parse_arr_lines(const std::vector<Line>& lines,
                                 std::map<std::string, std::string>* arc_to_edge,
                                 std::map<std::string, std::string>* vertex_to_crossing) {
  static const std::vector<std::string> kSections{"FACES",     "CURVES", "EDGES",
                                                  "CROSSINGS", "DECOR",  "ASSIGN"};
  CurveArrangement a;
  std::string section;
  for (const auto& l : lines) {
    const auto& t = l.tokens;
    if (t[0] == "NAME") {
      a.name = t.size() > 1 ? t[1] : "";
      continue;
    }
    if (is_section(t[0], kSections) && t.size() == 1) {
      section = t[0];
      continue;
    }
    if (section == "FACES") {
      if (t.size() != 2 && !(t.size() == 3 && t[2] == "UNBOUNDED"))
        fail(l, "face needs id, count and optional UNBOUNDED");
      a.faces.push_back({t[0], to_int(l, t[1]), t.size() == 3});
    } else if (section == "CURVES") {
      if (t.size() < 3) fail(l, "curve needs id, source and edges");
      a.curves.push_back({t[0], t[1], {t.begin() + 2, t.end()}});
    } else if (section == "EDGES") {
      if (t.size() != 6) fail(l, "edge needs id, curve, tail, head, left, right");
      a.edges.push_back({t[0], t[1], t[2] == "-" ? "" : t[2], t[3] == "-" ? "" : t[3], t[4], t[5]});
    } else if (section == "CROSSINGS") {
      if (t.size() != 5) fail(l, "crossing needs id and four edge ends");
      Crossing x{t[0], {}};
      for (std::size_t k = 1; k < 5; ++k) {
        const auto parts = split(t[k], ':');
        if (parts.size() != 2 || (parts[1] != "h" && parts[1] != "t"))
          fail(l, "edge end must be edge:h or edge:t");
        x.ends.push_back({parts[0], parts[1] == "h"});
      }
      a.crossings.push_back(std::move(x));
    } else if (section == "DECOR") {
      if (t.size() != 4) fail(l, "decor needs curve, cx, cy, r");
      a.decor.push_back({t[0], to_double(l, t[1]), to_double(l, t[2]), to_double(l, t[3])});
    } else if (section == "ASSIGN") {
      if (t.size() != 3 || (t[0] != "arc" && t[0] != "vertex"))
        fail(l, "assignment must be 'arc <arc> <edge>' or 'vertex <vertex> <crossing>'");
      auto* target = t[0] == "arc" ? arc_to_edge : vertex_to_crossing;
      if (target != nullptr && !target->emplace(t[1], t[2]).second)
        fail(l, "duplicate assignment for " + t[1]);
    } else {
      fail(l, "record outside of a section");
    }
  }
  return a;
}

std::string wing_token(const WingRef& w) {
  return w.arc + ":" + std::to_string(w.slot) + ":" + (w.dir > 0 ? "+" : "-");
}

}  // namespace

SimplePolyhedron parse_spoly(const std::string& text) { return parse_spoly_lines(tokenize(text)); }

std::string emit_spoly(const SimplePolyhedron& p) {
  std::ostringstream os;
  os << "NAME " << p.name << "\n";
  os << "SHEETS\n";
  for (const auto& s : p.sheets) {
    os << s.id << " " << (s.orientable ? "o" : "n") << " " << s.genus;
    for (std::size_t c = 0; c < s.circuits.size(); ++c) {
      if (c > 0) os << " |";
      for (const auto& w : s.circuits[c]) os << " " << wing_token(w);
    }
    os << "\n";
  }
  os << "ARCS\n";
  for (const auto& a : p.arcs) {
    os << a.id << " " << (a.kind == ArcKind::Boundary ? "B" : "T") << " ";
    if (a.endpoints)
      os << (*a.endpoints)[0].vertex << ":" << (*a.endpoints)[0].port << ","
         << (*a.endpoints)[1].vertex << ":" << (*a.endpoints)[1].port;
    else
      os << "closed";
    os << " " << (a.monodromy == Monodromy::Trivial ? "trivial" : "swap");
    for (const auto& f : a.slots) os << " " << f.sheet << ":" << f.circuit << ":" << f.position;
    os << "\n";
  }
  os << "VERTICES\n";
  for (const auto& v : p.vertices) {
    os << v.id;
    for (const auto& r : v.roles) os << " " << r.free_slot << r.q_left << r.q_right;
    os << "\n";
  }
  return os.str();
}

CurveArrangement parse_arr(const std::string& text, std::map<std::string, std::string>* arc_to_edge,
                           std::map<std::string, std::string>* vertex_to_crossing) {
  return parse_arr_lines(tokenize(text), arc_to_edge, vertex_to_crossing);
}

std::string emit_arr(const CurveArrangement& a, const std::map<std::string, std::string>& arc_to_edge,
                     const std::map<std::string, std::string>& vertex_to_crossing) {
  std::ostringstream os;
  os << "NAME " << a.name << "\n";
  os << "FACES\n";
  for (const auto& f : a.faces) os << f.id << " " << f.count << (f.unbounded ? " UNBOUNDED" : "") << "\n";
  os << "CURVES\n";
  for (const auto& c : a.curves) {
    os << c.id << " " << c.source;
    for (const auto& e : c.edges) os << " " << e;
    os << "\n";
  }
  os << "EDGES\n";
  for (const auto& e : a.edges)
    os << e.id << " " << e.curve << " " << (e.tail.empty() ? "-" : e.tail) << " "
       << (e.head.empty() ? "-" : e.head) << " " << e.left << " " << e.right << "\n";
  os << "CROSSINGS\n";
  for (const auto& x : a.crossings) {
    os << x.id;
    for (const auto& end : x.ends) os << " " << end.edge << ":" << (end.head ? "h" : "t");
    os << "\n";
  }
  if (!a.decor.empty()) {
    os << "DECOR\n";
    for (const auto& d : a.decor)
      os << d.curve << " " << fmt_double(d.cx) << " " << fmt_double(d.cy) << " " << fmt_double(d.r) << "\n";
  }
  if (!arc_to_edge.empty() || !vertex_to_crossing.empty()) {
    os << "ASSIGN\n";
    for (const auto& [arc, edge] : arc_to_edge) os << "arc " << arc << " " << edge << "\n";
    for (const auto& [v, x] : vertex_to_crossing) os << "vertex " << v << " " << x << "\n";
  }
  return os.str();
}

BornMap parse_born_map(const std::string& spoly, const std::string& arr) {
  BornMap c;
  c.polyhedron = parse_spoly(spoly);
  c.arrangement = parse_arr(arr, &c.arc_to_edge, &c.vertex_to_crossing);
  return c;
}

SurgeryPlan parse_plan(const std::string& text, const BornMap& base) {
  SurgeryPlan plan;
  plan.base = base;
  plan.patch.boundary_count = 0;
  const auto lines = tokenize(text);
  bool have_combined = false, have_patch = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto& t = l.tokens;
    if (t[0] == "NAME") {
      plan.result_name = t.size() > 1 ? t[1] : "";
    } else if (t[0] == "BASE") {
      continue;
    } else if (t[0] == "PATCH") {
      if (t.size() != 5) fail(l, "PATCH needs id, orientation, genus, boundary count");
      plan.patch_id = t[1];
      plan.patch = {to_orient(l, t[2]), to_int(l, t[3]), to_int(l, t[4])};
      have_patch = true;
    } else if (t[0] == "CIRCLE") {
      if (t.size() < 5) fail(l, "CIRCLE needs id, image, side and an itinerary");
      EmbeddedCircle c;
      c.id = t[1];
      c.image = t[2];
      if (t[3] != "left" && t[3] != "right") fail(l, "patch side must be left or right");
      c.patch_left = t[3] == "left";
      for (std::size_t k = 4; k < t.size(); ++k) {
        const auto parts = split(t[k], ':');
        const bool want_seg = (k - 4) % 2 == 0;
        if (want_seg) {
          if (parts.size() != 4 || parts[0] != "seg") fail(l, "expected seg:<sheet>:<left>:<right>");
          c.segments.push_back({parts[1], parts[2], parts[3]});
        } else {
          if (parts.size() != 5 || parts[0] != "cross")
            fail(l, "expected cross:<arc>:<from>:<to>:<crossing>");
          c.crossings.push_back({parts[1], to_int(l, parts[2]), to_int(l, parts[3]), parts[4]});
        }
      }
      if (!c.crossings.empty() && c.crossings.size() != c.segments.size())
        fail(l, "itinerary must end with a crossing that returns to the first segment");
      plan.circles.push_back(std::move(c));
    } else if (t[0] == "CUT") {
      if (t.size() < 6 || t[2] != "KEEP" || t[4] != "PIECES")
        fail(l, "CUT <sheet> KEEP <piece> PIECES <id>:<o|n>:<genus>...");
      CutSpec cut{t[1], t[3], {}};
      for (std::size_t k = 5; k < t.size(); ++k) {
        const auto parts = split(t[k], ':');
        if (parts.size() != 3) fail(l, "piece must be id:orientation:genus");
        cut.pieces.push_back({parts[0], to_orient(l, parts[1]), to_int(l, parts[2])});
      }
      plan.cuts.push_back(std::move(cut));
    } else if (t[0] == "DISK") {
      if (t.size() < 3) fail(l, "DISK needs id and boundary curve");
      plan.disks.push_back({t[1], t[2], {t.begin() + 3, t.end()}});
    } else if (t[0] == "COMBINED" || t[0] == "WITNESS") {
      std::vector<Line> block;
      std::size_t j = i + 1;
      for (; j < lines.size() && lines[j].tokens[0] != "END"; ++j) block.push_back(lines[j]);
      if (j == lines.size()) fail(l, t[0] + " block is not closed by END");
      if (t[0] == "COMBINED") {
        if (t.size() != 1) fail(l, "COMBINED takes no arguments");
        plan.combined = parse_arr_lines(block, nullptr, nullptr);
        have_combined = true;
      } else {
        if (t.size() != 2) fail(l, "WITNESS needs the boundary count of its surface");
        plan.witness = parse_arr_lines(block, nullptr, nullptr);
        plan.witness_boundary_count = to_int(l, t[1]);
      }
      i = j;
    } else {
      fail(l, "unknown plan record '" + t[0] + "'");
    }
  }
  if (!have_combined) throw Error("ParseError", "plan has no COMBINED block");
  if (!have_patch) throw Error("ParseError", "plan has no PATCH line");
  return plan;
}

std::string emit_plan(const SurgeryPlan& plan, const std::string& base_spoly,
                      const std::string& base_arr) {
  std::ostringstream os;
  os << "NAME " << plan.result_name << "\n";
  if (!base_spoly.empty()) os << "BASE " << base_spoly << " " << base_arr << "\n";
  os << "PATCH " << plan.patch_id << " " << (plan.patch.orientable ? "o" : "n") << " "
     << plan.patch.genus << " " << plan.patch.boundary_count << "\n";
  for (const auto& c : plan.circles) {
    os << "CIRCLE " << c.id << " " << c.image << " " << (c.patch_left ? "left" : "right");
    for (std::size_t k = 0; k < c.segments.size(); ++k) {
      const auto& s = c.segments[k];
      os << " seg:" << s.sheet << ":" << s.left_piece << ":" << s.right_piece;
      if (k < c.crossings.size()) {
        const auto& x = c.crossings[k];
        os << " cross:" << x.arc << ":" << x.from_slot << ":" << x.to_slot << ":" << x.crossing;
      }
    }
    os << "\n";
  }
  for (const auto& cut : plan.cuts) {
    os << "CUT " << cut.sheet << " KEEP " << cut.keep << " PIECES";
    for (const auto& p : cut.pieces) os << " " << p.id << ":" << (p.orientable ? "o" : "n") << ":" << p.genus;
    os << "\n";
  }
  for (const auto& d : plan.disks) {
    os << "DISK " << d.id << " " << d.curve;
    for (const auto& c : d.circles) os << " " << c;
    os << "\n";
  }
  os << "COMBINED\n" << emit_arr(plan.combined) << "END\n";
  if (plan.witness) os << "WITNESS " << plan.witness_boundary_count << "\n" << emit_arr(*plan.witness) << "END\n";
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("IoError", "cannot write " + tmp);
    out << content;
    if (!out.flush()) throw Error("IoError", "cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error("IoError", "cannot rename " + tmp + " to " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace spine
