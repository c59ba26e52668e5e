#include "spine/gallery.hpp"
#include "spine/io.hpp"

namespace spine {

BornMap empty_born_map() {
  BornMap c;
  c.polyhedron.name = "empty";
  c.arrangement = empty_arrangement(0, "d0");
  c.arrangement.name = "empty";
  return c;
}

SimplePolyhedron broken_polyhedron() {
  SimplePolyhedron p = theta_complex();
  p.name = "broken";
  p.sheets.pop_back();
  assign_slot_flags(p);
  p.arcs.front().slots.pop_back();
  return p;
}

namespace {

std::string comment(const std::string& text) {
  std::string out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string line = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    out += line.empty() ? "#\n" : "# " + line + "\n";
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

constexpr const char* kWfNote =
    "Reeb space of a round fold map of a closed 3-manifold into the plane.\n"
    "Six concentric singular value circles r11, r10, r9, r8, r2, r1 (radii 11 to 1).\n"
    "Layer counts from the center outward: 4 5 4 3 2 1 0.\n"
    "Sheets from the outside in: alpha is born at r11; r10 splits it into U10out and L10;\n"
    "A8 is born at r9; r8 splits it into U8out and L8; r2 splits U10out into U10in and tube;\n"
    "r1 joins tube with U8out, and U8in closes it over the central disk.\n"
    "The matching between the four sheets over 2 < r < 8 and the five over 1 < r < 2\n"
    "is one explicit choice consistent with all counts.";

constexpr const char* kWfPrimeNote =
    "Result of attaching an annulus to wf along two nested circles centered at (-5, 0).\n"
    "T1 (radius 2) bounds a disk in U8out, T2 (radius 1) a disk in L10.\n"
    "The sheets L10', L8, S, U10out, U8out' and tube form a closed Klein bottle.";

constexpr const char* kThetaNote = "Three disks glued along one triple circle.";

constexpr const char* kEmptyNote = "The empty polyhedron over the plane.";

constexpr const char* kBrokenNote = "Invalid on purpose: the triple arc C has only two wings.";

constexpr const char* kKleinNote =
    "Annulus surgery on wf. The patch lies left of T1 and right of T2.\n"
    "Apply with: spine surgery wf.spoly wf.arr klein.plan -o wfprime";

constexpr const char* kTwinNote =
    "Annulus surgery on wf along two disjoint unit circles in U8out, centered at (-5, 0)\n"
    "and (5, 0). Both disks meet the same single sheet, so the disk graphs coincide.";

constexpr const char* kRelocateNote =
    "The klein circles drawn inside the auxiliary disk D, with a witness family\n"
    "that carries them into the empty outer face.\n"
    "Normalize with: spine normalize wf.spoly wf.arr relocate.plan";

}  // namespace

std::vector<std::pair<std::string, std::string>> fixture_files() {
  std::vector<std::pair<std::string, std::string>> out;
  auto add_map = [&](const std::string& stem, const BornMap& c, const char* note) {
    out.push_back({stem + ".spoly", comment(note) + emit_spoly(c.polyhedron)});
    out.push_back({stem + ".arr", comment(note) +
                                      emit_arr(c.arrangement, c.arc_to_edge, c.vertex_to_crossing)});
  };
  add_map("wf", build_example_wf(), kWfNote);
  add_map("wfprime", build_example_wfprime(), kWfPrimeNote);
  add_map("theta", theta_born_map(), kThetaNote);
  add_map("empty", empty_born_map(), kEmptyNote);
  out.push_back({"broken.spoly", comment(kBrokenNote) + emit_spoly(broken_polyhedron())});
  out.push_back({"klein.plan", comment(kKleinNote) + emit_plan(example_klein_plan(), "wf.spoly", "wf.arr")});
  out.push_back({"relocate.plan", comment(kRelocateNote) + emit_plan(example_relocation_plan(), "wf.spoly", "wf.arr")});
  out.push_back({"twin.plan", comment(kTwinNote) + emit_plan(example_twin_plan(), "wf.spoly", "wf.arr")});
  return out;
}

}  // namespace spine
