#include "spine/spine.h"

#include <cstring>
#include <sstream>

#include "spine/cell_complex.hpp"
#include "spine/gallery.hpp"
#include "spine/io.hpp"
#include "spine/render.hpp"
#include "spine/surfaces.hpp"

struct spine_polyhedron {
  spine::SimplePolyhedron value;
};
struct spine_bornmap {
  spine::BornMap value;
};
struct spine_plan {
  spine::SurgeryPlan value;
};

namespace {

thread_local std::string g_message;
thread_local std::string g_code;

spine_status fail(spine_status s, std::string code, std::string message) {
  g_code = std::move(code);
  g_message = std::move(message);
  return s;
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out != nullptr) *out = dup(s);
}

template <class F>
spine_status guard(F&& body) {
  g_code.clear();
  g_message.clear();
  try {
    return body();
  } catch (const spine::Error& e) {
    spine_status s = SPINE_OP_ERROR;
    if (e.code() == "ParseError") s = SPINE_PARSE;
    else if (e.code() == "InvalidBornMap" || e.code() == "InvalidPolyhedron") s = SPINE_INVALID;
    return fail(s, e.code(), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SPINE_OP_ERROR, "OutOfMemory", "allocation failed");
  } catch (const std::exception& e) {
    return fail(SPINE_OP_ERROR, "Internal", e.what());
  }
}

spine_status null_arg(const char* what) {
  return fail(SPINE_BAD_ARG, "NullArgument", std::string(what) + " must not be null");
}

spine_status report_status(const spine::ValidationReport& r, char** report) {
  put(report, r.to_text());
  if (r.ok()) return SPINE_OK;
  return fail(SPINE_INVALID, r.issues.front().code, r.issues.front().message);
}

}  // namespace

extern "C" {

const char* spine_last_error(void) { return g_message.c_str(); }
const char* spine_last_error_code(void) { return g_code.c_str(); }
void spine_string_free(char* s) { delete[] s; }

spine_status spine_polyhedron_parse(const char* text, spine_polyhedron** out) {
  if (text == nullptr || out == nullptr) return null_arg("text and out");
  return guard([&] {
    *out = new spine_polyhedron{spine::parse_spoly(text)};
    return SPINE_OK;
  });
}

spine_status spine_polyhedron_emit(const spine_polyhedron* p, char** text) {
  if (p == nullptr || text == nullptr) return null_arg("polyhedron and text");
  return guard([&] {
    put(text, spine::emit_spoly(p->value));
    return SPINE_OK;
  });
}

void spine_polyhedron_free(spine_polyhedron* p) { delete p; }

spine_status spine_polyhedron_validate(const spine_polyhedron* p, char** report) {
  if (p == nullptr) return null_arg("polyhedron");
  return guard([&] { return report_status(spine::validate_polyhedron(p->value), report); });
}

spine_status spine_polyhedron_euler(const spine_polyhedron* p, int* chi) {
  if (p == nullptr || chi == nullptr) return null_arg("polyhedron and chi");
  return guard([&] {
    spine::require_valid(p->value);
    *chi = spine::euler_characteristic(p->value);
    return SPINE_OK;
  });
}

spine_status spine_polyhedron_summary(const spine_polyhedron* p, char** text) {
  if (p == nullptr || text == nullptr) return null_arg("polyhedron and text");
  return guard([&] {
    const auto& v = p->value;
    spine::require_valid(v);
    std::ostringstream os;
    os << "sheets " << v.sheets.size() << "\n"
       << "branch circles " << spine::branch_circle_count(v) << "\n"
       << "branch components " << spine::branch_component_count(v) << "\n"
       << "triple arcs " << spine::count_arcs(v, spine::ArcKind::Triple) << "\n"
       << "boundary arcs " << spine::count_arcs(v, spine::ArcKind::Boundary) << "\n"
       << "vertices " << v.vertices.size() << "\n"
       << "normal " << (spine::is_normal(v) ? "yes" : "no") << "\n";
    put(text, os.str());
    return SPINE_OK;
  });
}

spine_status spine_polyhedron_homology(const spine_polyhedron* p, int betti[3]) {
  if (p == nullptr || betti == nullptr) return null_arg("polyhedron and betti");
  return guard([&] {
    spine::require_valid(p->value);
    const auto b = spine::z2_homology(p->value);
    betti[0] = b.b0;
    betti[1] = b.b1;
    betti[2] = b.b2;
    return SPINE_OK;
  });
}

spine_status spine_polyhedron_surfaces(const spine_polyhedron* p, long bound, char** text) {
  if (p == nullptr || text == nullptr) return null_arg("polyhedron and text");
  if (bound <= 0) return fail(SPINE_BAD_ARG, "BadBound", "bound must be positive");
  return guard([&] {
    spine::require_valid(p->value);
    const auto search = spine::find_closed_surfaces(p->value, bound);
    std::ostringstream os;
    for (const auto& s : search.selections) {
      os << (s.orientable ? "orientable" : "non-orientable") << " chi=" << s.euler << ":";
      for (const auto& id : s.sheets) os << " " << id;
      os << "\n";
    }
    os << search.selections.size() << " closed surfaces, " << search.examined << " nodes examined"
       << (search.truncated ? ", truncated" : "") << "\n";
    put(text, os.str());
    return SPINE_OK;
  });
}

spine_status spine_polyhedron_s3(const spine_polyhedron* p, long bound, int* obstructed, char** text) {
  if (p == nullptr) return null_arg("polyhedron");
  if (bound <= 0) return fail(SPINE_BAD_ARG, "BadBound", "bound must be positive");
  return guard([&] {
    spine::require_valid(p->value);
    const auto v = spine::s3_obstruction(p->value, bound);
    if (obstructed != nullptr) *obstructed = v.obstructed ? 1 : 0;
    put(text, v.to_text());
    return SPINE_OK;
  });
}

spine_status spine_bornmap_parse(const char* spoly, const char* arr, spine_bornmap** out) {
  if (spoly == nullptr || arr == nullptr || out == nullptr) return null_arg("spoly, arr and out");
  return guard([&] {
    *out = new spine_bornmap{spine::parse_born_map(spoly, arr)};
    return SPINE_OK;
  });
}

spine_status spine_bornmap_emit(const spine_bornmap* c, char** spoly, char** arr) {
  if (c == nullptr) return null_arg("born map");
  return guard([&] {
    put(spoly, spine::emit_spoly(c->value.polyhedron));
    put(arr, spine::emit_arr(c->value.arrangement, c->value.arc_to_edge, c->value.vertex_to_crossing));
    return SPINE_OK;
  });
}

void spine_bornmap_free(spine_bornmap* c) { delete c; }

spine_status spine_bornmap_validate(const spine_bornmap* c, char** report) {
  if (c == nullptr) return null_arg("born map");
  return guard([&] { return report_status(spine::validate_born_map(c->value), report); });
}

spine_status spine_bornmap_polyhedron(const spine_bornmap* c, spine_polyhedron** out) {
  if (c == nullptr || out == nullptr) return null_arg("born map and out");
  return guard([&] {
    *out = new spine_polyhedron{c->value.polyhedron};
    return SPINE_OK;
  });
}

spine_status spine_bornmap_certificate(const spine_bornmap* c, int dimension, char** text) {
  if (c == nullptr || text == nullptr) return null_arg("born map and text");
  return guard([&] {
    const auto cert = spine::realizability_certificate(c->value, dimension);
    put(text, cert.statement);
    return SPINE_OK;
  });
}

spine_status spine_bornmap_svg(const spine_bornmap* c, char** svg) {
  if (c == nullptr || svg == nullptr) return null_arg("born map and svg");
  return guard([&] {
    spine::require_valid(c->value);
    put(svg, spine::render_svg(c->value));
    return SPINE_OK;
  });
}

spine_status spine_plan_parse(const char* text, const spine_bornmap* base, spine_plan** out) {
  if (text == nullptr || base == nullptr || out == nullptr) return null_arg("text, base and out");
  return guard([&] {
    *out = new spine_plan{spine::parse_plan(text, base->value)};
    return SPINE_OK;
  });
}

spine_status spine_plan_emit(const spine_plan* plan, char** text) {
  if (plan == nullptr || text == nullptr) return null_arg("plan and text");
  return guard([&] {
    put(text, spine::emit_plan(plan->value));
    return SPINE_OK;
  });
}

void spine_plan_free(spine_plan* plan) { delete plan; }

spine_status spine_plan_check(const spine_plan* plan, char** report) {
  if (plan == nullptr) return null_arg("plan");
  return guard([&] { return report_status(spine::check_mt1_hypotheses(plan->value), report); });
}

spine_status spine_plan_attach(const spine_plan* plan, spine_bornmap** out, char** notes) {
  if (plan == nullptr || out == nullptr) return null_arg("plan and out");
  return guard([&] {
    auto r = spine::attach_surface_report(plan->value);
    std::ostringstream os;
    os << "new branch circles " << r.new_branch_circles << "\n"
       << "new vertices " << r.new_vertices << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    put(notes, os.str());
    *out = new spine_bornmap{std::move(r.map)};
    return SPINE_OK;
  });
}

spine_status spine_plan_normalize(const spine_plan* plan, spine_plan** out) {
  if (plan == nullptr || out == nullptr) return null_arg("plan and out");
  return guard([&] {
    *out = new spine_plan{spine::normalize_into_disk(plan->value)};
    return SPINE_OK;
  });
}

spine_status spine_plan_apply_disk_surgery(const spine_plan* plan, spine_bornmap** out) {
  if (plan == nullptr || out == nullptr) return null_arg("plan and out");
  return guard([&] {
    *out = new spine_bornmap{spine::apply_mt2(plan->value)};
    return SPINE_OK;
  });
}

spine_status spine_plan_obstruct(const spine_plan* plan, int in_closed_submanifold, long bound,
                                 char** report) {
  if (plan == nullptr) return null_arg("plan");
  if (bound <= 0) return fail(SPINE_BAD_ARG, "BadBound", "bound must be positive");
  return guard([&] {
    const auto& p = plan->value;
    const auto disks = spine::plan_disks(p);
    std::vector<spine::IncidenceGraph> graphs;
    for (const auto& d : disks) graphs.push_back(spine::build_graph(p.base, d));
    try {
      const auto surgered = spine::attach_surface(p);
      const auto r = spine::check_mt3_case2(p.base, disks, surgered, in_closed_submanifold != 0, bound);
      put(report, r.to_text());
      return SPINE_OK;
    } catch (const spine::Error& e) {
      if (e.code() != "NoMaximalGraph") throw;
      std::ostringstream os;
      for (std::size_t k = 0; k < graphs.size(); ++k) {
        os << "graph " << k << " (" << graphs[k].disk << "): vertices";
        for (const auto& v : graphs[k].vertices) os << " " << v;
        os << "; edges " << graphs[k].edges.size() << "\n";
      }
      os << "maximal absent\nno graph contains all the others, so the criterion does not apply\n";
      const std::string text = os.str();
      put(report, text);
      throw;
    }
  });
}

spine_status spine_plan_graphs_dot(const spine_plan* plan, char** dot) {
  if (plan == nullptr || dot == nullptr) return null_arg("plan and dot");
  return guard([&] {
    std::vector<spine::IncidenceGraph> graphs;
    for (const auto& d : spine::plan_disks(plan->value)) graphs.push_back(spine::build_graph(plan->value.base, d));
    put(dot, spine::graphs_dot(graphs));
    return SPINE_OK;
  });
}

spine_status spine_example(const char* name, spine_bornmap** out) {
  if (name == nullptr || out == nullptr) return null_arg("name and out");
  return guard([&] {
    const std::string n = name;
    spine::BornMap c;
    if (n == "wf") c = spine::build_example_wf();
    else if (n == "wfprime") c = spine::build_example_wfprime();
    else if (n == "theta") c = spine::theta_born_map();
    else if (n == "empty") c = spine::empty_born_map();
    else {
      return fail(SPINE_BAD_ARG, "UnknownExample", "no example named '" + n + "'");
    }
    *out = new spine_bornmap{std::move(c)};
    return SPINE_OK;
  });
}

spine_status spine_example_plan(const char* name, spine_plan** out) {
  if (name == nullptr || out == nullptr) return null_arg("name and out");
  return guard([&] {
    const std::string n = name;
    if (n == "klein") *out = new spine_plan{spine::example_klein_plan()};
    else if (n == "twin") *out = new spine_plan{spine::example_twin_plan()};
    else if (n == "relocate") *out = new spine_plan{spine::example_relocation_plan()};
    else return fail(SPINE_BAD_ARG, "UnknownExample", "no plan named '" + n + "'");
    return SPINE_OK;
  });
}

spine_status spine_heegaard_target(int heegaard_genus, int circles, char** description, int* summands) {
  return guard([&] {
    const auto t = spine::heegaard_target(spine::EmbeddingWitness{heegaard_genus, ""}, circles);
    put(description, t.describe());
    if (summands != nullptr) *summands = t.summand_count();
    return SPINE_OK;
  });
}

}  // extern "C"
