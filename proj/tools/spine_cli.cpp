// Command-line front end. Talks to the library only through the C interface.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "spine/spine.h"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInputError = 2;

struct InputError {
  std::string message;
};

struct Owned {
  char* s = nullptr;
  ~Owned() { spine_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

using Poly = std::unique_ptr<spine_polyhedron, decltype(&spine_polyhedron_free)>;
using Map = std::unique_ptr<spine_bornmap, decltype(&spine_bornmap_free)>;
using Plan = std::unique_ptr<spine_plan, decltype(&spine_plan_free)>;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out.flush()) throw InputError{"cannot write " + tmp};
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw InputError{"cannot move " + tmp + " to " + path};
  }
}

int exit_code(spine_status s) {
  switch (s) {
    case SPINE_OK: return kOk;
    case SPINE_PARSE:
    case SPINE_BAD_ARG: return kInputError;
    default: return kInvalid;
  }
}

// Prints the error for a failed call and returns the matching exit status.
int report(spine_status s) {
  if (s != SPINE_OK) std::cerr << "error: " << spine_last_error() << "\n";
  return exit_code(s);
}

struct Loaded {
  Map map{nullptr, spine_bornmap_free};
  int status = kOk;
};

Loaded load_map(const std::string& spoly, const std::string& arr) {
  Loaded out;
  spine_bornmap* raw = nullptr;
  const spine_status s = spine_bornmap_parse(slurp(spoly).c_str(), slurp(arr).c_str(), &raw);
  out.status = report(s);
  out.map.reset(raw);
  return out;
}

Poly load_poly(const std::string& path, int& status) {
  spine_polyhedron* raw = nullptr;
  status = report(spine_polyhedron_parse(slurp(path).c_str(), &raw));
  return Poly(raw, spine_polyhedron_free);
}

Plan load_plan(const std::string& path, const spine_bornmap* base, int& status) {
  spine_plan* raw = nullptr;
  status = report(spine_plan_parse(slurp(path).c_str(), base, &raw));
  return Plan(raw, spine_plan_free);
}

int write_map(const spine_bornmap* c, const std::string& prefix) {
  Owned spoly, arr;
  if (const auto s = spine_bornmap_emit(c, &spoly.s, &arr.s); s != SPINE_OK) return report(s);
  write_atomic(prefix + ".spoly", spoly.str());
  write_atomic(prefix + ".arr", arr.str());
  std::cout << "wrote " << prefix << ".spoly " << prefix << ".arr\n";
  return kOk;
}

struct Args {
  std::string spoly, arr, plan, out, apply;
  std::string name;
  long bound = 200000;
  int dimension = 0;
  bool closed = false;
};

int cmd_validate(const Args& a) {
  if (a.arr.empty()) {
    int st = kOk;
    auto p = load_poly(a.spoly, st);
    if (st != kOk) return st;
    Owned text;
    const auto s = spine_polyhedron_validate(p.get(), &text.s);
    std::cout << text.str();
    if (s == SPINE_OK) {
      Owned summary;
      spine_polyhedron_summary(p.get(), &summary.s);
      std::cout << summary.str();
    }
    return exit_code(s);
  }
  auto m = load_map(a.spoly, a.arr);
  if (m.status != kOk) return m.status;
  Owned text;
  const auto s = spine_bornmap_validate(m.map.get(), &text.s);
  std::cout << text.str();
  if (s == SPINE_OK && a.dimension > 0) {
    Owned cert;
    if (const auto c = spine_bornmap_certificate(m.map.get(), a.dimension, &cert.s); c != SPINE_OK)
      return report(c);
    std::cout << cert.str() << "\n";
  }
  return exit_code(s);
}

int cmd_euler(const Args& a) {
  int st = kOk;
  auto p = load_poly(a.spoly, st);
  if (st != kOk) return st;
  int chi = 0;
  if (const auto s = spine_polyhedron_euler(p.get(), &chi); s != SPINE_OK) return report(s);
  std::cout << "chi " << chi << "\n";
  return kOk;
}

int cmd_homology(const Args& a) {
  int st = kOk;
  auto p = load_poly(a.spoly, st);
  if (st != kOk) return st;
  int b[3] = {0, 0, 0};
  if (const auto s = spine_polyhedron_homology(p.get(), b); s != SPINE_OK) return report(s);
  std::cout << "b0 " << b[0] << "\nb1 " << b[1] << "\nb2 " << b[2] << "\nchi " << b[0] - b[1] + b[2] << "\n";
  return kOk;
}

int cmd_surgery(const Args& a) {
  auto m = load_map(a.spoly, a.arr);
  if (m.status != kOk) return m.status;
  int st = kOk;
  auto plan = load_plan(a.plan, m.map.get(), st);
  if (st != kOk) return st;
  spine_bornmap* raw = nullptr;
  Owned notes;
  const auto s = spine_plan_attach(plan.get(), &raw, &notes.s);
  Map result(raw, spine_bornmap_free);
  if (s != SPINE_OK) return report(s);
  std::cout << notes.str();
  return write_map(result.get(), a.out);
}

int cmd_normalize(const Args& a) {
  auto m = load_map(a.spoly, a.arr);
  if (m.status != kOk) return m.status;
  int st = kOk;
  auto plan = load_plan(a.plan, m.map.get(), st);
  if (st != kOk) return st;
  spine_plan* raw = nullptr;
  const auto s = spine_plan_normalize(plan.get(), &raw);
  Plan normalized(raw, spine_plan_free);
  if (s != SPINE_OK) return report(s);
  Owned text;
  if (const auto e = spine_plan_emit(normalized.get(), &text.s); e != SPINE_OK) return report(e);
  if (a.out.empty()) std::cout << text.str();
  else write_atomic(a.out, text.str());
  if (!a.apply.empty()) {
    spine_bornmap* out = nullptr;
    const auto r = spine_plan_apply_disk_surgery(plan.get(), &out);
    Map result(out, spine_bornmap_free);
    if (r != SPINE_OK) return report(r);
    return write_map(result.get(), a.apply);
  }
  return kOk;
}

int cmd_obstruct(const Args& a) {
  if (a.plan.empty()) {
    int st = kOk;
    auto p = load_poly(a.spoly, st);
    if (st != kOk) return st;
    Owned text;
    int obstructed = 0;
    if (const auto s = spine_polyhedron_s3(p.get(), a.bound, &obstructed, &text.s); s != SPINE_OK)
      return report(s);
    std::cout << text.str();
    return kOk;
  }
  auto m = load_map(a.spoly, a.arr);
  if (m.status != kOk) return m.status;
  int st = kOk;
  auto plan = load_plan(a.plan, m.map.get(), st);
  if (st != kOk) return st;
  Owned text;
  const auto s = spine_plan_obstruct(plan.get(), a.closed ? 1 : 0, a.bound, &text.s);
  std::cout << text.str();
  return report(s);
}

int cmd_graph(const Args& a) {
  auto m = load_map(a.spoly, a.arr);
  if (m.status != kOk) return m.status;
  int st = kOk;
  auto plan = load_plan(a.plan, m.map.get(), st);
  if (st != kOk) return st;
  Owned dot;
  if (const auto s = spine_plan_graphs_dot(plan.get(), &dot.s); s != SPINE_OK) return report(s);
  if (a.out.empty()) std::cout << dot.str();
  else write_atomic(a.out, dot.str());
  return kOk;
}

int cmd_example(const Args& a) {
  if (a.name == "klein" || a.name == "twin" || a.name == "relocate") {
    spine_plan* raw = nullptr;
    const auto s = spine_example_plan(a.name.c_str(), &raw);
    Plan plan(raw, spine_plan_free);
    if (s != SPINE_OK) return report(s);
    Owned text;
    spine_plan_emit(plan.get(), &text.s);
    write_atomic(a.out + ".plan", text.str());
    std::cout << "wrote " << a.out << ".plan\n";
    return kOk;
  }
  spine_bornmap* raw = nullptr;
  const auto s = spine_example(a.name.c_str(), &raw);
  Map map(raw, spine_bornmap_free);
  if (s != SPINE_OK) return report(s);
  return write_map(map.get(), a.out);
}

int cmd_render(const Args& a) {
  auto m = load_map(a.spoly, a.arr);
  if (m.status != kOk) return m.status;
  Owned svg;
  if (const auto s = spine_bornmap_svg(m.map.get(), &svg.s); s != SPINE_OK) return report(s);
  if (a.out.empty()) std::cout << svg.str();
  else write_atomic(a.out, svg.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple polyhedra, born maps and surface surgery"};
  app.require_subcommand(1);
  Args a;

  auto* validate = app.add_subcommand("validate", "check a polyhedron or a born map");
  validate->add_option("spoly", a.spoly)->required();
  validate->add_option("arr", a.arr);
  validate->add_option("--certificate", a.dimension, "also print the realizability certificate in this dimension");

  auto* euler = app.add_subcommand("euler", "Euler characteristic");
  euler->add_option("spoly", a.spoly)->required();

  auto* homology = app.add_subcommand("homology", "Betti numbers over Z/2");
  homology->add_option("spoly", a.spoly)->required();

  auto* surgery = app.add_subcommand("surgery", "attach the plan's surface");
  surgery->add_option("spoly", a.spoly)->required();
  surgery->add_option("arr", a.arr)->required();
  surgery->add_option("plan", a.plan)->required();
  surgery->add_option("-o,--output", a.out, "output prefix")->required();

  auto* normalize = app.add_subcommand("normalize", "move the plan's circles into an empty disk");
  normalize->add_option("spoly", a.spoly)->required();
  normalize->add_option("arr", a.arr)->required();
  normalize->add_option("plan", a.plan)->required();
  normalize->add_option("-o,--output", a.out, "normalized plan path");
  normalize->add_option("--apply", a.apply, "also run the surgery and write this prefix");

  auto* obstruct = app.add_subcommand("obstruct", "embedding obstructions");
  obstruct->add_option("spoly", a.spoly)->required();
  obstruct->add_option("arr", a.arr);
  obstruct->add_option("plan", a.plan);
  obstruct->add_flag("--closed-submanifold", a.closed, "the disks lie in a closed submanifold");
  obstruct->add_option("--bound", a.bound, "search node budget")->check(CLI::PositiveNumber);

  auto* graph = app.add_subcommand("graph", "DOT incidence graphs of the plan's disks");
  graph->add_option("spoly", a.spoly)->required();
  graph->add_option("arr", a.arr)->required();
  graph->add_option("plan", a.plan)->required();
  graph->add_option("-o,--output", a.out);

  auto* example = app.add_subcommand("example", "write a built-in example");
  example->add_option("name", a.name)->required()->check(
      CLI::IsMember({"wf", "wfprime", "theta", "empty", "klein", "twin", "relocate"}));
  example->add_option("-o,--output", a.out, "output prefix")->required();

  auto* render = app.add_subcommand("render", "SVG drawing of a born map");
  render->add_option("spoly", a.spoly)->required();
  render->add_option("arr", a.arr)->required();
  render->add_option("-o,--output", a.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kInputError;
  }
  if (!a.arr.empty() && obstruct->parsed() && a.plan.empty()) {
    std::cerr << "error: obstruct takes either a .spoly file or a .spoly, .arr and .plan triple\n";
    return kInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(a);
    if (euler->parsed()) return cmd_euler(a);
    if (homology->parsed()) return cmd_homology(a);
    if (surgery->parsed()) return cmd_surgery(a);
    if (normalize->parsed()) return cmd_normalize(a);
    if (obstruct->parsed()) return cmd_obstruct(a);
    if (graph->parsed()) return cmd_graph(a);
    if (example->parsed()) return cmd_example(a);
    if (render->parsed()) return cmd_render(a);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kInputError;
  }
  return kInputError;
}
