#pragma once

// Incidence graphs of disks in a polyhedron, orientation propagation, and the
// closed non-orientable subsurface obstruction to embedding in S^3.

#include <optional>
#include <string>
#include <vector>

#include "spine/born_map.hpp"
#include "spine/surfaces.hpp"
#include "spine/surgery.hpp"

namespace spine {

// A triple arc met by a disk, with the two sheets the disk passes through.
struct DiskArc {
  std::string arc;
  std::string sheet_a;
  std::string sheet_b;

  friend bool operator==(const DiskArc&, const DiskArc&) = default;
};

struct DiskInP {
  std::string id;
  EmbeddedCircle boundary;
  std::vector<std::string> sheets;
  std::vector<DiskArc> arcs;
  // The map restricted to the disks is claimed to be an embedding.
  bool embedding = true;

  friend bool operator==(const DiskInP&, const DiskInP&) = default;
};

struct GraphEdge {
  std::string arc;
  std::string u;
  std::string v;
  // +1 when u and v need equal signs, -1 when opposite.
  int parity = 1;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct IncidenceGraph {
  std::string disk;
  std::vector<std::string> vertices;  // sorted
  std::vector<GraphEdge> edges;

  bool contains(const IncidenceGraph& other) const;

  friend bool operator==(const IncidenceGraph&, const IncidenceGraph&) = default;
};

IncidenceGraph build_graph(const BornMap& c, const DiskInP& d);

// Index of a graph containing every other one, or nullopt.
std::optional<int> maximal_graph(const std::vector<IncidenceGraph>& graphs);

struct Orientation {
  bool consistent = true;
  std::map<std::string, int> signs;
  // On contradiction: a closed walk of sheets whose parities multiply to -1.
  std::vector<std::string> cycle;
};

Orientation orient_sheets(const BornMap& c, const IncidenceGraph& g,
                          const std::pair<std::string, int>& seed);

enum class Verdict { Obstructed, NonOrientableSubsurfaceOnly, NotObstructed };
std::string to_string(Verdict v);

struct ObstructionReport {
  std::vector<IncidenceGraph> graphs;
  std::optional<int> maximal;
  Orientation orientation;
  std::vector<SurfaceSelection> non_orientable;
  bool truncated = false;
  Verdict verdict = Verdict::NotObstructed;
  std::vector<std::string> notes;

  std::string to_text() const;
};

// `in_closed_submanifold` is the hypothesis that the union of the disks sits
// in a closed connected PL submanifold of P.
ObstructionReport check_mt3_case2(const BornMap& c, const std::vector<DiskInP>& disks,
                                  const BornMap& surgered, bool in_closed_submanifold,
                                  long bound = 200000);

struct EmbeddingWitness {
  int heegaard_genus = 0;
  std::string note;
};

struct TargetManifold {
  int base_genus = 0;
  std::vector<bool> twisted;  // one flag per sphere-bundle summand

  int summand_count() const { return static_cast<int>(twisted.size()); }
  std::string describe() const;
};

TargetManifold heegaard_target(const EmbeddingWitness& w, int l, std::vector<bool> twisted = {});

// Checks that every disk meets the branch in at most one interval first.
TargetManifold heegaard_target(const EmbeddingWitness& w, const std::vector<DiskInP>& disks,
                               std::vector<bool> twisted = {});

struct S3Verdict {
  bool obstructed = false;
  std::optional<SurfaceSelection> witness;
  bool truncated = false;
  long examined = 0;

  std::string to_text() const;
};

S3Verdict s3_obstruction(const SimplePolyhedron& p, long bound);

}  // namespace spine
