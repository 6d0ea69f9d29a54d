#ifndef TROPGW_TROPICAL_CURVE_HPP
#define TROPGW_TROPICAL_CURVE_HPP

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "tropgw/fan.hpp"
#include "tropgw/numeric.hpp"

namespace tropgw::curves {

struct NotATree : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotBalanced : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotTrivalent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Vertex {
  int genus = 0;
};

struct Edge {
  int v = 0;
  int w = 0;
  Rat length = Rat(1);  // positive; degenerations contract edges instead
};

struct Leg {
  int vertex = 0;
  int marking = 0;  // labels 1..n, distinct
};

// Abstract tropical curve: connected decorated graph. Flags (half-edges)
// are the primitive incidence notion; legs are flags without partners.
struct TropicalCurve {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Leg> legs;

  bool connected() const;
  int betti1() const;
  int genus() const;  // betti1 + sum of vertex genera
  int valence(int vertex) const;
  std::optional<int> leg_with_marking(int marking) const;

  // Throws std::invalid_argument on malformed data (disconnected graph,
  // repeated markings, nonpositive lengths).
  void validate() const;
};

// A step along a path: an edge traversed forward (v->w) or backward.
struct PathStep {
  int edge = 0;
  bool forward = true;
  int from(const TropicalCurve& c) const {
    return forward ? c.edges[edge].v : c.edges[edge].w;
  }
  int to(const TropicalCurve& c) const {
    return forward ? c.edges[edge].w : c.edges[edge].v;
  }
};

// Unique simple path between two vertices of a tree, as directed flags.
std::vector<PathStep> tree_path(const TropicalCurve& curve, int a, int b);

// Parameterized tropical map to Q^target_rank. Edge slopes are stored at
// the v-end (direction and weight combined); the w-end carries the
// negative. Leg slopes are outgoing.
struct TropicalMap {
  TropicalCurve curve;
  int target_rank = 0;
  std::vector<VecZ> edge_slopes;
  std::vector<VecZ> leg_slopes;
  std::vector<VecQ> positions;

  // Exact check of position(w) = position(v) + length * slope per edge.
  bool edge_compatible() const;
};

struct BalancingReport {
  bool balanced = false;
  std::vector<VecZ> residuals;  // per vertex, exact
};

// Slope data without metric or positions, with optional target cone
// decorations per vertex / edge / leg for the stability check.
struct CombinatorialType {
  TropicalCurve curve;  // edge lengths ignored
  int target_rank = 0;
  std::vector<VecZ> edge_slopes;
  std::vector<VecZ> leg_slopes;
  bool has_cones = false;
  std::vector<fans::Cone> vertex_cones;
  std::vector<fans::Cone> edge_cones;
  std::vector<fans::Cone> leg_cones;
};

BalancingReport balancing_check(const TropicalMap& map);
BalancingReport balancing_check(const CombinatorialType& type);

struct StabilityViolation {
  int vertex = 0;
  std::string reason;
};

struct StabilityReport {
  bool stable = false;
  std::vector<StabilityViolation> violations;
};

// Artin-fan stability: linear bivalent vertices must see at least two
// distinct cones among their own and their flags'; contracted vertices
// need positive genus or valence >= 3. Requires a balanced type with cone
// decorations; throws NotBalanced otherwise.
StabilityReport stability_check(const CombinatorialType& type);

// Pins the anchor (a vertex, or the vertex carrying a marking) at the given
// position and propagates through the tree. Exact, unique.
struct Anchor {
  std::variant<int, std::pair<int, int>> at;  // vertex index, or (tag, marking)
  VecQ position;
  static Anchor vertex(int v, VecQ pos) { return Anchor{v, std::move(pos)}; }
  static Anchor marking(int m, VecQ pos) {
    return Anchor{std::make_pair(0, m), std::move(pos)};
  }
};

TropicalMap solve_balanced_map(const CombinatorialType& type,
                               const std::vector<Rat>& edge_lengths,
                               const Anchor& anchor);

// The stable model of a map over a complete fan: edges and legs are
// subdivided where they cross walls, and every vertex, edge and leg gets
// the cone whose relative interior contains its generic image point.
CombinatorialType artin_type_of_map(const TropicalMap& map, const fans::Fan& fan);

}  // namespace tropgw::curves

#endif
