#include "tropgw/tropical_curve.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>

namespace tropgw::curves {

bool TropicalCurve::connected() const {
  if (vertices.empty()) return false;
  std::vector<char> seen(vertices.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& e : edges) {
      int other = -1;
      if (e.v == v) other = e.w;
      if (e.w == v) other = e.v;
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        ++count;
        q.push(other);
      }
    }
  }
  return count == int(vertices.size());
}

int TropicalCurve::betti1() const {
  return int(edges.size()) - int(vertices.size()) + 1;
}

int TropicalCurve::genus() const {
  int g = betti1();
  for (const auto& v : vertices) g += v.genus;
  return g;
}

int TropicalCurve::valence(int vertex) const {
  int n = 0;
  for (const auto& e : edges) {
    if (e.v == vertex) ++n;
    if (e.w == vertex) ++n;  // a loop counts twice
  }
  for (const auto& l : legs)
    if (l.vertex == vertex) ++n;
  return n;
}

std::optional<int> TropicalCurve::leg_with_marking(int marking) const {
  for (size_t i = 0; i < legs.size(); ++i)
    if (legs[i].marking == marking) return int(i);
  return std::nullopt;
}

void TropicalCurve::validate() const {
  if (vertices.empty()) throw std::invalid_argument("curve has no vertices");
  for (const auto& e : edges) {
    if (e.v < 0 || e.v >= int(vertices.size()) || e.w < 0 ||
        e.w >= int(vertices.size()))
      throw std::invalid_argument("edge endpoint out of range");
    if (e.length <= 0) throw std::invalid_argument("edge length must be positive");
  }
  std::set<int> markings;
  for (const auto& l : legs) {
    if (l.vertex < 0 || l.vertex >= int(vertices.size()))
      throw std::invalid_argument("leg vertex out of range");
    if (!markings.insert(l.marking).second)
      throw std::invalid_argument("repeated marking label");
  }
  if (!connected()) throw std::invalid_argument("curve is not connected");
}

std::vector<PathStep> tree_path(const TropicalCurve& curve, int a, int b) {
  if (curve.betti1() != 0 || !curve.connected())
    throw NotATree("path lookup requires a tree");
  if (a == b) return {};
  // BFS parents.
  std::vector<int> parent_edge(curve.vertices.size(), -1);
  std::vector<int> parent_vertex(curve.vertices.size(), -1);
  std::vector<char> seen(curve.vertices.size(), 0);
  std::queue<int> q;
  q.push(a);
  seen[a] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == b) break;
    for (size_t i = 0; i < curve.edges.size(); ++i) {
      const auto& e = curve.edges[i];
      int other = -1;
      if (e.v == v) other = e.w;
      if (e.w == v) other = e.v;
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        parent_edge[other] = int(i);
        parent_vertex[other] = v;
        q.push(other);
      }
    }
  }
  assert(seen[b]);
  std::vector<PathStep> rev;
  int cur = b;
  while (cur != a) {
    int e = parent_edge[cur];
    rev.push_back(PathStep{e, curve.edges[e].w == cur});
    cur = parent_vertex[cur];
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

bool TropicalMap::edge_compatible() const {
  for (size_t i = 0; i < curve.edges.size(); ++i) {
    const auto& e = curve.edges[i];
    for (int k = 0; k < target_rank; ++k) {
      Rat expect = positions[e.v][k] + e.length * Rat(edge_slopes[i][k]);
      if (positions[e.w][k] != expect) return false;
    }
  }
  return true;
}

namespace {

// Sum of outgoing slopes per vertex, shared by both balancing overloads.
std::vector<VecZ> residuals_of(const TropicalCurve& curve, int target_rank,
                               const std::vector<VecZ>& edge_slopes,
                               const std::vector<VecZ>& leg_slopes) {
  std::vector<VecZ> res(curve.vertices.size(), VecZ(target_rank, Int(0)));
  for (size_t i = 0; i < curve.edges.size(); ++i) {
    const auto& e = curve.edges[i];
    res[e.v] = add(res[e.v], edge_slopes[i]);
    res[e.w] = add(res[e.w], neg(edge_slopes[i]));
  }
  for (size_t i = 0; i < curve.legs.size(); ++i)
    res[curve.legs[i].vertex] = add(res[curve.legs[i].vertex], leg_slopes[i]);
  return res;
}

BalancingReport report_from(const std::vector<VecZ>& res) {
  BalancingReport r;
  r.residuals = res;
  r.balanced = true;
  for (const auto& v : res)
    if (!is_zero(v)) r.balanced = false;
  return r;
}

}  // namespace

BalancingReport balancing_check(const TropicalMap& map) {
  return report_from(residuals_of(map.curve, map.target_rank, map.edge_slopes,
                                  map.leg_slopes));
}

BalancingReport balancing_check(const CombinatorialType& type) {
  return report_from(residuals_of(type.curve, type.target_rank, type.edge_slopes,
                                  type.leg_slopes));
}

StabilityReport stability_check(const CombinatorialType& type) {
  if (!balancing_check(type).balanced)
    throw NotBalanced("stability is only defined for balanced types");
  StabilityReport rep;
  rep.stable = true;
  const auto& c = type.curve;
  for (int v = 0; v < int(c.vertices.size()); ++v) {
    // Collect the flags at v: (slope, cone index source).
    std::vector<VecZ> slopes;
    std::vector<const fans::Cone*> flag_cones;
    for (size_t i = 0; i < c.edges.size(); ++i) {
      if (c.edges[i].v == v) {
        slopes.push_back(type.edge_slopes[i]);
        if (type.has_cones) flag_cones.push_back(&type.edge_cones[i]);
      }
      if (c.edges[i].w == v) {
        slopes.push_back(neg(type.edge_slopes[i]));
        if (type.has_cones) flag_cones.push_back(&type.edge_cones[i]);
      }
    }
    for (size_t i = 0; i < c.legs.size(); ++i)
      if (c.legs[i].vertex == v) {
        slopes.push_back(type.leg_slopes[i]);
        if (type.has_cones) flag_cones.push_back(&type.leg_cones[i]);
      }

    bool contracted = true;
    for (const auto& s : slopes)
      if (!is_zero(s)) contracted = false;

    if (contracted) {
      if (c.vertices[v].genus == 0 && int(slopes.size()) < 3) {
        rep.stable = false;
        rep.violations.push_back({v, "contracted genus-0 vertex with fewer than 3 flags"});
      }
      continue;
    }

    bool linear_bivalent = c.vertices[v].genus == 0 && slopes.size() == 2 &&
                           slopes[0] == neg(slopes[1]) && !is_zero(slopes[0]);
    if (linear_bivalent) {
      if (!type.has_cones) {
        rep.stable = false;
        rep.violations.push_back({v, "linear bivalent vertex without cone data"});
        continue;
      }
      const fans::Cone& vc = type.vertex_cones[v];
      if (vc == *flag_cones[0] && vc == *flag_cones[1]) {
        rep.stable = false;
        rep.violations.push_back({v, "linear bivalent vertex with coinciding cones"});
      }
    }
  }
  return rep;
}

TropicalMap solve_balanced_map(const CombinatorialType& type,
                               const std::vector<Rat>& edge_lengths,
                               const Anchor& anchor) {
  const auto& c = type.curve;
  if (!c.connected() || c.betti1() != 0)
    throw NotATree("unique balanced maps are solved on trees only");
  if (!balancing_check(type).balanced)
    throw NotBalanced("slopes are not balanced");
  if (edge_lengths.size() != c.edges.size())
    throw std::invalid_argument("one length per edge required");
  for (const auto& l : edge_lengths)
    if (l <= 0) throw std::invalid_argument("edge lengths must be positive");

  int root;
  if (std::holds_alternative<int>(anchor.at)) {
    root = std::get<int>(anchor.at);
  } else {
    int marking = std::get<std::pair<int, int>>(anchor.at).second;
    auto leg = c.leg_with_marking(marking);
    if (!leg) throw std::invalid_argument("anchor marking not present");
    root = c.legs[*leg].vertex;
  }

  TropicalMap map;
  map.curve = c;
  for (size_t i = 0; i < c.edges.size(); ++i) map.curve.edges[i].length = edge_lengths[i];
  map.target_rank = type.target_rank;
  map.edge_slopes = type.edge_slopes;
  map.leg_slopes = type.leg_slopes;
  map.positions.assign(c.vertices.size(), VecQ(type.target_rank, Rat(0)));

  std::vector<char> seen(c.vertices.size(), 0);
  std::queue<int> q;
  map.positions[root] = anchor.position;
  seen[root] = 1;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (size_t i = 0; i < c.edges.size(); ++i) {
      const auto& e = c.edges[i];
      if (e.v == v && !seen[e.w]) {
        for (int k = 0; k < map.target_rank; ++k)
          map.positions[e.w].at(k) =
              map.positions[v][k] + edge_lengths[i] * Rat(type.edge_slopes[i][k]);
        seen[e.w] = 1;
        q.push(e.w);
      } else if (e.w == v && !seen[e.v]) {
        for (int k = 0; k < map.target_rank; ++k)
          map.positions[e.v].at(k) =
              map.positions[v][k] - edge_lengths[i] * Rat(type.edge_slopes[i][k]);
        seen[e.v] = 1;
        q.push(e.v);
      }
    }
  }
  assert(map.edge_compatible());
  return map;
}

namespace {

// Wall-crossing parameters of the segment p + t*dir for t in (0, hi), or
// t in (0, inf) when hi is absent: values where the segment meets a cone
// of positive codimension.
std::vector<Rat> crossing_params(const fans::Fan& fan, const VecQ& p,
                                 const VecQ& dir, const std::optional<Rat>& hi) {
  std::set<Rat> ts;
  for (const fans::Cone* c : fan.maximal_cones())
    for (const auto& n : c->facet_normals()) {
      Rat np = dot(to_vecq(n), p);
      Rat nd = dot(to_vecq(n), dir);
      if (nd == 0) continue;
      Rat t = -np / nd;
      if (t <= 0) continue;
      if (hi && t >= *hi) continue;
      // Facet hyperplanes extend past the actual walls; keep only genuine
      // wall points.
      VecQ x = add(p, scale(t, dir));
      if (fan.find_cone(x).cone->dim() < fan.ambient_rank()) ts.insert(t);
    }
  return std::vector<Rat>(ts.begin(), ts.end());
}

const fans::Cone& locate(const fans::Fan& fan, const VecQ& x) {
  return *fan.find_cone(x).cone;
}

}  // namespace

CombinatorialType artin_type_of_map(const TropicalMap& map, const fans::Fan& fan) {
  CombinatorialType out;
  out.target_rank = map.target_rank;
  out.has_cones = true;
  const auto& c = map.curve;

  out.curve.vertices = c.vertices;
  out.vertex_cones.reserve(c.vertices.size());
  for (size_t v = 0; v < c.vertices.size(); ++v)
    out.vertex_cones.push_back(locate(fan, map.positions[v]));

  // Edges: subdivide at wall crossings; inserted vertices are genus 0.
  for (size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    VecQ p = map.positions[e.v];
    VecQ dir(map.target_rank);
    for (int k = 0; k < map.target_rank; ++k)
      dir[k] = Rat(map.edge_slopes[i][k]);
    std::vector<Rat> ts = crossing_params(fan, p, dir, e.length);
    int prev = e.v;
    Rat prev_t = 0;
    for (const Rat& t : ts) {
      int nv = int(out.curve.vertices.size());
      out.curve.vertices.push_back(Vertex{0});
      out.vertex_cones.push_back(locate(fan, add(p, scale(t, dir))));
      Rat mid = (prev_t + t) / 2;
      out.curve.edges.push_back(Edge{prev, nv, t - prev_t});
      out.edge_slopes.push_back(map.edge_slopes[i]);
      out.edge_cones.push_back(locate(fan, add(p, scale(mid, dir))));
      prev = nv;
      prev_t = t;
    }
    Rat mid = (prev_t + e.length) / 2;
    out.curve.edges.push_back(Edge{prev, e.w, e.length - prev_t});
    out.edge_slopes.push_back(map.edge_slopes[i]);
    out.edge_cones.push_back(locate(fan, add(p, scale(mid, dir))));
  }

  // Legs: subdivide crossings, the final unbounded piece keeps the leg.
  for (size_t i = 0; i < c.legs.size(); ++i) {
    const auto& l = c.legs[i];
    VecQ p = map.positions[l.vertex];
    VecQ dir(map.target_rank);
    for (int k = 0; k < map.target_rank; ++k) dir[k] = Rat(map.leg_slopes[i][k]);
    if (is_zero(dir)) {
      out.curve.legs.push_back(l);
      out.leg_slopes.push_back(map.leg_slopes[i]);
      out.leg_cones.push_back(locate(fan, p));
      continue;
    }
    std::vector<Rat> ts = crossing_params(fan, p, dir, std::nullopt);
    int prev = l.vertex;
    Rat prev_t = 0;
    for (const Rat& t : ts) {
      int nv = int(out.curve.vertices.size());
      out.curve.vertices.push_back(Vertex{0});
      out.vertex_cones.push_back(locate(fan, add(p, scale(t, dir))));
      Rat mid = (prev_t + t) / 2;
      out.curve.edges.push_back(Edge{prev, nv, t - prev_t});
      out.edge_slopes.push_back(map.leg_slopes[i]);
      out.edge_cones.push_back(locate(fan, add(p, scale(mid, dir))));
      prev = nv;
      prev_t = t;
    }
    out.curve.legs.push_back(Leg{prev, l.marking});
    out.leg_slopes.push_back(map.leg_slopes[i]);
    out.leg_cones.push_back(locate(fan, add(p, scale(prev_t + 1, dir))));
  }

  return out;
}

}  // namespace tropgw::curves
