#ifndef NCSYMP_TRIANGULATION_HPP
#define NCSYMP_TRIANGULATION_HPP

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "ncsymp/errors.hpp"

namespace ncsymp {

/// One side of a triangle.  `forward` records whether the stored orientation
/// of the edge agrees with the triangle's traversal corner[s] -> corner[s+1].
struct TriSide {
  int edge = -1;
  bool forward = true;
};

/// Cyclically ordered triangle: side s runs from corner[s] to corner[(s+1)%3].
/// Corners are vertex classes; on the punctured torus they all coincide.
struct TriangleRec {
  std::array<int, 3> corner{};
  std::array<TriSide, 3> side{};
};

struct EdgeRec {
  int tail = 0;
  int head = 0;
  std::array<int, 2> tri{-1, -1};
  std::string name;
};

/// Directed read of an edge variable: the value along the requested direction
/// is the stored variable when `agrees`, otherwise its sigma-image.
struct DirectedRead {
  int edge = -1;
  bool agrees = true;
};

/// The six directed reads entering the exchange formula
/// X_jl = X_jk X_ik^(-1) X_il + X_ji X_ki^(-1) X_kl
/// for the quadrilateral (i, j, k, l) around a flipped edge i -> k.
struct QuadReads {
  DirectedRead jk, ik, il, ji, ki, kl;
};

class Triangulation {
 public:
  int vertex_count = 0;
  std::vector<EdgeRec> edges;
  std::vector<TriangleRec> triangles;

  int edge_by_name(const std::string& name) const {
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].name == name) return static_cast<int>(e);
    throw missing_edge("no edge named " + name);
  }

  bool is_interior(int e) const { return edges.at(static_cast<std::size_t>(e)).tri[1] >= 0; }

  void rebuild_incidence() {
    for (auto& e : edges) e.tri = {-1, -1};
    for (std::size_t t = 0; t < triangles.size(); ++t) {
      for (const TriSide& s : triangles[t].side) {
        auto& rec = edges.at(static_cast<std::size_t>(s.edge));
        if (rec.tri[0] == static_cast<int>(t) || rec.tri[1] == static_cast<int>(t)) continue;
        if (rec.tri[0] < 0) rec.tri[0] = static_cast<int>(t);
        else if (rec.tri[1] < 0) rec.tri[1] = static_cast<int>(t);
        else throw error("edge incident to more than two triangles");
      }
    }
  }

  /// Shape-only fingerprint: vertex count plus sorted corner triples and edge
  /// endpoint pairs.  Two triangulations of the same surface produced by
  /// flip / unflip compare equal.
  std::vector<std::array<int, 3>> signature() const {
    std::vector<std::array<int, 3>> sig;
    for (const auto& t : triangles) {
      std::array<int, 3> c = t.corner;
      std::sort(c.begin(), c.end());
      sig.push_back(c);
    }
    for (const auto& e : edges) {
      std::array<int, 3> c{std::min(e.tail, e.head), std::max(e.tail, e.head), -1};
      sig.push_back(c);
    }
    std::sort(sig.begin(), sig.end());
    sig.push_back({vertex_count, -1, -1});
    return sig;
  }
};

/// Ideal triangulation of the once-punctured torus: one vertex, three edges
/// A, B, C, and two triangles each using all three edges.
inline Triangulation torus_triangulation() {
  Triangulation t;
  t.vertex_count = 1;
  t.edges = {{0, 0, {0, 1}, "A"}, {0, 0, {0, 1}, "B"}, {0, 0, {0, 1}, "C"}};
  TriangleRec t0;
  t0.corner = {0, 0, 0};
  t0.side = {TriSide{0, true}, TriSide{2, true}, TriSide{1, true}};  // A, C, B
  TriangleRec t1;
  t1.corner = {0, 0, 0};
  t1.side = {TriSide{0, true}, TriSide{1, true}, TriSide{2, true}};  // A, B, C
  t.triangles = {t0, t1};
  return t;
}

/// Fan triangulation of a convex n-gon (disk with n marked boundary points):
/// boundary edges b0..b(n-1) and diagonals d2..d(n-2) from vertex 0.
inline Triangulation polygon_triangulation(int n) {
  if (n < 3) throw error("polygon needs at least 3 vertices");
  Triangulation t;
  t.vertex_count = n;
  for (int i = 0; i < n; ++i) t.edges.push_back({i, (i + 1) % n, {-1, -1}, "b" + std::to_string(i)});
  std::vector<int> diagonal_ids(static_cast<std::size_t>(n), -1);
  for (int i = 2; i <= n - 2; ++i) {
    diagonal_ids[static_cast<std::size_t>(i)] = static_cast<int>(t.edges.size());
    t.edges.push_back({0, i, {-1, -1}, "d" + std::to_string(i)});
  }
  auto edge_to = [&](int i) { return i == 1 ? 0 : diagonal_ids[static_cast<std::size_t>(i)]; };
  for (int i = 1; i <= n - 2; ++i) {
    TriangleRec tri;
    tri.corner = {0, i, i + 1};
    tri.side[0] = TriSide{edge_to(i), true};  // 0 -> i (b0 when i == 1, else d_i forward)
    tri.side[1] = TriSide{i, true};           // i -> i+1 along the boundary
    if (i + 1 == n - 1) {
      tri.side[2] = TriSide{n - 1, true};  // (n-1) -> 0 boundary edge
    } else {
      tri.side[2] = TriSide{edge_to(i + 1), false};  // (i+1) -> 0 against d_(i+1)
    }
    t.triangles.push_back(tri);
  }
  t.rebuild_incidence();
  return t;
}

struct FlipResult {
  Triangulation tri;
  QuadReads reads;
  int new_edge = -1;  // same id as the flipped edge, now joining j -> l
};

namespace detail {

// quad corner roles
enum QuadRole { QI = 0, QJ = 1, QK = 2, QL = 3 };

struct QuadSide {
  int edge = -1;
  QuadRole from = QI, to = QI;  // stored orientation in role space
};

}  // namespace detail

/// Flips an interior edge.  The returned QuadReads let the caller evaluate
/// the exchange formula against its own variable assignment; the returned
/// triangulation has the flipped edge joining the two apexes (stored j -> l).
inline FlipResult flip_edge(const Triangulation& input, int e) {
  using detail::QuadRole;
  using detail::QuadSide;
  if (e < 0 || e >= static_cast<int>(input.edges.size())) throw missing_edge();
  if (!input.is_interior(e)) throw boundary_edge("edge " + input.edges[static_cast<std::size_t>(e)].name);

  const int t0 = input.edges[static_cast<std::size_t>(e)].tri[0];
  const int t1 = input.edges[static_cast<std::size_t>(e)].tri[1];
  auto side_index = [&](int t) {
    const auto& tri = input.triangles[static_cast<std::size_t>(t)];
    for (int s = 0; s < 3; ++s)
      if (tri.side[static_cast<std::size_t>(s)].edge == e) return s;
    throw error("incidence out of sync");
  };
  const int s0 = side_index(t0), s1 = side_index(t1);
  const auto& tri0 = input.triangles[static_cast<std::size_t>(t0)];
  const auto& tri1 = input.triangles[static_cast<std::size_t>(t1)];

  // Record the four outer quad sides with their stored orientations in role
  // space.  In a triangle traversing the diagonal forwards the local picture
  // is i -> k -> apex -> i; backwards it is k -> i -> apex -> k.
  std::array<QuadSide, 4> outer{};
  auto fill = [&](const TriangleRec& tri, int s, QuadRole apex, int slot) {
    const bool fwd = tri.side[static_cast<std::size_t>(s)].forward;
    const QuadRole after = fwd ? QuadRole::QK : QuadRole::QI;   // corner[s+1]
    const QuadRole before = fwd ? QuadRole::QI : QuadRole::QK;  // corner[s]
    const TriSide& mid = tri.side[static_cast<std::size_t>((s + 1) % 3)];  // corner[s+1] -> apex
    const TriSide& last = tri.side[static_cast<std::size_t>((s + 2) % 3)];  // apex -> corner[s]
    outer[static_cast<std::size_t>(slot)] =
        QuadSide{mid.edge, mid.forward ? after : apex, mid.forward ? apex : after};
    outer[static_cast<std::size_t>(slot + 1)] =
        QuadSide{last.edge, last.forward ? apex : before, last.forward ? before : apex};
  };
  fill(tri0, s0, QuadRole::QJ, 0);
  fill(tri1, s1, QuadRole::QL, 2);

  auto read = [&](QuadRole u, QuadRole v) -> DirectedRead {
    if ((u == QuadRole::QI && v == QuadRole::QK) || (u == QuadRole::QK && v == QuadRole::QI))
      return DirectedRead{e, u == QuadRole::QI};
    for (const QuadSide& s : outer) {
      if ((s.from == u && s.to == v)) return DirectedRead{s.edge, true};
      if ((s.from == v && s.to == u)) return DirectedRead{s.edge, false};
    }
    throw error("quad side lookup failed");
  };

  FlipResult out;
  out.new_edge = e;
  out.reads = QuadReads{read(QuadRole::QJ, QuadRole::QK), read(QuadRole::QI, QuadRole::QK),
                        read(QuadRole::QI, QuadRole::QL), read(QuadRole::QJ, QuadRole::QI),
                        read(QuadRole::QK, QuadRole::QI), read(QuadRole::QK, QuadRole::QL)};

  // vertex classes of the quad corners
  auto vertex_of_apex = [&](const TriangleRec& tri, int s) {
    return tri.corner[static_cast<std::size_t>((s + 2) % 3)];
  };
  const int vj = vertex_of_apex(tri0, s0);
  const int vl = vertex_of_apex(tri1, s1);
  const int vi = tri0.side[static_cast<std::size_t>(s0)].forward
                     ? tri0.corner[static_cast<std::size_t>(s0)]
                     : tri0.corner[static_cast<std::size_t>((s0 + 1) % 3)];
  const int vk = tri0.side[static_cast<std::size_t>(s0)].forward
                     ? tri0.corner[static_cast<std::size_t>((s0 + 1) % 3)]
                     : tri0.corner[static_cast<std::size_t>(s0)];

  Triangulation next = input;
  next.edges[static_cast<std::size_t>(e)].tail = vj;
  next.edges[static_cast<std::size_t>(e)].head = vl;

  auto outer_read = [&](QuadRole u, QuadRole v) { return read(u, v); };
  auto side_for = [&](QuadRole u, QuadRole v) {
    DirectedRead r = outer_read(u, v);
    return TriSide{r.edge, r.agrees};
  };

  TriangleRec u0;  // (j, l, i): j -> l is the new edge, then l -> i, i -> j
  u0.corner = {vj, vl, vi};
  u0.side = {TriSide{e, true}, side_for(QuadRole::QL, QuadRole::QI), side_for(QuadRole::QI, QuadRole::QJ)};
  TriangleRec u1;  // (l, j, k): l -> j against the new edge, then j -> k, k -> l
  u1.corner = {vl, vj, vk};
  u1.side = {TriSide{e, false}, side_for(QuadRole::QJ, QuadRole::QK), side_for(QuadRole::QK, QuadRole::QL)};

  next.triangles[static_cast<std::size_t>(t0)] = u0;
  next.triangles[static_cast<std::size_t>(t1)] = u1;
  next.rebuild_incidence();
  out.tri = std::move(next);
  return out;
}

}  // namespace ncsymp

#endif  // NCSYMP_TRIANGULATION_HPP
