#pragma once

#include "forms/zigzag.hpp"

#include <vector>

namespace forms {

enum class EdgeDir { Apex, Base };

struct PyramidEdge {
  MorphId morph = -1;
  EdgeDir dir = EdgeDir::Apex;
};

struct PyrNode {
  int p = 0;
  int q = 0;

  bool operator==(const PyrNode&) const = default;
  bool operator<(const PyrNode& o) const { return p != o.p ? p < o.p : q < o.q; }
};

// The triangular commutative diagram over a zigzag. Nodes are indexed (p,q)
// with 0 <= p <= q <= n; the base is (i,i), the apex (0,n). Every edge
// oriented toward the apex is a projection, every edge toward the base an
// embedding. Built level by level: base triangles factorize the base
// arrows, and each upper diamond is completed from its bottom wedge by the
// case analysis on the two wedge orientations (projection diamond,
// embedding diamond, or one of the two mixed shapes that factorize the
// composite across the wedge).
class Pyramid {
public:
  int size() const { return n_; }
  int node_count() const { return (n_ + 1) * (n_ + 2) / 2; }

  ObjectId node(int p, int q) const;
  // Edge between (p,q) and (p,q+1); the second node is the apex side.
  const PyramidEdge& edge_upright(int p, int q) const;
  // Edge between (p,q) and (p+1,q); the first node is the apex side.
  const PyramidEdge& edge_downright(int p, int q) const;

  // Throws internal on any violated structural invariant: orientation
  // predicates and commutativity of every triangle and diamond over the
  // zigzag the pyramid was built from.
  void validate(const Model& m, const Zigzag& z) const;

  // (0,0) up the left flank to (0,n), then down the right flank to (n,n).
  std::vector<PyrNode> principal_horizontal() const;

  friend Pyramid build_pyramid(const Model& m, const Zigzag& z);

private:
  int idx_node(int p, int q) const;

  int n_ = 0;
  std::vector<ObjectId> nodes_;
  std::vector<PyramidEdge> up_;    // (p,q) with 0 <= p <= q <= n-1
  std::vector<PyramidEdge> down_;  // (p,q) with 0 <= p < q <= n
};

Pyramid build_pyramid(const Model& m, const Zigzag& z);

// Transport a subobject along a node path; edges traversed with their arrow
// use direct images, edges traversed against it inverse images.
SubObject chase_path(const Model& m, const Pyramid& pyr, const std::vector<PyrNode>& path,
                     const SubObject& start);

// All horizontal zigzags from a to b (each step raises p or q by one).
std::vector<std::vector<PyrNode>> horizontal_paths(const Pyramid& pyr, PyrNode a, PyrNode b);
// All vertical zigzags from a up to b (each step raises q or lowers p).
std::vector<std::vector<PyrNode>> vertical_paths(const Pyramid& pyr, PyrNode a, PyrNode b);

// The chase criterion: forward chasing the trivial subobject lands on the
// trivial subobject and backward chasing the largest lands on the largest.
bool induces_homomorphism(const Model& m, const Zigzag& z);

// Builds the pyramid, certifies that the principal horizontal zigzag is
// collapsible (every arrow traversed against its orientation is an
// isomorphism), and composes along it. Disagreement between the certificate
// and the chase criterion is an internal error: it is the statement under
// test. The result's image maps coincide with chasing along the zigzag.
MorphId induced_homomorphism(const Model& m, const Zigzag& z);

std::string pyramid_text(const Model& m, const Pyramid& pyr);

}  // namespace forms
