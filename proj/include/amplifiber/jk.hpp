#pragma once

#include "amplifiber/fans.hpp"

namespace amplifiber {

// The vertex q_I of the simplicial cone on I: the unique common zero of the
// forms D_i, i in I.  Throws a genericity error when the picked normals are
// dependent.
Vec cone_vertex(const FiberForm& form, const IndexSet& I);

// Iterated residue of the fiber volume form at the flag of the cone on I:
//   1 / (|det(W_i : i in I)| * prod_{j not in I} D_j(q_I)).
// A dependent normal set or a secondary pole through q_I is a genericity
// failure.
Rat residue_at_cone(const FiberForm& form, const IndexSet& I);

// Jeffrey-Kirwan residue in the direction xi: the sum of residue_at_cone
// over all r-subsets whose cone strictly contains xi.  The direction is
// first screened by wall_hit, so a rejected xi always names the wall.
Rat jk_residue(const FiberForm& form, const Vec& xi);

// Same sum over an explicitly given cone list, for callers that already
// certified the list as the containment pattern of a chamber interior
// point.
Rat jk_residue(const FiberForm& form, const std::vector<IndexSet>& cones);

// Canonical function summand of one cell in the conjugate chart, by the
// closed ratio
//   det(W_j : j in J)^m / prod_{i not in J} det(v_i, v_j1, ..., v_jk)
// with v_i the unscaled first boundary complement row and W the oriented
// normals, normalized by (-1)^k and the sign of det(W_J).
Rat triangle_canonical(const FiberFrame& frame, const FiberForm& form,
                       const IndexSet& J);

// Canonical function of the simplex on the given Z columns at the point Y,
// for the polytope case k = 1.
Rat simplex_canonical(const Instance& inst, const Mat& Y,
                      const IndexSet& verts);

// Sum of simplex_canonical over the complements of the cells, the direct
// evaluation of a polytope triangulation.
Rat polytope_canonical_sum(const Instance& inst, const Mat& Y,
                           const std::vector<IndexSet>& cells);

struct CanonicalValue {
    Rat value;
    std::vector<IndexSet> cells;
};

// Canonical function of the fiber at the chamber of xi: reads the
// containment pattern off xi (a triangulation of the fiber) and takes the
// Jeffrey-Kirwan sum over it.  An empty pattern means xi is outside the
// support and the value is zero.
CanonicalValue canonical_function(const FiberFrame& frame, const Vec& xi);

} // namespace amplifiber
