#pragma once

#include "amplifiber/fans.hpp"

namespace amplifiber {

// A triangulation of the fiber read off one chamber of the secondary fan:
// the chamber's sorted cone list, each cone an r-subset of boundary labels.
struct Triangulation {
    std::vector<IndexSet> cells;
    int source_chamber = -1;
};

Triangulation triangulation_from_chamber(const ChamberFan& fan, int chamber);

// Transfers a triangulation across the parity pairing (n, k, m) to
// (n, n-m-k, m); cell index sets carry over verbatim.  Restricted to the
// polytope / conjugate pair, where the cells of both fans are
// (n-m-1)-subsets.  An involution.
Triangulation parity_dual(const Triangulation& t, const Instance& from,
                          const Instance& to);

// Weak membership of w in the closed cone spanned by the rays picked by J:
// solves (rays_J) c = w and decides c >= 0 over the solution space by
// Fourier-Motzkin elimination, all exact.
bool weak_cone_member(const RaySystem& rs, const IndexSet& J, const Vec& w);

// The minimal-by-inclusion index sets (of size 1 up to r) whose closed cone
// contains w.  For w inside a lower-dimensional cone of the fan this is the
// coarse dissection that chamber refinement subdivides; by Caratheodory no
// set larger than r is ever needed.
std::vector<IndexSet> dissection_from_cone(const RaySystem& rs, const Vec& w);

} // namespace amplifiber
