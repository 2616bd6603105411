#pragma once

#include <optional>
#include <string>

#include "amplifiber/forms.hpp"

namespace amplifiber {

enum class RayProvenance {
    FromFrame, // oriented boundary normals of a conjugate frame
    FromGale,  // columns of Zperp (secondary fan of the k = 1 case)
};

struct RaySystem {
    int r = 0;
    std::vector<Vec> rays; // n vectors of length r, indexed by boundary label
    RayProvenance provenance = RayProvenance::FromGale;
};

enum class ConeLocation { Interior, Boundary, Outside, Degenerate };

// Writes xi as a combination of the r rays picked by I.  Degenerate when
// the picked rays are dependent; otherwise classified by the signs of the
// coefficients.
ConeLocation cone_contains(const RaySystem& rs, const IndexSet& I,
                           const Vec& xi);

// A full-dimensional chamber of the arrangement of simplicial cones: an
// exact interior witness plus the sorted list of all r-subsets I whose cone
// strictly contains the witness.
struct Chamber {
    Vec witness;
    std::vector<IndexSet> cones;
};

struct ChamberFan {
    RaySystem rays;
    std::vector<Chamber> chambers;
};

// Normals of the oriented boundary forms of a polytopal or conjugate
// frame, as rays.
RaySystem rays_from_frame(const FiberFrame& frame);
RaySystem rays_from_frame(const FiberForm& form);

// Columns of Zperp: the rays of the secondary fan in the k = 1 case.
RaySystem secondary_fan_polytope(const Instance& inst);

// Point configuration in identity-left-block normal form together with its
// kernel companion; points are columns and points * dual^T = 0.
struct GalePair {
    Mat points; // m x n, [I | B]
    Mat dual;   // (n-m) x n, [-B^T | I]
};

// Normalizes the left m x m block to the identity and builds the dual.
GalePair gale_transform(const Mat& points);

// All I with xi strictly inside the cone on I.
std::vector<IndexSet> containment_pattern(const RaySystem& rs, const Vec& xi);

// A description of the wall when xi lies on one: the zero direction, a line
// spanned by one ray (r = 2), or a plane spanned by two rays (r = 3).
// Directions clearing this test have a locally constant containment
// pattern.
std::optional<std::string> wall_hit(const RaySystem& rs, const Vec& xi);

// Every full-dimensional chamber that meets at least one simplicial cone.
// r = 1 by direct sign tests, r = 2 by angular sweep over the ray
// directions, r = 3 by sign-vector search over the planes spanned by ray
// pairs with exact Fourier-Motzkin feasibility.  Chambers are sorted by
// their cone lists.
ChamberFan enumerate_chambers(const RaySystem& rs);

// Strict homogeneous feasibility of {q . x > 0 for all q}: a rational
// witness, or nothing when infeasible.
std::optional<Vec> fm_feasible(const std::vector<Vec>& ineqs, int nvars);

} // namespace amplifiber
