#pragma once

#include "amplifiber/frame.hpp"

namespace amplifiber {

// One boundary hyperplane of the positive fiber, written in chart
// coordinates as D_i(x) = constant + <normal, x>.
struct AffineHyperplane {
    int index = 0; // 1-based boundary label
    Rat constant;
    Vec normal; // length r
};

// The n boundary forms of a fiber in one of the two linear charts, with
// every form oriented to be positive on the interior of the positive part
// of the fiber.
struct FiberForm {
    Chart chart = Chart::General;
    int r = 0; // chart dimension, n - m - 1 in the linear cases
    std::vector<AffineHyperplane> forms; // indexed 1..n in order
    std::vector<int> sign_flips;         // per-index flip (+1 or -1) applied
                                         // to the canonical complement
};

// Canonical basis of the space orthogonal to the columns of A on the j-th
// cyclic window, as rows of an ell x (n-m) matrix.  The scale of the first
// row is pinned so that stacking any lambda on top gives exactly the
// Pluecker coordinate of lambda * A on that window (see fiber_denominator).
Mat boundary_normal(const FiberFrame& frame, int j);

// det of lambda stacked over boundary_normal(frame, j); equals
// pluecker(lambda * A, I_j) identically.
Rat fiber_denominator(const Mat& lambda, const FiberFrame& frame, int j);

// Solves lambda * A = C for the frame's stored positive witness, giving a
// point in the interior of the positive part of the fiber.
Mat fiber_point_from_witness(const FiberFrame& frame);

// The n oriented boundary forms in the chart of a polytopal or conjugate
// frame.  Needs the frame's positive witness to fix the orientation.
FiberForm affine_forms(const FiberFrame& frame);

inline Rat form_value(const AffineHyperplane& h, const Vec& x) {
    return h.constant + dot(h.normal, x);
}

// Value of the fiber volume form coefficient at a full-rank lambda in the
// row basis fixed by the frame: p_J(lambda)^{-k} over the product of all n
// stacked determinants.  Works for every (n, k, m); raises a genericity
// error naming the vanishing factors when lambda sits on a pole.
Rat general_fiber_form_value(const Mat& lambda, const FiberFrame& frame);

} // namespace amplifiber
