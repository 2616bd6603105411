#pragma once

#include <cstdint>

#include "amplifiber/forms.hpp"

namespace amplifiber {

// The alpha-th dual bracket entry <Y*_alpha P>: delete row alpha of Y, append
// the Z columns picked by P as rows, take the determinant, and sign by the
// position of the deleted row.  alpha is 1-based; P needs m+1 entries so the
// stacked matrix is square.
Rat bracket_entry(const Mat& Y, const Mat& Z, int alpha, const IndexSet& P);

// Determinant of the k x k matrix whose (alpha, beta) entry is
// bracket_entry(Y, Z, alpha, Ps[beta]).  For k = 1 this is just the maximal
// minor of Z on the single window, independent of Y.
Rat bracket(const Mat& Y, const Mat& Z, const std::vector<IndexSet>& Ps);

// Exponent s_j attached to the j-th cyclic window: j when the window
// contains n, k*j otherwise.
int interval_sign_exponent(int j, int k, int n);

// xi_J, the sum of interval_sign_exponent over j in J.
int orientation_exponent(const IndexSet& J, int k, int n);

struct IdentityCheck {
    Rat lhs;
    Rat rhs;
    bool equal = false;
};

// Compares det of the oriented ray normals on J against the matching sign
// times the bracket of the complementary windows:
//   lhs = det(W_j : j in J),  rhs = (-1)^{xi_J} <<complement windows>>.
// Needs the conjugate chart, where both sides are k x k determinants.
IdentityCheck ray_bracket_identity(const FiberFrame& frame,
                                   const FiberForm& form, const IndexSet& J);

// Componentwise refinement at a single boundary: every coordinate of the
// oriented normal W_j equals (-1)^{s_j} times the corresponding bracket
// entry of the complementary window.
bool ray_bracket_components(const FiberFrame& frame, const FiberForm& form,
                            int j);

// Sign normalization gamma(k) = (-1)^{ceil(k/2)} making the positivity
// statement below uniform in k.  Pinned by the consistency tests.
int conjecture_orientation(int k);

struct ConjectureViolation {
    int sample = 0;
    IndexSet J;
    Rat value;
};

struct ConjectureReport {
    int samples = 0;
    bool has_min = false;
    Rat min_value;
    std::vector<ConjectureViolation> violations;
};

// Positivity sweep over random certified-positive C: for every k-subset J
// the normalized quantity
//   gamma(k) * eps(J, Jbar) * (-1)^{xi_J} * <<complement windows of J>>
// is expected to be strictly positive.  Non-positive values are recorded as
// violations (they do not throw).  Restricted to the polytope-dual case
// k = n - m - 1 with even m, where the windows complement to bracket size.
ConjectureReport conjecture_check(const Instance& inst, int samples,
                                  uint64_t seed);

} // namespace amplifiber
