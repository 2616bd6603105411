#pragma once

#include <vector>

#include "amplifiber/matrix.hpp"
#include "amplifiber/rng.hpp"

namespace amplifiber {

// A fixed choice of the external data (n, k, m) together with a totally
// positive (m+k) x n matrix Z built on the moment curve and its kernel
// companion Zperp.
//
// Z is stored twice: Zraw is the Vandermonde with column i equal to
// (1, t_i, ..., t_i^{m+k-1}); Z is the row-reduced form with identity left
// block, Z = [I | z].  Total positivity is certified on Zraw, where every
// maximal minor is a product of node differences.  Zperp = [(-z)^T | I] is
// an explicit basis of ker Z with Z * Zperp^T = 0.
struct Instance {
    int n = 0;
    int k = 0;
    int m = 0;
    int ell = 0; // n - m - k
    std::vector<Rat> nodes;
    Mat Zraw;
    Mat Z;
    Mat zright; // right (m+k) x ell block of Z
    Mat Zperp;  // ell x n

    // k = 1: the image is a cyclic polytope.
    bool polytopal() const { return k == 1; }
    // k = n - m - 1: the case dual to a polytope, with a one-dimensional
    // complement per boundary interval.
    bool conjugate() const { return k == n - m - 1; }
};

// Builds the instance from strictly increasing positive nodes (default
// 1..n).  Certifies total positivity of the Vandermonde exhaustively; the
// exhaustive certificate bounds the instance to n <= 12.
Instance build_Z_moment_curve(int n, int m, int k,
                              std::vector<Rat> nodes = {});

// True iff every maximal minor (ordered columns) is strictly positive.
// Exhaustive, so restricted to at most 12 columns.
bool is_totally_positive(const Mat& m);

// A k x n matrix with all maximal minors positive: a Vandermonde on random
// increasing positive nodes with the columns rescaled by random positive
// rationals.  Both steps preserve total positivity; the result is
// re-certified and any failure is an internal error.
Mat sample_positive_C(int k, int n, Rng& rng);

// Y = C * Z^T, the image of the row span of C.  C is re-certified positive;
// a rank drop in Y is rejected as non-generic.
Mat amplituhedron_map(const Mat& C, const Instance& inst);

} // namespace amplifiber
