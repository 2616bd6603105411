#pragma once

#include <utility>
#include <vector>

#include "amplifiber/matrix.hpp"

namespace amplifiber {

// Exact determinant via fraction-free Bareiss elimination: row denominators
// are cleared first, the elimination runs over integers, and the cleared
// factor is divided back out at the end.
Rat det(const Mat& m);

// Sign of the sequence viewed as a permutation of its sorted order;
// 0 if any entry repeats.
int perm_sign(const std::vector<int>& seq);

// Sign of the concatenation (a, b) as a permutation of its sorted union;
// 0 if any index repeats.
int levi_civita(const IndexSet& a, const IndexSet& b);

// Maximal minor of m on the given columns, taken in the given order.  The
// selection must have exactly m.rows() entries.
Rat pluecker(const Mat& m, const IndexSet& cols);

// Reduced row echelon form together with the pivot column positions.
std::pair<Mat, std::vector<int>> rref(Mat m);

int rank_of(const Mat& m);

// Rows form the canonical basis of {x : m x = 0}: one basis vector per free
// column f, with entry 1 at f and the negated pivot-row entries of the rref
// at the pivot columns.  This pins the scale so downstream sign rules are
// well defined.
Mat kernel_basis(const Mat& m);

// kernel_basis of a matrix required to have full row rank, i.e. the
// (cols - rows)-dimensional space orthogonal to all rows.  Satisfies
// m * result^T = 0.
Mat orth_complement(const Mat& m);

// Solves the square system a x = b by Cramer's rule.
Vec solve_cramer(const Mat& a, const Vec& b);

Mat inverse(const Mat& m);

// Rescales to the shortest integer vector with the same direction (and the
// same orientation).  An all-zero input is returned unchanged.
Vec primitive_direction(const Vec& v);

} // namespace amplifiber
