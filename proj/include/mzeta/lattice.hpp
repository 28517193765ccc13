#pragma once
#include <vector>

namespace mz {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;  // row-major

long long igcd(long long a, long long b);
long long ilcm(long long a, long long b);
long long vgcd(const IVec& v);
IVec primitive(const IVec& v);
long long dot(const IVec& a, const IVec& b);
IVec cross(const IVec& a, const IVec& b);
IVec vsub(const IVec& a, const IVec& b);
IVec vadd(const IVec& a, const IVec& b);
IVec vscale(const IVec& a, long long k);
long long det(const IMat& cols);  // determinant of square matrix given by columns
int rank(const IMat& vectors);    // rank over Q

// Unimodular matrix (given by its columns) whose first column is the
// primitive vector v.
IMat complete_primitive(const IVec& v);
// Columns [mu, l_1, ..., l_{n-1}] of a unimodular matrix with <w, mu> = 1 and
// l_i a basis of the integer kernel of w (w primitive).
IMat kernel_completion(const IVec& w);
// Coordinates of x in the basis given by the columns of unimodular U.
IVec coords_in(const IMat& cols, const IVec& x);
IMat inverse_unimodular(const IMat& rows);  // row-major in, row-major out
IMat transpose(const IMat& m);

}  // namespace mz
