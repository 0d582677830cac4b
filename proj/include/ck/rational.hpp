#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ck {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major, rectangular

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;

// gmpxx has no long long constructor; this is the one conversion point.
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

bool is_zero(const RatVec& v);

// Reduced row echelon form in place.  Returns the rank.
int rref(RatMat& m);

int rank(RatMat m);

// Basis of {x : m x = 0}, one vector per row of the result.
RatMat kernel_basis(const RatMat& m);

// Solves m x = b exactly; nullopt if inconsistent.  Free variables are set
// to zero when the solution space has positive dimension.
std::optional<RatVec> solve(const RatMat& m, const RatVec& b);

Rat det(RatMat m);

// The value as a long long; throws std::logic_error unless q is an integer
// that fits.
long long to_int(const Rat& q);

std::string to_string(const Rat& q);

IntMat int_identity(int n);
IntMat int_mul(const IntMat& a, const IntMat& b);
IntVec int_mul(const IntMat& a, const IntVec& v);

}  // namespace ck
