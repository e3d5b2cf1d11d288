#ifndef QEXTREMAL_QCOUNT_HPP
#define QEXTREMAL_QCOUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qx {

/// Arbitrary-precision integer; every q-count is exact.
using BigInt = boost::multiprecision::cpp_int;
using QCount = BigInt;

/// [n]_q = 1 + q + ... + q^(n-1). q = 1 is accepted and gives n.
QCount q_int(unsigned n, unsigned long long q);

/// [n]_q! = [1]_q [2]_q ... [n]_q. Requires q >= 2.
QCount q_factorial(unsigned n, unsigned long long q);

/// Gaussian binomial: the number of k-dimensional subspaces of F_q^n.
/// Throws OutOfRange if k > n or q < 2.
QCount q_binomial(unsigned n, unsigned k, unsigned long long q);

/// |sub(F_q^n)|, the sum of q_binomial(n, k, q) over k.
QCount subspace_count(unsigned n, unsigned long long q);

inline std::string to_decimal(const BigInt &v) { return v.str(); }

} // namespace qx

#endif // QEXTREMAL_QCOUNT_HPP
