#include "qextremal/qcount.hpp"

#include "qextremal/errors.hpp"

namespace qx {

namespace {

void require_q_at_least_two(unsigned long long q) {
  if (q < 2)
    throw OutOfRange("q-binomial counting requires q >= 2, got " +
                     std::to_string(q));
}

} // namespace

QCount q_int(unsigned n, unsigned long long q) {
  if (q == 0)
    throw OutOfRange("q_int requires q >= 1");
  QCount sum = 0;
  QCount power = 1;
  for (unsigned i = 0; i < n; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

QCount q_factorial(unsigned n, unsigned long long q) {
  require_q_at_least_two(q);
  QCount result = 1;
  for (unsigned i = 1; i <= n; ++i)
    result *= q_int(i, q);
  return result;
}

QCount q_binomial(unsigned n, unsigned k, unsigned long long q) {
  require_q_at_least_two(q);
  if (k > n)
    throw OutOfRange("q_binomial: k = " + std::to_string(k) + " > n = " +
                     std::to_string(n));
  const QCount num = q_factorial(n, q);
  const QCount den = q_factorial(k, q) * q_factorial(n - k, q);
  QCount quotient;
  QCount remainder;
  boost::multiprecision::divide_qr(num, den, quotient, remainder);
  if (remainder != 0)
    throw Error("q_binomial: inexact division"); // cannot happen
  return quotient;
}

QCount subspace_count(unsigned n, unsigned long long q) {
  QCount total = 0;
  for (unsigned k = 0; k <= n; ++k)
    total += q_binomial(n, k, q);
  return total;
}

} // namespace qx
