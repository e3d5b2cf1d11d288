#include "qextremal/field.hpp"

#include "qextremal/errors.hpp"

#include <array>
#include <string>

namespace qx {

namespace {

constexpr int kMaxDegree = 8; // 2^8 = kHardMaxOrder

using Digits = std::array<int, 2 * kMaxDegree>;

Digits to_digits(int code, int p, int e) {
  Digits d{};
  for (int i = 0; i < e; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

int from_digits(const Digits &d, int p, int e) {
  int code = 0;
  for (int i = e - 1; i >= 0; --i)
    code = code * p + d[i];
  return code;
}

/// Remainder of poly (degree < len) modulo a monic polynomial over F_p.
std::vector<int> poly_mod(std::vector<int> poly, const std::vector<int> &mod,
                          int p) {
  const int deg = static_cast<int>(mod.size()) - 1;
  for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
    const int c = poly[i] % p;
    if (c == 0)
      continue;
    for (int j = 0; j <= deg; ++j)
      poly[i - deg + j] = ((poly[i - deg + j] - c * mod[j]) % p + p) % p;
  }
  poly.resize(std::min<std::size_t>(poly.size(), deg));
  return poly;
}

} // namespace

bool is_prime(long long n) {
  if (n < 2)
    return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

bool is_irreducible(int p, const std::vector<int> &poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1)
    return false;
  if (deg == 1)
    return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i)
      count *= p;
    for (int code = 0; code < count; ++code) {
      std::vector<int> divisor(d + 1);
      int c = code;
      for (int i = 0; i < d; ++i) {
        divisor[i] = c % p;
        c /= p;
      }
      divisor[d] = 1;
      const auto rem = poly_mod(poly, divisor, p);
      bool zero = true;
      for (int r : rem)
        zero = zero && r == 0;
      if (zero)
        return false;
    }
  }
  return true;
}

std::vector<int> find_irreducible(int p, int e) {
  if (e < 2)
    throw OutOfRange("find_irreducible needs degree >= 2");
  long long count = 1;
  for (int i = 0; i < e; ++i)
    count *= p;
  for (long long code = 0; code < count; ++code) {
    std::vector<int> poly(e + 1);
    long long c = code;
    for (int i = 0; i < e; ++i) {
      poly[i] = static_cast<int>(c % p);
      c /= p;
    }
    poly[e] = 1;
    if (is_irreducible(p, poly))
      return poly;
  }
  throw Error("no irreducible polynomial found"); // unreachable
}

FieldSpec::FieldSpec(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < e; ++i)
    q_ *= p;
}

Elem FieldSpec::add(Elem a, Elem b) const {
  if (e_ == 1)
    return static_cast<Elem>((a + b) % p_);
  auto da = to_digits(a, p_, e_);
  const auto db = to_digits(b, p_, e_);
  for (int i = 0; i < e_; ++i)
    da[i] = (da[i] + db[i]) % p_;
  return static_cast<Elem>(from_digits(da, p_, e_));
}

Elem FieldSpec::neg(Elem a) const {
  if (e_ == 1)
    return static_cast<Elem>((p_ - a) % p_);
  auto da = to_digits(a, p_, e_);
  for (int i = 0; i < e_; ++i)
    da[i] = (p_ - da[i]) % p_;
  return static_cast<Elem>(from_digits(da, p_, e_));
}

Elem FieldSpec::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldSpec::mul(Elem a, Elem b) const {
  if (e_ == 1)
    return static_cast<Elem>((a * b) % p_);
  const auto da = to_digits(a, p_, e_);
  const auto db = to_digits(b, p_, e_);
  Digits prod{};
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  for (int i = 2 * e_ - 2; i >= e_; --i) {
    const int c = prod[i];
    if (c == 0)
      continue;
    for (int j = 0; j <= e_; ++j)
      prod[i - e_ + j] = ((prod[i - e_ + j] - c * modulus_[j]) % p_ + p_) % p_;
  }
  return static_cast<Elem>(from_digits(prod, p_, e_));
}

Elem FieldSpec::pow(Elem a, unsigned long long k) const {
  Elem result = 1;
  Elem base = a;
  while (k > 0) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0)
    throw DivisionByZero();
  return pow(a, static_cast<unsigned long long>(q_ - 2));
}

FieldRef make_field(long long q, int max_order) {
  if (q < 2)
    throw NotPrimePower(q);
  long long p = 0;
  for (long long d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int e = 0;
  long long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw NotPrimePower(q);
  if (q > max_order || q > kHardMaxOrder)
    throw UnsupportedField("field order " + std::to_string(q) +
                           " exceeds configured maximum " +
                           std::to_string(std::min(max_order, kHardMaxOrder)));
  const int pi = static_cast<int>(p);
  std::vector<int> modulus;
  if (e > 1)
    modulus = find_irreducible(pi, e);
  return std::make_shared<const FieldSpec>(pi, e, std::move(modulus));
}

} // namespace qx
