#ifndef QEXTREMAL_FIELD_HPP
#define QEXTREMAL_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace qx {

/// Element of F_q as its integer code 0..q-1. The code read in base p gives
/// the coefficients of a polynomial of degree < e, constant term first.
using Elem = std::uint8_t;

/// Default cap on the field order accepted by make_field.
inline constexpr int kDefaultMaxOrder = 32;
/// Codes must fit in Elem.
inline constexpr int kHardMaxOrder = 256;

/// The finite field F_q, q = p^e, with arithmetic by polynomial reduction
/// modulo a fixed monic irreducible polynomial over F_p.
class FieldSpec {
public:
  FieldSpec(int p, int e, std::vector<int> modulus);

  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int q() const noexcept { return q_; }
  /// e+1 coefficients, constant term first, leading coefficient 1. Empty for
  /// prime fields.
  const std::vector<int> &modulus() const noexcept { return modulus_; }

  bool valid(int code) const noexcept { return code >= 0 && code < q_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, unsigned long long k) const;

  friend bool operator==(const FieldSpec &, const FieldSpec &) = default;

private:
  int p_;
  int e_;
  int q_;
  std::vector<int> modulus_;
};

using FieldRef = std::shared_ptr<const FieldSpec>;

/// Builds F_q with the canonical modulus from find_irreducible.
/// Throws NotPrimePower, or UnsupportedField when q exceeds max_order.
FieldRef make_field(long long q, int max_order = kDefaultMaxOrder);

/// Monic irreducible polynomial of degree e over F_p whose non-leading
/// coefficients, read as a base-p number with the constant term least
/// significant, are minimal. Returns e+1 coefficients, constant term first.
std::vector<int> find_irreducible(int p, int e);

/// Exhaustive irreducibility test for monic polynomials over F_p.
bool is_irreducible(int p, const std::vector<int> &poly);

bool is_prime(long long n);

} // namespace qx

#endif // QEXTREMAL_FIELD_HPP
