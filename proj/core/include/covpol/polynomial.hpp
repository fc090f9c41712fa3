#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covpol {

// Thrown by divided_by_q_minus_one_squared when the argument is not an exact
// multiple of (q-1)^2 over the integers.
struct NotDivisibleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Overflow-checked int64 arithmetic. Everything in scope fits comfortably in
// 64 bits (largest count is 100320), but wrapping would silently corrupt a
// verification, so overflow throws.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Exact integer polynomial in one indeterminate q.
///
/// Canonical form: coefficients ascending by power, no trailing zeros.
/// The zero polynomial stores nothing and has no degree (degree() is empty,
/// never -1).  Values are immutable after construction.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::int64_t> coeffs);

  static Polynomial constant(std::int64_t c);
  static Polynomial monomial(std::int64_t c, int power);
  static Polynomial q_minus_one_squared();  // 1 - 2q + q^2

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  std::int64_t coeff(int power) const;  // 0 beyond the stored range
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  std::int64_t evaluate(std::int64_t x) const;
  std::int64_t derivative_at_one() const;  // sum of i * c_i

  // Exact quotient by (q-1)^2; throws NotDivisibleError when p(1) != 0 or
  // p'(1) != 0.
  Polynomial divided_by_q_minus_one_squared() const;

  // c_i == c_{d-i} for all 0 <= i <= d.
  bool is_palindromic(int d) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial&) const = default;

  std::string str() const;    // e.g. "6 + 5q + 20q^2 + 5q^3"
  std::string latex() const;  // e.g. "6+5q+20q^{2}+5q^{3}"

 private:
  void normalize();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace covpol
