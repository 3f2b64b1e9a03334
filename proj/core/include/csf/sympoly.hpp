#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "csf/exact_int.hpp"
#include "csf/partition.hpp"

namespace csf {

// Basis tag for a symmetric polynomial expansion.
enum class Basis : char {
  monomial = 'm',
  power = 'p',
  elementary = 'e',
  schur = 's',
};

char basis_letter(Basis b);
Basis basis_from_letter(char c);

// Raised when rendering/parsing of polynomials or graphs fails on user input.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Sparse homogeneous symmetric polynomial in one basis, keyed by partition.
// Zero coefficients are never stored.  All term partitions must share one
// weight; mixing weights throws.
class SymPoly {
public:
  explicit SymPoly(Basis b) : basis_(b) {}
  static SymPoly term(Basis b, Partition p, Coeff c = Coeff(1));

  Basis basis() const { return basis_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  // Weight of the (homogeneous) polynomial; -1 when zero.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.weight(); }

  Coeff coeff(const Partition& p) const;
  // Adds c to the coefficient of p, erasing the entry if it becomes zero.
  void add_term(const Partition& p, Coeff c);

  const std::map<Partition, Coeff>& terms() const { return terms_; }

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(Coeff c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, Coeff c) { return a *= c; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) = default;

  // Text form like "6e[3,2,1] - 6e[3,3] + 12e[6]"; zero renders as "0".
  // Terms appear in ascending lexicographic order of their partitions.
  std::string render() const;
  // Inverse of render(); accepts optional whitespace.  All terms must use a
  // single basis letter from {m,p,e,s}.
  static SymPoly parse(std::string_view text);

  // Value after substituting x_1 = ... = x_k = 1, x_{>k} = 0.  Supported for
  // the monomial, power and elementary bases.
  Coeff evaluate_at_ones(int k) const;

private:
  Basis basis_;
  std::map<Partition, Coeff> terms_;
};

// Coefficient-wise product of two monomial-basis polynomials.
SymPoly multiply(const SymPoly& a, const SymPoly& b);

// Product in the power-sum basis (parts simply concatenate).
SymPoly multiply_power(const SymPoly& a, const SymPoly& b);

struct NegativeTerm {
  Partition part;
  Coeff coeff;
};

// Most negative term of an E- or S-basis expansion, if any.
std::optional<NegativeTerm> negative_witness(const SymPoly& f);

// True when every coefficient is nonnegative.  Requires basis e or s.
bool is_positive(const SymPoly& f);

}  // namespace csf
