#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/errors.hpp"

namespace ybe {

/// Element of F_n, the subring of Z[x]/(x^{n+1}) generated by x, or of its
/// quotient F_{n,p^d}. coeffs[i] is the coefficient of x^{i+1}; modulus 0
/// means unbounded integers, otherwise coefficients live in [0, modulus).
class ring_element {
public:
  ring_element(int n, long long modulus);
  static ring_element x(int n, long long modulus);
  static ring_element from_coeffs(std::vector<long long> coeffs, long long modulus);

  int degree_bound() const { return static_cast<int>(coeffs_.size()); }
  long long modulus() const { return modulus_; }
  const std::vector<long long>& coeffs() const { return coeffs_; }
  long long coeff(int i) const { return coeffs_[i]; }
  bool is_zero() const;

  friend ring_element ring_add(const ring_element& a, const ring_element& b);
  friend ring_element ring_neg(const ring_element& a);
  /// Truncated convolution with x^{n+1} = 0.
  friend ring_element ring_mul(const ring_element& a, const ring_element& b);
  /// a o b = a + b + a*b.
  friend ring_element ring_circ(const ring_element& a, const ring_element& b);
  /// o-inverse via the finite geometric series sum of (-a)^i; terminates by
  /// nilpotency.
  friend ring_element ring_inv_circ(const ring_element& a);
  friend ring_element ring_pow(const ring_element& a, int k);
  friend bool operator==(const ring_element& a, const ring_element& b) = default;

private:
  std::vector<long long> coeffs_;
  long long modulus_ = 0;
  void reduce();
};

/// Prime p with exponents d_1 >= d_2 >= ... >= d_n >= 0; the target type
/// (p^{d_1},...,p^{d_n}).
struct type_signature {
  long long p = 2;
  std::vector<int> d;

  static type_signature make(long long p, std::vector<int> d);
  static type_signature parse(const std::string& text);  // "p:d1,d2,...,dn"
  std::string to_string() const;

  int n() const { return static_cast<int>(d.size()); }
  int total_d() const;
  int effective_n() const;  // trailing zero exponents stripped
  long long size() const;   // p^total_d
  long long diag(int i) const;
};

/// n x n integer matrix in normal form: upper triangular, non-negative
/// entries, each diagonal entry strictly greater than the rest of its
/// column, the right-shift of every row lying in the span of the rows below
/// it, diagonal (p^{d_1},...,p^{d_n}).
class class_matrix {
public:
  static class_matrix checked(std::vector<std::vector<long long>> rows, const type_signature& t);

  int n() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<long long>>& rows() const { return rows_; }
  long long entry(int i, int j) const { return rows_[i][j]; }
  friend bool operator==(const class_matrix& a, const class_matrix& b) = default;
  friend bool operator<(const class_matrix& a, const class_matrix& b) { return a.rows_ < b.rows_; }

private:
  class_matrix() = default;
  std::vector<std::vector<long long>> rows_;
};

/// All matrices for the signature, sorted row-major; the count is p^{d-d_1}.
std::vector<class_matrix> matrices_for_type(const type_signature& t);

/// Basis rows of the ideal I_M with respect to x, x^2, ..., x^n.
std::vector<std::vector<long long>> ideal_of_matrix(const class_matrix& m);

struct matrix_brace {
  brace b;
  int x_index;  // class of the generator x + I_M
  std::vector<std::vector<long long>> reps;  // canonical coset representatives
};

/// The quotient brace F_n/I_M on canonical representatives (a_1,...,a_n)
/// with 0 <= a_i < p^{d_i}.
matrix_brace brace_of_matrix(const class_matrix& m, const type_signature& t);

/// Canonical coset representative of an integer vector modulo the row span,
/// reduced coordinate by coordinate down the triangle.
std::vector<long long> reduce_vector(const class_matrix& m, const type_signature& t,
                                     std::vector<long long> v);

/// The unique normal-form matrix row-equivalent to the span of the given
/// rows (Hermite-style integer elimination); WrongType when the reduced
/// diagonal differs from the signature.
class_matrix canonical_matrix(std::vector<std::vector<long long>> rows, const type_signature& t);

/// Image of M under the ring automorphism x -> y (y in x + F^2, coefficients
/// mod p^d): maps each row, appends the lift generators p^d e_k, reduces.
class_matrix phi_action(const ring_element& y, const class_matrix& m, const type_signature& t);

/// Orbit partition of matrices_for_type(t) under all phi_y; blocks hold
/// indices into the sorted matrix list and are sorted by representative
/// (= least index = lexicographically least matrix).
std::vector<std::vector<int>> matrix_orbits(const type_signature& t,
                                            long long space_cap = 1000000);

/// nu_p(k); nullopt encodes +infinity at k = 0.
std::optional<int> p_valuation(long long k, long long p);

}  // namespace ybe
