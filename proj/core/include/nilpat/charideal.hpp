#pragma once

// The symbolic matrix M_A of a pattern, its characteristic coefficients, the
// pattern ideal, and nilpotence checks for concrete matrices.
//
// Sign convention: det(xI - M) = x^n - F_1 x^(n-1) + F_2 x^(n-2) - ...,
// so F_i is the sum of the principal i x i minors of M.

#include <cstdint>
#include <map>
#include <vector>

#include "nilpat/groebner.hpp"
#include "nilpat/pattern.hpp"
#include "nilpat/polyring.hpp"

namespace nilpat {

/// Dense square matrix over a field, 0-based indices.
template <class Field>
class Matrix {
 public:
  using value_type = typename Field::value_type;

  Matrix(Field field, int n);
  /// Integer entries embedded into the field.
  static Matrix from_integers(Field field, const std::vector<std::vector<std::int64_t>>& rows);

  int order() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  value_type& at(int r, int c) { return data_[static_cast<std::size_t>(r * n_ + c)]; }
  const value_type& at(int r, int c) const { return data_[static_cast<std::size_t>(r * n_ + c)]; }

  Matrix operator*(const Matrix& other) const;
  Matrix power(unsigned k) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  Field field_;
  int n_;
  std::vector<value_type> data_;
};

template <class Field>
struct SymbolicMatrix {
  ZnzPattern pattern;
  /// One variable z[i,j] per star, row-major.
  RingPtr<Field> ring;

  /// sign(i,j) * z[i,j] at a star, else 0 (1-based).
  Polynomial<Field> entry(int row, int col) const;
  /// Index of z[row,col] in the ring, or -1 off the pattern.
  int variable_index(int row, int col) const;
};

template <class Field>
SymbolicMatrix<Field> symbolic_matrix(const ZnzPattern& a, const Field& field,
                                      const MonomialOrder& order = MonomialOrder::lex());

enum class CharMethod {
  /// Sum over sets of pairwise disjoint simple cycles.
  cycles,
  /// Permutation expansion of det(xI - M).
  determinant,
};

/// F_1, ..., F_n (index 0 holds F_1).
template <class Field>
std::vector<Polynomial<Field>> char_coefficients(const SymbolicMatrix<Field>& m,
                                                 CharMethod method = CharMethod::cycles);

template <class Field>
struct PatternIdeal {
  SymbolicMatrix<Field> matrix;
  std::vector<Polynomial<Field>> coefficients;
  /// Generated by the nonzero coefficients.
  Ideal<Field> ideal;

  /// m_A: the product of all variables (1 for the empty pattern).
  Polynomial<Field> star_monomial() const;
};

template <class Field>
PatternIdeal<Field> pattern_ideal(const ZnzPattern& a, const Field& field,
                                  const MonomialOrder& order = MonomialOrder::lex());

/// True iff every F_i vanishes at the entries of `m`, read as the values of
/// M_A (so z[i,j] = sign(i,j) * m(i,j)). Error(not_a_realization) when the
/// zero pattern of `m` differs from `a`, or, over Q, when a sign disagrees.
/// The answer is cross-checked against m^n = 0 and a disagreement throws
/// std::logic_error.
template <class Field>
bool check_nilpotent(const ZnzPattern& a, const Matrix<Field>& m);

/// Position-keyed form: assigns z[i,j] directly. Positions outside the
/// pattern or zero values are Error(not_a_realization); a missing star is
/// Error(missing_assignment).
template <class Field>
bool check_nilpotent(const ZnzPattern& a, const std::map<Position, typename Field::value_type>& assignment,
                     const Field& field);

}  // namespace nilpat
