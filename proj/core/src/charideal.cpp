#include "nilpat/charideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <type_traits>

namespace nilpat {

template <class Field>
Matrix<Field>::Matrix(Field field, int n)
    : field_(std::move(field)), n_(n), data_(static_cast<std::size_t>(n * n), field_.zero()) {}

template <class Field>
Matrix<Field> Matrix<Field>::from_integers(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(std::move(field), n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != n) {
      throw Error(ErrorKind::ragged_input, "matrix rows must have length " + std::to_string(n));
    }
    for (int c = 0; c < n; ++c) m.at(r, c) = m.field_.from_integer(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return m;
}

template <class Field>
Matrix<Field> Matrix<Field>::operator*(const Matrix& other) const {
  Matrix out(field_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const auto& a = at(i, k);
      if (field_.is_zero(a)) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, other.at(k, j)));
    }
  }
  return out;
}

template <class Field>
Matrix<Field> Matrix<Field>::power(unsigned k) const {
  Matrix result(field_, n_);
  for (int i = 0; i < n_; ++i) result.at(i, i) = field_.one();
  Matrix base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

template <class Field>
bool Matrix<Field>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [&](const auto& v) { return field_.is_zero(v); });
}

template <class Field>
Polynomial<Field> SymbolicMatrix<Field>::entry(int row, int col) const {
  const int idx = variable_index(row, col);
  if (idx < 0) return Polynomial<Field>(ring);
  auto z = Polynomial<Field>::variable(ring, static_cast<std::size_t>(idx));
  return pattern.sign(row, col) < 0 ? -z : z;
}

template <class Field>
int SymbolicMatrix<Field>::variable_index(int row, int col) const {
  auto idx = ring->variables.index_of(Position{row, col});
  return idx ? static_cast<int>(*idx) : -1;
}

template <class Field>
SymbolicMatrix<Field> symbolic_matrix(const ZnzPattern& a, const Field& field, const MonomialOrder& order) {
  auto stars = a.stars();
  return {a, make_ring(field, VariableSet::positions(stars), order)};
}

namespace {

template <class Field>
class CoefficientAccumulator {
 public:
  CoefficientAccumulator(const SymbolicMatrix<Field>& m, int n) : m_(m), terms_(static_cast<std::size_t>(n)) {}

  /// Adds sign * (product of the entries at `cells`) to F_degree.
  void add(int degree, int sign, std::span<const Position> cells) {
    Monomial mono(m_.ring->variables.size());
    for (auto c : cells) {
      const int idx = m_.variable_index(c.row, c.col);
      mono.set(static_cast<std::size_t>(idx), mono[static_cast<std::size_t>(idx)] + 1);
      sign *= m_.pattern.sign(c.row, c.col);
    }
    terms_[static_cast<std::size_t>(degree - 1)].push_back({std::move(mono), m_.ring->field.from_integer(sign)});
  }

  std::vector<Polynomial<Field>> finish() {
    std::vector<Polynomial<Field>> out;
    for (auto& t : terms_) out.push_back(Polynomial<Field>::from_terms(m_.ring, std::move(t)));
    return out;
  }

 private:
  const SymbolicMatrix<Field>& m_;
  std::vector<std::vector<Term<Field>>> terms_;
};

template <class Field>
std::vector<Polynomial<Field>> by_cycles(const SymbolicMatrix<Field>& m) {
  const int n = m.pattern.order();
  CoefficientAccumulator<Field> acc(m, n);
  const auto cycles = simple_cycles(m.pattern);
  std::vector<Position> cells;
  // Sets of pairwise disjoint cycles, chosen in increasing list index.
  std::function<void(std::size_t, std::uint32_t, int, int)> extend = [&](std::size_t from, std::uint32_t used,
                                                                          int length, int sign) {
    for (std::size_t c = from; c < cycles.size(); ++c) {
      const auto& cyc = cycles[c];
      if ((cyc.vertex_mask() & used) != 0) continue;
      const std::size_t before = cells.size();
      const std::size_t k = cyc.length();
      for (std::size_t t = 0; t < k; ++t) cells.push_back({cyc.vertices[t], cyc.vertices[(t + 1) % k]});
      const int total = length + static_cast<int>(k);
      const int s = (k % 2 == 0) ? -sign : sign;
      acc.add(total, s, cells);
      extend(c + 1, used | cyc.vertex_mask(), total, s);
      cells.resize(before);
    }
  };
  extend(0, 0, 0, 1);
  return acc.finish();
}

template <class Field>
std::vector<Polynomial<Field>> by_determinant(const SymbolicMatrix<Field>& m) {
  const int n = m.pattern.order();
  CoefficientAccumulator<Field> acc(m, n);
  std::vector<int> sigma(static_cast<std::size_t>(n + 1), 0);
  // Each permutation sigma of [n] contributes
  //   sgn(sigma) * prod_{i not fixed} (-M[i,sigma(i)]) * prod_{i fixed} (x - M[i,i]).
  // Picking the -M[i,i] factor on a set T of fixed points gives x^(n - i) with
  // i = (#moved) + |T| and coefficient sgn(sigma) (-1)^i prod(...), so
  // F_i = (-1)^i * coef collects sgn(sigma) * prod over the chosen entries.
  std::function<void(int, std::uint32_t)> place = [&](int row, std::uint32_t used) {
    if (row > n) {
      std::vector<int> perm(sigma.begin() + 1, sigma.end());
      int inversions = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
      }
      const int sgn = (inversions % 2 == 0) ? 1 : -1;
      std::vector<Position> moved;
      std::vector<int> fixed_with_loop;
      for (int i = 1; i <= n; ++i) {
        if (sigma[static_cast<std::size_t>(i)] != i) {
          moved.push_back({i, sigma[static_cast<std::size_t>(i)]});
        } else if (m.pattern.has(i, i)) {
          fixed_with_loop.push_back(i);
        }
      }
      const std::uint32_t subsets = 1U << fixed_with_loop.size();
      for (std::uint32_t t = 0; t < subsets; ++t) {
        if (moved.empty() && t == 0) continue;
        std::vector<Position> cells = moved;
        for (std::size_t b = 0; b < fixed_with_loop.size(); ++b) {
          if ((t >> b) & 1U) cells.push_back({fixed_with_loop[b], fixed_with_loop[b]});
        }
        acc.add(static_cast<int>(cells.size()), sgn, cells);
      }
      return;
    }
    for (int col = 1; col <= n; ++col) {
      if ((used >> (col - 1)) & 1U) continue;
      // Moved entries must be stars; a fixed point is always allowed since
      // it can contribute x.
      if (col != row && !m.pattern.has(row, col)) continue;
      sigma[static_cast<std::size_t>(row)] = col;
      place(row + 1, used | (1U << (col - 1)));
    }
  };
  place(1, 0);
  return acc.finish();
}

}  // namespace

template <class Field>
std::vector<Polynomial<Field>> char_coefficients(const SymbolicMatrix<Field>& m, CharMethod method) {
  return method == CharMethod::cycles ? by_cycles(m) : by_determinant(m);
}

template <class Field>
Polynomial<Field> PatternIdeal<Field>::star_monomial() const {
  const auto& ring = matrix.ring;
  Monomial mono(ring->variables.size());
  for (std::size_t i = 0; i < ring->variables.size(); ++i) mono.set(i, 1);
  return Polynomial<Field>::from_sorted_terms(ring, {{mono, ring->field.one()}});
}

template <class Field>
PatternIdeal<Field> pattern_ideal(const ZnzPattern& a, const Field& field, const MonomialOrder& order) {
  auto m = symbolic_matrix(a, field, order);
  auto coefficients = char_coefficients(m);
  Ideal<Field> ideal(m.ring, coefficients);
  return {std::move(m), std::move(coefficients), std::move(ideal)};
}

namespace {

template <class Field>
void check_sign(const ZnzPattern& a, int row, int col, const typename Field::value_type& v) {
  if constexpr (std::is_same_v<Field, RationalField>) {
    if (a.is_signed() && sgn(v) != a.sign(row, col)) {
      throw Error(ErrorKind::not_a_realization, "sign of entry (" + std::to_string(row) + "," + std::to_string(col) +
                                                    ") disagrees with the sign pattern");
    }
  }
}

template <class Field>
bool coefficients_vanish(const ZnzPattern& a, const Matrix<Field>& values) {
  auto pi = pattern_ideal(a, values.field());
  std::vector<typename Field::value_type> z;
  const auto& field = values.field();
  for (auto p : a.stars()) {
    const auto& v = values.at(p.row - 1, p.col - 1);
    z.push_back(a.sign(p.row, p.col) < 0 ? field.neg(v) : v);
  }
  for (const auto& f : pi.coefficients) {
    if (!field.is_zero(evaluate(f, std::span<const typename Field::value_type>(z)))) return false;
  }
  return true;
}

template <class Field>
bool cross_checked(const ZnzPattern& a, const Matrix<Field>& values) {
  const bool by_coefficients = coefficients_vanish(a, values);
  const bool by_power = values.power(static_cast<unsigned>(a.order())).is_zero();
  if (by_coefficients != by_power) {
    throw std::logic_error("characteristic coefficients and matrix power disagree on nilpotence");
  }
  return by_coefficients;
}

}  // namespace

template <class Field>
bool check_nilpotent(const ZnzPattern& a, const Matrix<Field>& m) {
  if (m.order() != a.order()) throw Error(ErrorKind::not_a_realization, "matrix order differs from the pattern order");
  const auto& field = m.field();
  for (int i = 1; i <= a.order(); ++i) {
    for (int j = 1; j <= a.order(); ++j) {
      const auto& v = m.at(i - 1, j - 1);
      if (a.has(i, j) == field.is_zero(v)) {
        throw Error(ErrorKind::not_a_realization,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") does not match the pattern");
      }
      if (a.has(i, j)) check_sign<Field>(a, i, j, v);
    }
  }
  return cross_checked(a, m);
}

template <class Field>
bool check_nilpotent(const ZnzPattern& a, const std::map<Position, typename Field::value_type>& assignment,
                     const Field& field) {
  Matrix<Field> m(field, a.order());
  for (const auto& [p, v] : assignment) {
    if (p.row < 1 || p.row > a.order() || p.col < 1 || p.col > a.order() || !a.has(p)) {
      throw Error(ErrorKind::not_a_realization,
                  "position (" + std::to_string(p.row) + "," + std::to_string(p.col) + ") is not a star");
    }
    if (field.is_zero(v)) {
      throw Error(ErrorKind::not_a_realization,
                  "zero value at (" + std::to_string(p.row) + "," + std::to_string(p.col) + ")");
    }
    m.at(p.row - 1, p.col - 1) = a.sign(p.row, p.col) < 0 ? field.neg(v) : v;
  }
  for (auto p : a.stars()) {
    if (!assignment.contains(p)) {
      throw Error(ErrorKind::missing_assignment,
                  "no value for z[" + std::to_string(p.row) + "," + std::to_string(p.col) + "]");
    }
  }
  return cross_checked(a, m);
}

#define NILPAT_INSTANTIATE_CHARIDEAL(F)                                                                      \
  template class Matrix<F>;                                                                                 \
  template struct SymbolicMatrix<F>;                                                                        \
  template struct PatternIdeal<F>;                                                                          \
  template SymbolicMatrix<F> symbolic_matrix(const ZnzPattern&, const F&, const MonomialOrder&);            \
  template std::vector<Polynomial<F>> char_coefficients(const SymbolicMatrix<F>&, CharMethod);              \
  template PatternIdeal<F> pattern_ideal(const ZnzPattern&, const F&, const MonomialOrder&);                \
  template bool check_nilpotent(const ZnzPattern&, const Matrix<F>&);                                       \
  template bool check_nilpotent(const ZnzPattern&, const std::map<Position, typename F::value_type>&, const F&);

NILPAT_INSTANTIATE_CHARIDEAL(PrimeField)
NILPAT_INSTANTIATE_CHARIDEAL(RationalField)

}  // namespace nilpat
