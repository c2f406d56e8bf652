#include "nilpat/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <set>

namespace nilpat {

// ---------------------------------------------------------------- variables

Variable position_variable(int row, int col) {
  return Variable{"z[" + std::to_string(row) + "," + std::to_string(col) + "]", Position{row, col}};
}

Variable named_variable(std::string name) { return Variable{std::move(name), Position{}}; }

VariableSet::VariableSet(std::vector<Variable> variables) : variables_(std::move(variables)) {
  if (variables_.size() > kMaxVariables) {
    throw Error(ErrorKind::ring_too_large,
                std::to_string(variables_.size()) + " variables exceed the limit of " + std::to_string(kMaxVariables));
  }
  std::set<std::string_view> seen;
  for (const auto& v : variables_) {
    if (!seen.insert(v.name).second) throw Error(ErrorKind::parse_error, "duplicate variable " + v.name);
  }
}

VariableSet VariableSet::named(std::initializer_list<std::string_view> names) {
  std::vector<Variable> vars;
  for (auto n : names) vars.push_back(named_variable(std::string(n)));
  return VariableSet(std::move(vars));
}

VariableSet VariableSet::positions(std::span<const Position> positions) {
  std::vector<Variable> vars;
  for (auto p : positions) vars.push_back(position_variable(p.row, p.col));
  return VariableSet(std::move(vars));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> VariableSet::index_of(Position position) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].is_position() && variables_[i].position == position) return i;
  }
  return std::nullopt;
}

VariableSet VariableSet::with_leading(Variable v) const {
  std::vector<Variable> vars;
  vars.reserve(variables_.size() + 1);
  vars.push_back(std::move(v));
  vars.insert(vars.end(), variables_.begin(), variables_.end());
  return VariableSet(std::move(vars));
}

// ---------------------------------------------------------------- monomials

Monomial::Monomial(std::size_t num_variables) {
  if (num_variables > kMaxVariables) throw Error(ErrorKind::ring_too_large, "monomial length");
  size_ = static_cast<std::uint16_t>(num_variables);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

Monomial Monomial::variable(std::size_t num_variables, std::size_t index, unsigned exponent) {
  Monomial m(num_variables);
  m.set(index, exponent);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 255) throw Error(ErrorKind::resource_limit, "exponent above 255");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint8_t>(e);
  if (e == 0) {
    support_ &= ~(std::uint64_t{1} << i);
  } else {
    support_ |= std::uint64_t{1} << i;
  }
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < size_; ++i) {
    unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > 255) throw Error(ErrorKind::resource_limit, "exponent above 255");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.support_ = support_ | other.support_;
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r = *this;
  r.support_ = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
    if (r.exps_[i] != 0) r.support_ |= std::uint64_t{1} << i;
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  unsigned deg = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    deg += r.exps_[i];
  }
  r.support_ = support_ | other.support_;
  r.degree_ = static_cast<std::uint16_t>(deg);
  return r;
}

bool operator==(const Monomial& a, const Monomial& b) noexcept {
  return a.size_ == b.size_ && a.support_ == b.support_ && std::memcmp(a.exps_.data(), b.exps_.data(), a.size_) == 0;
}

// ------------------------------------------------------------------- orders

namespace {

/// Reverse-lex tie break over [begin, end): the monomial with the smaller
/// exponent in the last differing variable is the larger one.
std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  for (std::size_t i = end; i > begin; --i) {
    unsigned ea = a[i - 1], eb = b[i - 1];
    if (ea != eb) return ea < eb ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

unsigned partial_degree(const Monomial& m, std::size_t begin, std::size_t end) {
  unsigned d = 0;
  for (std::size_t i = begin; i < end; ++i) d += m[i];
  return d;
}

}  // namespace

std::strong_ordering MonomialOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = a.size();
  switch (kind) {
    case OrderKind::lex: {
      auto ea = a.exponents(), eb = b.exponents();
      int c = std::memcmp(ea.data(), eb.data(), n);
      return c == 0 ? std::strong_ordering::equal : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::less);
    }
    case OrderKind::grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_tail(a, b, 0, n);
    case OrderKind::block: {
      const std::size_t k = std::min(leading_block, n);
      unsigned da = partial_degree(a, 0, k), db = partial_degree(b, 0, k);
      if (da != db) return da <=> db;
      if (auto c = revlex_tail(a, b, 0, k); c != 0) return c;
      da = a.degree() - da;
      db = b.degree() - db;
      if (da != db) return da <=> db;
      return revlex_tail(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string to_string(const MonomialOrder& order) {
  switch (order.kind) {
    case OrderKind::lex: return "lex";
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::block: return "block(" + std::to_string(order.leading_block) + ")";
  }
  return "?";
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  if (a.size() != b.size()) throw Error(ErrorKind::mixed_rings, "monomials from different rings");
  return order(a, b);
}

// -------------------------------------------------------------- polynomials

template <class Field>
Polynomial<Field>::Polynomial(RingPtr<Field> ring) : ring_(std::move(ring)) {}

template <class Field>
Polynomial<Field> Polynomial<Field>::constant(RingPtr<Field> ring, const value_type& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({Monomial(p.ring().variables.size()), c});
  return p;
}

template <class Field>
Polynomial<Field> Polynomial<Field>::variable(RingPtr<Field> ring, std::size_t index) {
  Polynomial p(std::move(ring));
  const std::size_t n = p.ring().variables.size();
  if (index >= n) throw Error(ErrorKind::mixed_rings, "variable index out of range");
  p.terms_.push_back({Monomial::variable(n, index), p.field().one()});
  return p;
}

template <class Field>
Polynomial<Field> Polynomial<Field>::from_terms(RingPtr<Field> ring, std::vector<term_type> terms) {
  Polynomial p(std::move(ring));
  const auto& order = p.ring().order;
  const auto& field = p.field();
  const std::size_t n = p.ring().variables.size();
  for (const auto& t : terms) {
    if (t.monomial.size() != n) throw Error(ErrorKind::mixed_rings, "term from a different ring");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const term_type& a, const term_type& b) { return order(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient = field.add(p.terms_.back().coefficient, t.coefficient);
      if (field.is_zero(p.terms_.back().coefficient)) p.terms_.pop_back();
    } else if (!field.is_zero(t.coefficient)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

template <class Field>
Polynomial<Field> Polynomial<Field>::from_sorted_terms(RingPtr<Field> ring, std::vector<term_type> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

template <class Field>
bool Polynomial<Field>::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && field().is_one(terms_[0].coefficient);
}

template <class Field>
const Term<Field>& Polynomial<Field>::leading() const {
  if (terms_.empty()) throw Error(ErrorKind::zero_polynomial, "leading term of 0");
  return terms_.front();
}

template <class Field>
unsigned Polynomial<Field>::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

template <class Field>
void Polynomial<Field>::check_ring(const Polynomial& other) const {
  if (!same_ring(*ring_, *other.ring_)) throw Error(ErrorKind::mixed_rings, "operands belong to different rings");
}

template <class Field>
Polynomial<Field> Polynomial<Field>::operator+(const Polynomial& other) const {
  check_ring(other);
  const auto& order = ring_->order;
  const auto& field = ring_->field;
  std::vector<term_type> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    auto c = order(a->monomial, b->monomial);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      auto s = field.add(a->coefficient, b->coefficient);
      if (!field.is_zero(s)) out.push_back({a->monomial, std::move(s)});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, other.terms_.end());
  return from_sorted_terms(ring_, std::move(out));
}

template <class Field>
Polynomial<Field> Polynomial<Field>::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = field().neg(t.coefficient);
  return r;
}

template <class Field>
Polynomial<Field> Polynomial<Field>::operator-(const Polynomial& other) const {
  return *this + (-other);
}

template <class Field>
Polynomial<Field> Polynomial<Field>::operator*(const Polynomial& other) const {
  check_ring(other);
  std::vector<term_type> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      products.push_back({a.monomial * b.monomial, field().mul(a.coefficient, b.coefficient)});
    }
  }
  return from_terms(ring_, std::move(products));
}

template <class Field>
Polynomial<Field> Polynomial<Field>::scale(const value_type& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = field().mul(t.coefficient, c);
  return r;
}

template <class Field>
Polynomial<Field> Polynomial<Field>::mul_term(const Monomial& m, const value_type& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.monomial = t.monomial * m;
    t.coefficient = field().mul(t.coefficient, c);
  }
  return r;
}

template <class Field>
Polynomial<Field> Polynomial<Field>::monic() const {
  if (terms_.empty() || field().is_one(terms_.front().coefficient)) return *this;
  return scale(field().inv(terms_.front().coefficient));
}

// ------------------------------------------------------------ free functions

template <class Field>
Term<Field> leading_term(const Polynomial<Field>& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "leading term of 0");
  if (order == f.ring().order) return f.leading();
  auto terms = f.terms();
  auto best = terms.begin();
  for (auto it = terms.begin() + 1; it != terms.end(); ++it) {
    if (order(it->monomial, best->monomial) > 0) best = it;
  }
  return *best;
}

template <class Field>
std::optional<unsigned> is_homogeneous(const Polynomial<Field>& f) {
  if (f.is_zero()) return 0u;
  unsigned d = f.terms().front().monomial.degree();
  for (const auto& t : f.terms()) {
    if (t.monomial.degree() != d) return std::nullopt;
  }
  return d;
}

template <class Field>
typename Field::value_type evaluate(const Polynomial<Field>& f, std::span<const typename Field::value_type> values) {
  const auto& field = f.field();
  const std::size_t n = f.ring().variables.size();
  if (values.size() < n) throw Error(ErrorKind::missing_assignment, "assignment shorter than the variable set");
  auto sum = field.zero();
  for (const auto& t : f.terms()) {
    auto prod = t.coefficient;
    for (std::size_t i = 0; i < n; ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) prod = field.mul(prod, values[i]);
    }
    sum = field.add(sum, prod);
  }
  return sum;
}

template <class Field>
typename Field::value_type evaluate(const Polynomial<Field>& f,
                                    const std::map<Position, typename Field::value_type>& assignment) {
  std::vector<typename Field::value_type> values;
  for (const auto& v : f.ring().variables) {
    auto it = assignment.find(v.position);
    if (!v.is_position() || it == assignment.end()) {
      throw Error(ErrorKind::missing_assignment, "no value for " + v.name);
    }
    values.push_back(it->second);
  }
  return evaluate(f, std::span<const typename Field::value_type>(values));
}

template <class Field>
Polynomial<Field> change_ring(const Polynomial<Field>& f, const RingPtr<Field>& target) {
  if (!(f.field() == target->field)) throw Error(ErrorKind::mixed_rings, "fields differ");
  const auto& from = f.ring().variables;
  const std::size_t n = target->variables.size();
  std::vector<std::optional<std::size_t>> map(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) map[i] = target->variables.index_of(from[i].name);
  std::vector<Term<Field>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(n);
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!map[i]) throw Error(ErrorKind::mixed_rings, "variable " + from[i].name + " missing from target ring");
      m.set(*map[i], t.monomial[i]);
    }
    terms.push_back({m, t.coefficient});
  }
  return Polynomial<Field>::from_terms(target, std::move(terms));
}

namespace {

bool is_negative(const PrimeField&, const PrimeField::value_type&) { return false; }
bool is_negative(const RationalField&, const RationalField::value_type& c) { return sgn(c) < 0; }

}  // namespace

template <class Field>
std::string to_string(const Polynomial<Field>& f) {
  if (f.is_zero()) return "0";
  const auto& field = f.field();
  const auto& vars = f.ring().variables;
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    auto c = t.coefficient;
    bool negative = is_negative(field, c);
    if (negative) c = field.neg(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i].name;
      if (t.monomial[i] > 1) mono += "^" + std::to_string(t.monomial[i]);
    }
    if (mono.empty()) {
      out += field.to_string(c);
    } else if (field.is_one(c)) {
      out += mono;
    } else {
      out += field.to_string(c) + "*" + mono;
    }
  }
  return out;
}

namespace {

template <class Field>
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingPtr<Field>& ring) : text_(text), ring_(ring) {}

  Polynomial<Field> parse() {
    const auto& field = ring_->field;
    std::vector<Term<Field>> terms;
    skip_space();
    bool negative = false;
    if (consume('-')) {
      negative = true;
    } else {
      consume('+');
    }
    while (true) {
      auto term = parse_term();
      if (negative) term.coefficient = field.neg(term.coefficient);
      terms.push_back(std::move(term));
      skip_space();
      if (pos_ == text_.size()) break;
      if (consume('+')) {
        negative = false;
      } else if (consume('-')) {
        negative = true;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return Polynomial<Field>::from_terms(ring_, std::move(terms));
  }

 private:
  Term<Field> parse_term() {
    const auto& field = ring_->field;
    Term<Field> term{Monomial(ring_->variables.size()), field.one()};
    while (true) {
      skip_space();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
          ++pos_;
        }
        term.coefficient = field.mul(term.coefficient, field.parse(text_.substr(start, pos_ - start)));
      } else {
        std::size_t index = parse_variable();
        unsigned e = 1;
        skip_space();
        if (consume('^')) e = parse_uint();
        term.monomial.set(index, term.monomial[index] + e);
      }
      skip_space();
      if (!consume('*')) break;
    }
    return term;
  }

  std::size_t parse_variable() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
      if (pos_ == text_.size()) fail("unterminated '['");
      ++pos_;
    }
    if (start == pos_) fail("expected a variable or coefficient");
    std::string name;
    for (char c : text_.substr(start, pos_ - start)) {
      if (c != ' ') name += c;
    }
    auto index = ring_->variables.index_of(name);
    if (!index) fail("unknown variable " + name);
    return *index;
  }

  unsigned parse_uint() {
    skip_space();
    std::size_t start = pos_;
    unsigned v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      if (v > 255) fail("exponent above 255");
    }
    if (start == pos_) fail("expected an exponent");
    return v;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse_error, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const RingPtr<Field>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class Field>
Polynomial<Field> parse_polynomial(std::string_view text, const RingPtr<Field>& ring) {
  return PolynomialParser<Field>(text, ring).parse();
}

#define NILPAT_INSTANTIATE_POLYRING(F)                                                                     \
  template class Polynomial<F>;                                                                            \
  template Term<F> leading_term(const Polynomial<F>&, const MonomialOrder&);                              \
  template std::optional<unsigned> is_homogeneous(const Polynomial<F>&);                                  \
  template F::value_type evaluate(const Polynomial<F>&, std::span<const F::value_type>);                  \
  template F::value_type evaluate(const Polynomial<F>&, const std::map<Position, F::value_type>&);        \
  template Polynomial<F> change_ring(const Polynomial<F>&, const RingPtr<F>&);                            \
  template std::string to_string(const Polynomial<F>&);                                                   \
  template Polynomial<F> parse_polynomial(std::string_view, const RingPtr<F>&);

NILPAT_INSTANTIATE_POLYRING(PrimeField)
NILPAT_INSTANTIATE_POLYRING(RationalField)

}  // namespace nilpat
