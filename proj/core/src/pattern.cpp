#include "nilpat/pattern.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace nilpat {

namespace {

void check_order(int n) {
  if (n < 1) throw Error(ErrorKind::order_too_small, "pattern order must be at least 1");
  if (n > ZnzPattern::kMaxOrder) {
    throw Error(ErrorKind::order_too_large, "pattern order " + std::to_string(n) + " exceeds " +
                                                std::to_string(ZnzPattern::kMaxOrder));
  }
}

}  // namespace

ZnzPattern::ZnzPattern(int n) : n_(n) { check_order(n); }

ZnzPattern ZnzPattern::from_positions(int n, std::span<const Position> stars) {
  ZnzPattern a(n);
  for (auto p : stars) a.set(p.row, p.col, true);
  return a;
}

ZnzPattern ZnzPattern::from_rows(std::span<const std::string_view> rows) {
  std::string text;
  for (auto r : rows) {
    text += r;
    text += '\n';
  }
  return parse_pattern(text);
}

ZnzPattern ZnzPattern::from_rows(std::initializer_list<std::string_view> rows) {
  return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
}

void ZnzPattern::set(int row, int col, bool star) {
  if (row < 1 || row > n_ || col < 1 || col > n_) {
    throw Error(ErrorKind::parse_error, "position out of range");
  }
  const std::uint64_t b = std::uint64_t{1} << bit(row, col);
  if (star) {
    stars_ |= b;
  } else {
    stars_ &= ~b;
    negative_ &= ~b;
  }
}

void ZnzPattern::set_sign(int row, int col, int sign) {
  if (!has(row, col)) throw Error(ErrorKind::bad_symbol, "sign on a zero position");
  signed_ = true;
  const std::uint64_t b = std::uint64_t{1} << bit(row, col);
  if (sign < 0) {
    negative_ |= b;
  } else {
    negative_ &= ~b;
  }
}

std::vector<Position> ZnzPattern::stars() const {
  std::vector<Position> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (has(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

int ZnzPattern::star_count() const noexcept { return std::popcount(stars_); }

std::vector<int> ZnzPattern::loops() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (has(i, i)) out.push_back(i);
  }
  return out;
}

int ZnzPattern::loop_count() const noexcept {
  int c = 0;
  for (int i = 1; i <= n_; ++i) c += has(i, i) ? 1 : 0;
  return c;
}

std::uint32_t ZnzPattern::row_mask(int row) const noexcept {
  return static_cast<std::uint32_t>((stars_ >> bit(row, 1)) & ((1U << n_) - 1U));
}

std::uint64_t ZnzPattern::key() const noexcept {
  std::uint64_t k = 0;
  const int cells = n_ * n_;
  for (int b = 0; b < cells; ++b) k = (k << 1) | ((stars_ >> b) & 1U);
  return k;
}

std::strong_ordering operator<=>(const ZnzPattern& a, const ZnzPattern& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.key() <=> b.key(); c != 0) return c;
  if (auto c = a.signed_ <=> b.signed_; c != 0) return c;
  ZnzPattern na = a, nb = b;
  na.stars_ = a.negative_;
  nb.stars_ = b.negative_;
  return na.key() <=> nb.key();
}

ZnzPattern parse_pattern(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (true) {
    auto nl = text.find('\n', start);
    lines.push_back(text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (text.empty()) throw Error(ErrorKind::ragged_input, "empty pattern");
  const int n = static_cast<int>(lines.size());
  if (n > ZnzPattern::kMaxOrder) {
    throw Error(ErrorKind::order_too_large, "pattern order " + std::to_string(n) + " exceeds " +
                                                std::to_string(ZnzPattern::kMaxOrder));
  }
  bool saw_star = false;
  bool saw_sign = false;
  ZnzPattern a(n);
  for (int i = 0; i < n; ++i) {
    const auto line = lines[static_cast<std::size_t>(i)];
    if (static_cast<int>(line.size()) != n) {
      throw Error(ErrorKind::ragged_input, "line " + std::to_string(i + 1) + " has " + std::to_string(line.size()) +
                                               " symbols, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      const char c = line[static_cast<std::size_t>(j)];
      switch (c) {
        case '0': break;
        case '*':
          saw_star = true;
          a.set(i + 1, j + 1, true);
          break;
        case '+':
        case '-':
          saw_sign = true;
          a.set(i + 1, j + 1, true);
          a.set_sign(i + 1, j + 1, c == '-' ? -1 : 1);
          break;
        default:
          throw Error(ErrorKind::bad_symbol, std::string("unexpected symbol '") + c + "' at line " +
                                                 std::to_string(i + 1) + ", column " + std::to_string(j + 1));
      }
    }
  }
  if (saw_star && saw_sign) throw Error(ErrorKind::mixed_alphabet, "pattern mixes '*' with '+'/'-'");
  return a;
}

std::vector<std::string> pattern_rows(const ZnzPattern& a) {
  std::vector<std::string> rows;
  for (int i = 1; i <= a.order(); ++i) {
    std::string r;
    for (int j = 1; j <= a.order(); ++j) {
      if (!a.has(i, j)) {
        r += '0';
      } else if (!a.is_signed()) {
        r += '*';
      } else {
        r += a.sign(i, j) < 0 ? '-' : '+';
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_pattern(const ZnzPattern& a) {
  std::string out;
  for (const auto& r : pattern_rows(a)) {
    out += r;
    out += '\n';
  }
  return out;
}

std::uint32_t SimpleCycle::vertex_mask() const noexcept {
  std::uint32_t m = 0;
  for (int v : vertices) m |= 1U << (v - 1);
  return m;
}

namespace {

// Cycles whose least vertex is `start`: DFS over vertices > start.
void cycles_from(const ZnzPattern& a, int start, int max_len, int exact_len, std::vector<int>& path,
                 std::uint32_t& on_path, std::vector<SimpleCycle>& out) {
  const int v = path.back();
  const int len = static_cast<int>(path.size());
  if (a.has(v, start) && (exact_len == 0 || len == exact_len)) out.push_back({path});
  if (len == max_len) return;
  for (int w = start + 1; w <= a.order(); ++w) {
    if (!a.has(v, w) || (on_path >> (w - 1)) & 1U) continue;
    path.push_back(w);
    on_path |= 1U << (w - 1);
    cycles_from(a, start, max_len, exact_len, path, on_path, out);
    on_path &= ~(1U << (w - 1));
    path.pop_back();
  }
}

std::vector<SimpleCycle> enumerate_cycles(const ZnzPattern& a, int max_len, int exact_len) {
  std::vector<SimpleCycle> out;
  for (int s = 1; s <= a.order(); ++s) {
    std::vector<int> path{s};
    std::uint32_t on_path = 1U << (s - 1);
    cycles_from(a, s, max_len, exact_len, path, on_path, out);
  }
  std::sort(out.begin(), out.end(), [](const SimpleCycle& x, const SimpleCycle& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.vertices < y.vertices;
  });
  return out;
}

}  // namespace

std::vector<SimpleCycle> simple_cycles(const ZnzPattern& a, int k) {
  if (k < 1 || k > a.order()) return {};
  return enumerate_cycles(a, k, k);
}

std::vector<SimpleCycle> simple_cycles(const ZnzPattern& a) { return enumerate_cycles(a, a.order(), 0); }

std::vector<std::vector<int>> strongly_connected_components(const ZnzPattern& a) {
  const int n = a.order();
  std::vector<int> index(static_cast<std::size_t>(n + 1), -1);
  std::vector<int> low(static_cast<std::size_t>(n + 1), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n + 1), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  std::function<void(int)> connect = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w = 1; w <= n; ++w) {
      if (!a.has(v, w)) continue;
      if (index[w] < 0) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> comp;
      int w = 0;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
  };

  for (int v = 1; v <= n; ++v) {
    if (index[v] < 0) connect(v);
  }
  // Kahn's algorithm on the condensation, always taking the ready component
  // with the smallest vertex, so the order does not depend on DFS order.
  const std::size_t k = components.size();
  std::vector<std::size_t> owner(static_cast<std::size_t>(n + 1));
  for (std::size_t c = 0; c < k; ++c)
    for (int v : components[c]) owner[static_cast<std::size_t>(v)] = c;
  std::vector<std::set<std::size_t>> succ(k);
  std::vector<int> indegree(k, 0);
  for (int v = 1; v <= n; ++v)
    for (int w = 1; w <= n; ++w) {
      const auto cv = owner[static_cast<std::size_t>(v)];
      const auto cw = owner[static_cast<std::size_t>(w)];
      if (a.has(v, w) && cv != cw && succ[cv].insert(cw).second) ++indegree[cw];
    }
  auto first_vertex = [&](std::size_t c) { return components[c].front(); };
  std::set<std::pair<int, std::size_t>> ready;
  for (std::size_t c = 0; c < k; ++c)
    if (indegree[c] == 0) ready.emplace(first_vertex(c), c);
  std::vector<std::vector<int>> ordered;
  while (!ready.empty()) {
    const auto c = ready.begin()->second;
    ready.erase(ready.begin());
    ordered.push_back(components[c]);
    for (auto d : succ[c])
      if (--indegree[d] == 0) ready.emplace(first_vertex(d), d);
  }
  return ordered;
}

bool is_irreducible(const ZnzPattern& a) { return strongly_connected_components(a).size() == 1; }

std::uint64_t transversal_count(const ZnzPattern& a) {
  const int n = a.order();
  std::uint64_t count = 0;
  std::function<void(int, std::uint32_t)> extend = [&](int row, std::uint32_t used) {
    if (row > n) {
      ++count;
      return;
    }
    std::uint32_t free = a.row_mask(row) & ~used;
    while (free != 0) {
      const int c = std::countr_zero(free);
      free &= free - 1;
      extend(row + 1, used | (1U << c));
    }
  };
  extend(1, 0);
  return count;
}

ZnzPattern permute(const ZnzPattern& a, std::span<const int> perm) {
  const int n = a.order();
  ZnzPattern b(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!a.has(i, j)) continue;
      const int pi = perm[static_cast<std::size_t>(i - 1)];
      const int pj = perm[static_cast<std::size_t>(j - 1)];
      b.set(pi, pj, true);
      if (a.is_signed()) b.set_sign(pi, pj, a.sign(i, j));
    }
  }
  return b;
}

ZnzPattern canonicalize(const ZnzPattern& a) {
  const int n = a.order();
  if (n > ZnzPattern::kMaxOrder) throw Error(ErrorKind::order_too_large, "canonical form needs n <= 8");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  ZnzPattern best = a;
  do {
    ZnzPattern b = permute(a, perm);
    if (b < best) best = b;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

ZnzPattern transpose(const ZnzPattern& a) {
  const int n = a.order();
  ZnzPattern b(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!a.has(i, j)) continue;
      b.set(j, i, true);
      if (a.is_signed()) b.set_sign(j, i, a.sign(i, j));
    }
  }
  return b;
}

ZnzPattern induced(const ZnzPattern& a, std::span<const int> vertices) {
  const int m = static_cast<int>(vertices.size());
  ZnzPattern b(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int vi = vertices[static_cast<std::size_t>(i)];
      const int vj = vertices[static_cast<std::size_t>(j)];
      if (!a.has(vi, vj)) continue;
      b.set(i + 1, j + 1, true);
      if (a.is_signed()) b.set_sign(i + 1, j + 1, a.sign(vi, vj));
    }
  }
  return b;
}

ZnzPattern an_family(int n) {
  if (n < 3) throw Error(ErrorKind::order_too_small, "the A_n family starts at n = 3");
  ZnzPattern a(n);
  for (int i = 1; i <= n; ++i) a.set(i, i, true);
  for (int i = 1; i < n; ++i) a.set(i, i + 1, true);
  a.set(n, 1, true);
  return a;
}

std::vector<ZnzPattern> enumerate_irreducible(int n) {
  if (n > 4) throw Error(ErrorKind::order_too_large, "enumeration is limited to n <= 4");
  check_order(n);
  const int cells = n * n;
  std::set<ZnzPattern> classes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    ZnzPattern a(n);
    for (int b = 0; b < cells; ++b) {
      if ((bits >> b) & 1U) a.set(b / n + 1, b % n + 1, true);
    }
    if (is_irreducible(a)) classes.insert(canonicalize(a));
  }
  return {classes.begin(), classes.end()};
}

}  // namespace nilpat
