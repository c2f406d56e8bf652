#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "nilpat/analysis.hpp"

namespace nilpat {

unsigned default_threads() {
  if (const char* env = std::getenv("NILPAT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

/// F_i with all coefficients reduced mod p; every F_i is multilinear, so a
/// term is a coefficient and a list of variable indices.
struct CompiledPolynomial {
  struct CompiledTerm {
    std::uint32_t coefficient;
    std::vector<std::uint8_t> variables;
  };
  std::vector<CompiledTerm> terms;
};

CompiledPolynomial compile(const Polynomial<PrimeField>& f) {
  CompiledPolynomial out;
  for (const auto& t : f.terms()) {
    CompiledPolynomial::CompiledTerm ct{t.coefficient, {}};
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) ct.variables.push_back(static_cast<std::uint8_t>(i));
    }
    out.terms.push_back(std::move(ct));
  }
  return out;
}

std::uint32_t eval(const CompiledPolynomial& f, const std::vector<std::uint32_t>& z, std::uint64_t p) {
  std::uint64_t sum = 0;
  for (const auto& t : f.terms) {
    std::uint64_t prod = t.coefficient;
    for (auto v : t.variables) prod = prod * z[v] % p;
    sum += prod;
  }
  return static_cast<std::uint32_t>(sum % p);
}

/// (p-1)^k, saturating at UINT64_MAX.
std::uint64_t space_size(std::uint64_t base, int k) {
  std::uint64_t s = 1;
  for (int i = 0; i < k; ++i) {
    if (base != 0 && s > UINT64_MAX / base) return UINT64_MAX;
    s *= base;
  }
  return s;
}

struct SearchPlan {
  std::uint64_t p;
  PrimeField field;
  std::vector<std::uint32_t> fixed_values;  // 0 = free, 1 = fixed to 1
  /// Variables enumerated by the odometer, most significant first.
  std::vector<std::uint8_t> enumerated;
  /// Loop variable recovered from F_1 = 0, or -1.
  int solved = -1;
  /// F_1 as coefficient per variable (only loops occur).
  std::vector<std::uint32_t> trace;
  std::vector<CompiledPolynomial> checks;  // F_2 .. F_n, nonzero ones
};

/// Evaluates one assignment of the enumerated variables; fills the solved
/// variable and returns whether every coefficient vanishes.
bool satisfies(const SearchPlan& plan, std::vector<std::uint32_t>& z) {
  const std::uint64_t p = plan.p;
  if (plan.solved >= 0) {
    std::uint64_t rest = 0;
    for (std::size_t v = 0; v < z.size(); ++v) {
      if (static_cast<int>(v) != plan.solved && plan.trace[v] != 0) rest += std::uint64_t{plan.trace[v]} * z[v] % p;
    }
    rest %= p;
    if (rest == 0) return false;  // the solved variable would have to be 0
    // trace[solved] * z + rest = 0
    const std::uint32_t c = plan.trace[static_cast<std::size_t>(plan.solved)];
    z[static_cast<std::size_t>(plan.solved)] = plan.field.mul(plan.field.neg(static_cast<std::uint32_t>(rest)), plan.field.inv(c));
  }
  for (const auto& f : plan.checks) {
    if (eval(f, z, p) != 0) return false;
  }
  return true;
}

/// Scans the assignments whose first enumerated variable equals `lead`
/// (all assignments when nothing is enumerated). Returns the rank within the
/// chunk of the first hit, if any, and leaves that assignment in `z`.
std::optional<std::uint64_t> scan_chunk(const SearchPlan& plan, std::uint32_t lead, std::vector<std::uint32_t>& z,
                                        const std::atomic<std::uint64_t>& stop_above, std::uint64_t chunk) {
  std::fill(z.begin(), z.end(), 1U);
  const std::size_t k = plan.enumerated.size();
  if (k == 0) {
    if (satisfies(plan, z)) return 0;
    return std::nullopt;
  }
  z[plan.enumerated[0]] = lead;
  const std::uint32_t top = static_cast<std::uint32_t>(plan.p - 1);
  std::uint64_t rank = 0;
  while (true) {
    if ((rank & 0xFFFF) == 0 && chunk > stop_above.load(std::memory_order_relaxed)) return std::nullopt;
    if (satisfies(plan, z)) return rank;
    ++rank;
    // Odometer over enumerated[1..k-1], last variable fastest.
    std::size_t pos = k;
    while (pos > 1) {
      auto& digit = z[plan.enumerated[pos - 1]];
      if (digit < top) {
        ++digit;
        break;
      }
      digit = 1;
      --pos;
    }
    if (pos == 1) return std::nullopt;
  }
}

}  // namespace

SearchResult brute_force_search(const ZnzPattern& a, std::int64_t p, const SearchOptions& options) {
  PrimeField field(p);
  const int n = a.order();
  const auto stars = a.stars();
  const int t = static_cast<int>(stars.size());

  SearchPlan plan{static_cast<std::uint64_t>(p), field, std::vector<std::uint32_t>(stars.size(), 0), {}, -1, {}, {}};

  int fixed = 0;
  if (options.normalize) {
    // Spanning forest of the undirected off-diagonal star graph, least edge first.
    std::vector<int> parent(static_cast<std::size_t>(n + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (std::size_t s = 0; s < stars.size(); ++s) {
      const auto [i, j] = stars[s];
      if (i == j) continue;
      const int ri = find(i);
      const int rj = find(j);
      if (ri == rj) continue;
      parent[static_cast<std::size_t>(ri)] = rj;
      plan.fixed_values[s] = 1;
      ++fixed;
    }
  }

  SearchResult result;
  result.stats.p = p;
  result.stats.variables = t;
  result.stats.fixed = fixed;
  result.stats.space = space_size(static_cast<std::uint64_t>(p - 1), t - fixed);
  if (result.stats.space > options.budget) {
    throw Error(ErrorKind::search_budget_exceeded, "search space " + std::to_string(p - 1) + "^" +
                                                       std::to_string(t - fixed) + " exceeds the budget of " +
                                                       std::to_string(options.budget) + " assignments");
  }

  auto pi = pattern_ideal(a, field);
  const auto& coeffs = pi.coefficients;
  plan.trace.assign(stars.size(), 0);
  if (!coeffs.empty()) {
    for (const auto& term : coeffs[0].terms()) {
      for (std::size_t v = 0; v < term.monomial.size(); ++v) {
        if (term.monomial[v] != 0) plan.trace[v] = term.coefficient;
      }
    }
  }
  for (std::size_t v = stars.size(); v-- > 0;) {
    if (plan.trace[v] != 0 && plan.fixed_values[v] == 0) {
      plan.solved = static_cast<int>(v);
      break;
    }
  }
  for (std::size_t i = (plan.solved >= 0 ? 1 : 0); i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) plan.checks.push_back(compile(coeffs[i]));
  }
  for (std::size_t v = 0; v < stars.size(); ++v) {
    if (plan.fixed_values[v] == 0 && static_cast<int>(v) != plan.solved) {
      plan.enumerated.push_back(static_cast<std::uint8_t>(v));
    }
  }

  const std::uint64_t per_value = space_size(static_cast<std::uint64_t>(p - 1),
                                             static_cast<int>(plan.enumerated.size()) - 1);
  const std::uint64_t chunks = plan.enumerated.empty() ? 1 : static_cast<std::uint64_t>(p - 1);
  std::vector<std::optional<std::uint64_t>> hit_rank(chunks);
  std::vector<std::vector<std::uint32_t>> hit_values(chunks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{UINT64_MAX};

  auto worker = [&] {
    std::vector<std::uint32_t> z(stars.size(), 1);
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks || c > best.load()) return;
      auto r = scan_chunk(plan, static_cast<std::uint32_t>(c + 1), z, best, c);
      if (r) {
        hit_rank[c] = r;
        hit_values[c] = z;
        std::uint64_t cur = best.load();
        while (c < cur && !best.compare_exchange_weak(cur, c)) {
        }
      }
    }
  };
  const unsigned threads = std::min<std::uint64_t>(options.threads != 0 ? options.threads : default_threads(), chunks);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const std::uint64_t enumerated_total = plan.enumerated.empty() ? 1 : chunks * per_value;
  const std::uint64_t winner = best.load();
  if (winner == UINT64_MAX) {
    result.stats.evaluated = enumerated_total;
    return result;
  }
  result.stats.evaluated = winner * per_value + *hit_rank[winner] + 1;
  Matrix<PrimeField> m(field, n);
  const auto& z = hit_values[winner];
  for (std::size_t v = 0; v < stars.size(); ++v) {
    const auto [i, j] = stars[v];
    m.at(i - 1, j - 1) = a.sign(i, j) < 0 ? field.neg(z[v]) : z[v];
  }
  result.realization = std::move(m);
  return result;
}

}  // namespace nilpat
