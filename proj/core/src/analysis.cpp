#include "nilpat/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

namespace nilpat {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::potentially_nilpotent: return "potentially_nilpotent";
    case Status::not_potentially_nilpotent: return "not_potentially_nilpotent";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::realization: return "realization";
    case CertificateKind::single_diagonal: return "single_diagonal";
    case CertificateKind::single_transversal: return "single_transversal";
    case CertificateKind::no_small_cycles: return "no_small_cycles";
    case CertificateKind::roots_of_unity_missing: return "roots_of_unity_missing";
    case CertificateKind::z2_parity: return "z2_parity";
    case CertificateKind::z2_two_loops_two_2cycles: return "z2_two_loops_two_2cycles";
    case CertificateKind::saturation_unit: return "saturation_unit";
    case CertificateKind::exhausted_search: return "exhausted_search";
    case CertificateKind::none: return "none";
  }
  return "none";
}

namespace {

std::vector<int> all_vertices(const ZnzPattern& a) {
  std::vector<int> v;
  for (int i = 1; i <= a.order(); ++i) v.push_back(i);
  return v;
}

bool has_cycles_between(const ZnzPattern& a, int k_min, int k_max) {
  for (int k = k_min; k <= k_max; ++k) {
    if (!simple_cycles(a, k).empty()) return true;
  }
  return false;
}

std::string monomial_text(std::span<const Position> positions) {
  std::string out;
  for (auto p : positions) {
    if (!out.empty()) out += '*';
    out += "z[" + std::to_string(p.row) + "," + std::to_string(p.col) + "]";
  }
  return out;
}

}  // namespace

std::optional<Certificate> filter_structural(const ZnzPattern& a) {
  const auto loops = a.loops();
  if (loops.size() == 1) {
    std::vector<Position> pos{{loops[0], loops[0]}};
    return Certificate{CertificateKind::single_diagonal, all_vertices(a),
                       MonomialData{"F_1", monomial_text(pos), pos}};
  }
  if (transversal_count(a) == 1) {
    // Recover the unique transversal.
    std::vector<Position> pos;
    std::uint32_t used = 0;
    std::function<bool(int)> extend = [&](int row) {
      if (row > a.order()) return true;
      for (int c = 1; c <= a.order(); ++c) {
        if (!a.has(row, c) || ((used >> (c - 1)) & 1U)) continue;
        used |= 1U << (c - 1);
        pos.push_back({row, c});
        if (extend(row + 1)) return true;
        pos.pop_back();
        used &= ~(1U << (c - 1));
      }
      return false;
    };
    extend(1);
    return Certificate{CertificateKind::single_transversal, all_vertices(a),
                       MonomialData{"F_" + std::to_string(a.order()), monomial_text(pos), pos}};
  }
  const int m = static_cast<int>(loops.size());
  if (m >= 2 && !has_cycles_between(a, 2, m)) {
    return Certificate{CertificateKind::no_small_cycles, all_vertices(a), CycleGapData{m, 2, m}};
  }
  return std::nullopt;
}

std::optional<Certificate> filter_z2(const ZnzPattern& a, std::int64_t p) {
  if (p != 2) throw Error(ErrorKind::wrong_field, "the Z_2 filters need p = 2, got " + std::to_string(p));
  const int loops = a.loop_count();
  const int two_cycles = static_cast<int>(simple_cycles(a, 2).size());
  if (loops % 2 == 1) return Certificate{CertificateKind::z2_parity, all_vertices(a), Z2Data{loops, two_cycles}};
  if (loops == 2 && two_cycles == 2) {
    return Certificate{CertificateKind::z2_two_loops_two_2cycles, all_vertices(a), Z2Data{loops, two_cycles}};
  }
  return std::nullopt;
}

bool roots_of_unity_split(int m, std::int64_t p) {
  if (m < 1) throw std::invalid_argument("roots_of_unity_split needs m >= 1");
  if (!is_prime(p)) throw Error(ErrorKind::non_prime_modulus, std::to_string(p) + " is not prime");
  std::int64_t rest = m;
  while (rest % p == 0) rest /= p;
  return (p - 1) % rest == 0;
}

std::optional<Certificate> filter_no_small_cycles(const ZnzPattern& a, std::int64_t p) {
  const int m = a.loop_count();
  if (m < 2 || has_cycles_between(a, 2, m - 1)) return std::nullopt;
  if (roots_of_unity_split(m, p)) return std::nullopt;
  return Certificate{CertificateKind::roots_of_unity_missing, all_vertices(a), RootsData{m, p}};
}

template <class Field>
std::optional<Certificate> saturation_certificate(const ZnzPattern& a, const Field& field,
                                                  const SaturationCertificateOptions& options) {
  auto pi = pattern_ideal(a, field);
  if (pi.ideal.is_zero()) return std::nullopt;
  const auto m = pi.star_monomial();
  SaturationOptions sat_options{SaturationMethod::extra_variable, options.auxiliary_order, options.groebner};
  if (!contains_one(saturate(pi.ideal, m, sat_options), options.groebner)) return std::nullopt;
  SaturationData data{field.name(), std::nullopt, true, {"1"}};
  try {
    data.unit_in_colon = contains_one(colon_principal(pi.ideal, m, sat_options), options.groebner);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::resource_limit) throw;
  }
  return Certificate{CertificateKind::saturation_unit, all_vertices(a), std::move(data)};
}

template std::optional<Certificate> saturation_certificate(const ZnzPattern&, const PrimeField&,
                                                           const SaturationCertificateOptions&);
template std::optional<Certificate> saturation_certificate(const ZnzPattern&, const RationalField&,
                                                           const SaturationCertificateOptions&);

std::optional<Matrix<PrimeField>> an_realization(int n, std::int64_t p) {
  const ZnzPattern pattern = an_family(n);
  PrimeField field(p);
  if (!roots_of_unity_split(n, p)) return std::nullopt;
  // Roots of x^n - 1 with multiplicity, by repeated synthetic division.
  std::vector<std::uint32_t> roots;
  for (std::uint32_t c = 1; c < field.modulus(); ++c) {
    std::vector<std::uint32_t> poly(static_cast<std::size_t>(n + 1), 0);  // ascending coefficients
    poly[0] = field.neg(1);
    poly[static_cast<std::size_t>(n)] = 1;
    while (poly.size() > 1) {
      // Divide by (x - c): Horner from the top.
      std::vector<std::uint32_t> q(poly.size() - 1);
      std::uint32_t carry = 0;
      for (std::size_t i = poly.size(); i-- > 1;) {
        carry = field.add(poly[i], field.mul(carry, c));
        q[i - 1] = carry;
      }
      const std::uint32_t remainder = field.add(poly[0], field.mul(carry, c));
      if (remainder != 0) break;
      roots.push_back(c);
      poly = std::move(q);
    }
  }
  if (static_cast<int>(roots.size()) != n) return std::nullopt;
  roots.erase(std::find(roots.begin(), roots.end(), 1U));
  Matrix<PrimeField> m(field, n);
  for (int i = 0; i < n - 1; ++i) m.at(i, i) = roots[static_cast<std::size_t>(i)];
  m.at(n - 1, n - 1) = 1;
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
  m.at(n - 1, 0) = field.neg(1);
  if (!check_nilpotent(pattern, m)) throw std::logic_error("A_n realization is not nilpotent");
  return m;
}

namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& stages) : stages_(stages) {}

  template <class F>
  auto run(const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    struct Record {
      StageClock* self;
      const std::string& name;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        const auto us =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
        self->add(name, us);
      }
    } record{this, name, start};
    return f();
  }

 private:
  void add(const std::string& name, std::int64_t us) {
    for (auto& s : stages_) {
      if (s.name == name) {
        s.micros += us;
        return;
      }
    }
    stages_.push_back({name, us});
  }

  std::vector<StageTiming>& stages_;
};

/// Rewrites component-local positions and vertices to the whole pattern.
void lift(Certificate& cert, const std::vector<int>& component) {
  cert.component = component;
  if (auto* mono = std::get_if<MonomialData>(&cert.data)) {
    for (auto& p : mono->positions) {
      p = {component[static_cast<std::size_t>(p.row - 1)], component[static_cast<std::size_t>(p.col - 1)]};
    }
    mono->monomial = monomial_text(mono->positions);
  }
}

struct ComponentOutcome {
  Status status = Status::unknown;
  Certificate certificate;
  std::optional<Matrix<PrimeField>> realization;
};

ComponentOutcome decide_component(const ZnzPattern& sub, std::int64_t p, const DecideOptions& options,
                                  StageClock& clock) {
  ComponentOutcome out;
  auto refuted = [&](std::optional<Certificate> cert) {
    if (!cert) return false;
    out.status = Status::not_potentially_nilpotent;
    out.certificate = std::move(*cert);
    return true;
  };
  if (refuted(clock.run("structural", [&] { return filter_structural(sub); }))) return out;
  if (p == 2 && refuted(clock.run("z2", [&] { return filter_z2(sub, p); }))) return out;
  if (refuted(clock.run("roots_of_unity", [&] { return filter_no_small_cycles(sub, p); }))) return out;

  std::string saturation_note;
  if (options.use_saturation) {
    try {
      if (refuted(clock.run("saturation", [&] { return saturation_certificate(sub, PrimeField(p), options.saturation); }))) {
        return out;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::resource_limit) throw;
      saturation_note = std::string("; saturation: ") + e.what();
    }
  }

  try {
    auto found = clock.run("search", [&] { return brute_force_search(sub, p, options.search); });
    if (found.realization) {
      out.status = Status::potentially_nilpotent;
      out.realization = std::move(found.realization);
      out.certificate = {CertificateKind::realization, {}, RealizationData{*out.realization}};
    } else {
      out.status = Status::not_potentially_nilpotent;
      out.certificate = {CertificateKind::exhausted_search, {}, found.stats};
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::search_budget_exceeded) throw;
    out.status = Status::unknown;
    out.certificate = {CertificateKind::none, {}, UnknownData{"search", e.what() + saturation_note}};
  }
  return out;
}

}  // namespace

Verdict decide_pn(const ZnzPattern& a, std::int64_t p, const DecideOptions& options) {
  PrimeField field(p);
  Verdict verdict;
  verdict.field = PrimeKind{p};
  StageClock clock(verdict.stages);
  const auto components = clock.run("components", [&] { return strongly_connected_components(a); });

  Matrix<PrimeField> realization(field, a.order());
  // Arcs between components do not affect the characteristic polynomial.
  for (auto pos : a.stars()) {
    realization.at(pos.row - 1, pos.col - 1) = a.sign(pos.row, pos.col) < 0 ? field.neg(1) : 1;
  }

  std::optional<Certificate> unknown;
  for (const auto& comp : components) {
    const ZnzPattern sub = induced(a, comp);
    auto outcome = decide_component(sub, p, options, clock);
    if (outcome.status == Status::not_potentially_nilpotent) {
      verdict.status = Status::not_potentially_nilpotent;
      verdict.certificate = std::move(outcome.certificate);
      lift(verdict.certificate, comp);
      return verdict;
    }
    if (outcome.status == Status::unknown) {
      if (!unknown) {
        unknown = std::move(outcome.certificate);
        lift(*unknown, comp);
      }
      continue;
    }
    const auto& block = *outcome.realization;
    for (std::size_t r = 0; r < comp.size(); ++r) {
      for (std::size_t c = 0; c < comp.size(); ++c) {
        realization.at(comp[r] - 1, comp[c] - 1) = block.at(static_cast<int>(r), static_cast<int>(c));
      }
    }
  }
  if (unknown) {
    verdict.status = Status::unknown;
    verdict.certificate = std::move(*unknown);
    return verdict;
  }
  if (!check_nilpotent(a, realization)) throw std::logic_error("assembled realization is not nilpotent");
  verdict.status = Status::potentially_nilpotent;
  verdict.certificate = {CertificateKind::realization, all_vertices(a), RealizationData{realization}};
  verdict.realization = std::move(realization);
  return verdict;
}

Verdict analyze_rationals(const ZnzPattern& a, const SaturationCertificateOptions& options) {
  Verdict verdict;
  verdict.field = RationalsKind{};
  StageClock clock(verdict.stages);
  try {
    auto cert = clock.run("saturation", [&] { return saturation_certificate(a, RationalField{}, options); });
    if (cert) {
      verdict.status = Status::not_potentially_nilpotent;
      verdict.certificate = std::move(*cert);
      return verdict;
    }
    verdict.certificate = {CertificateKind::none, all_vertices(a),
                           UnknownData{"saturation", "1 is not in the saturation; no certificate over Q"}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::resource_limit) throw;
    verdict.certificate = {CertificateKind::none, all_vertices(a), UnknownData{"saturation", e.what()}};
  }
  verdict.status = Status::unknown;
  return verdict;
}

}  // namespace nilpat
