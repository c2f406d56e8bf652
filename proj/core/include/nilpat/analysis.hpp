#pragma once

// Deciding potential nilpotence of a pattern over Z_p, with certificates.
//
// decide_pn splits the pattern into its strongly connected components and
// runs each through: structural filters, the Z_2 filters (p = 2), the
// roots-of-unity filter, a saturation certificate over Z_p and finally an
// exhaustive search modulo diagonal similarity.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nilpat/charideal.hpp"
#include "nilpat/coefficients.hpp"
#include "nilpat/pattern.hpp"

namespace nilpat {

enum class Status { potentially_nilpotent, not_potentially_nilpotent, unknown };

enum class CertificateKind {
  realization,
  single_diagonal,
  single_transversal,
  no_small_cycles,
  roots_of_unity_missing,
  z2_parity,
  z2_two_loops_two_2cycles,
  saturation_unit,
  exhausted_search,
  /// No certificate: the verdict is unknown.
  none,
};

std::string_view to_string(Status status);
std::string_view to_string(CertificateKind kind);

struct RealizationData {
  Matrix<PrimeField> matrix;
};

/// F_1 or F_n is a single monomial.
struct MonomialData {
  std::string coefficient;  // "F_1" or "F_n"
  std::string monomial;     // in the polynomial text grammar
  std::vector<Position> positions;
};

/// m >= 2 loops and no k-cycles for k in [k_min, k_max].
struct CycleGapData {
  int loops = 0;
  int k_min = 0;
  int k_max = 0;
};

/// x^m - 1 does not split over Z_p.
struct RootsData {
  int m = 0;
  std::int64_t p = 0;
};

struct Z2Data {
  int loops = 0;
  int two_cycles = 0;
};

struct SaturationData {
  std::string field;
  /// 1 is already in I_A : m_A; nullopt when that check hit a resource limit.
  std::optional<bool> unit_in_colon;
  /// The conclusion holds over every extension of the field as well.
  bool extension_claim = true;
  /// Reduced basis of the saturation, i.e. {"1"}.
  std::vector<std::string> witness;
};

struct SearchData {
  std::int64_t p = 0;
  int variables = 0;
  /// Entries fixed to 1 by the diagonal-similarity normalization.
  int fixed = 0;
  /// (p-1)^(variables - fixed).
  std::uint64_t space = 0;
  /// Assignments actually examined.
  std::uint64_t evaluated = 0;
};

struct UnknownData {
  std::string stage;
  std::string message;
};

using CertificateData = std::variant<std::monostate, RealizationData, MonomialData, CycleGapData, RootsData, Z2Data,
                                     SaturationData, SearchData, UnknownData>;

struct Certificate {
  CertificateKind kind = CertificateKind::none;
  /// Vertices (1-based) of the component the certificate is about; the
  /// whole vertex set for single-component results.
  std::vector<int> component;
  CertificateData data;
};

struct StageTiming {
  std::string name;
  std::int64_t micros = 0;
};

struct Verdict {
  Status status = Status::unknown;
  Certificate certificate;
  FieldKind field = RationalsKind{};
  /// Present iff status is potentially_nilpotent.
  std::optional<Matrix<PrimeField>> realization;
  std::vector<StageTiming> stages;
};

/// Field-independent certificates: single_diagonal, single_transversal or
/// no_small_cycles.
std::optional<Certificate> filter_structural(const ZnzPattern& a);

/// Odd loop count, or exactly two loops and exactly two 2-cycles.
/// Error(wrong_field) unless p == 2.
std::optional<Certificate> filter_z2(const ZnzPattern& a, std::int64_t p);

/// x^m - 1 splits into linear factors over Z_p (with multiplicity).
bool roots_of_unity_split(int m, std::int64_t p);

/// m >= 2 loops, no k-cycles for 2 <= k <= m-1, and x^m - 1 does not split.
std::optional<Certificate> filter_no_small_cycles(const ZnzPattern& a, std::int64_t p);

struct SaturationCertificateOptions {
  GroebnerOptions groebner;
  OrderKind auxiliary_order = OrderKind::lex;
};

/// saturation_unit iff 1 is in I_A : m_A^infinity. Propagates
/// Error(resource_limit).
template <class Field>
std::optional<Certificate> saturation_certificate(const ZnzPattern& a, const Field& field,
                                                  const SaturationCertificateOptions& options = {});

struct SearchOptions {
  /// Largest (p-1)^free allowed; beyond it Error(search_budget_exceeded).
  std::uint64_t budget = 100'000'000;
  /// Fix a spanning forest of off-diagonal entries to 1.
  bool normalize = true;
  /// 0: NILPAT_THREADS, else hardware concurrency.
  unsigned threads = 0;
};

struct SearchResult {
  /// M_A at the least satisfying assignment in enumeration order.
  std::optional<Matrix<PrimeField>> realization;
  SearchData stats;
};

/// Exhaustive search for a nilpotent realization over Z_p.
SearchResult brute_force_search(const ZnzPattern& a, std::int64_t p, const SearchOptions& options = {});

/// Diagonal zeta_1..zeta_{n-1}, 1 (roots of x^n - 1 with multiplicity, one 1
/// removed), superdiagonal 1s, corner (n,1) = -1. Checked with
/// check_nilpotent. nullopt when x^n - 1 does not split.
std::optional<Matrix<PrimeField>> an_realization(int n, std::int64_t p);

struct DecideOptions {
  SearchOptions search;
  SaturationCertificateOptions saturation;
  /// Skip the saturation stage (it never changes a definite answer over Z_p).
  bool use_saturation = true;
};

Verdict decide_pn(const ZnzPattern& a, std::int64_t p, const DecideOptions& options = {});

/// Over Q only the saturation certificate is available: not PN or unknown.
Verdict analyze_rationals(const ZnzPattern& a, const SaturationCertificateOptions& options = {});

/// Worker count from NILPAT_THREADS, else hardware concurrency (at least 1).
unsigned default_threads();

}  // namespace nilpat
