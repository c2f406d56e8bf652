#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nilpat/nilpat.hpp"

#ifndef NILPAT_TEST_DATA_DIR
#error "NILPAT_TEST_DATA_DIR must be defined"
#endif

namespace fixture {

using nilpat::ZnzPattern;

inline std::string data_path(std::string_view name) { return std::string(NILPAT_TEST_DATA_DIR) + "/" + std::string(name); }

inline ZnzPattern path_end_loops() { return ZnzPattern::from_rows({"**0", "*0*", "0**"}); }
inline ZnzPattern loop_full_block() { return ZnzPattern::from_rows({"*00", "0**", "0**"}); }
inline ZnzPattern three_cycle_loops() { return ZnzPattern::from_rows({"**0", "0**", "*0*"}); }
inline ZnzPattern g5() { return ZnzPattern::from_rows({"---00", "+++00", "000--", "0-00-", "-0000"}); }
inline ZnzPattern full(int n) {
  ZnzPattern a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.set(i, j, true);
  return a;
}

struct Listed {
  std::string label;
  std::vector<std::string_view> rows;
  /// "1".."4" or "" for never PN.
  std::string group;

  ZnzPattern pattern() const { return ZnzPattern::from_rows(std::span<const std::string_view>(rows)); }
};

/// The 30 irreducible order-3 patterns listed case by case.
inline const std::vector<Listed>& listed_order3() {
  static const std::vector<Listed> table = {
      {"A_{1,1}", {"0*0", "00*", "*00"}, ""},  {"A_{1,2}", {"**0", "00*", "*00"}, ""},
      {"A_{1,3}", {"**0", "0**", "*00"}, ""},  {"A_{1,4}", {"**0", "0**", "*0*"}, "4"},
      {"A_{2,1}", {"0*0", "*0*", "0*0"}, "1"}, {"A_{2,2}", {"**0", "*0*", "0*0"}, ""},
      {"A_{2,3}", {"0*0", "***", "0*0"}, ""},  {"A_{2,4}", {"**0", "***", "0*0"}, ""},
      {"A_{2,5}", {"**0", "*0*", "0**"}, "2"}, {"A_{2,6}", {"**0", "***", "0**"}, "3"},
      {"A_{3,1}", {"0*0", "*0*", "*00"}, ""},  {"A_{3,2}", {"**0", "*0*", "*00"}, ""},
      {"A_{3,3}", {"0*0", "***", "*00"}, ""},  {"A_{3,4}", {"0*0", "*0*", "*0*"}, ""},
      {"A_{3,5}", {"**0", "***", "*00"}, ""},  {"A_{3,6}", {"**0", "*0*", "*0*"}, "1"},
      {"A_{3,7}", {"0*0", "***", "*0*"}, "1"}, {"A_{3,8}", {"**0", "***", "*0*"}, "3"},
      {"A_{4,1}", {"0**", "*0*", "*00"}, ""},  {"A_{4,2}", {"***", "*0*", "*00"}, ""},
      {"A_{4,3}", {"0**", "***", "*00"}, ""},  {"A_{4,4}", {"0**", "*0*", "*0*"}, ""},
      {"A_{4,5}", {"***", "***", "*00"}, "2"}, {"A_{4,6}", {"***", "*0*", "*0*"}, "2"},
      {"A_{4,7}", {"0**", "***", "*0*"}, "3"}, {"A_{4,8}", {"***", "***", "*0*"}, "2"},
      {"A_{5,1}", {"0**", "*0*", "**0"}, "2"}, {"A_{5,2}", {"***", "*0*", "**0"}, ""},
      {"A_{5,3}", {"***", "***", "**0"}, "1"}, {"A_{5,4}", {"***", "***", "***"}, "2"},
  };
  return table;
}

inline const Listed& listed(std::string_view label) {
  for (const auto& l : listed_order3())
    if (l.label == label) return l;
  throw std::out_of_range(std::string(label));
}

/// Explicit realizations as rational entries, with the primes where they are
/// meant to be valid.
struct KnownRealization {
  std::string name;
  ZnzPattern pattern;
  std::vector<std::vector<std::string>> entries;
  /// Primes (among 2, 3, 5, 7, 13) where the stated condition holds.
  std::vector<std::int64_t> primes;
};

inline std::vector<KnownRealization> known_realizations() {
  const std::vector<std::int64_t> all{2, 3, 5, 7, 13};
  const std::vector<std::int64_t> odd{3, 5, 7, 13};
  const std::vector<std::int64_t> big{5, 7, 13};
  const std::vector<std::int64_t> not3{2, 5, 7, 13};
  return {
      {"2x2", full(2), {{"1", "1"}, {"-1", "-1"}}, all},
      {"A_{2,1}", listed("A_{2,1}").pattern(), {{"0", "1", "0"}, {"1", "0", "1"}, {"0", "-1", "0"}}, all},
      {"A_{2,5}", listed("A_{2,5}").pattern(), {{"1", "-1/2", "0"}, {"1", "0", "1/2"}, {"0", "-1", "-1"}}, odd},
      {"A_{2,6}", listed("A_{2,6}").pattern(), {{"2", "2", "0"}, {"-4", "-3", "1"}, {"0", "1", "1"}}, big},
      {"A_{3,6}", listed("A_{3,6}").pattern(), {{"-1", "-1", "0"}, {"1", "0", "1"}, {"1", "0", "1"}}, all},
      {"A_{3,7}", listed("A_{3,7}").pattern(), {{"0", "-1", "0"}, {"1", "-1", "1"}, {"1", "0", "1"}}, all},
      {"A_{3,8}", listed("A_{3,8}").pattern(), {{"-2", "-1", "0"}, {"3", "1", "1"}, {"1", "0", "1"}}, big},
      {"A_{4,5}", listed("A_{4,5}").pattern(), {{"1", "1", "1"}, {"1", "-1", "-1"}, {"2", "0", "0"}}, odd},
      {"A_{4,6}", listed("A_{4,6}").pattern(), {{"1", "1", "1"}, {"1", "0", "1/2"}, {"-2", "0", "-1"}}, odd},
      {"A_{4,7}", listed("A_{4,7}").pattern(), {{"0", "-2", "1"}, {"1", "-1", "3/2"}, {"1", "0", "1"}}, not3},
      {"A_{4,8}", listed("A_{4,8}").pattern(), {{"-2", "-4", "1"}, {"1", "1", "1/4"}, {"1", "0", "1"}}, odd},
      {"A_{5,1}", listed("A_{5,1}").pattern(), {{"0", "-1", "1"}, {"4", "0", "2"}, {"2", "1", "0"}}, odd},
      {"A_{5,3}", listed("A_{5,3}").pattern(), {{"1", "1", "1"}, {"-1", "-1", "-1"}, {"1", "1", "0"}}, all},
      {"A_{5,4}", listed("A_{5,4}").pattern(), {{"1", "1", "1"}, {"1", "1", "1"}, {"-2", "-2", "-2"}}, odd},
  };
}

inline nilpat::Matrix<nilpat::PrimeField> to_matrix(const std::vector<std::vector<std::string>>& entries,
                                                    const nilpat::PrimeField& field) {
  const int n = static_cast<int>(entries.size());
  nilpat::Matrix<nilpat::PrimeField> m(field, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = field.parse(entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  return m;
}

/// Every pattern used as a Groebner/saturation fixture.
inline std::vector<ZnzPattern> ideal_fixtures() {
  std::vector<ZnzPattern> out{path_end_loops(), loop_full_block(), three_cycle_loops(), g5(), full(2), ZnzPattern::from_rows({"*"})};
  for (const auto& l : listed_order3()) out.push_back(l.pattern());
  return out;
}

}  // namespace fixture
