#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "nilpat/cli/report.hpp"

namespace nilpat::cli {

namespace {

struct Listed {
  const char* label;
  std::array<std::string_view, 3> rows;
  const char* group;  // nullptr: never PN
};

// Listed order-3 irreducible patterns by case, and the group of those that
// are PN for some p.
const std::vector<Listed>& listed_order3() {
  static const std::vector<Listed> table = {
      {"A_{1,1}", {"0*0", "00*", "*00"}, nullptr}, {"A_{1,2}", {"**0", "00*", "*00"}, nullptr},
      {"A_{1,3}", {"**0", "0**", "*00"}, nullptr}, {"A_{1,4}", {"**0", "0**", "*0*"}, "4"},
      {"A_{2,1}", {"0*0", "*0*", "0*0"}, "1"},     {"A_{2,2}", {"**0", "*0*", "0*0"}, nullptr},
      {"A_{2,3}", {"0*0", "***", "0*0"}, nullptr}, {"A_{2,4}", {"**0", "***", "0*0"}, nullptr},
      {"A_{2,5}", {"**0", "*0*", "0**"}, "2"},     {"A_{2,6}", {"**0", "***", "0**"}, "3"},
      {"A_{3,1}", {"0*0", "*0*", "*00"}, nullptr}, {"A_{3,2}", {"**0", "*0*", "*00"}, nullptr},
      {"A_{3,3}", {"0*0", "***", "*00"}, nullptr}, {"A_{3,4}", {"0*0", "*0*", "*0*"}, nullptr},
      {"A_{3,5}", {"**0", "***", "*00"}, nullptr}, {"A_{3,6}", {"**0", "*0*", "*0*"}, "1"},
      {"A_{3,7}", {"0*0", "***", "*0*"}, "1"},     {"A_{3,8}", {"**0", "***", "*0*"}, "3"},
      {"A_{4,1}", {"0**", "*0*", "*00"}, nullptr}, {"A_{4,2}", {"***", "*0*", "*00"}, nullptr},
      {"A_{4,3}", {"0**", "***", "*00"}, nullptr}, {"A_{4,4}", {"0**", "*0*", "*0*"}, nullptr},
      {"A_{4,5}", {"***", "***", "*00"}, "2"},     {"A_{4,6}", {"***", "*0*", "*0*"}, "2"},
      {"A_{4,7}", {"0**", "***", "*0*"}, "3"},     {"A_{4,8}", {"***", "***", "*0*"}, "2"},
      {"A_{5,1}", {"0**", "*0*", "**0"}, "2"},     {"A_{5,2}", {"***", "*0*", "**0"}, nullptr},
      {"A_{5,3}", {"***", "***", "**0"}, "1"},     {"A_{5,4}", {"***", "***", "***"}, "2"},
  };
  return table;
}

}  // namespace

std::string reference_group(const ZnzPattern& canonical) {
  if (canonical.order() == 2) {
    return canonical.star_count() == 4 ? "1" : "not PN";
  }
  if (canonical.order() == 3) {
    for (const auto& entry : listed_order3()) {
      if (entry.group != nullptr && nilpat::canonicalize(ZnzPattern::from_rows(std::span<const std::string_view>(entry.rows))) == canonical) {
        return entry.group;
      }
    }
  }
  return "not PN";
}

std::vector<std::string> reference_labels(const ZnzPattern& canonical) {
  std::vector<std::string> out;
  if (canonical.order() != 3) return out;
  for (const auto& entry : listed_order3()) {
    if (nilpat::canonicalize(ZnzPattern::from_rows(std::span<const std::string_view>(entry.rows))) == canonical) out.emplace_back(entry.label);
  }
  return out;
}

bool group_predicts_pn(const std::string& group, std::int64_t p) {
  if (group == "1") return true;
  if (group == "2") return p != 2;
  if (group == "3") return p != 2 && p != 3;
  if (group == "4") return roots_of_unity_split(3, p);
  return false;
}

ClassificationTable classify(int order, const std::vector<std::int64_t>& primes, const ClassifyOptions& options) {
  for (auto p : primes) PrimeField check(p);
  ClassificationTable table;
  table.order = order;
  table.primes = primes;
  const auto classes = enumerate_irreducible(order);
  for (const auto& c : classes) {
    ClassificationRow row{c, reference_labels(c), reference_group(c), 0, std::vector<Verdict>(primes.size())};
    const auto t = canonicalize(transpose(c));
    row.transpose_class = static_cast<std::size_t>(std::find(classes.begin(), classes.end(), t) - classes.begin());
    table.rows.push_back(std::move(row));
  }

  const std::size_t cells = table.rows.size() * primes.size();
  const unsigned threads = static_cast<unsigned>(
      std::min<std::size_t>(options.threads != 0 ? options.threads : default_threads(), std::max<std::size_t>(cells, 1)));
  DecideOptions decide = options.decide;
  // Parallelism lives at the cell level when there is more than one worker.
  if (threads > 1) decide.search.threads = 1;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t cell = next.fetch_add(1);
      if (cell >= cells) return;
      auto& row = table.rows[cell / primes.size()];
      const std::size_t k = cell % primes.size();
      row.verdicts[k] = decide_pn(row.pattern, primes[k], decide);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return table;
}

}  // namespace nilpat::cli
