#include "nilpat/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "nilpat/cli/report.hpp"
#include "nilpat/groebner.hpp"

namespace nilpat::cli {

namespace {

constexpr std::int64_t kDefaultMaxPrime = 251;

struct FieldChoice {
  std::int64_t prime = 0;
  bool rationals = false;
};

/// Exit code carried out of a subcommand together with a message for stderr.
struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitBadInput, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ZnzPattern load_pattern(const std::string& path) {
  const auto text = read_file(path);
  try {
    return parse_pattern(text);
  } catch (const Error& e) {
    throw Failure{kExitBadInput, path + ": " + e.what()};
  }
}

void add_field_options(CLI::App* cmd, FieldChoice& field) {
  auto* prime = cmd->add_option("--prime", field.prime, "work over Z_P");
  auto* rationals = cmd->add_flag("--rationals", field.rationals, "work over Q");
  prime->excludes(rationals);
  rationals->excludes(prime);
}

void require_field(const FieldChoice& field) {
  if (!field.rationals && field.prime == 0) throw Failure{kExitUsage, "exactly one of --prime P or --rationals is required"};
  if (!field.rationals && !is_prime(field.prime)) {
    throw Failure{kExitUsage, std::to_string(field.prime) + " is not a prime"};
  }
  if (!field.rationals) PrimeField check(field.prime);
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Failure{kExitBadInput, "cannot write " + path};
  file << text;
}

template <class Field>
std::string basis_text(const std::vector<Polynomial<Field>>& basis) {
  std::string s;
  for (const auto& g : basis) s += to_string(g) + '\n';
  return s;
}

template <class Field>
std::string groebner_text(const ZnzPattern& a, const Field& field) {
  const auto pi = pattern_ideal(a, field);
  const auto gb = buchberger(pi.ideal, MonomialOrder::lex());
  return basis_text(gb.basis);
}

template <class Field>
std::string saturate_text(const ZnzPattern& a, const Field& field) {
  const auto pi = pattern_ideal(a, field);
  const auto m = pi.star_monomial();
  const auto colon = buchberger(colon_principal(pi.ideal, m), MonomialOrder::lex());
  const auto sat = buchberger(saturate(pi.ideal, m), MonomialOrder::lex());
  return "colon:\n" + basis_text(colon.basis) + "saturation:\n" + basis_text(sat.basis);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Potential nilpotence of zero-nonzero and sign patterns", "nilpat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string file;
  FieldChoice field;
  std::string format = "text";
  std::string out_path;
  std::uint64_t budget = SearchOptions{}.budget;
  bool no_timing = false;

  auto* analyze = app.add_subcommand("analyze", "decide whether a pattern is potentially nilpotent");
  analyze->add_option("FILE", file, "pattern file, '-' for stdin")->required();
  add_field_options(analyze, field);
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--budget", budget, "largest search space to enumerate");
  analyze->add_option("--out", out_path, "write the report here instead of stdout");
  analyze->add_flag("--no-timing", no_timing, "report 0 micros for every stage");

  int order = 0;
  std::vector<std::int64_t> primes;
  std::int64_t max_prime = kDefaultMaxPrime;
  auto* classify_cmd = app.add_subcommand("classify", "classify every irreducible pattern of an order");
  classify_cmd->add_option("--order", order)->required()->check(CLI::Range(2, 3));
  classify_cmd->add_option("--primes", primes)->required()->delimiter(',');
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  classify_cmd->add_option("--out", out_path);
  classify_cmd->add_option("--budget", budget);
  classify_cmd->add_option("--max-prime", max_prime, "largest prime accepted");

  auto* groebner_cmd = app.add_subcommand("groebner", "reduced lex Groebner basis of the pattern ideal");
  groebner_cmd->add_option("FILE", file)->required();
  add_field_options(groebner_cmd, field);

  auto* saturate_cmd = app.add_subcommand("saturate", "colon and saturation by the product of the variables");
  saturate_cmd->add_option("FILE", file)->required();
  add_field_options(saturate_cmd, field);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      require_field(field);
      const auto a = load_pattern(file);
      AnalysisReport report;
      if (field.rationals) {
        report = make_report(a, analyze_rationals(a), !no_timing);
      } else {
        DecideOptions options;
        options.search.budget = budget;
        report = make_report(a, decide_pn(a, field.prime, options), !no_timing);
      }
      emit(out, out_path, format == "json" ? to_json(report).dump(2) + '\n' : to_text(report));
      return exit_code(report.status);
    }
    if (classify_cmd->parsed()) {
      for (auto p : primes) {
        if (!is_prime(p)) throw Failure{kExitUsage, std::to_string(p) + " is not a prime"};
        if (p > max_prime) {
          throw Failure{kExitUsage, std::to_string(p) + " exceeds the largest accepted prime " + std::to_string(max_prime)};
        }
      }
      ClassifyOptions options;
      options.decide.search.budget = budget;
      const auto table = classify(order, primes, options);
      emit(out, out_path, format == "json" ? to_json(table).dump(2) + '\n' : to_text(table));
      return kExitPn;
    }
    require_field(field);
    const auto a = load_pattern(file);
    const bool gb = groebner_cmd->parsed();
    if (field.rationals) {
      out << (gb ? groebner_text(a, RationalField{}) : saturate_text(a, RationalField{}));
    } else {
      const PrimeField f(field.prime);
      out << (gb ? groebner_text(a, f) : saturate_text(a, f));
    }
    return kExitPn;
  } catch (const Failure& f) {
    err << "nilpat: " << f.message << '\n';
    return f.code;
  } catch (const Error& e) {
    err << "nilpat: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::non_prime_modulus:
        return kExitUsage;
      case ErrorKind::resource_limit:
      case ErrorKind::search_budget_exceeded:
        return kExitUnknown;
      default:
        return kExitBadInput;
    }
  }
}

}  // namespace nilpat::cli
