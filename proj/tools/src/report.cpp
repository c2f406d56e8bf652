#include <algorithm>
#include <iomanip>
#include <sstream>

#include "nilpat/cli/report.hpp"

namespace nilpat::cli {

namespace {

Json positions_json(const std::vector<Position>& positions) {
  Json out = Json::array();
  for (auto p : positions) out.push_back({p.row, p.col});
  return out;
}

std::vector<std::vector<std::int64_t>> matrix_rows(const Matrix<PrimeField>& m) {
  std::vector<std::vector<std::int64_t>> rows;
  for (int r = 0; r < m.order(); ++r) {
    auto& row = rows.emplace_back();
    for (int c = 0; c < m.order(); ++c) row.push_back(m.at(r, c));
  }
  return rows;
}

std::string field_label(const FieldKind& kind) {
  if (const auto* prime = std::get_if<PrimeKind>(&kind)) return "Z_" + std::to_string(prime->p);
  return "Q";
}

}  // namespace

bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
  auto stage_eq = [](const std::vector<StageTiming>& x, const std::vector<StageTiming>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].name != y[i].name || x[i].micros != y[i].micros) return false;
    }
    return true;
  };
  return a.pattern == b.pattern && a.order == b.order && a.field == b.field && a.status == b.status &&
         a.certificate_kind == b.certificate_kind && a.certificate_data == b.certificate_data &&
         a.realization == b.realization && stage_eq(a.stages, b.stages) && a.version == b.version;
}

Json certificate_data_json(const Certificate& certificate) {
  Json data = Json::object();
  data["component"] = certificate.component;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, RealizationData>) {
          data["matrix"] = matrix_rows(d.matrix);
        } else if constexpr (std::is_same_v<T, MonomialData>) {
          data["coefficient"] = d.coefficient;
          data["monomial"] = d.monomial;
          data["positions"] = positions_json(d.positions);
        } else if constexpr (std::is_same_v<T, CycleGapData>) {
          data["loops"] = d.loops;
          data["no_cycles_of_length"] = {d.k_min, d.k_max};
        } else if constexpr (std::is_same_v<T, RootsData>) {
          data["m"] = d.m;
          data["p"] = d.p;
          data["unsplit"] = "x^" + std::to_string(d.m) + " - 1";
        } else if constexpr (std::is_same_v<T, Z2Data>) {
          data["loops"] = d.loops;
          data["two_cycles"] = d.two_cycles;
        } else if constexpr (std::is_same_v<T, SaturationData>) {
          data["field"] = d.field;
          data["unit_in_colon"] = d.unit_in_colon ? Json(*d.unit_in_colon) : Json(nullptr);
          data["extension_claim"] = d.extension_claim;
          data["saturation_basis"] = d.witness;
        } else if constexpr (std::is_same_v<T, SearchData>) {
          data["p"] = d.p;
          data["variables"] = d.variables;
          data["fixed"] = d.fixed;
          data["space"] = d.space;
          data["evaluated"] = d.evaluated;
        } else if constexpr (std::is_same_v<T, UnknownData>) {
          data["stage"] = d.stage;
          data["message"] = d.message;
        }
      },
      certificate.data);
  return data;
}

AnalysisReport make_report(const ZnzPattern& a, const Verdict& verdict, bool timing) {
  AnalysisReport r;
  r.pattern = pattern_rows(a);
  r.order = a.order();
  r.field = field_label(verdict.field);
  r.status = std::string(to_string(verdict.status));
  r.certificate_kind = std::string(to_string(verdict.certificate.kind));
  r.certificate_data = certificate_data_json(verdict.certificate);
  if (verdict.realization) r.realization = matrix_rows(*verdict.realization);
  r.stages = verdict.stages;
  if (!timing) {
    for (auto& s : r.stages) s.micros = 0;
  }
  return r;
}

Json to_json(const AnalysisReport& report) {
  Json j;
  j["pattern"] = report.pattern;
  j["order"] = report.order;
  j["field"] = report.field;
  j["status"] = report.status;
  j["certificate"] = {{"kind", report.certificate_kind}, {"data", report.certificate_data}};
  j["realization"] = report.realization ? Json(*report.realization) : Json(nullptr);
  Json stages = Json::array();
  for (const auto& s : report.stages) stages.push_back({{"name", s.name}, {"micros", s.micros}});
  j["stages"] = std::move(stages);
  j["version"] = report.version;
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  try {
    AnalysisReport r;
    r.pattern = j.at("pattern").get<std::vector<std::string>>();
    r.order = j.at("order").get<int>();
    r.field = j.at("field").get<std::string>();
    r.status = j.at("status").get<std::string>();
    r.certificate_kind = j.at("certificate").at("kind").get<std::string>();
    r.certificate_data = j.at("certificate").at("data");
    if (!j.at("realization").is_null()) {
      r.realization = j.at("realization").get<std::vector<std::vector<std::int64_t>>>();
    }
    for (const auto& s : j.at("stages")) {
      r.stages.push_back({s.at("name").get<std::string>(), s.at("micros").get<std::int64_t>()});
    }
    r.version = j.at("version").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "pattern (order " << report.order << "):\n";
  for (const auto& row : report.pattern) out << "  " << row << '\n';
  out << "field: " << report.field << '\n';
  out << "status: " << report.status << '\n';
  out << "certificate: " << report.certificate_kind << '\n';
  for (const auto& [key, value] : report.certificate_data.items()) {
    if (key == "matrix") continue;
    out << "  " << key << ": " << value.dump() << '\n';
  }
  if (report.realization) {
    out << "realization:\n";
    for (const auto& row : *report.realization) {
      out << " ";
      for (auto v : row) out << ' ' << v;
      out << '\n';
    }
  }
  out << "stages:";
  for (const auto& s : report.stages) out << ' ' << s.name << '=' << s.micros << "us";
  out << '\n';
  out << "version: " << report.version << '\n';
  return out.str();
}

int exit_code(const std::string& status) {
  if (status == "potentially_nilpotent") return 0;
  if (status == "not_potentially_nilpotent") return 1;
  return 2;
}

Json to_json(const ClassificationTable& table) {
  Json j;
  j["order"] = table.order;
  j["primes"] = table.primes;
  Json classes = Json::array();
  for (const auto& row : table.rows) {
    Json c;
    c["pattern"] = pattern_rows(row.pattern);
    c["labels"] = row.labels;
    c["group"] = row.group;
    c["transpose_class"] = row.transpose_class;
    Json status = Json::object();
    Json certificates = Json::object();
    for (std::size_t k = 0; k < table.primes.size(); ++k) {
      const auto key = std::to_string(table.primes[k]);
      status[key] = to_string(row.verdicts[k].status);
      certificates[key] = to_string(row.verdicts[k].certificate.kind);
    }
    c["status"] = std::move(status);
    c["certificates"] = std::move(certificates);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  j["version"] = kVersion;
  return j;
}

std::string to_text(const ClassificationTable& table) {
  std::ostringstream out;
  out << "order " << table.order << ", " << table.rows.size() << " irreducible classes\n";
  const int pattern_width = std::max(8, table.order * (table.order + 1) - 1);
  out << std::left << std::setw(6) << "class" << std::setw(pattern_width + 2) << "pattern" << std::setw(8) << "group";
  for (auto p : table.primes) out << std::setw(6) << ("p=" + std::to_string(p));
  out << "labels\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    std::string rows;
    for (const auto& r : pattern_rows(row.pattern)) rows += (rows.empty() ? "" : "/") + r;
    out << std::setw(6) << i << std::setw(pattern_width + 2) << rows << std::setw(8) << row.group;
    for (const auto& v : row.verdicts) {
      const char* mark = v.status == Status::potentially_nilpotent ? "PN" : v.status == Status::unknown ? "??" : "--";
      out << std::setw(6) << mark;
    }
    for (std::size_t l = 0; l < row.labels.size(); ++l) out << (l ? "," : "") << row.labels[l];
    out << '\n';
  }
  return out.str();
}

}  // namespace nilpat::cli
