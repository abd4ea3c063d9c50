#include "wroots/report.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace wroots {

TableRow table_row(const RunReport& report) {
  TableRow row;
  row.order = report.config.order;
  row.m = report.m;
  row.k = report.k_stop;
  if (const auto* rec = report.m ? report.record(*report.m) : nullptr) {
    row.e_f_m = rec->e_f();
    row.omega_m = rec->certificate.omega_value;
    row.eps_m = rec->epsilon;
  }
  if (const auto* rec = report.k_stop ? report.record(*report.k_stop) : nullptr) {
    row.eps_k = rec->epsilon;
  }
  if (const auto* rec = report.k_stop ? report.record(*report.k_stop + 1) : nullptr) {
    row.eps_k1 = rec->epsilon;
    if (report.precision_limited && row.eps_k1) {
      row.eps_k1_is_upper_bound = true;
      const long floor_exp = -static_cast<long>(std::ceil(0.6 * rec->digits));
      row.eps_k1 = pow(BigReal(10), floor_exp);
    }
  }
  return row;
}

namespace {

// Truncated decimals; a value that truncates to zero prints unsigned.
std::string truncated_fixed(const BigReal& v, int decimals) {
  std::string s = v.to_fixed(decimals, Rounding::TowardZero);
  if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

}  // namespace

std::string format_fixed6(const BigReal& v) { return truncated_fixed(v, 6); }

std::string format_epsilon(const BigReal& v) {
  if (v.is_zero()) return "0";
  return v.to_scientific(7, Rounding::TowardZero).str();
}

std::string table_header() {
  return "N\tm\tE_f(x^(m))\tOmega(E_f(x^(m)))\teps_m\tk\teps_k\teps_k+1";
}

std::string table_line(const TableRow& row) {
  auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  auto opt_fixed = [](const std::optional<BigReal>& v) { return v ? format_fixed6(*v) : std::string("-"); };
  auto opt_eps = [](const std::optional<BigReal>& v) { return v ? format_epsilon(*v) : std::string("-"); };
  std::ostringstream os;
  os << row.order << '\t' << opt_int(row.m) << '\t' << opt_fixed(row.e_f_m) << '\t'
     << opt_fixed(row.omega_m) << '\t' << opt_eps(row.eps_m) << '\t' << opt_int(row.k) << '\t'
     << opt_eps(row.eps_k) << '\t' << (row.eps_k1_is_upper_bound ? "<" : "") << opt_eps(row.eps_k1);
  return os.str();
}

std::string table_tsv(const std::vector<TableRow>& rows) {
  std::string out = table_header() + "\n";
  for (const auto& r : rows) out += table_line(r) + "\n";
  return out;
}

std::string iterates_tsv(const RunReport& report, int decimals) {
  std::ostringstream os;
  os << "k";
  for (int i = 1; i <= report.degree; ++i) os << "\tre_x" << i << "\tim_x" << i;
  os << '\n';
  for (const auto& rec : report.records) {
    os << rec.k;
    for (const auto& z : rec.iterate.components()) {
      os << '\t' << truncated_fixed(z.re(), decimals) << '\t' << truncated_fixed(z.im(), decimals);
    }
    os << '\n';
  }
  return os.str();
}

std::string trajectory_csv(const RunReport& report) {
  std::ostringstream os;
  os << "k,i,re,im\n";
  for (const auto& rec : report.records) {
    std::size_t i = 0;
    for (const auto& z : rec.iterate.components()) {
      os << rec.k << ',' << ++i << ',' << z.re().to_scientific(17).str() << ','
         << z.im().to_scientific(17).str() << '\n';
    }
  }
  return os.str();
}

std::string report_json(const RunReport& report, int indent) {
  using nlohmann::json;
  const RunConfig& c = report.config;
  json doc;
  doc["config"] = {{"order", c.order},
                   {"p", c.p.str()},
                   {"tolerance", c.tolerance.to_string()},
                   {"max_iterations", c.max_iterations},
                   {"digits", c.precision.digits},
                   {"max_digits", c.precision.max_digits},
                   {"escalation_factor", c.precision.escalation_factor}};
  doc["degree"] = report.degree;
  json records = json::array();
  for (const auto& rec : report.records) {
    const auto& cert = rec.certificate;
    records.push_back({{"k", rec.k},
                       {"digits", rec.digits},
                       {"e_f", cert.e_value.to_string()},
                       {"omega", cert.omega_value ? json(cert.omega_value->to_string()) : json(nullptr)},
                       {"fired", cert.fired()},
                       {"theorem", to_string(cert.theorem_fired)},
                       {"epsilon", rec.epsilon ? json(rec.epsilon->to_string()) : json(nullptr)}});
  }
  doc["records"] = records;
  doc["m"] = report.m ? json(*report.m) : json(nullptr);
  doc["k_stop"] = report.k_stop ? json(*report.k_stop) : json(nullptr);
  doc["outcome"] = to_string(report.outcome);
  json escalations = json::array();
  for (const auto& e : report.escalations) {
    escalations.push_back({{"k", e.k}, {"from_digits", e.from_digits}, {"to_digits", e.to_digits}, {"restart", e.restart}});
  }
  doc["escalations"] = escalations;
  doc["precision_limited"] = report.precision_limited;
  doc["empirical_order"] =
      report.empirical_order ? json(report.empirical_order->to_string()) : json(nullptr);
  if (!report.diagnostic.empty()) doc["diagnostic"] = report.diagnostic;
  return doc.dump(indent);
}

}  // namespace wroots
