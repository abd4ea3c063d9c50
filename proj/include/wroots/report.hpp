#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wroots/driver.hpp"

namespace wroots {

/// One row of an (N, m, E_f, Omega, eps_m, k, eps_k, eps_k+1) table.
struct TableRow {
  int order = 0;
  std::optional<int> m;
  std::optional<BigReal> e_f_m;
  std::optional<BigReal> omega_m;
  std::optional<BigReal> eps_m;
  std::optional<int> k;
  std::optional<BigReal> eps_k;
  std::optional<BigReal> eps_k1;
  /// eps_k1 could not be resolved at max_digits; eps_k1 then holds the resolution floor.
  bool eps_k1_is_upper_bound = false;
};

TableRow table_row(const RunReport& report);

/// Truncated (not rounded) to 6 decimals, e.g. "0.029714".
std::string format_fixed6(const BigReal& v);
/// 7 significant digits, truncated, with decimal exponent, e.g. "3.311488e-2".
std::string format_epsilon(const BigReal& v);

std::string table_header();
std::string table_line(const TableRow& row);
std::string table_tsv(const std::vector<TableRow>& rows);

/// Columns k, then re/im of every component truncated to `decimals` decimals.
std::string iterates_tsv(const RunReport& report, int decimals = 15);

/// Long format k,i,re,im.
std::string trajectory_csv(const RunReport& report);

std::string report_json(const RunReport& report, int indent = 2);

}  // namespace wroots
