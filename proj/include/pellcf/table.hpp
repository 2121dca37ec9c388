#pragma once

// Flat records and their text / CSV / JSON-lines renderings.
//
// Every integer is written in full decimal. JSON values are strings so that
// values beyond 64 bits survive any consumer.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pellcf/bigint.hpp"
#include "pellcf/cf_engine.hpp"
#include "pellcf/family.hpp"
#include "pellcf/pell.hpp"

namespace pellcf {

enum class OutputFormat { Text, Json, Csv };

std::optional<OutputFormat> parse_output_format(std::string_view name);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

// Right-aligned columns separated by " | ", header underlined with '-'.
std::string render_text(const Table& table);
// Header row then one line per record, '\n' line endings.
std::string render_csv(const Table& table);
// One JSON object per line.
std::string render_json_lines(const Table& table);
std::string render(const Table& table, OutputFormat format);

// Inverses used by round-trip checks; throw DomainError on malformed input.
Table parse_csv(std::string_view text);
Table parse_json_lines(std::string_view text);

std::string format_expansion(const CFExpansion& cf);

std::string case_name(FamilyCase c);

// Record columns: j, k, m, ell, case, e, d, x, y, sign, f_m, f_m_minus_1.
Table family_table(const std::vector<FamilyEntry>& entries);
Table solution_table(const PellSolution& s);
Table expansion_table(const CFExpansion& cf);

// Reproductions of the reference tables, computed from the closed formulas.
enum class TableName { IntroJ2, IntroJ3, Fn, Main };

std::optional<TableName> parse_table_name(std::string_view name);
std::string_view table_file_stem(TableName name);

// For Fn: symbolic polynomials in k unless k is given.
Table build_table(TableName name, const std::optional<BigInt>& k = std::nullopt);

}  // namespace pellcf
