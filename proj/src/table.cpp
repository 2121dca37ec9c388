#include "pellcf/table.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pellcf/errors.hpp"
#include "pellcf/kfib.hpp"

namespace pellcf {

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width does not match the column count");
  }
  rows.push_back(std::move(row));
}

std::string render_text(const Table& table) {
  std::vector<std::size_t> width(table.columns.size());
  for (std::size_t c = 0; c < width.size(); ++c) {
    width[c] = table.columns[c].size();
    for (const auto& row : table.rows) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c != 0) out << " | ";
      out << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    }
    out << '\n';
  };
  emit(table.columns);
  for (std::size_t c = 0; c < width.size(); ++c) {
    if (c != 0) out << "-+-";
    out << std::string(width[c], '-');
  }
  out << '\n';
  for (const auto& row : table.rows) emit(row);
  return out.str();
}

namespace {

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char ch : v) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw DomainError("unterminated quote in CSV line");
  out.push_back(std::move(cur));
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

}  // namespace

std::string render_csv(const Table& table) {
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c != 0) out << ',';
      out << csv_field(cells[c]);
    }
    out << '\n';
  };
  emit(table.columns);
  for (const auto& row : table.rows) emit(row);
  return out.str();
}

std::string render_json_lines(const Table& table) {
  std::string out;
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = row[c];
    out += obj.dump();
    out += '\n';
  }
  return out;
}

std::string render(const Table& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text:
      return render_text(table);
    case OutputFormat::Json:
      return render_json_lines(table);
    case OutputFormat::Csv:
      return render_csv(table);
  }
  return {};
}

Table parse_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw DomainError("CSV input has no header row");
  Table out;
  out.columns = split_csv_line(lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_csv_line(lines[i]);
    if (cells.size() != out.columns.size()) throw DomainError("CSV row width mismatch");
    out.rows.push_back(std::move(cells));
  }
  return out;
}

Table parse_json_lines(std::string_view text) {
  Table out;
  for (std::string_view line : lines_of(text)) {
    nlohmann::ordered_json obj;
    try {
      obj = nlohmann::ordered_json::parse(line);
    } catch (const nlohmann::json::exception& ex) {
      throw DomainError(std::string("malformed JSON record: ") + ex.what());
    }
    if (!obj.is_object()) throw DomainError("JSON record is not an object");
    if (out.columns.empty()) {
      for (const auto& item : obj.items()) out.columns.push_back(item.key());
    }
    std::vector<std::string> row;
    for (const auto& col : out.columns) {
      if (!obj.contains(col) || !obj[col].is_string()) {
        throw DomainError("JSON record lacks string field '" + col + "'");
      }
      row.push_back(obj[col].get<std::string>());
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string format_expansion(const CFExpansion& cf) {
  std::string out = "sqrt(" + to_decimal(cf.d) + ") = [" + to_decimal(cf.e) + "; (";
  for (std::size_t i = 0; i < cf.period.size(); ++i) {
    if (i != 0) out += ',';
    out += to_decimal(cf.period[i]);
  }
  out += ")] period=" + std::to_string(cf.period_length());
  return out;
}

std::string case_name(FamilyCase c) { return std::to_string(static_cast<int>(c)); }

Table family_table(const std::vector<FamilyEntry>& entries) {
  Table t{{"j", "k", "m", "ell", "case", "e", "d", "x", "y", "sign", "f_m", "f_m_minus_1"}, {}};
  for (const auto& en : entries) {
    t.add_row({std::to_string(en.params.j), to_decimal(en.params.k), std::to_string(en.params.m()),
               to_decimal(en.params.ell), case_name(en.family_case), to_decimal(en.e),
               to_decimal(en.d), to_decimal(en.x), to_decimal(en.y), std::to_string(to_int(en.sign)),
               to_decimal(en.f_m), to_decimal(en.f_m_minus_1)});
  }
  return t;
}

Table solution_table(const PellSolution& s) {
  Table t{{"d", "x", "y", "sign"}, {}};
  t.add_row({to_decimal(s.d), to_decimal(s.x), to_decimal(s.y), std::to_string(to_int(s.sign))});
  return t;
}

Table expansion_table(const CFExpansion& cf) {
  std::string period;
  for (std::size_t i = 0; i < cf.period.size(); ++i) {
    if (i != 0) period += ' ';
    period += to_decimal(cf.period[i]);
  }
  Table t{{"d", "e", "j", "period"}, {}};
  t.add_row({to_decimal(cf.d), to_decimal(cf.e), std::to_string(cf.period_length()), period});
  return t;
}

std::optional<TableName> parse_table_name(std::string_view name) {
  if (name == "intro-j2") return TableName::IntroJ2;
  if (name == "intro-j3") return TableName::IntroJ3;
  if (name == "fn") return TableName::Fn;
  if (name == "main") return TableName::Main;
  return std::nullopt;
}

std::string_view table_file_stem(TableName name) {
  switch (name) {
    case TableName::IntroJ2:
      return "intro_j2";
    case TableName::IntroJ3:
      return "intro_j3";
    case TableName::Fn:
      return "fn";
    case TableName::Main:
      return "main";
  }
  return "";
}

namespace {

struct EkRow {
  int e;
  int k;
};

struct MainRow {
  int m;
  int k;
  int ell;
};

// (e, k) for the period-2 and period-3 example tables, (m, k, ell) for the
// general one; every other column is computed.
constexpr std::array<EkRow, 9> kIntroJ2 = {
    {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {4, 4}}};
constexpr std::array<EkRow, 7> kIntroJ3 = {
    {{6, 2}, {11, 2}, {16, 2}, {19, 4}, {36, 4}, {40, 6}, {69, 8}}};
constexpr std::array<MainRow, 25> kMain = {{
    {3, 1, 0}, {3, 1, 1}, {3, 1, 2}, {3, 1, 3}, {3, 2, 4}, {3, 3, 0}, {3, 4, 1},
    {3, 5, 0}, {4, 1, 0}, {4, 1, 1}, {4, 2, 1}, {4, 3, 0}, {5, 2, 2}, {5, 2, 4},
    {5, 2, 6}, {5, 4, 2}, {6, 1, 0}, {6, 1, 1}, {6, 2, 1}, {7, 1, 0}, {7, 2, 2},
    {9, 1, 0}, {10, 1, 0}, {12, 1, 0}, {13, 1, 0},
}};

template <std::size_t N>
Table ek_table(std::int64_t j, const std::array<EkRow, N>& rows) {
  Table t{{"e", "k", "d", "x", "y"}, {}};
  for (const auto& r : rows) {
    const BigInt k = r.k;
    const std::optional<BigInt> ell = solve_ell(j, k, r.e);
    if (!ell) throw std::logic_error("table row outside the family");
    const FamilyEntry en = make_entry(j, k, *ell);
    t.add_row({to_decimal(en.e), to_decimal(k), to_decimal(en.d), to_decimal(en.x),
               to_decimal(en.y)});
  }
  return t;
}

std::string poly_string(const PolyCoeffs& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    const std::int64_t power = p.n - 2 * static_cast<std::int64_t>(i);
    if (i != 0) out += '+';
    if (power == 0) {
      out += to_decimal(p.coeffs[i]);
      continue;
    }
    if (p.coeffs[i] != 1) out += to_decimal(p.coeffs[i]);
    out += 'k';
    if (power > 1) out += '^' + std::to_string(power);
  }
  return out;
}

Table fn_table(const std::optional<BigInt>& k) {
  constexpr std::int64_t kLast = 11;
  Table t{{"n", "f_n"}, {}};
  if (k) {
    const KSequence f(*k, kLast);
    for (std::int64_t n = -2; n <= kLast; ++n) t.add_row({std::to_string(n), to_decimal(f[n])});
    return t;
  }
  t.add_row({"-2", "1"});
  t.add_row({"-1", "0"});
  for (std::int64_t n = 0; n <= kLast; ++n) {
    t.add_row({std::to_string(n), poly_string(f_poly_coeffs(n))});
  }
  return t;
}

}  // namespace

Table build_table(TableName name, const std::optional<BigInt>& k) {
  switch (name) {
    case TableName::IntroJ2:
      return ek_table(2, kIntroJ2);
    case TableName::IntroJ3:
      return ek_table(3, kIntroJ3);
    case TableName::Fn:
      return fn_table(k);
    case TableName::Main: {
      Table t{{"m", "k", "f_m_minus_1", "f_m", "ell", "e", "d", "x"}, {}};
      for (const auto& r : kMain) {
        const FamilyEntry en = make_entry(r.m + 1, r.k, r.ell);
        t.add_row({std::to_string(r.m), std::to_string(r.k), to_decimal(en.f_m_minus_1),
                   to_decimal(en.f_m), std::to_string(r.ell), to_decimal(en.e), to_decimal(en.d),
                   to_decimal(en.x)});
      }
      return t;
    }
  }
  return {};
}

}  // namespace pellcf
