// pellcf: continued fractions of sqrt(d), Pell equations and the uniform
// [e; k, ..., k, 2e] families from the command line.
//
// Exit codes: 0 success, 1 domain error or bad arguments, 2 verification failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pellcf/cf_engine.hpp"
#include "pellcf/errors.hpp"
#include "pellcf/family.hpp"
#include "pellcf/pell.hpp"
#include "pellcf/table.hpp"
#include "pellcf/verify.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;

pellcf::OutputFormat to_format(const std::string& name) {
  auto f = pellcf::parse_output_format(name);
  if (!f) throw pellcf::DomainError("unknown format '" + name + "' (text, json, csv)");
  return *f;
}

pellcf::Table select_columns(const pellcf::Table& t, const std::vector<std::string>& keep) {
  pellcf::Table out{keep, {}};
  std::vector<std::size_t> idx;
  for (const auto& k : keep) {
    idx.push_back(static_cast<std::size_t>(
        std::find(t.columns.begin(), t.columns.end(), k) - t.columns.begin()));
  }
  for (const auto& row : t.rows) {
    std::vector<std::string> r;
    for (auto i : idx) r.push_back(row.at(i));
    out.add_row(std::move(r));
  }
  return out;
}

int cmd_expand(const std::string& d_text, const std::string& format) {
  const auto cf = pellcf::expand_sqrt(pellcf::parse_bigint(d_text));
  const auto fmt = to_format(format);
  if (fmt == pellcf::OutputFormat::Text) {
    std::cout << pellcf::format_expansion(cf) << '\n';
  } else {
    std::cout << pellcf::render(pellcf::expansion_table(cf), fmt);
  }
  return 0;
}

int cmd_solve(const std::string& d_text, bool plus, bool minus, const std::string& format) {
  const pellcf::BigInt d = pellcf::parse_bigint(d_text);
  const auto fmt = to_format(format);
  std::optional<pellcf::PellSolution> s;
  if (plus) {
    s = pellcf::solve_pell_plus(d);
  } else if (minus) {
    s = pellcf::solve_pell_minus(d);
    if (!s) {
      const auto j = pellcf::expand_sqrt(d).period_length();
      std::cout << "unsolvable (period " << j << " is even)\n";
      return 0;
    }
  } else {
    s = pellcf::solve_fundamental(d);
  }
  if (fmt == pellcf::OutputFormat::Text) {
    std::cout << "x=" << s->x.get_str() << " y=" << s->y.get_str()
              << " sign=" << pellcf::to_int(s->sign) << '\n';
  } else {
    std::cout << pellcf::render(pellcf::solution_table(*s), fmt);
  }
  return 0;
}

int cmd_family(std::int64_t j, const std::string& k_text, const std::string& ell_max_text,
               const std::string& format, bool all_columns) {
  const auto fmt = to_format(format);
  const auto listing =
      pellcf::enumerate_family(j, pellcf::parse_bigint(k_text), pellcf::parse_bigint(ell_max_text));
  if (listing.reason) {
    auto& sink = fmt == pellcf::OutputFormat::Text ? std::cout : std::cerr;
    sink << "no solutions: " << pellcf::describe(*listing.reason) << '\n';
    return 0;
  }
  pellcf::Table t = pellcf::family_table(listing.entries);
  if (!all_columns && fmt == pellcf::OutputFormat::Text) {
    t = select_columns(t, {"ell", "case", "e", "d", "x", "y"});
  } else if (!all_columns && fmt == pellcf::OutputFormat::Csv) {
    t = select_columns(t, {"e", "d", "x", "y"});
  }
  std::cout << pellcf::render(t, fmt);
  return 0;
}

int cmd_member(const std::string& d_text) {
  const pellcf::BigInt d = pellcf::parse_bigint(d_text);
  const auto m = pellcf::membership(d);
  if (!m) {
    std::cout << "d=" << d.get_str() << ": no uniform pattern ("
              << pellcf::format_expansion(pellcf::expand_sqrt(d)) << ")\n";
    return 0;
  }
  std::cout << "d=" << d.get_str() << " j=" << m->j << " k=" << m->k.get_str()
            << " ell=" << m->ell.get_str() << " e=" << m->e.get_str()
            << " case=" << pellcf::case_name(m->family_case) << '\n';
  return 0;
}

int cmd_table(const std::string& name, const std::string& k_text, const std::string& format) {
  const auto which = pellcf::parse_table_name(name);
  if (!which) {
    throw pellcf::DomainError("unknown table '" + name + "' (intro-j2, intro-j3, fn, main)");
  }
  std::optional<pellcf::BigInt> k;
  if (!k_text.empty()) k = pellcf::parse_bigint(k_text);
  std::cout << pellcf::render(pellcf::build_table(*which, k), to_format(format));
  return 0;
}

int cmd_verify(const pellcf::VerifyOptions& options) {
  const auto report = pellcf::run_verify(options);
  std::cout << report.summary();
  return report.passed() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued fractions of sqrt(d), Pell equations and uniform-period families"};
  app.require_subcommand(1);

  std::string d_text, k_text, format = "text";
  std::string ell_max_text = "5";
  std::int64_t j = 0;

  auto* expand = app.add_subcommand("expand", "Periodic continued fraction of sqrt(d)");
  expand->add_option("d", d_text, "Non-square integer d >= 2")->required();
  expand->add_option("--format", format, "text, json or csv");

  bool plus = false, minus = false, fundamental = false;
  auto* solve = app.add_subcommand("solve", "Smallest solution of x^2 - d y^2 = +-1");
  solve->add_option("d", d_text, "Non-square integer d >= 2")->required();
  auto* plus_flag = solve->add_flag("--plus", plus, "x^2 - d y^2 = 1");
  auto* minus_flag = solve->add_flag("--minus", minus, "x^2 - d y^2 = -1");
  auto* fund_flag =
      solve->add_flag("--fundamental", fundamental, "sign (-1)^period (default)");
  plus_flag->excludes(minus_flag)->excludes(fund_flag);
  minus_flag->excludes(fund_flag);
  solve->add_option("--format", format, "text, json or csv");

  bool all_columns = false;
  auto* family = app.add_subcommand("family", "d with sqrt(d) = [e; k, ..., k, 2e], period j");
  family->add_option("j", j, "Period j >= 2")->required();
  family->add_option("k", k_text, "Repeated quotient k >= 1")->required();
  family->add_option("--ell-max", ell_max_text, "Largest ell to list")->capture_default_str();
  family->add_option("--format", format, "text, json or csv");
  family->add_flag("--all-columns", all_columns, "Every record field in text and csv output");

  auto* member = app.add_subcommand("member", "Which uniform family d belongs to, if any");
  member->add_option("d", d_text, "Non-square integer d >= 2")->required();

  std::string table_name;
  auto* table = app.add_subcommand("table", "Reference tables: intro-j2, intro-j3, fn, main");
  table->add_option("name", table_name, "Table name")->required();
  table->add_option("--k", k_text, "Evaluate the fn table at this k");
  table->add_option("--format", format, "text, json or csv");

  pellcf::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Cross-check formulas against brute force");
  verify->add_option("--dmax", vopt.d_max, "Largest d swept")->capture_default_str();
  verify->add_option("--jmax", vopt.j_max, "Largest period j")->capture_default_str();
  verify->add_option("--kmax", vopt.k_max, "Largest quotient k")->capture_default_str();
  verify->add_option("--threads", vopt.threads, "Worker threads")->capture_default_str();
  verify->add_option("--ymax", vopt.pell_y_max, "Brute-force Pell cutoff on y")
      ->capture_default_str();
  verify->add_flag("--inject-fault", vopt.inject_sign_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (*expand) return cmd_expand(d_text, format);
    if (*solve) return cmd_solve(d_text, plus, minus, format);
    if (*family) return cmd_family(j, k_text, ell_max_text, format, all_columns);
    if (*member) return cmd_member(d_text);
    if (*table) return cmd_table(table_name, k_text, format);
    if (*verify) return cmd_verify(vopt);
  } catch (const pellcf::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitDomain;
}
