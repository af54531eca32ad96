#include "qzeta/cli.hpp"

#include "qzeta/bench.hpp"
#include "qzeta/identity.hpp"
#include "qzeta/numerics.hpp"
#include "qzeta/qpoly.hpp"
#include "qzeta/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace qzeta {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string join(const std::vector<BigInt>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].get_str();
  }
  return out;
}

json string_array(const std::vector<BigInt>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

// (1 + z^2) S(z^2) when P^o splits that way.
std::optional<IntPolynomial> odd_cofactor(const IntPolynomial& p) {
  const IntPolynomial one_plus_z2({BigInt(1), BigInt(0), BigInt(1)});
  if (auto q = divide_exact(p, one_plus_z2)) return even_part_in_square(*q);
  return std::nullopt;
}

std::string poly_label(char family, int degree) {
  return std::string("P^") + family + "_" + std::to_string(degree);
}

void write_csv_coeffs(std::ostream& out, const std::string& family, std::span<const BigInt> c) {
  for (std::size_t i = 0; i < c.size(); ++i) out << family << ',' << i << ',' << c[i].get_str() << '\n';
}

void require_k(unsigned k) {
  if (k < 1) throw UsageError("k must be at least 1");
}

}  // namespace

int cmd_poly(unsigned k, Format format, std::ostream& out) {
  require_k(k);
  const auto a = a_table(k);
  const auto b = b_table(k);
  const IntPolynomial pe = p_even(k);
  std::optional<IntPolynomial> po, cofactor;
  if (k % 2 == 1) {
    po = p_odd(k);
    cofactor = odd_cofactor(*po);
  }

  switch (format) {
    case Format::Json: {
      json doc{{"k", k}, {"a", string_array(a)}, {"b", string_array(b)}, {"p_even", to_json(pe)}};
      doc["p_odd"] = po ? to_json(*po) : json(nullptr);
      doc["p_odd_cofactor"] = cofactor ? to_json(*cofactor) : json(nullptr);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      out << "family,index,coefficient\n";
      for (std::size_t m = 0; m < a.size(); ++m) out << "a," << m << ',' << a[m].get_str() << '\n';
      for (std::size_t l = 0; l < b.size(); ++l) out << "b," << l + 1 << ',' << b[l].get_str() << '\n';
      write_csv_coeffs(out, "p_even", pe.coeffs());
      if (po) write_csv_coeffs(out, "p_odd", po->coeffs());
      if (cofactor) write_csv_coeffs(out, "p_odd_cofactor", cofactor->coeffs());
      break;
    }
    case Format::Text: {
      out << "k = " << k << " (" << (k % 2 == 0 ? "even" : "odd") << ")\n";
      out << "a_" << k << "(m), m = 0.." << a.size() - 1 << ": " << join(a) << '\n';
      out << "b_" << k << "(l), l = 1.." << b.size() << ": " << join(b) << '\n';
      out << poly_label('e', pe.degree()) << "(z) = " << pe.to_string() << '\n';
      if (po) {
        out << poly_label('o', po->degree()) << "(z) = " << po->to_string() << '\n';
        if (cofactor) {
          out << poly_label('o', po->degree()) << "(z) = (1 + z^2) S(z^2), S(z) = "
              << cofactor->to_string() << '\n';
        }
      }
      break;
    }
  }
  return kExitPass;
}

int cmd_verify(const std::vector<unsigned>& ks, std::size_t order, Format format, std::ostream& out) {
  if (ks.empty()) throw UsageError("verify needs at least one k");
  for (unsigned k : ks) {
    require_k(k);
    if (order < 4 * static_cast<std::size_t>(k)) {
      throw UsageError("order must be at least 4k (k = " + std::to_string(k) + ")");
    }
  }
  std::vector<std::future<VerificationReport>> pending;
  for (unsigned k : ks) pending.push_back(std::async(std::launch::async, verify_theorem, k, order));
  std::vector<VerificationReport> reports;
  for (auto& f : pending) reports.push_back(f.get());

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;

  switch (format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      out << "k,exponent,t_coefficient\n";
      for (const auto& r : reports) {
        for (std::size_t i = 0; i <= r.t_series.order(); ++i) {
          out << r.k << ',' << i << ',' << r.t_series[i].get_str() << '\n';
        }
      }
      break;
    }
    case Format::Text: {
      out << std::left << std::setw(4) << "k" << std::setw(7) << "order" << std::setw(8)
          << "status" << std::setw(8) << "T==0" << std::setw(9) << "T parity" << std::setw(8)
          << "T lead" << std::setw(18) << "lhs digest"
          << "rhs digest\n";
      for (const auto& r : reports) {
        const std::string lead =
            r.first_nonzero_exponent ? "q^" + std::to_string(*r.first_nonzero_exponent) : "-";
        out << std::left << std::setw(4) << r.k << std::setw(7) << r.order << std::setw(8)
            << (r.pass ? "pass" : "FAIL") << std::setw(8) << (r.t_is_zero ? "yes" : "no")
            << std::setw(9) << to_string(r.t_parity) << std::setw(8) << lead << std::setw(18)
            << r.lhs_series_digest << r.rhs_series_digest << '\n';
      }
      for (const auto& r : reports) {
        for (const auto& c : r.checks) {
          out << "  k=" << r.k << ' ' << std::setw(26) << c.name << (c.pass ? "ok" : "FAIL");
          if (!c.pass) {
            out << " at ";
            if (c.failure_exponent) out << "q^" << *c.failure_exponent;
            out << " expected " << c.expected << " got " << c.actual;
          }
          out << '\n';
        }
      }
      break;
    }
  }
  return all_pass ? kExitPass : kExitFail;
}

int cmd_count(unsigned fourk, unsigned n_max, Format format, std::ostream& out) {
  if (fourk == 0 || fourk % 4 != 0 || fourk > 20) {
    throw UsageError("fourk must be one of 4, 8, 12, 16, 20");
  }
  if (n_max > 2000) throw UsageError("n-max must be at most 2000");
  const unsigned k = fourk / 4;
  const std::size_t order = 2 * static_cast<std::size_t>(n_max) + k;
  const CountCheck check = t_count_closed_form_check(k, n_max, order, std::min(n_max, 30U));

  switch (format) {
    case Format::Json:
      out << to_json(check).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "n,series,closed_form,brute_force,agree\n";
      for (const auto& row : check.rows) {
        out << row.n << ',' << row.series_value.get_str() << ',' << row.closed_form.get_str() << ','
            << (row.brute ? row.brute->get_str() : "") << ',' << (row.agree ? "yes" : "no") << '\n';
      }
      break;
    case Format::Text:
      out << "t_" << fourk << "(n), n = 0.." << n_max << '\n';
      out << std::left << std::setw(6) << "n" << std::setw(24) << "series" << std::setw(24)
          << "closed form" << std::setw(24) << "brute force"
          << "agree\n";
      for (const auto& row : check.rows) {
        out << std::left << std::setw(6) << row.n << std::setw(24) << row.series_value.get_str()
            << std::setw(24) << row.closed_form.get_str() << std::setw(24)
            << (row.brute ? row.brute->get_str() : "-") << (row.agree ? "yes" : "NO") << '\n';
      }
      break;
  }
  return check.pass ? kExitPass : kExitFail;
}

int cmd_limit(unsigned k, const std::vector<double>& q_points, Format format, std::ostream& out,
              const std::string& kind) {
  require_k(k);
  const std::vector<double> points = q_points.empty() ? default_q_points() : q_points;
  for (double q : points) {
    if (!(q > 0.0 && q < 1.0)) throw UsageError("q points must lie strictly between 0 and 1");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i] > points[i - 1])) throw UsageError("q points must be strictly increasing");
  }
  LimitReport report;
  if (kind == "zeta") {
    report = zeta_recovery_check(k, points);
  } else if (kind == "qgamma") {
    report = qgamma_limit_check(k, points);
  } else {
    throw UsageError("limit kind must be 'zeta' or 'qgamma'");
  }

  switch (format) {
    case Format::Json:
      out << to_json(report).dump(2) << '\n';
      break;
    case Format::Csv:
      out << to_csv(report);
      break;
    case Format::Text: {
      out << "k = " << k << ", " << kind << " limit, target " << std::setprecision(17)
          << report.target << '\n';
      out << std::left << std::setw(24) << "q" << std::setw(24) << "lhs" << std::setw(24) << "rhs"
          << "rel_err\n";
      for (std::size_t i = 0; i < points.size(); ++i) {
        out << std::left << std::setprecision(12) << std::setw(24) << points[i] << std::setw(24)
            << report.lhs_values[i] << std::setw(24) << report.rhs_values[i]
            << report.relative_errors[i] << '\n';
      }
      out << (report.converging ? "converging" : "NOT converging") << '\n';
      break;
    }
  }
  return report.converging ? kExitPass : kExitFail;
}

int cmd_bench(std::size_t order, Format format, std::ostream& out) {
  if (order < 64) throw UsageError("bench order must be at least 64");
  std::vector<BenchRow> rows;
  try {
    rows = run_bench(order);
  } catch (const BenchMismatchError& e) {
    out << "error: " << e.what() << '\n';
    return kExitFail;
  }
  switch (format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back(json{{"strategy", r.strategy},
                           {"k", r.k},
                           {"order", r.order},
                           {"seconds", r.seconds},
                           {"digest", r.digest}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "strategy,k,order,seconds,digest\n";
      for (const auto& r : rows) {
        out << r.strategy << ',' << r.k << ',' << r.order << ',' << r.seconds << ',' << r.digest
            << '\n';
      }
      break;
    case Format::Text:
      out << std::left << std::setw(12) << "strategy" << std::setw(4) << "k" << std::setw(8)
          << "order" << std::setw(14) << "seconds"
          << "digest\n";
      for (const auto& r : rows) {
        out << std::left << std::setw(12) << r.strategy << std::setw(4) << r.k << std::setw(8)
            << r.order << std::setw(14) << r.seconds << r.digest << '\n';
      }
      break;
  }
  return kExitPass;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out_path.empty()) {
    file.open(config.out_path);
    if (!file) {
      err << "error: cannot open " << config.out_path << '\n';
      return kExitUsage;
    }
    sink = &file;
  }
  try {
    const unsigned k = config.ks.empty() ? 0 : config.ks.front();
    if (config.subcommand == "poly") return cmd_poly(k, config.format, *sink);
    if (config.subcommand == "verify") return cmd_verify(config.ks, config.order, config.format, *sink);
    if (config.subcommand == "count") {
      return cmd_count(config.fourk ? config.fourk : 4 * k, config.n_max, config.format, *sink);
    }
    if (config.subcommand == "limit") {
      return cmd_limit(k, config.q_points, config.format, *sink, config.limit_kind);
    }
    if (config.subcommand == "bench") return cmd_bench(config.order, config.format, *sink);
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series verification of q-analogues of zeta(2k)", "qzeta"};
  app.require_subcommand(1);

  CliConfig config;
  std::string format = "text";
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", config.out_path, "Write output to PATH instead of stdout");
  };

  auto* poly = app.add_subcommand("poly", "a/b tables and the P^e / P^o polynomials for k");
  poly->add_option("--k", config.ks, "k >= 1")->required()->expected(1);
  add_common(poly);

  auto* verify = app.add_subcommand("verify", "Verify the identity for one or more k");
  verify->add_option("--k", config.ks, "k >= 1, or a comma-separated list")
      ->required()
      ->delimiter(',');
  verify->add_option("--order", config.order, "Truncation order N (default 200)");
  add_common(verify);

  auto* count = app.add_subcommand("count", "t_{4k}(n) table with closed-form and brute-force columns");
  auto* fourk_opt = count->add_option("--fourk", config.fourk, "Number of triangular summands (4k)");
  count->add_option("--k", config.ks, "Use 4k summands")->expected(1)->excludes(fourk_opt);
  count->add_option("--n-max", config.n_max, "Largest n (default 20)");
  add_common(count);

  auto* limit = app.add_subcommand("limit", "Numeric q -> 1 limit report");
  limit->add_option("--k", config.ks, "k >= 1")->required()->expected(1);
  limit->add_option("--q-points", config.q_points, "Comma-separated q values in (0,1)")
      ->delimiter(',');
  limit->add_option("--kind", config.limit_kind, "zeta (default) or qgamma")
      ->check(CLI::IsMember({"zeta", "qgamma"}));
  add_common(limit);

  auto* bench = app.add_subcommand("bench", "Time series multiplication strategies");
  bench->add_option("--order", config.order, "Truncation order (>= 64, default 200)");
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitPass : kExitUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = formats.at(format);
  if (config.subcommand == "count" && config.fourk == 0 && count->count("--k") == 0) {
    err << "usage error: count needs --fourk or --k\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace qzeta
