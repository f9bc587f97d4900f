// qbias: exact expansion and verification of the partition-bias q-series.
//
// Subcommands:
//   expand      print coefficients 0..N of a named series, one per line
//   verify      run a named sweep and report per-row verdicts
//   bias-table  tabulate p_{a,b,m}(n) against p_{b,a,m}(n)
//
// Results go to stdout, diagnostics to stderr. Exit codes: 0 = success or
// overall PASS, 1 = at least one FAIL row, 2 = usage error.

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qbias/bias_series.hpp"
#include "qbias/partitions.hpp"
#include "qbias/report.hpp"
#include "qbias/sweeps.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long parse_long(const std::string& text) {
  std::size_t consumed = 0;
  long value = 0;
  try {
    value = std::stol(text, &consumed);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (consumed != text.size()) throw UsageError("not an integer: '" + text + "'");
  return value;
}

// "lo..hi" or a single value.
qbias::Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(text);
    return {v, v};
  }
  const long lo = parse_long(text.substr(0, dots));
  const long hi = parse_long(text.substr(dots + 2));
  if (hi < lo) throw UsageError("empty range: '" + text + "'");
  return {lo, hi};
}

struct Caps {
  long max_order = 2000;
  long max_grid = 20;

  void check_order(long order) const {
    if (order < 0) throw UsageError("order must be >= 0");
    if (order > max_order) {
      throw UsageError("order " + std::to_string(order) + " exceeds cap " +
                       std::to_string(max_order) + " (raise with --max-order)");
    }
  }
  void check_grid(const qbias::Range& range, const char* name) const {
    if (range.size() > max_grid) {
      throw UsageError(std::string(name) + " range spans " + std::to_string(range.size()) +
                       " values, cap is " + std::to_string(max_grid) +
                       " (raise with --max-grid)");
    }
  }
};

struct ExpandOptions {
  std::string kind;
  std::optional<long> s;
  long m = 0;
  long order = 0;
  bool json = false;
  Caps caps;
};

int run_expand(const ExpandOptions& opt) {
  opt.caps.check_order(opt.order);
  qbias::SeriesId id;
  if (opt.kind == "inner") {
    id.kind = qbias::SeriesId::Kind::Inner;
    if (!opt.s) throw UsageError("expand inner requires --s");
    id.s = *opt.s;
  } else if (opt.kind == "double" || opt.kind == "full") {
    id.kind = opt.kind == "double" ? qbias::SeriesId::Kind::Double
                                   : qbias::SeriesId::Kind::Full;
    if (opt.s) throw UsageError("expand " + opt.kind + " takes no --s");
  } else {
    throw UsageError("unknown series kind '" + opt.kind + "' (inner|double|full)");
  }
  id.m = opt.m;
  id.order = static_cast<std::size_t>(opt.order);
  const qbias::Series series = qbias::build_series(id);
  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["kind"] = opt.kind;
    if (opt.s) doc["s"] = *opt.s;
    doc["m"] = opt.m;
    doc["N"] = opt.order;
    nlohmann::ordered_json coefficients = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t <= series.order(); ++t) coefficients.push_back(series[t].str());
    doc["coefficients"] = std::move(coefficients);
    std::cout << doc.dump(1) << '\n';
  } else {
    for (std::size_t t = 0; t <= series.order(); ++t) {
      std::cout << t << '\t' << series[t] << '\n';
    }
  }
  return 0;
}

struct VerifyOptions {
  std::string target;
  std::optional<std::string> s_text;
  std::optional<std::string> m_text;
  std::optional<long> order;
  bool json = false;
  Caps caps;
};

qbias::VerificationReport run_sweep(const VerifyOptions& opt) {
  const auto range_or = [&](const std::optional<std::string>& text, qbias::Range fallback,
                            const char* name) {
    const qbias::Range range = text ? parse_range(*text) : fallback;
    opt.caps.check_grid(range, name);
    return range;
  };
  const auto order_or = [&](long fallback) {
    const long order = opt.order.value_or(fallback);
    opt.caps.check_order(order);
    return order;
  };
  const auto reject = [&](const std::optional<std::string>& text, const char* flag) {
    if (text) {
      throw UsageError("verify " + opt.target + " does not accept " + flag);
    }
  };

  if (opt.target == "conj5") {
    const qbias::Range s = range_or(opt.s_text, {1, 12}, "--s");
    const qbias::Range m = range_or(opt.m_text, {1, 12}, "--m");
    return qbias::verify_inner_nonnegativity(s, m, static_cast<std::size_t>(order_or(200)));
  }
  if (opt.target == "conj4") {
    reject(opt.s_text, "--s");
    const qbias::Range m = range_or(opt.m_text, {2, 10}, "--m");
    return qbias::verify_double_nonnegativity(m, static_cast<std::size_t>(order_or(150)));
  }
  if (opt.target == "rearrange") {
    reject(opt.s_text, "--s");
    const qbias::Range m = range_or(opt.m_text, {2, 8}, "--m");
    return qbias::verify_rearrangement(m, static_cast<std::size_t>(order_or(100)));
  }
  if (opt.target == "proof") {
    const qbias::Range s = range_or(opt.s_text, {1, 8}, "--s");
    const qbias::Range m = range_or(opt.m_text, {1, 8}, "--m");
    return qbias::verify_decomposition(s, m, order_or(120));
  }
  if (opt.target == "thm1") {
    reject(opt.s_text, "--s");
    reject(opt.m_text, "--m");
    return qbias::verify_parity_bias(order_or(200));
  }
  if (opt.target == "thm3") {
    reject(opt.s_text, "--s");
    const qbias::Range m = range_or(opt.m_text, {2, 6}, "--m");
    return qbias::verify_general_bias(m, order_or(100));
  }
  throw UsageError("unknown verify target '" + opt.target +
                   "' (conj5|conj4|rearrange|proof|thm1|thm3)");
}

int run_verify(const VerifyOptions& opt) {
  const qbias::VerificationReport report = run_sweep(opt);
  if (opt.json) {
    std::cout << report.to_json_string() << '\n';
  } else {
    report.write_text(std::cout);
  }
  std::cerr << "# elapsed_ms=" << report.elapsed_ms << '\n';
  return report.overall ? 0 : 1;
}

struct BiasTableOptions {
  long m = 0;
  long a = 0;
  long b = 0;
  long max_n = 0;
  bool json = false;
  Caps caps;
};

int run_bias_table(const BiasTableOptions& opt) {
  opt.caps.check_order(opt.max_n);
  const qbias::BiasTable table(opt.a, opt.b, opt.m, opt.max_n);
  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["a"] = opt.a;
    doc["b"] = opt.b;
    doc["m"] = opt.m;
    doc["maxN"] = opt.max_n;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (long n = 0; n <= opt.max_n; ++n) {
      nlohmann::ordered_json row;
      row["n"] = n;
      row["more_a"] = table.more_a(n).str();
      row["more_b"] = table.more_b(n).str();
      row["difference"] = qbias::Int(table.more_a(n) - table.more_b(n)).str();
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    std::cout << doc.dump(1) << '\n';
  } else {
    for (long n = 0; n <= opt.max_n; ++n) {
      std::cout << n << '\t' << table.more_a(n) << '\t' << table.more_b(n) << '\t'
                << qbias::Int(table.more_a(n) - table.more_b(n)) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series expansion and partition-bias verification"};
  app.require_subcommand(1);

  ExpandOptions expand_opt;
  CLI::App* expand = app.add_subcommand("expand", "Print coefficients 0..N of a series");
  expand->add_option("kind", expand_opt.kind, "Series kind: inner|double|full")->required();
  CLI::Option* expand_s = expand->add_option("--s", "First exponent s (inner only)");
  expand->add_option("--m", expand_opt.m, "Modulus / exponent step m")->required();
  expand->add_option("-N,--order", expand_opt.order, "Truncation order")->required();
  expand->add_flag("--json", expand_opt.json, "Emit JSON instead of TSV");
  expand->add_option("--max-order", expand_opt.caps.max_order, "Raise the order cap");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify
      ->add_option("--target", verify_opt.target,
                   "Sweep: conj5|conj4|rearrange|proof|thm1|thm3")
      ->required();
  CLI::Option* verify_s = verify->add_option("--s", "s range: LO..HI or a single value");
  CLI::Option* verify_m = verify->add_option("--m", "m range: LO..HI or a single value");
  CLI::Option* verify_n = verify->add_option("-N,--order", "Truncation order / max n");
  verify->add_flag("--json", verify_opt.json, "Emit JSON instead of TSV");
  verify->add_option("--max-order", verify_opt.caps.max_order, "Raise the order cap");
  verify->add_option("--max-grid", verify_opt.caps.max_grid, "Raise the grid-size cap");

  BiasTableOptions bias_opt;
  CLI::App* bias = app.add_subcommand("bias-table", "Tabulate p_{a,b,m} vs p_{b,a,m}");
  bias->add_option("--m", bias_opt.m, "Modulus m >= 2")->required();
  bias->add_option("--a", bias_opt.a, "Residue a in 1..m")->required();
  bias->add_option("--b", bias_opt.b, "Residue b in 1..m")->required();
  bias->add_option("-N,--order", bias_opt.max_n, "Largest n to print")->required();
  bias->add_flag("--json", bias_opt.json, "Emit JSON instead of TSV");
  bias->add_option("--max-order", bias_opt.caps.max_order, "Raise the order cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand(expand)) {
      if (expand_s->count() > 0) expand_opt.s = parse_long(expand_s->as<std::string>());
      return run_expand(expand_opt);
    }
    if (app.got_subcommand(verify)) {
      if (verify_s->count() > 0) verify_opt.s_text = verify_s->as<std::string>();
      if (verify_m->count() > 0) verify_opt.m_text = verify_m->as<std::string>();
      if (verify_n->count() > 0) verify_opt.order = parse_long(verify_n->as<std::string>());
      return run_verify(verify_opt);
    }
    if (app.got_subcommand(bias)) {
      return run_bias_table(bias_opt);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
