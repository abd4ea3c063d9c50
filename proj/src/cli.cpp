#include "wroots/cli.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

namespace wroots::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  out << text;
}

fs::path prepare_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw UsageError("cannot create directory '" + dir + "': " + ec.message());
  return p;
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("invalid integer '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Decimal literal as integer scaled by 10^decimals.
struct ScaledDecimal {
  long long units = 0;
  int decimals = 0;
};

ScaledDecimal parse_scaled(std::string_view s) {
  ScaledDecimal d;
  bool negative = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      d.units = d.units * 10 + (c - '0');
      if (seen_dot) ++d.decimals;
      seen_digit = true;
    } else {
      throw UsageError("invalid decimal '" + std::string(s) + "'");
    }
  }
  if (!seen_digit || d.decimals > 12) throw UsageError("invalid decimal '" + std::string(s) + "'");
  if (negative) d.units = -d.units;
  return d;
}

long long rescale(const ScaledDecimal& d, int decimals) {
  long long v = d.units;
  for (int i = d.decimals; i < decimals; ++i) v *= 10;
  return v;
}

std::string format_scaled(long long units, int decimals) {
  const bool negative = units < 0;
  std::string digits = std::to_string(negative ? -units : units);
  if (decimals > 0) {
    if (static_cast<int>(digits.size()) <= decimals) {
      digits.insert(0, static_cast<std::size_t>(decimals + 1) - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  }
  return (negative ? "-" : "") + digits;
}

Polynomial load_polynomial(const std::string& path, int digits) {
  return parse_polynomial(read_file(path), digits);
}

std::string config_digits_note(const RunReport& r) {
  return r.precision_limited ? " (precision-limited at max_digits)" : "";
}

int outcome_exit(const RunReport& r) { return r.outcome == Outcome::Certified ? kOk : kNumeric; }

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---- subcommands --------------------------------------------------------

struct SolveFlags {
  std::string poly, init, aberth, random, p = "inf", tol = "1e-15", out = ".";
  int order = 1, max_iters = 1000, digits = 0, max_digits = 2000;
  bool trajectory = false;
};

int cmd_solve(const SolveFlags& fl, std::ostream& out) {
  const int chosen = !fl.init.empty() + !fl.aberth.empty() + !fl.random.empty();
  if (chosen != 1) throw UsageError("solve: exactly one of --init, --aberth, --random is required");

  RunConfig cfg;
  cfg.order = fl.order;
  cfg.max_iterations = fl.max_iters;
  cfg.precision.digits = fl.digits;
  cfg.precision.max_digits = std::max(fl.max_digits, fl.digits);
  cfg.capture_trajectory = fl.trajectory;
  try {
    cfg.p = Exponent::parse(fl.p);
    cfg.tolerance = BigReal::parse(fl.tol);
    cfg.validate();
  } catch (const std::exception& e) {
    throw UsageError(std::string("solve: ") + e.what());
  }

  StartGenerator x0;
  int n = 0;
  const Polynomial f = [&] {
    try {
      return load_polynomial(fl.poly, fl.digits);
    } catch (const ParseError& e) {
      throw UsageError(std::string("solve: ") + e.what());
    }
  }();
  n = f.degree();
  if (!fl.init.empty()) {
    const std::string text = read_file(fl.init);
    try {
      ApproximationVector probe(parse_vector(text, fl.digits));
    } catch (const ParseError& e) {
      throw UsageError(std::string("solve: ") + e.what());
    }
    x0 = [text](int d) { return ApproximationVector(parse_vector(text, d)); };
  } else if (!fl.aberth.empty()) {
    const std::string r0 = fl.aberth;
    if (BigReal::parse(r0).sign() <= 0) throw UsageError("solve: --aberth must be > 0");
    x0 = [r0, n](int d) { return aberth_init(n, BigReal::parse(r0, d), d); };
  } else {
    const auto parts = split(fl.random, ',');
    if (parts.size() != 2) throw UsageError("solve: --random expects SEED,RADIUS");
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(parts[0].data(), parts[0].data() + parts[0].size(), seed);
    if (ec != std::errc() || ptr != parts[0].data() + parts[0].size()) {
      throw UsageError("solve: invalid seed '" + std::string(parts[0]) + "'");
    }
    const std::string radius(parts[1]);
    if (BigReal::parse(radius).sign() <= 0) throw UsageError("solve: radius must be > 0");
    x0 = [radius, n, seed](int d) { return random_init(n, BigReal::parse(radius, d), seed, d); };
  }
  if (static_cast<int>(x0(fl.digits).size()) != n) {
    throw UsageError("solve: initial vector length must equal the degree");
  }

  const fs::path dir = prepare_dir(fl.out);
  RunReport report = run(f, x0, cfg);
  if (report.m) {
    try {
      report.empirical_order = empirical_order(report);
    } catch (const DomainError&) {
    }
  }
  const TableRow row = table_row(report);
  write_file(dir / "report.json", report_json(report) + "\n");
  write_file(dir / "table.tsv", table_tsv({row}));
  if (fl.trajectory) write_file(dir / "trajectory.csv", trajectory_csv(report));
  out << table_header() << '\n' << table_line(row) << '\n';
  out << "outcome: " << to_string(report.outcome) << config_digits_note(report) << '\n';
  if (!report.diagnostic.empty()) out << "diagnostic: " << report.diagnostic << '\n';
  return outcome_exit(report);
}

struct CertifyFlags {
  std::string poly, at, p = "inf";
  int digits = 0;
};

int cmd_certify(const CertifyFlags& fl, std::ostream& out, std::ostream& err) {
  Exponent p;
  try {
    p = Exponent::parse(fl.p);
  } catch (const DomainError& e) {
    throw UsageError(std::string("certify: ") + e.what());
  }
  Polynomial f = [&] {
    try {
      return load_polynomial(fl.poly, fl.digits);
    } catch (const ParseError& e) {
      throw UsageError(std::string("certify: ") + e.what());
    }
  }();
  std::vector<BigComplex> v;
  try {
    v = parse_vector(read_file(fl.at), fl.digits);
  } catch (const ParseError& e) {
    throw UsageError(std::string("certify: ") + e.what());
  }
  if (static_cast<int>(v.size()) != f.degree()) {
    throw UsageError("certify: vector length must equal the degree");
  }
  try {
    const ApproximationVector x(std::move(v));
    const Certificate c = certify(f, x, NormContext::make(f.degree(), p, fl.digits));
    out << certificate_json(c, 2) << '\n';
    return c.fired() ? kOk : kNotFired;
  } catch (const NonDistinct& e) {
    err << "certify: " << e.what() << '\n';
    return kNumeric;
  }
}

struct GaugeFlags {
  int n = 0;
  std::string p = "inf";
  int digits = 0;
};

int cmd_gauge(const GaugeFlags& fl, std::ostream& out) {
  if (fl.n < 2) throw UsageError("gauge: --n must be >= 2");
  Exponent p;
  try {
    p = Exponent::parse(fl.p);
    const NormContext norm = NormContext::make(fl.n, p, fl.digits);
    const Thresholds th = thresholds(norm);
    const int shown = std::min(fl.digits, 30);
    auto line = [&](const char* name, const BigReal& v) {
      out << name << '\t' << v.to_fixed(shown) << '\n';
    };
    out << "n\t" << fl.n << "\np\t" << p.str() << '\n';
    line("a", norm.a);
    line("R", th.R_local);
    line("R_lower", r_lower_bound(norm));
    line("R_upper", BigReal(1, fl.digits) / 2);
    line("mu", th.mu);
    line("radius_2/(5a+6)", th.radius_cor33);
    line("radius_R_cal", th.radius_thm34);
    line("radius_explicit", th.radius_cor35);
  } catch (const DomainError& e) {
    throw UsageError(std::string("gauge: ") + e.what());
  }
  return kOk;
}

struct ReproduceFlags {
  int example = 0;
  int degree = 0;
  std::string orders, depth = "standard", out = ".";
  int digits = 0;
  bool trajectory = false;
};

int cmd_reproduce(const ReproduceFlags& fl, std::ostream& out) {
  if (fl.example < 1 || fl.example > 3) {
    throw UsageError("reproduce: unknown example id " + std::to_string(fl.example));
  }
  Depth depth;
  if (fl.depth == "standard") {
    depth = Depth::Standard;
  } else if (fl.depth == "extended") {
    depth = Depth::Extended;
  } else {
    throw UsageError("reproduce: --depth must be standard or extended");
  }
  const std::optional<std::vector<int>> requested =
      fl.orders.empty() ? std::nullopt : std::optional(parse_int_list(fl.orders));
  for (int N : requested.value_or(std::vector<int>{})) {
    if (N < 1) throw UsageError("reproduce: orders must be >= 1");
  }
  const fs::path dir = prepare_dir(fl.out);

  bool all_certified = true;
  bool matched = false;
  for (const ExampleCase& ex : example_cases(fl.example, fl.digits)) {
    if (fl.degree && ex.f.degree() != fl.degree) continue;
    matched = true;
    std::vector<int> orders = ex.standard_orders;
    if (requested) {
      orders = *requested;
    } else if (depth == Depth::Extended) {
      orders.insert(orders.end(), ex.deep_orders.begin(), ex.deep_orders.end());
    }
    std::vector<TableRow> rows;
    out << "# " << ex.table << " (degree " << ex.f.degree() << ")\n" << table_header() << '\n';
    for (int N : orders) {
      RunConfig cfg = reproduce_config(N, depth, fl.digits);
      cfg.capture_trajectory = fl.trajectory;
      const RunReport report = run(ex.f, ex.x0, cfg);
      all_certified = all_certified && report.outcome == Outcome::Certified;
      rows.push_back(table_row(report));
      out << table_line(rows.back()) << '\n' << std::flush;
      if (fl.example == 1 && N == 100) {
        RunReport first_four = report;
        if (first_four.records.size() > 4) first_four.records.erase(first_four.records.begin() + 4, first_four.records.end());
        write_file(dir / "table2.tsv", iterates_tsv(first_four, 15));
      }
      if (fl.trajectory) {
        write_file(dir / (ex.table + "_N" + std::to_string(N) + "_trajectory.csv"),
                   trajectory_csv(report));
      }
    }
    write_file(dir / (ex.table + ".tsv"), table_tsv(rows));
  }
  if (!matched) throw UsageError("reproduce: no case of this example has that degree");
  return all_certified ? kOk : kNumeric;
}

struct BatchFlags {
  std::string poly, radius, sweep, orders = "1";
  long long count = -1;
  std::uint64_t seed = 0;
  int digits = 0, max_digits = 2000, max_iters = 1000;
  unsigned threads = 0;
};

int cmd_batch(const BatchFlags& fl, std::ostream& out) {
  const bool random_mode = !fl.radius.empty() || fl.count >= 0;
  const bool sweep_mode = !fl.sweep.empty();
  if (random_mode == sweep_mode) {
    throw UsageError("batch: use either --count/--radius or --aberth-sweep");
  }
  if (random_mode && (fl.radius.empty() || fl.count < 0)) {
    throw UsageError("batch: random mode needs --count and --radius");
  }
  const std::vector<int> orders = parse_int_list(fl.orders);
  for (int N : orders) {
    if (N < 1) throw UsageError("batch: orders must be >= 1");
  }
  const Polynomial f = [&] {
    try {
      return load_polynomial(fl.poly, fl.digits);
    } catch (const ParseError& e) {
      throw UsageError(std::string("batch: ") + e.what());
    }
  }();
  const int n = f.degree();

  std::vector<BatchInstance> instances;
  if (random_mode) {
    const std::string radius = fl.radius;
    if (BigReal::parse(radius).sign() <= 0) throw UsageError("batch: --radius must be > 0");
    for (int N : orders) {
      for (long long i = 0; i < fl.count; ++i) {
        const std::uint64_t seed = fl.seed + static_cast<std::uint64_t>(i);
        instances.push_back({std::to_string(seed), N, [radius, n, seed](int d) {
                               return random_init(n, BigReal::parse(radius, d), seed, d);
                             }});
      }
    }
  } else {
    const auto r0s = parse_decimal_list(fl.sweep);
    for (int N : orders) {
      for (const auto& r0 : r0s) {
        if (BigReal::parse(r0).sign() <= 0) throw UsageError("batch: sweep radii must be > 0");
        instances.push_back(
            {r0, N, [r0, n](int d) { return aberth_init(n, BigReal::parse(r0, d), d); }});
      }
    }
  }

  RunConfig base;
  base.max_iterations = fl.max_iters;
  base.precision.digits = fl.digits;
  base.precision.max_digits = std::max(fl.max_digits, fl.digits);
  base.lookahead = false;
  const BatchSummary summary =
      run_batch(f, instances, base, fl.threads ? fl.threads : default_threads());
  out << summary.json(2) << '\n';
  return summary.certified_count == summary.count ? kOk : kNumeric;
}

}  // namespace

// ---- public helpers -----------------------------------------------------

int default_digits() {
  if (const char* env = std::getenv("WROOTS_DIGITS"); env && *env) {
    try {
      const int d = parse_int(env);
      if (d >= kMinDigits) return d;
    } catch (const UsageError&) {
    }
  }
  return kDefaultDigits;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_int(part));
      continue;
    }
    const int lo = parse_int(part.substr(0, dots));
    const int hi = parse_int(part.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range '" + std::string(part) + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<std::string> parse_decimal_list(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    std::vector<std::string> out;
    for (auto part : split(text, ',')) {
      parse_scaled(part);
      out.emplace_back(part);
    }
    return out;
  }
  const auto colon = text.find(':', dots);
  if (colon == std::string_view::npos) throw UsageError("range needs a step: LO..HI:STEP");
  const ScaledDecimal lo = parse_scaled(text.substr(0, dots));
  const ScaledDecimal hi = parse_scaled(text.substr(dots + 2, colon - dots - 2));
  const ScaledDecimal step = parse_scaled(text.substr(colon + 1));
  const int dec = std::max({lo.decimals, hi.decimals, step.decimals});
  const long long a = rescale(lo, dec), b = rescale(hi, dec), s = rescale(step, dec);
  if (s <= 0 || b < a) throw UsageError("invalid range '" + std::string(text) + "'");
  std::vector<std::string> out;
  for (long long v = a; v <= b; v += s) out.push_back(format_scaled(v, dec));
  return out;
}

std::vector<ExampleCase> example_cases(int example, int digits) {
  using Pairs = std::vector<std::pair<std::string, std::string>>;
  auto vec = [](Pairs xs) -> StartGenerator {
    return [xs = std::move(xs)](int d) {
      std::vector<BigComplex> v;
      for (const auto& [re, im] : xs) v.push_back(BigComplex::parse(re, im, d));
      return ApproximationVector(std::move(v));
    };
  };
  auto aberth = [](int n) -> StartGenerator {
    return [n](int d) { return aberth_init(n, BigReal(2, d), d); };
  };
  std::vector<int> ten;
  for (int N = 1; N <= 10; ++N) ten.push_back(N);

  switch (example) {
    case 1:
      return {{"table1",
               Polynomial({{"1", "0"}, {"0", "0"}, {"-1", "0"}, {"0", "0"}}, digits),
               vec({{"1.74", "0"}, {"1.75", "0"}, {"-3.49", "0"}}),
               ten,
               {100}}};
    case 2:
      return {{"table3",
               Polynomial({{"1", "0"},
                           {"0", "0"},
                           {"-1", "0"},
                           {"-10", "0"},
                           {"-1", "0"},
                           {"0", "0"},
                           {"-1", "0"},
                           {"10", "0"}},
                          digits),
               vec({{"2.3", "0.1"},
                    {"1.2", "0.2"},
                    {"-0.8", "-0.2"},
                    {"0.1", "1.3"},
                    {"-0.2", "-0.8"},
                    {"-1.2", "2.2"},
                    {"-1.2", "-1.8"}}),
               ten,
               {100}}};
    case 3:
      return {{"table4", unity_polynomial(20, digits), aberth(20), ten, {61, 100, 101}},
              {"table5", unity_polynomial(30, digits), aberth(30), ten, {101}}};
    default:
      throw DomainError("unknown example id " + std::to_string(example));
  }
}

RunConfig reproduce_config(int order, Depth depth, int digits) {
  RunConfig cfg;
  cfg.order = order;
  cfg.precision.digits = digits;
  cfg.precision.max_digits = depth == Depth::Extended ? 262144 : std::max(2000, digits);
  return cfg;
}

std::string BatchSummary::json(int indent) const {
  using nlohmann::json;
  json doc;
  doc["count"] = count;
  doc["certified_count"] = certified_count;
  doc["mean_m"] = mean_m;
  doc["mean_k"] = mean_k;
  json fails = json::array();
  for (const auto& f : failures) {
    fails.push_back({{"index", f.index},
                     {"start", f.start},
                     {"order", f.order},
                     {"outcome", to_string(f.outcome)},
                     {"diagnostic", f.diagnostic}});
  }
  doc["failures"] = fails;
  return doc.dump(indent);
}

BatchSummary run_batch(const Polynomial& f, const std::vector<BatchInstance>& instances,
                       const RunConfig& base, unsigned threads) {
  struct Slot {
    std::optional<int> m, k;
    Outcome outcome = Outcome::MaxIterations;
    std::string diagnostic;
  };
  std::vector<Slot> slots(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      RunConfig cfg = base;
      cfg.order = instances[i].order;
      Slot& s = slots[i];
      try {
        const RunReport r = run(f, instances[i].x0, cfg);
        s.m = r.m;
        s.k = r.k_stop;
        s.outcome = r.outcome;
        s.diagnostic = r.diagnostic;
      } catch (const std::exception& e) {
        s.outcome = Outcome::DomainViolation;
        s.diagnostic = e.what();
      }
    }
  };
  const unsigned pool = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(instances.size())));
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < pool; ++t) workers.emplace_back(worker);
  }

  BatchSummary sum;
  sum.count = instances.size();
  double m_total = 0, k_total = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Slot& s = slots[i];
    if (s.outcome == Outcome::Certified) {
      ++sum.certified_count;
      m_total += *s.m;
      k_total += *s.k;
    } else {
      sum.failures.push_back({i, instances[i].start, instances[i].order, s.outcome, s.diagnostic});
    }
  }
  if (sum.certified_count) {
    sum.mean_m = m_total / static_cast<double>(sum.certified_count);
    sum.mean_k = k_total / static_cast<double>(sum.certified_count);
  }
  return sum;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified simultaneous polynomial root finder", "wroots"};
  app.require_subcommand(1);
  const int digits = default_digits();

  SolveFlags solve;
  solve.digits = digits;
  auto* s = app.add_subcommand("solve", "iterate from an initial vector until certified");
  s->add_option("--poly", solve.poly, "polynomial JSON")->required();
  s->add_option("--init", solve.init, "initial vector JSON");
  s->add_option("--aberth", solve.aberth, "Aberth start on radius R0");
  s->add_option("--random", solve.random, "random start SEED,RADIUS");
  s->add_option("--order", solve.order, "order parameter N")->capture_default_str();
  s->add_option("--p", solve.p, "norm exponent (inf or number)")->capture_default_str();
  s->add_option("--tol", solve.tol, "stopping tolerance")->capture_default_str();
  s->add_option("--digits", solve.digits, "initial working digits")->capture_default_str();
  s->add_option("--max-digits", solve.max_digits, "precision cap")->capture_default_str();
  s->add_option("--max-iters", solve.max_iters, "iteration cap")->capture_default_str();
  s->add_option("--out", solve.out, "output directory")->capture_default_str();
  s->add_flag("--trajectory", solve.trajectory, "write trajectory.csv");

  CertifyFlags cert;
  cert.digits = digits;
  auto* c = app.add_subcommand("certify", "one-shot certificate for a vector");
  c->add_option("--poly", cert.poly, "polynomial JSON")->required();
  c->add_option("--at", cert.at, "vector JSON")->required();
  c->add_option("--p", cert.p, "norm exponent")->capture_default_str();
  c->add_option("--digits", cert.digits, "working digits")->capture_default_str();

  GaugeFlags gauge;
  gauge.digits = digits;
  auto* g = app.add_subcommand("gauge", "print R, mu and certification radii");
  g->add_option("--n", gauge.n, "degree")->required();
  g->add_option("--p", gauge.p, "norm exponent")->capture_default_str();
  g->add_option("--digits", gauge.digits, "working digits")->capture_default_str();

  ReproduceFlags repro;
  repro.digits = digits;
  auto* r = app.add_subcommand("reproduce", "regenerate the reference tables");
  r->add_option("--example", repro.example, "1, 2 or 3")->required();
  r->add_option("--degree", repro.degree, "restrict to the case of this degree");
  r->add_option("--N", repro.orders, "orders, e.g. 1..10 or 1,4,100");
  r->add_option("--depth", repro.depth, "standard or extended")->capture_default_str();
  r->add_option("--out", repro.out, "output directory")->capture_default_str();
  r->add_option("--digits", repro.digits, "initial working digits")->capture_default_str();
  r->add_flag("--trajectory", repro.trajectory, "write per-row trajectory CSV");

  BatchFlags batch;
  batch.digits = digits;
  auto* b = app.add_subcommand("batch", "many runs, aggregated");
  b->add_option("--poly", batch.poly, "polynomial JSON")->required();
  b->add_option("--count", batch.count, "number of random starts");
  b->add_option("--seed", batch.seed, "first seed")->capture_default_str();
  b->add_option("--radius", batch.radius, "random start box half-width");
  b->add_option("--aberth-sweep", batch.sweep, "r0 list, e.g. 1,1.5,2 or 1.0..2.0:0.1");
  b->add_option("--order", batch.orders, "order N or list")->capture_default_str();
  b->add_option("--digits", batch.digits, "initial working digits")->capture_default_str();
  b->add_option("--max-digits", batch.max_digits, "precision cap")->capture_default_str();
  b->add_option("--max-iters", batch.max_iters, "iteration cap")->capture_default_str();
  b->add_option("--threads", batch.threads, "worker threads (0 = all cores)");

  std::vector<std::string> argv_store{"wroots"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (int d : {solve.digits, cert.digits, gauge.digits, repro.digits, batch.digits}) {
      if (d < kMinDigits) throw UsageError("--digits must be >= " + std::to_string(kMinDigits));
    }
    if (s->parsed()) return cmd_solve(solve, out);
    if (c->parsed()) return cmd_certify(cert, out, err);
    if (g->parsed()) return cmd_gauge(gauge, out);
    if (r->parsed()) return cmd_reproduce(repro, out);
    if (b->parsed()) return cmd_batch(batch, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  }
  return kUsage;
}

}  // namespace wroots::cli
