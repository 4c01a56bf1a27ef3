// xyent command-line front end. Talks to the library only through xyent.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "xyent/xyent.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(xyent_status s) {
  switch (s) {
    case XYENT_E_CONVERGENCE:
    case XYENT_E_RESOLUTION:
    case XYENT_E_EIGENSOLVER:
    case XYENT_E_OVERFLOW:
    case XYENT_E_INTERNAL: return kExitNumeric;
    default: return kExitConfig;
  }
}

void check(xyent_status s) {
  if (s != XYENT_OK) {
    throw Failure{exit_code_for(s), std::string(xyent_status_name(s)) + " error: " + xyent_last_error()};
  }
}

[[noreturn]] void config_error(const std::string& msg) { throw Failure{kExitConfig, msg}; }

using Cell = std::variant<std::monostate, double, std::int64_t, std::uint64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        else if constexpr (std::is_same_v<T, double>) return fmt(v);
        else if constexpr (std::is_same_v<T, std::string>) return v;
        else return std::to_string(v);
      },
      c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return fmt(v);
          return v;
        } else return v;
      },
      c);
}

void emit(const Table& t, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["metadata"] = t.metadata;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      auto row = nlohmann::ordered_json::array();
      for (const auto& c : r) row.push_back(json_cell(c));
      rows.push_back(row);
    }
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) std::cout << (i ? "," : "") << t.columns[i];
  std::cout << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << csv_cell(r[i]);
    std::cout << "\n";
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s, const std::string& field) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    config_error("invalid number '" + s + "' in " + field);
  }
}

long parse_long(const std::string& s, const std::string& field) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    config_error("invalid integer '" + s + "' in " + field);
  }
}

// "n", "a,b,c" or "start:stop:step" (inclusive)
std::vector<int> parse_lengths(const std::string& spec) {
  std::vector<int> out;
  if (spec.find(':') != std::string::npos) {
    auto p = split(spec, ':');
    if (p.size() != 3) config_error("--L range must be start:stop:step");
    long a = parse_long(p[0], "--L"), b = parse_long(p[1], "--L"), c = parse_long(p[2], "--L");
    if (c <= 0 || b < a) config_error("--L range needs step > 0 and stop >= start");
    for (long v = a; v <= b; v += c) out.push_back(int(v));
  } else {
    for (const auto& s : split(spec, ',')) out.push_back(int(parse_long(s, "--L")));
  }
  for (int v : out)
    if (v < 1 || v > 4096) config_error("--L values must lie in 1..4096");
  if (out.empty()) config_error("--L is empty");
  return out;
}

std::vector<double> parse_real_range(const std::string& spec, const std::string& field) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    auto p = split(spec, ':');
    if (p.size() != 3) config_error(field + " range must be start:stop:step");
    double a = parse_double(p[0], field), b = parse_double(p[1], field), c = parse_double(p[2], field);
    if (!(c > 0) || b < a) config_error(field + " range needs step > 0 and stop >= start");
    const long n = std::lround(std::floor((b - a) / c + 1e-9));
    for (long i = 0; i <= n; ++i) out.push_back(a + i * c);
  } else {
    for (const auto& s : split(spec, ',')) out.push_back(parse_double(s, field));
  }
  if (out.empty()) config_error(field + " is empty");
  return out;
}

struct Model {
  xyent_model* m = nullptr;
  Model(double g, double h) { check(xyent_model_create(g, h, &m)); }
  ~Model() { xyent_model_destroy(m); }
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;
};

struct Spectrum {
  xyent_spectrum* s = nullptr;
  Spectrum(const Model& m, int L) { check(xyent_spectrum_compute(m.m, L, &s)); }
  ~Spectrum() { xyent_spectrum_destroy(s); }
  Spectrum(const Spectrum&) = delete;
  Spectrum& operator=(const Spectrum&) = delete;
};

const char* case_name(xyent_case c) {
  switch (c) {
    case XYENT_CASE_1A: return "Case1a";
    case XYENT_CASE_1B: return "Case1b";
    case XYENT_CASE_2: return "Case2";
  }
  return "?";
}

// case label, sigma, k, k', tau0 when (gamma, h) is off the critical set; nulls otherwise.
nlohmann::ordered_json model_metadata(const Model& m, double gamma, double h) {
  nlohmann::ordered_json j;
  j["gamma"] = gamma;
  j["h"] = h;
  xyent_case c;
  int sigma = 0;
  double k = 0, kp = 0, tau0 = 0;
  if (xyent_model_case(m.m, &c, &sigma) == XYENT_OK && xyent_model_modulus(m.m, &k, &kp, &tau0) == XYENT_OK) {
    j["case"] = case_name(c);
    j["sigma"] = sigma;
    j["k"] = k;
    j["kprime"] = kp;
    j["tau0"] = tau0;
  } else {
    j["case"] = nullptr;
    j["sigma"] = nullptr;
    j["k"] = nullptr;
    j["kprime"] = nullptr;
    j["tau0"] = nullptr;
  }
  return j;
}

struct Config {
  double gamma = 0.0;
  std::string h = "0";
  std::string L;
  std::string alpha = "2";
  int nmax = -1;  // unset: 64, or the tail-validated value when --tol is given
  double tol = 0.0;
  std::string lambda = "3";
  int finite_L = 0;
  std::string format = "csv";
  double proximity = 0.0;
};

double scalar_h(const Config& c) { return parse_double(c.h, "--h"); }

Table cmd_entropy(const Config& c) {
  const double h = scalar_h(c);
  Model m(c.gamma, h);
  Table t;
  t.metadata = model_metadata(m, c.gamma, h);
  t.columns = {"L", "S_exact", "S_reference", "difference"};
  const bool xx = (c.gamma == 0.0);
  if (xx) {
    double probe;
    check(xyent_entropy_xx_asymptotic(h, 2, &probe));
    if (c.L.empty()) config_error("--L is required on the gamma = 0 path");
    t.metadata["reference"] = "XXAsymptotic";
  } else {
    t.metadata["reference"] = "LimitSeries";
  }
  double limit = NAN;
  if (!xx) check(xyent_entropy_limit(m.m, XYENT_LIMIT_SERIES, &limit));
  const auto Ls = c.L.empty() ? std::vector<int>{} : parse_lengths(c.L);
  for (int L : Ls) {
    Spectrum s(m, L);
    double exact;
    check(xyent_entropy_exact(s.s, &exact));
    double ref = limit;
    if (xx) {
      if (L < 2) {
        t.rows.push_back({std::int64_t(L), exact, std::monostate{}, std::monostate{}});
        continue;
      }
      check(xyent_entropy_xx_asymptotic(h, L, &ref));
    }
    t.rows.push_back({std::int64_t(L), exact, ref, exact - ref});
  }
  if (!xx) t.rows.push_back({std::string("inf"), std::monostate{}, limit, std::monostate{}});
  return t;
}

std::vector<double> parse_alphas(const std::string& spec) {
  std::vector<double> out;
  for (const auto& s : split(spec, ',')) {
    double a = parse_double(s, "--alpha");
    if (!(a > 0.0)) config_error("--alpha values must be > 0");
    if (a == 1.0) {
      config_error("--alpha contains 1: the Renyi entropy (1/(1-alpha)) ln Tr rho^alpha requires alpha != 1");
    }
    out.push_back(a);
  }
  if (out.empty()) config_error("--alpha is empty");
  return out;
}

Table cmd_renyi(const Config& c) {
  const double h = scalar_h(c);
  const auto alphas = parse_alphas(c.alpha);
  const auto Ls = parse_lengths(c.L.empty() ? "60" : c.L);
  if (Ls.size() != 1) config_error("--L must be a single length for renyi");
  Model m(c.gamma, h);
  Table t;
  t.metadata = model_metadata(m, c.gamma, h);
  t.metadata["L"] = Ls[0];
  t.columns = {"alpha", "S_exact", "S_qproduct", "S_modular"};
  const bool limits = !(c.gamma == 0.0);
  Spectrum s(m, Ls[0]);
  for (double a : alphas) {
    double exact;
    check(xyent_renyi_exact(s.s, a, &exact));
    if (limits) {
      double q, mod;
      check(xyent_renyi_limit(m.m, a, XYENT_RENYI_QPRODUCT, &q));
      check(xyent_renyi_limit(m.m, a, XYENT_RENYI_MODULAR, &mod));
      t.rows.push_back({a, exact, q, mod});
    } else {
      t.rows.push_back({a, exact, std::monostate{}, std::monostate{}});
    }
  }
  return t;
}

Table cmd_spectrum(const Config& c) {
  const double h = scalar_h(c);
  Model m(c.gamma, h);
  int nmax = c.nmax;
  if (nmax < 0) {
    nmax = 64;
    if (c.tol > 0.0) check(xyent_density_nmax_for_tail(m.m, 1.0, c.tol, &nmax));
  }
  xyent_density* d = nullptr;
  check(xyent_density_create(m.m, nmax, &d));
  struct Guard {
    xyent_density* d;
    ~Guard() { xyent_density_destroy(d); }
  } guard{d};

  Table t;
  t.metadata = model_metadata(m, c.gamma, h);
  t.metadata["ratio"] = xyent_density_ratio(d);
  t.columns = {"n", "lambda", "multiplicity", "cumulative_trace"};

  // finite-L comparison: density eigenvalue at the rank where lambda_n first appears
  std::vector<double> finite;
  std::vector<long> rank(nmax + 1, -1);
  constexpr long kMaxRank = 100000;
  if (c.finite_L > 0) {
    t.columns.push_back("finite_L");
    t.metadata["finite_L"] = c.finite_L;
    long pos = 0;
    for (int n = 0; n <= nmax && pos < kMaxRank; ++n) {
      rank[n] = pos;
      std::uint64_t mult = 0;
      if (xyent_density_multiplicity_u64(d, n, &mult) != XYENT_OK) break;
      pos += long(std::min<std::uint64_t>(mult, kMaxRank));
    }
    Spectrum s(m, c.finite_L);
    finite.resize(std::size_t(std::min(pos, kMaxRank)));
    if (!finite.empty()) check(xyent_spectrum_density_top(s.s, finite.size(), finite.data()));
  }

  double cumulative = 0.0;
  char buf[256];
  for (int n = 0; n <= nmax; ++n) {
    double lam;
    check(xyent_density_lambda(d, n, &lam));
    check(xyent_density_multiplicity_str(d, n, buf, sizeof buf));
    std::uint64_t mult = 0;
    Cell mcell;
    if (xyent_density_multiplicity_u64(d, n, &mult) == XYENT_OK) {
      mcell = mult;
      cumulative += double(mult) * lam;
    } else {
      mcell = std::string(buf);
      cumulative += std::stod(buf) * lam;
    }
    std::vector<Cell> row{std::int64_t(n), lam, mcell, cumulative};
    if (c.finite_L > 0) {
      if (rank[n] >= 0 && rank[n] < long(finite.size())) row.push_back(finite[rank[n]]);
      else row.push_back(std::monostate{});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::pair<double, double> parse_lambda(const std::string& spec) {
  auto p = split(spec, ',');
  if (p.size() == 1) return {parse_double(p[0], "--lambda"), 0.0};
  if (p.size() == 2) return {parse_double(p[0], "--lambda"), parse_double(p[1], "--lambda")};
  config_error("--lambda must be 're' or 're,im'");
}

Table cmd_detcheck(const Config& c) {
  const double h = scalar_h(c);
  const auto [re, im] = parse_lambda(c.lambda);
  const auto Ls = parse_lengths(c.L.empty() ? "60" : c.L);
  Model m(c.gamma, h);
  Table t;
  t.metadata = model_metadata(m, c.gamma, h);
  t.metadata["lambda_re"] = re;
  t.metadata["lambda_im"] = im;
  t.metadata["path"] = c.gamma == 0.0 ? "xx" : "block";
  t.columns = {"L", "exact_log_abs_D", "asymptotic_log_abs_D", "ratio_minus_1"};
  for (int L : Ls) {
    double ex, as, gap;
    check(xyent_detcheck(m.m, re, im, L, c.proximity, &ex, &as, &gap));
    t.rows.push_back({std::int64_t(L), ex, as, gap});
  }
  return t;
}

Table cmd_sweep(const Config& c) {
  const auto hs = parse_real_range(c.h, "--h");
  Table t;
  t.metadata["gamma"] = c.gamma;
  t.columns = {"h", "case", "sigma", "k", "tau0", "S_series", "S_integral", "S_closed"};
  for (double h : hs) {
    Model m(c.gamma, h);
    xyent_case lab;
    int sigma;
    double k, kp, tau0;
    if (xyent_model_case(m.m, &lab, &sigma) != XYENT_OK ||
        xyent_model_modulus(m.m, &k, &kp, &tau0) != XYENT_OK) {
      t.rows.push_back({h, std::string("critical"), std::monostate{}, std::monostate{}, std::monostate{},
                        std::monostate{}, std::monostate{}, std::monostate{}});
      continue;
    }
    double s1, s2, s3;
    check(xyent_entropy_limit(m.m, XYENT_LIMIT_SERIES, &s1));
    check(xyent_entropy_limit(m.m, XYENT_LIMIT_INTEGRAL, &s2));
    check(xyent_entropy_limit(m.m, XYENT_LIMIT_CLOSED, &s3));
    t.rows.push_back({h, std::string(case_name(lab)), std::int64_t(sigma), k, tau0, s1, s2, s3});
  }
  return t;
}

const char* kFooter = R"(
Columns (CSV header order; JSON carries the same columns plus a metadata object
with gamma, h, case, sigma, k, kprime, tau0):
  entropy   L, S_exact, S_reference, difference
            reference is the large-L formula for gamma = 0 and the L = inf limit
            otherwise; the limit also appears as a final row with L = inf
  renyi     alpha, S_exact, S_qproduct, S_modular
  spectrum  n, lambda, multiplicity, cumulative_trace[, finite_L]
  detcheck  L, exact_log_abs_D, asymptotic_log_abs_D, ratio_minus_1 (|asym/exact - 1|)
  sweep     h, case, sigma, k, tau0, S_series, S_integral, S_closed
Exit codes: 0 success, 2 domain or configuration error, 3 numerical failure.
)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block entanglement of the XX/XY spin chain: exact, asymptotic and limiting values"};
  app.footer(kFooter);
  app.set_help_flag("--help", "print this help and exit");  // -h is the field
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--gamma", cfg.gamma, "anisotropy gamma >= 0");
    sub->add_option("--h", cfg.h, "magnetic field h >= 0");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* entropy = app.add_subcommand("entropy", "exact von Neumann entropy against its reference value");
  add_common(entropy);
  entropy->add_option("--L", cfg.L, "block length: n, list a,b,c or range start:stop:step");

  auto* renyi = app.add_subcommand("renyi", "exact and limiting Renyi entropies");
  add_common(renyi);
  renyi->add_option("--L", cfg.L, "block length for the exact column (default 60)");
  renyi->add_option("--alpha", cfg.alpha, "comma separated alpha list, alpha > 0 and != 1");

  auto* spectrum = app.add_subcommand("spectrum", "limiting reduced density matrix spectrum");
  add_common(spectrum);
  spectrum->add_option("--nmax", cfg.nmax, "last ladder index (default 64)")->check(CLI::NonNegativeNumber);
  spectrum->add_option("--finite-L", cfg.finite_L, "add finite block eigenvalues for this L");

  auto* detcheck = app.add_subcommand("detcheck", "characteristic determinant, exact vs asymptotic");
  add_common(detcheck);
  detcheck->add_option("--L", cfg.L, "block lengths (default 60)");
  detcheck->add_option("--lambda", cfg.lambda, "spectral parameter 're' or 're,im' off [-1,1]");
  detcheck->add_option("--proximity", cfg.proximity, "exclusion radius around +-1 and theta zeros");

  auto* sweep = app.add_subcommand("sweep", "limiting entropy along a range of h");
  add_common(sweep);

  spectrum->add_option("--tol", cfg.tol, "pick nmax so the trace tail is below tol (when --nmax is absent)");
  detcheck->add_option("--tol", cfg.tol, "same as --proximity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }
  if (*detcheck && cfg.tol > 0.0 && cfg.proximity <= 0.0) cfg.proximity = cfg.tol;

  try {
    if (!(cfg.gamma >= 0.0)) config_error("--gamma must be >= 0");
    Table t;
    if (*entropy) t = cmd_entropy(cfg);
    else if (*renyi) t = cmd_renyi(cfg);
    else if (*spectrum) t = cmd_spectrum(cfg);
    else if (*detcheck) t = cmd_detcheck(cfg);
    else t = cmd_sweep(cfg);
    t.metadata["command"] = app.get_subcommands().front()->get_name();
    emit(t, cfg.format);
    return kExitOk;
  } catch (const Failure& f) {
    std::cerr << "xyent: " << f.message << "\n";
    return f.code;
  }
}
