// zetareg: command-line front end.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetareg/format.hpp"
#include "zetareg/specreg.hpp"

using namespace zetareg;

namespace {

struct Options {
  std::string curve;
  std::vector<std::string> s;
  std::string grid;
  int cutoff_d = 0;
  int cutoff_k = 0;
  int kmax = 200;
  std::string sigmas = "0.5,0.25,0.1,0.05,0.02";
  std::string t_range = "0,0";
  std::string format;
  std::string out;
  bool experimental = false;
  int nmax = 5;
  std::string spectrum;
  std::string eigs;
  double alpha = 1.0;
  int m = 4;
  double mu = 1.0;
  std::uint64_t q = 2;
  unsigned n = 1;
  double tol = 1e-9;
};

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    parse_fail("not a number: '" + text + "'");
  }
  if (used != text.size()) parse_fail("not a number: '" + text + "'");
  return v;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item));
  if (out.empty()) parse_fail("empty list");
  return out;
}

// "2", "2.5-3i", "-0.5+14.1347i", "3i", "-i".
Complex parse_complex(std::string text) {
  std::erase(text, ' ');
  if (text.empty()) parse_fail("empty complex number");
  if (text.back() != 'i') return {parse_double(text), 0.0};
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (split == std::string::npos) return {0.0, imag_part(text)};
  return {parse_double(text.substr(0, split)), imag_part(text.substr(split))};
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 2 || v[1] < v[0]) parse_fail("range must be 'lo,hi' with lo <= hi");
  return {v[0], v[1]};
}

// --grid re_lo,re_hi,im_lo,im_hi,step ; otherwise the --s values.
std::vector<Complex> evaluation_points(const Options& o) {
  std::vector<Complex> pts;
  for (const auto& s : o.s) pts.push_back(parse_complex(s));
  if (!o.grid.empty()) {
    const auto g = parse_list(o.grid);
    if (g.size() != 5 || !(g[4] > 0) || g[1] < g[0] || g[3] < g[2]) {
      parse_fail("grid must be 're_lo,re_hi,im_lo,im_hi,step' with step > 0");
    }
    const auto n_re = static_cast<long>(std::floor((g[1] - g[0]) / g[4] + 1e-9));
    const auto n_im = static_cast<long>(std::floor((g[3] - g[2]) / g[4] + 1e-9));
    if ((n_re + 1) * (n_im + 1) > 1000000) parse_fail("grid has more than 10^6 points");
    for (long i = 0; i <= n_re; ++i) {
      for (long j = 0; j <= n_im; ++j) pts.emplace_back(g[0] + i * g[4], g[2] + j * g[4]);
    }
  }
  if (pts.empty()) parse_fail("no evaluation points: pass --s or --grid");
  return pts;
}

bool want_json(const Options& o, bool json_default) {
  if (o.format.empty()) return json_default;
  return o.format == "json";
}

Curve require_curve(const Options& o) {
  if (o.curve.empty()) parse_fail("--curve is required");
  return parse_curve(o.curve);
}

CurveZeta curve_zeta(const Options& o) { return CurveZeta(lpoly_from_curve(require_curve(o))); }

std::string big(const BigInt& x) { return x.str(); }

// One evaluation row; domain problems at a single point become a status
// instead of aborting the grid.
void eval_rows(std::ostream& os, const std::vector<Complex>& pts, const std::function<Complex(Complex)>& f) {
  os << "re_s,im_s,re_val,im_val,status\n";
  for (const auto& s : pts) {
    std::string status = "ok";
    Complex v(std::nan(""), std::nan(""));
    try {
      v = f(s);
    } catch (const SingularityError& e) {
      status = e.kind() == ErrorKind::NearPole ? "near_pole" : "near_singularity";
    }
    os << fmt17(s.real()) << ',' << fmt17(s.imag()) << ',' << fmt17(v.real()) << ',' << fmt17(v.imag()) << ','
       << status << '\n';
  }
}

void cmd_irr_count(const Options& o, std::ostream& os) {
  if (!prime_power(o.q).first) throw Error(ErrorKind::NonPrime, std::to_string(o.q) + " is not a prime power");
  if (o.n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  const BigInt c = irreducible_count(o.q, o.n);
  if (want_json(o, false)) {
    os << "{\"q\":" << o.q << ",\"n\":" << o.n << ",\"count\":" << big(c) << "}\n";
  } else {
    os << "q,n,count\n" << o.q << ',' << o.n << ',' << big(c) << '\n';
  }
}

void cmd_curve_count(const Options& o, std::ostream& os) {
  if (o.nmax < 1) throw Error(ErrorKind::InvalidArgument, "--nmax must be >= 1");
  const Curve c = require_curve(o);
  std::vector<BigInt> counts;
  for (int n = 1; n <= o.nmax; ++n) counts.push_back(count_points(c, n));
  if (want_json(o, false)) {
    os << "{\"q\":" << c.q() << ",\"g\":" << c.genus() << ",\"counts\":[";
    for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << big(counts[i]);
    os << "]}\n";
  } else {
    os << "n,N\n";
    for (std::size_t i = 0; i < counts.size(); ++i) os << i + 1 << ',' << big(counts[i]) << '\n';
  }
}

void cmd_lpoly(const Options& o, std::ostream& os) { os << lpoly_to_json(lpoly_from_curve(require_curve(o))) << '\n'; }

void cmd_zeta_eval(const Options& o, std::ostream& os) {
  const CurveZeta z = curve_zeta(o);
  eval_rows(os, evaluation_points(o), [&](Complex s) { return zeta_eval(z, s); });
}

void cmd_check_fe(const Options& o, std::ostream& os) {
  const CurveZeta z = curve_zeta(o);
  double worst = 0;
  int points = 0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 5; ++j) {
      const Complex s(-1.25 + 0.4 * i, -2.7 + 1.5 * j);
      worst = std::max(worst, functional_equation_deviation(z, s));
      ++points;
    }
  }
  const bool exact = check_functional_equation(z.L());
  os << "{\"exact\":" << (exact ? "true" : "false") << ",\"points\":" << points
     << ",\"max_rel_deviation\":" << json_number(worst) << "}\n";
}

void cmd_check_rh(const Options& o, std::ostream& os) {
  const WeilReport r = check_weil_rh(lpoly_from_curve(require_curve(o)), o.tol);
  os << "{\"ok\":" << (r.ok ? "true" : "false") << ",\"max_deviation\":" << json_number(r.max_deviation)
     << ",\"roots\":[";
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    os << (i ? "," : "") << '[' << json_number(r.roots[i].real()) << ',' << json_number(r.roots[i].imag()) << ']';
  }
  os << "]}\n";
}

void cmd_zeta_zeros(const Options& o, std::ostream& os) {
  const CurveZeta z = curve_zeta(o);
  const auto [lo, hi] = parse_range(o.t_range);
  os << "re_s,im_s\n";
  for (const auto& s : zeta_zeros(z, lo, hi)) os << fmt17(s.real()) << ',' << fmt17(s.imag()) << '\n';
}

Complex rational_direct(Complex s, int D) {
  Complex sum = 0;
  for (std::uint32_t p : prime_sieve(static_cast<std::uint64_t>(D))) sum += std::exp(-s * std::log(double(p)));
  return sum;
}

void cmd_primezeta(const Options& o, std::ostream& os, bool derivative) {
  const auto pts = evaluation_points(o);
  if (o.curve.empty()) {
    if (derivative) {
      eval_rows(os, pts, [&](Complex s) { return prime_zeta_rational_derivative(s, o.cutoff_k); });
    } else if (o.cutoff_d > 0) {
      eval_rows(os, pts, [&](Complex s) { return rational_direct(s, o.cutoff_d); });
    } else {
      eval_rows(os, pts, [&](Complex s) { return prime_zeta_rational(s, o.cutoff_k); });
    }
    return;
  }
  const PrimeZeta pz(curve_zeta(o));
  if (derivative) {
    eval_rows(os, pts, [&](Complex s) { return prime_zeta_derivative(pz, s, o.cutoff_k); });
  } else if (o.cutoff_d > 0) {
    eval_rows(os, pts, [&](Complex s) { return prime_zeta_direct(pz, s, o.cutoff_d); });
  } else {
    eval_rows(os, pts, [&](Complex s) { return prime_zeta_mobius(pz, s, o.cutoff_k); });
  }
}

SingularityEnumerator enumerator(const Options& o) {
  if (o.curve.empty()) return singularity_enumerate_rational;
  auto pz = std::make_shared<const PrimeZeta>(curve_zeta(o));
  return [pz](double sigma, double lo, double hi, int km) { return singularity_enumerate(*pz, sigma, lo, hi, km); };
}

void cmd_singularities(const Options& o, std::ostream& os) {
  const auto [lo, hi] = parse_range(o.t_range);
  const double sigma = parse_list(o.sigmas).back();
  const SingularityList list = enumerator(o)(sigma, lo, hi, o.kmax);
  os << "re_s,im_s,k,kind\n";
  for (const auto& e : list.entries) {
    os << fmt17(e.s.real()) << ',' << fmt17(e.s.imag()) << ',' << e.k << ',' << to_string(e.kind) << '\n';
  }
}

void cmd_boundary_report(const Options& o, std::ostream& os) {
  const auto [lo, hi] = parse_range(o.t_range);
  const BoundaryReport rep = boundary_evidence_report(enumerator(o), parse_list(o.sigmas), lo, hi, o.kmax);
  os << '[';
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    os << (i ? "," : "") << "{\"sigma\":" << json_number(r.sigma) << ",\"count\":" << r.count
       << ",\"min_re\":" << json_number(r.min_re) << ",\"argmin_k\":" << r.argmin_k << '}';
  }
  os << "]\n";
}

std::vector<Eigenvalue> parse_eigs(const std::string& text) {
  std::vector<Eigenvalue> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    Eigenvalue ev;
    ev.lambda = parse_double(item.substr(0, colon));
    if (colon != std::string::npos) {
      const double m = parse_double(item.substr(colon + 1));
      if (!(m >= 1) || m != std::floor(m)) parse_fail("multiplicity must be a positive integer");
      ev.multiplicity = static_cast<std::uint64_t>(m);
    }
    out.push_back(ev);
  }
  if (out.empty()) parse_fail("--eigs needs at least one eigenvalue");
  return out;
}

Spectrum build_spectrum(const Options& o) {
  const std::string& k = o.spectrum;
  SpectrumKind kind;
  if (k == "explicit") {
    kind = ExplicitSpectrum{parse_eigs(o.eigs)};
  } else if (k == "power") {
    kind = PowerFamily{o.alpha};
  } else if (k == "circle") {
    kind = CircleLaplacian{};
  } else if (k == "curve-primes") {
    kind = CurvePrimes{std::make_shared<const PrimeZeta>(curve_zeta(o))};
  } else if (k == "rational-primes") {
    kind = RationalPrimes{};
  } else if (k == "progression-primes") {
    kind = ProgressionPrimes{o.m};
  } else {
    parse_fail("unknown spectrum '" + k + "'");
  }
  if (!(o.mu > 0)) throw Error(ErrorKind::InvalidArgument, "--mu must be positive");
  return Spectrum::make(std::move(kind), o.mu * o.mu);
}

void cmd_regdet(const Options& o, std::ostream& os) { os << reg_result_to_json(regularized_det(build_spectrum(o))) << '\n'; }

void cmd_progression(const Options& o, std::ostream& os) {
  eval_rows(os, evaluation_points(o),
            [&](Complex s) { return prime_zeta_progression(s, o.m, o.cutoff_k, o.experimental); });
}

void cmd_riemann_zeros(const Options& o, std::ostream& os) {
  const auto [lo, hi] = parse_range(o.t_range);
  os << "t\n";
  for (double t : zeta_zero_scan(lo, hi)) os << fmt17(t) << '\n';
}

void print_error(std::string_view code, const std::string& message) {
  std::cerr << "{\"error\":" << json_string(std::string(code)) << ",\"message\":" << json_string(message) << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zeta functions of curves, prime zeta functions and regularized determinants", "zetareg"};
  app.require_subcommand(1);
  Options o;
  std::function<void(std::ostream&)> action;

  auto out_opts = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--out", o.out, "write output to this file instead of stdout");
  };
  auto curve_opt = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--curve", o.curve, "curve description, e.g. \"ell p=2 a3=1\"");
    if (required) opt->required();
  };
  auto point_opts = [&](CLI::App* c) {
    c->add_option("--s", o.s, "evaluation point(s), e.g. 2 or 0.5+14.1i");
    c->add_option("--grid", o.grid, "re_lo,re_hi,im_lo,im_hi,step");
  };
  auto bind = [&](CLI::App* c, std::function<void(const Options&, std::ostream&)> f) {
    c->callback([&action, &o, f] { action = [&o, f](std::ostream& os) { f(o, os); }; });
  };

  auto* field = app.add_subcommand("field", "finite fields")->require_subcommand(1);
  auto* irr = field->add_subcommand("irr-count", "number of monic irreducible polynomials of degree n over F_q");
  irr->add_option("--q", o.q)->required();
  irr->add_option("--n", o.n)->required();
  out_opts(irr);
  bind(irr, cmd_irr_count);

  auto* curve = app.add_subcommand("curve", "point counts and L-polynomials")->require_subcommand(1);
  auto* count = curve->add_subcommand("count", "brute-force N_1..N_nmax");
  curve_opt(count, true);
  count->add_option("--nmax", o.nmax);
  out_opts(count);
  bind(count, cmd_curve_count);
  auto* lpoly = curve->add_subcommand("lpoly", "L-polynomial as JSON");
  curve_opt(lpoly, true);
  out_opts(lpoly);
  bind(lpoly, cmd_lpoly);

  auto* zeta = app.add_subcommand("zeta", "zeta function of a curve")->require_subcommand(1);
  auto* zeval = zeta->add_subcommand("eval", "evaluate on points or a grid (CSV)");
  curve_opt(zeval, true);
  point_opts(zeval);
  out_opts(zeval);
  bind(zeval, cmd_zeta_eval);
  auto* fe = zeta->add_subcommand("check-fe", "functional equation, exact and on a 50-point grid");
  curve_opt(fe, true);
  out_opts(fe);
  bind(fe, cmd_check_fe);
  auto* rh = zeta->add_subcommand("check-rh", "Riemann hypothesis for the L-polynomial roots");
  curve_opt(rh, true);
  rh->add_option("--tol", o.tol);
  out_opts(rh);
  bind(rh, cmd_check_rh);
  auto* zz = zeta->add_subcommand("zeros", "zeros with imaginary part in --t-range");
  curve_opt(zz, true);
  zz->add_option("--t-range", o.t_range, "lo,hi");
  out_opts(zz);
  bind(zz, cmd_zeta_zeros);

  auto* pzc = app.add_subcommand("primezeta", "prime zeta function (of a curve, or of Q without --curve)")
                  ->require_subcommand(1);
  auto* pev = pzc->add_subcommand("eval", "direct series with --cutoff-d, Möbius series otherwise");
  curve_opt(pev, false);
  point_opts(pev);
  pev->add_option("--cutoff-d", o.cutoff_d);
  pev->add_option("--cutoff-k", o.cutoff_k);
  out_opts(pev);
  bind(pev, [](const Options& op, std::ostream& os) { cmd_primezeta(op, os, false); });
  auto* pdv = pzc->add_subcommand("deriv", "dP/ds from the Möbius series");
  curve_opt(pdv, false);
  point_opts(pdv);
  pdv->add_option("--cutoff-k", o.cutoff_k);
  out_opts(pdv);
  bind(pdv, [](const Options& op, std::ostream& os) { cmd_primezeta(op, os, true); });
  auto* sing = pzc->add_subcommand("singularities", "singularities with Re(s) > last --sigmas value");
  curve_opt(sing, false);
  sing->add_option("--sigmas", o.sigmas);
  sing->add_option("--t-range", o.t_range, "lo,hi");
  sing->add_option("--kmax", o.kmax);
  out_opts(sing);
  bind(sing, cmd_singularities);
  auto* br = pzc->add_subcommand("boundary-report", "singularity counts for a decreasing sigma schedule");
  curve_opt(br, false);
  br->add_option("--sigmas", o.sigmas);
  br->add_option("--t-range", o.t_range, "lo,hi");
  br->add_option("--kmax", o.kmax);
  out_opts(br);
  bind(br, cmd_boundary_report);

  auto* reg = app.add_subcommand("regdet", "zeta-regularized determinant");
  reg->add_option("--spectrum", o.spectrum)
      ->required()
      ->check(CLI::IsMember({"explicit", "power", "circle", "curve-primes", "rational-primes", "progression-primes"}));
  curve_opt(reg, false);
  reg->add_option("--eigs", o.eigs, "lambda[:mult],...");
  reg->add_option("--alpha", o.alpha);
  reg->add_option("--m", o.m);
  reg->add_option("--mu", o.mu);
  out_opts(reg);
  bind(reg, cmd_regdet);

  auto* prog = app.add_subcommand("progression", "prime zeta over p = 1 mod m")->require_subcommand(1);
  auto* pgev = prog->add_subcommand("eval", "evaluate on points or a grid (CSV)");
  pgev->add_option("--m", o.m)->required();
  point_opts(pgev);
  pgev->add_option("--cutoff-k", o.cutoff_k);
  pgev->add_flag("--experimental", o.experimental, "allow Re(s) <= 1");
  out_opts(pgev);
  bind(pgev, cmd_progression);

  auto* riemann = app.add_subcommand("riemann", "Riemann zeta")->require_subcommand(1);
  auto* rz = riemann->add_subcommand("zeros", "critical-line zero ordinates in --t-range (within [5, 60])");
  rz->add_option("--t-range", o.t_range, "lo,hi")->required();
  out_opts(rz);
  bind(rz, cmd_riemann_zeros);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("parse_error", e.what());
    return 2;
  }

  try {
    std::ostringstream os;
    action(os);
    if (o.out.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!(f << os.str())) throw Error(ErrorKind::InvalidArgument, "cannot write " + o.out);
    }
  } catch (const Error& e) {
    print_error(error_code(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    print_error("internal_error", e.what());
    return 4;
  }
  return 0;
}
