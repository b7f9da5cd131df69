#include "zetareg/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace zetareg {

namespace {

using RPoly = std::vector<Rational>;

void rtrim(RPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

RPoly rsub(const RPoly& a, const RPoly& b) {
  RPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  rtrim(r);
  return r;
}

RPoly rderiv(const RPoly& a) {
  if (a.size() <= 1) return {};
  RPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  rtrim(r);
  return r;
}

std::pair<RPoly, RPoly> rdivmod(RPoly a, const RPoly& b) {
  rtrim(a);
  if (a.size() < b.size()) return {RPoly{}, a};
  const std::size_t n = a.size(), m = b.size();
  RPoly q(n - m + 1, Rational(0));
  for (std::size_t k = n - m + 1; k-- > 0;) {
    const Rational c = a[k + m - 1] / b.back();
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < m; ++j) a[k + j] -= c * b[j];
  }
  a.resize(m - 1);
  rtrim(a);
  rtrim(q);
  return {q, a};
}

RPoly rmonic(RPoly a) {
  if (a.empty()) return a;
  const Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

RPoly rgcd(RPoly a, RPoly b) {
  rtrim(a);
  rtrim(b);
  while (!b.empty()) {
    RPoly r = rdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return rmonic(a);
}

// Yun's square-free factorization: returns (factor, multiplicity) pairs.
std::vector<std::pair<RPoly, int>> squarefree_split(const RPoly& a) {
  std::vector<std::pair<RPoly, int>> out;
  const RPoly da = rderiv(a);
  const RPoly c = rgcd(a, da);
  RPoly w = rdivmod(a, c).first;
  RPoly y = rdivmod(da, c).first;
  RPoly z = rsub(y, rderiv(w));
  for (int i = 1; w.size() > 1; ++i) {
    const RPoly g = rgcd(w, z);
    if (g.size() > 1) out.emplace_back(g, i);
    w = rdivmod(w, g).first;
    y = rdivmod(z, g).first;
    z = rsub(y, rderiv(w));
  }
  return out;
}

using LComplex = std::complex<long double>;

struct Horner {
  LComplex value;
  LComplex deriv;
  long double magnitude;  // sum |c_k| |u|^k
};

Horner horner(const std::vector<long double>& c, LComplex u) {
  LComplex v = 0, d = 0;
  long double mag = 0;
  const long double au = std::abs(u);
  for (std::size_t i = c.size(); i-- > 0;) {
    d = d * u + v;
    v = v * u + c[i];
    mag = mag * au + std::fabs(c[i]);
  }
  return {v, d, mag};
}

constexpr double kResidualTol = 1e-12;

bool residual_ok(const std::vector<long double>& c, const std::vector<Complex>& roots) {
  for (const auto& r : roots) {
    const Horner h = horner(c, LComplex(r.real(), r.imag()));
    if (!(std::abs(h.value) <= kResidualTol * h.magnitude)) return false;
  }
  return true;
}

void polish(const std::vector<long double>& c, std::vector<Complex>& roots) {
  for (auto& r : roots) {
    LComplex u(r.real(), r.imag());
    for (int it = 0; it < 4; ++it) {
      const Horner h = horner(c, u);
      if (h.deriv == LComplex(0)) break;
      u -= h.value / h.deriv;
    }
    r = Complex(static_cast<double>(u.real()), static_cast<double>(u.imag()));
  }
}

// Aberth–Ehrlich on the scaled polynomial (roots near the unit circle).
std::vector<Complex> aberth(const std::vector<Complex>& d) {
  const int n = static_cast<int>(d.size()) - 1;
  std::vector<Complex> z(n);
  for (int j = 0; j < n; ++j) {
    z[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / n + 0.4);
  }
  for (int iter = 0; iter < 500; ++iter) {
    double max_step = 0;
    for (int j = 0; j < n; ++j) {
      Complex v = 0, dv = 0;
      for (int i = n; i >= 0; --i) {
        dv = dv * z[j] + v;
        v = v * z[j] + d[i];
      }
      if (v == Complex(0)) continue;
      const Complex ratio = v / dv;
      Complex repulse = 0;
      for (int k = 0; k < n; ++k) {
        if (k != j) repulse += 1.0 / (z[j] - z[k]);
      }
      const Complex step = ratio / (1.0 - ratio * repulse);
      z[j] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-15) break;
  }
  return z;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& d) {
  const int n = static_cast<int>(d.size()) - 1;
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -d[i] / d[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, /* computeEigenvectors = */ false);
  std::vector<Complex> z(n);
  for (int i = 0; i < n; ++i) z[i] = es.eigenvalues()(i);
  return z;
}

std::vector<Complex> squarefree_roots(const RPoly& g, double radius) {
  const int n = static_cast<int>(g.size()) - 1;
  std::vector<long double> c(g.size());
  std::vector<Complex> d(g.size());
  double scale = 0;
  for (int i = 0; i <= n; ++i) {
    c[i] = g[i].convert_to<long double>();
    d[i] = static_cast<double>(c[i]) * std::pow(radius, i);
    scale = std::max(scale, std::abs(d[i]));
  }
  for (auto& v : d) v /= scale;

  auto unscale = [&](std::vector<Complex> z) {
    for (auto& v : z) v *= radius;
    polish(c, z);
    return z;
  };
  std::vector<Complex> roots = unscale(aberth(d));
  if (residual_ok(c, roots)) return roots;
  roots = unscale(companion_roots(d));
  if (residual_ok(c, roots)) return roots;
  throw Error(ErrorKind::RootFindingFailed, "root finding did not reach residual 1e-12");
}

}  // namespace

std::vector<Complex> integer_poly_roots(const std::vector<BigInt>& coeffs, double radius) {
  RPoly a(coeffs.begin(), coeffs.end());
  rtrim(a);
  std::vector<Complex> roots;
  if (a.size() <= 1) return roots;
  for (const auto& [g, mult] : squarefree_split(a)) {
    const auto r = squarefree_roots(g, radius);
    for (int m = 0; m < mult; ++m) roots.insert(roots.end(), r.begin(), r.end());
  }
  std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
    if (std::arg(x) != std::arg(y)) return std::arg(x) < std::arg(y);
    return std::abs(x) < std::abs(y);
  });
  return roots;
}

LPolynomial::LPolynomial(std::uint64_t q, int genus, std::vector<BigInt> coeffs)
    : q_(q), genus_(genus), coeffs_(std::move(coeffs)) {
  if (genus_ < 0) throw Error(ErrorKind::GenusMismatch, "genus must be nonnegative");
  if (coeffs_.size() != static_cast<std::size_t>(2 * genus_ + 1)) {
    throw Error(ErrorKind::GenusMismatch, "L-polynomial of genus " + std::to_string(genus_) + " needs " +
                                              std::to_string(2 * genus_ + 1) + " coefficients");
  }
  if (coeffs_.front() != 1) throw Error(ErrorKind::InvalidArgument, "L-polynomial must satisfy L(0) = 1");
  if (coeffs_.back() == 0) throw Error(ErrorKind::GenusMismatch, "leading L-polynomial coefficient is zero");
  coeffs_d_.reserve(coeffs_.size());
  for (const auto& a : coeffs_) coeffs_d_.push_back(a.convert_to<double>());
  roots_ = integer_poly_roots(coeffs_, 1.0 / std::sqrt(static_cast<double>(q_)));
}

Complex LPolynomial::operator()(Complex u) const {
  Complex v = 0;
  for (std::size_t i = coeffs_d_.size(); i-- > 0;) v = v * u + coeffs_d_[i];
  return v;
}

Complex LPolynomial::derivative(Complex u) const {
  Complex d = 0;
  for (std::size_t i = coeffs_d_.size(); i-- > 1;) d = d * u + coeffs_d_[i] * static_cast<double>(i);
  return d;
}

LPolynomial lpoly_from_counts(std::uint64_t q, int genus, const std::vector<BigInt>& counts) {
  if (genus < 0 || counts.size() != static_cast<std::size_t>(genus)) {
    throw Error(ErrorKind::GenusMismatch, "genus " + std::to_string(genus) + " needs exactly " +
                                              std::to_string(genus) + " point counts, got " +
                                              std::to_string(counts.size()));
  }
  const int g = genus;
  // E = exp(S), S = sum N_n u^n / n, via n E_n = sum_k k s_k E_{n-k}.
  std::vector<Rational> s(g + 1, Rational(0)), E(g + 1, Rational(0));
  for (int n = 1; n <= g; ++n) s[n] = Rational(counts[n - 1], n);
  E[0] = 1;
  for (int n = 1; n <= g; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += k * s[k] * E[n - k];
    E[n] = acc / n;
  }
  std::vector<BigInt> a(2 * g + 1, BigInt(0));
  const BigInt Q(q);
  for (int i = 0; i <= g; ++i) {
    Rational v = E[i];
    if (i >= 1) v -= (Q + 1) * E[i - 1];
    if (i >= 2) v += Q * E[i - 2];
    if (boost::multiprecision::denominator(v) != 1) {
      throw Error(ErrorKind::NonIntegralCoefficient,
                  "L-polynomial coefficient a_" + std::to_string(i) + " = " + v.str() + " is not an integer");
    }
    a[i] = boost::multiprecision::numerator(v);
  }
  for (int i = 0; i < g; ++i) a[2 * g - i] = ipow(Q, static_cast<unsigned>(g - i)) * a[i];
  return LPolynomial(q, g, std::move(a));
}

LPolynomial lpoly_from_curve(const Curve& curve, std::uint64_t budget) {
  std::vector<BigInt> counts;
  for (int n = 1; n <= curve.genus(); ++n) counts.push_back(count_points(curve, n, budget));
  return lpoly_from_counts(curve.q(), curve.genus(), counts);
}

bool check_functional_equation(const LPolynomial& L) {
  const int g = L.genus();
  const auto& a = L.coeffs();
  const BigInt Q(L.q());
  for (int i = 0; i <= g; ++i) {
    if (a[2 * g - i] != ipow(Q, static_cast<unsigned>(g - i)) * a[i]) return false;
  }
  return true;
}

WeilReport check_weil_rh(const LPolynomial& L, double tol) {
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  WeilReport r;
  r.roots = L.roots();
  const double target = 1.0 / std::sqrt(static_cast<double>(L.q()));
  for (const auto& u : r.roots) r.max_deviation = std::max(r.max_deviation, std::abs(std::abs(u) - target));
  r.ok = r.max_deviation <= tol;
  return r;
}

std::vector<BigInt> counts_from_lpoly(const LPolynomial& L, int n_max) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 1");
  const int m = 2 * L.genus();
  const auto& a = L.coeffs();
  std::vector<BigInt> s(n_max + 1, BigInt(0)), N;
  N.reserve(n_max);
  const BigInt Q(L.q());
  BigInt qn = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (int i = 1; i <= std::min(n - 1, m); ++i) acc += a[i] * s[n - i];
    if (n <= m) acc += n * a[n];
    s[n] = -acc;
    qn *= Q;
    N.push_back(qn + 1 - s[n]);
  }
  return N;
}

PrimeCountTable prime_count_table(const LPolynomial& L, int n_max) {
  return PrimeCountTable(L.q(), L.genus(), counts_from_lpoly(L, n_max));
}

BigInt class_number(const LPolynomial& L) {
  BigInt h = 0;
  for (const auto& a : L.coeffs()) h += a;
  return h;
}

std::string lpoly_to_json(const LPolynomial& L) {
  nlohmann::ordered_json j;
  j["q"] = L.q();
  j["g"] = L.genus();
  j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& a : L.coeffs()) {
    if (a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max()) {
      j["coeffs"].push_back(a.convert_to<std::int64_t>());
    } else {
      j["coeffs"].push_back(a.str());
    }
  }
  return j.dump();
}

LPolynomial lpoly_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) {
      coeffs.push_back(c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<std::int64_t>()));
    }
    return LPolynomial(j.at("q").get<std::uint64_t>(), j.at("g").get<int>(), std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("L-polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorKind::ParseError, std::string("L-polynomial JSON: ") + e.what());
  }
}

}  // namespace zetareg
