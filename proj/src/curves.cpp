#include "zetareg/curves.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <regex>
#include <string>

namespace zetareg {

namespace {

FieldSpec::Elem coeff(const Poly& a, int i) {
  return i >= 0 && i < static_cast<int>(a.size()) ? a[i] : 0;
}

/// y^2 + h(x) y = f(x) rewritten with explicit polynomials.
struct AffineEquation {
  Poly h;
  Poly f;
};

AffineEquation affine_equation(const CurveModel& model) {
  if (const auto* w = std::get_if<WeierstrassModel>(&model)) {
    Poly h{w->a3, w->a1};
    Poly f{w->a6, w->a4, w->a2, 1};
    trim(h);
    trim(f);
    return {h, f};
  }
  const auto& hm = std::get<HyperellipticModel>(model);
  return {hm.h, hm.f};
}

// Points at infinity of the smooth model sit over Y^2 + c_h Y = c_f when
// the equation has "even" shape; otherwise there is exactly one.
struct InfinityShape {
  bool even;
  FieldSpec::Elem c_h;
  FieldSpec::Elem c_f;
};

InfinityShape infinity_shape(const HyperellipticModel& m, int g) {
  const bool even = degree(m.f) == 2 * g + 2 || degree(m.h) == g + 1;
  return {even, coeff(m.h, g + 1), coeff(m.f, 2 * g + 2)};
}

// Number of y in the field with y^2 + b y = c.
class QuadraticRootCounter {
 public:
  explicit QuadraticRootCounter(const FieldSpec& f) : f_(f) {
    if (f.p() != 2) {
      squares_.assign(f.order(), 0);
      for (FieldSpec::Elem y = 0; y < f.order(); ++y) squares_[f.mul(y, y)] = 1;
    }
  }

  int count(FieldSpec::Elem b, FieldSpec::Elem c) const {
    if (f_.p() != 2) {
      const auto disc = f_.add(f_.mul(b, b), f_.mul(f_.from_int(4), c));
      if (disc == 0) return 1;
      return squares_[disc] ? 2 : 0;
    }
    if (b == 0) return 1;
    const auto binv = f_.inv(b);
    return count_char2(f_.mul(c, f_.mul(binv, binv)));
  }

  // z^2 + z = t is solvable (with two roots) iff Tr(t) = 0.
  int count_char2(FieldSpec::Elem t) const { return f_.trace(t) == 0 ? 2 : 0; }

 private:
  const FieldSpec& f_;
  std::vector<std::uint8_t> squares_;
};

}  // namespace

int model_genus(const CurveModel& model) {
  if (std::holds_alternative<ProjectiveLine>(model)) return 0;
  if (std::holds_alternative<WeierstrassModel>(model)) return 1;
  const int d = degree(std::get<HyperellipticModel>(model).f);
  return (d + 1) / 2 - 1;
}

FieldSpec::Elem weierstrass_discriminant(const FieldSpec& F, const WeierstrassModel& m) {
  const auto k = [&](std::int64_t n) { return F.from_int(n); };
  const auto mul = [&](auto... xs) {
    FieldSpec::Elem r = 1;
    ((r = F.mul(r, xs)), ...);
    return r;
  };
  const auto b2 = F.add(mul(m.a1, m.a1), mul(k(4), m.a2));
  const auto b4 = F.add(mul(k(2), m.a4), mul(m.a1, m.a3));
  const auto b6 = F.add(mul(m.a3, m.a3), mul(k(4), m.a6));
  auto b8 = F.add(mul(m.a1, m.a1, m.a6), mul(k(4), m.a2, m.a6));
  b8 = F.sub(b8, mul(m.a1, m.a3, m.a4));
  b8 = F.add(b8, mul(m.a2, m.a3, m.a3));
  b8 = F.sub(b8, mul(m.a4, m.a4));
  auto d = F.neg(mul(b2, b2, b8));
  d = F.sub(d, mul(k(8), b4, b4, b4));
  d = F.sub(d, mul(k(27), b6, b6));
  d = F.add(d, mul(k(9), b2, b4, b6));
  return d;
}

namespace {

void validate_hyperelliptic(const HyperellipticModel& m) {
  if (degree(m.f) < 1) {
    throw Error(ErrorKind::UnsupportedModel, "hyperelliptic f must have degree >= 1");
  }
  const int g = model_genus(m);
  if (degree(m.h) > g + 1) {
    throw Error(ErrorKind::UnsupportedModel,
                "hyperelliptic h must have degree <= g + 1 = " + std::to_string(g + 1));
  }
}

// Empty string when smooth, otherwise a description of the witness.
std::string singularity_witness(const FieldSpec& F, const CurveModel& model) {
  if (std::holds_alternative<ProjectiveLine>(model)) return {};
  if (const auto* w = std::get_if<WeierstrassModel>(&model)) {
    return weierstrass_discriminant(F, *w) == 0 ? "Weierstrass discriminant vanishes" : "";
  }
  const auto& m = std::get<HyperellipticModel>(model);
  validate_hyperelliptic(m);
  const int g = model_genus(model);
  const auto inf = infinity_shape(m, g);
  if (F.p() != 2) {
    // Completing the square: (2y + h)^2 = h^2 + 4f.
    const Poly disc = poly_add(F, poly_mul(F, m.h, m.h), poly_scale(F, m.f, F.from_int(4)));
    const Poly gcd = poly_gcd(F, disc, poly_derivative(F, disc));
    if (degree(gcd) != 0) return "gcd(h^2 + 4f, (h^2 + 4f)') = " + format_poly(gcd);
    if (inf.even && F.add(F.mul(inf.c_h, inf.c_h), F.mul(F.from_int(4), inf.c_f)) == 0) {
      return "the points at infinity collide";
    }
    return {};
  }
  if (m.h.empty()) return "y^2 = f(x) is singular in characteristic 2 (h must be nonzero)";
  // Singular points satisfy h = 0, h' y = f', y^2 = f, i.e. h'^2 f + f'^2 = 0.
  const Poly dh = poly_derivative(F, m.h);
  const Poly df = poly_derivative(F, m.f);
  const Poly rhs = poly_add(F, poly_mul(F, poly_mul(F, dh, dh), m.f), poly_mul(F, df, df));
  const Poly gcd = poly_gcd(F, m.h, rhs);
  if (degree(gcd) != 0) return "gcd(h, h'^2 f + f'^2) = " + format_poly(gcd);
  if (inf.even && inf.c_h == 0) return "singular point at infinity (h has degree < g + 1)";
  return {};
}

}  // namespace

bool is_nonsingular(const FieldSpec& base, const CurveModel& model) {
  return singularity_witness(base, model).empty();
}

Curve Curve::make(FieldSpec base, CurveModel model) {
  const std::string witness = singularity_witness(base, model);
  if (!witness.empty()) throw Error(ErrorKind::SingularCurve, "singular curve: " + witness);
  const int g = model_genus(model);
  return Curve(std::move(base), std::move(model), g);
}

BigInt count_points(const Curve& curve, int n, std::uint64_t budget) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  const std::uint64_t Q = checked_pow(curve.q(), static_cast<unsigned>(n), budget);
  if (std::holds_alternative<ProjectiveLine>(curve.model())) return BigInt(Q) + 1;

  const FieldSpec& base = curve.base();
  const FieldSpec ext = ff_make(base.p(), base.degree() * n, budget);
  const FieldEmbedding embed(base, ext);
  const AffineEquation eq = affine_equation(curve.model());
  const Poly h = embed.map_poly(eq.h);
  const Poly f = embed.map_poly(eq.f);
  const QuadraticRootCounter roots(ext);

  BigInt affine = 0;
  if (ext.p() != 2) {
    std::uint64_t total = 0;
    for (FieldSpec::Elem x = 0; x < Q; ++x) total += roots.count(poly_eval(ext, h, x), poly_eval(ext, f, x));
    affine = total;
  } else {
    // Batched inversion of h(x) over chunks keeps the char-2 loop at a few
    // multiplications per x.
    constexpr std::size_t kChunk = 4096;
    std::vector<FieldSpec::Elem> bs, cs, prefix;
    std::uint64_t total = 0;
    for (FieldSpec::Elem x0 = 0; x0 < Q; x0 += kChunk) {
      bs.clear();
      cs.clear();
      for (FieldSpec::Elem x = x0; x < std::min<FieldSpec::Elem>(Q, x0 + kChunk); ++x) {
        const auto b = poly_eval(ext, h, x);
        const auto c = poly_eval(ext, f, x);
        if (b == 0) {
          total += 1;  // y^2 = c has exactly one root in characteristic 2
        } else {
          bs.push_back(b);
          cs.push_back(c);
        }
      }
      if (bs.empty()) continue;
      prefix.assign(bs.size(), 1);
      FieldSpec::Elem acc = 1;
      for (std::size_t i = 0; i < bs.size(); ++i) {
        prefix[i] = acc;
        acc = ext.mul(acc, bs[i]);
      }
      FieldSpec::Elem inv_acc = ext.inv(acc);
      for (std::size_t i = bs.size(); i-- > 0;) {
        const auto binv = ext.mul(inv_acc, prefix[i]);
        inv_acc = ext.mul(inv_acc, bs[i]);
        total += roots.count_char2(ext.mul(cs[i], ext.mul(binv, binv)));
      }
    }
    affine = total;
  }

  int at_infinity = 1;
  if (const auto* hm = std::get_if<HyperellipticModel>(&curve.model())) {
    const auto inf = infinity_shape(*hm, curve.genus());
    if (inf.even) at_infinity = roots.count(embed(inf.c_h), embed(inf.c_f));
  }
  return affine + at_infinity;
}

PrimeCountTable::PrimeCountTable(std::uint64_t q, int genus, std::vector<BigInt> counts)
    : q_(q), genus_(genus), N_(std::move(counts)) {
  pi_.reserve(N_.size());
  for (std::size_t n = 1; n <= N_.size(); ++n) {
    BigInt sum = 0;
    for (const auto d : divisors(n)) {
      const int mu = mobius(n / d);
      if (mu != 0) sum += mu * N_[d - 1];
    }
    if (sum % n != 0 || sum < 0) {
      throw Error(ErrorKind::NonIntegralPrimeCount,
                  "point counts are inconsistent: pi(" + std::to_string(n) + ") = " + sum.str() + "/" +
                      std::to_string(n));
    }
    pi_.push_back(sum / n);
  }
}

PrimeCountTable prime_count_table(const Curve& curve, int n_max, std::uint64_t budget) {
  std::vector<BigInt> counts;
  for (int n = 1; n <= n_max; ++n) counts.push_back(count_points(curve, n, budget));
  return PrimeCountTable(curve.q(), curve.genus(), std::move(counts));
}

Poly to_field_poly(const FieldSpec& field, const TermMap& terms) {
  Poly a;
  for (const auto& [k, c] : terms) {
    if (k.second > 0 && field.degree() == 1) {
      throw Error(ErrorKind::ParseError, "generator 'w' requires an extension field (a > 1)");
    }
    const auto scalar = field.from_int(static_cast<std::int64_t>(c % field.p()));
    const auto w_pow = field.pow(field.generator(), BigInt(k.second));
    if (a.size() <= static_cast<std::size_t>(k.first)) a.resize(k.first + 1, 0);
    a[k.first] = field.add(a[k.first], field.mul(scalar, w_pow));
  }
  trim(a);
  return a;
}

namespace {

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorKind::ParseError, "curve: '" + key + "' expects an integer, got '" + value + "'");
  }
  return v;
}

std::string trim_copy(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Curve parse_curve(std::string_view text_in, std::uint64_t budget) {
  const std::string text = trim_copy(std::string(text_in));
  const auto space = text.find_first_of(" \t");
  const std::string kind = text.substr(0, space);
  const std::string rest = space == std::string::npos ? std::string{} : text.substr(space);

  std::map<std::string, std::string> kv;
  static const std::regex key_re(R"((^|\s)([a-z][a-z0-9]*)=)");
  std::vector<std::smatch> matches;
  for (auto it = std::sregex_iterator(rest.begin(), rest.end(), key_re); it != std::sregex_iterator(); ++it) {
    matches.push_back(*it);
  }
  if (matches.empty() && !trim_copy(rest).empty()) {
    throw Error(ErrorKind::ParseError, "curve: expected key=value pairs after '" + kind + "'");
  }
  if (!matches.empty() && !trim_copy(rest.substr(0, matches.front().position(0))).empty()) {
    throw Error(ErrorKind::ParseError, "curve: stray text before the first key");
  }
  for (std::size_t i = 0; i < matches.size(); ++i) {
    const auto start = static_cast<std::size_t>(matches[i].position(0) + matches[i].length(0));
    const auto stop = i + 1 < matches.size() ? static_cast<std::size_t>(matches[i + 1].position(0)) : rest.size();
    const std::string key = matches[i][2];
    const std::string value = trim_copy(rest.substr(start, stop - start));
    if (value.empty()) throw Error(ErrorKind::ParseError, "curve: empty value for '" + key + "'");
    if (!kv.emplace(key, value).second) throw Error(ErrorKind::ParseError, "curve: duplicate key '" + key + "'");
  }

  const auto allow = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : kv) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
        throw Error(ErrorKind::ParseError, "curve: unknown key '" + k + "' for model '" + kind + "'");
      }
    }
  };
  const auto require = [&](const char* key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorKind::ParseError, std::string("curve: missing '") + key + "'");
    return it->second;
  };
  const auto field_from_kv = [&]() {
    const auto p = parse_uint("p", require("p"));
    const auto a = kv.count("a") ? parse_uint("a", kv.at("a")) : 1;
    if (a < 1 || a > 64) throw Error(ErrorKind::DegreeOutOfRange, "curve: a must be in [1, 64]");
    return ff_make(p, static_cast<int>(a), budget);
  };

  if (kind == "p1") {
    allow({"q"});
    const auto q = parse_uint("q", require("q"));
    const auto [p, a] = prime_power(q);
    if (p == 0) throw Error(ErrorKind::NonPrime, "curve: q = " + std::to_string(q) + " is not a prime power");
    return Curve::make(ff_make(p, a, budget), ProjectiveLine{});
  }
  if (kind == "ell") {
    allow({"p", "a", "a1", "a2", "a3", "a4", "a6"});
    const FieldSpec F = field_from_kv();
    const auto element = [&](const char* key) -> FieldSpec::Elem {
      if (!kv.count(key)) return 0;
      const Poly c = to_field_poly(F, parse_terms(kv.at(key)));
      if (degree(c) > 0) throw Error(ErrorKind::ParseError, std::string("curve: '") + key + "' must not contain x");
      return c.empty() ? 0 : c[0];
    };
    WeierstrassModel m{element("a1"), element("a2"), element("a3"), element("a4"), element("a6")};
    return Curve::make(F, m);
  }
  if (kind == "hyp") {
    allow({"p", "a", "f", "h"});
    const FieldSpec F = field_from_kv();
    HyperellipticModel m;
    m.f = to_field_poly(F, parse_terms(require("f")));
    if (kv.count("h")) m.h = to_field_poly(F, parse_terms(kv.at("h")));
    return Curve::make(F, m);
  }
  throw Error(ErrorKind::ParseError, "curve: unknown model '" + kind + "' (expected p1, ell or hyp)");
}

}  // namespace zetareg
