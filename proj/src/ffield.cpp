#include "zetareg/ffield.hpp"

#include <array>
#include <cstdlib>
#include <string>

namespace zetareg {

std::uint64_t enumeration_budget() {
  constexpr std::uint64_t kDefault = 10'000'000;
  const char* env = std::getenv("ZETAREG_BUDGET");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return static_cast<std::uint64_t>(v);
}

FieldSpec::FieldSpec(std::uint64_t p, Poly modulus, std::uint64_t budget) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  }
  if (p >= (std::uint64_t{1} << 32)) {
    throw Error(ErrorKind::DegreeOutOfRange, "characteristic must be below 2^32");
  }
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (zetareg::degree(modulus) < 1 || modulus.back() != 1) {
    throw Error(ErrorKind::InvalidArgument, "field modulus must be monic of degree >= 1");
  }
  if (!is_irreducible(modulus, p)) {
    throw Error(ErrorKind::InvalidArgument,
                "field modulus " + format_poly(modulus) + " is reducible over F_" + std::to_string(p));
  }
  const int a = zetareg::degree(modulus);
  std::uint64_t q = 0;
  try {
    q = checked_pow(p, static_cast<unsigned>(a), budget);
  } catch (const Error&) {
    throw Error(ErrorKind::DegreeOutOfRange,
                "F_" + std::to_string(p) + "^" + std::to_string(a) + " exceeds the enumeration budget");
  }

  auto data = std::make_shared<Data>();
  data->p = p;
  data->a = a;
  data->q = q;
  data->modulus = modulus;
  data->modulus_bits = 0;
  if (p == 2) {
    for (int i = 0; i < a; ++i) data->modulus_bits |= modulus[i] << i;
  }
  d_ = data;

  // Trace of each basis element w^i; trace is F_p-linear.
  std::vector<std::uint64_t> basis(a);
  Elem wi = 1;
  for (int i = 0; i < a; ++i) {
    Elem t = 0, conj = wi;
    for (int j = 0; j < a; ++j) {
      t = add(t, conj);
      conj = pow(conj, BigInt(p));
    }
    basis[i] = t;  // lies in F_p, i.e. a packed constant
    wi = mul(wi, a > 1 ? p : 0);
  }
  data->trace_basis = std::move(basis);
}

FieldSpec ff_make(std::uint64_t p, int a, std::uint64_t budget) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (a < 1) throw Error(ErrorKind::DegreeOutOfRange, "extension degree must be >= 1");
  try {
    checked_pow(p, static_cast<unsigned>(a), budget);
  } catch (const Error&) {
    throw Error(ErrorKind::DegreeOutOfRange,
                "F_" + std::to_string(p) + "^" + std::to_string(a) + " exceeds the enumeration budget");
  }
  return FieldSpec(p, find_irreducible(p, a), budget);
}

FieldSpec::Elem FieldSpec::from_int(std::int64_t n) const {
  return PrimeField{d_->p}.from_int(n);
}

FieldSpec::Elem FieldSpec::from_coeffs(const Poly& coeffs) const {
  const PrimeField fp{d_->p};
  Poly c = coeffs;
  for (auto& v : c) v %= d_->p;
  trim(c);
  if (zetareg::degree(c) >= d_->a) c = poly_mod(fp, c, d_->modulus);
  return poly_index(c, d_->p);
}

Poly FieldSpec::coeffs(Elem x) const {
  Poly c(d_->a, 0);
  for (int i = 0; i < d_->a; ++i) {
    c[i] = x % d_->p;
    x /= d_->p;
  }
  return c;
}

FieldSpec::Elem FieldSpec::add(Elem x, Elem y) const {
  const auto p = d_->p;
  if (p == 2) return x ^ y;
  if (d_->a == 1) return (x + y) % p;
  Elem r = 0, scale = 1;
  for (int i = 0; i < d_->a; ++i) {
    r += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return r;
}

FieldSpec::Elem FieldSpec::neg(Elem x) const {
  const auto p = d_->p;
  if (p == 2) return x;
  if (d_->a == 1) return (p - x) % p;
  Elem r = 0, scale = 1;
  for (int i = 0; i < d_->a; ++i) {
    r += ((p - x % p) % p) * scale;
    x /= p;
    scale *= p;
  }
  return r;
}

FieldSpec::Elem FieldSpec::sub(Elem x, Elem y) const { return add(x, neg(y)); }

FieldSpec::Elem FieldSpec::mul(Elem x, Elem y) const {
  const auto p = d_->p;
  const int a = d_->a;
  if (a == 1) return static_cast<Elem>((static_cast<unsigned __int128>(x) * y) % p);
  if (p == 2) {
    unsigned __int128 prod = 0;
    for (int i = 0; i < a; ++i) {
      if ((y >> i) & 1) prod ^= static_cast<unsigned __int128>(x) << i;
    }
    const unsigned __int128 full =
        (static_cast<unsigned __int128>(1) << a) | static_cast<unsigned __int128>(d_->modulus_bits);
    for (int i = 2 * a - 2; i >= a; --i) {
      if ((prod >> i) & 1) prod ^= full << (i - a);
    }
    return static_cast<Elem>(prod);
  }
  std::array<std::uint64_t, 64> xd{}, yd{};
  std::array<unsigned __int128, 128> acc{};
  for (int i = 0; i < a; ++i) {
    xd[i] = x % p;
    yd[i] = y % p;
    x /= p;
    y /= p;
  }
  for (int i = 0; i < a; ++i) {
    if (xd[i] == 0) continue;
    for (int j = 0; j < a; ++j) acc[i + j] += static_cast<unsigned __int128>(xd[i]) * yd[j];
  }
  std::array<std::uint64_t, 128> r{};
  for (int i = 0; i < 2 * a - 1; ++i) r[i] = static_cast<std::uint64_t>(acc[i] % p);
  const Poly& m = d_->modulus;
  for (int i = 2 * a - 2; i >= a; --i) {
    const std::uint64_t c = r[i];
    if (c == 0) continue;
    for (int j = 0; j < a; ++j) {
      const auto t = static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) * m[j]) % p);
      r[i - a + j] = (r[i - a + j] + p - t) % p;
    }
    r[i] = 0;
  }
  Elem out = 0;
  for (int i = a; i-- > 0;) out = out * p + r[i];
  return out;
}

FieldSpec::Elem FieldSpec::pow(Elem x, const BigInt& e_in) const {
  if (e_in < 0) return pow(inv(x), -e_in);
  BigInt e = e_in;
  Elem r = 1;
  while (e > 0) {
    if ((e & 1) != 0) r = mul(r, x);
    e >>= 1;
    if (e > 0) x = mul(x, x);
  }
  return r;
}

FieldSpec::Elem FieldSpec::inv(Elem x) const {
  if (x == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return pow(x, BigInt(d_->q - 2));
}

bool FieldSpec::is_square(Elem x) const {
  if (d_->p == 2 || x == 0) return true;
  return pow(x, BigInt((d_->q - 1) / 2)) == 1;
}

std::uint64_t FieldSpec::trace(Elem x) const {
  const auto p = d_->p;
  std::uint64_t t = 0;
  for (int i = 0; i < d_->a; ++i) {
    t = (t + (x % p) * d_->trace_basis[i]) % p;
    x /= p;
  }
  return t;
}

FieldElement::FieldElement(FieldSpec field, FieldSpec::Elem value)
    : field_(std::move(field)), value_(value) {
  if (value_ >= field_.order()) {
    throw Error(ErrorKind::InvalidArgument, "packed element out of range for its field");
  }
}

namespace {

const FieldSpec& common_field(const FieldElement& x, const FieldElement& y) {
  if (!(x.field() == y.field())) {
    throw Error(ErrorKind::MixedFields, "operands belong to different fields");
  }
  return x.field();
}

}  // namespace

FieldElement ff_add(const FieldElement& x, const FieldElement& y) {
  const auto& f = common_field(x, y);
  return {f, f.add(x.value(), y.value())};
}

FieldElement ff_sub(const FieldElement& x, const FieldElement& y) {
  const auto& f = common_field(x, y);
  return {f, f.sub(x.value(), y.value())};
}

FieldElement ff_mul(const FieldElement& x, const FieldElement& y) {
  const auto& f = common_field(x, y);
  return {f, f.mul(x.value(), y.value())};
}

FieldElement ff_neg(const FieldElement& x) { return {x.field(), x.field().neg(x.value())}; }

FieldElement ff_inv(const FieldElement& x) { return {x.field(), x.field().inv(x.value())}; }

FieldElement ff_pow(const FieldElement& x, const BigInt& e) {
  return {x.field(), x.field().pow(x.value(), e)};
}

std::vector<FieldElement> ff_enumerate(const FieldSpec& field, std::uint64_t budget) {
  if (field.order() > budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "field of order " + std::to_string(field.order()) + " exceeds the enumeration budget");
  }
  std::vector<FieldElement> out;
  out.reserve(field.order());
  for (std::uint64_t v = 0; v < field.order(); ++v) out.emplace_back(field, v);
  return out;
}

BigInt irreducible_count(std::uint64_t q, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "irreducible_count: n must be >= 1");
  BigInt sum = 0;
  for (const auto d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu != 0) sum += mu * ipow(BigInt(q), static_cast<unsigned>(d));
  }
  return sum / n;
}

Poly find_irreducible(std::uint64_t p, int n) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorKind::DegreeOutOfRange, "degree must be >= 1");
  for (std::uint64_t idx = 0;; ++idx) {
    Poly f = poly_from_index(idx, p);
    f.resize(n + 1, 0);
    f[n] = 1;
    if (is_irreducible(f, p)) return f;
  }
}

FieldSpec::Elem primitive_element(const FieldSpec& field) {
  const std::uint64_t order = field.order() - 1;
  if (order == 1) return 1;
  const auto factors = factorize(order);
  for (FieldSpec::Elem g = 2; g < field.order(); ++g) {
    bool ok = true;
    for (const auto& [r, e] : factors) {
      if (field.pow(g, BigInt(order / r)) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(ErrorKind::InvalidArgument, "no primitive element found");
}

FieldEmbedding::FieldEmbedding(FieldSpec sub, FieldSpec ext)
    : sub_(std::move(sub)), ext_(std::move(ext)), root_(0) {
  if (sub_.p() != ext_.p() || ext_.degree() % sub_.degree() != 0) {
    throw Error(ErrorKind::MixedFields, "field is not a subfield of the extension");
  }
  if (sub_.degree() == 1) return;
  const auto& m = sub_.modulus();
  const auto g = primitive_element(ext_);
  const auto h = ext_.pow(g, BigInt((ext_.order() - 1) / (sub_.order() - 1)));
  FieldSpec::Elem cur = 1;
  for (std::uint64_t j = 0; j + 1 < sub_.order(); ++j) {
    if (poly_eval(ext_, m, cur) == 0) {
      root_ = cur;
      return;
    }
    cur = ext_.mul(cur, h);
  }
  throw Error(ErrorKind::InvalidArgument, "subfield modulus has no root in the extension");
}

FieldSpec::Elem FieldEmbedding::operator()(FieldSpec::Elem x) const {
  if (sub_.degree() == 1) return x;
  const Poly c = sub_.coeffs(x);
  FieldSpec::Elem acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = ext_.add(ext_.mul(acc, root_), c[i]);
  return acc;
}

Poly FieldEmbedding::map_poly(const Poly& a) const {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (*this)(a[i]);
  trim(r);
  return r;
}

}  // namespace zetareg
