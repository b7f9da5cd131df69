#include "zetareg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zetareg {

bool is_irreducible(const Poly& f_in, std::uint64_t p) {
  const PrimeField f{p};
  Poly g = f_in;
  trim(g);
  const int n = degree(g);
  if (n < 1) return false;
  if (n == 1) return true;
  g = poly_monic(f, g);

  std::vector<int> checkpoints;  // n / r for each prime r | n
  for (const auto& [r, e] : factorize(static_cast<std::uint64_t>(n))) {
    checkpoints.push_back(n / static_cast<int>(r));
  }
  const Poly x{0, 1};
  Poly h = x;
  for (int i = 1; i <= n; ++i) {
    h = poly_powmod(f, h, BigInt(p), g);
    if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
      if (degree(poly_gcd(f, poly_sub(f, h, x), g)) != 0) return false;
    }
  }
  return poly_sub(f, h, x).empty();
}

std::uint64_t poly_index(const Poly& a, std::uint64_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

Poly poly_from_index(std::uint64_t index, std::uint64_t p) {
  Poly a;
  while (index > 0) {
    a.push_back(index % p);
    index /= p;
  }
  return a;
}

namespace {

constexpr int kMaxExponent = 4096;

TermMap term_add(TermMap a, const TermMap& b) {
  for (const auto& [k, c] : b) a[k] += c;
  return a;
}

TermMap term_mul(const TermMap& a, const TermMap& b) {
  TermMap r;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
      if (k.first > kMaxExponent || k.second > kMaxExponent) {
        throw Error(ErrorKind::ParseError, "polynomial exponent too large");
      }
      r[k] += ca * cb;
    }
  }
  return r;
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  TermMap parse() {
    TermMap r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "polynomial parse error at offset " << pos_ << " in '" << text_ << "': " << what;
    throw Error(ErrorKind::ParseError, os.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'w' || c == '(';
  }

  TermMap expr() {
    TermMap r = term();
    while (peek() == '+') {
      ++pos_;
      r = term_add(std::move(r), term());
    }
    return r;
  }

  TermMap term() {
    TermMap r = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        r = term_mul(r, factor());
      } else if (starts_factor(c)) {
        r = term_mul(r, factor());
      } else {
        return r;
      }
    }
  }

  TermMap factor() {
    TermMap base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const BigInt e = integer();
    if (e > kMaxExponent) fail("exponent too large");
    TermMap r{{{0, 0}, BigInt(1)}};
    for (int i = 0; i < e.convert_to<int>(); ++i) r = term_mul(r, base);
    return r;
  }

  TermMap primary() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return {{{1, 0}, BigInt(1)}};
    }
    if (c == 'w') {
      ++pos_;
      return {{{0, 1}, BigInt(1)}};
    }
    if (c == '(') {
      ++pos_;
      TermMap r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return {{{0, 0}, integer()}};
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
  }

  BigInt integer() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer");
    }
    BigInt v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TermMap parse_terms(std::string_view text) {
  TermMap r = TermParser(text).parse();
  for (auto it = r.begin(); it != r.end();) {
    it = it->second == 0 ? r.erase(it) : std::next(it);
  }
  return r;
}

Poly parse_poly_fp(std::string_view text, std::uint64_t p) {
  Poly a;
  for (const auto& [k, c] : parse_terms(text)) {
    if (k.second != 0) {
      throw Error(ErrorKind::ParseError, "generator 'w' not allowed in a polynomial over F_p");
    }
    if (a.size() <= static_cast<std::size_t>(k.first)) a.resize(k.first + 1, 0);
    a[k.first] = (a[k.first] + static_cast<std::uint64_t>(c % p)) % p;
  }
  trim(a);
  return a;
}

std::string format_poly(const Poly& a, char var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << a[i];
      continue;
    }
    if (a[i] != 1) os << a[i] << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace zetareg
