#include "mtrs/field.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "mtrs/error.hpp"

namespace mtrs {

namespace {

using Poly = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor.
Poly poly_rem(Poly a, const Poly& monic, std::uint32_t p) {
  trim(a);
  const std::size_t dm = monic.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - c) * monic[i]) % p);
    }
    trim(a);
  }
  return a;
}

// Schoolbook product reduced by the modulus; result has exactly m digits.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  r = poly_rem(std::move(r), modulus, p);
  r.resize(modulus.size() - 1, 0);
  return r;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& modulus, std::uint32_t p) {
  Poly result(modulus.size() - 1, 0);
  result[0] = 1;
  while (e != 0) {
    if (e & 1) result = mulmod(result, base, modulus, p);
    base = mulmod(base, base, modulus, p);
    e >>= 1;
  }
  return result;
}

Poly digits_of(std::uint32_t index, std::uint32_t p, std::uint32_t m) {
  Poly d(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

std::uint32_t index_of(const Poly& d, std::uint32_t p) {
  std::uint32_t idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
  return idx;
}

}  // namespace

std::uint64_t FieldSpec::order() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > (1ull << 32)) break;
  }
  return q;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::vector<std::uint32_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::parse, "bad field spec token '" + std::string(tok) + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  if (values.size() < 3) throw Error(ErrorKind::parse, "field spec needs p,m,c0,...,cm");
  FieldSpec spec;
  spec.p = values[0];
  spec.m = values[1];
  spec.modulus.assign(values.begin() + 2, values.end());
  if (spec.modulus.size() != static_cast<std::size_t>(spec.m) + 1) {
    throw Error(ErrorKind::parse, "field spec needs exactly m+1 modulus coefficients");
  }
  return spec;
}

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << p << ',' << m;
  for (auto c : modulus) os << ',' << c;
  return os.str();
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs) {
  Poly f(coeffs.begin(), coeffs.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // All monic polynomials of degree d.
    Poly g(d + 1, 0);
    g[d] = 1;
    for (;;) {
      if (poly_rem(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

Field::Field(const FieldSpec& spec) {
  if (!is_prime(spec.p)) throw Error(ErrorKind::invalid_argument, "characteristic is not prime");
  if (spec.m < 1) throw Error(ErrorKind::invalid_argument, "extension degree must be >= 1");
  const std::uint64_t q64 = spec.order();
  if (q64 > 65536) throw Error(ErrorKind::invalid_argument, "field order exceeds 65536");
  if (spec.modulus.size() != static_cast<std::size_t>(spec.m) + 1 || spec.modulus.back() != 1) {
    throw Error(ErrorKind::invalid_argument, "modulus must be monic of degree m");
  }
  for (auto c : spec.modulus)
    if (c >= spec.p) throw Error(ErrorKind::invalid_argument, "modulus coefficient out of range");
  if (!is_irreducible(spec.p, spec.modulus)) {
    throw Error(ErrorKind::reducible_modulus, "modulus " + spec.to_string() + " is reducible");
  }

  auto t = std::make_shared<Tables>();
  t->spec = spec;
  const auto q = static_cast<std::uint32_t>(q64);
  const std::uint32_t p = spec.p;
  const std::uint32_t m = spec.m;
  t->q = q;

  const Poly one = digits_of(1, p, m);
  const auto factors = prime_factors(q - 1);
  bool found = false;
  for (std::uint32_t cand = 1; cand < q && !found; ++cand) {
    const Poly c = digits_of(cand, p, m);
    if (powmod(c, q - 1, spec.modulus, p) != one) continue;
    bool full = true;
    for (auto f : factors) {
      if (powmod(c, (q - 1) / f, spec.modulus, p) == one) {
        full = false;
        break;
      }
    }
    if (full) {
      t->gamma = Elem(cand);
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::reducible_modulus, "no primitive element found");

  t->log.assign(q, 0);
  t->antilog.assign(2 * static_cast<std::size_t>(q - 1), 0);
  const Poly g = digits_of(t->gamma.index(), p, m);
  Poly cur = one;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    const std::uint32_t idx = index_of(cur, p);
    t->antilog[i] = idx;
    t->antilog[i + q - 1] = idx;
    t->log[idx] = i;
    cur = mulmod(cur, g, spec.modulus, p);
  }

  t->neg.assign(q, 0);
  for (std::uint32_t x = 0; x < q; ++x) {
    Poly d = digits_of(x, p, m);
    for (auto& c : d) c = (p - c) % p;
    t->neg[x] = index_of(d, p);
  }
  t->zech.assign(q - 1, 0);
  for (std::uint32_t d = 0; d < q - 1; ++d) {
    Poly v = digits_of(t->antilog[d], p, m);
    v[0] = (v[0] + 1) % p;
    t->zech[d] = index_of(v, p);
  }

  // Residue of x: for m = 1 it is the root -c0 of x + c0.
  if (m == 1) {
    t->root = Elem((p - spec.modulus[0]) % p);
  } else {
    t->root = Elem(p);
  }
  t_ = std::move(t);
}

Elem Field::inv(Elem x) const {
  if (x.is_zero()) throw Error(ErrorKind::division_by_zero, "inverse of zero");
  const std::uint32_t l = t_->log[x.index()];
  return Elem(t_->antilog[l == 0 ? 0 : (t_->q - 1) - l]);
}

Elem Field::pow(Elem x, std::int64_t e) const {
  if (x.is_zero()) {
    if (e == 0) return one();
    if (e < 0) throw Error(ErrorKind::division_by_zero, "negative power of zero");
    return zero();
  }
  const std::int64_t n = t_->q - 1;
  std::int64_t r = e % n;
  if (r < 0) r += n;
  const std::uint64_t l = (static_cast<std::uint64_t>(t_->log[x.index()]) * static_cast<std::uint64_t>(r)) % n;
  return Elem(t_->antilog[l]);
}

Elem Field::exp(std::int64_t e) const {
  const std::int64_t n = t_->q - 1;
  std::int64_t r = e % n;
  if (r < 0) r += n;
  return Elem(t_->antilog[r]);
}

std::uint32_t Field::log(Elem x) const {
  if (x.is_zero()) throw Error(ErrorKind::division_by_zero, "log of zero");
  return t_->log[x.index()];
}

Elem Field::from_int(std::int64_t v) const {
  const std::int64_t p = t_->spec.p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Elem(static_cast<std::uint32_t>(r));
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  const std::uint32_t p = t_->spec.p;
  Elem acc = zero();
  Elem power = one();
  for (auto c : coeffs) {
    acc = add(acc, mul(from_int(c % p), power));
    power = mul(power, root());
  }
  return acc;
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const {
  return digits_of(x.index(), t_->spec.p, t_->spec.m);
}

bool Field::has_subfield(std::uint64_t q0) const {
  std::uint64_t power = t_->spec.p;
  for (std::uint32_t d = 1; d <= t_->spec.m; ++d) {
    if (power == q0) return t_->spec.m % d == 0;
    power *= t_->spec.p;
  }
  return false;
}

bool Field::in_subfield(Elem x, std::uint64_t q0) const {
  if (!has_subfield(q0)) {
    throw Error(ErrorKind::invalid_argument,
                std::to_string(q0) + " is not a subfield order of GF(" + std::to_string(order()) + ")");
  }
  return pow(x, static_cast<std::int64_t>(q0)) == x;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out;
  out.reserve(t_->q);
  for (std::uint32_t i = 0; i < t_->q; ++i) out.emplace_back(i);
  return out;
}

namespace {

class ElementParser {
 public:
  ElementParser(const Field& f, std::string_view s) : f_(f), s_(s) {}

  Elem run() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty element");
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    Elem acc = term();
    if (negate) acc = f_.neg(acc);
    for (;;) {
      skip_ws();
      if (pos_ == s_.size()) break;
      const char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      const Elem t = term();
      acc = op == '+' ? f_.add(acc, t) : f_.sub(acc, t);
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse, "cannot parse element '" + std::string(s_) + "': " + why);
  }

  bool integer(std::uint64_t& out) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) return false;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, out);
    if (ec != std::errc()) fail("integer too large");
    return true;
  }

  // term := int | [int ['*']] 'a' ['^' int]
  Elem term() {
    skip_ws();
    std::uint64_t coef = 1;
    const bool has_coef = integer(coef);
    skip_ws();
    if (peek() == '*') {
      if (!has_coef) fail("'*' without coefficient");
      ++pos_;
      skip_ws();
      if (peek() != 'a') fail("expected 'a' after '*'");
    }
    if (peek() != 'a') {
      if (!has_coef) fail("expected term");
      return f_.from_int(static_cast<std::int64_t>(coef % f_.characteristic()));
    }
    ++pos_;
    std::uint64_t e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      if (!integer(e)) fail("expected exponent");
    }
    if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) fail("unexpected character");
    const Elem c = f_.from_int(static_cast<std::int64_t>(coef % f_.characteristic()));
    return f_.mul(c, f_.pow(f_.root(), static_cast<std::int64_t>(e)));
  }

  const Field& f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Elem Field::parse(std::string_view text) const { return ElementParser(*this, text).run(); }

std::string Field::format(Elem x) const {
  if (!contains(x)) throw Error(ErrorKind::invalid_argument, "element index out of range");
  if (t_->spec.m == 1) return std::to_string(x.index());
  if (x.is_zero()) return "0";
  const auto d = coeffs(x);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace mtrs
