#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mtrs {

/// A finite field element, stored as the base-p index of the coefficient
/// vector of its residue polynomial (constant term is the least significant
/// digit). Index 0 is zero and index 1 is one.
class Elem {
 public:
  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  friend constexpr auto operator<=>(Elem, Elem) = default;

 private:
  std::uint32_t index_ = 0;
};

/// GF(p^m) description: characteristic, degree and a monic modulus given by
/// its m+1 coefficients from the constant term upwards.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> modulus{1, 1};

  std::uint64_t order() const;

  /// Parses "p,m,c0,c1,...,cm".
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;

  /// Built-in modulus for q <= 1024 (Conway polynomials, which include
  /// x^4+x+1 for q=16 and x^4+2x^3+2 for q=81). Larger prime powers up to
  /// 2^16 fall back to the lexicographically smallest primitive polynomial.
  static FieldSpec default_for(std::uint64_t q);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// True iff the monic polynomial (coefficients low to high) is irreducible
/// over GF(p); checked by trial division with every monic divisor of degree
/// at most deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs);

/// Immutable field context with log/antilog tables. Cheap to copy; copies
/// share the same tables, so a Field is safe to hand to worker threads.
class Field {
 public:
  explicit Field(const FieldSpec& spec);
  static Field of_order(std::uint64_t q) { return Field(FieldSpec::default_for(q)); }

  const FieldSpec& spec() const { return t_->spec; }
  std::uint32_t characteristic() const { return t_->spec.p; }
  std::uint32_t degree() const { return t_->spec.m; }
  std::uint32_t order() const { return t_->q; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  /// Smallest-index element of multiplicative order q-1.
  Elem primitive() const { return t_->gamma; }
  /// The residue class of x, written `a` in element strings.
  Elem root() const { return t_->root; }

  Elem add(Elem x, Elem y) const {
    if (t_->spec.p == 2) return Elem(x.index() ^ y.index());
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (t_->spec.m == 1) return Elem((x.index() + y.index()) % t_->q);
    // Zech logarithm: x + y = x * (1 + y/x).
    std::uint32_t d = t_->log[y.index()] + (t_->q - 1) - t_->log[x.index()];
    if (d >= t_->q - 1) d -= t_->q - 1;
    const std::uint32_t z = t_->zech[d];
    if (z == 0) return Elem(0);
    return mul(x, Elem(z));
  }
  Elem neg(Elem x) const { return Elem(t_->neg[x.index()]); }
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  Elem mul(Elem x, Elem y) const {
    if (x.is_zero() || y.is_zero()) return Elem(0);
    return Elem(t_->antilog[t_->log[x.index()] + t_->log[y.index()]]);
  }
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  /// x^e; negative exponents require x != 0. 0^0 is 1.
  Elem pow(Elem x, std::int64_t e) const;
  /// gamma^e for any integer e.
  Elem exp(std::int64_t e) const;
  /// Discrete log base gamma, x != 0.
  std::uint32_t log(Elem x) const;
  /// Image of an integer under Z -> GF(p).
  Elem from_int(std::int64_t v) const;
  /// (-1)^e.
  Elem sign(std::int64_t e) const { return (e % 2 == 0) ? one() : neg(one()); }

  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;

  /// True iff x lies in the subfield of order q0, i.e. x^{q0} = x.
  bool in_subfield(Elem x, std::uint64_t q0) const;
  bool has_subfield(std::uint64_t q0) const;

  /// Parses strings such as "a^3 + a^2 + 1" or "2*a^3 + a + 2".
  Elem parse(std::string_view text) const;
  /// Descending powers of `a`, coefficient 1 implicit, other coefficients
  /// written as "2*a^3"; zero is "0".
  std::string format(Elem x) const;

  std::vector<Elem> elements() const;
  bool contains(Elem x) const { return x.index() < t_->q; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_ == b.t_ || a.t_->spec == b.t_->spec;
  }

 private:
  struct Tables {
    FieldSpec spec;
    std::uint32_t q = 0;
    Elem gamma;
    Elem root;
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> antilog;  // 2(q-1) entries, no reduction needed
    std::vector<std::uint32_t> zech;     // zech[d] = index of 1 + gamma^d
    std::vector<std::uint32_t> neg;
  };
  std::shared_ptr<const Tables> t_;
};

}  // namespace mtrs
