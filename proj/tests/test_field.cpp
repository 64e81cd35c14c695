#include <random>

#include "doctest.h"
#include "mtrs/error.hpp"
#include "mtrs/field.hpp"
#include "oracles.hpp"

using namespace mtrs;

TEST_CASE("default moduli of F16 and F81") {
  CHECK(FieldSpec::default_for(16).modulus == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(FieldSpec::default_for(81).modulus == std::vector<std::uint32_t>{2, 0, 0, 2, 1});
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 32, 49, 64, 81, 125, 243, 256, 729, 1024}) {
    const FieldSpec s = FieldSpec::default_for(q);
    CHECK(s.order() == q);
    CHECK(is_irreducible(s.p, s.modulus));
  }
  CHECK_THROWS_AS(FieldSpec::default_for(6), Error);
  CHECK_THROWS_AS(FieldSpec::default_for(1), Error);
}

TEST_CASE("the root generates F16 and F81") {
  CHECK(Field::of_order(16).primitive() == Field::of_order(16).root());
  CHECK(Field::of_order(81).primitive() == Field::of_order(81).root());
}

TEST_CASE("reducible modulus is rejected") {
  FieldSpec s;
  s.p = 2;
  s.m = 2;
  s.modulus = {1, 0, 1};  // (x+1)^2
  try {
    Field f(s);
    FAIL("accepted a reducible modulus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::reducible_modulus);
  }
}

TEST_CASE("arithmetic matches schoolbook polynomial arithmetic") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 81}) {
    const Field f = Field::of_order(q);
    for (Elem x : f.elements()) {
      for (Elem y : f.elements()) {
        REQUIRE(f.mul(x, y) == oracle::mul(f, x, y));
        REQUIRE(f.add(x, y) == oracle::add(f, x, y));
        REQUIRE(f.add(f.sub(x, y), y) == x);
      }
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {64, 121, 243, 256, 343, 1024}) {
    const Field f = Field::of_order(q);
    for (int i = 0; i < 2000; ++i) {
      const Elem x(rng() % q), y(rng() % q), z(rng() % q);
      REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      REQUIRE(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
      REQUIRE(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
      REQUIRE(f.mul(x, y) == oracle::mul(f, x, y));
      if (!x.is_zero()) REQUIRE(f.mul(x, f.inv(x)) == f.one());
    }
  }
}

TEST_CASE("inverse, power and logarithm") {
  const Field f = Field::of_order(27);
  for (Elem x : f.elements()) {
    CHECK(f.pow(x, 27) == x);
    if (x.is_zero()) {
      CHECK_THROWS_AS(f.inv(x), Error);
      continue;
    }
    CHECK(f.exp(f.log(x)) == x);
    CHECK(f.pow(x, -1) == f.inv(x));
    CHECK(f.pow(x, 5) == oracle::pow(f, x, 5));
  }
  CHECK(f.pow(f.zero(), 0) == f.one());
  CHECK(f.exp(-1) == f.inv(f.primitive()));
}

TEST_CASE("primitive element has full order and is the smallest such") {
  for (std::uint64_t q : {4, 5, 7, 9, 16, 49}) {
    const Field f = Field::of_order(q);
    const Elem g = f.primitive();
    Elem x = g;
    std::uint32_t ord = 1;
    while (x != f.one()) {
      x = f.mul(x, g);
      ++ord;
    }
    CHECK(ord == q - 1);
    for (std::uint32_t i = 1; i < g.index(); ++i) {
      Elem y = Elem(i), z = y;
      std::uint32_t o = 1;
      while (z != f.one()) {
        z = f.mul(z, y);
        ++o;
      }
      CHECK(o < q - 1);
    }
  }
}

TEST_CASE("parse and format round trip") {
  const Field f16 = Field::of_order(16);
  CHECK(f16.format(f16.parse("a^3 + a^2 + 1")) == "a^3 + a^2 + 1");
  CHECK(f16.parse("a^4") == f16.parse("a + 1"));
  CHECK(f16.format(f16.zero()) == "0");
  const Field f81 = Field::of_order(81);
  CHECK(f81.format(f81.parse("2*a^3 + a + 2")) == "2*a^3 + a + 2");
  CHECK(f81.parse("-1") == f81.from_int(2));
  for (Elem x : f81.elements()) REQUIRE(f81.parse(f81.format(x)) == x);
  CHECK_THROWS_AS(f16.parse("b + 1"), Error);
  CHECK_THROWS_AS(f16.parse("a +"), Error);
}

TEST_CASE("subfields") {
  const Field f = Field::of_order(16);
  CHECK(f.has_subfield(4));
  CHECK(f.has_subfield(2));
  CHECK_FALSE(f.has_subfield(8));
  std::size_t n4 = 0;
  for (Elem x : f.elements()) n4 += f.in_subfield(x, 4);
  CHECK(n4 == 4);
}
