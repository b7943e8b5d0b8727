#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "kantorlab/errors.hpp"
#include "kantorlab/rational.hpp"

namespace kantorlab {

// a0 + a1 z + a2 z^2 + a3 z^3 with z^4 = -1.
struct Cyclo8 {
  std::array<Rational, 4> c{};

  bool is_zero() const;
  bool operator==(const Cyclo8& o) const { return c == o.c; }
  // image under z -> z^k, k odd
  Cyclo8 galois(int k) const;
  std::string to_string() const;
};

struct PrimeElem {
  std::int64_t r = 0;
  std::int64_t p = 0;
  bool operator==(const PrimeElem& o) const { return r == o.r && p == o.p; }
};

// a + b t with t^2 = d.
struct QuadElem {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t p = 0;
  std::int64_t d = 0;
  bool operator==(const QuadElem& o) const { return a == o.a && b == o.b && p == o.p && d == o.d; }
};

class Scalar {
 public:
  Scalar() : v_(Rational()) {}
  Scalar(Rational q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Cyclo8 c) : v_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(PrimeElem e) : v_(e) {}  // NOLINT(google-explicit-constructor)
  Scalar(QuadElem e) : v_(e) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const;
  bool is_one() const;

  Scalar zero_like() const { return from_int_like(0); }
  Scalar one_like() const { return from_int_like(1); }
  Scalar from_int_like(long long n) const;
  Scalar from_rational_like(long long n, long long d) const;

  Scalar inverse() const;
  Scalar operator-() const;
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  using Storage = std::variant<Rational, Cyclo8, PrimeElem, QuadElem>;
  const Storage& storage() const { return v_; }

 private:
  Storage v_;
};

enum class FieldKind { Rationals, Cyclo8, GFp, GFp2 };

class FieldDescriptor {
 public:
  static FieldDescriptor rationals();
  static FieldDescriptor cyclo8();
  static FieldDescriptor gfp(std::int64_t p);
  static FieldDescriptor gfp2(std::int64_t p, std::int64_t d);
  // q | qzeta8 | gf:<p> | gf2:<p>:<d> | gf2:<p> (least nonresidue)
  static FieldDescriptor parse(const std::string& spec);

  FieldKind kind() const { return kind_; }
  std::int64_t p() const { return p_; }
  std::int64_t d() const { return d_; }
  std::int64_t characteristic() const { return p_; }
  bool is_finite() const { return kind_ == FieldKind::GFp || kind_ == FieldKind::GFp2; }
  // number of elements; 0 for infinite fields
  std::int64_t order() const;

  bool has_sqrt_minus_one() const { return i_.has_value(); }
  bool has_sqrt_two() const { return s2_.has_value(); }
  const Scalar& sqrt_minus_one() const;
  const Scalar& sqrt_two() const;

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long n) const;
  Scalar from_rational(long long n, long long d) const;
  bool contains(const Scalar& s) const;

  // finite fields only; index in [0, order())
  Scalar element(std::int64_t index) const;
  std::int64_t index_of(const Scalar& s) const;
  // generator of the multiplicative group (finite fields only)
  Scalar primitive_element() const;

  Scalar random(std::mt19937_64& rng, int bound = 3) const;

  std::string spec() const;
  std::string name() const;
  bool operator==(const FieldDescriptor& o) const { return kind_ == o.kind_ && p_ == o.p_ && d_ == o.d_; }

 private:
  FieldDescriptor(FieldKind k, std::int64_t p, std::int64_t d);
  void choose_roots();

  FieldKind kind_;
  std::int64_t p_ = 0;
  std::int64_t d_ = 0;
  std::optional<Scalar> i_;
  std::optional<Scalar> s2_;
};

bool is_prime(std::int64_t n);
bool is_square_mod(std::int64_t a, std::int64_t p);

}  // namespace kantorlab
