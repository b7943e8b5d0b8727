#include "kantorlab/field.hpp"

#include <sstream>

namespace kantorlab {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  if (mod(a, p) == 0) throw Error(Errc::DivisionByZero, "inverse of zero in GF(" + std::to_string(p) + ")");
  return powmod(a, p - 2, p);
}

Cyclo8 cmul(const Cyclo8& x, const Cyclo8& y) {
  Cyclo8 out;
  for (int i = 0; i < 4; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (y.c[j].is_zero()) continue;
      Rational t = x.c[i] * y.c[j];
      if (i + j < 4) out.c[i + j] += t;
      else out.c[i + j - 4] -= t;
    }
  }
  return out;
}

Cyclo8 cinv(const Cyclo8& x) {
  if (x.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in Q(zeta8)");
  Cyclo8 rest = cmul(cmul(x.galois(3), x.galois(5)), x.galois(7));
  Cyclo8 n = cmul(x, rest);
  Rational s = n.c[0].inverse();
  for (auto& r : rest.c) r *= s;
  return rest;
}

QuadElem qmul(const QuadElem& x, const QuadElem& y) {
  std::int64_t p = x.p;
  QuadElem r = x;
  r.a = mod(mulmod(x.a, y.a, p) + mulmod(mulmod(x.b, y.b, p), x.d, p), p);
  r.b = mod(mulmod(x.a, y.b, p) + mulmod(x.b, y.a, p), p);
  return r;
}

QuadElem qinv(const QuadElem& x) {
  std::int64_t p = x.p;
  std::int64_t n = mod(mulmod(x.a, x.a, p) - mulmod(mulmod(x.b, x.b, p), x.d, p), p);
  if (n == 0) throw Error(Errc::DivisionByZero, "inverse of zero in GF(p^2)");
  std::int64_t ni = invmod(n, p);
  QuadElem r = x;
  r.a = mulmod(x.a, ni, p);
  r.b = mod(-mulmod(x.b, ni, p), p);
  return r;
}

void same_field(const Scalar& a, const Scalar& b) {
  const auto& x = a.storage();
  const auto& y = b.storage();
  if (x.index() != y.index()) throw Error(Errc::MixedFields, a.to_string() + " vs " + b.to_string());
  if (auto* e = std::get_if<PrimeElem>(&x)) {
    if (e->p != std::get<PrimeElem>(y).p) throw Error(Errc::MixedFields, "different primes");
  } else if (auto* q = std::get_if<QuadElem>(&x)) {
    const auto& r = std::get<QuadElem>(y);
    if (q->p != r.p || q->d != r.d) throw Error(Errc::MixedFields, "different quadratic extensions");
  }
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

bool is_square_mod(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) return true;
  return powmod(a, (p - 1) / 2, p) == 1;
}

bool Cyclo8::is_zero() const {
  for (const auto& r : c)
    if (!r.is_zero()) return false;
  return true;
}

Cyclo8 Cyclo8::galois(int k) const {
  Cyclo8 out;
  for (int i = 0; i < 4; ++i) {
    if (c[i].is_zero()) continue;
    int e = (i * k) % 8;
    if (e < 4) out.c[e] += c[i];
    else out.c[e - 4] -= c[i];
  }
  return out;
}

std::string Cyclo8::to_string() const {
  static const char* names[4] = {"", "z", "z^2", "z^3"};
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (c[i].is_zero()) continue;
    std::string coef = c[i].to_string();
    bool neg = c[i].sign() < 0;
    std::string mag = neg ? coef.substr(1) : coef;
    if (!s.empty()) s += neg ? "-" : "+";
    else if (neg) s += "-";
    if (i == 0) s += mag;
    else if (mag == "1") s += names[i];
    else s += mag + "*" + names[i];
  }
  return s.empty() ? "0" : s;
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, Cyclo8>) return x.is_zero();
        else if constexpr (std::is_same_v<T, PrimeElem>) return x.r == 0;
        else return x.a == 0 && x.b == 0;
      },
      v_);
}

bool Scalar::is_one() const { return *this == one_like(); }

Scalar Scalar::from_int_like(long long n) const {
  switch (v_.index()) {
    case 0: return Scalar(Rational(n));
    case 1: {
      Cyclo8 c;
      c.c[0] = Rational(n);
      return Scalar(c);
    }
    case 2: {
      auto e = std::get<PrimeElem>(v_);
      return Scalar(PrimeElem{mod(n, e.p), e.p});
    }
    default: {
      auto e = std::get<QuadElem>(v_);
      return Scalar(QuadElem{mod(n, e.p), 0, e.p, e.d});
    }
  }
}

Scalar Scalar::from_rational_like(long long n, long long d) const { return from_int_like(n) / from_int_like(d); }

Scalar Scalar::inverse() const {
  switch (v_.index()) {
    case 0: return Scalar(std::get<Rational>(v_).inverse());
    case 1: return Scalar(cinv(std::get<Cyclo8>(v_)));
    case 2: {
      auto e = std::get<PrimeElem>(v_);
      return Scalar(PrimeElem{invmod(e.r, e.p), e.p});
    }
    default: return Scalar(qinv(std::get<QuadElem>(v_)));
  }
}

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0: return Scalar(-std::get<Rational>(v_));
    case 1: {
      Cyclo8 c = std::get<Cyclo8>(v_);
      for (auto& r : c.c)
        if (!r.is_zero()) r = -r;
      return Scalar(c);
    }
    case 2: {
      auto e = std::get<PrimeElem>(v_);
      return Scalar(PrimeElem{mod(-e.r, e.p), e.p});
    }
    default: {
      auto e = std::get<QuadElem>(v_);
      e.a = mod(-e.a, e.p);
      e.b = mod(-e.b, e.p);
      return Scalar(e);
    }
  }
}

std::string Scalar::to_string() const {
  switch (v_.index()) {
    case 0: return std::get<Rational>(v_).to_string();
    case 1: return std::get<Cyclo8>(v_).to_string();
    case 2: return std::to_string(std::get<PrimeElem>(v_).r);
    default: {
      auto e = std::get<QuadElem>(v_);
      if (e.b == 0) return std::to_string(e.a);
      std::string t = (e.b == 1 ? "" : std::to_string(e.b) + "*") + "t";
      return e.a == 0 ? t : std::to_string(e.a) + "+" + t;
    }
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  same_field(a, b);
  switch (a.v_.index()) {
    case 0: return Scalar(std::get<Rational>(a.v_) + std::get<Rational>(b.v_));
    case 1: {
      Cyclo8 c = std::get<Cyclo8>(a.v_);
      const auto& d = std::get<Cyclo8>(b.v_);
      for (int i = 0; i < 4; ++i)
        if (!d.c[i].is_zero()) c.c[i] += d.c[i];
      return Scalar(c);
    }
    case 2: {
      auto x = std::get<PrimeElem>(a.v_);
      x.r = mod(x.r + std::get<PrimeElem>(b.v_).r, x.p);
      return Scalar(x);
    }
    default: {
      auto x = std::get<QuadElem>(a.v_);
      const auto& y = std::get<QuadElem>(b.v_);
      x.a = mod(x.a + y.a, x.p);
      x.b = mod(x.b + y.b, x.p);
      return Scalar(x);
    }
  }
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  same_field(a, b);
  switch (a.v_.index()) {
    case 0: return Scalar(std::get<Rational>(a.v_) * std::get<Rational>(b.v_));
    case 1: return Scalar(cmul(std::get<Cyclo8>(a.v_), std::get<Cyclo8>(b.v_)));
    case 2: {
      auto x = std::get<PrimeElem>(a.v_);
      x.r = mulmod(x.r, std::get<PrimeElem>(b.v_).r, x.p);
      return Scalar(x);
    }
    default: return Scalar(qmul(std::get<QuadElem>(a.v_), std::get<QuadElem>(b.v_)));
  }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  same_field(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  same_field(a, b);
  return a.v_ == b.v_;
}

FieldDescriptor::FieldDescriptor(FieldKind k, std::int64_t p, std::int64_t d) : kind_(k), p_(p), d_(d) {
  choose_roots();
}

FieldDescriptor FieldDescriptor::rationals() { return FieldDescriptor(FieldKind::Rationals, 0, 0); }
FieldDescriptor FieldDescriptor::cyclo8() { return FieldDescriptor(FieldKind::Cyclo8, 0, 0); }

FieldDescriptor FieldDescriptor::gfp(std::int64_t p) {
  if (p == 2 || !is_prime(p)) throw Error(Errc::PreconditionViolated, "GF(p) needs an odd prime, got " + std::to_string(p));
  if (p > (std::int64_t{1} << 31)) throw Error(Errc::PreconditionViolated, "prime too large");
  return FieldDescriptor(FieldKind::GFp, p, 0);
}

FieldDescriptor FieldDescriptor::gfp2(std::int64_t p, std::int64_t d) {
  if (p == 2 || !is_prime(p)) throw Error(Errc::PreconditionViolated, "GF(p^2) needs an odd prime, got " + std::to_string(p));
  if (p > (std::int64_t{1} << 31)) throw Error(Errc::PreconditionViolated, "prime too large");
  d = mod(d, p);
  if (is_square_mod(d, p)) throw Error(Errc::PreconditionViolated, std::to_string(d) + " is a square mod " + std::to_string(p));
  return FieldDescriptor(FieldKind::GFp2, p, d);
}

FieldDescriptor FieldDescriptor::parse(const std::string& spec) {
  if (spec == "q") return rationals();
  if (spec == "qzeta8") return cyclo8();
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  try {
    if (parts.size() == 2 && parts[0] == "gf") return gfp(std::stoll(parts[1]));
    if (parts[0] == "gf2" && (parts.size() == 2 || parts.size() == 3)) {
      std::int64_t p = std::stoll(parts[1]);
      if (parts.size() == 3) return gfp2(p, std::stoll(parts[2]));
      if (p == 2 || !is_prime(p)) throw Error(Errc::PreconditionViolated, "GF(p^2) needs an odd prime");
      for (std::int64_t d = 2; d < p; ++d)
        if (!is_square_mod(d, p)) return gfp2(p, d);
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw Error(Errc::ParseError, "bad field spec '" + spec + "' (expected q|qzeta8|gf:<p>|gf2:<p>:<d>)");
}

std::int64_t FieldDescriptor::order() const {
  switch (kind_) {
    case FieldKind::GFp: return p_;
    case FieldKind::GFp2: return p_ * p_;
    default: return 0;
  }
}

const Scalar& FieldDescriptor::sqrt_minus_one() const {
  if (!i_) throw Error(Errc::NotAvailable, "no square root of -1 in " + name());
  return *i_;
}

const Scalar& FieldDescriptor::sqrt_two() const {
  if (!s2_) throw Error(Errc::NotAvailable, "no square root of 2 in " + name());
  return *s2_;
}

Scalar FieldDescriptor::from_int(long long n) const {
  switch (kind_) {
    case FieldKind::Rationals: return Scalar(Rational(n));
    case FieldKind::Cyclo8: {
      Cyclo8 c;
      c.c[0] = Rational(n);
      return Scalar(c);
    }
    case FieldKind::GFp: return Scalar(PrimeElem{mod(n, p_), p_});
    case FieldKind::GFp2: return Scalar(QuadElem{mod(n, p_), 0, p_, d_});
  }
  return {};
}

Scalar FieldDescriptor::from_rational(long long n, long long d) const { return from_int(n) / from_int(d); }

bool FieldDescriptor::contains(const Scalar& s) const {
  const auto& v = s.storage();
  switch (kind_) {
    case FieldKind::Rationals: return v.index() == 0;
    case FieldKind::Cyclo8: return v.index() == 1;
    case FieldKind::GFp: return v.index() == 2 && std::get<PrimeElem>(v).p == p_;
    case FieldKind::GFp2: {
      if (v.index() != 3) return false;
      const auto& q = std::get<QuadElem>(v);
      return q.p == p_ && q.d == d_;
    }
  }
  return false;
}

Scalar FieldDescriptor::element(std::int64_t index) const {
  if (kind_ == FieldKind::GFp) return Scalar(PrimeElem{mod(index, p_), p_});
  if (kind_ == FieldKind::GFp2) return Scalar(QuadElem{index % p_, (index / p_) % p_, p_, d_});
  throw Error(Errc::PreconditionViolated, "element enumeration needs a finite field");
}

std::int64_t FieldDescriptor::index_of(const Scalar& s) const {
  if (!contains(s)) throw Error(Errc::MixedFields, s.to_string() + " not in " + name());
  if (kind_ == FieldKind::GFp) return std::get<PrimeElem>(s.storage()).r;
  if (kind_ == FieldKind::GFp2) {
    const auto& q = std::get<QuadElem>(s.storage());
    return q.a + p_ * q.b;
  }
  throw Error(Errc::PreconditionViolated, "element enumeration needs a finite field");
}

Scalar FieldDescriptor::primitive_element() const {
  if (!is_finite()) throw Error(Errc::PreconditionViolated, "primitive element needs a finite field");
  std::int64_t q1 = order() - 1;
  std::vector<std::int64_t> primes;
  std::int64_t m = q1;
  for (std::int64_t f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      primes.push_back(f);
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) primes.push_back(m);
  auto pw = [&](Scalar x, std::int64_t e) {
    Scalar r = one();
    while (e > 0) {
      if (e & 1) r = r * x;
      x = x * x;
      e >>= 1;
    }
    return r;
  };
  for (std::int64_t k = 1; k < order(); ++k) {
    Scalar g = element(k);
    bool ok = true;
    for (auto l : primes)
      if (pw(g, q1 / l).is_one()) ok = false;
    if (ok) return g;
  }
  throw Error(Errc::NotAvailable, "no primitive element");
}

Scalar FieldDescriptor::random(std::mt19937_64& rng, int bound) const {
  if (is_finite()) {
    std::uniform_int_distribution<std::int64_t> u(0, order() - 1);
    return element(u(rng));
  }
  std::uniform_int_distribution<int> u(-bound, bound);
  std::uniform_int_distribution<int> den(1, 2);
  if (kind_ == FieldKind::Rationals) return Scalar(Rational(u(rng), den(rng)));
  Cyclo8 c;
  for (auto& r : c.c) r = Rational(u(rng), den(rng));
  return Scalar(c);
}

std::string FieldDescriptor::spec() const {
  switch (kind_) {
    case FieldKind::Rationals: return "q";
    case FieldKind::Cyclo8: return "qzeta8";
    case FieldKind::GFp: return "gf:" + std::to_string(p_);
    case FieldKind::GFp2: return "gf2:" + std::to_string(p_) + ":" + std::to_string(d_);
  }
  return "";
}

std::string FieldDescriptor::name() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Cyclo8: return "Q(zeta8)";
    case FieldKind::GFp: return "GF(" + std::to_string(p_) + ")";
    case FieldKind::GFp2: return "GF(" + std::to_string(p_) + "^2)";
  }
  return "";
}

void FieldDescriptor::choose_roots() {
  switch (kind_) {
    case FieldKind::Rationals: return;
    case FieldKind::Cyclo8: {
      Cyclo8 i;
      i.c[2] = Rational(1);
      Cyclo8 s;
      s.c[1] = Rational(1);
      s.c[3] = Rational(-1);
      i_ = Scalar(i);
      s2_ = Scalar(s);
      return;
    }
    case FieldKind::GFp:
    case FieldKind::GFp2: {
      auto find = [&](std::int64_t target) -> std::optional<Scalar> {
        Scalar t = from_int(target);
        for (std::int64_t r = 1; r < p_; ++r) {
          Scalar x = from_int(r);
          if (x * x == t) return x;
        }
        if (kind_ == FieldKind::GFp2) {
          for (std::int64_t a = 0; a < p_; ++a)
            for (std::int64_t b = 1; b < p_; ++b) {
              Scalar x(QuadElem{a, b, p_, d_});
              if (x * x == t) return x;
            }
        }
        return std::nullopt;
      };
      i_ = find(-1);
      s2_ = find(2);
      return;
    }
  }
}

}  // namespace kantorlab
