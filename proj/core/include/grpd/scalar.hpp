#ifndef GRPD_SCALAR_HPP
#define GRPD_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "grpd/groupoid.hpp"

namespace grpd {

/// Exact rationals, backed by GMP. Elements are always canonical
/// (reduced, positive denominator).
struct RationalField {
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  bool is_zero(const Element& x) const { return sgn(x) == 0; }
  Element inv(const Element& x) const {
    if (is_zero(x)) throw std::domain_error("division by zero");
    return Element(1) / x;
  }
  std::string to_string(const Element& x) const {
    return x.get_str();  // "n" or "n/d", canonical
  }
  Element from_string(const std::string& s) const;
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

/// The prime field Z/p for a runtime prime p <= 2^31. Elements carry their
/// modulus so that arithmetic stays a plain value operation.
struct FpElem {
  std::uint32_t v = 0;
  std::uint32_t p = 0;

  friend FpElem operator+(FpElem a, FpElem b) {
    return {std::uint32_t((std::uint64_t(a.v) + b.v) % a.p), a.p};
  }
  friend FpElem operator-(FpElem a, FpElem b) {
    return {std::uint32_t((std::uint64_t(a.v) + a.p - b.v) % a.p), a.p};
  }
  friend FpElem operator*(FpElem a, FpElem b) {
    return {std::uint32_t(std::uint64_t(a.v) * b.v % a.p), a.p};
  }
  friend FpElem operator-(FpElem a) { return {std::uint32_t((a.p - a.v) % a.p), a.p}; }
  FpElem& operator+=(FpElem b) { return *this = *this + b; }
  FpElem& operator-=(FpElem b) { return *this = *this - b; }
  FpElem& operator*=(FpElem b) { return *this = *this * b; }
  friend bool operator==(FpElem a, FpElem b) { return a.v == b.v; }
};

bool is_prime_u32(std::uint32_t n);

class PrimeField {
 public:
  using Element = FpElem;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p > (1u << 31) || !is_prime_u32(p))
      throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime <= 2^31");
  }

  std::uint32_t modulus() const { return p_; }
  Element zero() const { return {0, p_}; }
  Element one() const { return {1 % p_, p_}; }
  Element from_int(long v) const {
    long r = v % long(p_);
    if (r < 0) r += p_;
    return {std::uint32_t(r), p_};
  }
  bool is_zero(const Element& x) const { return x.v == 0; }
  Element inv(const Element& x) const;
  std::string to_string(const Element& x) const { return std::to_string(x.v); }
  Element from_string(const std::string& s) const;
  std::string name() const { return "Fp:" + std::to_string(p_); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline PrimeField::Element PrimeField::inv(const Element& x) const {
  if (x.v == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
  // Extended Euclid on (x.v, p).
  std::int64_t t = 0, new_t = 1, r = p_, new_r = x.v;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return {std::uint32_t(t), p_};
}

inline RationalField::Element RationalField::from_string(const std::string& s) const {
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  bool slash_seen = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] == '/' && !slash_seen && k > i && k + 1 < s.size()) { slash_seen = true; continue; }
    if (s[k] < '0' || s[k] > '9')
      throw ParseError("bad rational literal '" + s + "'");
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("bad rational literal '" + s + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline PrimeField::Element PrimeField::from_string(const std::string& s) const {
  // Accepts "n", "-n" and "n/d" (meaning n * d^-1 mod p).
  auto slash = s.find('/');
  RationalField q;
  if (slash == std::string::npos) {
    mpq_class r = q.from_string(s);
    mpz_class red = mpz_class(r.get_num()) % p_;
    if (red < 0) red += p_;
    return {std::uint32_t(red.get_ui()), p_};
  }
  mpq_class r = q.from_string(s);
  mpz_class num = r.get_num() % p_, den = r.get_den() % p_;
  if (num < 0) num += p_;
  Element n{std::uint32_t(num.get_ui()), p_};
  Element d{std::uint32_t(den.get_ui()), p_};
  return n * inv(d);
}

using FieldVariant = std::variant<RationalField, PrimeField>;

/// Parses a field selector: "Q" or "Fp:<p>" with p prime.
inline FieldVariant parse_field_spec(const std::string& spec) {
  if (spec == "Q") return RationalField{};
  if (spec.rfind("Fp:", 0) == 0) {
    const std::string num = spec.substr(3);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad field spec '" + spec + "'");
    unsigned long p = std::stoul(num);
    if (p > (1ul << 31)) throw ParseError("modulus out of range in '" + spec + "'");
    try {
      return PrimeField(std::uint32_t(p));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown field '" + spec + "' (expected \"Q\" or \"Fp:<p>\")");
}

template <class Fn>
decltype(auto) with_field(const std::string& spec, Fn&& fn) {
  FieldVariant f = parse_field_spec(spec);
  return std::visit([&](auto&& field) { return fn(field); }, f);
}

}  // namespace grpd

#endif
