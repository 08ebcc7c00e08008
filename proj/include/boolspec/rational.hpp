#pragma once

// Exact rational arithmetic used for every reported spectral quantity.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace boolspec {

using BigInt = boost::multiprecision::cpp_int;

// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  // cpp_rational rejects negative denominators outright.
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

/// value / 2^shift, the natural form of a Fourier coefficient or weight.
inline Rational dyadic(const BigInt& value, unsigned shift) {
  return Rational(value, BigInt(1) << shift);
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "num/den" in lowest terms; integers keep the "/1".
inline std::string to_fraction_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Accepts "p/q", "p", or a plain decimal such as "0.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto digits_only = [](std::string_view d, bool allow_sign) {
    if (d.empty()) return false;
    std::size_t k = 0;
    if (allow_sign && (d[0] == '-' || d[0] == '+')) k = 1;
    if (k == d.size()) return false;
    for (; k < d.size(); ++k)
      if (d[k] < '0' || d[k] > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view d) {
    if (!d.empty() && d[0] == '+') d.remove_prefix(1);
    return BigInt(std::string(d));
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string_view num(s.data(), slash), den(s.data() + slash + 1, s.size() - slash - 1);
    if (!digits_only(num, true) || !digits_only(den, false))
      throw std::invalid_argument("malformed rational: " + s);
    return make_rational(to_int(num), to_int(den));
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (!digits_only(whole, false) || (!frac.empty() && !digits_only(frac, false)))
      throw std::invalid_argument("malformed rational: " + s);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt num = BigInt(whole) * scale + (frac.empty() ? BigInt(0) : BigInt(frac));
    return Rational(negative ? BigInt(-num) : num, scale);
  }
  if (!digits_only(s, true)) throw std::invalid_argument("malformed rational: " + s);
  return Rational(to_int(s));
}

}  // namespace boolspec
