#include "repmatch/bigint.hpp"

#include <stdexcept>

namespace repmatch {

int ceil_log2(const BigInt& x) {
  if (x <= 0) throw std::invalid_argument("ceil_log2: argument must be >= 1");
  if (x == 1) return 0;
  const BigInt y = x - 1;
  return static_cast<int>(boost::multiprecision::msb(y)) + 1;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is binomial(n-k+i, i)
  }
  return r;
}

BigInt pow_int(const BigInt& base, int exp) {
  if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
  BigInt r = 1, b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

std::string rational_string(const BigRat& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const BigRat& v, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
  if (v == 0) return "0";

  BigInt a = boost::multiprecision::numerator(v);
  const BigInt b = boost::multiprecision::denominator(v);
  const bool neg = a < 0;
  if (neg) a = -a;

  // e10 = floor(log10(a/b)): the unique e with b*10^e <= a < b*10^(e+1).
  long e10 = static_cast<long>(a.str().size()) - static_cast<long>(b.str().size());
  while (b * pow_int(10, static_cast<int>(std::max<long>(e10, 0))) >
         a * pow_int(10, static_cast<int>(std::max<long>(-e10, 0)))) {
    --e10;
  }
  while (b * pow_int(10, static_cast<int>(std::max<long>(e10 + 1, 0))) <=
         a * pow_int(10, static_cast<int>(std::max<long>(-(e10 + 1), 0)))) {
    ++e10;
  }

  // Round a/b to `digits` significant digits: round(a * 10^(digits-1-e10) / b).
  const long shift = digits - 1 - e10;
  BigInt num = a * pow_int(10, static_cast<int>(std::max<long>(shift, 0)));
  BigInt den = b * pow_int(10, static_cast<int>(std::max<long>(-shift, 0)));
  BigInt scaled = (2 * num + den) / (2 * den);  // half-up
  if (scaled >= pow_int(10, digits)) {          // rounding carried over
    scaled /= 10;
    ++e10;
  }

  std::string m = scaled.str();  // exactly `digits` characters
  std::string out;
  if (e10 >= -4 && e10 < digits + 3) {
    if (e10 >= 0) {
      std::string ip = m.substr(0, static_cast<size_t>(e10) + 1);
      std::string fp = m.size() > static_cast<size_t>(e10) + 1
                           ? m.substr(static_cast<size_t>(e10) + 1)
                           : std::string();
      if (ip.size() > static_cast<size_t>(e10) + 1) ip = m;  // defensive
      while (ip.size() < static_cast<size_t>(e10) + 1) ip += '0';
      while (!fp.empty() && fp.back() == '0') fp.pop_back();
      out = fp.empty() ? ip : ip + "." + fp;
    } else {
      std::string fp(static_cast<size_t>(-e10 - 1), '0');
      fp += m;
      while (!fp.empty() && fp.back() == '0') fp.pop_back();
      out = "0." + fp;
    }
  } else {
    std::string mm = m;
    while (mm.size() > 1 && mm.back() == '0') mm.pop_back();
    out = mm.substr(0, 1);
    if (mm.size() > 1) out += "." + mm.substr(1);
    out += "e" + std::to_string(e10);
  }
  return neg ? "-" + out : out;
}

}  // namespace repmatch
