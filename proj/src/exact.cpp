#include "diamcensus/exact.hpp"

#include <cctype>

namespace diamcensus {

BigCount BigCount::from_decimal(const std::string& s) {
  if (s.empty()) throw domain_error("BigCount: empty decimal string");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw domain_error("BigCount: bad decimal string '" + s + "'");
  return BigCount(mpz_class(s, 10));
}

std::uint64_t BigCount::to_u64() const {
  if (mpz_sizeinbase(v_.get_mpz_t(), 2) > 64)
    throw domain_error("BigCount: value does not fit in 64 bits");
  std::uint64_t lo = mpz_get_ui(v_.get_mpz_t());
  if (mpz_sizeinbase(v_.get_mpz_t(), 2) > 32) {
    mpz_class hi = v_ >> 32;
    // mpz_get_ui truncates to an unsigned long; reassemble explicitly so the
    // result is well defined even if unsigned long were 32 bits.
    lo = (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
         (static_cast<std::uint64_t>(mpz_get_ui(v_.get_mpz_t())) & 0xffffffffu);
  }
  return lo;
}

BigCount BigCount::div_exact(const BigCount& d) const {
  if (d.v_ == 0) throw domain_error("BigCount: division by zero");
  if (!mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()))
    throw domain_error("BigCount: inexact division " + to_decimal() + " / " + d.to_decimal());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return BigCount(std::move(q));
}

BigRatio::BigRatio(const BigCount& num, const BigCount& den) {
  if (den.is_zero()) throw domain_error("BigRatio: zero denominator");
  v_ = mpq_class(num.raw());
  v_ /= mpq_class(den.raw());
}

BigRatio& BigRatio::operator/=(const BigRatio& o) {
  if (o.v_ == 0) throw domain_error("BigRatio: division by zero");
  v_ /= o.v_;
  return *this;
}

BigCount BigRatio::to_count() const {
  if (!is_integer()) throw domain_error("BigRatio: not an integer: " + to_fraction_string());
  return BigCount(mpz_class(v_.get_num()));
}

namespace {

mpz_class pow10_z(unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

}  // namespace

std::string BigRatio::to_decimal(int significant) const {
  if (significant < 1) throw domain_error("to_decimal: need at least one digit");
  if (v_ == 0) return "0";
  const bool neg = v_ < 0;
  mpz_class a = abs(v_.get_num());
  mpz_class b = v_.get_den();

  // e = floor(log10(a/b)), found by digit-count estimate then exact adjustment.
  long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  auto ten_pow_le = [&](long k) {
    // true iff 10^k <= a/b
    if (k >= 0) return b * pow10_z(static_cast<unsigned long>(k)) <= a;
    return b <= a * pow10_z(static_cast<unsigned long>(-k));
  };
  while (!ten_pow_le(e)) --e;
  while (ten_pow_le(e + 1)) ++e;

  // digits = round(a/b * 10^(significant-1-e)), half away from zero.
  const long k = significant - 1 - e;
  mpz_class num = a, den = b;
  if (k >= 0)
    num *= pow10_z(static_cast<unsigned long>(k));
  else
    den *= pow10_z(static_cast<unsigned long>(-k));
  mpz_class digits, rem;
  mpz_fdiv_qr(digits.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) ++digits;
  std::string d = digits.get_str();
  if (static_cast<int>(d.size()) > significant) {
    // rounding carried into a new leading digit (e.g. 999.. -> 1000..)
    d = d.substr(0, significant);
    ++e;
  }

  std::string out;
  if (e >= -4 && e < significant) {
    if (e >= 0) {
      out = d.substr(0, e + 1);
      std::string frac = d.substr(e + 1);
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      if (!frac.empty()) out += "." + frac;
    } else {
      std::string frac = std::string(-e - 1, '0') + d;
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      out = "0." + frac;
    }
  } else {
    std::string frac = d.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = d.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    out += "e";
    out += (e >= 0 ? "+" : "-");
    out += std::to_string(e >= 0 ? e : -e);
  }
  return neg ? "-" + out : out;
}

BigCount factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return BigCount(std::move(r));
}

BigCount falling_factorial(unsigned long n, unsigned long k) {
  if (k > n + 1)
    throw domain_error("falling_factorial: negative factor with n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
  mpz_class r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= static_cast<unsigned long>(n - i);
  return BigCount(std::move(r));
}

BigCount binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return BigCount(std::move(r));
}

BigCount multinomial(unsigned long n, const std::vector<unsigned long>& parts) {
  unsigned long sum = 0;
  for (unsigned long p : parts) sum += p;
  if (sum != n)
    throw domain_error("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                       std::to_string(n));
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  for (unsigned long p : parts) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), p);
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t());
  }
  return BigCount(std::move(r));
}

BigCount pow2(unsigned long e) {
  mpz_class r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return BigCount(std::move(r));
}

BigCount pow2_choose2(unsigned long n) {
  return pow2(n * (n - 1) / 2);
}

BigCount pow_count(const BigCount& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), e);
  return BigCount(std::move(r));
}

BigRatio pow_ratio(const BigRatio& base, unsigned long e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), e);
  mpq_class q(n);
  q /= mpq_class(d);
  return BigRatio(std::move(q));
}

}  // namespace diamcensus
