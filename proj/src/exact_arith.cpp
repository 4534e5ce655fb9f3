#include "siegel/exact_arith.hpp"

#include <array>
#include <ostream>

#include "siegel/error.hpp"

namespace siegel {

ExactRational::ExactRational(std::int64_t n) : value_(static_cast<long>(n)) {}

ExactRational::ExactRational(const BigInt& n) : value_(n) {}

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::InvalidArgument, "zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.value_ == 0) {
    throw Error(ErrorKind::InvalidArgument, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

ExactRational ExactRational::operator-() const {
  ExactRational r;
  r.value_ = -value_;
  return r;
}

std::string ExactRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt ExactRational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt ExactRational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.to_string(); }

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_grouped_string(const BigInt& n) {
  std::string digits = BigInt(abs(n)).get_str();
  std::string out;
  const std::size_t lead = digits.size() % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (i % 3) == lead) out.push_back(',');
    out.push_back(digits[i]);
  }
  return n < 0 ? "-" + out : out;
}

ExactRational pow(const ExactRational& base, int exponent) {
  ExactRational result(1);
  const int e = exponent < 0 ? -exponent : exponent;
  for (int i = 0; i < e; ++i) result *= base;
  return exponent < 0 ? ExactRational(1) / result : result;
}

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (u64 w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (p == 2) throw Error(ErrorKind::EvenPrime, "p = 2 is not an odd prime");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
  require_odd_prime(p);
  const u64 magnitude = a < 0 ? static_cast<u64>(-(a + 1)) + 1 : static_cast<u64>(a);
  u64 r = magnitude % p;
  if (a < 0 && r != 0) r = p - r;
  if (r == 0) return 0;
  const u64 e = pow_mod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

bool SquareFreeLevel::divisible_by(std::uint64_t p) const {
  for (u64 q : primes_) {
    if (q == p) return true;
  }
  return false;
}

SquareFreeLevel parse_square_free_level(std::uint64_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "level must be at least 3, got " + std::to_string(n));
  if (n % 2 == 0) throw Error(ErrorKind::EvenLevel, "level " + std::to_string(n) + " is even");
  SquareFreeLevel level;
  level.value_ = n;
  u64 rest = n;
  for (u64 q = 3; q <= rest / q; q += 2) {
    if (rest % q != 0) continue;
    rest /= q;
    if (rest % q == 0) {
      throw Error(ErrorKind::NotSquareFree,
                  "level " + std::to_string(n) + " is divisible by " + std::to_string(q) + "^2");
    }
    level.primes_.push_back(q);
  }
  if (rest > 1) level.primes_.push_back(rest);
  return level;
}

}  // namespace siegel
