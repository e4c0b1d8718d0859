#include "octc/exact/number.hpp"

#include <sstream>

namespace octc {

BigInt num(const BigRational& q) { return boost::multiprecision::numerator(q); }
BigInt den(const BigRational& q) { return boost::multiprecision::denominator(q); }

bool is_integer(const BigRational& q) { return den(q) == 1; }

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DivisionByZero();
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& b) { return a - floor_div(a, b) * b; }

long to_long(const BigInt& a) { return a.convert_to<long>(); }

double to_double(const BigRational& q) { return q.convert_to<double>(); }

std::string to_string(const BigInt& a) { return a.str(); }

std::string to_string(const BigRational& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

BigRational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return BigRational(BigInt(s));
  BigInt d(s.substr(slash + 1));
  if (d == 0) throw DivisionByZero();
  return BigRational(BigInt(s.substr(0, slash)), d);
}

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVec to_int_vec(const std::vector<long>& v) {
  IntVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

RatVec to_rat_vec(const std::vector<long>& v) {
  RatVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

BigRational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: dimension mismatch");
  BigRational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVec primitive(const RatVec& v) {
  BigInt l = 1;
  for (const auto& x : v) l = lcm(l, den(x));
  IntVec out;
  BigInt g = 0;
  for (const auto& x : v) {
    out.push_back(num(x * l));
    g = gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

template <class V>
static std::string join(const V& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ")";
  return os.str();
}

std::string to_string(const IntVec& v) { return join(v); }
std::string to_string(const RatVec& v) { return join(v); }

}  // namespace octc
