#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace octc {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

using IntVec = std::vector<BigInt>;
using RatVec = std::vector<BigRational>;

// Raised when an internal consistency check fails (a named, recoverable
// verdict rather than a crash).
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

BigInt num(const BigRational& q);
BigInt den(const BigRational& q);
bool is_integer(const BigRational& q);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& b);
long to_long(const BigInt& a);
double to_double(const BigRational& q);

std::string to_string(const BigInt& a);
std::string to_string(const BigRational& q);
BigRational parse_rational(const std::string& s);

RatVec to_rat(const IntVec& v);
IntVec to_int_vec(const std::vector<long>& v);
RatVec to_rat_vec(const std::vector<long>& v);
BigRational dot(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);
// Smallest positive integer multiple with coprime integer entries.
IntVec primitive(const RatVec& v);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace octc
