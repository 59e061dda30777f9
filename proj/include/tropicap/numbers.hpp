#ifndef TROPICAP_NUMBERS_HPP
#define TROPICAP_NUMBERS_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tropicap/errors.hpp"

namespace tropicap {

// Arbitrary precision throughout; machine integers never touch math paths.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IVec = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using RVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using RMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

inline int sign_of(const Integer& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

IVec to_integer(const RVec& v);      // requires integral entries
RVec to_rational(const IVec& v);
RMat to_rational(const IMat& m);

// gcd of all entries (nonnegative); 0 for the zero vector.
Integer content(const IVec& v);

// v / content(v); direction preserved, zero vector unchanged.
IVec make_primitive(const IVec& v);

// Smallest D > 0 with D*v integral, and the integer vector D*v.
Integer common_denominator(const RVec& v);
IVec clear_denominators(const RVec& v);

// Primitive integer vector with the same direction as the rational v.
IVec primitive_direction(const RVec& v);

Rational dot(const RVec& a, const RVec& b);
Integer dot(const IVec& a, const IVec& b);
Rational dot(const IVec& a, const RVec& b);

// Exact coefficient-wise predicates (Eigen's own are approximation-based).
bool is_zero(const IVec& v);
bool is_zero(const RVec& v);
bool vec_eq(const IVec& a, const IVec& b);
bool vec_eq(const RVec& a, const RVec& b);
bool is_symmetric(const RMat& m);

// Canonical "p/q" (or "p") decimal string and its inverse.
std::string rat_to_string(const Rational& r);
Rational rat_from_string(const std::string& s);  // throws Errc::parse_error
std::string int_to_string(const Integer& z);
Integer int_from_string(const std::string& s);

IVec ivec_from(std::initializer_list<long> xs);
RVec rvec_from(std::initializer_list<long> xs);

// Deterministic seeded RNG. mt19937_64 is fully specified by the standard,
// so identical seeds give identical streams on every platform. Distribution
// mapping is done by hand for the same reason.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform integer in [lo, hi], inclusive, via rejection sampling.
    long next_in(long lo, long hi);

    // Derive an independent deterministic substream.
    Rng fork(std::uint64_t salt);

  private:
    std::mt19937_64 eng_;
};

}  // namespace tropicap

#endif
