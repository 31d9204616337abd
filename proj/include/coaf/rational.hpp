#ifndef COAF_RATIONAL_HPP
#define COAF_RATIONAL_HPP

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coaf {

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<Rational>;
using Matrix = MatrixX<Rational>;

/// Thrown for malformed input data (bad strings, dimension mismatch, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or "-p/q". Whitespace is not accepted.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

std::string to_string(const Vector& v);

inline int sign(const Rational& value) { return value.sign(); }

Rational pow(const Rational& base, unsigned exponent);

Vector make_vector(std::initializer_list<Rational> values);

/// Scales a nonzero direction to the primitive integer vector with the same
/// orientation. The zero vector is returned unchanged.
Vector primitive(const Vector& v);

/// Lexicographic strict ordering, used for canonical sorting.
bool lex_less(const Vector& a, const Vector& b);

bool equal(const Vector& a, const Vector& b);

}  // namespace coaf

#endif  // COAF_RATIONAL_HPP
