#ifndef INTERSECTQ_EXACTMATH_HPP
#define INTERSECTQ_EXACTMATH_HPP

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace intersectq {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Thrown when two values from different quadratic fields are combined.
class FieldMismatch : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Exact element a + b*sqrt(d) of a real quadratic field Q(sqrt d).
 *
 * d is a small square-free positive integer. Plain rationals use d = 1 and
 * always carry b = 0. Rational values mix freely with any field; two
 * elements with different d > 1 cannot be combined.
 */
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(int v) : a_(v) {}
    QuadElem(long v) : a_(v) {}
    QuadElem(long long v) : a_(v) {}
    QuadElem(const Integer& v) : a_(v) {}
    QuadElem(Rational a) : a_(std::move(a)) {}
    QuadElem(Rational a, Rational b, int d);

    /// b * sqrt(d)
    static QuadElem surd(Rational b, int d) { return QuadElem(Rational(0), std::move(b), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    int field() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Exact sign of the real number a + b*sqrt(d).
    int sign() const;
    QuadElem conj() const { return QuadElem(a_, -b_, d_); }
    /// a^2 - d b^2
    Rational field_norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
    double to_double() const;

    QuadElem operator-() const { return QuadElem(-a_, -b_, d_); }
    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);
    QuadElem& operator/=(const QuadElem& o);

    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

    friend bool operator==(const QuadElem& x, const QuadElem& y);
    friend std::strong_ordering operator<=>(const QuadElem& x, const QuadElem& y);

private:
    static int join_field(int d1, int d2);
    void normalize();

    Rational a_;
    Rational b_;
    int d_ = 1;
};

QuadElem abs(const QuadElem& x);
/// Largest integer <= x.
Integer floor(const QuadElem& x);
/// Nearest integer, halves rounded down.
Integer round_half_down(const QuadElem& x);
bool is_integer(const QuadElem& x);

/// Canonical serialization: "p/q", "p/q*w", "p/q+r/s*w" (w = sqrt d).
std::string to_string(const QuadElem& x);
/// Human-facing rendering: "sqrt3/2", "5*sqrt3/72", "1/8".
std::string to_text(const QuadElem& x);
/// Parses either rendering. `field` fixes d for "w"; 0 means infer from a
/// "sqrtD" token or default to 1.
QuadElem parse_scalar(std::string_view s, int field = 0);
std::ostream& operator<<(std::ostream& os, const QuadElem& x);

using FieldVec = std::vector<QuadElem>;

QuadElem dot(const FieldVec& x, const FieldVec& y);
QuadElem norm(const FieldVec& x);
FieldVec operator+(const FieldVec& x, const FieldVec& y);
FieldVec operator-(const FieldVec& x, const FieldVec& y);
FieldVec operator*(const QuadElem& s, const FieldVec& x);
bool is_zero(const FieldVec& x);
/// Lexicographic exact comparison.
struct FieldVecLess {
    bool operator()(const FieldVec& x, const FieldVec& y) const;
};
std::vector<double> to_double(const FieldVec& x);
/// Common field of all entries (1 if all rational).
int field_of(const FieldVec& x);

/// Dense row-major matrix over a quadratic field.
class FieldMat {
public:
    FieldMat() = default;
    FieldMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static FieldMat identity(std::size_t n);
    static FieldMat from_rows(const std::vector<FieldVec>& rows);
    /// Integer rows, optionally divided by a common denominator.
    static FieldMat from_ints(const std::vector<std::vector<long long>>& rows, long long denom = 1);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    QuadElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const QuadElem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    FieldVec row(std::size_t i) const;
    std::vector<FieldVec> row_list() const;
    FieldMat transpose() const;
    int field() const;

    friend FieldMat operator*(const FieldMat& x, const FieldMat& y);
    friend FieldMat operator*(const QuadElem& s, const FieldMat& x);
    friend bool operator==(const FieldMat& x, const FieldMat& y) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<QuadElem> data_;
};

/// Row vector times matrix: x * M.
FieldVec operator*(const FieldVec& x, const FieldMat& m);

QuadElem det(const FieldMat& m);
std::size_t rank(const FieldMat& m);
std::optional<FieldMat> inverse(const FieldMat& m);
/// Solves A x = b for square A; nullopt when A is singular.
std::optional<FieldVec> solve(const FieldMat& a, const FieldVec& b);

/// Integer matrix used for Hermite normal form canonicalization.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMat from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    friend IntMat operator*(const IntMat& x, const IntMat& y);
    friend bool operator==(const IntMat& x, const IntMat& y) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Row-style Hermite normal form of the row span; zero rows are dropped.
/// Upper triangular (echelon), positive pivots, entries above each pivot in [0, pivot).
IntMat hnf(const IntMat& m);

/// Canonical basis of the Z-span of `rows`: the Hermite normal form of the
/// rational embedding (a-parts then b-parts when field > 1), mapped back.
/// Equal spans give identical output.
std::vector<FieldVec> canonical_span(const std::vector<FieldVec>& rows, int field);

}  // namespace intersectq

#endif
