#include "intersectq/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace intersectq {

QuadElem::QuadElem(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d)
{
    if (d < 1)
        throw std::invalid_argument("quadratic field parameter must be positive");
    normalize();
}

void QuadElem::normalize()
{
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
}

int QuadElem::join_field(int d1, int d2)
{
    if (d1 == d2 || d2 == 1)
        return d1;
    if (d1 == 1)
        return d2;
    throw FieldMismatch("cannot combine Q(sqrt " + std::to_string(d1) + ") with Q(sqrt " + std::to_string(d2) +
                        ")");
}

int QuadElem::sign() const
{
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    // opposite signs: compare a^2 with d b^2
    const Rational lhs = a_ * a_;
    const Rational rhs = Rational(d_) * b_ * b_;
    return lhs > rhs ? sa : sb;
}

double QuadElem::to_double() const
{
    double v = a_.convert_to<double>();
    if (b_ != 0)
        v += b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
    return v;
}

QuadElem& QuadElem::operator+=(const QuadElem& o)
{
    d_ = join_field(d_, o.d_);
    a_ += o.a_;
    if (o.b_ != 0)
        b_ += o.b_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o)
{
    d_ = join_field(d_, o.d_);
    a_ -= o.a_;
    if (o.b_ != 0)
        b_ -= o.b_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o)
{
    d_ = join_field(d_, o.d_);
    if (b_ == 0 && o.b_ == 0) {
        a_ *= o.a_;
        return *this;
    }
    if (o.b_ == 0) {
        a_ *= o.a_;
        b_ *= o.a_;
        return *this;
    }
    if (b_ == 0) {
        b_ = a_ * o.b_;
        a_ *= o.a_;
        return *this;
    }
    Rational na = a_ * o.a_ + Rational(d_) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    if (o.b_ == 0) {
        d_ = join_field(d_, o.d_);
        a_ /= o.a_;
        if (b_ != 0)
            b_ /= o.a_;
        return *this;
    }
    const Rational n = o.field_norm();
    *this *= o.conj();
    a_ /= n;
    b_ /= n;
    return *this;
}

bool operator==(const QuadElem& x, const QuadElem& y)
{
    if (x.a_ != y.a_ || x.b_ != y.b_)
        return false;
    return x.b_ == 0 || x.d_ == y.d_;
}

std::strong_ordering operator<=>(const QuadElem& x, const QuadElem& y)
{
    if (x.b_ == 0 && y.b_ == 0) {
        const int c = x.a_.compare(y.a_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

QuadElem abs(const QuadElem& x)
{
    return x.sign() < 0 ? -x : x;
}

Integer floor(const QuadElem& x)
{
    Integer k;
    if (x.is_rational()) {
        const Rational& r = x.rational_part();
        Integer n = boost::multiprecision::numerator(r);
        Integer d = boost::multiprecision::denominator(r);
        k = n / d;  // truncates toward zero
        if (n.sign() < 0 && k * d != n)
            k -= 1;
        return k;
    }
    k = Integer(static_cast<long long>(std::floor(x.to_double())));
    while (QuadElem(k) > x)
        k -= 1;
    while (QuadElem(Integer(k + 1)) <= x)
        k += 1;
    return k;
}

Integer round_half_down(const QuadElem& x)
{
    // nearest integer; x = k + 1/2 maps to k
    Integer k = floor(x);
    QuadElem frac = x - QuadElem(k);
    if (frac > QuadElem(Rational(1, 2)))
        k += 1;
    return k;
}

bool is_integer(const QuadElem& x)
{
    return x.is_rational() && boost::multiprecision::denominator(x.rational_part()) == 1;
}

namespace {

std::string rational_string(const Rational& r)
{
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

std::string surd_text(const Rational& b, int d)
{
    std::ostringstream os;
    const Integer num = boost::multiprecision::numerator(b);
    const Integer den = boost::multiprecision::denominator(b);
    if (num == 1)
        os << "sqrt" << d;
    else if (num == -1)
        os << "-sqrt" << d;
    else
        os << num << "*sqrt" << d;
    if (den != 1)
        os << '/' << den;
    return os.str();
}

}  // namespace

std::string to_string(const QuadElem& x)
{
    if (x.is_rational())
        return rational_string(x.rational_part());
    std::string s;
    if (x.rational_part() != 0) {
        s = rational_string(x.rational_part());
        if (x.surd_part() > 0)
            s += '+';
    }
    s += rational_string(x.surd_part()) + "*w";
    return s;
}

std::string to_text(const QuadElem& x)
{
    if (x.is_rational())
        return rational_string(x.rational_part());
    std::string s;
    if (x.rational_part() != 0) {
        s = rational_string(x.rational_part());
        if (x.surd_part() > 0)
            s += '+';
    }
    return s + surd_text(x.surd_part(), x.field());
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x)
{
    return os << to_string(x);
}

namespace {

// One additive term: integers joined by '*' and '/', at most one surd token.
// "12", "0.35", "2." as exact rationals
Rational parse_decimal(std::string_view tok)
{
    const auto dot = tok.find('.');
    const std::string_view whole = tok.substr(0, dot);
    const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : tok.substr(dot + 1);
    auto digits = [](std::string_view t) { return std::all_of(t.begin(), t.end(), ::isdigit); };
    if ((whole.empty() && frac.empty()) || !digits(whole) || !digits(frac))
        throw std::invalid_argument("bad number '" + std::string(tok) + "'");
    std::string all = std::string(whole) + std::string(frac);
    // a leading zero would select octal in the integer parser
    all.erase(0, std::min(all.find_first_not_of('0'), all.size() - 1));
    Integer scale(1);
    for (std::size_t i = 0; i < frac.size(); ++i)
        scale *= 10;
    return Rational(Integer(all), scale);
}

QuadElem parse_term(std::string_view term, bool negative, int& field)
{
    if (term.empty())
        throw std::invalid_argument("empty scalar term");
    Rational value(1);
    bool surd = false;
    char op = '*';
    std::size_t pos = 0;
    while (pos <= term.size()) {
        std::size_t next = term.find_first_of("*/", pos);
        if (next == std::string_view::npos)
            next = term.size();
        std::string_view tok = term.substr(pos, next - pos);
        if (tok.empty())
            throw std::invalid_argument("malformed scalar term '" + std::string(term) + "'");
        Rational factor;
        if (tok == "w") {
            if (surd || op != '*')
                throw std::invalid_argument("misplaced surd in '" + std::string(term) + "'");
            surd = true;
            factor = 1;
        } else if (tok.starts_with("sqrt")) {
            if (surd || op != '*')
                throw std::invalid_argument("misplaced surd in '" + std::string(term) + "'");
            const std::string digits(tok.substr(4));
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
                throw std::invalid_argument("bad surd token '" + std::string(tok) + "'");
            const int d = std::stoi(digits);
            if (field != 0 && field != d)
                throw FieldMismatch("surd sqrt" + digits + " in a Q(sqrt " + std::to_string(field) + ") context");
            field = d;
            surd = true;
            factor = 1;
        } else {
            factor = parse_decimal(tok);
        }
        if (op == '*')
            value *= factor;
        else {
            if (factor == 0)
                throw std::invalid_argument("zero denominator in '" + std::string(term) + "'");
            value /= factor;
        }
        if (next == term.size())
            break;
        op = term[next];
        pos = next + 1;
    }
    if (negative)
        value = -value;
    if (!surd)
        return QuadElem(value);
    if (field == 0)
        throw std::invalid_argument("surd 'w' without a field");
    return QuadElem::surd(value, field);
}

}  // namespace

QuadElem parse_scalar(std::string_view text, int field)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty scalar");
    // infer the field first so 'w' in an earlier term resolves
    int inferred = field;
    if (inferred == 0) {
        auto p = s.find("sqrt");
        if (p != std::string::npos) {
            std::size_t e = p + 4;
            while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e])))
                ++e;
            if (e > p + 4)
                inferred = std::stoi(s.substr(p + 4, e - p - 4));
        }
    }
    QuadElem total;
    std::size_t start = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        start = 1;
    }
    for (std::size_t i = start; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '+' || s[i] == '-') {
            total += parse_term(std::string_view(s).substr(start, i - start), negative, inferred);
            if (i < s.size()) {
                negative = s[i] == '-';
                start = i + 1;
            }
        }
    }
    return total;
}

QuadElem dot(const FieldVec& x, const FieldVec& y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("dot: dimension mismatch");
    QuadElem s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero())
            s += x[i] * y[i];
    return s;
}

QuadElem norm(const FieldVec& x)
{
    return dot(x, x);
}

FieldVec operator+(const FieldVec& x, const FieldVec& y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("vector add: dimension mismatch");
    FieldVec r(x);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += y[i];
    return r;
}

FieldVec operator-(const FieldVec& x, const FieldVec& y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("vector sub: dimension mismatch");
    FieldVec r(x);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= y[i];
    return r;
}

FieldVec operator*(const QuadElem& s, const FieldVec& x)
{
    FieldVec r(x);
    for (auto& v : r)
        v *= s;
    return r;
}

bool is_zero(const FieldVec& x)
{
    return std::all_of(x.begin(), x.end(), [](const QuadElem& v) { return v.is_zero(); });
}

bool FieldVecLess::operator()(const FieldVec& x, const FieldVec& y) const
{
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::vector<double> to_double(const FieldVec& x)
{
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = x[i].to_double();
    return r;
}

int field_of(const FieldVec& x)
{
    int d = 1;
    for (const auto& v : x)
        if (!v.is_rational()) {
            if (d != 1 && d != v.field())
                throw FieldMismatch("mixed fields in vector");
            d = v.field();
        }
    return d;
}

FieldMat FieldMat::identity(std::size_t n)
{
    FieldMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

FieldMat FieldMat::from_rows(const std::vector<FieldVec>& rows)
{
    if (rows.empty())
        return {};
    FieldMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

FieldMat FieldMat::from_ints(const std::vector<std::vector<long long>>& rows, long long denom)
{
    if (rows.empty())
        return {};
    FieldMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m(i, j) = QuadElem(Rational(rows[i][j], denom));
    }
    return m;
}

FieldVec FieldMat::row(std::size_t i) const
{
    return FieldVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<FieldVec> FieldMat::row_list() const
{
    std::vector<FieldVec> r;
    r.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        r.push_back(row(i));
    return r;
}

FieldMat FieldMat::transpose() const
{
    FieldMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

int FieldMat::field() const
{
    return field_of(data_);
}

FieldMat operator*(const FieldMat& x, const FieldMat& y)
{
    if (x.cols_ != y.rows_)
        throw std::invalid_argument("matrix product: shape mismatch");
    FieldMat r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const QuadElem& a = x(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < y.cols_; ++j)
                if (!y(k, j).is_zero())
                    r(i, j) += a * y(k, j);
        }
    return r;
}

FieldMat operator*(const QuadElem& s, const FieldMat& x)
{
    FieldMat r(x);
    for (auto& v : r.data_)
        v *= s;
    return r;
}

FieldVec operator*(const FieldVec& x, const FieldMat& m)
{
    if (x.size() != m.rows())
        throw std::invalid_argument("vector-matrix product: shape mismatch");
    FieldVec r(m.cols());
    for (std::size_t k = 0; k < m.rows(); ++k) {
        if (x[k].is_zero())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(k, j).is_zero())
                r[j] += x[k] * m(k, j);
    }
    return r;
}

namespace {

// In-place Gauss-Jordan on an augmented matrix; returns determinant of the
// leading square block (0 if singular) and the rank of the leading block.
struct Elimination {
    QuadElem det;
    std::size_t rank = 0;
};

Elimination eliminate(FieldMat& m, std::size_t lead_cols, bool reduce_above)
{
    Elimination e{QuadElem(1), 0};
    std::size_t r = 0;
    for (std::size_t c = 0; c < lead_cols && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows()) {
            e.det = 0;
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
            e.det = -e.det;
        }
        const QuadElem pivot = m(r, c);
        e.det *= pivot;
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) /= pivot;
        for (std::size_t i = reduce_above ? 0 : r + 1; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            const QuadElem f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    e.rank = r;
    if (r < lead_cols)
        e.det = 0;
    return e;
}

}  // namespace

QuadElem det(const FieldMat& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("det: matrix not square");
    if (m.rows() == 0)
        return QuadElem(1);
    FieldMat w(m);
    return eliminate(w, w.cols(), false).det;
}

std::size_t rank(const FieldMat& m)
{
    FieldMat w(m);
    return eliminate(w, w.cols(), false).rank;
}

std::optional<FieldMat> inverse(const FieldMat& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    FieldMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    if (eliminate(aug, n, true).rank < n)
        return std::nullopt;
    FieldMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<FieldVec> solve(const FieldMat& a, const FieldVec& b)
{
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    FieldMat aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    if (eliminate(aug, n, true).rank < n)
        return std::nullopt;
    FieldVec x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = aug(i, n);
    return x;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long long>>& rows)
{
    if (rows.empty())
        return {};
    IntMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMat operator*(const IntMat& x, const IntMat& y)
{
    if (x.cols_ != y.rows_)
        throw std::invalid_argument("matrix product: shape mismatch");
    IntMat r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k)
            for (std::size_t j = 0; j < y.cols_; ++j)
                r(i, j) += x(i, k) * y(k, j);
    return r;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a.sign() < 0) != (b.sign() < 0)))
        q -= 1;
    return q;
}

}  // namespace

IntMat hnf(const IntMat& input)
{
    IntMat m(input);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a != b)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(a, j), m(b, j));
    };
    auto axpy = [&](std::size_t dst, const Integer& q, std::size_t src) {
        if (q == 0)
            return;
        for (std::size_t j = 0; j < cols; ++j)
            if (m(src, j) != 0)
                m(dst, j) -= q * m(src, j);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c over rows r.. until a single nonzero remains
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (m(i, c) != 0 && (best == rows || boost::multiprecision::abs(m(i, c)) < boost::multiprecision::abs(m(best, c))))
                    best = i;
            if (best == rows)
                break;
            swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m(i, c) == 0)
                    continue;
                axpy(i, Integer(m(i, c) / m(r, c)), r);
                if (m(i, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (m(r, c) == 0)
            continue;
        if (m(r, c) < 0)
            for (std::size_t j = 0; j < cols; ++j)
                m(r, j) = -m(r, j);
        for (std::size_t i = 0; i < r; ++i)
            axpy(i, floor_div(m(i, c), m(r, c)), r);
        ++r;
    }
    IntMat out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out(i, j) = m(i, j);
    return out;
}

std::vector<FieldVec> canonical_span(const std::vector<FieldVec>& rows, int field)
{
    if (rows.empty())
        return {};
    const std::size_t n = rows[0].size();
    const bool surd = field > 1;
    const std::size_t width = surd ? 2 * n : n;
    Integer denom = 1;
    for (const auto& r : rows) {
        if (r.size() != n)
            throw std::invalid_argument("ragged rows");
        for (const auto& v : r) {
            if (!v.is_rational() && v.field() != field)
                throw FieldMismatch("canonical_span: entry outside the stated field");
            denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(v.rational_part()));
            denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(v.surd_part()));
        }
    }
    IntMat m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational a = rows[i][j].rational_part() * Rational(denom);
            m(i, j) = boost::multiprecision::numerator(a);
            if (surd) {
                Rational b = rows[i][j].surd_part() * Rational(denom);
                m(i, n + j) = boost::multiprecision::numerator(b);
            }
        }
    const IntMat h = hnf(m);
    std::vector<FieldVec> out(h.rows(), FieldVec(n));
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational a(h(i, j), denom);
            if (surd)
                out[i][j] = QuadElem(a, Rational(h(i, n + j), denom), field);
            else
                out[i][j] = QuadElem(a);
        }
    return out;
}

}  // namespace intersectq
