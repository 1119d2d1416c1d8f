#pragma once

/*
 * Exact scalar tower used for every coefficient in the library.
 *
 *     Rational  - arbitrary precision rationals (GMP)
 *     Scalar    - a + b*sqrt(D) with a, b rational, D > 1 not a perfect square
 *     CScalar   - re + i*im with re, im Scalars
 *
 * A Scalar with D == 0 is a plain rational and embeds into every quadratic
 * context. Two Scalars carrying different non-zero D are never combined.
 * The real embedding always takes sqrt(D) > 0, so sign() is exact.
 */

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace semiflat {

using Rational = mpq_class;
using Integer = mpz_class;

class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public MathError {
public:
    using MathError::MathError;
};

inline Rational parse_rational(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (c != ' ')
            t.push_back(c);
    if (t.empty())
        throw MathError("empty rational literal");
    Rational r;
    if (r.set_str(t, 10) != 0)
        throw MathError("malformed rational literal '" + text + "'");
    if (r.get_den() == 0)
        throw MathError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

inline bool is_integer(const Rational& r)
{
    return r.get_den() == 1;
}

inline bool is_perfect_square(const Integer& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_squarefree(std::int64_t n)
{
    if (n < 1)
        return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

struct FieldContext {
    enum class Mode { rational, quadratic };

    Mode mode = Mode::rational;
    std::int64_t D = 0;
    bool complexified = false;

    static FieldContext rational_field(bool complexified = false)
    {
        return {Mode::rational, 0, complexified};
    }

    // Any non-square D >= 2 is accepted: Q(sqrt(12)) and Q(sqrt(3)) are the
    // same field, and keeping D = m^2 - 4 verbatim keeps unit formulas readable.
    static FieldContext quadratic(std::int64_t D, bool complexified = false)
    {
        if (D < 2 || is_perfect_square(Integer(static_cast<long>(D))))
            throw MathError("quadratic field needs a non-square D >= 2, got " + std::to_string(D));
        return {Mode::quadratic, D, complexified};
    }

    bool is_quadratic() const { return mode == Mode::quadratic; }

    friend bool operator==(const FieldContext&, const FieldContext&) = default;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}
    Scalar(int v) : a_(v) {}
    Scalar(const Rational& a) : a_(a) { a_.canonicalize(); }
    Scalar(Rational a, Rational b, std::int64_t D) : a_(std::move(a)), b_(std::move(b)), D_(D)
    {
        a_.canonicalize();
        b_.canonicalize();
        if (D_ == 0 && b_ != 0)
            throw MathError("irrational part without a quadratic context");
        if (D_ != 0)
            (void)FieldContext::quadratic(D_);
    }

    static Scalar sqrt_of(std::int64_t D) { return Scalar(Rational(0), Rational(1), D); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    std::int64_t D() const { return D_; }

    FieldContext context() const
    {
        return D_ == 0 ? FieldContext::rational_field() : FieldContext::quadratic(D_);
    }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_integer() const { return is_rational() && semiflat::is_integer(a_); }

    // Exact sign under sqrt(D) > 0.
    int sign() const
    {
        const int sa = sgn(a_);
        const int sb = sgn(b_);
        if (sb == 0)
            return sa;
        if (sa == 0 || sa == sb)
            return sb;
        const Rational lhs = a_ * a_;
        const Rational rhs = b_ * b_ * Rational(static_cast<long>(D_));
        if (lhs == rhs)
            return 0;  // unreachable for non-square D
        return lhs > rhs ? sa : sb;
    }

    // Galois conjugate a - b*sqrt(D).
    Scalar galois() const
    {
        Scalar r = *this;
        r.b_ = -r.b_;
        return r;
    }

    // Field norm a^2 - D b^2.
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(static_cast<long>(D_)); }

    Scalar inverse() const
    {
        if (is_zero())
            throw MathError("division by zero");
        const Rational n = norm();
        Scalar r = galois();
        r.a_ /= n;
        r.b_ /= n;
        return r;
    }

    Scalar operator-() const
    {
        Scalar r = *this;
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }

    Scalar& operator+=(const Scalar& o)
    {
        D_ = join(D_, o.D_);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o)
    {
        D_ = join(D_, o.D_);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o)
    {
        D_ = join(D_, o.D_);
        if (sgn(b_) == 0 && sgn(o.b_) == 0) {
            a_ *= o.a_;
            return *this;
        }
        Rational na = a_ * o.a_ + b_ * o.b_ * Rational(static_cast<long>(D_));
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    Scalar& operator/=(const Scalar& o)
    {
        if (o.is_rational()) {
            if (sgn(o.a_) == 0)
                throw MathError("division by zero");
            D_ = join(D_, o.D_);
            a_ /= o.a_;
            b_ /= o.a_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    // Values compare equal when they are the same real number; contexts only
    // matter when both surd parts are non-zero.
    friend bool operator==(const Scalar& x, const Scalar& y)
    {
        if (sgn(x.b_) != 0 && sgn(y.b_) != 0 && x.D_ != y.D_)
            throw FieldMismatch("comparing scalars from Q(sqrt(" + std::to_string(x.D_) +
                                ")) and Q(sqrt(" + std::to_string(y.D_) + "))");
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }

    std::string str() const
    {
        if (sgn(b_) == 0)
            return a_.get_str();
        std::ostringstream os;
        if (sgn(a_) != 0)
            os << a_.get_str() << (sgn(b_) > 0 ? "+" : "");
        if (b_ == -1)
            os << "-";
        else if (b_ != 1)
            os << b_.get_str() << "*";
        os << "sqrt(" << D_ << ")";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    static std::int64_t join(std::int64_t d1, std::int64_t d2)
    {
        if (d1 == 0)
            return d2;
        if (d2 == 0 || d1 == d2)
            return d1;
        throw FieldMismatch("mixing Q(sqrt(" + std::to_string(d1) + ")) and Q(sqrt(" +
                            std::to_string(d2) + "))");
    }

    Rational a_{0};
    Rational b_{0};
    std::int64_t D_ = 0;
};

class CScalar {
public:
    CScalar() = default;
    CScalar(long v) : re_(v) {}
    CScalar(int v) : re_(v) {}
    CScalar(const Rational& v) : re_(v) {}
    CScalar(Scalar re) : re_(std::move(re)) {}
    CScalar(Scalar re, Scalar im) : re_(std::move(re)), im_(std::move(im)) {}

    static CScalar i() { return {Scalar(0), Scalar(1)}; }

    const Scalar& re() const { return re_; }
    const Scalar& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    CScalar conj() const { return {re_, -im_}; }
    Scalar abs2() const { return re_ * re_ + im_ * im_; }

    CScalar inverse() const
    {
        if (is_zero())
            throw MathError("division by zero");
        if (im_.is_zero())
            return CScalar(re_.inverse());
        const Scalar n = abs2();
        return {re_ / n, -im_ / n};
    }

    CScalar operator-() const { return {-re_, -im_}; }

    CScalar& operator+=(const CScalar& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    CScalar& operator-=(const CScalar& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    CScalar& operator*=(const CScalar& o)
    {
        if (im_.is_zero() && o.im_.is_zero()) {
            re_ *= o.re_;
            return *this;
        }
        Scalar r = re_ * o.re_ - im_ * o.im_;
        Scalar m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    CScalar& operator/=(const CScalar& o)
    {
        if (o.im_.is_zero()) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend CScalar operator+(CScalar x, const CScalar& y) { return x += y; }
    friend CScalar operator-(CScalar x, const CScalar& y) { return x -= y; }
    friend CScalar operator*(CScalar x, const CScalar& y) { return x *= y; }
    friend CScalar operator/(CScalar x, const CScalar& y) { return x /= y; }
    friend bool operator==(const CScalar& x, const CScalar& y) { return x.re_ == y.re_ && x.im_ == y.im_; }

    std::string str() const
    {
        if (im_.is_zero())
            return re_.str();
        std::string im = im_ == Scalar(1) ? "i" : im_ == Scalar(-1) ? "-i" : "(" + im_.str() + ")*i";
        if (re_.is_zero())
            return im;
        return "(" + re_.str() + (im.front() == '-' ? "" : "+") + im + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const CScalar& s) { return os << s.str(); }

private:
    Scalar re_;
    Scalar im_;
};

// The unit (m + sqrt(m^2 - 4)) / 2 of Q(sqrt(m^2 - 4)); its Galois conjugate is its inverse.
inline Scalar quadratic_unit(long m)
{
    if (m < 3)
        throw MathError("quadratic_unit needs m >= 3");
    const std::int64_t D = static_cast<std::int64_t>(m) * m - 4;
    return Scalar(Rational(m, 2), Rational(1, 2), D);
}

}  // namespace semiflat
