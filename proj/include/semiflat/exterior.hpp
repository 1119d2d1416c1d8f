#pragma once

/*
 * Exterior algebra on an n-dimensional coframe e^0..e^{n-1} (0-based
 * internally, 1-based in every rendered string).
 *
 * A monomial e^{i1}^...^e^{ik} with i1 < ... < ik is a bitmask; reordering
 * signs come from inversion counts. Forms are sparse maps mask -> CScalar.
 */

#include "semiflat/linalg.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace semiflat {

using Mask = std::uint32_t;

inline constexpr int max_form_dim = 16;

inline int grade_of(Mask m) { return std::popcount(m); }

inline std::vector<int> indices_of(Mask m)
{
    std::vector<int> idx;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1u)
            idx.push_back(i);
    return idx;
}

// Sign of e^{a} ^ e^{b} relative to e^{a|b}: parity of pairs (i in a, j in b) with i > j.
inline int wedge_sign(Mask a, Mask b)
{
    int inv = 0;
    for (Mask rest = a; rest; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        inv += std::popcount(b & ((Mask(1) << i) - 1));
    }
    return (inv & 1) ? -1 : 1;
}

// All masks of grade k in dimension n, ascending.
inline std::vector<Mask> masks_of_grade(int n, int k)
{
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask(1) << n); ++m)
        if (grade_of(m) == k)
            out.push_back(m);
    return out;
}

inline std::string mask_str(Mask m)
{
    if (!m)
        return "1";
    std::string s = "e";
    for (int i : indices_of(m))
        s += std::to_string(i + 1);
    return s;
}

class Form {
public:
    using Terms = std::map<Mask, CScalar>;

    Form() = default;
    explicit Form(int n) : n_(n) { check_dim(n); }

    static Form constant(int n, const CScalar& c)
    {
        Form f(n);
        f.add_term(0, c);
        return f;
    }
    static Form basis(int n, int i)
    {
        if (i < 0 || i >= n)
            throw MathError("coframe index out of range");
        return monomial(n, Mask(1) << i);
    }
    static Form monomial(int n, Mask m, const CScalar& c = CScalar(1))
    {
        Form f(n);
        if (m >> n)
            throw MathError("multi-index out of range");
        f.add_term(m, c);
        return f;
    }
    // e^{i1} ^ ... ^ e^{ik} in the given order (0-based indices).
    static Form product(int n, const std::vector<int>& idx)
    {
        Form f = constant(n, 1);
        for (int i : idx)
            f = f.wedge(basis(n, i));
        return f;
    }
    // Sum_i v[i] e^i.
    static Form one_form(const std::vector<CScalar>& v)
    {
        Form f(static_cast<int>(v.size()));
        for (std::size_t i = 0; i < v.size(); ++i)
            f.add_term(Mask(1) << i, v[i]);
        return f;
    }

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    CScalar coeff(Mask m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? CScalar(0) : it->second;
    }

    void add_term(Mask m, const CScalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Form grade(int k) const
    {
        Form r(n_);
        for (const auto& [m, c] : terms_)
            if (grade_of(m) == k)
                r.terms_.emplace(m, c);
        return r;
    }

    // Largest grade present, -1 for zero.
    int max_grade() const
    {
        int g = -1;
        for (const auto& [m, c] : terms_)
            g = std::max(g, grade_of(m));
        return g;
    }

    bool is_homogeneous(int k) const
    {
        for (const auto& [m, c] : terms_)
            if (grade_of(m) != k)
                return false;
        return true;
    }

    Form filter(const std::function<bool(Mask)>& keep) const
    {
        Form r(n_);
        for (const auto& [m, c] : terms_)
            if (keep(m))
                r.terms_.emplace(m, c);
        return r;
    }

    Form conj() const
    {
        Form r(n_);
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, c.conj());
        return r;
    }
    Form real_part() const
    {
        Form r(n_);
        for (const auto& [m, c] : terms_)
            r.add_term(m, CScalar(c.re()));
        return r;
    }
    Form imag_part() const
    {
        Form r(n_);
        for (const auto& [m, c] : terms_)
            r.add_term(m, CScalar(c.im()));
        return r;
    }
    bool is_real() const
    {
        for (const auto& [m, c] : terms_)
            if (!c.is_real())
                return false;
        return true;
    }

    Form wedge(const Form& o) const
    {
        check_same(o);
        Form r(n_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) {
                if (a & b)
                    continue;
                CScalar c = ca * cb;
                if (wedge_sign(a, b) < 0)
                    c = -c;
                r.add_term(a | b, c);
            }
        return r;
    }

    // Interior product with the frame vector E_i.
    Form contract(int i) const
    {
        Form r(n_);
        const Mask bit = Mask(1) << i;
        for (const auto& [m, c] : terms_) {
            if (!(m & bit))
                continue;
            const bool odd = std::popcount(m & (bit - 1)) & 1;
            r.add_term(m ^ bit, odd ? -c : c);
        }
        return r;
    }

    // Interior product with sum_i v[i] E_i.
    Form contract(const std::vector<CScalar>& v) const
    {
        if (static_cast<int>(v.size()) != n_)
            throw MathError("contraction vector has wrong dimension");
        Form r(n_);
        for (int i = 0; i < n_; ++i)
            if (!v[i].is_zero())
                r += contract(i) * v[i];
        return r;
    }

    Form operator-() const
    {
        Form r(n_);
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }
    Form& operator+=(const Form& o)
    {
        check_same(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    Form& operator-=(const Form& o)
    {
        check_same(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    Form& operator*=(const CScalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const CScalar& s) { return a *= s; }
    friend Form operator*(const CScalar& s, Form a) { return a *= s; }
    friend Form operator^(const Form& a, const Form& b) { return a.wedge(b); }

    friend bool operator==(const Form& a, const Form& b)
    {
        if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size())
            return false;
        auto it = b.terms_.begin();
        for (const auto& [m, c] : a.terms_) {
            if (m != it->first || !(c == it->second))
                return false;
            ++it;
        }
        return true;
    }

    // e.g. "e14+e26-i*e35"; "0" for the zero form.
    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string coef = c.str();
            std::string body = mask_str(m);
            if (coef == "1")
                s += (s.empty() ? "" : "+") + body;
            else if (coef == "-1")
                s += "-" + body;
            else if (m == 0)
                s += (s.empty() || coef.front() == '-' ? "" : "+") + coef;
            else
                s += (s.empty() || coef.front() == '-' ? "" : "+") + coef + "*" + body;
        }
        return s;
    }

private:
    static void check_dim(int n)
    {
        if (n < 0 || n > max_form_dim)
            throw MathError("form dimension must lie in [0, 16]");
    }
    void check_same(const Form& o) const
    {
        if (n_ != o.n_)
            throw MathError("form dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }

    int n_ = 0;
    Terms terms_;
};

inline Form wedge(const Form& a, const Form& b) { return a.wedge(b); }

inline Form wedge_power(const Form& a, int k)
{
    Form r = Form::constant(a.n(), 1);
    for (int i = 0; i < k; ++i)
        r = r.wedge(a);
    return r;
}

// sum_k phi^k / k!, for phi with only even grades >= 2.
inline Form exp_truncated(const Form& phi)
{
    for (const auto& [m, c] : phi.terms())
        if (grade_of(m) % 2 != 0 || grade_of(m) == 0)
            throw MathError("exp_truncated needs even positive grades");
    Form result = Form::constant(phi.n(), 1);
    Form power = result;
    for (long k = 1; !power.is_zero(); ++k) {
        power = power.wedge(phi) * CScalar(Rational(1, k));
        result += power;
    }
    return result;
}

/*
 * Incremental exact elimination of sparse vectors indexed by Mask. Rows are
 * kept reduced against earlier pivots; the pivot of a row is its smallest
 * remaining key.
 */
class SparseSpan {
public:
    // Adds v; returns true when it was independent of the rows so far.
    bool insert(Form v)
    {
        reduce(v);
        if (v.is_zero())
            return false;
        const Mask p = v.terms().begin()->first;
        v *= v.terms().begin()->second.inverse();
        for (auto& [q, row] : rows_) {
            const CScalar c = row.coeff(p);
            if (!c.is_zero())
                row -= v * c;
        }
        rows_.emplace(p, std::move(v));
        return true;
    }

    bool contains(Form v) const
    {
        reduce(v);
        return v.is_zero();
    }

    std::size_t rank() const { return rows_.size(); }

    std::vector<Form> basis() const
    {
        std::vector<Form> out;
        for (const auto& [p, row] : rows_)
            out.push_back(row);
        return out;
    }

private:
    void reduce(Form& v) const
    {
        for (const auto& [p, row] : rows_) {
            const CScalar c = v.coeff(p);
            if (!c.is_zero())
                v -= row * c;
        }
    }

    std::map<Mask, Form> rows_;
};

inline std::size_t span_rank(const std::vector<Form>& forms)
{
    SparseSpan s;
    for (const auto& f : forms)
        s.insert(f);
    return s.rank();
}

/*
 * Linear map on Lambda(V*) stored densely in the monomial basis: column m is
 * the image of the monomial with mask m. Limited to n <= 8 (256 x 256).
 */
class FormOperator {
public:
    using Map = std::function<Form(const Form&)>;

    FormOperator() = default;
    explicit FormOperator(int n) : n_(n), matrix_(std::size_t(1) << check(n), std::size_t(1) << n) {}

    static FormOperator identity(int n)
    {
        FormOperator t(n);
        t.matrix_ = CMatrix::identity(std::size_t(1) << n);
        return t;
    }

    static FormOperator from_map(int n, const Map& f)
    {
        FormOperator t(n);
        for (Mask m = 0; m < (Mask(1) << n); ++m) {
            const Form image = f(Form::monomial(n, m));
            for (const auto& [k, c] : image.terms())
                t.matrix_(k, m) = c;
        }
        return t;
    }

    int n() const { return n_; }
    const CMatrix& matrix() const { return matrix_; }

    Form apply(const Form& phi) const
    {
        if (phi.n() != n_)
            throw MathError("operator dimension mismatch");
        Form r(n_);
        for (const auto& [m, c] : phi.terms())
            for (Mask k = 0; k < (Mask(1) << n_); ++k)
                if (!matrix_(k, m).is_zero())
                    r.add_term(k, matrix_(k, m) * c);
        return r;
    }
    Form operator()(const Form& phi) const { return apply(phi); }

    // Composition: (a * b)(phi) = a(b(phi)).
    friend FormOperator operator*(const FormOperator& a, const FormOperator& b)
    {
        if (a.n_ != b.n_)
            throw MathError("operator dimension mismatch");
        FormOperator r(a.n_);
        r.matrix_ = a.matrix_ * b.matrix_;
        return r;
    }
    friend FormOperator operator+(const FormOperator& a, const FormOperator& b)
    {
        FormOperator r = a;
        r.matrix_ += b.matrix_;
        return r;
    }
    friend FormOperator operator-(const FormOperator& a, const FormOperator& b)
    {
        FormOperator r = a;
        r.matrix_ -= b.matrix_;
        return r;
    }
    friend FormOperator operator*(const CScalar& s, FormOperator a)
    {
        a.matrix_ *= s;
        return a;
    }

    bool is_zero() const { return matrix_.is_zero(); }

    struct RankKernel {
        std::size_t rank = 0;
        std::vector<Form> kernel;
    };

    // Restriction to span(domain): rank of the image and a kernel basis.
    RankKernel rank_kernel(const std::vector<Form>& domain) const
    {
        const std::size_t N = std::size_t(1) << n_;
        CMatrix images(N, domain.size());
        for (std::size_t j = 0; j < domain.size(); ++j) {
            const Form image = apply(domain[j]);
            for (const auto& [k, c] : image.terms())
                images(k, j) = c;
        }
        RankKernel out;
        out.rank = semiflat::rank(images);
        for (const auto& coeffs : semiflat::kernel(images)) {
            Form v(n_);
            for (std::size_t j = 0; j < domain.size(); ++j)
                if (!coeffs[j].is_zero())
                    v += domain[j] * coeffs[j];
            out.kernel.push_back(std::move(v));
        }
        return out;
    }

    RankKernel rank_kernel_on_masks(const std::vector<Mask>& masks) const
    {
        std::vector<Form> domain;
        for (Mask m : masks)
            domain.push_back(Form::monomial(n_, m));
        return rank_kernel(domain);
    }

private:
    static int check(int n)
    {
        if (n < 0 || n > 8)
            throw MathError("dense form operators are limited to n <= 8");
        return n;
    }

    int n_ = 0;
    CMatrix matrix_;
};

// rank and kernel of an arbitrary linear map restricted to span(domain).
inline FormOperator::RankKernel operator_rank_kernel(const FormOperator& t, const std::vector<Form>& domain)
{
    return t.rank_kernel(domain);
}

// Span of images f(domain) and its rank, without the dense matrix.
inline std::size_t image_rank(const FormOperator::Map& f, const std::vector<Form>& domain)
{
    SparseSpan s;
    for (const auto& x : domain)
        s.insert(f(x));
    return s.rank();
}

inline std::vector<Form> monomials(int n, const std::vector<Mask>& masks)
{
    std::vector<Form> out;
    out.reserve(masks.size());
    for (Mask m : masks)
        out.push_back(Form::monomial(n, m));
    return out;
}

// Kernel basis of f restricted to span(domain), via the sparse coordinates of the images.
inline std::vector<Form> map_kernel(const FormOperator::Map& f, const std::vector<Form>& domain)
{
    if (domain.empty())
        return {};
    std::map<Mask, std::size_t> rows;
    std::vector<Form> images;
    for (const auto& x : domain) {
        images.push_back(f(x));
        for (const auto& [m, c] : images.back().terms())
            rows.try_emplace(m, rows.size());
    }
    CMatrix a(rows.size(), domain.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [m, c] : images[j].terms())
            a(rows.at(m), j) = c;
    std::vector<Form> out;
    const int n = domain.front().n();
    for (const auto& coeffs : kernel(a)) {
        Form v(n);
        for (std::size_t j = 0; j < domain.size(); ++j)
            if (!coeffs[j].is_zero())
                v += domain[j] * coeffs[j];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace semiflat
