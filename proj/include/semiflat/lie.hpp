#pragma once

/*
 * Lie algebras presented by the differentials of a coframe.
 *
 * Convention: de^k(E_i, E_j) = -c^k_ij where [E_i, E_j] = sum_k c^k_ij E_k.
 * So for i < j, c^k_ij is minus the coefficient of e^{ij} in de^k.
 */

#include "semiflat/exterior.hpp"

#include <string>
#include <vector>

namespace semiflat {

class LieAlgebra {
public:
    LieAlgebra() = default;

    explicit LieAlgebra(std::vector<Form> de) : de_(std::move(de))
    {
        const int n = dim();
        for (const auto& f : de_) {
            if (f.n() != n)
                throw MathError("coframe differential lives in the wrong dimension");
            if (!f.is_homogeneous(2) && !f.is_zero())
                throw MathError("coframe differentials must be 2-forms");
        }
    }

    static LieAlgebra abelian(int n)
    {
        return LieAlgebra(std::vector<Form>(n, Form(n)));
    }

    // c[i][j][k] = c^k_ij; only i < j is read, antisymmetry implied.
    static LieAlgebra from_brackets(int n, const std::vector<std::vector<std::vector<Scalar>>>& c)
    {
        std::vector<Form> de(n, Form(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    de[k].add_term((Mask(1) << i) | (Mask(1) << j), CScalar(-c[i][j][k]));
        return LieAlgebra(std::move(de));
    }

    int dim() const { return static_cast<int>(de_.size()); }
    const std::vector<Form>& differentials() const { return de_; }
    const Form& de(int k) const { return de_.at(k); }

    // c^k_ij (0-based).
    CScalar structure_constant(int i, int j, int k) const
    {
        if (i == j)
            return 0;
        const Mask m = (Mask(1) << i) | (Mask(1) << j);
        const CScalar c = de_.at(k).coeff(m);
        return i < j ? -c : c;
    }

    bool is_real() const
    {
        for (const auto& f : de_)
            if (!f.is_real())
                return false;
        return true;
    }

    // Antiderivation extending e^k -> de^k, zero on constants.
    Form d(const Form& phi) const
    {
        if (phi.n() != dim())
            throw MathError("form dimension does not match the algebra");
        Form r(dim());
        for (const auto& [m, c] : phi.terms()) {
            const auto idx = indices_of(m);
            for (std::size_t pos = 0; pos < idx.size(); ++pos) {
                const Form& dk = de_[idx[pos]];
                if (dk.is_zero())
                    continue;
                Mask left = 0, right = 0;
                for (std::size_t q = 0; q < pos; ++q)
                    left |= Mask(1) << idx[q];
                for (std::size_t q = pos + 1; q < idx.size(); ++q)
                    right |= Mask(1) << idx[q];
                const bool odd = pos & 1;
                for (const auto& [dm, dc] : dk.terms()) {
                    if ((dm & left) || (dm & right))
                        continue;
                    int s = wedge_sign(left, dm) * wedge_sign(left | dm, right);
                    if (odd)
                        s = -s;
                    CScalar t = c * dc;
                    r.add_term(left | dm | right, s < 0 ? -t : t);
                }
            }
        }
        return r;
    }

    bool d_squared_zero() const
    {
        for (const auto& f : de_)
            if (!d(f).is_zero())
                return false;
        return true;
    }

    // tr ad_{E_i} = sum_k c^k_ik.
    CScalar trace_ad(int i) const
    {
        CScalar t = 0;
        for (int k = 0; k < dim(); ++k)
            t += structure_constant(i, k, k);
        return t;
    }

    bool is_unimodular() const
    {
        for (int i = 0; i < dim(); ++i)
            if (!trace_ad(i).is_zero())
                return false;
        return true;
    }

    bool is_abelian() const
    {
        for (const auto& f : de_)
            if (!f.is_zero())
                return false;
        return true;
    }

    // dim ker(d on grade k) - rank(d on grade k-1).
    int betti(int k) const
    {
        if (k < 0 || k > dim())
            return 0;
        auto dmap = [this](const Form& x) { return d(x); };
        const auto dom = monomials(dim(), masks_of_grade(dim(), k));
        const int ker = static_cast<int>(dom.size() - image_rank(dmap, dom));
        const int img = k == 0 ? 0 : static_cast<int>(image_rank(dmap, monomials(dim(), masks_of_grade(dim(), k - 1))));
        return ker - img;
    }

    std::vector<int> betti_numbers() const
    {
        std::vector<int> b;
        for (int k = 0; k <= dim(); ++k)
            b.push_back(betti(k));
        return b;
    }

    // New coframe f^a = sum_k A(a,k) e^k; returns the algebra in the f frame.
    LieAlgebra change_coframe(const CMatrix& A) const
    {
        const int n = dim();
        if (static_cast<int>(A.rows()) != n || static_cast<int>(A.cols()) != n)
            throw MathError("coframe change matrix has the wrong shape");
        const CMatrix B = inverse(A);
        std::vector<Form> old_in_new;  // e^k = sum_a B(k,a) f^a
        for (int k = 0; k < n; ++k) {
            std::vector<CScalar> row(n);
            for (int a = 0; a < n; ++a)
                row[a] = B(k, a);
            old_in_new.push_back(Form::one_form(row));
        }
        std::vector<Form> de(n, Form(n));
        for (int a = 0; a < n; ++a) {
            Form df(n);
            for (int k = 0; k < n; ++k)
                if (!A(a, k).is_zero())
                    df += de_[k] * A(a, k);
            de[a] = substitute(df, old_in_new);
        }
        return LieAlgebra(std::move(de));
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.de_ == b.de_; }

private:
    static Form substitute(const Form& phi, const std::vector<Form>& images)
    {
        Form r(phi.n());
        for (const auto& [m, c] : phi.terms()) {
            Form t = Form::constant(phi.n(), c);
            for (int i : indices_of(m))
                t = t.wedge(images[i]);
            r += t;
        }
        return r;
    }

    std::vector<Form> de_;
};

// Pull back a form along e^k -> images[k].
inline Form substitute_coframe(const Form& phi, const std::vector<Form>& images)
{
    Form r(images.empty() ? phi.n() : images.front().n());
    for (const auto& [m, c] : phi.terms()) {
        Form t = Form::constant(r.n(), c);
        for (int i : indices_of(m))
            t = t.wedge(images.at(i));
        r += t;
    }
    return r;
}

// Express a form given in the e frame in the f frame, f^a = sum_k A(a,k) e^k.
inline Form to_new_coframe(const Form& phi, const CMatrix& A)
{
    const CMatrix B = inverse(A);
    const int n = phi.n();
    std::vector<Form> images;
    for (int k = 0; k < n; ++k) {
        std::vector<CScalar> row(n);
        for (int a = 0; a < n; ++a)
            row[a] = B(k, a);
        images.push_back(Form::one_form(row));
    }
    return substitute_coframe(phi, images);
}

}  // namespace semiflat
