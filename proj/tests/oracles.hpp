#pragma once

// Test-only reference implementations, written without the library's
// elimination, wedge or differential code.

#include "semiflat/lie.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <vector>

namespace semiflat {
inline void PrintTo(const Form& f, std::ostream* os) { *os << f.str(); }
inline void PrintTo(const Scalar& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const CScalar& x, std::ostream* os) { *os << x.str(); }
}  // namespace semiflat

namespace oracle {

// Sign of a + b sqrt(D) by shrinking rational enclosures of sqrt(D).
inline int interval_sign(const mpq_class& a, const mpq_class& b, long D)
{
    for (unsigned bits = 16; bits < 4096; bits *= 2) {
        mpz_class scaled = mpz_class(D) << (2 * bits);
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
        const mpq_class unit(mpz_class(1) << bits);
        mpq_class lo = mpq_class(root) / unit, hi = mpq_class(root + 1) / unit;
        lo.canonicalize();
        hi.canonicalize();
        mpq_class x = a + b * lo, y = a + b * hi;
        if (x > y)
            std::swap(x, y);
        if (x > 0)
            return 1;
        if (y < 0)
            return -1;
        if (b == 0 && a == 0)
            return 0;
    }
    return 0;
}

// Sign that sorts idx, or 0 on a repeated index.
inline int sort_sign(std::vector<int> idx)
{
    int s = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
            if (idx[j] == idx[j + 1])
                return 0;
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                s = -s;
            }
        }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1])
            return 0;
    return s;
}

// Forms as lists of (index list, rational coefficient).
struct Term {
    std::vector<int> idx;
    mpq_class c;
};
using Poly = std::vector<Term>;

inline std::map<std::vector<int>, mpq_class> normalize(const Poly& p)
{
    std::map<std::vector<int>, mpq_class> out;
    for (const auto& t : p) {
        const int s = sort_sign(t.idx);
        if (!s)
            continue;
        auto k = t.idx;
        std::sort(k.begin(), k.end());
        out[k] += s * t.c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline Poly wedge(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& x : a)
        for (const auto& y : b) {
            Term t{x.idx, x.c * y.c};
            t.idx.insert(t.idx.end(), y.idx.begin(), y.idx.end());
            r.push_back(t);
        }
    return r;
}

inline bool same(const semiflat::Form& f, const Poly& p)
{
    const auto n = normalize(p);
    if (n.size() != f.size())
        return false;
    for (const auto& [idx, c] : n) {
        semiflat::Mask m = 0;
        for (int i : idx)
            m |= semiflat::Mask(1) << i;
        if (!(f.coeff(m) == semiflat::CScalar(semiflat::Rational(c))))
            return false;
    }
    return true;
}

inline std::vector<std::vector<int>> subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Rational structure constants c[i][j][k] read from the algebra.
inline std::vector<std::vector<std::vector<mpq_class>>> constants(const semiflat::LieAlgebra& g)
{
    const int n = g.dim();
    std::vector<std::vector<std::vector<mpq_class>>> c(n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const auto z = g.structure_constant(i, j, k);
                c[i][j][k] = z.re().rational_part();
            }
    return c;
}

// e^I(E_J) for |I| = |J|.
inline int evaluate(const std::vector<int>& I, const std::vector<int>& J)
{
    auto s = J;
    std::sort(s.begin(), s.end());
    if (s != I)
        return 0;
    return sort_sign(J);
}

// Matrix of d : Lambda^k -> Lambda^{k+1} from the invariant Cartan formula
// d phi(X_0..X_k) = sum_{a<b} (-1)^{a+b} phi([X_a, X_b], X_0, .., X_k without a, b).
inline std::vector<std::vector<mpq_class>> d_matrix(const semiflat::LieAlgebra& g, int k)
{
    const int n = g.dim();
    const auto c = constants(g);
    const auto src = subsets(n, k), dst = subsets(n, k + 1);
    std::vector<std::vector<mpq_class>> M(dst.size(), std::vector<mpq_class>(src.size()));
    for (std::size_t col = 0; col < src.size(); ++col)
        for (std::size_t row = 0; row < dst.size(); ++row) {
            const auto& J = dst[row];
            mpq_class v = 0;
            for (int a = 0; a <= k; ++a)
                for (int b = a + 1; b <= k; ++b) {
                    std::vector<int> rest;
                    for (int t = 0; t <= k; ++t)
                        if (t != a && t != b)
                            rest.push_back(J[t]);
                    for (int l = 0; l < n; ++l) {
                        if (c[J[a]][J[b]][l] == 0)
                            continue;
                        std::vector<int> args{l};
                        args.insert(args.end(), rest.begin(), rest.end());
                        const int e = evaluate(src[col], args);
                        if (e)
                            v += ((a + b) % 2 ? -1 : 1) * e * c[J[a]][J[b]][l];
                    }
                }
            M[row][col] = v;
        }
    return M;
}

inline int rank(std::vector<std::vector<mpq_class>> M)
{
    if (M.empty())
        return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && M[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(M[piv], M[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][col] == 0)
                continue;
            const mpq_class f = M[i][col] / M[r][col];
            for (std::size_t j = col; j < cols; ++j)
                M[i][j] -= f * M[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

inline std::vector<int> betti(const semiflat::LieAlgebra& g)
{
    const int n = g.dim();
    std::vector<int> rk(n + 2, 0);
    for (int k = 0; k < n; ++k)
        rk[k + 1] = rank(d_matrix(g, k));  // rank of d out of degree k
    std::vector<int> b;
    for (int k = 0; k <= n; ++k) {
        const int dimk = static_cast<int>(subsets(n, k).size());
        b.push_back(dimk - rk[k + 1] - rk[k]);
    }
    return b;
}

// Jacobi identity straight from brackets.
inline bool jacobi(const semiflat::LieAlgebra& g)
{
    const int n = g.dim();
    const auto c = constants(g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int m = 0; m < n; ++m) {
                    mpq_class s = 0;
                    for (int l = 0; l < n; ++l)
                        s += c[j][k][l] * c[i][l][m] + c[k][i][l] * c[j][l][m] + c[i][j][l] * c[k][l][m];
                    if (s != 0)
                        return false;
                }
    return true;
}

inline mpq_class random_rational(std::mt19937_64& rng, long span = 40)
{
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace oracle
