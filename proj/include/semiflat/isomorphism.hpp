#pragma once

// Coframe relabelings e^k -> s_k f^{pi(k)} carrying one presentation onto another.
// A found witness certifies an isomorphism; a miss says nothing.

#include "semiflat/lie.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace semiflat {

struct SignedPermutation {
    std::vector<int> pi;    // 0-based target index of e^k
    std::vector<int> sign;  // +1 or -1

    std::string str() const
    {
        std::string s;
        for (std::size_t k = 0; k < pi.size(); ++k) {
            if (k)
                s += ", ";
            s += "e" + std::to_string(k + 1) + "->" + (sign[k] < 0 ? "-" : "") + "f" + std::to_string(pi[k] + 1);
        }
        return s;
    }
};

inline Form apply_relabel(const Form& phi, const SignedPermutation& w)
{
    const int n = phi.n();
    Form r(n);
    for (const auto& [m, c] : phi.terms()) {
        std::vector<int> idx;
        int s = 1;
        for (int i : indices_of(m)) {
            idx.push_back(w.pi[i]);
            s *= w.sign[i];
        }
        r += Form::product(n, idx) * (s < 0 ? -c : c);
    }
    return r;
}

inline bool is_relabel_isomorphism(const LieAlgebra& g, const LieAlgebra& h, const SignedPermutation& w)
{
    for (int k = 0; k < g.dim(); ++k) {
        const Form lhs = apply_relabel(g.de(k), w);
        const Form& target = h.de(w.pi[k]);
        if (!(w.sign[k] < 0 ? lhs == -target : lhs == target))
            return false;
    }
    return true;
}

// Exhaustive search, pruned by the number of terms of each differential.
inline std::optional<SignedPermutation> find_signed_permutation(const LieAlgebra& g, const LieAlgebra& h)
{
    const int n = g.dim();
    if (h.dim() != n || n > 9)
        return std::nullopt;
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    do {
        bool shape = true;
        for (int k = 0; k < n && shape; ++k)
            shape = g.de(k).size() == h.de(pi[k]).size();
        if (!shape)
            continue;
        SignedPermutation w{pi, std::vector<int>(n, 1)};
        for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
            for (int k = 0; k < n; ++k)
                w.sign[k] = (s >> k) & 1 ? -1 : 1;
            if (is_relabel_isomorphism(g, h, w))
                return w;
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return std::nullopt;
}

}  // namespace semiflat
