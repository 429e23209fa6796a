#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gf2.hpp"
#include "partition.hpp"
#include "tableau.hpp"

namespace specht {

// Formal sum of tableau homomorphisms Θ_T over F_2: a set under symmetric difference.
class GF2Combo {
public:
    GF2Combo() = default;
    GF2Combo(Partition shape, Composition ctype) : shape_(std::move(shape)), ctype_(std::move(ctype)) {}
    GF2Combo(Partition shape, Composition ctype, const std::vector<Tableau>& ts)
        : GF2Combo(std::move(shape), std::move(ctype)) {
        for (const auto& t : ts)
            toggle(t);
    }
    static GF2Combo single(const Tableau& t, const Composition& ctype) {
        GF2Combo c(t.shape(), ctype);
        c.toggle(t);
        return c;
    }

    const Partition& shape() const { return shape_; }
    const Composition& ctype() const { return ctype_; }
    const std::set<Tableau>& support() const { return support_; }
    bool empty() const { return support_.empty(); }
    std::size_t size() const { return support_.size(); }
    bool contains(const Tableau& t) const { return support_.count(t) != 0; }

    void toggle(const Tableau& t) {
        auto [it, inserted] = support_.insert(t);
        if (!inserted)
            support_.erase(it);
    }
    GF2Combo& operator+=(const GF2Combo& o) {
        for (const auto& t : o.support_)
            toggle(t);
        return *this;
    }
    friend GF2Combo operator+(GF2Combo a, const GF2Combo& b) { return a += b; }
    bool operator==(const GF2Combo& o) const {
        return shape_ == o.shape_ && ctype_ == o.ctype_ && support_ == o.support_;
    }

private:
    Partition shape_;
    Composition ctype_;
    std::set<Tableau> support_;
};

inline std::vector<std::string> to_strings(const GF2Combo& c) {
    std::vector<std::string> out;
    for (const auto& t : c.support())
        out.push_back(to_string(t));
    return out;
}

namespace detail {

// value counts of one row, indexed by value (slot 0 unused)
inline std::vector<int> row_counts(const Tableau& t, int j, int maxv) {
    std::vector<int> c(static_cast<std::size_t>(maxv) + 1, 0);
    for (char ch : t.row(j))
        ++c[static_cast<std::size_t>(static_cast<unsigned char>(ch))];
    return c;
}

inline std::vector<std::vector<int>> all_row_counts(const Tableau& t, int maxv) {
    std::vector<std::vector<int>> out;
    for (int j = 0; j < t.num_rows(); ++j)
        out.push_back(row_counts(t, j, maxv));
    return out;
}

inline Tableau from_row_counts(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lengths;
    std::string word;
    for (const auto& r : rows) {
        int len = 0;
        for (std::size_t v = 1; v < r.size(); ++v) {
            word.append(static_cast<std::size_t>(r[v]), static_cast<char>(v));
            len += r[v];
        }
        lengths.push_back(len);
    }
    return Tableau(std::move(lengths), std::move(word));
}

// all vectors x with 0 <= x[v] <= cap[v] and sum x = total
template <class F>
void for_each_submultiset(const std::vector<int>& cap, int total, F&& f) {
    std::vector<int> x(cap.size(), 0);
    std::vector<int> suffix(cap.size() + 1, 0);
    for (std::size_t v = cap.size(); v-- > 0;)
        suffix[v] = suffix[v + 1] + cap[v];
    auto rec = [&](auto&& self, std::size_t v, int left) -> void {
        if (v == cap.size()) {
            if (left == 0)
                f(x);
            return;
        }
        if (left > suffix[v])
            return;
        int hi = std::min(left, cap[v]);
        for (int k = 0; k <= hi; ++k) {
            x[v] = k;
            self(self, v + 1, left - k);
        }
        x[v] = 0;
    };
    rec(rec, 0, total);
}

inline void require_type(const Tableau& t, const Composition& ctype) {
    if (t.content(ctype.length()) != ctype)
        throw std::invalid_argument("tableau " + to_string(t) + " is not of type " + to_string(ctype));
}

}  // namespace detail

// ψ_{d,t}∘Θ_T: replace t entries equal to d+1 by d, coefficient prod_j C(S^j_d, T^j_d).
inline GF2Combo psi_compose(int d, int t, const GF2Combo& c) {
    const Composition& lam = c.ctype();
    if (d < 1 || d >= lam.length() || t < 1 || t > lam[d])
        throw std::invalid_argument("psi index out of range");
    std::vector<int> nu = lam.parts();
    nu[static_cast<std::size_t>(d - 1)] += t;
    nu[static_cast<std::size_t>(d)] -= t;
    GF2Combo out(c.shape(), Composition(nu));
    int maxv = lam.length();
    for (const auto& T : c.support()) {
        auto rc = detail::all_row_counts(T, maxv);
        std::vector<int> cap;
        for (auto& r : rc)
            cap.push_back(r[static_cast<std::size_t>(d + 1)]);
        detail::for_each_submultiset(cap, t, [&](const std::vector<int>& r) {
            auto s = rc;
            for (std::size_t j = 0; j < s.size(); ++j) {
                int had = s[j][static_cast<std::size_t>(d)];
                if (!binom_odd(had + r[j], r[j]))
                    return;
                s[j][static_cast<std::size_t>(d)] += r[j];
                s[j][static_cast<std::size_t>(d + 1)] -= r[j];
            }
            out.toggle(detail::from_row_counts(s));
        });
    }
    return out;
}

// Expansion of Θ̂_T obtained by moving every i from row k into row j (0-based rows) and
// a multiset R of non-i entries of row j down to row k; coefficient prod_{l != i} C(S^k_l, T^k_l).
inline GF2Combo row_relation(const Tableau& T, const Composition& ctype, int i, int j, int k) {
    detail::require_type(T, ctype);
    if (j == k || j < 0 || k < 0 || j >= T.num_rows() || k >= T.num_rows())
        throw std::invalid_argument("row_relation needs two distinct rows");
    if (T.row_length(j) < T.row_length(k))
        throw std::invalid_argument("row_relation needs shape[j] >= shape[k]");
    if (i < 1 || i > ctype.length())
        throw std::invalid_argument("row_relation value out of range");
    int maxv = ctype.length();
    auto rc = detail::all_row_counts(T, maxv);
    auto uj = static_cast<std::size_t>(j), uk = static_cast<std::size_t>(k), ui = static_cast<std::size_t>(i);
    int moving = rc[uk][ui];
    GF2Combo out(T.shape(), ctype);
    std::vector<int> cap = rc[uj];
    cap[ui] = 0;
    detail::for_each_submultiset(cap, moving, [&](const std::vector<int>& R) {
        auto s = rc;
        s[uj][ui] += moving;
        s[uk][ui] = 0;
        for (std::size_t l = 1; l < R.size(); ++l) {
            if (!R[l])
                continue;
            if (!binom_odd(rc[uk][l] + R[l], R[l]))
                return;
            s[uj][l] -= R[l];
            s[uk][l] += R[l];
        }
        out.toggle(detail::from_row_counts(s));
    });
    return out;
}

// Sum over (D,E) with D ⊔ E = B, |D| = shape[i] - |A| of
// prod_x C(A_x+D_x, D_x) C(C_x+E_x, E_x) Θ̂_{T_{D,E}}; this sum is zero on S^shape.
// Rows are 0-based; requires A ⊔ B ⊔ C = T^i ⊔ T^{i+1} and |B| > shape[i].
inline GF2Combo garnir_relation(const Tableau& T, const Composition& ctype, int i,
                                const std::vector<int>& A, const std::vector<int>& B,
                                const std::vector<int>& C) {
    detail::require_type(T, ctype);
    if (i < 0 || i + 1 >= T.num_rows())
        throw std::invalid_argument("garnir_relation needs rows i and i+1");
    int maxv = ctype.length();
    auto counts = [&](const std::vector<int>& m) {
        std::vector<int> c(static_cast<std::size_t>(maxv) + 1, 0);
        for (int v : m) {
            if (v < 1 || v > maxv)
                throw std::invalid_argument("garnir_relation multiset value out of range");
            ++c[static_cast<std::size_t>(v)];
        }
        return c;
    };
    auto a = counts(A), b = counts(B), c = counts(C);
    auto rc = detail::all_row_counts(T, maxv);
    auto ui = static_cast<std::size_t>(i);
    for (std::size_t v = 1; v <= static_cast<std::size_t>(maxv); ++v)
        if (a[v] + b[v] + c[v] != rc[ui][v] + rc[ui + 1][v])
            throw std::invalid_argument("garnir_relation: A,B,C must partition rows i,i+1");
    int len_i = T.row_length(i);
    if (static_cast<int>(B.size()) <= len_i)
        throw std::invalid_argument("garnir_relation needs |B| > shape[i]");
    int dsize = len_i - static_cast<int>(A.size());
    if (dsize < 0 || dsize > static_cast<int>(B.size()))
        throw std::invalid_argument("garnir_relation: A does not fit in row i");
    GF2Combo out(T.shape(), ctype);
    detail::for_each_submultiset(b, dsize, [&](const std::vector<int>& D) {
        auto s = rc;
        for (std::size_t v = 1; v < D.size(); ++v) {
            int e = b[v] - D[v];
            if (!binom_odd(a[v] + D[v], D[v]) || !binom_odd(c[v] + e, e))
                return;
            s[ui][v] = a[v] + D[v];
            s[ui + 1][v] = c[v] + e;
        }
        out.toggle(detail::from_row_counts(s));
    });
    return out;
}

// Rewrites tableau homomorphisms into the semistandard basis with Garnir relations.
// Each non-semistandard T is replaced using its top-most, left-most column violation
// (rows i, i+1, column c, x = T[i][c] >= y = T[i+1][c]) with A = entries of row i below x,
// C = entries of row i+1 above y and B the rest; the term for T then has coefficient 1 and
// every other term strictly dominates T, so the recursion terminates.
class Semistandardiser {
public:
    // sorted semistandard expansion of Θ̂_T
    const std::vector<Tableau>& expand(const Tableau& T) {
        auto it = cache_.find(T);
        if (it != cache_.end())
            return it->second;
        std::vector<Tableau> result;
        if (is_semistandard(T)) {
            result.push_back(T);
        } else {
            std::set<Tableau> acc;
            for (const auto& S : garnir_terms(T)) {
                for (const auto& U : expand(S)) {
                    auto [pos, inserted] = acc.insert(U);
                    if (!inserted)
                        acc.erase(pos);
                }
            }
            result.assign(acc.begin(), acc.end());
        }
        return cache_.emplace(T, std::move(result)).first->second;
    }

    GF2Combo operator()(const GF2Combo& c) {
        GF2Combo out(c.shape(), c.ctype());
        for (const auto& T : c.support())
            for (const auto& U : expand(T))
                out.toggle(U);
        return out;
    }

    std::size_t cache_size() const { return cache_.size(); }

    // the non-pivot terms of the chosen Garnir relation for a non-semistandard T
    static std::vector<Tableau> garnir_terms(const Tableau& T) {
        int maxv = T.max_value();
        for (int i = 0; i + 1 < T.num_rows(); ++i) {
            for (int c = 0; c < T.row_length(i + 1); ++c) {
                int x = T.at(i, c), y = T.at(i + 1, c);
                if (y > x)
                    continue;
                auto rc = detail::all_row_counts(T, maxv);
                auto ui = static_cast<std::size_t>(i);
                std::vector<int> a(static_cast<std::size_t>(maxv) + 1, 0), b = a, cc = a;
                for (int v = 1; v <= maxv; ++v) {
                    auto uv = static_cast<std::size_t>(v);
                    (v < x ? a : b)[uv] += rc[ui][uv];
                    (v > y ? cc : b)[uv] += rc[ui + 1][uv];
                }
                int dsize = T.row_length(i) - c;
                std::vector<Tableau> out;
                detail::for_each_submultiset(b, dsize, [&](const std::vector<int>& D) {
                    auto s = rc;
                    bool pivot = true;
                    for (std::size_t v = 1; v < D.size(); ++v) {
                        int e = b[v] - D[v];
                        if (!binom_odd(a[v] + D[v], D[v]) || !binom_odd(cc[v] + e, e))
                            return;
                        s[ui][v] = a[v] + D[v];
                        s[ui + 1][v] = cc[v] + e;
                        if (s[ui][v] != rc[ui][v])
                            pivot = false;
                    }
                    if (!pivot)
                        out.push_back(detail::from_row_counts(s));
                });
                return out;
            }
        }
        throw std::logic_error("garnir_terms called on a semistandard tableau");
    }

private:
    std::unordered_map<Tableau, std::vector<Tableau>, TableauHash> cache_;
};

inline GF2Combo semistandardise(const GF2Combo& c) {
    Semistandardiser s;
    return s(c);
}

struct HomBasis {
    Partition shape;
    Composition ctype;
    TableauSet index;
    std::size_t dim = 0;
    bool complete = false;  // spans Hom(S^shape, M^ctype) only for 2-regular shapes
};

inline HomBasis hom_to_perm_basis(const Partition& mu, const Composition& lambda) {
    HomBasis hb{mu, lambda, enumerate_semistandard(mu, lambda), 0, is_two_regular(mu)};
    hb.dim = hb.index.size();
    return hb;
}

struct HomSpace {
    Partition mu;
    Partition lambda;
    std::vector<Tableau> index;      // semistandard basis of Hom(S^mu, M^lambda)
    GF2Matrix coords;                // rows: basis vectors of the solution space over index
    std::vector<GF2Combo> basis;     // the same vectors as combinations
    bool complete = false;           // false: only a subspace (mu is 2-singular)
    std::size_t dim() const { return basis.size(); }
};

// All θ in the semistandard span with ψ_{d,t}∘θ = 0 for every admissible (d,t).
inline HomSpace hom_space(const Partition& mu, const Partition& lambda, Semistandardiser* shared = nullptr) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("hom_space needs partitions of equal size");
    Semistandardiser local;
    Semistandardiser& ss = shared ? *shared : local;
    HomSpace hs;
    hs.mu = mu;
    hs.lambda = lambda;
    hs.complete = is_two_regular(mu);
    hs.index = enumerate_semistandard(mu, lambda).members;
    std::size_t m = hs.index.size();
    // constraint rows keyed by (d, t, semistandard tableau)
    std::map<std::tuple<int, int, Tableau>, std::size_t> row_of;
    std::vector<std::vector<std::size_t>> column_hits(m);
    for (int d = 1; d < lambda.length(); ++d) {
        for (int t = 1; t <= lambda[d]; ++t) {
            for (std::size_t col = 0; col < m; ++col) {
                auto img = ss(psi_compose(d, t, GF2Combo::single(hs.index[col], lambda)));
                for (const auto& U : img.support()) {
                    auto key = std::make_tuple(d, t, U);
                    auto it = row_of.find(key);
                    if (it == row_of.end())
                        it = row_of.emplace(key, row_of.size()).first;
                    column_hits[col].push_back(it->second);
                }
            }
        }
    }
    GF2Matrix cons(row_of.size(), m);
    for (std::size_t col = 0; col < m; ++col)
        for (auto r : column_hits[col])
            cons.flip(r, col);
    hs.coords = cons.nullspace();
    for (std::size_t k = 0; k < hs.coords.rows(); ++k) {
        GF2Combo c(mu, lambda);
        for (std::size_t col = 0; col < m; ++col)
            if (hs.coords.get(k, col))
                c.toggle(hs.index[col]);
        hs.basis.push_back(std::move(c));
    }
    return hs;
}

struct DualDim {
    std::size_t dim = 0;
    bool exact = false;  // false: lower bound only
    bool via_conjugates = false;
};

// dim Hom(S^lambda, S^mu), using dim Hom(S^mu', S^lambda') when lambda is 2-singular.
inline DualDim hom_dim_dual(const Partition& lambda, const Partition& mu, Semistandardiser* shared = nullptr) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("hom_dim_dual needs partitions of equal size");
    if (is_two_regular(lambda))
        return {hom_space(lambda, mu, shared).dim(), true, false};
    Partition mc = conjugate(mu);
    if (is_two_regular(mc))
        return {hom_space(mc, conjugate(lambda), shared).dim(), true, true};
    return {hom_space(lambda, mu, shared).dim(), false, false};
}

namespace detail {

// Θ_T∘Θ_S: S a λ-tableau of type μ, T a μ-tableau of type ν.
inline void tabcomp_into(const Tableau& T, const Tableau& S, int nu_len, int mu_len, GF2Combo& out) {
    int lam_rows = S.num_rows();
    auto s_counts = all_row_counts(S, mu_len);  // s_counts[j][i] = S^j_i
    auto t_counts = all_row_counts(T, nu_len);  // t_counts[i-1][x] = T^i_x
    std::vector<std::vector<int>> u(static_cast<std::size_t>(lam_rows),
                                    std::vector<int>(static_cast<std::size_t>(nu_len) + 1, 0));
    // split row i of T over rows j of U, then move on to i+1
    auto rec = [&](auto&& self, int i, int j, std::vector<int>& left) -> void {
        if (i == T.num_rows()) {
            out.toggle(from_row_counts(u));
            return;
        }
        auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        int need = s_counts[uj][ui + 1];
        if (j == lam_rows - 1) {
            // the remainder must have exactly the required size
            int rem = 0;
            for (int x : left)
                rem += x;
            if (rem != need)
                return;
            auto& row = u[uj];
            for (std::size_t x = 1; x < left.size(); ++x)
                if (row[x] & left[x])
                    return;
            for (std::size_t x = 1; x < left.size(); ++x)
                row[x] |= left[x];
            if (i + 1 < T.num_rows()) {
                auto next = t_counts[ui + 1];
                self(self, i + 1, 0, next);
            } else {
                self(self, i + 1, 0, left);
            }
            for (std::size_t x = 1; x < left.size(); ++x)
                row[x] ^= left[x];
            return;
        }
        std::vector<int> cap = left;
        for_each_submultiset(cap, need, [&](const std::vector<int>& X) {
            auto& row = u[uj];
            for (std::size_t x = 1; x < X.size(); ++x)
                if (row[x] & X[x])
                    return;  // even multinomial
            for (std::size_t x = 1; x < X.size(); ++x) {
                row[x] |= X[x];
                left[x] -= X[x];
            }
            self(self, i, j + 1, left);
            for (std::size_t x = 1; x < X.size(); ++x) {
                row[x] ^= X[x];
                left[x] += X[x];
            }
        });
    };
    if (T.num_rows() == 0) {
        out.toggle(S);
        return;
    }
    auto first = t_counts[0];
    rec(rec, 0, 0, first);
}

}  // namespace detail

// Θ_outer∘Θ_inner extended bilinearly; outer is a μ-tableau sum of type ν, inner a λ-tableau
// sum of type μ. The result is a λ-tableau sum of type ν.
inline GF2Combo compose(const GF2Combo& outer, const GF2Combo& inner) {
    if (Composition(outer.shape()) != inner.ctype())
        throw std::invalid_argument("compose: inner type must equal outer shape");
    GF2Combo out(inner.shape(), outer.ctype());
    int nu_len = outer.ctype().length(), mu_len = inner.ctype().length();
    for (const auto& T : outer.support())
        for (const auto& S : inner.support())
            detail::tabcomp_into(T, S, nu_len, mu_len, out);
    return out;
}

}  // namespace specht
