#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hom_engine.hpp"
#include "partition.hpp"
#include "tableau.hpp"

// Explicit homomorphisms between S^(a,3,1^b) and two-part / three-part Specht modules, and the
// arithmetic summand criteria built on them.
namespace specht {

enum class Family { UV, UV2 };

inline std::string to_string(Family f) { return f == Family::UV ? "uv" : "uv2"; }

// exact binomial, 0 outside 0 <= k <= m; throws on overflow
inline std::uint64_t binomial(long long m, long long k) {
    if (k < 0 || m < 0 || k > m)
        return 0;
    k = std::min(k, m - k);
    std::uint64_t r = 1;
    for (long long i = 1; i <= k; ++i) {
        // r * (m-k+i) / i is exact at each step
        std::uint64_t num = static_cast<std::uint64_t>(m - k + i);
        std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
        std::uint64_t den = static_cast<std::uint64_t>(i) / g;
        std::uint64_t out;
        if (__builtin_mul_overflow(r / g, num / den, &out))
            throw std::overflow_error("binomial overflow");
        r = out;
    }
    return r;
}

struct SummandParams {
    int a = 0;
    int b = 0;
    int u = 0;
    int v = 0;
    Family family = Family::UV;

    int n() const { return a + b + 3; }
    Partition lambda() const { return hook_form(a, b); }
    Partition mu() const {
        return family == Family::UV ? Partition({u, v}) : Partition({u, v, 2});
    }
    static Partition hook_form(int a, int b) {
        std::vector<int> p{a, 3};
        p.insert(p.end(), static_cast<std::size_t>(b), 1);
        return Partition(p);
    }
};

inline void validate(const SummandParams& p) {
    auto fail = [](const std::string& why) { throw std::invalid_argument("bad parameters: " + why); };
    if (p.a < 4 || p.a % 2 || p.b < 2 || p.b % 2)
        fail("a must be even >= 4 and b even >= 2");
    if (p.u % 2 || p.v % 2 == 0 || p.u <= p.v)
        fail("need u even, v odd, u > v");
    if (p.family == Family::UV) {
        if (p.u + p.v != p.n() || p.v > std::min(p.a + 1, p.b + 3))
            fail("need u+v = n and v <= min(a+1, b+3)");
    } else {
        if (p.u + p.v + 2 != p.n() || p.v <= 2 || p.v > std::min(p.a - 1, p.b + 1))
            fail("need u+v+2 = n, v > 2 and v <= min(a-1, b+1)");
    }
}

inline SummandParams make_params(int a, int b, int v, Family f) {
    SummandParams p{a, b, 0, v, f};
    p.u = f == Family::UV ? p.n() - v : p.n() - v - 2;
    validate(p);
    return p;
}

// every admissible tuple of the given family with n <= max_n
inline std::vector<SummandParams> admissible_params(int max_n, Family f) {
    std::vector<SummandParams> out;
    for (int a = 4; a + 5 <= max_n; a += 2)
        for (int b = 2; a + b + 3 <= max_n; b += 2)
            for (int v = 1; v <= a + 1; v += 2) {
                SummandParams p{a, b, 0, v, f};
                p.u = f == Family::UV ? p.n() - v : p.n() - v - 2;
                try {
                    validate(p);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                out.push_back(p);
            }
    return out;
}

namespace detail {

inline std::vector<int> range(int lo, int hi) {
    std::vector<int> r;
    for (int x = lo; x <= hi; ++x)
        r.push_back(x);
    return r;
}

// all k-subsets of pool, in lexicographic order
template <class F>
void for_each_subset(const std::vector<int>& pool, int k, F&& f) {
    if (k < 0 || k > static_cast<int>(pool.size()))
        return;
    std::vector<char> pick(pool.size(), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    do {
        std::vector<int> chosen, rest;
        for (std::size_t i = 0; i < pool.size(); ++i)
            (pick[i] ? chosen : rest).push_back(pool[i]);
        f(chosen, rest);
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

inline std::vector<int> ones(int k) { return std::vector<int>(static_cast<std::size_t>(std::max(k, 0)), 1); }

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace detail

// The set 𝒯 for two-part μ: row 1 is 1..v plus a-v further entries, row 2 is 1 with two
// further entries, and the remaining entries run down the first column.
inline std::vector<Tableau> sigma_uv_tableaux(const SummandParams& p) {
    if (p.family != Family::UV)
        throw std::invalid_argument("sigma_uv needs the two-part family");
    validate(p);
    if (p.v < 3 || p.v > p.a - 1)
        throw std::invalid_argument("sigma_uv needs 3 <= v <= a-1");
    std::vector<Tableau> out;
    detail::for_each_subset(detail::range(p.v + 1, p.u), p.a - p.v, [&](const auto& top, const auto&) {
        std::vector<int> pool;
        for (int x = 2; x <= p.u; ++x)
            if (!std::binary_search(top.begin(), top.end(), x))
                pool.push_back(x);
        detail::for_each_subset(pool, 2, [&](const auto& pair, const auto& column) {
            std::vector<std::vector<int>> rows{detail::concat(detail::range(1, p.v), top),
                                               {1, pair[0], pair[1]}};
            for (int x : column)
                rows.push_back({x});
            out.emplace_back(rows);
        });
    });
    return out;
}

inline GF2Combo build_sigma_uv(const SummandParams& p) {
    return GF2Combo(p.lambda(), Composition(conjugate(p.mu())), sigma_uv_tableaux(p));
}

// The set 𝒯 for three-part μ: row 1 is 1..v plus a-v entries above v, row 2 is 1,1,2, and the
// first column continues 2,3,..,v followed by the unused entries above v.
inline std::vector<Tableau> sigma_uv2_tableaux(const SummandParams& p) {
    if (p.family != Family::UV2)
        throw std::invalid_argument("sigma_uv2 needs the three-part family");
    validate(p);
    std::vector<Tableau> out;
    detail::for_each_subset(detail::range(p.v + 1, p.u), p.a - p.v, [&](const auto& top, const auto& column) {
        std::vector<std::vector<int>> rows{detail::concat(detail::range(1, p.v), top), {1, 1, 2}};
        for (int x = 2; x <= p.v; ++x)
            rows.push_back({x});
        for (int x : column)
            rows.push_back({x});
        out.emplace_back(rows);
    });
    return out;
}

inline GF2Combo build_sigma_uv2(const SummandParams& p) {
    return GF2Combo(p.lambda(), Composition(conjugate(p.mu())), sigma_uv2_tableaux(p));
}

// tail 3,4,..,b+2 shared by A, B and C
inline std::vector<int> singles_tail(const SummandParams& p) { return detail::range(3, p.b + 2); }

inline std::pair<GF2Combo, GF2Combo> build_AB(const SummandParams& p) {
    if (p.family != Family::UV)
        throw std::invalid_argument("A and B need the two-part family");
    validate(p);
    if (p.v < 3 || p.v > p.a - 1)
        throw std::invalid_argument("not enough 1s to fill the bottom row: need 3 <= v <= a-1");
    Composition type(p.lambda());
    Tableau A({detail::concat(detail::concat(detail::ones(p.a - p.v), {2, 2, 2}), singles_tail(p)),
               detail::ones(p.v)});
    Tableau B({detail::concat(detail::concat(detail::ones(p.a - p.v + 2), {2}), singles_tail(p)),
               detail::concat(detail::ones(p.v - 2), {2, 2})});
    return {GF2Combo::single(A, type), GF2Combo::single(B, type)};
}

inline GF2Combo build_C(const SummandParams& p) {
    if (p.family != Family::UV2)
        throw std::invalid_argument("C needs the three-part family");
    validate(p);
    Tableau C({detail::concat(detail::concat(detail::ones(p.a - p.v), {2}), singles_tail(p)), detail::ones(p.v),
               {2, 2}});
    return GF2Combo::single(C, Composition(p.lambda()));
}

// D: rows 1..u and 1..v; E adds a third row 1,2. Both have type μ'.
inline GF2Combo build_D(const SummandParams& p) {
    if (p.family != Family::UV)
        throw std::invalid_argument("D needs the two-part family");
    return GF2Combo::single(Tableau({detail::range(1, p.u), detail::range(1, p.v)}), Composition(conjugate(p.mu())));
}

inline GF2Combo build_E(const SummandParams& p) {
    if (p.family != Family::UV2)
        throw std::invalid_argument("E needs the three-part family");
    return GF2Combo::single(Tableau({detail::range(1, p.u), detail::range(1, p.v), {1, 2}}),
                            Composition(conjugate(p.mu())));
}

// (|𝒯|, number of T in 𝒯 whose (2,2)-entry exceeds v)
inline std::pair<std::uint64_t, std::uint64_t> count_T(int u, int v, int a) {
    std::uint64_t base = binomial(u - v, a - v);
    return {base * binomial(u + v - a - 1, 2), base * binomial(u - a, 2)};
}

// ---------------------------------------------------------------- summand criteria

struct HookForm {
    int a = 0;
    int b = 0;
};

inline HookForm parse_hook_form(const Partition& lambda) {
    int len = lambda.length();
    bool ok = len >= 4 && lambda[1] == 3;
    for (int i = 2; ok && i < len; ++i)
        ok = lambda[i] == 1;
    HookForm h{ok ? lambda[0] : 0, len - 2};
    if (!ok || h.a < 4 || h.a % 2 || h.b % 2)
        throw std::invalid_argument("expected (a,3,1^b) with a >= 4 even and b >= 2 even, got " + paren(lambda));
    return h;
}

struct SummandWitness {
    SummandParams params;
    GF2Combo gamma;             // S^mu -> S^lambda
    GF2Combo delta;             // S^lambda -> S^mu'
    GF2Combo composite;         // delta after gamma, before semistandardising
    GF2Combo target;            // Θ̂_D or Θ̂_E
    bool scalar_odd = false;    // composite == target
    bool target_nonzero = false;
};

struct SummandVerdict {
    Partition mu;
    bool is_summand = false;
    bool via_conjugate = false;   // the criterion matched mu' rather than mu
    std::optional<SummandParams> params;
    std::string parity_factor;
    std::optional<SummandWitness> witness;
};

inline constexpr int kWitnessMaxN = 17;

inline SummandWitness build_witness(const SummandParams& p) {
    SummandWitness w;
    w.params = p;
    if (p.family == Family::UV) {
        auto [A, B] = build_AB(p);
        w.gamma = p.a % 4 == 0 ? A + B : A;
        w.delta = build_sigma_uv(p);
        w.target = build_D(p);
    } else {
        w.gamma = build_C(p);
        w.delta = build_sigma_uv2(p);
        w.target = build_E(p);
    }
    w.composite = compose(w.delta, w.gamma);
    w.scalar_odd = w.composite == w.target;
    w.target_nonzero = !semistandardise(w.target).empty();
    return w;
}

inline SummandVerdict check_summand(const Partition& lambda, const Partition& mu, int witness_max_n = kWitnessMaxN) {
    auto [a, b] = parse_hook_form(lambda);
    int n = lambda.size();
    if (mu.size() != n)
        throw std::invalid_argument("check_summand: mu must be a partition of " + std::to_string(n));
    SummandVerdict out;
    out.mu = mu;
    if (!is_irreducible_specht(mu)) {
        out.parity_factor = "S^mu is reducible";
        return out;
    }
    std::vector<std::pair<Partition, bool>> forms{{mu, false}};
    if (conjugate(mu) != mu)
        forms.push_back({conjugate(mu), true});
    std::vector<std::string> tried;
    for (const auto& [rho, conj] : forms) {
        int u = rho[0], v = rho[1];
        std::string binom = "C(" + std::to_string(u - v) + "," + std::to_string(a - v) + ")";
        if (rho.length() == 2) {
            bool cong = v % 4 == 3;
            bool odd = binom_odd(u - v, a - v);
            tried.push_back("two-part: v mod 4 = " + std::to_string(v % 4) + ", " + binom +
                            (odd ? " odd" : " even"));
            if (cong && odd) {
                out.is_summand = true;
                out.via_conjugate = conj;
                out.params = SummandParams{a, b, u, v, Family::UV};
            }
        } else if (rho.length() == 3 && rho[2] == 2 && v > 2) {
            bool odd = binom_odd(u - v, a - v);
            tried.push_back("three-part: " + binom + (odd ? " odd" : " even"));
            if (odd) {
                out.is_summand = true;
                out.via_conjugate = conj;
                out.params = SummandParams{a, b, u, v, Family::UV2};
            }
        }
        if (out.is_summand)
            break;
    }
    for (std::size_t i = 0; i < tried.size(); ++i)
        out.parity_factor += (i ? "; " : "") + tried[i];
    if (tried.empty())
        out.parity_factor = "not of the form (u,v) or (u,v,2) up to conjugation";
    if (out.is_summand && n <= witness_max_n) {
        validate(*out.params);
        out.witness = build_witness(*out.params);
    }
    return out;
}

// (u,v) and (u,v,2) with u even, v odd, dominating the regularisation and in the block of λ
inline std::vector<Partition> candidate_mus(int a, int b) {
    Partition lambda = SummandParams::hook_form(a, b);
    Partition reg = regularise_closed_form(a, b);
    int n = lambda.size();
    std::vector<Partition> out;
    auto consider = [&](const Partition& mu) {
        if (dominates(mu, reg) && same_block(mu, lambda))
            out.push_back(mu);
    };
    for (int v = 1; 2 * v < n; v += 2) {
        int u = n - v;
        if (u % 2 == 0 && u > v)
            consider(Partition({u, v}));
    }
    for (int v = 3; 2 * v + 2 < n; v += 2) {
        int u = n - v - 2;
        if (u % 2 == 0 && u > v)
            consider(Partition({u, v, 2}));
    }
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) { return y < x; });
    return out;
}

struct SurveyRecord {
    int a = 0;
    int b = 0;
    int n = 0;
    std::vector<Partition> summands;  // 2-regular representatives; conjugates qualify as well
    bool corollary_flag = false;
    std::string corollary_case;       // bullets that fired, e.g. "1+2", or "none"
};

inline std::vector<int> corollary_bullets(int a, int b) {
    std::vector<int> fired;
    int s = a + b;
    if ((s % 8 == 0 || s % 8 == 2) && a >= 6 && b >= 4)
        fired.push_back(1);
    if (s % 4 == 2 && binom_odd(s - 3, a - 3))
        fired.push_back(2);
    if (s % 4 == 0 && binom_odd(s - 9, a - 5))
        fired.push_back(3);
    return fired;
}

inline SurveyRecord survey(int a, int b) {
    SurveyRecord r{a, b, a + b + 3, {}, false, ""};
    Partition lambda = SummandParams::hook_form(a, b);
    for (const auto& mu : candidate_mus(a, b))
        if (check_summand(lambda, mu, 0).is_summand)
            r.summands.push_back(mu);
    auto fired = corollary_bullets(a, b);
    r.corollary_flag = !fired.empty();
    for (std::size_t i = 0; i < fired.size(); ++i)
        r.corollary_case += (i ? "+" : "") + std::to_string(fired[i]);
    if (fired.empty())
        r.corollary_case = "none";
    return r;
}

// Irreducible summand of S^(a,3,1^b), b = n-a-3, of the shape the existence results predict:
// (u,v,2) when n = 3 mod 8, (u,v) with v >= 7 when n = 5 mod 8. Smallest v first.
inline std::optional<Partition> existence_search(int n, int a) {
    if (n % 8 != 3 && n % 8 != 5)
        throw std::invalid_argument("existence_search needs n = 3 or 5 mod 8");
    if (a % 2 || a < 4 || n - a - 3 < 2)
        throw std::invalid_argument("existence_search needs even a with 4 <= a <= n-5");
    for (int v = 3; 2 * v < n; v += 2) {
        std::optional<Partition> mu;
        if (n % 8 == 3) {
            int u = n - v - 2;
            if (u > v)
                mu = Partition({u, v, 2});
        } else if (v >= 7 && v % 4 == 3) {
            int u = n - v;
            if (u > v)
                mu = Partition({u, v});
        }
        if (mu && is_irreducible_specht(*mu) && binom_odd((*mu)[0] - v, (*mu)[0] - a))
            return mu;
    }
    return std::nullopt;
}

// one entry per even a in [lo, n-7]
inline std::vector<std::pair<int, std::optional<Partition>>> existence_table(int n, int lo) {
    std::vector<std::pair<int, std::optional<Partition>>> out;
    for (int a = lo; a <= n - 7; a += 2)
        out.emplace_back(a, existence_search(n, a));
    return out;
}

}  // namespace specht
