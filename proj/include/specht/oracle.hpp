#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf2.hpp"
#include "hom_engine.hpp"
#include "partition.hpp"
#include "tableau.hpp"

// Explicit permutation modules and Specht modules over F_2.
//
// A tabloid is stored as a 64-bit key holding, for each value v = 1..16, its row index in the
// nibble at bit 4*(16-v). Value 1 is most significant, so a smaller key puts small values in
// higher rows; key order refines the dominance order on tabloids.
namespace specht::oracle {

using Key = std::uint64_t;

constexpr int kKeyMaxN = 16;
constexpr int kGuardMaxN = 14;

constexpr int shift_of(int v) { return 4 * (16 - v); }
inline int row_in(Key k, int v) { return static_cast<int>((k >> shift_of(v)) & 15U); }
inline Key place(int v, int row) { return static_cast<Key>(row) << shift_of(v); }

// the action of the transposition (s, s+1)
inline Key swap_adjacent(Key k, int s) {
    int a = shift_of(s), b = shift_of(s + 1);
    Key x = ((k >> a) ^ (k >> b)) & 15U;
    return k ^ (x << a) ^ (x << b);
}

// perm[v] is the image of v (1-based, perm[0] unused)
inline Key permute(Key k, const std::vector<int>& perm) {
    Key out = 0;
    for (std::size_t v = 1; v < perm.size(); ++v)
        out |= place(perm[v], row_in(k, static_cast<int>(v)));
    return out;
}

inline std::vector<std::vector<int>> rows_of_key(Key k, int n, int num_rows) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(num_rows));
    for (int v = 1; v <= n; ++v)
        rows[static_cast<std::size_t>(row_in(k, v))].push_back(v);
    return rows;
}

inline void check_guard(int n) {
    if (n > kGuardMaxN)
        throw GuardError("explicit modules are limited to n <= " + std::to_string(kGuardMaxN));
}

// Open-addressing map from keys to dense indices.
class KeyIndex {
public:
    KeyIndex() = default;
    explicit KeyIndex(const std::vector<Key>& keys) {
        std::size_t cap = 16;
        while (cap < 2 * keys.size() + 1)
            cap <<= 1;
        bits_ = 0;
        while ((std::size_t{1} << bits_) < cap)
            ++bits_;
        slots_.assign(cap, kEmpty);
        vals_.assign(cap, 0);
        for (std::size_t i = 0; i < keys.size(); ++i) {
            std::size_t h = slot(keys[i]);
            while (slots_[h] != kEmpty)
                h = (h + 1) & (cap - 1);
            slots_[h] = keys[i];
            vals_[h] = static_cast<std::uint32_t>(i);
        }
    }
    // -1 if absent
    std::int64_t find(Key k) const {
        std::size_t h = slot(k), mask = slots_.size() - 1;
        while (true) {
            Key s = slots_[h];
            if (s == k)
                return vals_[h];
            if (s == kEmpty)
                return -1;
            h = (h + 1) & mask;
        }
    }

private:
    static constexpr Key kEmpty = ~Key{0};  // would need 16 values in row 15
    std::size_t slot(Key k) const {
        return static_cast<std::size_t>((k * 0x9E3779B97F4A7C15ULL) >> (64 - bits_));
    }
    int bits_ = 0;
    std::vector<Key> slots_;
    std::vector<std::uint32_t> vals_;
};

// sort and cancel pairs: a vector in M^λ as the set of its tabloids
inline void normalize(std::vector<Key>& v) {
    std::sort(v.begin(), v.end());
    std::size_t w = 0;
    for (std::size_t r = 0; r < v.size();) {
        std::size_t s = r;
        while (s < v.size() && v[s] == v[r])
            ++s;
        if ((s - r) % 2)
            v[w++] = v[r];
        r = s;
    }
    v.resize(w);
}

inline std::uint64_t multinomial_size(const Composition& c, std::uint64_t cap) {
    // n! / prod c_i!, saturating at cap
    std::uint64_t result = 1;
    int placed = 0;
    for (int part : c.parts()) {
        for (int k = 1; k <= part; ++k) {
            ++placed;
            // result *= placed / k, kept exact via the binomial recurrence
            result = result / static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(placed) +
                     result % static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(placed) /
                         static_cast<std::uint64_t>(k);
            if (result > cap)
                return cap + 1;
        }
    }
    return result;
}

// ---------------------------------------------------------------- permutation modules

struct TabloidSpace {
    Composition lambda;
    int n = 0;
    std::vector<Key> basis;                            // ascending
    std::vector<std::vector<std::uint32_t>> gens;      // gens[k-1][i]: index of s_k . basis[i]
    KeyIndex lookup;

    std::size_t size() const { return basis.size(); }
    std::size_t index(Key k) const {
        auto i = lookup.find(k);
        if (i < 0)
            throw std::invalid_argument("tabloid not in this permutation module");
        return static_cast<std::size_t>(i);
    }
    std::vector<word_t> dense(const std::vector<Key>& v) const {
        std::vector<word_t> out(words_for(size()), 0);
        for (Key k : v) {
            auto i = index(k);
            out[i / 64] ^= word_t{1} << (i % 64);
        }
        return out;
    }
};

inline TabloidSpace perm_module(const Composition& lambda, std::size_t max_size = std::size_t{1} << 22) {
    TabloidSpace m;
    m.lambda = lambda;
    m.n = lambda.size();
    check_guard(m.n);
    if (lambda.length() > 15)
        throw GuardError("too many rows for the tabloid encoding");
    if (multinomial_size(lambda, max_size) > max_size)
        throw GuardError("permutation module of type " + to_string(lambda) + " is too large");
    std::vector<int> labels;
    for (int r = 0; r < lambda.length(); ++r)
        labels.insert(labels.end(), static_cast<std::size_t>(lambda[r]), r);
    do {
        Key k = 0;
        for (int v = 1; v <= m.n; ++v)
            k |= place(v, labels[static_cast<std::size_t>(v - 1)]);
        m.basis.push_back(k);
    } while (std::next_permutation(labels.begin(), labels.end()));
    m.lookup = KeyIndex(m.basis);
    m.gens.resize(static_cast<std::size_t>(std::max(m.n - 1, 0)));
    for (int s = 1; s < m.n; ++s) {
        auto& g = m.gens[static_cast<std::size_t>(s - 1)];
        g.resize(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            g[i] = static_cast<std::uint32_t>(m.index(swap_adjacent(m.basis[i], s)));
    }
    return m;
}

// ---------------------------------------------------------------- polytabloids

using Filling = std::vector<std::vector<int>>;  // rows of a tableau with distinct entries

inline Key tabloid_of(const Filling& t) {
    Key k = 0;
    for (std::size_t r = 0; r < t.size(); ++r)
        for (int v : t[r])
            k |= place(v, static_cast<int>(r));
    return k;
}

// per column: the partial keys of every arrangement of the column's entries over its rows
inline std::vector<std::vector<Key>> column_parts(const Filling& t) {
    std::vector<std::vector<Key>> parts;
    std::size_t width = t.empty() ? 0 : t[0].size();
    for (std::size_t c = 0; c < width; ++c) {
        std::vector<int> vals;
        for (std::size_t r = 0; r < t.size() && c < t[r].size(); ++r)
            vals.push_back(t[r][c]);
        std::vector<int> rows(vals.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            rows[r] = static_cast<int>(r);
        std::vector<Key> keys;
        do {
            Key k = 0;
            for (std::size_t r = 0; r < vals.size(); ++r)
                k |= place(vals[r], rows[r]);
            keys.push_back(k);
        } while (std::next_permutation(rows.begin(), rows.end()));
        parts.push_back(std::move(keys));
    }
    // longest column innermost
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return parts;
}

// calls f(key) for every tabloid of the cartesian product of the partial-key lists
template <class F>
void for_each_product(const std::vector<std::vector<Key>>& parts, F&& f) {
    if (parts.empty()) {
        f(Key{0});
        return;
    }
    std::size_t outer = parts.size() - 1;
    std::vector<std::size_t> idx(outer, 0);
    const auto& inner = parts.back();
    while (true) {
        Key base = 0;
        for (std::size_t d = 0; d < outer; ++d)
            base |= parts[d][idx[d]];
        for (Key k : inner)
            f(base | k);
        // advance the outer odometer
        std::size_t d = outer;
        while (d > 0) {
            --d;
            if (++idx[d] < parts[d].size())
                break;
            idx[d] = 0;
            if (d == 0)
                return;
        }
        if (outer == 0)
            return;
    }
}

inline std::vector<Key> polytabloid(const Filling& t) {
    std::vector<Key> out;
    for_each_product(column_parts(t), [&](Key k) { out.push_back(k); });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Filling> standard_tableaux(const Partition& shape) {
    std::vector<Filling> out;
    int n = shape.size();
    Filling cur(static_cast<std::size_t>(shape.length()));
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.push_back(cur);
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            auto ur = static_cast<std::size_t>(r);
            int len = static_cast<int>(cur[ur].size());
            if (len < shape[r] && (r == 0 || static_cast<int>(cur[ur - 1].size()) > len)) {
                cur[ur].push_back(v);
                self(self, v + 1);
                cur[ur].pop_back();
            }
        }
    };
    rec(rec, 1);
    return out;
}

// entries numbered down the columns, left to right
inline Filling column_reading_tableau(const Partition& shape) {
    Filling t(static_cast<std::size_t>(shape.length()));
    Partition c = conjugate(shape);
    int v = 1;
    for (int j = 0; j < c.length(); ++j)
        for (int r = 0; r < c[j]; ++r)
            t[static_cast<std::size_t>(r)].push_back(v++);
    return t;
}

inline Filling filling_from_key(Key k, const Partition& shape) {
    return rows_of_key(k, shape.size(), shape.length());
}

// ---------------------------------------------------------------- Θ and ψ on tabloids

// Θ_T({t}): distribute the values in row j of the source tabloid over target rows, T^j_i of
// them into row i, in all ways. src_rows: number of rows of the source shape.
template <class F>
void theta_apply(const Tableau& T, Key x, int n, F&& f) {
    std::vector<std::vector<Key>> parts;
    for (int j = 0; j < T.num_rows(); ++j) {
        std::vector<int> vals;
        for (int v = 1; v <= n; ++v)
            if (row_in(x, v) == j)
                vals.push_back(v);
        std::vector<int> labels;
        for (char ch : T.row(j))
            labels.push_back(static_cast<unsigned char>(ch) - 1);
        if (labels.size() != vals.size())
            throw std::invalid_argument("theta_apply: tabloid does not match the tableau shape");
        std::vector<Key> keys;
        do {
            Key k = 0;
            for (std::size_t r = 0; r < vals.size(); ++r)
                k |= place(vals[r], labels[r]);
            keys.push_back(k);
        } while (std::next_permutation(labels.begin(), labels.end()));
        parts.push_back(std::move(keys));
    }
    for_each_product(parts, f);
}

inline std::vector<Key> theta_apply_vec(const Tableau& T, const std::vector<Key>& v, int n) {
    std::vector<Key> out;
    for (Key x : v)
        theta_apply(T, x, n, [&](Key k) { out.push_back(k); });
    normalize(out);
    return out;
}

// ψ_{d,t}: move t of the values in row d+1 up to row d (rows 1-based), all choices.
template <class F>
void psi_apply(int d, int t, Key x, int n, F&& f) {
    std::vector<int> vals;
    for (int v = 1; v <= n; ++v)
        if (row_in(x, v) == d)
            vals.push_back(v);
    if (t > static_cast<int>(vals.size()))
        return;
    std::vector<char> pick(vals.size(), 0);
    std::fill(pick.end() - t, pick.end(), 1);
    do {
        Key k = x;
        for (std::size_t r = 0; r < vals.size(); ++r)
            if (pick[r])
                k ^= place(vals[r], d) ^ place(vals[r], d - 1);
        f(k);
    } while (std::next_permutation(pick.begin(), pick.end()));
}

inline std::vector<Key> psi_apply_vec(int d, int t, const std::vector<Key>& v, int n) {
    std::vector<Key> out;
    for (Key x : v)
        psi_apply(d, t, x, n, [&](Key k) { out.push_back(k); });
    normalize(out);
    return out;
}

// Matrix of a tabloid-level map src -> dst; rows are images of the source basis (row-image
// convention: a vector is a row, maps act on the right).
template <class Apply>
GF2Matrix tabloid_map_matrix(const TabloidSpace& src, const TabloidSpace& dst, Apply&& apply) {
    GF2Matrix m(src.size(), dst.size());
    for (std::size_t i = 0; i < src.size(); ++i)
        apply(src.basis[i], [&](Key k) { m.flip(i, dst.index(k)); });
    return m;
}

inline GF2Matrix theta_matrix(const Tableau& T, const TabloidSpace& src, const TabloidSpace& dst) {
    return tabloid_map_matrix(src, dst, [&](Key x, auto&& emit) { theta_apply(T, x, src.n, emit); });
}

inline Composition psi_target(int d, int t, const Composition& lambda) {
    if (d < 1 || d >= lambda.length() || t < 1 || t > lambda[d])
        throw std::invalid_argument("psi index out of range");
    std::vector<int> nu = lambda.parts();
    nu[static_cast<std::size_t>(d - 1)] += t;
    nu[static_cast<std::size_t>(d)] -= t;
    return Composition(nu);
}

inline GF2Matrix psi_matrix(int d, int t, const TabloidSpace& src, const TabloidSpace& dst) {
    if (dst.lambda != psi_target(d, t, src.lambda))
        throw std::invalid_argument("psi_matrix: target module has the wrong type");
    return tabloid_map_matrix(src, dst, [&](Key x, auto&& emit) { psi_apply(d, t, x, src.n, emit); });
}

// ---------------------------------------------------------------- combinations at tabloid level

inline std::vector<Key> theta_combo_apply(const GF2Combo& c, const std::vector<Key>& v, int n) {
    std::vector<Key> out;
    for (const auto& T : c.support())
        for (Key x : v)
            theta_apply(T, x, n, [&](Key k) { out.push_back(k); });
    normalize(out);
    return out;
}

// the restriction of a combination to S^shape: images of all standard polytabloids
inline std::vector<std::vector<Key>> restricted_images(const GF2Combo& c) {
    int n = c.shape().size();
    check_guard(n);
    std::vector<std::vector<Key>> out;
    for (const auto& t : standard_tableaux(c.shape()))
        out.push_back(theta_combo_apply(c, polytabloid(t), n));
    return out;
}

inline bool zero_on_specht(const GF2Combo& c) {
    auto imgs = restricted_images(c);
    return std::all_of(imgs.begin(), imgs.end(), [](const auto& v) { return v.empty(); });
}

inline bool equal_on_specht(const GF2Combo& a, const GF2Combo& b) {
    if (a.shape() != b.shape() || a.ctype() != b.ctype())
        throw std::invalid_argument("equal_on_specht: combinations of different shape or type");
    return zero_on_specht(a + b);
}

// ---------------------------------------------------------------- Specht subspace of M^λ

struct SpechtSubspace {
    TabloidSpace ambient;
    GF2Matrix basis_matrix;  // rows: polytabloids of the standard tableaux
    std::size_t dim = 0;
};

inline SpechtSubspace specht_subspace(const Partition& lambda, std::size_t max_size = std::size_t{1} << 20) {
    SpechtSubspace s;
    s.ambient = perm_module(lambda, max_size);
    auto st = standard_tableaux(lambda);
    s.basis_matrix = GF2Matrix(st.size(), s.ambient.size());
    for (std::size_t i = 0; i < st.size(); ++i)
        for (Key k : polytabloid(st[i]))
            s.basis_matrix.set(i, s.ambient.index(k));
    s.dim = s.basis_matrix.rank();
    return s;
}

// ---------------------------------------------------------------- module representations

// Generators act on column vectors: gens[k-1] is the matrix of s_k.
struct ModuleRep {
    int n = 0;
    std::size_t dim = 0;
    std::vector<SparseGF2> gens;

    ModuleRep dual() const {
        ModuleRep d{n, dim, {}};
        for (const auto& g : gens)
            d.gens.push_back(g.transpose());
        return d;
    }
};

// Word for a permutation in application order: apply s_{w[0]} first.
inline std::vector<int> word_for(std::vector<int> perm) {
    // left-multiplying by s_i swaps the values i, i+1 in one-line notation
    int n = static_cast<int>(perm.size()) - 1;
    std::vector<int> pos(perm.size());
    for (int v = 1; v <= n; ++v)
        pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = v;
    std::vector<int> recorded;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i < n; ++i) {
            auto ui = static_cast<std::size_t>(i);
            if (pos[ui + 1] < pos[ui]) {
                std::swap(perm[static_cast<std::size_t>(pos[ui])], perm[static_cast<std::size_t>(pos[ui + 1])]);
                std::swap(pos[ui], pos[ui + 1]);
                recorded.push_back(i);
                changed = true;
            }
        }
    }
    std::reverse(recorded.begin(), recorded.end());
    return recorded;
}

inline GF2Matrix apply_word(const ModuleRep& rep, const std::vector<int>& word, GF2Matrix y) {
    for (int s : word)
        y = rep.gens[static_cast<std::size_t>(s - 1)].times(y);
    return y;
}

inline std::vector<word_t> apply_word(const ModuleRep& rep, const std::vector<int>& word,
                                      std::vector<word_t> v) {
    for (int s : word)
        v = rep.gens[static_cast<std::size_t>(s - 1)].apply(v);
    return v;
}

// Specht module in the basis of standard polytabloids. The basis is ordered by the key of the
// tabloid {T}, which is the unique key-minimal tabloid of e_T; the matrix U with
// U[i][j] = [{T_i} occurs in e_{T_j}] is therefore unitriangular and coordinates of any
// vector of S^λ follow from its restriction to these tabloids by forward elimination.
class SpechtModel {
public:
    SpechtModel() = default;
    explicit SpechtModel(const Partition& lambda) : lambda_(lambda) {
        n_ = lambda.size();
        check_guard(n_);
        if (lambda.length() > 15)
            throw GuardError("too many rows for the tabloid encoding");
        for (const auto& t : standard_tableaux(lambda))
            tops_.push_back(tabloid_of(t));
        std::sort(tops_.begin(), tops_.end());
        index_ = KeyIndex(tops_);
        build();
    }

    const Partition& lambda() const { return lambda_; }
    int n() const { return n_; }
    std::size_t dim() const { return tops_.size(); }
    const ModuleRep& rep() const { return rep_; }
    const std::vector<Key>& tops() const { return tops_; }
    std::int64_t index_of_top(Key k) const { return index_.find(k); }
    Filling tableau(std::size_t i) const { return filling_from_key(tops_[i], lambda_); }

    // coordinates of a vector of S^λ given by the indices of basis tops it contains
    std::vector<std::uint32_t> solve_tops(std::vector<std::uint32_t> hits) const {
        std::vector<char> pending(dim(), 0);
        std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
        for (auto h : hits) {
            pending[h] ^= 1;
            heap.push(h);
        }
        std::vector<std::uint32_t> coords;
        while (!heap.empty()) {
            auto i = heap.top();
            heap.pop();
            if (!pending[i])
                continue;
            coords.push_back(i);
            for (auto idx : ucols_[i]) {
                pending[idx] ^= 1;
                if (pending[idx])
                    heap.push(idx);
            }
        }
        return coords;
    }

    // coordinates of a tabloid-level vector known to lie in S^λ
    std::vector<word_t> coordinates(const std::vector<Key>& v) const {
        std::vector<std::uint32_t> hits;
        for (Key k : v) {
            auto i = index_.find(k);
            if (i >= 0)
                hits.push_back(static_cast<std::uint32_t>(i));
        }
        std::vector<word_t> out(words_for(dim()), 0);
        for (auto c : solve_tops(hits))
            out[c / 64] ^= word_t{1} << (c % 64);
        return out;
    }

    // Σ coords e_{T_i} at tabloid level
    std::vector<Key> tabloid_vector(const std::vector<word_t>& coords) const {
        std::vector<Key> out;
        for (std::size_t i = 0; i < dim(); ++i)
            if ((coords[i / 64] >> (i % 64)) & 1U) {
                auto p = polytabloid(tableau(i));
                out.insert(out.end(), p.begin(), p.end());
            }
        normalize(out);
        return out;
    }

    bool contains(const std::vector<Key>& v) const {
        auto sorted = v;
        normalize(sorted);
        return tabloid_vector(coordinates(sorted)) == sorted;
    }

    std::size_t column_reading_index() const {
        return static_cast<std::size_t>(index_.find(tabloid_of(column_reading_tableau(lambda_))));
    }

private:
    void build() {
        std::size_t D = dim();
        ucols_.assign(D, {});
        rep_.n = n_;
        rep_.dim = D;
        // cols[k][j]: coordinates of s_k e_{T_j}
        std::vector<std::vector<std::vector<std::uint32_t>>> cols(
            static_cast<std::size_t>(std::max(n_ - 1, 0)), std::vector<std::vector<std::uint32_t>>(D));
        for (std::size_t j = 0; j < D; ++j) {
            Key top = tops_[j];
            auto t = filling_from_key(top, lambda_);
            std::vector<int> row_of(static_cast<std::size_t>(n_) + 2, -1), col_of(row_of);
            for (std::size_t r = 0; r < t.size(); ++r)
                for (std::size_t c = 0; c < t[r].size(); ++c) {
                    row_of[static_cast<std::size_t>(t[r][c])] = static_cast<int>(r);
                    col_of[static_cast<std::size_t>(t[r][c])] = static_cast<int>(c);
                }
            std::vector<int> same_row;
            for (int s = 1; s < n_; ++s) {
                auto us = static_cast<std::size_t>(s);
                auto& col = cols[us - 1][j];
                if (row_of[us] == row_of[us + 1]) {
                    same_row.push_back(s);
                } else if (col_of[us] == col_of[us + 1]) {
                    col.push_back(static_cast<std::uint32_t>(j));
                } else {
                    auto idx = index_.find(swap_adjacent(top, s));
                    if (idx < 0)
                        throw std::logic_error("standard swap left the basis");
                    col.push_back(static_cast<std::uint32_t>(idx));
                }
            }
            std::vector<std::vector<std::uint32_t>> hits(same_row.size());
            auto& uc = ucols_[j];
            for_each_product(column_parts(t), [&](Key k) {
                auto i = index_.find(k);
                if (i >= 0)
                    uc.push_back(static_cast<std::uint32_t>(i));
                for (std::size_t q = 0; q < same_row.size(); ++q) {
                    auto h = index_.find(swap_adjacent(k, same_row[q]));
                    if (h >= 0)
                        hits[q].push_back(static_cast<std::uint32_t>(h));
                }
            });
            std::sort(uc.begin(), uc.end());
            for (std::size_t q = 0; q < same_row.size(); ++q)
                pending_.push_back({static_cast<std::size_t>(same_row[q]), j, std::move(hits[q])});
        }
        for (auto& p : pending_)
            cols[p.s - 1][p.j] = solve_tops(std::move(p.hits));
        pending_.clear();
        for (int s = 1; s < n_; ++s) {
            SparseGF2 g(D, D);
            const auto& cs = cols[static_cast<std::size_t>(s - 1)];
            for (std::size_t j = 0; j < D; ++j)
                for (auto i : cs[j])
                    g.entries[i].push_back(static_cast<std::uint32_t>(j));
            rep_.gens.push_back(std::move(g));
        }
    }

    struct Pending {
        std::size_t s;
        std::size_t j;
        std::vector<std::uint32_t> hits;
    };

    Partition lambda_;
    int n_ = 0;
    std::vector<Key> tops_;
    KeyIndex index_;
    std::vector<std::vector<std::uint32_t>> ucols_;
    std::vector<Pending> pending_;
    ModuleRep rep_;
};

// ---------------------------------------------------------------- Hom via the Garnir presentation

// Defining relations of S^ν on its generator e_t, t the column reading tableau: each relation
// is a list of permutation words whose sum kills e_t (column transpositions fix e_t; Garnir
// sums over shuffles of a column tail with the top of the next column vanish).
inline std::vector<std::vector<std::vector<int>>> specht_relations(const Partition& nu) {
    std::vector<std::vector<std::vector<int>>> rels;
    Partition c = conjugate(nu);
    int n = nu.size();
    std::vector<int> start(static_cast<std::size_t>(c.length()) + 1, 0);
    for (int j = 0; j < c.length(); ++j)
        start[static_cast<std::size_t>(j + 1)] = start[static_cast<std::size_t>(j)] + c[j];
    for (int j = 0; j < c.length(); ++j)
        for (int r = 1; r < c[j]; ++r) {
            int s = start[static_cast<std::size_t>(j)] + r;
            rels.push_back({{}, {s}});  // (1 + s) e_t = 0
        }
    for (int j = 0; j + 1 < c.length(); ++j) {
        for (int i = 1; i <= c[j + 1]; ++i) {
            int lo = start[static_cast<std::size_t>(j)] + i;       // first value of X
            int xs = c[j] - i + 1;                                  // |X|
            int ys = i;                                             // |Y|
            int len = xs + ys;
            std::vector<std::vector<int>> words;
            std::vector<char> pick(static_cast<std::size_t>(len), 0);
            std::fill(pick.begin(), pick.begin() + xs, 1);
            // pick marks the positions of the interval receiving X; iterate all subsets
            std::sort(pick.begin(), pick.end());
            do {
                std::vector<int> perm(static_cast<std::size_t>(n) + 1);
                for (int v = 1; v <= n; ++v)
                    perm[static_cast<std::size_t>(v)] = v;
                int xi = 0, yi = 0;
                for (int p = 0; p < len; ++p) {
                    int target = lo + p;
                    if (pick[static_cast<std::size_t>(p)])
                        perm[static_cast<std::size_t>(lo + xi++)] = target;
                    else
                        perm[static_cast<std::size_t>(lo + xs + yi++)] = target;
                }
                words.push_back(word_for(perm));
            } while (std::next_permutation(pick.begin(), pick.end()));
            rels.push_back(std::move(words));
        }
    }
    std::stable_sort(rels.begin(), rels.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return rels;
}

// Rows of the result form a basis of {w in V : every relation of S^ν kills w}, i.e. the
// images of e_t under a basis of Hom(S^ν, V).
inline GF2Matrix hom_generator_images(const Partition& nu, const ModuleRep& target) {
    if (nu.size() != target.n)
        throw std::invalid_argument("hom_generator_images: degree mismatch");
    GF2Matrix y = GF2Matrix::identity(target.dim);  // columns span the candidates
    for (const auto& rel : specht_relations(nu)) {
        if (y.cols() == 0)
            break;
        GF2Matrix z(target.dim, y.cols());
        for (const auto& w : rel)
            z = add(z, apply_word(target, w, y));
        GF2Matrix null = z.nullspace();
        if (null.rows() == y.cols())
            continue;
        y = multiply(y, null.transpose());
    }
    return y.transpose();
}

// Row-image matrix of the homomorphism S^ν -> V sending e_t to w: row i is the image of the
// i-th standard basis vector of the source model.
inline GF2Matrix map_matrix(const SpechtModel& source, const ModuleRep& target, const std::vector<word_t>& w) {
    std::size_t D = source.dim();
    GF2Matrix out(D, target.dim);
    std::vector<char> seen(D, 0);
    std::deque<std::size_t> queue;
    auto put = [&](std::size_t i, const std::vector<word_t>& v) {
        std::copy(v.begin(), v.end(), out.row(i));
        seen[i] = 1;
        queue.push_back(i);
    };
    put(source.column_reading_index(), w);
    const auto& tops = source.tops();
    while (!queue.empty()) {
        std::size_t j = queue.front();
        queue.pop_front();
        std::vector<word_t> v(out.row(j), out.row(j) + out.stride());
        for (int s = 1; s < source.n(); ++s) {
            auto idx = source.index_of_top(swap_adjacent(tops[j], s));
            if (idx < 0 || static_cast<std::size_t>(idx) == j || seen[static_cast<std::size_t>(idx)])
                continue;
            put(static_cast<std::size_t>(idx), target.gens[static_cast<std::size_t>(s - 1)].apply(v));
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::logic_error("standard tableaux not connected by swaps");
    return out;
}

// ρ_src(s)^T Γ = Γ ρ_dst(s)^T for every generator
inline bool intertwines(const ModuleRep& src, const ModuleRep& dst, const GF2Matrix& gamma) {
    for (std::size_t k = 0; k < src.gens.size(); ++k) {
        GF2Matrix lhs = src.gens[k].transpose().times(gamma);
        GF2Matrix rhs = dst.gens[k].times(gamma.transpose()).transpose();
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

struct HomResult {
    std::size_t dim = 0;
    GF2Matrix generator_images;  // rows: images of e_t, t the column reading tableau of mu
};

inline HomResult hom_dim_bruteforce(const Partition& mu, const SpechtModel& target) {
    HomResult r;
    r.generator_images = hom_generator_images(mu, target.rep());
    r.dim = r.generator_images.rows();
    return r;
}

inline HomResult hom_dim_bruteforce(const Partition& mu, const Partition& lambda) {
    return hom_dim_bruteforce(mu, SpechtModel(lambda));
}

inline std::vector<word_t> row_vector(const GF2Matrix& m, std::size_t r) {
    return std::vector<word_t>(m.row(r), m.row(r) + m.stride());
}

struct SummandCheck {
    bool is_summand = false;
    std::size_t hom_up = 0;    // dim Hom(S^mu, S^lambda)
    std::size_t hom_down = 0;  // dim Hom(S^lambda, S^mu)
    GF2Matrix gamma;           // S^mu -> S^lambda, row-image convention
    GF2Matrix delta;           // S^lambda -> S^mu
    GF2Matrix product;         // delta after gamma: identity when a summand is found
};

// S^mu (irreducible) is a summand of S^lambda iff some δ∘γ is nonzero, hence the identity.
inline SummandCheck verify_summand(const SpechtModel& lam, const SpechtModel& mu) {
    SummandCheck out;
    auto up = hom_generator_images(mu.lambda(), lam.rep());
    auto down = hom_generator_images(lam.lambda(), mu.rep());
    out.hom_up = up.rows();
    out.hom_down = down.rows();
    std::vector<GF2Matrix> deltas;
    for (std::size_t b = 0; b < down.rows(); ++b)
        deltas.push_back(map_matrix(lam, mu.rep(), row_vector(down, b)));
    for (std::size_t a = 0; a < up.rows(); ++a) {
        GF2Matrix gamma = map_matrix(mu, lam.rep(), row_vector(up, a));
        for (auto& delta : deltas) {
            GF2Matrix prod = multiply(gamma, delta);
            if (!prod.is_zero()) {
                out.is_summand = true;
                out.gamma = gamma;
                out.delta = delta;
                out.product = std::move(prod);
                return out;
            }
        }
    }
    return out;
}

// the image of e_t spans a genuine homomorphism only if the BFS-built matrix intertwines
inline bool certified(const SummandCheck& c, const SpechtModel& lam, const SpechtModel& mu) {
    return !c.is_summand || (intertwines(mu.rep(), lam.rep(), c.gamma) && intertwines(lam.rep(), mu.rep(), c.delta) &&
                             c.product == GF2Matrix::identity(mu.dim()));
}

inline SummandCheck verify_summand(const Partition& lambda, const Partition& mu) {
    if (!is_irreducible_specht(mu))
        throw std::invalid_argument("verify_summand needs an irreducible Specht module S^mu");
    SpechtModel lam(lambda), m(mu);
    auto c = verify_summand(lam, m);
    if (!certified(c, lam, m))
        throw std::logic_error("summand witness failed the intertwining check");
    return c;
}

inline std::size_t endo_dim(const SpechtModel& m) {
    return hom_generator_images(m.lambda(), m.rep()).rows();
}

inline std::size_t endo_dim(const Partition& lambda) { return endo_dim(SpechtModel(lambda)); }

// ---------------------------------------------------------------- kernel intersection

struct KitResult {
    std::size_t ambient = 0;
    std::size_t specht_dim = 0;
    std::size_t kernel_dim = 0;
    bool equal = false;
};

// S^λ against the common kernel of all ψ_{d,t} on M^λ
inline KitResult kit_check(const Partition& lambda, std::size_t max_size = std::size_t{1} << 14) {
    KitResult r;
    auto s = specht_subspace(lambda, max_size);
    r.ambient = s.ambient.size();
    r.specht_dim = s.dim;
    GF2Matrix stacked(0, r.ambient);
    for (int d = 1; d < lambda.length(); ++d)
        for (int t = 1; t <= lambda[d]; ++t) {
            auto target = perm_module(psi_target(d, t, lambda), max_size);
            stacked = vstack(stacked, psi_matrix(d, t, s.ambient, target).transpose());
        }
    GF2Matrix kernel = stacked.rows() ? stacked.nullspace() : GF2Matrix::identity(r.ambient);
    r.kernel_dim = kernel.rows();
    r.equal = same_row_space(kernel, s.basis_matrix);
    return r;
}

// ---------------------------------------------------------------- Hom by spinning

// dim Hom(V, W) for V generated by gen: spin V breadth-first over the generators, record each
// linear dependency the moment rank stalls, and impose it on the candidate images in W.
inline std::size_t hom_dim_by_spin(const ModuleRep& src, const std::vector<word_t>& gen, const ModuleRep& dst) {
    std::size_t dim = src.dim;
    // echelon rows carry [vector | combination of spin vectors]
    std::size_t total = dim + dim;
    std::vector<std::vector<word_t>> ech;
    std::vector<std::size_t> piv;
    std::vector<std::vector<word_t>> spin;     // spin vectors
    std::vector<GF2Matrix> images;             // images[i]: dst.dim x r, image of spin[i]
    GF2Matrix y = GF2Matrix::identity(dst.dim);
    auto reduce = [&](std::vector<word_t>& row) {
        for (std::size_t e = 0; e < ech.size(); ++e)
            if ((row[piv[e] / 64] >> (piv[e] % 64)) & 1U)
                for (std::size_t w = 0; w < row.size(); ++w)
                    row[w] ^= ech[e][w];
    };
    auto leading = [&](const std::vector<word_t>& row) -> std::size_t {
        for (std::size_t b = 0; b < dim; ++b)
            if ((row[b / 64] >> (b % 64)) & 1U)
                return b;
        return dim;
    };
    auto augmented = [&](const std::vector<word_t>& v, std::size_t id) {
        std::vector<word_t> row(words_for(total), 0);
        for (std::size_t b = 0; b < dim; ++b)
            if ((v[b / 64] >> (b % 64)) & 1U)
                row[b / 64] |= word_t{1} << (b % 64);
        std::size_t c = dim + id;
        row[c / 64] ^= word_t{1} << (c % 64);
        return row;
    };
    auto add_spin = [&](const std::vector<word_t>& v, GF2Matrix img) {
        std::size_t id = spin.size();
        auto row = augmented(v, id);
        reduce(row);
        piv.push_back(leading(row));
        ech.push_back(row);
        spin.push_back(v);
        images.push_back(std::move(img));
    };
    add_spin(gen, y);
    for (std::size_t i = 0; i < spin.size(); ++i) {
        for (std::size_t k = 0; k < src.gens.size(); ++k) {
            auto v = src.gens[k].apply(spin[i]);
            std::vector<word_t> probe(words_for(total), 0);
            for (std::size_t b = 0; b < dim; ++b)
                if ((v[b / 64] >> (b % 64)) & 1U)
                    probe[b / 64] |= word_t{1} << (b % 64);
            reduce(probe);
            GF2Matrix img = dst.gens[k].times(images[i]);
            if (leading(probe) < dim) {
                if (spin.size() >= dim)
                    throw std::logic_error("spin exceeded the module dimension");
                add_spin(v, std::move(img));
                continue;
            }
            // v = sum of the spin vectors recorded in the combination part of probe
            GF2Matrix z = img;
            for (std::size_t j = 0; j < spin.size(); ++j) {
                std::size_t c = dim + j;
                if ((probe[c / 64] >> (c % 64)) & 1U)
                    z = add(z, images[j]);
            }
            GF2Matrix null = z.nullspace();
            if (null.rows() == z.cols())
                continue;
            GF2Matrix nt = null.transpose();
            for (auto& im : images)
                im = multiply(im, nt);
        }
    }
    if (spin.size() != dim)
        throw std::invalid_argument("hom_dim_by_spin: generator does not generate the module");
    return images[0].cols();
}

}  // namespace specht::oracle
