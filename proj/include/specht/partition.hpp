#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace specht {

// Weakly decreasing positive parts, no trailing zeros. The empty partition is legal.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 0-based; out of range reads as 0
    int operator[](int i) const {
        return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Non-negative parts; zeros are significant (they are positions of values).
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0)
                throw std::invalid_argument("composition parts must be non-negative");
    }
    Composition(const Partition& p) : parts_(p.parts()) {}  // NOLINT: implicit by design

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const {
        return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    bool is_partition() const {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] > parts_[i - 1])
                return false;
        return true;
    }
    // drops trailing zeros; throws unless weakly decreasing
    Partition to_partition() const { return Partition(parts_); }

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

struct Node {
    int row = 1;
    int col = 1;
    auto operator<=>(const Node&) const = default;
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

inline bool dominates(const Composition& p, const Composition& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("dominance needs equal sizes");
    int sp = 0, sq = 0;
    int len = std::max(p.length(), q.length());
    for (int i = 0; i < len; ++i) {
        sp += p[i];
        sq += q[i];
        if (sp < sq)
            return false;
    }
    return true;
}

inline bool is_two_regular(const Partition& p) {
    for (int i = 1; i < p.length(); ++i)
        if (p[i] == p[i - 1])
            return false;
    return true;
}

// Ladder l holds the nodes (i,j) with i+j = l+1; slide every node to the top of its ladder.
inline Partition regularise(const Partition& p) {
    int n = p.size();
    if (n == 0)
        return p;
    std::vector<int> count(static_cast<std::size_t>(n + p.length() + 1), 0);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p[i - 1]; ++j)
            ++count[static_cast<std::size_t>(i + j - 1)];
    std::vector<int> rows;
    for (int i = 1;; ++i) {
        int len = 0;
        for (int j = 1; i + j - 1 < static_cast<int>(count.size()); ++j) {
            if (count[static_cast<std::size_t>(i + j - 1)] >= i)
                len = j;
        }
        if (len == 0)
            break;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

inline Partition hook_partition(int a, int b) {
    std::vector<int> parts{a, 3};
    parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
    return Partition(std::move(parts));
}

inline Partition regularise_closed_form(int a, int b) {
    if (a < 4 || b < 2 || a % 2 != 0 || b % 2 != 0)
        throw std::invalid_argument("regularise_closed_form needs even a >= 4, even b >= 2");
    if (a > b)
        return Partition{a, b + 1, 2};
    return Partition{b + 2, a - 1, 2};
}

namespace detail {

// first-column hook lengths with r rows
inline std::vector<int> beta_numbers(const Partition& p, int r) {
    std::vector<int> beta(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        beta[static_cast<std::size_t>(i)] = p[i] + (r - 1 - i);
    return beta;
}

inline Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    int r = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < r; ++i)
        parts.push_back(beta[static_cast<std::size_t>(i)] - (r - 1 - i));
    return Partition(std::move(parts));
}

}  // namespace detail

// Beta-numbers on two runners, each pushed down as far as possible.
inline Partition two_core(const Partition& p) {
    int r = p.length();
    auto beta = detail::beta_numbers(p, r);
    int evens = 0, odds = 0;
    for (int x : beta)
        (x % 2 == 0 ? evens : odds)++;
    std::vector<int> out;
    for (int k = 0; k < evens; ++k)
        out.push_back(2 * k);
    for (int k = 0; k < odds; ++k)
        out.push_back(2 * k + 1);
    return detail::from_beta(std::move(out));
}

inline bool same_block(const Partition& p, const Partition& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("same_block needs equal sizes");
    return two_core(p) == two_core(q);
}

inline int l_value(long long k) {
    if (k < 0)
        throw std::invalid_argument("l_value needs k >= 0");
    int l = 1;
    while ((1LL << l) <= k)
        ++l;
    return l;
}

namespace detail {

inline bool row_condition(const Partition& p) {
    for (int i = 0; i < p.length(); ++i) {
        long long diff = p[i] - p[i + 1];
        // exponent ceil(log2(k+1)): zero when the next two parts agree, unlike l_value(0)
        long long k = p[i + 1] - p[i + 2];
        long long mod = k == 0 ? 1 : 1LL << l_value(k);
        if ((diff + 1) % mod != 0)
            return false;
    }
    return true;
}

}  // namespace detail

inline bool is_irreducible_specht(const Partition& p) {
    return detail::row_condition(p) || detail::row_condition(conjugate(p)) ||
           p == Partition{2, 2};
}

inline bool binom_odd(long long m, long long k) {
    if (m < 0 || k < 0 || k > m)
        return false;
    return (k & ~m) == 0;
}

// (c+2x_c, ..., d+2x_d, d^{2y_d}, (d-1)^{2y_{d-1}+1}, ..., 1^{2y_1+1}) with
// c+1 >= d >= 0, x_c >= ... >= x_d >= 0, y_i >= 0. A k=0 row with x_0=0 is absent.
inline bool is_two_quotient_separated(const Partition& p) {
    if (p.empty())
        return true;
    int len = p.length();
    for (int d = 0; d <= p[0] + 1; ++d) {
        for (int c = std::max(d - 1, 0); c <= p[0]; ++c) {
            if (c < d - 1)
                continue;
            int r = 0;
            bool ok = true;
            int prev_x = p[0];
            for (int k = c; k >= d && ok; --k) {
                if (k == 0 && r == len)
                    break;
                if (r >= len) {
                    ok = false;
                    break;
                }
                int diff = p[r] - k;
                if (diff < 0 || diff % 2 || diff / 2 > prev_x)
                    ok = false;
                prev_x = diff / 2;
                ++r;
            }
            if (!ok)
                continue;
            if (d >= 1) {
                int cnt = 0;
                while (r < len && p[r] == d) {
                    ++cnt;
                    ++r;
                }
                ok = cnt % 2 == 0;
            }
            for (int k = d - 1; k >= 1 && ok; --k) {
                int cnt = 0;
                while (r < len && p[r] == k) {
                    ++cnt;
                    ++r;
                }
                ok = cnt % 2 == 1;
            }
            if (ok && r == len)
                return true;
        }
    }
    return false;
}

// ---- text format: "4,3,1^2"; "" and "()" denote the empty partition ----

inline std::string to_string(const Partition& p) {
    std::string out;
    int i = 0;
    while (i < p.length()) {
        int j = i;
        while (j < p.length() && p[j] == p[i])
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(p[i]);
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline std::string to_string(const Composition& c) {
    std::string out;
    for (int i = 0; i < c.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

// "(6,3)" style used in reports
inline std::string paren(const Partition& p) {
    std::string out = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p[i]);
    }
    return out + ")";
}

namespace detail {

inline int parse_uint(std::string_view s) {
    if (s.empty() || s.size() > 9)
        throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    int v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("bad integer '" + std::string(s) + "'");
        v = v * 10 + (ch - '0');
    }
    return v;
}

}  // namespace detail

inline Partition parse_partition(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ')
            s += ch;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (s.empty())
        return Partition();
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos)
            end = s.size();
        std::string_view tok(s.data() + start, end - start);
        auto caret = tok.find('^');
        int value = detail::parse_uint(tok.substr(0, caret));
        int mult = caret == std::string_view::npos ? 1 : detail::parse_uint(tok.substr(caret + 1));
        if (value == 0 || mult == 0)
            throw std::invalid_argument("partition parts and exponents must be positive");
        parts.insert(parts.end(), static_cast<std::size_t>(mult), value);
        start = end + 1;
    }
    return Partition(std::move(parts));
}

// n! / prod hook lengths, exact for the sizes used here
inline std::uint64_t hook_length_dim(const Partition& p) {
    Partition c = conjugate(p);
    std::vector<int> hooks;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j)
            hooks.push_back(p[i] - j + c[j] - i - 1);
    // multiply 1..n, dividing out hooks greedily with gcd to stay in range
    std::uint64_t num = 1;
    std::vector<std::uint64_t> den(hooks.begin(), hooks.end());
    for (int k = 2; k <= p.size(); ++k) {
        std::uint64_t f = static_cast<std::uint64_t>(k);
        for (auto& h : den) {
            if (h == 1)
                continue;
            std::uint64_t g = std::gcd(f, h);
            f /= g;
            h /= g;
        }
        num *= f;
    }
    for (auto& h : den) {
        if (h != 1) {
            std::uint64_t g = std::gcd(num, h);
            num /= g;
            h /= g;
        }
    }
    return num;
}

// all partitions of n in reverse lexicographic order
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(remaining, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, remaining - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace specht
