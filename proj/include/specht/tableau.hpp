#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "partition.hpp"

namespace specht {

// Row-standard tableau: rows are sorted multisets of positive values (< 256).
// Stored flat as a byte string (the reading word) plus row lengths.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(const std::vector<std::vector<int>>& rows) {
        for (const auto& r : rows) {
            if (r.empty())
                throw std::invalid_argument("tableau rows must be non-empty");
            std::vector<int> sorted = r;
            std::sort(sorted.begin(), sorted.end());
            for (int v : sorted) {
                if (v < 1 || v > 255)
                    throw std::invalid_argument("tableau entries must lie in 1..255");
                word_ += static_cast<char>(v);
            }
            lengths_.push_back(static_cast<int>(r.size()));
        }
        check_shape();
        set_offsets();
    }
    // fast path: rows given as already sorted byte strings
    Tableau(std::vector<int> lengths, std::string word)
        : lengths_(std::move(lengths)), word_(std::move(word)) {
        set_offsets();
    }

    int num_rows() const { return static_cast<int>(lengths_.size()); }
    int row_length(int j) const { return lengths_[static_cast<std::size_t>(j)]; }
    int size() const { return static_cast<int>(word_.size()); }

    // 0-based row j, 0-based column c
    int at(int j, int c) const {
        return static_cast<unsigned char>(word_[static_cast<std::size_t>(offset(j) + c)]);
    }
    std::string_view row(int j) const {
        return std::string_view(word_).substr(static_cast<std::size_t>(offset(j)),
                                              static_cast<std::size_t>(row_length(j)));
    }
    std::vector<int> row_values(int j) const {
        std::vector<int> out;
        for (char ch : row(j))
            out.push_back(static_cast<unsigned char>(ch));
        return out;
    }
    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out;
        for (int j = 0; j < num_rows(); ++j)
            out.push_back(row_values(j));
        return out;
    }
    int count(int j, int value) const {
        auto r = row(j);
        return static_cast<int>(std::count(r.begin(), r.end(), static_cast<char>(value)));
    }
    int max_value() const {
        int m = 0;
        for (char ch : word_)
            m = std::max(m, static_cast<int>(static_cast<unsigned char>(ch)));
        return m;
    }

    Partition shape() const { return Partition(lengths_); }
    const std::vector<int>& lengths() const { return lengths_; }
    // multiplicities of 1..len (len defaults to the largest entry)
    Composition content(int len = -1) const {
        if (len < 0)
            len = max_value();
        std::vector<int> c(static_cast<std::size_t>(len), 0);
        for (char ch : word_) {
            int v = static_cast<unsigned char>(ch);
            if (v > len)
                throw std::invalid_argument("tableau entry exceeds type length");
            ++c[static_cast<std::size_t>(v - 1)];
        }
        return Composition(std::move(c));
    }
    const std::string& word() const { return word_; }

    bool operator==(const Tableau& o) const {
        return word_ == o.word_ && lengths_ == o.lengths_;
    }
    // canonical order: lexicographic on the reading word
    bool operator<(const Tableau& o) const {
        if (word_ != o.word_)
            return word_ < o.word_;
        return lengths_ < o.lengths_;
    }

private:
    int offset(int j) const { return offsets_[static_cast<std::size_t>(j)]; }
    void set_offsets() {
        offsets_.resize(lengths_.size());
        int o = 0;
        for (std::size_t k = 0; k < lengths_.size(); ++k) {
            offsets_[k] = o;
            o += lengths_[k];
        }
    }
    void check_shape() const {
        for (std::size_t i = 1; i < lengths_.size(); ++i)
            if (lengths_[i] > lengths_[i - 1])
                throw std::invalid_argument("tableau shape must be a partition");
    }

    std::vector<int> lengths_;
    std::string word_;
    std::vector<int> offsets_;
};

struct TableauHash {
    std::size_t operator()(const Tableau& t) const { return std::hash<std::string>{}(t.word()); }
};

struct TableauSet {
    Partition shape;
    Composition ctype;
    std::vector<Tableau> members;  // canonical order
    std::size_t size() const { return members.size(); }
};

inline bool is_semistandard(const Tableau& t) {
    for (int j = 1; j < t.num_rows(); ++j)
        for (int c = 0; c < t.row_length(j); ++c)
            if (t.at(j, c) <= t.at(j - 1, c))
                return false;
    return true;
}

namespace detail {

inline void check_sizes(const Partition& shape, const Composition& ctype) {
    if (shape.size() != ctype.size())
        throw std::invalid_argument("shape and type have different sizes");
}

inline Tableau tableau_from_counts(const std::vector<std::vector<int>>& cnt,
                                   const std::vector<int>& lengths) {
    std::string word;
    for (const auto& row : cnt)
        for (std::size_t v = 0; v < row.size(); ++v)
            word.append(static_cast<std::size_t>(row[v]), static_cast<char>(v + 1));
    return Tableau(lengths, std::move(word));
}

}  // namespace detail

inline TableauSet enumerate_row_standard(const Partition& shape, const Composition& ctype) {
    detail::check_sizes(shape, ctype);
    TableauSet out{shape, ctype, {}};
    int rows = shape.length(), m = ctype.length();
    std::vector<int> cap(shape.parts());
    std::vector<std::vector<int>> cnt(static_cast<std::size_t>(rows),
                                      std::vector<int>(static_cast<std::size_t>(m), 0));
    // distribute copies of value v over rows j.., then move on to v+1
    auto rec = [&](auto&& self, int v, int j, int left) -> void {
        if (v == m) {
            out.members.push_back(detail::tableau_from_counts(cnt, shape.parts()));
            return;
        }
        if (j == rows - 1) {
            if (left > cap[static_cast<std::size_t>(j)])
                return;
            cap[static_cast<std::size_t>(j)] -= left;
            cnt[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = left;
            self(self, v + 1, 0, ctype[v + 1]);
            cnt[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = 0;
            cap[static_cast<std::size_t>(j)] += left;
            return;
        }
        int hi = std::min(left, cap[static_cast<std::size_t>(j)]);
        for (int k = hi; k >= 0; --k) {
            cap[static_cast<std::size_t>(j)] -= k;
            cnt[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = k;
            self(self, v, j + 1, left - k);
            cnt[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = 0;
            cap[static_cast<std::size_t>(j)] += k;
        }
    };
    if (rows == 0) {
        out.members.emplace_back();
        return out;
    }
    if (m == 0)
        return out;
    rec(rec, 0, 0, ctype[0]);
    std::sort(out.members.begin(), out.members.end());
    return out;
}

// Horizontal strips: cells holding values <= v always form a partition shape.
inline TableauSet enumerate_semistandard(const Partition& shape, const Composition& ctype) {
    detail::check_sizes(shape, ctype);
    TableauSet out{shape, ctype, {}};
    int rows = shape.length(), m = ctype.length();
    if (rows == 0) {
        out.members.emplace_back();
        return out;
    }
    if (m == 0)
        return out;
    std::vector<int> filled(static_cast<std::size_t>(rows), 0);
    std::vector<std::vector<int>> cnt(static_cast<std::size_t>(rows),
                                      std::vector<int>(static_cast<std::size_t>(m), 0));
    // prev: row fill levels before value v was placed
    auto rec = [&](auto&& self, int v, int j, int left, const std::vector<int>& prev) -> void {
        if (v == m) {
            out.members.push_back(detail::tableau_from_counts(cnt, shape.parts()));
            return;
        }
        if (j == rows) {
            if (left == 0) {
                std::vector<int> next = filled;
                self(self, v + 1, 0, ctype[v + 1], next);
            }
            return;
        }
        auto uj = static_cast<std::size_t>(j);
        int limit = j == 0 ? shape[0] : std::min(shape[j], prev[uj - 1]);
        int hi = std::min(left, limit - filled[uj]);
        for (int k = hi; k >= 0; --k) {
            filled[uj] += k;
            cnt[uj][static_cast<std::size_t>(v)] = k;
            self(self, v, j + 1, left - k, prev);
            cnt[uj][static_cast<std::size_t>(v)] = 0;
            filled[uj] -= k;
        }
    };
    std::vector<int> start(static_cast<std::size_t>(rows), 0);
    rec(rec, 0, 0, ctype[0], start);
    std::sort(out.members.begin(), out.members.end());
    return out;
}

namespace detail {

// cum[i][v] = #entries <= v+1 in rows 0..i
inline std::vector<std::vector<int>> cumulative_counts(const Tableau& t, int maxv) {
    std::vector<std::vector<int>> cum(static_cast<std::size_t>(t.num_rows()),
                                      std::vector<int>(static_cast<std::size_t>(maxv), 0));
    for (int i = 0; i < t.num_rows(); ++i) {
        auto& row = cum[static_cast<std::size_t>(i)];
        if (i > 0)
            row = cum[static_cast<std::size_t>(i - 1)];
        std::vector<int> here(static_cast<std::size_t>(maxv), 0);
        for (char ch : t.row(i))
            ++here[static_cast<std::size_t>(static_cast<unsigned char>(ch) - 1)];
        int acc = 0;
        for (int v = 0; v < maxv; ++v) {
            acc += here[static_cast<std::size_t>(v)];
            row[static_cast<std::size_t>(v)] += acc;
        }
    }
    return cum;
}

}  // namespace detail

// s dominates t iff t is reachable from s by swapping an entry with a larger entry in a lower
// row; computed through cumulative row/value counts.
inline bool tableau_dominates(const Tableau& s, const Tableau& t) {
    if (s.lengths() != t.lengths())
        throw std::invalid_argument("tableau_dominates needs equal shapes");
    int maxv = std::max(s.max_value(), t.max_value());
    if (s.content(maxv) != t.content(maxv))
        throw std::invalid_argument("tableau_dominates needs equal types");
    auto cs = detail::cumulative_counts(s, maxv);
    auto ct = detail::cumulative_counts(t, maxv);
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t v = 0; v < cs[i].size(); ++v)
            if (cs[i][v] < ct[i][v])
                return false;
    return true;
}

// Strictly increases along strict dominance; used as a linear extension.
inline long long dominance_key(const Tableau& t) {
    long long key = 0;
    int maxv = t.max_value();
    std::vector<int> here(static_cast<std::size_t>(maxv) + 1, 0);
    for (int i = 0; i < t.num_rows(); ++i) {
        for (char ch : t.row(i))
            ++here[static_cast<std::size_t>(static_cast<unsigned char>(ch))];
        long long acc = 0;
        for (int v = 1; v <= maxv; ++v) {
            acc += here[static_cast<std::size_t>(v)];
            key += acc;
        }
    }
    return key;
}

// ---- text format: "112|23"; comma-separated entries when any entry is >= 10 ----

inline std::string to_string(const Tableau& t) {
    bool wide = t.max_value() >= 10;
    std::string out;
    for (int j = 0; j < t.num_rows(); ++j) {
        if (j)
            out += '|';
        auto vals = t.row_values(j);
        for (std::size_t k = 0; k < vals.size(); ++k) {
            if (wide && k)
                out += ',';
            out += std::to_string(vals[k]);
        }
        if (wide && vals.size() == 1)
            out += ',';  // keeps a lone wide entry distinguishable from digit mode
    }
    return out;
}

inline Tableau parse_tableau(std::string_view text) {
    bool wide = text.find(',') != std::string_view::npos;
    std::vector<std::vector<int>> rows(1);
    std::string tok;
    auto flush = [&] {
        if (!tok.empty()) {
            rows.back().push_back(detail::parse_uint(tok));
            tok.clear();
        }
    };
    for (char ch : text) {
        if (ch == ' ')
            continue;
        if (ch == '|') {
            flush();
            rows.emplace_back();
        } else if (ch == ',') {
            flush();
        } else if (ch >= '0' && ch <= '9') {
            tok += ch;
            if (!wide)
                flush();
        } else {
            throw std::invalid_argument("bad tableau text '" + std::string(text) + "'");
        }
    }
    flush();
    if (rows.size() == 1 && rows[0].empty())
        return Tableau();
    return Tableau(rows);
}

}  // namespace specht
