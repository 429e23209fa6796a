#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace specht {

using word_t = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Dense bit-packed matrix over the two-element field, row-major.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), bits_(rows * stride_, 0) {}

    static GF2Matrix identity(std::size_t n) {
        GF2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        word_t mask = word_t{1} << (c % 64);
        if (v)
            bits_[r * stride_ + c / 64] |= mask;
        else
            bits_[r * stride_ + c / 64] &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) { bits_[r * stride_ + c / 64] ^= word_t{1} << (c % 64); }

    word_t* row(std::size_t r) { return bits_.data() + r * stride_; }
    const word_t* row(std::size_t r) const { return bits_.data() + r * stride_; }

    void xor_row(std::size_t dst, const word_t* src, std::size_t from_word = 0) {
        word_t* d = row(dst);
        for (std::size_t w = from_word; w < stride_; ++w)
            d[w] ^= src[w];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a != b)
            std::swap_ranges(row(a), row(a) + stride_, row(b));
    }
    bool row_is_zero(std::size_t r) const {
        const word_t* p = row(r);
        for (std::size_t w = 0; w < stride_; ++w)
            if (p[w])
                return false;
        return true;
    }
    bool is_zero() const {
        return std::all_of(bits_.begin(), bits_.end(), [](word_t w) { return w == 0; });
    }
    std::size_t popcount() const {
        std::size_t s = 0;
        for (word_t w : bits_)
            s += static_cast<std::size_t>(__builtin_popcountll(w));
        return s;
    }

    void append_row(const word_t* src) {
        bits_.insert(bits_.end(), src, src + stride_);
        ++rows_;
    }
    void append_zero_row() {
        bits_.resize(bits_.size() + stride_, 0);
        ++rows_;
    }
    void truncate_rows(std::size_t r) {
        rows_ = std::min(rows_, r);
        bits_.resize(rows_ * stride_);
    }

    GF2Matrix transpose() const {
        GF2Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            const word_t* p = row(r);
            for (std::size_t w = 0; w < stride_; ++w) {
                word_t x = p[w];
                while (x) {
                    std::size_t c = w * 64 + static_cast<std::size_t>(__builtin_ctzll(x));
                    t.set(c, r);
                    x &= x - 1;
                }
            }
        }
        return t;
    }

    bool operator==(const GF2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

    // Reduced row echelon form in place; returns the pivot columns (pivot i sits in row i).
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t w = c / 64;
            word_t mask = word_t{1} << (c % 64);
            std::size_t p = r;
            while (p < rows_ && !(row(p)[w] & mask))
                ++p;
            if (p == rows_)
                continue;
            swap_rows(p, r);
            const word_t* piv = row(r);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && (row(i)[w] & mask))
                    xor_row(i, piv, w);
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        GF2Matrix m = *this;
        return m.rref().size();
    }

    // rows of the result form a basis of {x : A x = 0}
    GF2Matrix nullspace() const {
        GF2Matrix m = *this;
        auto pivots = m.rref();
        std::vector<char> is_pivot(cols_, 0);
        for (auto p : pivots)
            is_pivot[p] = 1;
        GF2Matrix out(cols_ - pivots.size(), cols_);
        std::size_t k = 0;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f])
                continue;
            out.set(k, f);
            for (std::size_t i = 0; i < pivots.size(); ++i)
                if (m.get(i, f))
                    out.set(k, pivots[i]);
            ++k;
        }
        return out;
    }

    // rows of the result form a basis of the row space
    GF2Matrix row_basis() const {
        GF2Matrix m = *this;
        auto pivots = m.rref();
        m.truncate_rows(pivots.size());
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<word_t> bits_;
};

// A*B with the method of four Russians (8-bit tables over rows of B).
inline GF2Matrix multiply(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    GF2Matrix c(a.rows(), b.cols());
    const std::size_t stride = b.stride();
    std::vector<word_t> table(256 * stride);
    for (std::size_t k0 = 0; k0 < a.cols(); k0 += 8) {
        std::size_t kb = std::min<std::size_t>(8, a.cols() - k0);
        std::fill(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(stride), 0);
        for (std::size_t m = 1; m < (std::size_t{1} << kb); ++m) {
            std::size_t low = static_cast<std::size_t>(__builtin_ctzll(m));
            const word_t* prev = table.data() + (m & (m - 1)) * stride;
            const word_t* brow = b.row(k0 + low);
            word_t* dst = table.data() + m * stride;
            for (std::size_t w = 0; w < stride; ++w)
                dst[w] = prev[w] ^ brow[w];
        }
        std::size_t word = k0 / 64, shift = k0 % 64;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            word_t bits = a.row(i)[word] >> shift;
            if (shift > 56 && word + 1 < a.stride())
                bits |= a.row(i)[word + 1] << (64 - shift);
            bits &= (word_t{1} << kb) - 1;
            if (bits)
                c.xor_row(i, table.data() + bits * stride);
        }
    }
    return c;
}

inline GF2Matrix add(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum dimension mismatch");
    GF2Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        c.xor_row(i, b.row(i));
    return c;
}

inline GF2Matrix vstack(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.rows() && b.rows() && a.cols() != b.cols())
        throw std::invalid_argument("vstack column mismatch");
    GF2Matrix c = a.rows() ? a : GF2Matrix(0, b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        c.append_row(b.row(i));
    return c;
}

// row spaces equal
inline bool same_row_space(const GF2Matrix& a, const GF2Matrix& b) {
    std::size_t ra = a.rank(), rb = b.rank();
    return ra == rb && vstack(a, b).rank() == ra;
}

// some x with A x = b (b has A.rows() bits), or nothing when inconsistent
inline std::optional<std::vector<word_t>> solve(const GF2Matrix& a, const std::vector<word_t>& b) {
    std::size_t n = a.cols();
    GF2Matrix aug(a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c)
            if (a.get(r, c))
                aug.set(r, c);
        if ((b[r / 64] >> (r % 64)) & 1U)
            aug.set(r, n);
    }
    auto pivots = aug.rref();
    std::vector<word_t> x(words_for(n), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n)
            return std::nullopt;
        if (aug.get(i, n))
            x[pivots[i] / 64] |= word_t{1} << (pivots[i] % 64);
    }
    return x;
}

// Incrementally maintained echelon basis for membership and rank tests.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : basis_(0, cols) {}

    std::size_t rank() const { return basis_.rows(); }
    std::size_t cols() const { return basis_.cols(); }

    // reduces v in place; returns true if v was independent (and then stores it)
    bool insert(std::vector<word_t>& v) {
        reduce(v);
        auto lead = leading(v);
        if (lead == npos)
            return false;
        basis_.append_row(v.data());
        pivot_.push_back(lead);
        return true;
    }
    bool contains(std::vector<word_t> v) const {
        reduce(v);
        return leading(v) == npos;
    }
    void reduce(std::vector<word_t>& v) const {
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t p = pivot_[i];
            if ((v[p / 64] >> (p % 64)) & 1U) {
                const word_t* b = basis_.row(i);
                for (std::size_t w = p / 64; w < v.size(); ++w)
                    v[w] ^= b[w];
            }
        }
    }
    const GF2Matrix& basis() const { return basis_; }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    static std::size_t leading(const std::vector<word_t>& v) {
        for (std::size_t w = 0; w < v.size(); ++w)
            if (v[w])
                return w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
        return npos;
    }
    // basis rows are kept so that row i has zeros at the pivots of rows < i
    GF2Matrix basis_;
    std::vector<std::size_t> pivot_;
};

// Sparse matrix: for each row, the sorted column indices of set bits.
struct SparseGF2 {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::uint32_t>> entries;

    SparseGF2() = default;
    SparseGF2(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r) {}

    GF2Matrix dense() const {
        GF2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (auto c : entries[r])
                m.set(r, c);
        return m;
    }
    static SparseGF2 from_dense(const GF2Matrix& m) {
        SparseGF2 s(m.rows(), m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m.get(r, c))
                    s.entries[r].push_back(static_cast<std::uint32_t>(c));
        return s;
    }
    SparseGF2 transpose() const {
        SparseGF2 t(cols, rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (auto c : entries[r])
                t.entries[c].push_back(static_cast<std::uint32_t>(r));
        return t;
    }
    std::size_t nnz() const {
        std::size_t s = 0;
        for (const auto& e : entries)
            s += e.size();
        return s;
    }
    // this * m for dense m
    GF2Matrix times(const GF2Matrix& m) const {
        if (cols != m.rows())
            throw std::invalid_argument("sparse product dimension mismatch");
        GF2Matrix out(rows, m.cols());
        for (std::size_t r = 0; r < rows; ++r)
            for (auto c : entries[r])
                out.xor_row(r, m.row(c));
        return out;
    }
    // this * v for a dense bit vector v
    std::vector<word_t> apply(const std::vector<word_t>& v) const {
        std::vector<word_t> out(words_for(rows), 0);
        for (std::size_t r = 0; r < rows; ++r) {
            unsigned acc = 0;
            for (auto c : entries[r])
                acc ^= static_cast<unsigned>((v[c / 64] >> (c % 64)) & 1U);
            if (acc)
                out[r / 64] |= word_t{1} << (r % 64);
        }
        return out;
    }
};

// Text dump: header "rows cols", then one line per row listing set-bit columns.
inline void write_sparse(std::ostream& os, const GF2Matrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        bool first = true;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) {
                if (!first)
                    os << ' ';
                os << c;
                first = false;
            }
        }
        os << '\n';
    }
}

inline GF2Matrix read_sparse(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols))
        throw std::invalid_argument("sparse dump: missing header");
    std::string line;
    std::getline(is, line);
    GF2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(is, line))
            throw std::invalid_argument("sparse dump: truncated");
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && line[pos] == ' ')
                ++pos;
            if (pos == line.size())
                break;
            std::size_t c = 0;
            while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9')
                c = c * 10 + static_cast<std::size_t>(line[pos++] - '0');
            if (c >= cols)
                throw std::invalid_argument("sparse dump: column out of range");
            m.set(r, c);
        }
    }
    return m;
}

}  // namespace specht
