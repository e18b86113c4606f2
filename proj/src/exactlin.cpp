#include "p2mnf/exactlin.hpp"

#include <utility>

namespace p2mnf {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (p < 5 || p > (std::int64_t(1) << 31))
        throw MathError("InvalidModulus", "modulus must be a prime in [5, 2^31]");
    if (!is_prime(p))
        throw MathError("InvalidModulus", std::to_string(p) + " is not prime");
    return FieldSpec{Kind::PrimeField, p};
}

namespace {

struct FpOps {
    std::int64_t p;
    using E = std::int64_t;
    E zero() const { return 0; }
    bool is_zero(E a) const { return a == 0; }
    E add(E a, E b) const {
        E s = a + b;
        return s >= p ? s - p : s;
    }
    E sub(E a, E b) const {
        E s = a - b;
        return s < 0 ? s + p : s;
    }
    E mul(E a, E b) const {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
    }
    E neg(E a) const { return a == 0 ? 0 : p - a; }
    E inv(E a) const {
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return t < 0 ? t + p : t;
    }
};

struct QOps {
    using E = Rat;
    E zero() const { return Rat(0); }
    bool is_zero(const E& a) const { return a == 0; }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E mul(const E& a, const E& b) const { return a * b; }
    E neg(const E& a) const { return -a; }
    E inv(const E& a) const { return Rat(1) / a; }
};

// Reduced row echelon form in place.  Pivot order is fixed: columns left to
// right, first nonzero row below the current one.  Only columns < limit are
// eligible as pivots (the tail holds right-hand sides during solves).
template <class Ops>
int rref(const Ops& ops, std::vector<typename Ops::E>& a, int rows, int cols,
         int limit, std::vector<int>& pivots) {
    pivots.clear();
    int rank = 0;
    for (int col = 0; col < limit && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (!ops.is_zero(a[std::size_t(r) * cols + col])) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < cols; ++c)
                std::swap(a[std::size_t(rank) * cols + c], a[std::size_t(piv) * cols + c]);
        auto s = ops.inv(a[std::size_t(rank) * cols + col]);
        for (int c = col; c < cols; ++c)
            a[std::size_t(rank) * cols + c] = ops.mul(a[std::size_t(rank) * cols + c], s);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            auto f = a[std::size_t(r) * cols + col];
            if (ops.is_zero(f)) continue;
            for (int c = col; c < cols; ++c)
                a[std::size_t(r) * cols + c] = ops.sub(
                    a[std::size_t(r) * cols + c],
                    ops.mul(f, a[std::size_t(rank) * cols + c]));
        }
        pivots.push_back(col);
        ++rank;
    }
    return rank;
}

template <class Ops>
int rank_impl(const Ops& ops, std::vector<typename Ops::E> a, int rows, int cols) {
    std::vector<int> pivots;
    return rref(ops, a, rows, cols, cols, pivots);
}

}  // namespace

std::size_t ExactMat::idx(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw MathError("ShapeMismatch", "matrix index out of range");
    return std::size_t(r) * cols_ + c;
}

void ExactMat::check_same(const ExactMat& rhs) const {
    if (!(field_ == rhs.field_))
        throw MathError("FieldMismatch", "matrices over different fields");
}

ExactMat ExactMat::zeros(const FieldSpec& f, int rows, int cols) {
    if (rows < 0 || cols < 0)
        throw MathError("ShapeMismatch", "negative matrix dimension");
    ExactMat m;
    m.field_ = f;
    m.rows_ = rows;
    m.cols_ = cols;
    if (f.is_prime_field())
        m.fp_.assign(std::size_t(rows) * cols, 0);
    else
        m.q_.assign(std::size_t(rows) * cols, Rat(0));
    return m;
}

ExactMat ExactMat::identity(const FieldSpec& f, int n) {
    ExactMat m = zeros(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

ExactMat ExactMat::from_ints(const FieldSpec& f, int rows, int cols,
                             const std::vector<long long>& vals) {
    if (vals.size() != std::size_t(rows) * cols)
        throw MathError("ShapeMismatch", "entry count does not match rows*cols");
    ExactMat m = zeros(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.set(r, c, vals[std::size_t(r) * cols + c]);
    return m;
}

ExactMat ExactMat::random(const FieldSpec& f, int rows, int cols, Rng& rng) {
    if (!f.is_prime_field())
        throw MathError("PrimeFieldRequired", "uniform sampling needs a prime field");
    ExactMat m = zeros(f, rows, cols);
    for (auto& e : m.fp_) e = std::int64_t(rng.below(std::uint64_t(f.modulus)));
    return m;
}

void ExactMat::set(int r, int c, long long v) {
    if (field_.is_prime_field()) {
        std::int64_t p = field_.modulus;
        std::int64_t red = v % p;
        if (red < 0) red += p;
        fp_[idx(r, c)] = red;
    } else {
        q_[idx(r, c)] = Rat(v);
    }
}

void ExactMat::set_rat(int r, int c, const Rat& v) {
    if (field_.is_prime_field())
        throw MathError("FieldMismatch", "rational entry into a prime-field matrix");
    q_[idx(r, c)] = v;
}

void ExactMat::set_from_string(int r, int c, const std::string& s) {
    if (field_.is_prime_field()) {
        set(r, c, std::stoll(s));
    } else {
        q_[idx(r, c)] = Rat(s);
    }
}

std::int64_t ExactMat::fp_at(int r, int c) const {
    if (!field_.is_prime_field())
        throw MathError("FieldMismatch", "fp_at on a rational matrix");
    return fp_[idx(r, c)];
}

Rat ExactMat::rat_at(int r, int c) const {
    if (field_.is_prime_field())
        throw MathError("FieldMismatch", "rat_at on a prime-field matrix");
    return q_[idx(r, c)];
}

bool ExactMat::entry_is_zero(int r, int c) const {
    return field_.is_prime_field() ? fp_[idx(r, c)] == 0 : q_[idx(r, c)] == 0;
}

std::string ExactMat::entry_string(int r, int c) const {
    if (field_.is_prime_field()) return std::to_string(fp_[idx(r, c)]);
    const Rat& v = q_[idx(r, c)];
    auto num = boost::multiprecision::numerator(v);
    auto den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

void ExactMat::add_unit(int r, int c, bool negate) {
    if (field_.is_prime_field()) {
        FpOps ops{field_.modulus};
        auto& e = fp_[idx(r, c)];
        e = negate ? ops.sub(e, 1) : ops.add(e, 1);
    } else {
        auto& e = q_[idx(r, c)];
        e += negate ? -1 : 1;
    }
}

void ExactMat::add_entry(int r, int c, const ExactMat& a, int ar, int ac,
                         bool negate) {
    check_same(a);
    if (field_.is_prime_field()) {
        FpOps ops{field_.modulus};
        auto v = a.fp_[a.idx(ar, ac)];
        auto& e = fp_[idx(r, c)];
        e = negate ? ops.sub(e, v) : ops.add(e, v);
    } else {
        const Rat& v = a.q_[a.idx(ar, ac)];
        auto& e = q_[idx(r, c)];
        if (negate)
            e -= v;
        else
            e += v;
    }
}

void ExactMat::add_product(int r, int c, const ExactMat& a, int ar, int ac,
                           const ExactMat& b, int br, int bc, bool negate) {
    check_same(a);
    check_same(b);
    if (field_.is_prime_field()) {
        FpOps ops{field_.modulus};
        auto v = ops.mul(a.fp_[a.idx(ar, ac)], b.fp_[b.idx(br, bc)]);
        auto& e = fp_[idx(r, c)];
        e = negate ? ops.sub(e, v) : ops.add(e, v);
    } else {
        Rat v = a.q_[a.idx(ar, ac)] * b.q_[b.idx(br, bc)];
        auto& e = q_[idx(r, c)];
        if (negate)
            e -= v;
        else
            e += v;
    }
}

ExactMat ExactMat::transpose() const {
    ExactMat m = zeros(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            if (field_.is_prime_field())
                m.fp_[m.idx(c, r)] = fp_[idx(r, c)];
            else
                m.q_[m.idx(c, r)] = q_[idx(r, c)];
        }
    return m;
}

ExactMat ExactMat::operator*(const ExactMat& rhs) const {
    check_same(rhs);
    if (cols_ != rhs.rows_)
        throw MathError("ShapeMismatch", "inner dimensions differ in product");
    ExactMat m = zeros(field_, rows_, rhs.cols_);
    if (field_.is_prime_field()) {
        FpOps ops{field_.modulus};
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                auto v = fp_[idx(i, k)];
                if (v == 0) continue;
                for (int j = 0; j < rhs.cols_; ++j)
                    m.fp_[m.idx(i, j)] = ops.add(
                        m.fp_[m.idx(i, j)], ops.mul(v, rhs.fp_[rhs.idx(k, j)]));
            }
    } else {
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& v = q_[idx(i, k)];
                if (v == 0) continue;
                for (int j = 0; j < rhs.cols_; ++j)
                    m.q_[m.idx(i, j)] += v * rhs.q_[rhs.idx(k, j)];
            }
    }
    return m;
}

ExactMat ExactMat::operator+(const ExactMat& rhs) const {
    check_same(rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw MathError("ShapeMismatch", "shape mismatch in sum");
    ExactMat m = *this;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.add_entry(r, c, rhs, r, c, false);
    return m;
}

ExactMat ExactMat::operator-(const ExactMat& rhs) const {
    check_same(rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw MathError("ShapeMismatch", "shape mismatch in difference");
    ExactMat m = *this;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.add_entry(r, c, rhs, r, c, true);
    return m;
}

bool ExactMat::operator==(const ExactMat& rhs) const {
    if (!(field_ == rhs.field_) || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        return false;
    return field_.is_prime_field() ? fp_ == rhs.fp_ : q_ == rhs.q_;
}

bool ExactMat::is_zero() const {
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!entry_is_zero(r, c)) return false;
    return true;
}

int ExactMat::rank() const {
    if (field_.is_prime_field())
        return rank_impl(FpOps{field_.modulus}, fp_, rows_, cols_);
    return rank_impl(QOps{}, q_, rows_, cols_);
}

ExactMat ExactMat::nullspace() const {
    // First pass to know the nullity, then fill.
    int rank = this->rank();
    ExactMat result = zeros(field_, cols_, cols_ - rank);
    if (field_.is_prime_field()) {
        FpOps ops{field_.modulus};
        std::vector<int> pivots;
        auto a = fp_;
        rref(ops, a, rows_, cols_, cols_, pivots);
        std::vector<int> pivot_of_col(cols_, -1);
        for (std::size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = int(i);
        int k = 0;
        for (int f = 0; f < cols_; ++f) {
            if (pivot_of_col[f] >= 0) continue;
            result.fp_[result.idx(f, k)] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                auto v = a[std::size_t(i) * cols_ + f];
                if (v != 0) result.fp_[result.idx(pivots[i], k)] = ops.neg(v);
            }
            ++k;
        }
    } else {
        QOps ops;
        std::vector<int> pivots;
        auto a = q_;
        rref(ops, a, rows_, cols_, cols_, pivots);
        std::vector<int> pivot_of_col(cols_, -1);
        for (std::size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = int(i);
        int k = 0;
        for (int f = 0; f < cols_; ++f) {
            if (pivot_of_col[f] >= 0) continue;
            result.q_[result.idx(f, k)] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                const Rat& v = a[std::size_t(i) * cols_ + f];
                if (v != 0) result.q_[result.idx(pivots[i], k)] = -v;
            }
            ++k;
        }
    }
    return result;
}

namespace {

template <class Ops, class Get, class SetOut>
bool solve_impl(const Ops& ops, int rows, int na, int nb, const Get& get,
                const SetOut& set_out) {
    std::vector<typename Ops::E> aug(std::size_t(rows) * (na + nb), ops.zero());
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < na + nb; ++c) aug[std::size_t(r) * (na + nb) + c] = get(r, c);
    std::vector<int> pivots;
    int rank = rref(ops, aug, rows, na + nb, na, pivots);
    for (int r = rank; r < rows; ++r)
        for (int j = 0; j < nb; ++j)
            if (!ops.is_zero(aug[std::size_t(r) * (na + nb) + na + j])) return false;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < nb; ++j)
            set_out(pivots[i], j, aug[std::size_t(i) * (na + nb) + na + j]);
    return true;
}

}  // namespace

std::optional<ExactMat> ExactMat::solve(const ExactMat& b) const {
    check_same(b);
    if (rows_ != b.rows_)
        throw MathError("ShapeMismatch", "row counts differ in solve");
    ExactMat x = zeros(field_, cols_, b.cols_);
    bool ok;
    if (field_.is_prime_field()) {
        FpOps ops{field_.modulus};
        ok = solve_impl(
            ops, rows_, cols_, b.cols_,
            [&](int r, int c) {
                return c < cols_ ? fp_[idx(r, c)] : b.fp_[b.idx(r, c - cols_)];
            },
            [&](int r, int c, std::int64_t v) { x.fp_[x.idx(r, c)] = v; });
    } else {
        QOps ops;
        ok = solve_impl(
            ops, rows_, cols_, b.cols_,
            [&](int r, int c) {
                return c < cols_ ? q_[idx(r, c)] : b.q_[b.idx(r, c - cols_)];
            },
            [&](int r, int c, const Rat& v) { x.q_[x.idx(r, c)] = v; });
    }
    if (!ok) return std::nullopt;
    return x;
}

int mat_rank(const ExactMat& m) { return m.rank(); }

ExactMat mat_nullspace(const ExactMat& m) { return m.nullspace(); }

std::optional<ExactMat> mat_solve(const ExactMat& a, const ExactMat& b) {
    return a.solve(b);
}

}  // namespace p2mnf
