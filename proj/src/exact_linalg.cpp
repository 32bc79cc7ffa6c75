#include "ctk/exact_linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace ctk {

void IntMatrix::set(int r, int c, Int value)
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw InvalidArgument("matrix index out of bounds");
    auto& col = cols_data_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        if (value == 0)
            col.erase(it);
        else
            it->second = std::move(value);
    } else if (value != 0) {
        col.insert(it, {r, std::move(value)});
    }
}

Int IntMatrix::at(int r, int c) const
{
    const auto& col = cols_data_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r)
        return it->second;
    return 0;
}

IntMatrix IntMatrix::without_columns(const std::vector<int>& cols) const
{
    IntMatrix out(rows_, cols_ - static_cast<int>(cols.size()));
    int next = 0;
    std::size_t k = 0;
    for (int c = 0; c < cols_; ++c) {
        if (k < cols.size() && cols[k] == c) {
            ++k;
            continue;
        }
        out.cols_data_[next] = cols_data_[c];
        ++next;
    }
    return out;
}

std::vector<std::vector<Int>> IntMatrix::to_dense() const
{
    std::vector<std::vector<Int>> d(rows_, std::vector<Int>(cols_, Int(0)));
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : cols_data_[c])
            d[r][c] = v;
    return d;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Int>>& d)
{
    const int m = static_cast<int>(d.size());
    const int n = m == 0 ? 0 : static_cast<int>(d[0].size());
    IntMatrix out(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if (d[r][c] != 0)
                out.set(r, c, d[r][c]);
    return out;
}

std::string IntMatrix::to_text() const
{
    auto d = to_dense();
    std::ostringstream out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            out << (c ? " " : "") << d[r][c];
        out << "\n";
    }
    return out.str();
}

namespace {

// Signals that the machine-integer fast path overflowed; callers restart the
// computation with cpp_int entries.
struct Overflow {
};

template <typename T>
struct Ops;

template <>
struct Ops<long long> {
    static long long mul(long long a, long long b)
    {
        long long r;
        if (__builtin_mul_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
    static long long sub_mul(long long a, long long q, long long b)
    {
        long long r;
        if (__builtin_mul_overflow(q, b, &r))
            throw Overflow{};
        long long s;
        if (__builtin_sub_overflow(a, r, &s))
            throw Overflow{};
        return s;
    }
    static long long add(long long a, long long b)
    {
        long long r;
        if (__builtin_add_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
    static long long quot(long long a, long long b) { return a / b; }
    static bool less_abs(long long a, long long b)
    {
        unsigned long long ua = a < 0 ? 0ULL - static_cast<unsigned long long>(a)
                                      : static_cast<unsigned long long>(a);
        unsigned long long ub = b < 0 ? 0ULL - static_cast<unsigned long long>(b)
                                      : static_cast<unsigned long long>(b);
        return ua < ub;
    }
};

template <>
struct Ops<Int> {
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int sub_mul(const Int& a, const Int& q, const Int& b) { return a - q * b; }
    static Int add(const Int& a, const Int& b) { return a + b; }
    static Int quot(const Int& a, const Int& b) { return a / b; }
    static bool less_abs(const Int& a, const Int& b) { return abs(a) < abs(b); }
};

template <typename T>
struct Dense {
    int m = 0, n = 0;
    std::vector<T> a;

    Dense(int m_, int n_) : m(m_), n(n_), a(static_cast<std::size_t>(m_) * n_, T(0)) {}

    T& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    const T& at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
};

template <typename T>
Dense<T> load_dense(const IntMatrix& src)
{
    Dense<T> d(src.rows(), src.cols());
    for (int c = 0; c < src.cols(); ++c) {
        for (const auto& [r, v] : src.column(c)) {
            if constexpr (std::is_same_v<T, long long>) {
                if (v > std::numeric_limits<long long>::max() ||
                    v < std::numeric_limits<long long>::min())
                    throw Overflow{};
                d.at(r, c) = static_cast<long long>(v);
            } else {
                d.at(r, c) = v;
            }
        }
    }
    return d;
}

/**
 * In-place Smith reduction of `a`; row operations are mirrored on `u`, column
 * operations on `v` (either may be null).  Pivots are chosen with minimal
 * absolute value, ties broken by lowest (row, col).
 */
template <typename T>
std::vector<T> snf_reduce(Dense<T>& a, Dense<T>* u, Dense<T>* v)
{
    using O = Ops<T>;
    const int m = a.m, n = a.n;

    auto swap_rows = [&](int r1, int r2) {
        if (r1 == r2)
            return;
        for (int c = 0; c < n; ++c)
            std::swap(a.at(r1, c), a.at(r2, c));
        if (u)
            for (int c = 0; c < u->n; ++c)
                std::swap(u->at(r1, c), u->at(r2, c));
    };
    auto swap_cols = [&](int c1, int c2) {
        if (c1 == c2)
            return;
        for (int r = 0; r < m; ++r)
            std::swap(a.at(r, c1), a.at(r, c2));
        if (v)
            for (int r = 0; r < v->m; ++r)
                std::swap(v->at(r, c1), v->at(r, c2));
    };
    auto col_op = [&](int cj, int ct, const T& q) {  // col cj -= q * col ct
        for (int r = 0; r < m; ++r)
            a.at(r, cj) = O::sub_mul(a.at(r, cj), q, a.at(r, ct));
        if (v)
            for (int r = 0; r < v->m; ++r)
                v->at(r, cj) = O::sub_mul(v->at(r, cj), q, v->at(r, ct));
    };
    auto negate_row = [&](int r) {
        for (int c = 0; c < n; ++c)
            a.at(r, c) = O::sub_mul(T(0), T(1), a.at(r, c));
        if (u)
            for (int c = 0; c < u->n; ++c)
                u->at(r, c) = O::sub_mul(T(0), T(1), u->at(r, c));
    };

    // g = s*x + w*y with g > 0; plain ops suffice, intermediates stay small.
    auto egcd = [](T x, T y, T& s, T& w) {
        T old_r = x, r = y;
        T old_s = T(1), cs = T(0);
        T old_w = T(0), cw = T(1);
        while (r != 0) {
            T q = old_r / r;
            T tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * cs;
            old_s = cs;
            cs = tmp;
            tmp = old_w - q * cw;
            old_w = cw;
            cw = tmp;
        }
        if (old_r < 0) {
            old_r = -old_r;
            old_s = -old_s;
            old_w = -old_w;
        }
        s = old_s;
        w = old_w;
        return old_r;
    };

    auto row_op = [&](int ri, int rt, const T& q) {  // row ri -= q * row rt
        for (int c = 0; c < n; ++c)
            a.at(ri, c) = O::sub_mul(a.at(ri, c), q, a.at(rt, c));
        if (u)
            for (int c = 0; c < u->n; ++c)
                u->at(ri, c) = O::sub_mul(u->at(ri, c), q, u->at(rt, c));
    };

    // Replace rows (t, r) by a unimodular combination that puts
    // gcd(a(t,t), a(r,t)) at (t, t) and zero at (r, t) in one step.  When the
    // pivot already divides a(r,t) a plain row operation is used instead, so
    // row t is left untouched.
    auto row_combine = [&](int t, int r) {
        T q = O::quot(a.at(r, t), a.at(t, t));
        if (O::sub_mul(a.at(r, t), q, a.at(t, t)) == 0) {
            row_op(r, t, q);
            return;
        }
        T s, w;
        T g = egcd(a.at(t, t), a.at(r, t), s, w);
        T x = O::quot(a.at(r, t), g);  // row r gets y*row_r - x*row_t
        T y = O::quot(a.at(t, t), g);
        auto apply = [&](Dense<T>& mat) {
            for (int c = 0; c < mat.n; ++c) {
                T top = mat.at(t, c), bot = mat.at(r, c);
                mat.at(t, c) = O::add(O::mul(s, top), O::mul(w, bot));
                mat.at(r, c) = O::sub_mul(O::mul(y, bot), x, top);
            }
        };
        apply(a);
        if (u)
            apply(*u);
    };
    // Column analogue on columns (t, c); the exact-division path leaves
    // column t untouched, so only gcd steps can re-dirty it.
    auto col_combine = [&](int t, int c) {
        T q = O::quot(a.at(t, c), a.at(t, t));
        if (O::sub_mul(a.at(t, c), q, a.at(t, t)) == 0) {
            col_op(c, t, q);
            return;
        }
        T s, w;
        T g = egcd(a.at(t, t), a.at(t, c), s, w);
        T x = O::quot(a.at(t, c), g);
        T y = O::quot(a.at(t, t), g);
        auto apply = [&](Dense<T>& mat) {
            for (int r = 0; r < mat.m; ++r) {
                T left = mat.at(r, t), right = mat.at(r, c);
                mat.at(r, t) = O::add(O::mul(s, left), O::mul(w, right));
                mat.at(r, c) = O::sub_mul(O::mul(y, right), x, left);
            }
        };
        apply(a);
        if (v)
            apply(*v);
    };

    // Diagonalize starting at position t.
    auto diagonalize_from = [&](int start) {
        for (int t = start; t < std::min(m, n); ++t) {
            // pivot: minimal |value|, ties by lowest (row, col)
            int pr = -1, pc = -1;
            for (int r = t; r < m; ++r)
                for (int c = t; c < n; ++c) {
                    const T& val = a.at(r, c);
                    if (val == 0)
                        continue;
                    if (pr < 0 || O::less_abs(val, a.at(pr, pc)))
                        pr = r, pc = c;
                }
            if (pr < 0)
                return;  // submatrix is zero
            swap_rows(t, pr);
            swap_cols(t, pc);

            // Alternate clearing column t and row t; each pass either leaves
            // both clear or strictly shrinks |a(t,t)|, so this terminates.
            bool clean = false;
            while (!clean) {
                clean = true;
                for (int r = t + 1; r < m; ++r)
                    if (a.at(r, t) != 0)
                        row_combine(t, r);
                for (int c = t + 1; c < n; ++c)
                    if (a.at(t, c) != 0)
                        col_combine(t, c);
                for (int r = t + 1; r < m && clean; ++r)
                    if (a.at(r, t) != 0)
                        clean = false;
            }
            if (a.at(t, t) < 0)
                negate_row(t);
        }
    };

    diagonalize_from(0);

    // Enforce the divisibility chain d1 | d2 | ... by folding offending
    // entries back into the diagonalization.
    bool chain_ok = false;
    while (!chain_ok) {
        chain_ok = true;
        for (int t = 0; t + 1 < std::min(m, n); ++t) {
            const T& di = a.at(t, t);
            const T& dj = a.at(t + 1, t + 1);
            if (di == 0 && dj != 0) {
                swap_rows(t, t + 1);
                swap_cols(t, t + 1);
                chain_ok = false;
                continue;
            }
            if (di == 0 || dj == 0)
                continue;
            if (O::quot(dj, di) * di == dj)
                continue;
            // col t += col t+1 exposes dj in row t+1; rediagonalize
            col_op(t, t + 1, O::sub_mul(T(0), T(1), T(1)));
            diagonalize_from(t);
            chain_ok = false;
        }
    }

    std::vector<T> factors;
    for (int t = 0; t < std::min(m, n); ++t)
        if (a.at(t, t) != 0)
            factors.push_back(a.at(t, t));
    return factors;
}

template <typename T>
Dense<T> identity(int n)
{
    Dense<T> d(n, n);
    for (int i = 0; i < n; ++i)
        d.at(i, i) = T(1);
    return d;
}

IntMatrix to_int_matrix(const Dense<long long>& d)
{
    IntMatrix out(d.m, d.n);
    for (int r = 0; r < d.m; ++r)
        for (int c = 0; c < d.n; ++c)
            if (d.at(r, c) != 0)
                out.set(r, c, Int(d.at(r, c)));
    return out;
}

IntMatrix to_int_matrix(const Dense<Int>& d)
{
    IntMatrix out(d.m, d.n);
    for (int r = 0; r < d.m; ++r)
        for (int c = 0; c < d.n; ++c)
            if (d.at(r, c) != 0)
                out.set(r, c, d.at(r, c));
    return out;
}

template <typename T>
SnfDecomposition snf_full(const IntMatrix& src)
{
    Dense<T> a = load_dense<T>(src);
    Dense<T> u = identity<T>(src.rows());
    Dense<T> v = identity<T>(src.cols());
    std::vector<T> factors = snf_reduce(a, &u, &v);

    SnfDecomposition out;
    out.d = to_int_matrix(a);
    out.u = to_int_matrix(u);
    out.v = to_int_matrix(v);
    for (const T& f : factors)
        out.invariant_factors.push_back(Int(f));
    return out;
}

template <typename T>
int bareiss_rank(Dense<T> a)
{
    using O = Ops<T>;
    const int m = a.m, n = a.n;
    T prev = T(1);
    int rank = 0;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int pr = -1;
        for (int i = r; i < m; ++i)
            if (a.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0)
            continue;
        if (pr != r)
            for (int j = 0; j < n; ++j)
                std::swap(a.at(pr, j), a.at(r, j));
        for (int i = r + 1; i < m; ++i) {
            for (int j = c + 1; j < n; ++j)
                a.at(i, j) = O::quot(
                    O::sub_mul(O::mul(a.at(r, c), a.at(i, j)), a.at(i, c), a.at(r, j)), prev);
            a.at(i, c) = T(0);
        }
        prev = a.at(r, c);
        ++rank;
        ++r;
    }
    return rank;
}

int rank_mod_p(const IntMatrix& src, long long p)
{
    PrimeField f(p);
    Dense<long long> a(src.rows(), src.cols());
    for (int c = 0; c < src.cols(); ++c)
        for (const auto& [r, v] : src.column(c))
            a.at(r, c) = f.from_int(static_cast<long long>(v % p));
    const int m = a.m, n = a.n;
    int rank = 0;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int pr = -1;
        for (int i = r; i < m; ++i)
            if (a.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0)
            continue;
        if (pr != r)
            for (int j = 0; j < n; ++j)
                std::swap(a.at(pr, j), a.at(r, j));
        long long inv = f.inv(a.at(r, c));
        for (int i = r + 1; i < m; ++i) {
            if (a.at(i, c) == 0)
                continue;
            long long factor = f.mul(a.at(i, c), inv);
            for (int j = c; j < n; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
        }
        ++rank;
        ++r;
    }
    return rank;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& a)
{
    try {
        return snf_full<long long>(a);
    } catch (const Overflow&) {
        return snf_full<Int>(a);
    }
}

std::vector<Int> smith_invariants(const IntMatrix& a)
{
    try {
        Dense<long long> d = load_dense<long long>(a);
        std::vector<long long> factors = snf_reduce<long long>(d, nullptr, nullptr);
        return std::vector<Int>(factors.begin(), factors.end());
    } catch (const Overflow&) {
        Dense<Int> d = load_dense<Int>(a);
        return snf_reduce<Int>(d, nullptr, nullptr);
    }
}

int rank_over_field(const IntMatrix& a, const FieldSpec& field)
{
    if (!field.rational) {
        if (!is_prime(field.p))
            throw NotPrime("p = " + std::to_string(field.p) + " is not prime");
        return rank_mod_p(a, field.p);
    }
    try {
        return bareiss_rank(load_dense<long long>(a));
    } catch (const Overflow&) {
        return bareiss_rank(load_dense<Int>(a));
    }
}

std::vector<int> image_preserving_column_removal(const IntMatrix& a, int budget)
{
    if (budget < 0)
        throw InvalidArgument("budget must be non-negative");
    const int full_rank = rank_over_field(a, FieldSpec::q());
    std::vector<int> removed;
    for (int c = 0; c < a.cols() && static_cast<int>(removed.size()) < budget; ++c) {
        std::vector<int> candidate = removed;
        candidate.push_back(c);
        if (rank_over_field(a.without_columns(candidate), FieldSpec::q()) == full_rank)
            removed = std::move(candidate);
    }
    if (static_cast<int>(removed.size()) < budget)
        throw BudgetUnachievable("only " + std::to_string(removed.size()) +
                                 " removable columns, budget " + std::to_string(budget));
    return removed;
}

}  // namespace ctk
