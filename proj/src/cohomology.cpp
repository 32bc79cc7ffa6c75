#include "ctk/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace ctk {

namespace {

template <typename F>
typename F::Elem from_rational(const F& f, const Rational& r)
{
    if constexpr (std::is_same_v<F, RationalField>) {
        (void)f;
        return r;
    } else {
        long long num = f.from_int(static_cast<long long>(numerator(r) % f.p));
        long long den = f.from_int(static_cast<long long>(denominator(r) % f.p));
        if (den == 0)
            throw InvalidArgument("cochain denominator vanishes mod p");
        return f.mul(num, f.inv(den));
    }
}

template <typename F>
Rational to_rational(const F&, const typename F::Elem& e)
{
    if constexpr (std::is_same_v<F, RationalField>)
        return e;
    else
        return Rational(e);
}

/**
 * Row echelon accumulator over a field with tag coordinates.  Every inserted
 * row keeps the invariant class(x) + sum_j tag_j * class(rep_j) = 0, so
 * reducing a cocycle z against the rows leaves its cohomology coordinates in
 * the tag part.
 */
template <typename F>
struct Echelon {
    using E = typename F::Elem;

    const F& f;
    int n;
    std::vector<std::vector<E>> rows;  // x part, pivot normalized to 1
    std::vector<std::vector<E>> tags;
    std::vector<int> pivots;

    Echelon(const F& f_, int n_) : f(f_), n(n_) {}

    void reduce(std::vector<E>& x, std::vector<E>& tag) const
    {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const E& c = x[pivots[i]];
            if (f.is_zero(c))
                continue;
            E coeff = c;  // rows are pivot-normalized
            for (int j = 0; j < n; ++j)
                x[j] = f.sub(x[j], f.mul(coeff, rows[i][j]));
            if (tag.size() < tags[i].size())
                tag.resize(tags[i].size(), f.zero());
            for (std::size_t j = 0; j < tags[i].size(); ++j)
                tag[j] = f.sub(tag[j], f.mul(coeff, tags[i][j]));
        }
    }

    /** Insert x with its tag; returns false when x reduces to zero. */
    bool insert(std::vector<E> x, std::vector<E> tag)
    {
        reduce(x, tag);
        int pivot = -1;
        for (int j = 0; j < n; ++j)
            if (!f.is_zero(x[j])) {
                pivot = j;
                break;
            }
        if (pivot < 0)
            return false;
        E inv = f.inv(x[pivot]);
        for (int j = 0; j < n; ++j)
            x[j] = f.mul(x[j], inv);
        for (auto& t : tag)
            t = f.mul(t, inv);
        rows.push_back(std::move(x));
        tags.push_back(std::move(tag));
        pivots.push_back(pivot);
        return true;
    }

    /** Cohomology coordinates of a cocycle spanned by the inserted rows. */
    std::vector<E> project(std::vector<E> x, int rep_count) const
    {
        std::vector<E> tag;
        reduce(x, tag);
        for (int j = 0; j < n; ++j)
            if (!f.is_zero(x[j]))
                throw DomainError("vector is not a cocycle of the complex");
        tag.resize(rep_count, f.zero());
        return tag;
    }
};

template <typename F>
struct AlgebraImpl {
    using E = typename F::Elem;

    F f;
    const SimplicialComplex& K;
    int dim;
    std::vector<std::vector<Simplex>> faces;           // by degree
    std::vector<std::map<Simplex, int>> index;         // face -> position
    std::vector<std::vector<std::vector<E>>> reps;     // H^k representatives
    std::vector<Echelon<F>> ech;                       // im + reps per degree

    AlgebraImpl(F field, const SimplicialComplex& K_) : f(field), K(K_), dim(K_.dim())
    {
        faces.resize(dim + 1);
        index.resize(dim + 1);
        for (int k = 0; k <= dim; ++k) {
            faces[k] = K.faces(k);
            for (std::size_t i = 0; i < faces[k].size(); ++i)
                index[k][faces[k][i]] = static_cast<int>(i);
        }
        reps.resize(dim + 1);
        ech.reserve(dim + 1);
        for (int k = 0; k <= dim; ++k)
            ech.emplace_back(f, static_cast<int>(faces[k].size()));
        build();
    }

    std::vector<E> delta(const std::vector<E>& a, int k) const
    {
        std::vector<E> out(k + 1 <= dim ? faces[k + 1].size() : 0, f.zero());
        if (k + 1 > dim)
            return out;
        for (std::size_t c = 0; c < faces[k + 1].size(); ++c) {
            const Simplex& s = faces[k + 1][c];
            E acc = f.zero();
            int sign = 1;
            for (std::size_t omit = 0; omit < s.size(); ++omit) {
                Simplex face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != omit)
                        face.push_back(s[j]);
                const E& v = a[index[k].at(face)];
                acc = sign > 0 ? f.add(acc, v) : f.sub(acc, v);
                sign = -sign;
            }
            out[c] = acc;
        }
        return out;
    }

    std::vector<E> cup(const std::vector<E>& a, int k, const std::vector<E>& b, int l) const
    {
        std::vector<E> out(faces[k + l].size(), f.zero());
        for (std::size_t c = 0; c < faces[k + l].size(); ++c) {
            const Simplex& s = faces[k + l][c];
            Simplex front(s.begin(), s.begin() + k + 1);
            Simplex back(s.begin() + k, s.end());
            out[c] = f.mul(a[index[k].at(front)], b[index[l].at(back)]);
        }
        return out;
    }

    /** Nullspace basis of delta on degree-k cochains, by row reduction. */
    std::vector<std::vector<E>> kernel(int k) const
    {
        const int n = static_cast<int>(faces[k].size());
        const int m = k + 1 <= dim ? static_cast<int>(faces[k + 1].size()) : 0;
        // rows of the coboundary matrix
        std::vector<std::vector<E>> mat;
        for (int r = 0; r < m; ++r)
            mat.emplace_back(n, f.zero());
        for (int c = 0; c < n; ++c) {
            std::vector<E> unit(n, f.zero());
            unit[c] = f.one();
            auto img = delta(unit, k);
            for (int r = 0; r < m; ++r)
                mat[r][c] = img[r];
        }
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < n && r < m; ++c) {
            int pr = -1;
            for (int i = r; i < m; ++i)
                if (!f.is_zero(mat[i][c])) {
                    pr = i;
                    break;
                }
            if (pr < 0)
                continue;
            std::swap(mat[pr], mat[r]);
            E inv = f.inv(mat[r][c]);
            for (int j = c; j < n; ++j)
                mat[r][j] = f.mul(mat[r][j], inv);
            for (int i = 0; i < m; ++i) {
                if (i == r || f.is_zero(mat[i][c]))
                    continue;
                E coeff = mat[i][c];
                for (int j = c; j < n; ++j)
                    mat[i][j] = f.sub(mat[i][j], f.mul(coeff, mat[r][j]));
            }
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<bool> is_pivot(n, false);
        for (int c : pivot_col)
            is_pivot[c] = true;
        std::vector<std::vector<E>> basis;
        for (int c = 0; c < n; ++c) {
            if (is_pivot[c])
                continue;
            std::vector<E> v(n, f.zero());
            v[c] = f.one();
            for (std::size_t i = 0; i < pivot_col.size(); ++i)
                v[pivot_col[i]] = f.neg(mat[i][c]);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    void build()
    {
        for (int k = 0; k <= dim; ++k) {
            if (k > 0) {
                for (std::size_t c = 0; c < faces[k - 1].size(); ++c) {
                    std::vector<E> unit(faces[k - 1].size(), f.zero());
                    unit[c] = f.one();
                    ech[k].insert(delta(unit, k - 1), {});
                }
            }
            for (auto& z : kernel(k)) {
                std::vector<E> tag(reps[k].size() + 1, f.zero());
                tag.back() = f.neg(f.one());
                auto copy = z;
                if (ech[k].insert(std::move(copy), std::move(tag)))
                    reps[k].push_back(std::move(z));
            }
        }
    }

    std::vector<E> coords(const std::vector<E>& z, int k) const
    {
        return ech[k].project(z, static_cast<int>(reps[k].size()));
    }
};

template <typename F>
CohomologyAlgebra algebra_for(F f, const SimplicialComplex& K)
{
    AlgebraImpl<F> impl(f, K);
    CohomologyAlgebra out;
    out.field = f.spec();
    out.dims.resize(impl.dim + 1, 0);
    out.basis.resize(impl.dim + 1);
    for (int k = 0; k <= impl.dim; ++k) {
        out.dims[k] = static_cast<long long>(impl.reps[k].size());
        for (const auto& r : impl.reps[k]) {
            Cochain c;
            c.field = out.field;
            c.degree = k;
            for (const auto& e : r)
                c.values.push_back(to_rational(f, e));
            out.basis[k].push_back(std::move(c));
        }
    }
    for (int k = 0; k <= impl.dim; ++k)
        for (int l = k; l + k <= impl.dim; ++l)
            for (std::size_t i = 0; i < impl.reps[k].size(); ++i)
                for (std::size_t j = 0; j < impl.reps[l].size(); ++j) {
                    auto prod = impl.cup(impl.reps[k][i], k, impl.reps[l][j], l);
                    auto co = impl.coords(prod, k + l);
                    std::vector<Rational> rc;
                    for (const auto& e : co)
                        rc.push_back(to_rational(f, e));
                    out.products[{k, static_cast<int>(i), l, static_cast<int>(j)}] =
                        std::move(rc);
                }
    return out;
}

template <typename F>
std::vector<DegreeTuple> tuples_for(F f, const SimplicialComplex& K, int max_len)
{
    AlgebraImpl<F> impl(f, K);
    using E = typename F::Elem;
    const int dim = impl.dim;

    // spanning cochains of the subspace realized by each live tuple
    struct Node {
        DegreeTuple tuple;
        int degree;
        std::vector<std::vector<E>> span;
    };
    std::vector<DegreeTuple> found;
    std::vector<Node> frontier;
    for (int i = 1; i <= dim; ++i) {
        if (impl.reps[i].empty())
            continue;
        Node n;
        n.tuple.degrees = {i};
        n.degree = i;
        n.span = impl.reps[i];
        found.push_back(n.tuple);
        frontier.push_back(std::move(n));
    }
    for (int len = 2; len <= max_len; ++len) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            for (int j = node.tuple.degrees.back(); node.degree + j <= dim; ++j) {
                if (impl.reps[j].empty())
                    continue;
                const int d = node.degree + j;
                const int hd = static_cast<int>(impl.reps[d].size());
                if (hd == 0)
                    continue;
                Echelon<F> seen(f, hd);
                Node child;
                child.tuple.degrees = node.tuple.degrees;
                child.tuple.degrees.push_back(j);
                child.degree = d;
                for (const auto& s : node.span) {
                    for (const auto& b : impl.reps[j]) {
                        auto prod = impl.cup(s, node.degree, b, j);
                        auto co = impl.coords(prod, d);
                        if (seen.insert(co, {}))
                            child.span.push_back(std::move(prod));
                        if (static_cast<int>(child.span.size()) == hd)
                            break;
                    }
                    if (static_cast<int>(child.span.size()) == hd)
                        break;
                }
                if (!child.span.empty()) {
                    found.push_back(child.tuple);
                    next.push_back(std::move(child));
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty())
            break;
    }
    std::sort(found.begin(), found.end());
    return found;
}

template <typename R>
R dispatch_field(const FieldSpec& field, const SimplicialComplex& K, auto&& fn)
{
    if (field.rational)
        return fn(RationalField{}, K);
    return fn(PrimeField(field.p), K);
}

template <typename F>
std::vector<typename F::Elem> cochain_values(const F& f, const Cochain& c)
{
    std::vector<typename F::Elem> out;
    out.reserve(c.values.size());
    for (const auto& v : c.values)
        out.push_back(from_rational(f, v));
    return out;
}

template <typename F>
Cochain make_cochain(const F& f, int degree, const std::vector<typename F::Elem>& vals)
{
    Cochain out;
    out.field = f.spec();
    out.degree = degree;
    for (const auto& e : vals)
        out.values.push_back(to_rational(f, e));
    return out;
}

void check_cochain(const Cochain& c, const SimplicialComplex& K)
{
    if (c.degree < 0 || c.degree > K.dim() ||
        c.values.size() != K.faces(c.degree).size())
        throw DimensionMismatch("cochain length does not match the face count");
}

}  // namespace

std::string DegreeTuple::to_text() const
{
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < degrees.size(); ++i)
        out << (i ? "," : "") << degrees[i];
    out << ")";
    return out.str();
}

Cochain cochain_cup(const Cochain& a, const Cochain& b, const SimplicialComplex& K)
{
    if (!(a.field == b.field))
        throw FieldMismatch("cup product requires matching coefficient fields");
    check_cochain(a, K);
    check_cochain(b, K);
    if (a.degree + b.degree > K.dim())
        throw DimensionMismatch("cup product degree exceeds the complex dimension");
    return dispatch_field<Cochain>(a.field, K, [&](auto f, const SimplicialComplex& KK) {
        AlgebraImpl<decltype(f)> impl(f, KK);
        auto prod = impl.cup(cochain_values(f, a), a.degree, cochain_values(f, b), b.degree);
        return make_cochain(f, a.degree + b.degree, prod);
    });
}

Cochain coboundary(const Cochain& a, const SimplicialComplex& K)
{
    check_cochain(a, K);
    return dispatch_field<Cochain>(a.field, K, [&](auto f, const SimplicialComplex& KK) {
        AlgebraImpl<decltype(f)> impl(f, KK);
        auto img = impl.delta(cochain_values(f, a), a.degree);
        return make_cochain(f, a.degree + 1, img);
    });
}

CohomologyAlgebra cohomology_algebra(const SimplicialComplex& K, const FieldSpec& field)
{
    return dispatch_field<CohomologyAlgebra>(
        field, K, [](auto f, const SimplicialComplex& KK) { return algebra_for(f, KK); });
}

std::vector<Rational> cocycle_coords(const Cochain& z, const SimplicialComplex& K)
{
    check_cochain(z, K);
    return dispatch_field<std::vector<Rational>>(
        z.field, K, [&](auto f, const SimplicialComplex& KK) {
            AlgebraImpl<decltype(f)> impl(f, KK);
            auto co = impl.coords(cochain_values(f, z), z.degree);
            std::vector<Rational> out;
            for (const auto& e : co)
                out.push_back(to_rational(f, e));
            return out;
        });
}

int cup_length(const SimplicialComplex& K, const FieldSpec& field)
{
    auto tuples = essential_tuples(K, field, std::max(K.dim(), 1));
    int best = 0;
    for (const auto& t : tuples)
        best = std::max(best, static_cast<int>(t.degrees.size()));
    return best;
}

std::vector<DegreeTuple> essential_tuples(const SimplicialComplex& K,
                                          const FieldSpec& field, int max_len)
{
    if (max_len < 1)
        throw InvalidArgument("max_len must be >= 1");
    return dispatch_field<std::vector<DegreeTuple>>(
        field, K,
        [&](auto f, const SimplicialComplex& KK) { return tuples_for(f, KK, max_len); });
}

std::string essential_report(const std::vector<DegreeTuple>& tuples, const FieldSpec& field)
{
    std::ostringstream out;
    for (const auto& t : tuples)
        out << t.to_text() << " nonzero over " << field.name() << "\n";
    return out.str();
}

}  // namespace ctk
