#include "ctk/simplicial_complex.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ctk {

namespace {

bool simplex_order(const Simplex& a, const Simplex& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

bool is_face_of(const Simplex& a, const Simplex& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// All (k+1)-subsets of the sorted simplex `f`, emitted into `out`.
void emit_subsets(const Simplex& f, int k, std::set<Simplex>& out)
{
    const int m = static_cast<int>(f.size());
    if (k + 1 > m || k < 0)
        return;
    std::vector<int> idx(k + 1);
    for (int j = 0; j <= k; ++j)
        idx[j] = j;
    while (true) {
        Simplex s(k + 1);
        for (int j = 0; j <= k; ++j)
            s[j] = f[idx[j]];
        out.insert(std::move(s));
        int j = k;
        while (j >= 0 && idx[j] == m - (k + 1 - j))
            --j;
        if (j < 0)
            break;
        ++idx[j];
        for (int t = j + 1; t <= k; ++t)
            idx[t] = idx[t - 1] + 1;
    }
}

}  // namespace

long long FVector::euler() const
{
    long long chi = 0;
    long long sign = 1;
    for (long long c : counts) {
        chi += sign * c;
        sign = -sign;
    }
    return chi;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> input)
{
    if (input.empty())
        throw EmptyInput("facet set is empty");
    for (auto& f : input) {
        if (f.empty())
            throw MalformedSimplex("empty vertex sequence");
        std::sort(f.begin(), f.end());
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (f[j] < 0)
                throw MalformedSimplex("negative vertex identifier");
            if (j > 0 && f[j] == f[j - 1])
                throw MalformedSimplex("repeated vertex " + std::to_string(f[j]));
        }
    }
    std::sort(input.begin(), input.end(), simplex_order);
    input.erase(std::unique(input.begin(), input.end()), input.end());

    // Keep only inclusion-maximal entries.  Sorted by size, so a simplex can
    // only be absorbed by a later, larger one.
    std::vector<Simplex> maximal;
    for (std::size_t i = 0; i < input.size(); ++i) {
        bool absorbed = false;
        for (std::size_t j = i + 1; j < input.size() && !absorbed; ++j) {
            if (input[j].size() > input[i].size() && is_face_of(input[i], input[j]))
                absorbed = true;
        }
        if (!absorbed)
            maximal.push_back(input[i]);
    }

    SimplicialComplex K;
    K.facets_ = std::move(maximal);
    std::set<Vertex> vs;
    for (const auto& f : K.facets_) {
        vs.insert(f.begin(), f.end());
        K.dim_ = std::max(K.dim_, static_cast<int>(f.size()) - 1);
    }
    K.vertices_.assign(vs.begin(), vs.end());
    return K;
}

std::vector<Simplex> SimplicialComplex::faces(int k) const
{
    std::set<Simplex> out;
    if (k >= 0 && k <= dim_) {
        for (const auto& f : facets_)
            emit_subsets(f, k, out);
    }
    return std::vector<Simplex>(out.begin(), out.end());
}

std::vector<std::vector<Simplex>> SimplicialComplex::all_faces() const
{
    std::vector<std::vector<Simplex>> out;
    for (int k = 0; k <= dim_; ++k)
        out.push_back(faces(k));
    return out;
}

bool SimplicialComplex::contains(const Simplex& sigma) const
{
    for (const auto& f : facets_)
        if (is_face_of(sigma, f))
            return true;
    return false;
}

SimplicialComplex standard_simplex(int n)
{
    if (n < 0)
        throw InvalidArgument("standard_simplex requires n >= 0");
    Simplex f(n + 1);
    for (int i = 0; i <= n; ++i)
        f[i] = i;
    return SimplicialComplex::from_facets({f});
}

SimplicialComplex boundary_sphere(int n)
{
    if (n < 1)
        throw InvalidArgument("boundary_sphere requires n >= 1");
    std::vector<Simplex> facets;
    for (int omit = 0; omit <= n; ++omit) {
        Simplex f;
        for (int i = 0; i <= n; ++i)
            if (i != omit)
                f.push_back(i);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex skeleton(const SimplicialComplex& K, int i)
{
    if (i < 0)
        throw InvalidArgument("skeleton requires i >= 0");
    if (i >= K.dim())
        return K;
    std::vector<Simplex> facets = K.faces(i);
    for (const auto& f : K.facets())
        if (static_cast<int>(f.size()) - 1 < i)
            facets.push_back(f);
    return SimplicialComplex::from_facets(std::move(facets));
}

std::vector<Simplex> star(const SimplicialComplex& K, Vertex v)
{
    const auto& vs = K.vertex_set();
    if (!std::binary_search(vs.begin(), vs.end(), v))
        throw UnknownVertex("vertex " + std::to_string(v));
    std::set<Simplex> out;
    for (int k = 0; k <= K.dim(); ++k)
        for (auto& f : K.faces(k))
            if (std::binary_search(f.begin(), f.end(), v))
                out.insert(f);
    return std::vector<Simplex>(out.begin(), out.end());
}

SimplicialComplex link(const SimplicialComplex& K, Vertex v)
{
    std::vector<Simplex> facets;
    for (const auto& s : star(K, v)) {
        Simplex t;
        for (Vertex w : s)
            if (w != v)
                t.push_back(w);
        if (!t.empty())
            facets.push_back(std::move(t));
    }
    if (facets.empty())
        throw EmptyInput("link of an isolated vertex is the void complex");
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex canonical_relabel(const SimplicialComplex& K)
{
    std::map<Vertex, Vertex> relabel;
    Vertex next = 0;
    for (Vertex v : K.vertex_set())
        relabel[v] = next++;
    std::vector<Simplex> facets;
    for (const auto& f : K.facets()) {
        Simplex g;
        for (Vertex v : f)
            g.push_back(relabel.at(v));
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex wedge_glue(const SimplicialComplex& K, const SimplicialComplex& L,
                             const Simplex& sigma, const Simplex& tau)
{
    if (sigma.size() > tau.size())
        throw DimensionMismatch("dim(sigma) exceeds dim(tau)");
    if (!K.contains(sigma))
        throw InvalidArgument("sigma is not a face of K");
    if (!L.contains(tau))
        throw InvalidArgument("tau is not a face of L");

    // Identify the first dim(sigma)+1 vertices of tau with sigma; every other
    // vertex of L gets a fresh identifier above K's range.
    Vertex next = K.vertex_set().back() + 1;
    std::map<Vertex, Vertex> relabel;
    for (std::size_t j = 0; j < sigma.size(); ++j)
        relabel[tau[j]] = sigma[j];
    for (Vertex v : L.vertex_set())
        if (!relabel.count(v))
            relabel[v] = next++;

    std::vector<Simplex> facets = K.facets();
    for (const auto& f : L.facets()) {
        Simplex g;
        for (Vertex v : f)
            g.push_back(relabel.at(v));
        std::sort(g.begin(), g.end());
        facets.push_back(std::move(g));
    }
    return canonical_relabel(SimplicialComplex::from_facets(std::move(facets)));
}

SimplicialComplex suspension(const SimplicialComplex& K)
{
    Vertex a = K.vertex_set().back() + 1;
    Vertex b = a + 1;
    std::vector<Simplex> facets;
    for (const auto& f : K.facets()) {
        Simplex fa = f;
        fa.push_back(a);
        Simplex fb = f;
        fb.push_back(b);
        facets.push_back(std::move(fa));
        facets.push_back(std::move(fb));
    }
    return canonical_relabel(SimplicialComplex::from_facets(std::move(facets)));
}

bool is_subcomplex(const SimplicialComplex& K, const SimplicialComplex& L)
{
    for (const auto& f : K.facets())
        if (!L.contains(f))
            return false;
    return true;
}

FVector f_vector(const SimplicialComplex& K)
{
    FVector fv;
    for (int k = 0; k <= K.dim(); ++k)
        fv.counts.push_back(static_cast<long long>(K.faces(k).size()));
    return fv;
}

long long euler_characteristic(const SimplicialComplex& K)
{
    return f_vector(K).euler();
}

SimplicialComplex cartesian_product(const SimplicialComplex& K, const SimplicialComplex& L)
{
    // Vertex (u, v) is encoded as u * |V(L)|-index grid; relabeled at the end.
    const auto& lv = L.vertex_set();
    const int nl = static_cast<int>(lv.size());
    std::map<Vertex, int> lidx;
    for (int j = 0; j < nl; ++j)
        lidx[lv[j]] = j;
    std::map<Vertex, int> kidx;
    {
        int j = 0;
        for (Vertex v : K.vertex_set())
            kidx[v] = j++;
    }
    auto code = [&](Vertex u, Vertex v) { return kidx.at(u) * nl + lidx.at(v); };

    // Staircase triangulation of sigma x tau: monotone lattice paths through
    // the grid of vertex pairs.
    std::vector<Simplex> facets;
    for (const auto& sf : K.facets()) {
        for (const auto& tf : L.facets()) {
            const int p = static_cast<int>(sf.size());
            const int q = static_cast<int>(tf.size());
            // enumerate interleavings of p-1 right-steps and q-1 up-steps
            std::vector<int> steps(p + q - 2, 0);
            std::fill(steps.begin(), steps.begin() + (q - 1), 1);
            std::sort(steps.begin(), steps.end());
            do {
                Simplex cell;
                int i = 0, j = 0;
                cell.push_back(code(sf[0], tf[0]));
                for (int s : steps) {
                    if (s == 0)
                        ++i;
                    else
                        ++j;
                    cell.push_back(code(sf[i], tf[j]));
                }
                std::sort(cell.begin(), cell.end());
                facets.push_back(std::move(cell));
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex parse_cplx(const std::string& text)
{
    std::vector<Simplex> facets;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream ls(line);
        Simplex f;
        long long v;
        while (ls >> v) {
            if (v < 0)
                throw ParseError("negative vertex on line " + std::to_string(lineno));
            f.push_back(static_cast<Vertex>(v));
        }
        if (!ls.eof())
            throw ParseError("non-integer token on line " + std::to_string(lineno));
        if (!f.empty())
            facets.push_back(std::move(f));
    }
    if (facets.empty())
        throw EmptyInput("no facets in .cplx input");
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex read_cplx(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cplx(buf.str());
}

std::string to_cplx(const SimplicialComplex& K)
{
    std::ostringstream out;
    for (const auto& f : K.facets()) {
        for (std::size_t j = 0; j < f.size(); ++j)
            out << (j ? " " : "") << f[j];
        out << "\n";
    }
    return out.str();
}

void write_cplx(const SimplicialComplex& K, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open " + path + " for writing");
    out << to_cplx(K);
}

}  // namespace ctk
