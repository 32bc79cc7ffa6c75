#include "ctk/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ctk {

void HomologyProfile::normalize()
{
    if (torsion.size() < betti.size())
        torsion.resize(betti.size());
    if (betti.size() < torsion.size())
        betti.resize(torsion.size(), 0);
    for (auto& t : torsion)
        std::sort(t.begin(), t.end());
    while (!betti.empty() && betti.back() == 0 && torsion.back().empty()) {
        betti.pop_back();
        torsion.pop_back();
    }
}

bool HomologyProfile::trivial() const
{
    for (std::size_t k = 0; k < betti.size(); ++k)
        if (betti[k] != 0 || !torsion[k].empty())
            return false;
    return true;
}

int HomologyProfile::top_degree() const
{
    for (int k = static_cast<int>(betti.size()) - 1; k >= 0; --k)
        if (betti[k] != 0 || !torsion[k].empty())
            return k;
    return -1;
}

long long HomologyProfile::betti_at(int k) const
{
    if (k < 0 || k >= static_cast<int>(betti.size()))
        return 0;
    return betti[k];
}

const std::vector<long long>& HomologyProfile::torsion_at(int k) const
{
    static const std::vector<long long> empty;
    if (k < 0 || k >= static_cast<int>(torsion.size()))
        return empty;
    return torsion[k];
}

bool HomologyProfile::operator==(const HomologyProfile& o) const
{
    HomologyProfile a = *this, b = o;
    a.normalize();
    b.normalize();
    return a.betti == b.betti && a.torsion == b.torsion;
}

std::string HomologyProfile::to_text() const
{
    std::ostringstream out;
    for (std::size_t k = 0; k < betti.size(); ++k) {
        out << k << ": betti=" << betti[k] << " torsion=[";
        for (std::size_t j = 0; j < torsion[k].size(); ++j)
            out << (j ? "," : "") << torsion[k][j];
        out << "]\n";
    }
    return out.str();
}

HomologyProfile HomologyProfile::parse(const std::string& text)
{
    HomologyProfile p;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        int degree;
        char colon;
        std::string btok, ttok;
        if (!(ls >> degree >> colon >> btok >> ttok) || colon != ':' ||
            btok.rfind("betti=", 0) != 0 || ttok.rfind("torsion=[", 0) != 0 ||
            ttok.back() != ']')
            throw ParseError("bad profile line: " + line);
        long long b = std::stoll(btok.substr(6));
        std::vector<long long> tor;
        std::string inner = ttok.substr(9, ttok.size() - 10);
        std::istringstream ts(inner);
        std::string item;
        while (std::getline(ts, item, ','))
            if (!item.empty())
                tor.push_back(std::stoll(item));
        if (degree >= static_cast<int>(p.betti.size())) {
            p.betti.resize(degree + 1, 0);
            p.torsion.resize(degree + 1);
        }
        p.betti[degree] = b;
        p.torsion[degree] = std::move(tor);
    }
    p.normalize();
    return p;
}

std::vector<long long> prime_power_torsion(const std::vector<long long>& orders)
{
    std::vector<long long> out;
    for (long long d : orders) {
        if (d < 2)
            throw InvalidArgument("torsion order must be >= 2");
        long long rest = d;
        for (long long p = 2; p * p <= rest; ++p) {
            if (rest % p != 0)
                continue;
            long long q = 1;
            while (rest % p == 0) {
                q *= p;
                rest /= p;
            }
            out.push_back(q);
        }
        if (rest > 1)
            out.push_back(rest);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix boundary_matrix(const SimplicialComplex& K, int k)
{
    if (k < 0)
        throw InvalidArgument("boundary_matrix requires k >= 0");
    std::vector<Simplex> domain = K.faces(k);
    if (k == 0) {
        // augmentation: every vertex maps to the generator of C_{-1}
        IntMatrix d(1, static_cast<int>(domain.size()));
        for (int c = 0; c < d.cols(); ++c)
            d.set(0, c, 1);
        return d;
    }
    std::vector<Simplex> target = K.faces(k - 1);
    std::map<Simplex, int> row_of;
    for (std::size_t r = 0; r < target.size(); ++r)
        row_of[target[r]] = static_cast<int>(r);

    IntMatrix d(static_cast<int>(target.size()), static_cast<int>(domain.size()));
    for (std::size_t c = 0; c < domain.size(); ++c) {
        const Simplex& f = domain[c];
        int sign = 1;
        for (std::size_t omit = 0; omit < f.size(); ++omit) {
            Simplex face;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != omit)
                    face.push_back(f[j]);
            d.set(row_of.at(face), static_cast<int>(c), sign);
            sign = -sign;
        }
    }
    return d;
}

HomologyProfile homology_z(const SimplicialComplex& K)
{
    const int dim = K.dim();
    HomologyProfile p;
    p.betti.assign(dim + 1, 0);
    p.torsion.assign(dim + 1, {});

    std::vector<long long> nfaces(dim + 2, 0);
    std::vector<int> rank(dim + 2, 0);                     // rank of boundary_k
    std::vector<std::vector<Int>> factors(dim + 2);
    for (int k = 0; k <= dim; ++k) {
        nfaces[k] = static_cast<long long>(K.faces(k).size());
        factors[k] = smith_invariants(boundary_matrix(K, k));
        rank[k] = static_cast<int>(factors[k].size());
    }
    // boundary_{dim+1} is the zero map
    for (int k = 0; k <= dim; ++k) {
        p.betti[k] = nfaces[k] - rank[k] - rank[k + 1];
        std::vector<long long> tor;
        for (const Int& f : factors[k + 1])
            if (f > 1)
                tor.push_back(static_cast<long long>(f));
        p.torsion[k] = prime_power_torsion(tor);
    }
    p.normalize();
    return p;
}

std::vector<long long> betti_over_field(const SimplicialComplex& K, const FieldSpec& field)
{
    const int dim = K.dim();
    std::vector<long long> nfaces(dim + 2, 0);
    std::vector<int> rank(dim + 2, 0);
    for (int k = 0; k <= dim; ++k) {
        nfaces[k] = static_cast<long long>(K.faces(k).size());
        rank[k] = rank_over_field(boundary_matrix(K, k), field);
    }
    std::vector<long long> betti(dim + 1, 0);
    for (int k = 0; k <= dim; ++k)
        betti[k] = nfaces[k] - rank[k] - rank[k + 1];
    return betti;
}

bool matches_moore(const SimplicialComplex& K, const MooreSpec& spec)
{
    if (spec.degree < 1)
        throw InvalidArgument("Moore degree must be >= 1");
    HomologyProfile target;
    target.betti.assign(spec.degree + 1, 0);
    target.torsion.assign(spec.degree + 1, {});
    target.betti[spec.degree] = spec.rank;
    target.torsion[spec.degree] = prime_power_torsion(spec.torsion_orders);
    target.normalize();
    return homology_z(K) == target;
}

}  // namespace ctk
