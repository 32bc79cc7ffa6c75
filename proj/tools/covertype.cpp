/**
 * Command-line front end: homology, cohomology rings, vertex-count bounds,
 * bound tables, constructive witnesses, nerves, and the subcomplex search.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ctk/bounds.hpp"
#include "ctk/cohomology.hpp"
#include "ctk/constructions.hpp"
#include "ctk/errors.hpp"
#include "ctk/homology.hpp"
#include "ctk/nerve.hpp"
#include "ctk/oracle.hpp"
#include "ctk/simplicial_complex.hpp"

namespace {

using namespace ctk;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/** `corpus:<name>` pseudo-paths resolve to built-in complexes. */
SimplicialComplex load_complex(const std::string& path)
{
    if (path.rfind("corpus:", 0) == 0)
        return corpus(path.substr(7));
    return read_cplx(path);
}

HomologyProfile load_profile(const std::string& path)
{
    if (path.rfind("corpus:", 0) == 0)
        return homology_z(corpus(path.substr(7)));
    return HomologyProfile::parse(read_file(path));
}

/** `q` or `f<p>`; `z` is only meaningful for the homology subcommand. */
FieldSpec parse_field(const std::string& s)
{
    if (s == "q")
        return FieldSpec::q();
    if (s.size() > 1 && s[0] == 'f')
        return FieldSpec::fp(std::stoll(s.substr(1)));
    throw CLI::ValidationError("--coeff", "expected q or f<p>, got '" + s + "'");
}

std::vector<long long> parse_int_list(const std::string& s)
{
    std::vector<long long> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(std::stoll(item));
    return out;
}

bool records = false;

void cmd_homology(const std::string& path, const std::string& coeff)
{
    auto K = load_complex(path);
    if (coeff == "z") {
        auto h = homology_z(K);
        if (!records) {
            std::cout << h.to_text();
            return;
        }
        for (std::size_t k = 0; k < h.betti.size(); ++k) {
            std::cout << "degree=" << k << "\tbetti=" << h.betti[k] << "\ttorsion=";
            for (std::size_t j = 0; j < h.torsion[k].size(); ++j)
                std::cout << (j ? "," : "") << h.torsion[k][j];
            std::cout << "\n";
        }
        return;
    }
    auto betti = betti_over_field(K, parse_field(coeff));
    for (std::size_t k = 0; k < betti.size(); ++k) {
        if (records)
            std::cout << "degree=" << k << "\tbetti=" << betti[k] << "\n";
        else
            std::cout << k << ": betti=" << betti[k] << "\n";
    }
}

void cmd_cup_length(const std::string& path, const std::string& coeff)
{
    long long value = cup_length(load_complex(path), parse_field(coeff));
    if (records)
        std::cout << "cup_length=" << value << "\n";
    else
        std::cout << "cup-length = " << value << "\n";
}

void cmd_essential(const std::string& path, const std::string& coeff, int max_len)
{
    auto K = load_complex(path);
    auto field = parse_field(coeff);
    if (max_len <= 0)
        max_len = std::max(K.dim(), 1);
    auto tuples = essential_tuples(K, field, max_len);
    if (!records) {
        std::cout << essential_report(tuples, field);
        return;
    }
    for (const auto& t : tuples)
        std::cout << "tuple=" << t.to_text() << "\tfield=" << field.name() << "\n";
}

void cmd_bounds(const std::string& tuple, const std::string& profile_path)
{
    BoundReport report;
    if (!tuple.empty()) {
        DegreeTuple t;
        for (long long v : parse_int_list(tuple))
            t.degrees.push_back(static_cast<int>(v));
        report.target = "ct";
        report.is_lower = true;
        std::string inputs = "tuple=" + t.to_text();
        report.entries.push_back({ct_lower_from_tuple(t), "essential-product",
                                  "essential product length-weighted estimate",
                                  inputs});
        report.best = report.entries.front().value;
    } else {
        auto h = load_profile(profile_path);
        SpaceProfile space;
        space.hdim = std::max(h.top_degree(), 0);
        space.cat_lower = 1;
        space.homology = h;
        if (profile_path.rfind("corpus:", 0) == 0) {
            // with the complex in hand, ring data sharpens the report
            auto K = corpus(profile_path.substr(7));
            for (const auto& field : {FieldSpec::q(), FieldSpec::fp(2)}) {
                auto tuples = essential_tuples(K, field, std::max(K.dim(), 1));
                space.cat_lower = std::max(
                    space.cat_lower, cat_lower_from_cuplength(cup_length(K, field)));
                if (!tuples.empty())
                    space.essential.emplace_back(field, std::move(tuples));
            }
        }
        report = best_ct_lower(space);
    }
    std::cout << (records ? report.to_records() : report.to_text());
}

void emit_row(const std::string& kind, const std::string& label, long long value,
              const std::string& citation, const std::string& note = "")
{
    if (records) {
        std::cout << "kind=" << kind << "\tentry=" << label << "\tvalue=" << value
                  << "\tcitation=" << citation;
        if (!note.empty())
            std::cout << "\tnote=" << note;
        std::cout << "\n";
    } else {
        std::cout << kind << " " << label << "  " << value << "  [" << citation
                  << "]" << (note.empty() ? "" : "  " + note) << "\n";
    }
}

void cmd_table(const std::string& kind, long long max_n)
{
    if (kind == "projective") {
        for (long long n = 1; n <= max_n; ++n) {
            emit_row("RP", "n=" + std::to_string(n),
                     projective_lower(ProjectiveKind::real, n),
                     "projective-space essential product estimate");
            emit_row("CP", "n=" + std::to_string(n),
                     projective_lower(ProjectiveKind::complex_kind, n),
                     "projective-space essential product estimate");
            emit_row("HP", "n=" + std::to_string(n),
                     projective_lower(ProjectiveKind::quaternionic, n),
                     "projective-space essential product estimate");
        }
    } else if (kind == "unitary") {
        bool footnote = false;
        for (long long n = 1; n <= max_n; ++n) {
            long long u = unitary_lower(n);
            long long u_closed = (4 * n * n * n + 3 * n * n + 5 * n + 12) / 6;
            emit_row("U", "n=" + std::to_string(n), u,
                     "unitary group exterior-generator estimate",
                     u == u_closed ? "" : "* closed form " + std::to_string(u_closed));
            footnote = footnote || u != u_closed;
            if (n >= 2) {
                long long su = special_unitary_lower(n);
                long long su_closed = (4 * n * n * n - 3 * n * n + 5 * n + 6) / 6;
                emit_row("SU", "n=" + std::to_string(n), su,
                         "unitary group exterior-generator estimate",
                         su == su_closed ? ""
                                         : "* closed form " + std::to_string(su_closed));
                footnote = footnote || su != su_closed;
            }
        }
        if (footnote && !records)
            std::cout << "* closed form overshoots when all generator degrees "
                         "coincide; the general-rule value applies\n";
    } else if (kind == "moore") {
        for (long long r = 1; r <= max_n; ++r)
            for (long long i = 1; i <= 3; ++i)
                emit_row("M", "rank=" + std::to_string(r) + " degree=" + std::to_string(i),
                         moore_free_ct(r, i), "free Moore space skeleton formula");
    } else if (kind == "products") {
        for (long long m = 1; m <= max_n; ++m)
            for (long long n = m; n <= max_n; ++n)
                emit_row("SxS", "m=" + std::to_string(m) + " n=" + std::to_string(n),
                         product_spheres_lower(m, n),
                         "sphere product essential tuple estimate");
        emit_row("T^3", "lower", 11, "worked three-torus estimate",
                 "annotated: sharper than the general formulas; not recomputed here");
    } else {
        throw CLI::ValidationError(
            "table", "expected projective|unitary|moore|products, got '" + kind + "'");
    }
}

void cmd_moore(long long rank, long long degree, const std::string& witness_path)
{
    long long ct = moore_free_ct(rank, degree);
    auto witness = moore_free_witness(rank, degree);
    if (records)
        std::cout << "ct=" << ct << "\tvertices=" << witness.vertex_count
                  << "\tverified=" << (witness.verified ? "true" : "false") << "\n";
    else
        std::cout << "ct = " << ct << "\n" << witness.to_text();
    if (!witness_path.empty())
        write_cplx(witness.complex, witness_path);
}

void cmd_nerve(const std::string& path, const std::string& cover_arg, bool check_good)
{
    auto K = load_complex(path);
    CoverSpec cover =
        cover_arg == "stars" ? star_cover(K) : parse_cover(read_file(cover_arg));
    std::cout << to_cplx(nerve(cover, K));
    if (check_good)
        std::cout << is_good_cover_homological(cover, K).to_text();
}

void cmd_search(int vertices, const std::string& profile_path, int betti_dim,
                long long budget)
{
    EnumerationOptions options;
    options.node_budget = budget;
    if (betti_dim >= 0) {
        long long value = max_betti(vertices, betti_dim, options);
        if (records)
            std::cout << "max_betti=" << value << "\n";
        else
            std::cout << "max betti = " << value << "\n";
    } else {
        auto result = exists_profile(vertices, load_profile(profile_path), options);
        std::cout << result.to_text();
        if (result.witness)
            std::cout << to_cplx(*result.witness);
    }
    std::cout << "parameters: vertices=" << vertices << " budget=" << budget << "\n";
}

void write_or_print(const SimplicialComplex& K, const std::string& out)
{
    if (out.empty())
        std::cout << to_cplx(K);
    else
        write_cplx(K, out);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact vertex-count bounds for triangulations"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "records"}));

    std::string path, path2, coeff = "z", cover_arg = "stars", tuple, out;
    std::string profile_path, witness_path, kind;
    int max_len = 0, vertices = 6, betti_dim = -1;
    long long rank = 1, degree = 1, max_n = 8, budget = 50'000'000;
    bool check_good = false;

    auto* homology = app.add_subcommand("homology", "integral or field homology");
    homology->add_option("file", path)->required();
    homology->add_option("--coeff", coeff, "z, q, or f<p>");
    homology->callback([&] { cmd_homology(path, coeff); });

    auto* cup = app.add_subcommand("cup-length", "longest nonzero cup product");
    cup->add_option("file", path)->required();
    cup->add_option("--coeff", coeff)->required();
    cup->callback([&] { cmd_cup_length(path, coeff); });

    auto* essential = app.add_subcommand("essential", "essential degree tuples");
    essential->add_option("file", path)->required();
    essential->add_option("--coeff", coeff)->required();
    essential->add_option("--max-len", max_len, "maximum tuple length");
    essential->callback([&] { cmd_essential(path, coeff, max_len); });

    auto* bounds = app.add_subcommand("bounds", "aggregated lower bounds");
    auto* tuple_opt = bounds->add_option("--tuple", tuple, "degrees i1,i2,...");
    bounds->add_option("--profile", profile_path, "homology profile file")
        ->excludes(tuple_opt);
    bounds->callback([&] {
        if (tuple.empty() && profile_path.empty())
            throw CLI::RequiredError("--tuple or --profile");
        cmd_bounds(tuple, profile_path);
    });

    auto* table = app.add_subcommand("table", "bound tables");
    table->add_option("kind", kind, "projective|unitary|moore|products")->required();
    table->add_option("--max-n", max_n);
    table->callback([&] { cmd_table(kind, max_n); });

    auto* moore = app.add_subcommand("moore", "free Moore space bound and witness");
    moore->add_option("--rank", rank)->required();
    moore->add_option("--degree", degree)->required();
    moore->add_option("--witness", witness_path, "write the witness here");
    moore->callback([&] { cmd_moore(rank, degree, witness_path); });

    auto* nerve = app.add_subcommand("nerve", "nerve of a vertex-star cover");
    nerve->add_option("file", path)->required();
    nerve->add_option("--cover", cover_arg, "cover file, or 'stars'");
    nerve->add_flag("--check-good", check_good, "acyclicity check per intersection");
    nerve->callback([&] { cmd_nerve(path, cover_arg, check_good); });

    auto* search = app.add_subcommand("search", "exhaustive subcomplex search");
    search->add_option("--vertices", vertices)->required();
    auto* prof_opt = search->add_option("--profile", profile_path);
    search->add_option("--max-betti", betti_dim, "maximize this Betti number")
        ->excludes(prof_opt);
    search->add_option("--budget", budget);
    search->callback([&] {
        if (profile_path.empty() && betti_dim < 0)
            throw CLI::RequiredError("--profile or --max-betti");
        cmd_search(vertices, profile_path, betti_dim, budget);
    });

    auto* suspend = app.add_subcommand("suspend", "suspension of a complex");
    suspend->add_option("file", path)->required();
    suspend->add_option("-o,--output", out);
    suspend->callback([&] { write_or_print(suspension(load_complex(path)), out); });

    auto* wedge = app.add_subcommand("wedge", "one-point union of two complexes");
    wedge->add_option("first", path)->required();
    wedge->add_option("second", path2)->required();
    wedge->add_option("-o,--output", out);
    wedge->callback([&] {
        auto K = load_complex(path);
        auto L = load_complex(path2);
        Simplex sigma = {K.vertex_set().front()};
        Simplex tau = {L.vertex_set().front()};
        write_or_print(wedge_glue(K, L, sigma, tau), out);
    });

    // options are fully parsed before subcommand callbacks run, so the
    // format switch is propagated first
    app.parse_complete_callback([&] { records = format == "records"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
