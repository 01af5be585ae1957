#ifndef GOBS_TESTS_FIXTURES_HPP
#define GOBS_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "gobs/parse.hpp"

namespace gobs::testing {

// The recurring showcase system: three binomial-ish cubics in QQ[x,y,z].
inline SystemFile showcase(const std::string& order) {
    return parse_system_file("field: QQ\nvars: x, y, z\norder: " + order +
                             "\npolys:\nx^3*y - z\nx*y*z - 2*y\nx*y^2 - z^2\n");
}

// Three quadrics in QQ[x,y,z,w].
inline SystemFile quadrics(const std::string& order) {
    return parse_system_file("field: QQ\nvars: x, y, z, w\norder: " + order +
                             "\npolys:\nx*y + 3*y^2 - 2*z*w\n2*x^2 + y^2 - 5*w^2\n"
                             "z*w + 3/2*w^2\n");
}

// A small system over GF(5).
inline SystemFile gf5_system() {
    return parse_system_file(
        "field: GF(5)\nvars: x, y, z\norder: grlex\npolys:\n"
        "x*y + 4*z + 2\nx*y*z + y^2 + 1\nx^2*y + 4*z^2\n");
}

// Deterministic random corpus: 2-3 variables, 2-4 generators, degree <= 3,
// small coefficients, alternating QQ and GF(5), graded orders.
inline std::vector<SystemFile> random_corpus(int count, unsigned seed = 20240811u) {
    std::mt19937 rng(seed);
    std::vector<SystemFile> out;
    const char* var_names[] = {"x", "y", "z"};
    while (static_cast<int>(out.size()) < count) {
        int nvars = 2 + static_cast<int>(rng() % 2);
        int ngens = 2 + static_cast<int>(rng() % 3);
        bool rational = out.size() % 2 == 0;
        Field field = rational ? Field::rationals() : Field::prime(5);
        TermOrder order = rng() % 2 ? TermOrder::grlex() : TermOrder::grevlex();
        std::vector<std::string> vars(var_names, var_names + nvars);
        RingPtr ring = make_ring(field, vars, order);

        std::vector<Polynomial> polys;
        for (int g = 0; g < ngens; ++g) {
            int nterms = 2 + static_cast<int>(rng() % 3);
            std::vector<Term> terms;
            for (int t = 0; t < nterms; ++t) {
                std::vector<int> e(nvars, 0);
                int deg = static_cast<int>(rng() % 4);
                for (int d = 0; d < deg; ++d) e[rng() % nvars] += 1;
                long c = static_cast<long>(rng() % 7) - 3;
                if (c == 0) c = 1;
                terms.push_back({Monomial(std::move(e)), FieldElement::from_int(c, field)});
            }
            Polynomial f(ring, std::move(terms));
            if (!f.is_zero()) polys.push_back(std::move(f));
        }
        if (polys.size() < 2) continue;
        out.push_back({ring, std::move(polys)});
    }
    return out;
}

}  // namespace gobs::testing

#endif
