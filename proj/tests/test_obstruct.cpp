#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gobs/obstruct.hpp"
#include "gobs/parse.hpp"
#include "fixtures.hpp"

using namespace gobs;

namespace {

std::set<std::string> strings(const std::vector<ModuleMonomial>& ms, const RingPtr& r) {
    std::set<std::string> out;
    for (auto& m : ms) out.insert(to_string(m, r));
    return out;
}

void check_report(const ResolutionReport& rep, const ObstructionModule& M) {
    REQUIRE(!rep.ranks.empty());
    CHECK(rep.minimal);
    CHECK(differentials_compose_to_zero(rep, M.ring));
    CHECK(!has_constant_entry(rep));
    // shapes: differentials[k] maps F_{k+1} -> F_k
    for (size_t k = 0; k < rep.differentials.size(); ++k) {
        CHECK(rep.differentials[k].size() == static_cast<size_t>(rep.ranks[k]));
        for (auto& row : rep.differentials[k])
            CHECK(row.size() == (k + 1 < rep.ranks.size() ? static_cast<size_t>(rep.ranks[k + 1]) : 0u));
    }
    int nvars = static_cast<int>(M.ring->vars.size());
    CHECK(euler_characteristic(rep, nvars, 10) == hilbert_series(M, 10));
}

}  // namespace

TEST_CASE("obstruction module of the grlex showcase") {
    SystemFile sf = testing::showcase("grlex");
    ObstructionModule M = gobs::gobs(sf.polys);
    CHECK(!M.is_zero());
    CHECK(strings(M.surviving_numerator(), sf.ring) ==
          std::set<std::string>{"x^2*e_2", "z*e_3", "x^2*e_3"});
    CHECK(strings(M.denominator, sf.ring) ==
          std::set<std::string>{"x^2*z^2*e_2", "x^3*z*e_2", "x^3*y*e_2", "x*y*z*e_3",
                                "x^3*y*e_3"});
    ResolutionReport rep = minimal_resolution(M);
    CHECK(rep.ranks == std::vector<int>{3, 6, 3});
    check_report(rep, M);
}

TEST_CASE("obstruction module of the lex quadrics") {
    SystemFile sf = testing::quadrics("lex");
    ObstructionModule M = gobs::gobs(sf.polys);
    CHECK(!M.is_zero());
    CHECK(strings(M.surviving_numerator(), sf.ring) == std::set<std::string>{"y*e_2"});
    CHECK(strings(M.denominator, sf.ring) ==
          std::set<std::string>{"x*y*e_2", "y*z*w*e_2", "x^2*e_3", "x*y*e_3"});
    ResolutionReport rep = minimal_resolution(M);
    CHECK(rep.ranks == std::vector<int>{1, 2, 1});
    check_report(rep, M);
}

TEST_CASE("a Groebner basis has zero obstruction module") {
    SystemFile sf = parse_system_file(
        "field: QQ\nvars: x, y, z\norder: grlex\npolys:\n"
        "x*z - 1/2*y*z\nx*y - 1/2*y^2\nz^3 - 2*y^2\ny*z^2 - 4*z\ny^2*z - 4*y\ny^3 - 2*z^2\n");
    ObstructionModule M = gobs::gobs(sf.polys);
    CHECK(M.is_zero());
    CHECK(M.surviving_numerator().empty());
    ResolutionReport rep = minimal_resolution(M);
    CHECK(rep.ranks.empty());
    CHECK(hilbert_series(M, 10) == std::vector<long>(11, 0));
}

TEST_CASE("residue field quotient resolves to the Koszul complex") {
    RingPtr ring = make_ring(Field::rationals(), {"x", "y", "z"}, TermOrder::grlex());
    std::vector<Polynomial> F = {parse_polynomial("x", ring)};
    std::vector<ModuleMonomial> numer = {parse_module_monomial("e_1", ring)};
    std::vector<ModuleMonomial> denom = {parse_module_monomial("x*e_1", ring),
                                         parse_module_monomial("y*e_1", ring),
                                         parse_module_monomial("z*e_1", ring)};
    ObstructionModule M = make_monomial_quotient(F, numer, denom);
    ResolutionReport rep = minimal_resolution(M);
    CHECK(rep.ranks == std::vector<int>{1, 3, 3, 1});
    check_report(rep, M);
    // a one-dimensional quotient: a single monomial in degree 1 (the shift)
    auto h = hilbert_series(M, 6);
    CHECK(h == std::vector<long>{0, 1, 0, 0, 0, 0, 0});
}

TEST_CASE("hilbert series counts quotient monomials per degree") {
    RingPtr ring = make_ring(Field::rationals(), {"x", "y"}, TermOrder::grlex());
    std::vector<Polynomial> F = {parse_polynomial("x + 1", ring)};  // shift deg 1
    std::vector<ModuleMonomial> numer = {parse_module_monomial("e_1", ring)};
    std::vector<ModuleMonomial> denom = {parse_module_monomial("x^2*e_1", ring),
                                         parse_module_monomial("x*y*e_1", ring),
                                         parse_module_monomial("y^2*e_1", ring)};
    ObstructionModule M = make_monomial_quotient(F, numer, denom);
    // basis of R/(x,y)^2 shifted into degree 1: {1}, {x, y}
    CHECK(hilbert_series(M, 4) == std::vector<long>{0, 1, 2, 0, 0});
    ResolutionReport rep = minimal_resolution(M);
    CHECK(rep.ranks == std::vector<int>{1, 3, 2});
    check_report(rep, M);
}

TEST_CASE("denominator must lie inside the numerator module") {
    RingPtr ring = make_ring(Field::rationals(), {"x", "y"}, TermOrder::grlex());
    std::vector<Polynomial> F = {parse_polynomial("x", ring)};
    std::vector<ModuleMonomial> numer = {parse_module_monomial("x*e_1", ring)};
    std::vector<ModuleMonomial> denom = {parse_module_monomial("y*e_1", ring)};
    CHECK_THROWS_AS(make_monomial_quotient(F, numer, denom), InternalError);
}

TEST_CASE("component resolutions direct-sum levelwise") {
    SystemFile sf = testing::showcase("grlex");
    ObstructionModule M = gobs::gobs(sf.polys);
    REQUIRE(M.components.size() >= 2);
    ResolutionReport whole = minimal_resolution(M);

    std::vector<int> summed;
    std::vector<long> hsum(11, 0);
    for (auto& comp : M.components) {
        std::vector<ModuleMonomial> numer, denom;
        for (auto& m : comp.l_gens) numer.push_back({m, comp.index});
        for (auto& m : comp.k_gens) denom.push_back({m, comp.index});
        ObstructionModule part = make_monomial_quotient(sf.polys, numer, denom);
        ResolutionReport rep = minimal_resolution(part);
        if (summed.size() < rep.ranks.size()) summed.resize(rep.ranks.size(), 0);
        for (size_t k = 0; k < rep.ranks.size(); ++k) summed[k] += rep.ranks[k];
        auto h = hilbert_series(part, 10);
        for (size_t d = 0; d < h.size(); ++d) hsum[d] += h[d];
    }
    CHECK(summed == whole.ranks);
    CHECK(hsum == hilbert_series(M, 10));
}

TEST_CASE("resolutions over a finite field") {
    SystemFile sf = testing::gf5_system();
    ObstructionModule M = gobs::gobs(sf.polys);
    ResolutionReport rep = minimal_resolution(M);
    check_report(rep, M);
}
