#include <benchmark/benchmark.h>

#include "gobs/degen.hpp"
#include "gobs/report.hpp"

using namespace gobs;

namespace {

SystemFile showcase(const std::string& order) {
    return parse_system_file("field: QQ\nvars: x, y, z\norder: " + order +
                             "\npolys:\nx^3*y - z\nx*y*z - 2*y\nx*y^2 - z^2\n");
}

void bm_run_sba(benchmark::State& state, const std::string& order) {
    SystemFile sf = showcase(order);
    for (auto _ : state) benchmark::DoNotOptimize(run_sba(sf.polys));
}
BENCHMARK_CAPTURE(bm_run_sba, grlex, "grlex");
BENCHMARK_CAPTURE(bm_run_sba, lex, "lex");

void bm_buchberger(benchmark::State& state) {
    SystemFile sf = showcase("grlex");
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(sf.polys));
}
BENCHMARK(bm_buchberger);

void bm_division(benchmark::State& state) {
    SystemFile sf = showcase("grlex");
    auto gb = reduced_gb(buchberger(sf.polys));
    Polynomial f = parse_polynomial("x^5*y^3*z^2 - 7*x^2*y*z + y^4 - 3", sf.ring);
    for (auto _ : state) benchmark::DoNotOptimize(divide(f, gb));
}
BENCHMARK(bm_division);

void bm_syzygy_basis(benchmark::State& state) {
    SystemFile sf = showcase("grlex");
    for (auto _ : state) benchmark::DoNotOptimize(syzygy_basis(sf.polys));
}
BENCHMARK(bm_syzygy_basis);

void bm_minimal_resolution(benchmark::State& state) {
    SystemFile sf = showcase("grlex");
    ObstructionModule M = gobs::gobs(sf.polys);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_resolution(M));
}
BENCHMARK(bm_minimal_resolution);

void bm_degeneration_check(benchmark::State& state) {
    SystemFile sf = showcase("grlex");
    for (auto _ : state) benchmark::DoNotOptimize(degeneration_check(sf.polys));
}
BENCHMARK(bm_degeneration_check);

}  // namespace

BENCHMARK_MAIN();
