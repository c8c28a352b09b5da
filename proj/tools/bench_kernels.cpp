// Timing comparison of the serial reference kernels against the OpenMP path:
// batched S-polynomial reduction (through a full Groebner run), batched minor
// expansion, and the syzygy pipeline.

#include <chrono>
#include <iostream>
#include <vector>

#include "virtua/freemod.hpp"
#include "virtua/io.hpp"

#ifdef VIRTUA_HAVE_OPENMP
#include <omp.h>
#endif

using namespace virtua;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& f, int reps) {
    auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double>(Clock::now() - t0).count() / reps;
}

void row(const std::string& name, double serial, double parallel) {
    std::cout << name << ": serial " << serial * 1e3 << " ms, parallel "
              << parallel * 1e3 << " ms, speedup " << serial / parallel << "x\n";
}

}  // namespace

int main() {
#ifdef VIRTUA_HAVE_OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run the serial path\n";
#endif
    auto ring = CoxRing::product_space({1, 2}, 101);
    std::vector<Poly> gens;
    for (const char* s :
         {"y0*y1-22*y1^2-20*y0*y2-26*y1*y2-6*y2^2", "y0^2-20*y1^2-14*y0*y2-22*y1*y2+33*y2^2",
          "x0*y1+10*x0*y2-x1*y0-19*x1*y1+47*x1*y2", "x0*y0+43*x0*y2-13*x1*y0+50*x1*y1+20*x1*y2",
          "x0^2*y2-42*x0*x1*y2+42*x1^2*y0-48*x1^2*y1+13*x1^2*y2",
          "x0^4+27*x0^3*x1+25*x0^2*x1^2-29*x0*x1^3-40*x1^4"})
        gens.push_back(parse_poly(*ring, s));

    // Groebner runs: the batched normal-form kernel dominates
    row("groebner basis (4-points ideal)",
        time_of([&] { groebner_basis(gens, canonical_order(), ExecMode::Serial); }, 5),
        time_of([&] { groebner_basis(gens, canonical_order(), ExecMode::Parallel); }, 5));

    // minor expansion on the second differential of the resolution
    Ideal I(ring, gens);
    FreeComplex R = minimal_free_resolution(presentation_of_quotient(I), 6);
    const GradedMatrix& phi2 = R.maps[1];
    row("all 5x5 minors of phi_2 (6x11)",
        time_of([&] { minors_ideal(5, phi2, ExecMode::Serial); }, 3),
        time_of([&] { minors_ideal(5, phi2, ExecMode::Parallel); }, 3));
    row("all 6x6 minors of phi_2 (6x11)",
        time_of([&] { minors_ideal(6, phi2, ExecMode::Serial); }, 3),
        time_of([&] { minors_ideal(6, phi2, ExecMode::Parallel); }, 3));

    // tracked module reduction inside the syzygy kernel
    row("syzygies of phi_1",
        time_of([&] { syzygy_matrix(R.maps[0], ExecMode::Serial); }, 3),
        time_of([&] { syzygy_matrix(R.maps[0], ExecMode::Parallel); }, 3));
    row("syzygies of phi_2",
        time_of([&] { syzygy_matrix(phi2, ExecMode::Serial); }, 3),
        time_of([&] { syzygy_matrix(phi2, ExecMode::Parallel); }, 3));
    return 0;
}
