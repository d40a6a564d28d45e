// Serial vs OpenMP comparison on the classification workload: per-ideal
// invariant precomputation and the pairwise verdict matrix dominate, and both
// are embarrassingly parallel over independent ideals.

#include <chrono>
#include <iostream>

#include "csknot/class_monoid.hpp"
#include "csknot/family.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace csknot;
namespace chrono = std::chrono;

namespace {
long run_ms(const OrderPtr& o, const Int& bound, int threads, std::size_t& classes) {
    const auto t0 = chrono::steady_clock::now();
    const ClassList cl = class_monoid(o, bound, 5, threads);
    const auto t1 = chrono::steady_clock::now();
    classes = cl.representatives.size();
    return chrono::duration_cast<chrono::milliseconds>(t1 - t0).count();
}
} // namespace

int main(int argc, char** argv) {
    long a = -25;
    Int bound = 0;
    if (argc > 1) a = std::strtol(argv[1], nullptr, 10);
    if (argc > 2) bound = Int(argv[2]);

    const IntPoly f = family_polynomial(4, a);
    const OrderPtr o = make_order(f);
    if (bound == 0) {
        const MinkowskiBound mb = minkowski_bound(o);
        bound = mb.applicable ? Int(mb.bound.get_num() / mb.bound.get_den() + 1) : Int(100);
    }
    std::cout << "polynomial a=" << a << ", norm bound " << bound.get_str() << "\n";

    std::size_t classes_serial = 0, classes_parallel = 0;
    const long serial_ms = run_ms(o, bound, 1, classes_serial);
    std::cout << "serial reference: " << serial_ms << " ms, " << classes_serial
              << " classes\n";

#ifdef _OPENMP
    const long par_ms = run_ms(o, bound, 0, classes_parallel);
    std::cout << "openmp (" << omp_get_max_threads() << " threads): " << par_ms << " ms, "
              << classes_parallel << " classes\n";
    if (classes_serial != classes_parallel) {
        std::cout << "MISMATCH between serial and parallel class counts\n";
        return 1;
    }
    if (par_ms > 0)
        std::cout << "speedup: " << static_cast<double>(serial_ms) / static_cast<double>(par_ms)
                  << "x\n";
#else
    std::cout << "built without OpenMP; serial only\n";
#endif
    return 0;
}
