// Benchmark: serial vs OpenMP conjugate evaluation for the m=5 pipeline
// product over Q(sqrt(-1)) (8 cosets, 8 Siegel factors each).  Verifies that
// both paths produce bit-identical values before timing them.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "modunits/classfield.hpp"
#include "modunits/siegel_algebra.hpp"

using namespace modunits;

namespace {

template <typename F>
double best_of(int reps, F&& f) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt < best) best = dt;
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif

    QuadField field = make_field(-4);
    SiegelProduct p = phi_ratio_squared_product(5);
    p = p.pow(galois_stable_power(p));

    for (long prec : {512L, 1024L, 2048L}) {
        EvalContext ctx(prec);
        std::vector<BigComplex> a = conjugates_serial(p, field, ctx);
        std::vector<BigComplex> b = conjugates(p, field, ctx);
        bool identical = a.size() == b.size();
        for (std::size_t i = 0; identical && i < a.size(); ++i)
            identical = (a[i].re() == b[i].re()) && (a[i].im() == b[i].im());
        double ts = best_of(3, [&] { conjugates_serial(p, field, ctx); });
        double tp = best_of(3, [&] { conjugates(p, field, ctx); });
        std::printf("prec %5ld: serial %8.1f ms, parallel %8.1f ms, speedup %.2fx, bit-identical: %s\n",
                    prec, ts * 1e3, tp * 1e3, ts / tp, identical ? "yes" : "NO");
        if (!identical) return 1;
    }
    return 0;
}
