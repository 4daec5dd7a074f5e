// Benchmark of the parallel kernels against the serial reference (jobs = 1),
// plus the algorithmic reference routes kept for testing. Results are
// compared for exact equality while timing.

#include <chrono>
#include <cstdio>

#include "qlift/cocycle.hpp"
#include "qlift/fixtures.hpp"
#include "qlift/parallel.hpp"
#include "qlift/tensor.hpp"

using namespace qlift;
using namespace qlift::fixtures;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
double timed(F&& f) {
    auto t0 = Clock::now();
    f();
    return seconds_since(t0);
}

void row(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-38s %9.3fs %12.3fs %9.2fx   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = argc > 1 ? std::atoi(argv[1]) : 4;
    std::printf("parallel kernels with %d workers against the serial reference\n\n", jobs);
    std::printf("%-38s %10s %13s %10s\n", "kernel", "serial", "parallel", "speedup");

    // 1. full axiom verification, dim 54
    {
        Datum d = rank2_z6();
        LiftingParams p = LiftingParams::zero(d);
        p.diag[0] = Scalar::one(d.field());
        par::set_max_workers(1);
        Hopf H = build_lifting(d, p, nullptr);
        AxiomReport r1, r2;
        double s1 = timed([&] { r1 = H.verify(); });
        par::set_max_workers(jobs);
        double s2 = timed([&] { r2 = H.verify(); });
        row("axiom verification (dim 54)", s1, s2, r1.ok == r2.ok && r1.violations == r2.violations);
    }

    // 2. quantum symmetrizer image rank, rank 2 degree 6
    {
        Datum d = rank2_z6();
        Braided B(d);
        long r1 = 0, r2 = 0;
        par::set_max_workers(1);
        double s1 = timed([&] { r1 = B.image_rank(6); });
        par::set_max_workers(jobs);
        double s2 = timed([&] { r2 = B.image_rank(6); });
        row("symmetrizer image rank (degree 6)", s1, s2, r1 == r2);
    }

    // 3. Jacobson radical of the dim-81 lifting
    {
        Datum d = prime_square_datum(3);
        LiftingParams p = LiftingParams::zero(d);
        p.link[{0, 1}] = Scalar::one(d.field());
        par::set_max_workers(jobs);
        Hopf H = build_lifting(d, p, nullptr);
        std::vector<SparseVec> v1, v2;
        par::set_max_workers(1);
        double s1 = timed([&] { v1 = radical_basis(H.algebra_table()); });
        par::set_max_workers(jobs);
        double s2 = timed([&] { v2 = radical_basis(H.algebra_table()); });
        row("Jacobson radical (dim 81)", s1, s2, v1 == v2);
    }

    // 4. multiplicative cocycle law: sparse convolution route against the
    //    direct Sweedler triple scan (both serial; algorithmic reference)
    {
        Datum d = rank2_z6();
        par::set_max_workers(jobs);
        Hopf A = build_lifting(d, LiftingParams::zero(d), nullptr);
        Func z1 = zeta_cocycle(d, A, 0, Scalar::one(d.field()), nullptr);
        Func z2 = zeta_cocycle(d, A, 1, Scalar::one(d.field()), nullptr);
        Func ef = (z1 + z2).conv_exp();
        par::set_max_workers(1);
        CocycleCheck c1, c2;
        double s1 = timed([&] { c1 = is_mult_cocycle_direct(ef); });
        double s2 = timed([&] { c2 = is_mult_cocycle(ef); });
        row("mult-cocycle law: direct vs sparse", s1, s2, c1.ok == c2.ok);
    }

    par::set_max_workers(1);
    return 0;
}
