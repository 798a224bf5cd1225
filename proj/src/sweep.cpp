#include "tristate/sweep.hpp"

#include <stdexcept>

#include "tristate/eig.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tristate {

std::vector<double> linspace(double from, double to, int steps) {
    if (steps < 1) throw std::invalid_argument("linspace: need at least one step");
    std::vector<double> v(static_cast<std::size_t>(steps));
    if (steps == 1) {
        v[0] = from;
        return v;
    }
    for (int i = 0; i < steps; ++i) v[i] = from + (to - from) * i / (steps - 1);
    return v;
}

namespace {

SweepRow eval_row(const FamilyFn& family, double b) {
    const Operator rho = family(b);
    SweepRow r;
    r.b = b;
    r.lmin_a = lambda_min(partial_transpose(rho, Party::A).mat);
    r.lmin_b = lambda_min(partial_transpose(rho, Party::B).mat);
    r.lmin_c = lambda_min(partial_transpose(rho, Party::C).mat);
    return r;
}

}  // namespace

std::vector<SweepRow> sweep_serial(const FamilyFn& family, std::span<const double> bs) {
    std::vector<SweepRow> rows(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) rows[i] = eval_row(family, bs[i]);
    return rows;
}

std::vector<SweepRow> sweep_parallel(const FamilyFn& family, std::span<const double> bs) {
    std::vector<SweepRow> rows(bs.size());
    bool failed = false;
    std::string message;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(bs.size()); ++i) {
        try {
            rows[i] = eval_row(family, bs[i]);
        } catch (const std::exception& e) {
#pragma omp critical
            {
                failed = true;
                message = e.what();
            }
        }
    }
    if (failed) throw std::runtime_error("sweep_parallel: " + message);
    return rows;
}

}  // namespace tristate
