#pragma once

#include <vector>

#include "tristate/family.hpp"

namespace tristate {

struct SweepRow {
    double b = 0.0;
    double lmin_a = 0.0, lmin_b = 0.0, lmin_c = 0.0;

    bool operator==(const SweepRow&) const = default;
};

std::vector<double> linspace(double from, double to, int steps);

/// One row per b: lambda_min of the three partial transposes of family(b).
/// Serial reference implementation.
std::vector<SweepRow> sweep_serial(const FamilyFn& family, std::span<const double> bs);

/// OpenMP version; rows are computed independently and emitted in b order,
/// bitwise identical to the serial results.
std::vector<SweepRow> sweep_parallel(const FamilyFn& family, std::span<const double> bs);

}  // namespace tristate
