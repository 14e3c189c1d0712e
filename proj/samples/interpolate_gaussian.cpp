// Sample a Gaussian on F_M(A1xA1xA1), transform, and measure how well the
// continuous extension reproduces it between grid points.

#include <cstdio>

#include "lietrans/lietrans.hpp"

using namespace lietrans;

int main() {
    const AlgebraId id = AlgebraId::A1xA1xA1;
    const Vec3d centre = fundamental_region_barycenter(id);
    const Field g = demo::gaussian(id, centre);

    std::printf("%4s %8s %12s %12s\n", "M", "|F_M|", "error", "stderr");
    for (int M : {2, 4, 6, 8, 10}) {
        const GridSpec spec{{M, M, M}};
        DiscreteTransform t(id, spec, Family::C);

        std::vector<Complex> samples;
        for (const auto& p : t.grid()) samples.push_back(g(p.point()));
        const Spectrum s = t.forward(samples);

        const Estimate e = error_integral(g, s, 10000, 7);
        std::printf("%4d %8zu %12.6g %12.3g\n", M, t.grid().size(), e.value, e.stderr_);
    }

    // A single evaluation of the extension off the grid.
    DiscreteTransform t(id, {{6, 6, 6}}, Family::C);
    std::vector<Complex> samples;
    for (const auto& p : t.grid()) samples.push_back(g(p.point()));
    const Vec3d x{0.37, 0.52, 0.11};
    std::printf("T(x) = %.6f, g(x) = %.6f\n", synthesize(t.forward(samples), x).real(), g(x).real());
}
