#include "backlund/detail/finite_difference.hpp"

#include <stdexcept>

namespace backlund::detail {

std::vector<double> fd_derivative(const std::vector<double>& f, double h, int order) {
    const std::size_t n = f.size();
    if (n < 5) throw std::invalid_argument("fd_derivative: need at least 5 samples");
    std::vector<double> out(n);
    switch (order) {
        case 1:
            out[0] = (-3 * f[0] + 4 * f[1] - f[2]) / (2 * h);
            for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2 * h);
            out[n - 1] = (3 * f[n - 1] - 4 * f[n - 2] + f[n - 3]) / (2 * h);
            break;
        case 2:
            out[0] = (2 * f[0] - 5 * f[1] + 4 * f[2] - f[3]) / (h * h);
            for (std::size_t i = 1; i + 1 < n; ++i)
                out[i] = (f[i + 1] - 2 * f[i] + f[i - 1]) / (h * h);
            out[n - 1] = (2 * f[n - 1] - 5 * f[n - 2] + 4 * f[n - 3] - f[n - 4]) / (h * h);
            break;
        case 3: {
            const double h3 = 2 * h * h * h;
            // one-sided second-order stencils for the first/last two samples
            auto onesided = [&](std::size_t i, int dir) {
                const auto at = [&](int k) {
                    return f[static_cast<std::size_t>(static_cast<long>(i) + dir * k)];
                };
                return dir * (-5 * at(0) + 18 * at(1) - 24 * at(2) + 14 * at(3) - 3 * at(4)) / h3;
            };
            out[0] = onesided(0, +1);
            out[1] = onesided(1, +1);
            for (std::size_t i = 2; i + 2 < n; ++i)
                out[i] = (f[i + 2] - 2 * f[i + 1] + 2 * f[i - 1] - f[i - 2]) / h3;
            out[n - 2] = onesided(n - 2, -1);
            out[n - 1] = onesided(n - 1, -1);
            break;
        }
        default:
            throw std::invalid_argument("fd_derivative: order must be 1, 2 or 3");
    }
    return out;
}

}  // namespace backlund::detail
