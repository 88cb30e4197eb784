#pragma once

#include <cstddef>
#include <vector>

namespace backlund::detail {

/// Classical fixed-step RK4 over a flat state vector.
class RungeKutta4 {
public:
    explicit RungeKutta4(std::size_t n) : n_(n), tmp_(n), k1_(n), k2_(n), k3_(n), k4_(n) {}

    template <typename System>
    void step(System&& system, std::vector<double>& x, double t, double dt) {
        const double dt2 = dt / 2;
        system(x, k1_, t);
        for (std::size_t i = 0; i < n_; ++i) tmp_[i] = x[i] + dt2 * k1_[i];
        system(tmp_, k2_, t + dt2);
        for (std::size_t i = 0; i < n_; ++i) tmp_[i] = x[i] + dt2 * k2_[i];
        system(tmp_, k3_, t + dt2);
        for (std::size_t i = 0; i < n_; ++i) tmp_[i] = x[i] + dt * k3_[i];
        system(tmp_, k4_, t + dt);
        for (std::size_t i = 0; i < n_; ++i)
            x[i] += dt / 6 * (k1_[i] + 2 * k2_[i] + 2 * k3_[i] + k4_[i]);
    }

private:
    std::size_t n_;
    std::vector<double> tmp_, k1_, k2_, k3_, k4_;
};

}  // namespace backlund::detail
