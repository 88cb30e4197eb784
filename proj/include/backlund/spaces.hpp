#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace backlund {

/// Ambient geometry selector. The two pseudo-Galilean variants share the
/// scalar product and differ in which frame vector is timelike, which
/// changes the transformation formulas downstream.
enum class SpaceCase {
    G3,               // Galilean 3-space
    PG3TimelikeBinormal,
    PG3TimelikeNormal,
    G4,               // Galilean 4-space
};

constexpr std::size_t dim(SpaceCase c) {
    return c == SpaceCase::G4 ? 4 : 3;
}

/// Index of the distinguished (absolute) coordinate: first for 3-space,
/// fourth for G4.
constexpr std::size_t distinguished_index(SpaceCase c) {
    return c == SpaceCase::G4 ? 3 : 0;
}

constexpr bool is_pseudo(SpaceCase c) {
    return c == SpaceCase::PG3TimelikeBinormal || c == SpaceCase::PG3TimelikeNormal;
}

/// True for the cases whose transformation uses circular functions of phi.
constexpr bool is_circular(SpaceCase c) { return !is_pseudo(c); }

std::string to_string(SpaceCase c);
SpaceCase parse_space_case(const std::string& label);  // "g3", "pg3-tb", "pg3-tn", "g4"

/// Small fixed-capacity vector holding 3 or 4 components.
struct GVec {
    std::array<double, 4> v{0.0, 0.0, 0.0, 0.0};
    std::size_t n = 3;

    GVec() = default;
    GVec(double a, double b, double c) : v{a, b, c, 0.0}, n(3) {}
    GVec(double a, double b, double c, double d) : v{a, b, c, d}, n(4) {}
    static GVec zero(std::size_t size);

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }
    std::size_t size() const { return n; }
};

GVec operator+(const GVec& a, const GVec& b);
GVec operator-(const GVec& a, const GVec& b);
GVec operator*(double s, const GVec& a);

/// Degenerate scalar product of the selected space. The branch condition on
/// the distinguished components is an exact zero comparison: the definition
/// is combinatorial and grid data stores isotropic components as exact 0.
double g_dot(SpaceCase space, const GVec& u, const GVec& w);

/// sqrt(|g_dot(u,u)|).
double g_norm(SpaceCase space, const GVec& u);

/// Auxiliary Euclidean product used for frame-coefficient bookkeeping and
/// residual norms, where the degenerate product is not informative.
double euclid_dot(const GVec& u, const GVec& w);
double euclid_norm(const GVec& u);

enum class CausalClass { None, Spacelike, Timelike, Null };

struct Classification {
    bool isotropic = false;
    CausalClass causal = CausalClass::None;  // set for isotropic pseudo-Galilean vectors
};

std::string to_string(const Classification& c);

/// Isotropy of the distinguished component; for pseudo-Galilean isotropic
/// vectors additionally the sign class of a2^2 - a3^2.
Classification classify(SpaceCase space, const GVec& u);

}  // namespace backlund
