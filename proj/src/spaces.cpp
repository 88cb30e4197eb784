#include "backlund/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace backlund {

std::string to_string(SpaceCase c) {
    switch (c) {
        case SpaceCase::G3: return "g3";
        case SpaceCase::PG3TimelikeBinormal: return "pg3-tb";
        case SpaceCase::PG3TimelikeNormal: return "pg3-tn";
        case SpaceCase::G4: return "g4";
    }
    return "?";
}

SpaceCase parse_space_case(const std::string& label) {
    if (label == "g3") return SpaceCase::G3;
    if (label == "pg3-tb") return SpaceCase::PG3TimelikeBinormal;
    if (label == "pg3-tn") return SpaceCase::PG3TimelikeNormal;
    if (label == "g4") return SpaceCase::G4;
    throw std::invalid_argument("unknown space case '" + label +
                                "' (expected g3, pg3-tb, pg3-tn or g4)");
}

GVec GVec::zero(std::size_t size) {
    GVec out;
    out.n = size;
    return out;
}

namespace {

void require_same_dim(const GVec& a, const GVec& b) {
    if (a.n != b.n)
        throw std::invalid_argument("vector dimension mismatch");
}

void require_space_dim(SpaceCase space, const GVec& a) {
    if (a.n != dim(space))
        throw std::invalid_argument("vector dimension does not match space");
}

}  // namespace

GVec operator+(const GVec& a, const GVec& b) {
    require_same_dim(a, b);
    GVec out = a;
    for (std::size_t i = 0; i < a.n; ++i) out.v[i] += b.v[i];
    return out;
}

GVec operator-(const GVec& a, const GVec& b) {
    require_same_dim(a, b);
    GVec out = a;
    for (std::size_t i = 0; i < a.n; ++i) out.v[i] -= b.v[i];
    return out;
}

GVec operator*(double s, const GVec& a) {
    GVec out = a;
    for (std::size_t i = 0; i < a.n; ++i) out.v[i] *= s;
    return out;
}

double g_dot(SpaceCase space, const GVec& u, const GVec& w) {
    require_same_dim(u, w);
    require_space_dim(space, u);
    const std::size_t k = distinguished_index(space);
    if (u[k] != 0.0 || w[k] != 0.0) return u[k] * w[k];
    switch (space) {
        case SpaceCase::G3:
            return u[1] * w[1] + u[2] * w[2];
        case SpaceCase::PG3TimelikeBinormal:
        case SpaceCase::PG3TimelikeNormal:
            return u[1] * w[1] - u[2] * w[2];
        case SpaceCase::G4:
            return u[0] * w[0] + u[1] * w[1] + u[2] * w[2];
    }
    return 0.0;
}

double g_norm(SpaceCase space, const GVec& u) {
    return std::sqrt(std::fabs(g_dot(space, u, u)));
}

double euclid_dot(const GVec& u, const GVec& w) {
    require_same_dim(u, w);
    double acc = 0.0;
    for (std::size_t i = 0; i < u.n; ++i) acc += u[i] * w[i];
    return acc;
}

double euclid_norm(const GVec& u) { return std::sqrt(euclid_dot(u, u)); }

Classification classify(SpaceCase space, const GVec& u) {
    require_space_dim(space, u);
    Classification out;
    out.isotropic = (u[distinguished_index(space)] == 0.0);
    if (out.isotropic && is_pseudo(space)) {
        const double q = u[1] * u[1] - u[2] * u[2];
        out.causal = q > 0.0   ? CausalClass::Spacelike
                     : q < 0.0 ? CausalClass::Timelike
                               : CausalClass::Null;
    }
    return out;
}

std::string to_string(const Classification& c) {
    std::string s = c.isotropic ? "isotropic" : "non-isotropic";
    switch (c.causal) {
        case CausalClass::Spacelike: s += ", spacelike"; break;
        case CausalClass::Timelike: s += ", timelike"; break;
        case CausalClass::Null: s += ", null"; break;
        case CausalClass::None: break;
    }
    return s;
}

}  // namespace backlund
