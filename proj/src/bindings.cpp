#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "backlund/cli.hpp"
#include "backlund/curves.hpp"
#include "backlund/gamma_ode.hpp"
#include "backlund/io.hpp"
#include "backlund/spaces.hpp"
#include "backlund/transform.hpp"
#include "backlund/verify.hpp"

namespace py = pybind11;
using namespace backlund;

namespace {

GVec gvec_from_sequence(const std::vector<double>& v) {
    if (v.size() == 3) return GVec(v[0], v[1], v[2]);
    if (v.size() == 4) return GVec(v[0], v[1], v[2], v[3]);
    throw std::invalid_argument("vector must have 3 or 4 components");
}

std::vector<double> gvec_to_list(const GVec& v) {
    return std::vector<double>(v.v.begin(), v.v.begin() + static_cast<long>(v.n));
}

std::vector<std::vector<double>> map_to_rows(const FrameMap& m) {
    std::vector<std::vector<double>> rows(m.n, std::vector<double>(m.n));
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) rows[i][j] = m.at(i, j);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Backlund transformations of constant-torsion curves in Galilean-type spaces";

    py::enum_<SpaceCase>(m, "SpaceCase")
        .value("G3", SpaceCase::G3)
        .value("PG3_TB", SpaceCase::PG3TimelikeBinormal)
        .value("PG3_TN", SpaceCase::PG3TimelikeNormal)
        .value("G4", SpaceCase::G4);
    m.def("parse_space_case", &parse_space_case, py::arg("label"));
    m.def("space_label", [](SpaceCase c) { return to_string(c); });

    py::class_<GVec>(m, "GVec")
        .def(py::init(&gvec_from_sequence))
        .def("__len__", [](const GVec& v) { return v.n; })
        .def("__getitem__",
             [](const GVec& v, std::size_t i) {
                 if (i >= v.n) throw py::index_error();
                 return v[i];
             })
        .def_property_readonly("components", &gvec_to_list)
        .def("__repr__", [](const GVec& v) {
            std::string s = "GVec([";
            for (std::size_t i = 0; i < v.n; ++i)
                s += (i ? ", " : "") + io::format_double(v[i]);
            return s + "])";
        });
    py::implicitly_convertible<py::sequence, GVec>();

    m.def("g_dot", &g_dot, py::arg("space"), py::arg("u"), py::arg("v"));
    m.def("g_norm", &g_norm, py::arg("space"), py::arg("u"));
    m.def("euclid_dot", &euclid_dot, py::arg("u"), py::arg("v"));
    m.def("classify", [](SpaceCase space, const GVec& u) { return to_string(classify(space, u)); },
          py::arg("space"), py::arg("u"));

    py::class_<Grid>(m, "Grid")
        .def(py::init([](double s_min, double s_max, std::size_t samples) {
                 return Grid{s_min, s_max, samples};
             }),
             py::arg("s_min"), py::arg("s_max"), py::arg("samples"))
        .def_readwrite("s_min", &Grid::s_min)
        .def_readwrite("s_max", &Grid::s_max)
        .def_readwrite("samples", &Grid::samples)
        .def("points", &Grid::points);

    py::class_<CurveData>(m, "CurveData")
        .def(py::init<>())
        .def_readwrite("space", &CurveData::space)
        .def_readwrite("s", &CurveData::s)
        .def_readwrite("positions", &CurveData::positions);
    m.def("check_admissible", &check_admissible);
    m.def("curve_derivative", &curve_derivative, py::arg("curve"), py::arg("order"));

    py::class_<Frames>(m, "Frames")
        .def_readonly("e1", &Frames::e1)
        .def_readonly("e2", &Frames::e2)
        .def_readonly("e3", &Frames::e3)
        .def_readonly("e4", &Frames::e4);

    py::class_<FrenetData>(m, "FrenetData")
        .def_readonly("frames", &FrenetData::frames)
        .def_readonly("kappa", &FrenetData::kappa)
        .def_readonly("tau", &FrenetData::tau)
        .def_readonly("epsilon", &FrenetData::epsilon)
        .def_readonly("mu", &FrenetData::mu)
        .def_readonly("sigma", &FrenetData::sigma);

    m.def("frenet_apparatus", &frenet_apparatus, py::arg("curve"));

    py::class_<TemporalVector>(m, "TemporalVector")
        .def_readonly("e4", &TemporalVector::e4)
        .def_readonly("mu", &TemporalVector::mu);
    m.def("temporal_vector", &temporal_vector, py::arg("e1"), py::arg("e2"), py::arg("e3"));

    py::class_<FrameInit>(m, "FrameInit")
        .def(py::init<>())
        .def_static("standard", &FrameInit::standard)
        .def_readwrite("e1", &FrameInit::e1)
        .def_readwrite("e2", &FrameInit::e2)
        .def_readwrite("e3", &FrameInit::e3)
        .def_readwrite("e4", &FrameInit::e4)
        .def_readwrite("position", &FrameInit::position);

    py::class_<SynthesizedCurve>(m, "SynthesizedCurve")
        .def_readonly("curve", &SynthesizedCurve::curve)
        .def_readonly("frames", &SynthesizedCurve::frames)
        .def_readonly("notes", &SynthesizedCurve::notes);
    m.def("synthesize_curve", &synthesize_curve, py::arg("space"), py::arg("kappa"),
          py::arg("tau"), py::arg("sigma") = nullptr, py::arg("init"), py::arg("grid"));

    py::class_<FamilyParams>(m, "FamilyParams")
        .def(py::init<>())
        .def_readwrite("grid", &FamilyParams::grid)
        .def_readwrite("tau", &FamilyParams::tau)
        .def_readwrite("phi", &FamilyParams::phi)
        .def_readwrite("gamma0", &FamilyParams::gamma0)
        .def_readwrite("kappa", &FamilyParams::kappa)
        .def_readwrite("a", &FamilyParams::a)
        .def_readwrite("b", &FamilyParams::b)
        .def_readwrite("c", &FamilyParams::c)
        .def_readwrite("d", &FamilyParams::d);

    py::class_<FamilyCurve>(m, "FamilyCurve")
        .def_readonly("curve", &FamilyCurve::curve)
        .def_readonly("frames", &FamilyCurve::frames)
        .def_readonly("gamma", &FamilyCurve::gamma)
        .def_readonly("notes", &FamilyCurve::notes);
    m.def("curve_family", &curve_family, py::arg("space"), py::arg("name"), py::arg("params"));

    py::class_<BacklundParams>(m, "BacklundParams")
        .def_readonly("space", &BacklundParams::space)
        .def_readonly("phi", &BacklundParams::phi)
        .def_readonly("tau0", &BacklundParams::tau0)
        .def_readonly("gamma0", &BacklundParams::gamma0)
        .def_readonly("C", &BacklundParams::C)
        .def_readonly("r", &BacklundParams::r)
        .def_readonly("grid", &BacklundParams::grid);
    m.def("make_backlund_params", &make_backlund_params, py::arg("space"), py::arg("tau0"),
          py::arg("phi"), py::arg("gamma0"), py::arg("grid"));
    m.def("backlund_constant", &backlund_constant, py::arg("space"), py::arg("tau"),
          py::arg("phi"));

    py::class_<Radius>(m, "Radius")
        .def_readonly("value", &Radius::value)
        .def_readonly("half_angle_form", &Radius::half_angle_form);
    m.def("radius", &radius, py::arg("space"), py::arg("tau"), py::arg("phi"));

    m.def("gamma_rhs", &gamma_rhs, py::arg("space"), py::arg("gamma"), py::arg("tau"),
          py::arg("phi"), py::arg("kappa") = 0.0);
    m.def("solve_gamma", &solve_gamma, py::arg("params"), py::arg("kappa") = nullptr);
    m.def("gamma_closed_form", &gamma_closed_form, py::arg("params"), py::arg("s"));

    py::class_<RotationFactors>(m, "RotationFactors")
        .def_property_readonly("gamma_map",
                               [](const RotationFactors& r) { return map_to_rows(r.gamma_map); })
        .def_property_readonly(
            "gamma_map_inverse",
            [](const RotationFactors& r) { return map_to_rows(r.gamma_map_inverse); })
        .def_property_readonly("phi_map",
                               [](const RotationFactors& r) { return map_to_rows(r.phi_map); })
        .def_property_readonly("composed",
                               [](const RotationFactors& r) { return map_to_rows(r.composed()); });
    m.def("rotation_factors", &rotation_factors, py::arg("space"), py::arg("gamma"),
          py::arg("phi"));
    m.def("transformed_frame", &transformed_frame, py::arg("space"), py::arg("frame"),
          py::arg("gamma"), py::arg("phi"));
    m.def("displacement_coefficient", &displacement_coefficient, py::arg("space"), py::arg("tau"),
          py::arg("C"));

    py::class_<TransformedPair>(m, "TransformedPair")
        .def_readonly("seed_curve", &TransformedPair::seed_curve)
        .def_readonly("seed_frames", &TransformedPair::seed_frames)
        .def_readonly("gamma", &TransformedPair::gamma)
        .def_readonly("params", &TransformedPair::params)
        .def_readonly("image_curve", &TransformedPair::image_curve)
        .def_readonly("image_frames", &TransformedPair::image_frames);
    m.def("transform_curve", &transform_curve, py::arg("seed"), py::arg("seed_frames"),
          py::arg("gamma"), py::arg("params"));

    py::class_<CurvaturePrediction>(m, "CurvaturePrediction")
        .def_readonly("value", &CurvaturePrediction::value)
        .def_readonly("kappa_consistent", &CurvaturePrediction::kappa_consistent);
    m.def("predicted_curvature", &predicted_curvature, py::arg("space"), py::arg("kappa"),
          py::arg("dgamma_ds"), py::arg("tol") = 1e-9);
    m.def("predicted_torsion", &predicted_torsion, py::arg("space"), py::arg("tau"));

    py::class_<Tolerances>(m, "Tolerances").def(py::init<>()).def("set", &Tolerances::set);

    py::class_<ResidualEntry>(m, "ResidualEntry")
        .def_readonly("name", &ResidualEntry::name)
        .def_readonly("observed", &ResidualEntry::observed)
        .def_readonly("expected", &ResidualEntry::expected)
        .def_readonly("tolerance", &ResidualEntry::tolerance)
        .def_property_readonly("verdict",
                               [](const ResidualEntry& e) { return to_string(e.verdict); });

    py::class_<DiagnosticsReport>(m, "DiagnosticsReport")
        .def_readonly("params", &DiagnosticsReport::params)
        .def_readonly("checks", &DiagnosticsReport::checks)
        .def_readonly("notes", &DiagnosticsReport::notes)
        .def("all_pass", &DiagnosticsReport::all_pass);

    m.def("frame_coefficients", &frame_coefficients, py::arg("frame"), py::arg("v"));

    py::class_<ExpectedDefects>(m, "ExpectedDefects")
        .def_readonly("tangent", &ExpectedDefects::tangent)
        .def_readonly("speed_deficit", &ExpectedDefects::speed_deficit)
        .def_readonly("binormal", &ExpectedDefects::binormal);
    m.def("expected_defects", &expected_defects, py::arg("space"), py::arg("kappa"),
          py::arg("gamma"), py::arg("phi"), py::arg("tau"));

    py::class_<InvariantEstimates>(m, "InvariantEstimates")
        .def_readonly("kappa", &InvariantEstimates::kappa)
        .def_readonly("tau", &InvariantEstimates::tau)
        .def_readonly("valid", &InvariantEstimates::valid)
        .def_readonly("indeterminate", &InvariantEstimates::indeterminate)
        .def_readonly("notes", &InvariantEstimates::notes);
    m.def("estimate_invariants", &estimate_invariants, py::arg("curve"),
          py::arg("tolerances") = Tolerances{});

    m.def("full_report", &full_report, py::arg("pair"), py::arg("tolerances") = Tolerances{});

    m.def("write_curve_csv", &io::write_curve_csv, py::arg("path"), py::arg("curve"),
          py::arg("frames"), py::arg("meta") = std::map<std::string, std::string>{});
    m.def("read_curve_csv", &io::read_curve_csv, py::arg("path"));
    m.def("write_pair_csv", &io::write_pair_csv, py::arg("path"), py::arg("pair"));
    m.def("read_pair_csv", &io::read_pair_csv, py::arg("path"));
    m.def("report_to_json", &io::report_to_json, py::arg("report"));
    m.def("write_report_json", &io::write_report_json, py::arg("path"), py::arg("report"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
