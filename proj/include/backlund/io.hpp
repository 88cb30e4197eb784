#pragma once

#include <map>
#include <string>

#include "backlund/curves.hpp"
#include "backlund/transform.hpp"
#include "backlund/verify.hpp"

namespace backlund::io {

/// CSV wire format. One metadata comment line first ("# key=value ..."),
/// then a mandatory header, then one row per sample. Columns for 3-space:
///   s,p1..p3,e1_1..e3_3,kappa,tau[,gamma,img_p1..img_p3,img_e1_1..img_e3_3]
/// 4-space inserts p4 / e*_4, appends sigma after tau, and the image block
/// of a pair file follows the same widening. gamma and the img_ columns are
/// present only in pair files. Values are written with 17 significant
/// digits, which round-trips doubles exactly.
struct CurveFile {
    CurveData curve;
    FrenetData frames;
    std::map<std::string, std::string> meta;
};

void write_curve_csv(const std::string& path, const CurveData& curve, const FrenetData& frames,
                     const std::map<std::string, std::string>& meta);
CurveFile read_curve_csv(const std::string& path);

void write_pair_csv(const std::string& path, const TransformedPair& pair);
TransformedPair read_pair_csv(const std::string& path);

/// Report schema:
/// {case, params:{tau,phi,gamma0,C,r}, checks:{name:{observed, expected,
/// tolerance, pass, verdict}}, notes:[...]} with numbers at 17 significant
/// digits and insertion-ordered keys; output is byte-deterministic.
std::string report_to_json(const DiagnosticsReport& report);
void write_report_json(const std::string& path, const DiagnosticsReport& report);

/// 17-significant-digit formatting used across all file output.
std::string format_double(double v);

}  // namespace backlund::io
