#pragma once

// JSON schemas for every public value: rationals as "p/q" strings, Gaussian
// rationals as {"re","im"}, canonical key order throughout so identical
// inputs serialize byte-identically.

#include <json.hpp>

#include "polystab/binary.hpp"
#include "polystab/curves.hpp"
#include "polystab/energy.hpp"
#include "polystab/pair.hpp"

namespace polystab::io {

using json = nlohmann::ordered_json;

json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);

json gq_to_json(const GQ& z);
GQ gq_from_json(const json& j);

json qvec_to_json(const QVec& v);
QVec qvec_from_json(const json& j);

json llvec_to_json(const std::vector<long long>& v);
std::vector<long long> llvec_from_json(const json& j);

json matrix_to_json(const GMat& m);
GMat matrix_from_json(const json& j);

json polytope_to_json(const LatticePolytope& p);

json form_to_json(const SparseForm& f);
SparseForm form_from_json(const json& j);

json frame_to_json(const TorusFrame& f);
TorusFrame frame_from_json(const json& j);
std::vector<TorusFrame> frames_from_json(const json& j, int dim);

json verdict_to_json(const PairVerdict& v);

json hermitian_frame_to_json(const HermitianFrame& f);
HermitianFrame hermitian_frame_from_json(const json& j, int nvars);

json energy_sample_to_json(const EnergySample& s);
json slope_report_to_json(const SlopeReport& r);
json scan_report_to_json(const ScanReport& r);

json oracle_report_to_json(const OracleReport& r);
json curve_report_to_json(const CurveCheckReport& r);
json curve_data_to_json(const CurveStabilityData& d);

}  // namespace polystab::io
