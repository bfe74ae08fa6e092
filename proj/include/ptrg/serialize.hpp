#pragma once

#include <json.hpp>
#include <ostream>
#include <string>

#include "ptrg/exponents.hpp"
#include "ptrg/flow.hpp"
#include "ptrg/poly.hpp"
#include "ptrg/stability.hpp"

namespace ptrg {

// Exact rationals go out as "p/q" strings so no float contamination can
// happen downstream; doubles go out as JSON numbers (exact round-trip form)
// and as %.17g in CSV.
std::string format_double(double x);

nlohmann::json json_value(const Complex& z);
nlohmann::json json_value(const ExactScalar& x);
nlohmann::json json_series(const EpsSeries<ExactScalar>& s);
nlohmann::json json_series(const EpsSeries<Complex>& s);
nlohmann::json json_poly(const CouplingPoly& p);
nlohmann::json json_coupling_vec(const CouplingVec& g);

template <class F>
nlohmann::json json_fixed_point(const FixedPointT<F>& fp) {
  nlohmann::json j;
  j["kind"] = to_string(fp.kind);
  j["branch"] = to_string(fp.branch);
  j["k"] = json_value(fp.k);
  j["exact"] = std::is_same_v<F, ExactScalar>;
  j["coords"] = {{"g1", json_series(fp.coords[0])},
                 {"g2", json_series(fp.coords[1])},
                 {"g3", json_series(fp.coords[2])}};
  return j;
}

nlohmann::json json_report(const StabilityReport& rep);

template <class F>
nlohmann::json json_exponents(const ExponentSetT<F>& ex) {
  nlohmann::json j;
  j["k"] = json_value(ex.k_used);
  j["eta"] = json_series(ex.eta);
  j["eta2"] = json_series(ex.eta2);
  j["nu"] = json_series(ex.nu);
  j["is_real"] = ex.is_real;
  return j;
}

// Pinned layout: header t,g1_re,g1_im,g2_re,g2_im,g3_re,g3_im, one row per
// sample, LF line endings.
void write_trajectory_csv(std::ostream& os, const FlowTrajectory& tr);
void write_field_csv(std::ostream& os, const VectorField& vf);

}  // namespace ptrg
