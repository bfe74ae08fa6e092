#include "ptrg/serialize.hpp"

#include <cstdio>

namespace ptrg {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

nlohmann::json json_value(const Complex& z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

nlohmann::json json_value(const ExactScalar& x) {
  if (x.is_real()) return to_string(x.re);
  return {{"re", to_string(x.re)}, {"im", to_string(x.im)}};
}

nlohmann::json json_series(const EpsSeries<ExactScalar>& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int m = 0; m <= s.order(); ++m) coeffs.push_back(json_value(s[m]));
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

nlohmann::json json_series(const EpsSeries<Complex>& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int m = 0; m <= s.order(); ++m) coeffs.push_back(json_value(s[m]));
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

nlohmann::json json_poly(const CouplingPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"eps", m.e[0]},
                     {"g1", m.e[1]},
                     {"g2", m.e[2]},
                     {"g3", m.e[3]},
                     {"coeff", json_value(c)}});
  }
  return {{"terms", terms}, {"text", p.to_string()}};
}

nlohmann::json json_coupling_vec(const CouplingVec& g) {
  return {{"g1", json_value(g.g1)}, {"g2", json_value(g.g2)}, {"g3", json_value(g.g3)}};
}

nlohmann::json json_report(const StabilityReport& rep) {
  static const char* axes[3] = {"g1", "g2", "g3"};
  nlohmann::json eigs = nlohmann::json::array();
  nlohmann::json classes = nlohmann::json::array();
  nlohmann::json axis = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) {
    eigs.push_back(json_value(rep.eigenvalues[i]));
    classes.push_back(to_string(rep.classes[i]));
    if (rep.axis_alignment[i])
      axis.push_back(axes[*rep.axis_alignment[i]]);
    else
      axis.push_back(nullptr);
  }
  nlohmann::json j;
  j["eigenvalues"] = eigs;
  j["classes"] = classes;
  j["marginal_tol"] = rep.marginal_tol;
  j["axis_alignment"] = axis;
  j["point"] = json_coupling_vec(rep.point);
  j["refined"] = rep.refined;
  j["residual"] = rep.residual;
  j["line_zero_mode"] = rep.line_zero_mode;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

void write_trajectory_csv(std::ostream& os, const FlowTrajectory& tr) {
  os << "t,g1_re,g1_im,g2_re,g2_im,g3_re,g3_im\n";
  for (const auto& [t, g] : tr.samples) {
    os << format_double(t) << ',' << format_double(g.g1.real()) << ','
       << format_double(g.g1.imag()) << ',' << format_double(g.g2.real()) << ','
       << format_double(g.g2.imag()) << ',' << format_double(g.g3.real()) << ','
       << format_double(g.g3.imag()) << '\n';
  }
}

void write_field_csv(std::ostream& os, const VectorField& vf) {
  os << "g1,g2,v1_re,v1_im,v2_re,v2_im\n";
  for (const auto& s : vf.samples) {
    os << format_double(s.g1) << ',' << format_double(s.g2) << ',' << format_double(s.v1.real())
       << ',' << format_double(s.v1.imag()) << ',' << format_double(s.v2.real()) << ','
       << format_double(s.v2.imag()) << '\n';
  }
}

}  // namespace ptrg
