#include "ptrg/poly.hpp"

namespace ptrg {

std::string CouplingPoly::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[4] = {"eps", "g1", "g2", "g3"};
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string coeff = ptrg::to_string(c);
    const bool is_one = (c == ExactScalar(1));
    const bool is_minus_one = (c == ExactScalar(-1));
    std::string vars;
    for (int v = 0; v < 4; ++v) {
      if (m.e[v] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[v];
      if (m.e[v] > 1) vars += "^" + std::to_string(m.e[v]);
    }
    std::string piece;
    if (vars.empty()) {
      piece = coeff;
    } else if (is_one) {
      piece = vars;
    } else if (is_minus_one) {
      piece = "-" + vars;
    } else if (c.is_real()) {
      piece = coeff + "*" + vars;
    } else {
      piece = "(" + coeff + ")*" + vars;
    }
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

}  // namespace ptrg
