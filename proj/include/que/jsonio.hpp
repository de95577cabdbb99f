#ifndef QUE_JSONIO_HPP
#define QUE_JSONIO_HPP

#include <string>

#include "que/dirichlet.hpp"
#include "que/eigenform.hpp"
#include "que/localidentity.hpp"

namespace que {

// {weight, truncation, coefficients: [[n, "decimal"], ...]} with exact
// integer strings.
std::string eigenform_json(const Eigenform& f);

// {kind, precision, truncation, lambda: [[n, re, im]...],
//  vonmangoldt: [[pk, re, im]...]} with decimal strings.
std::string dirichlet_json(const DirichletCoeffTable& t, int digits = 40);

std::string identity_report_json(const IdentityReport& rep, const LocalParams& params,
                                 const std::string& which);

std::string scan_result_json(const ScanResult& res);

// Fixed-format decimal for CSV cells (deterministic across runs).
std::string real_cell(const Real& x, int digits = 30);

}  // namespace que

#endif
