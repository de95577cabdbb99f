#ifndef QUE_AFE_HPP
#define QUE_AFE_HPP

#include "que/lfunction.hpp"

namespace que {

enum class AfeKernel { kGaussian, kPerronPower };

// Shifted-contour configuration: kernel, abscissa (c for central values, B
// for weight tables), trapezoid step and half-width, Dirichlet truncation.
struct AfeConfig {
  AfeKernel kernel = AfeKernel::kGaussian;
  int perron_k = 3;
  double perron_lambda = 0.1;
  double abscissa = 3.0;
  double step = 0.05;
  double half_width = 12.0;
  long truncation = 20000;
  mpfr_prec_t precision = 128;
  double kappa = 1.0;          // root-number surrogate in the (1+kappa) factor
  double target_accuracy = 1e-18;
};

// B = (2A+6)/eps + 1/2.
double afe_abscissa_from_choices(double a, double eps);

// Central value from the two mirror contour integrals of the completed
// function (pole absorbed by the (s(1-s))^r prefactor).
Complex afe_central_value(const LFunctionData& data, const AfeConfig& cfg);

// W(n): contour integral of D(1+2s) L_oo-ratio e^{s^2} n^{-s} / s at the
// configured abscissa, D = the data's Dirichlet factor.
Complex afe_weight(long n, const LFunctionData& data, const AfeConfig& cfg);

// Batched weights for a list of n (shares the per-node factor work).
std::vector<Complex> afe_weight_table(const std::vector<long>& ns, const LFunctionData& data,
                                      const AfeConfig& cfg);

}  // namespace que

#endif
