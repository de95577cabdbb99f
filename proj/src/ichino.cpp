#include "que/ichino.hpp"

#include <stdexcept>

namespace que {

IchinoValue ichino_local(const IchinoInput& input, mpfr_prec_t precision) {
  if (input.n_p < input.m_p || input.m_p < 0) throw std::invalid_argument("need n_p >= m_p >= 0");
  IchinoValue out;
  switch (input.kind) {
    case IchinoCase::kUnramified: {
      if (input.n_p != 0) throw std::invalid_argument("unramified case needs n_p = 0");
      out.is_bound = false;
      out.exact = 1;
      return out;
    }
    case IchinoCase::kRamifiedDistinct: {
      if (input.n_p == 0) throw std::invalid_argument("ramified case needs n_p >= 1");
      out.is_bound = false;
      out.exact = mpq_class(1, input.p);
      return out;
    }
    case IchinoCase::kRamifiedEqual: {
      if (input.n_p == 0) throw std::invalid_argument("ramified case needs n_p >= 1");
      mpfr_prec_t work = precision + 32;
      Real p(input.p, work);
      Real v = Real(100000L, work) * pow(p, -input.n_p);
      Real tau(input.m_p + 1, work);  // tau(p^{m_p}) = m_p + 1
      v *= tau * tau;
      v *= pow(p, Real(2.0 * input.theta * input.m_p, work));
      out.is_bound = true;
      out.bound = to_prec(v, precision);
      return out;
    }
  }
  throw std::invalid_argument("unknown case");
}

}  // namespace que
