#ifndef QUE_CONSTANTS_HPP
#define QUE_CONSTANTS_HPP

#include <string>
#include <vector>

#include "que/real.hpp"

namespace que {

struct NamedConstant {
  std::string name;
  std::string provenance;
  Real value;       // 50-digit evaluation
  bool computed = false;  // true when produced by a solver rather than a closed form
};

// Registry of the headline exponents and optimization values.
std::vector<NamedConstant> named_constants();

}  // namespace que

#endif
