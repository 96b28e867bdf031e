#include "smoothlab/errors.hpp"

namespace smoothlab {

void fail_validation(const std::string& what) { throw ValidationError(what); }

void fail_numerical(const std::string& what) { throw NumericalError(what); }

}  // namespace smoothlab
