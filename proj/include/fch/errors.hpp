#ifndef FCH_ERRORS_HPP
#define FCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fch {

/** Raised when a computation leaves the finite range (blow-up of a time
 *  integration, divergence of an iteration). Distinct from argument
 *  validation errors so the CLI can map it to its own exit code. */
class NumericalFailure : public std::runtime_error {
  public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fch

#endif
