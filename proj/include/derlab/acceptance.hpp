#ifndef DERLAB_ACCEPTANCE_HPP
#define DERLAB_ACCEPTANCE_HPP

#include <ostream>

namespace derlab {
namespace acceptance {

/// Runs the seven-point reproduction suite, printing one pass/fail line per
/// criterion. Returns the number of failed criteria (0 = all pass).
int run(std::ostream& os);

}  // namespace acceptance
}  // namespace derlab

#endif
