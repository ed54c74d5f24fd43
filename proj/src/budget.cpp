#include "cogcap/budget.hpp"

#include "cogcap/errors.hpp"

namespace cogcap {

void validate(const Budget& b) {
    if (b.restarts < 1) throw ArgumentError("budget: restarts must be >= 1");
    if (b.grid_res < 1) throw ArgumentError("budget: grid resolution must be >= 1");
    if (b.aux_card < 1) throw ArgumentError("budget: auxiliary cardinality must be >= 1");
    if (b.max_iters < 1) throw ArgumentError("budget: max_iters must be >= 1");
    if (b.max_grid_points < 1) throw ArgumentError("budget: max_grid_points must be >= 1");
}

}  // namespace cogcap
