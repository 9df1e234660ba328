#include "mwc/trace.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwc {

bool BestClique::maybe_adopt(Clique candidate) {
    if (candidate.weight <= clique.weight) return false;
    clique = std::move(candidate);
    return true;
}

Clique reconstruct(const ReductionTrace& trace, const Clique& kernel_clique) {
    std::vector<VertexId> members = kernel_clique.members;
    auto has = [&](VertexId v) {
        return std::find(members.begin(), members.end(), v) != members.end();
    };
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        switch (it->kind) {
        case ReductionEvent::Kind::twin_contracted:
            if (has(it->a)) members.push_back(it->b);
            break;
        case ReductionEvent::Kind::weight_transferred:
            if (has(it->a) && !has(it->b)) members.push_back(it->b);
            break;
        default:
            break;
        }
    }
    std::sort(members.begin(), members.end());
    return Clique{std::move(members), kernel_clique.weight};
}

Clique reconstruct(const ReductionTrace& trace, const Clique& kernel_clique,
                   const WeightedGraph& kernel) {
    if (!kernel.validate_clique(kernel_clique))
        throw std::invalid_argument("reconstruct: clique is not valid in the kernel");
    return reconstruct(trace, kernel_clique);
}

} // namespace mwc
