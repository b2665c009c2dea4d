#pragma once

#include <string>

#include "cokl/ferrers.hpp"
#include "cokl/kappa.hpp"
#include "cokl/witness.hpp"

namespace cokl {

/// Explicit (k,l)-colouring read off the Ferrers diagram representation:
/// the columns taller than k become cliques, the top k rows of what is left
/// become independent sets.
template <TreeLike Tree>
KLColouring extract_colouring(const Tree& t, std::size_t k, std::size_t l) {
    if (!is_kl_colourable(kappa_hat(t), k, l))
        throw precondition_error("graph is not (" + std::to_string(k) + "," + std::to_string(l) + ")-colourable");
    return read_colouring(build_ferrers(t), k, l);
}

} // namespace cokl
