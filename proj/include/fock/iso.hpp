#ifndef FOCK_ISO_HPP
#define FOCK_ISO_HPP

#include <vector>

#include "fock/crystal.hpp"

namespace fock {

/// The residue sequence (i_1,...,i_n) of mp: f_{i_1} ... f_{i_n}(empty) = mp.
/// Throws domain_error if mp is not Uglov for the charge.
std::vector<int> extract_path(const Multipartition& mp, const Multicharge& charge);

/// Applies f_{i_n} first through f_{i_1} last to the empty multipartition.
/// Throws domain_error if some step is undefined.
Multipartition replay(const std::vector<int>& path, const Multicharge& charge);

/// The crystal isomorphism between Uglov sets of orbit-equivalent charges,
/// computed by path replay.
Multipartition psi(const Multipartition& mp, const Multicharge& from,
                   const Multicharge& to);

/// Psi from v to tau.v is the pure component rotation.
Multipartition tau_shortcut(const Multipartition& mp);

} // namespace fock

#endif
