#ifndef FOCK_MAPS_HPP
#define FOCK_MAPS_HPP

#include "fock/iso.hpp"

namespace fock {

/// (0, e/l, 2e/l, ..., (l-1)e/l) at level e; requires l | e.
Multicharge canonical_charge(int l, int e);

/// Hu's map: replay mp's f-path with every residue shifted by +e/l.
/// Computed by conjugating the cyclic component shift through psi; the
/// direct shifted replay is exposed separately and asserted equal in
/// debug builds.
Multipartition hu_map(const Multipartition& mp, const Multicharge& charge);
Multipartition hu_map_conjugate(const Multipartition& mp, const Multicharge& charge);
Multipartition hu_map_replay(const Multipartition& mp, const Multicharge& charge);

/// The embedding of the level-ke/l crystal on k-partitions into the level-e
/// crystal on l-partitions.  mp must be Uglov for (0, e/l, ..., (k-1)e/l)
/// at level ke/l; charge must lie in the canonical orbit.
Multipartition iota(const Multipartition& mp, int k, const Multicharge& charge);
Multipartition iota_repeat(const Multipartition& mp, int k, const Multicharge& charge);
Multipartition iota_replay(const Multipartition& mp, int k, const Multicharge& charge);

/// l divided by the orbit size of mp under the cyclic component shift.
int r_value(const Multipartition& mp);

/// Number of simple summands of the restricted module labelled by mp.
int split_count(const Multipartition& mp, const Multicharge& charge);

/// True iff the canonical-charge image of mp is a (l/k)-fold repetition of
/// its first k components.
bool is_in_iota_image(const Multipartition& mp, int k, const Multicharge& charge);

/// l = 2 only: the restriction of the simple labelled by mp (at charge
/// (0, e/2 + N e)) splits in two.
bool is_divided_bipartition(const Multipartition& mp, int N, int e);

} // namespace fock

#endif
