#pragma once

#include "fock/heisenberg.hpp"

namespace fock {

/* The three commuting crystals factor every vertex uniquely into a rank-e
   lowering word, a Heisenberg label and a dotted lowering word over the
   vacuum at a base charge in the fundamental domain.  The two words are
   stored as the vertices they reach from their vacua: words are not
   unique, vertices are, so coordinate equality is plain equality. */
struct TripleCoordinates {
    Charged e_side;  /* level-l vertex at the base charge; peels to the vacuum */
    Partition sigma;
    Charged l_side;  /* level-e vertex at the dual base; dual engine peels it
                        to the dual vacuum */
    bool operator==(const TripleCoordinates&) const = default;

    const Charge& base() const { return e_side.s; }
    const Charge& dual_base() const { return l_side.s; }
};

/* Total on every vertex; |x| = |e_side| + e|sigma| + |l_side|.  Any failure
   to reach coordinates is a convention bug, never bad input. */
TripleCoordinates beta_decompose(const Charged& x, int e);

/* Inverse of beta_decompose; rejects coordinates violating the invariants
   (base charge in the domain, matching dual base, sides peeling to their
   vacua) with an error naming the failed invariant. */
Charged beta_recompose(const TripleCoordinates& c, int e);

} // namespace fock
