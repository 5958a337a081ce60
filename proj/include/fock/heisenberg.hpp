#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fock/levelrank.hpp"
#include "fock/partitions.hpp"

namespace fock {

/* The Heisenberg layer: doubly highest weight vertices (highest weight for
   both the rank-e crystal and its dotted dual) are exactly the vertices
   a_sigma|empty,r>, and sigma is read off the flattened abacus by peeling
   e-periods.  Everything here works on the flat abacus: the beads of all
   components merged into one strip, ordered by value with ties won by the
   smaller component index. */

struct FlatBead {
    int value = 0;
    int comp = 0; /* 0-based component index */
    bool operator==(const FlatBead&) const = default;
};

struct FlatAbacus {
    std::vector<FlatBead> beads;  /* value descending, comp ascending on ties */
    std::vector<int> floors;      /* per component: lowest value in the window */
    Charge s;
};

/* Reads `depth` beads per component.  Below floors[j] component j is full,
   so any question whose answer stays above max(floors) + e is decided. */
FlatAbacus flatten(const Charged& x, int depth);

struct PeriodDecomposition {
    /* periods[k] holds the e beads with values v_k, v_k - 1, ..., v_k - e + 1
       taken by the k-th greedy step; tops[k] = v_k. */
    std::vector<std::vector<FlatBead>> periods;
    std::vector<int> tops;
};

/* Greedy period peeling: repeatedly take the bead of maximal (value, then
   smallest component) and, walking the value down e - 1 more steps, the
   maximal unused bead at each value.  Stops once a period could dip below
   the reliable window.  Empty optional: some step found no bead, the
   abacus is not totally periodic and the vertex is not doubly highest
   weight. */
std::optional<PeriodDecomposition> peel_periods(const FlatAbacus& a, int e);
std::optional<PeriodDecomposition> peel_periods(const Charged& x, int e);

bool is_doubly_hw(const Charged& x, int e);

/* Highest weight for the rank-e crystal with an empty Heisenberg label;
   these are the vertices whose decomposition is a pure dotted word, the
   labels of the finite-dimensional irreducibles. */
bool is_cuspidal(const Charged& x, int e);

/* One charge orbit needs its sigma labels transposed for the period
   machinery to match the worked decompositions; the rule is keyed by
   (e, number of components, residues of s mod e).  See the orientation
   sweep in tests/test_heisenberg.cpp. */
bool orient_transpose(const Charge& s, int e);

/* Charge-general engine.  insert_sigma shifts the k-th vacuum period up by
   sigma_k and rereads the beads; extract_sigma diffs period tops against
   the vacuum baseline.  No fundamental-domain requirement: wall-crossing
   transports sigma across arbitrary charges of an orbit.  extract_sigma
   returns an empty optional when the abacus is not totally periodic or the
   tops do not spell a partition of size |x|/e. */
Charged insert_sigma(const Charge& s, const Partition& sigma, int e);
std::optional<Partition> extract_sigma(const Charged& x, int e);

/* a_sigma|empty,r> for r in the fundamental domain A(s); level 1 collapses
   to sigma^e. */
Charged a_sigma(const Charge& r, const Partition& sigma, int e);

/* Inverse of a_sigma on doubly highest weight vertices: recovers (sigma, r)
   with x = a_sigma|empty,r>. */
std::pair<Partition, Charge> sigma_extract(const Charged& x, int e);

} // namespace fock
