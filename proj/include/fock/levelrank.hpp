#pragma once

#include <optional>
#include <vector>

#include "fock/crystal.hpp"
#include "fock/partitions.hpp"

namespace fock {

/* Level-rank duality: a level-l charged multipartition at modulus e maps to a
   level-e one at modulus l by re-reading its abacus beads through a global
   wedge index.  Uglov's indexing formula is not reproduced in the sources and
   sign/offset/ordering conventions vary across the literature, so the codec
   fields below span the finite set of candidate conventions; the shipped one
   is the unique behavior passing all anchors (see the convention-search test
   in tests/test_levelrank.cpp). */
struct Codec {
    int off;        // bead value b = lambda_u + s - u + off
    bool in_val;    // wedge index k0 = c0 + e*d0; otherwise k0 = d0 + l*c0
    bool in_rev;    // component index d = l+1-j instead of j
    int cb_in;      // lowest bead value of the residue window
    bool out_val;   // same three knobs on the dual side, moduli swapped
    bool out_rev;
    int cb_out;
    int twist;      // transpose-reverse-negate: 0 none, 1 input, 2 output, 3 both

    Codec mirror() const;
    bool operator==(const Codec&) const = default;
};

Codec frozen_codec();

// componentwise transpose, components reversed, charge negate-reversed
Charged twist_mp(const Charged& x);

// |lambda,s> (l components, modulus e) -> |lambda.,s.> (e components, modulus l)
Charged k_map(const Charged& x, int e, const Codec& cd);
Charged k_map(const Charged& x, int e);
// inverse direction: l is the number of components of the result
Charged kdot_map(const Charged& y, int l, const Codec& cd);
Charged kdot_map(const Charged& y, int l);

// charge of k_map|empty,r> for r in the fundamental domain A(s)
Charge dual_charge(const Charge& r, int e);

// theta(s) = (e-s_1+s_l, s_1-s_2, ..., s_{l-1}-s_l) and its inverse
std::vector<long long> theta(const Charge& s, int e);
Charge theta_inv(const std::vector<long long>& a, int e, long long s_total);

/* sl_l-crystal operators on the primal side, defined by conjugating the
   rank-l engine with the duality. */
std::optional<Charged> dotted_lower(const Charged& x, int j, int e);
std::optional<Charged> dotted_raise(const Charged& x, int j, int e);
PeelResult dotted_peel(const Charged& x, int e);
bool is_dotted_hw(const Charged& x, int e);

} // namespace fock
