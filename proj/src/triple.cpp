#include "fock/triple.hpp"

#include "fock/common.hpp"

namespace fock {

TripleCoordinates beta_decompose(const Charged& x, int e) {
    require(e >= 2, "modulus must be at least 2");
    require(!x.mp.empty() && x.mp.size() == x.s.size(),
            "charge length does not match components");
    int l = static_cast<int>(x.mp.size());

    PeelResult pe = peel(x, e);
    if (l == 1) {
        /* Level 1 is the Euclid splitting: the totally periodic highest
           weight part is sigma^e and the lowering word rebuilds the
           e-regular remainder over the empty partition. */
        auto [sg, rho] = euclid_div(x.mp[0], e);
        return {Charged{{rho}, x.s}, sg, vacuum_at(dual_charge(x.s, e))};
    }

    PeelResult pd = dotted_peel(pe.hw, e);
    auto sg = extract_sigma(pd.hw, e);
    ensure(sg.has_value(), "doubly highest weight vertex is not periodic");
    const Charge& r = pd.hw.s;
    ensure(in_A(r, e), "decomposition base left the fundamental domain");

    /* No size additivity ties the primal vertex to l_side: dotted letters
       are dual boxes and grow the primal side by varying amounts.  The
       identities that do hold are checked here. */
    ensure(mp_size(pd.hw.mp) == e * part_size(*sg),
           "doubly highest weight size is not e times the label");
    ensure(mp_size(x.mp) ==
               static_cast<long long>(pe.word.size()) + mp_size(pe.hw.mp),
           "plain letters must add one box each");
    return {apply_word(vacuum_at(r), pe.word, e), *sg,
            apply_word(vacuum_at(dual_charge(r, e)), pd.word, l)};
}

Charged beta_recompose(const TripleCoordinates& c, int e) {
    require(e >= 2, "modulus must be at least 2");
    require(!c.e_side.mp.empty() && c.e_side.mp.size() == c.e_side.s.size() &&
                c.l_side.mp.size() == c.l_side.s.size(),
            "charge length does not match components");
    require(is_partition(c.sigma), "sigma is not a partition");
    int l = static_cast<int>(c.e_side.mp.size());
    const Charge& r = c.e_side.s;
    require(in_A(r, e), "base charge not in fundamental domain");
    require(c.l_side.s == dual_charge(r, e),
            "dual base does not match the base charge");
    require(static_cast<int>(c.l_side.mp.size()) == e,
            "l side must have e components");

    PeelResult pe = peel(c.e_side, e);
    require(mp_size(pe.hw.mp) == 0, "e side does not peel to the vacuum");

    if (l == 1) {
        require(mp_size(c.l_side.mp) == 0,
                "l side must be the dual vacuum at level one");
        return {{concat(power(c.sigma, e), c.e_side.mp[0])}, r};
    }

    PeelResult pl = peel(c.l_side, l);
    require(mp_size(pl.hw.mp) == 0, "l side does not peel to the dual vacuum");

    Charged x1 = apply_word(insert_sigma(r, c.sigma, e), pe.word, e);
    Charged y1 = apply_word(k_map(x1, e), pl.word, l);
    return kdot_map(y1, l);
}

} // namespace fock
