#pragma once

#include <optional>

#include "fock/triple.hpp"

namespace fock {

/* Level-1 Mullineux map, crystal form: peel to the empty partition, then
   lower again with every residue negated.  Charge independent. */
Partition m_e_crystal(const Partition& lam, int e);

/* Level-1 Mullineux map, symbol form: iterated e-rim stripping records the
   Mullineux symbol, the row counts are transformed, and the image is
   rebuilt innermost strip first.  Kept as an independent oracle for
   m_e_crystal; the two must agree everywhere. */
Partition m_e_classical(const Partition& lam, int e);

/* Charge flip on the component of the vacuum: peel, negate every residue,
   rebuild over the vacuum at the reversed negated charge. */
Charged phi_uglov(const Charged& x, int rank);

struct MullineuxResult {
    Charged image;
    TripleCoordinates coordinates_in;
    TripleCoordinates coordinates_out;
    bool operator==(const MullineuxResult&) const = default;
};

/* The involution on all vertices: flip both word coordinates with
   phi_uglov and transpose the Heisenberg label. */
MullineuxResult phi(const Charged& x, int e);

/* Extension of the Mullineux map to every partition:
   sigma^e |_| rho with rho e-regular goes to (sigma^tr)^e |_| m_e(rho). */
Partition M_e(const Partition& lam, int e);

/* Same multipartition, charges differing by a constant shift. */
bool equal_up_to_shift(const Charged& a, const Charged& b);

/* Digit operator: lowers residue k on the j-th d-adic digit, leaving the
   other digits alone.  Empty optional when the digit's lowering vanishes. */
std::optional<Partition> f_kj(const Partition& lam, int k, int j, int d);

/* The digitwise map applied to the Heisenberg label: "consistent" uses m_d
   on the d-adic digits (always defined), "literal" applies m_e to them and
   rejects digits that are not e-regular. */
enum class DigitMode { consistent, literal };
Charged phi_d(const Charged& x, int e, int d, DigitMode mode);

} // namespace fock
