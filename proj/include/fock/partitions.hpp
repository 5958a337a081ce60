#pragma once

#include <string>
#include <vector>

#include "fock/common.hpp"

namespace fock {

/* A partition is stored as its weakly decreasing list of positive parts;
   no trailing zeros are ever kept, so equal values compare equal.  All
   values here are immutable in spirit: every operation returns a fresh
   object and never mutates its arguments. */
using Partition = std::vector<int>;
using Multipartition = std::vector<Partition>;
using Charge = std::vector<int>;

struct Charged {
    Multipartition mp;
    Charge s;
    bool operator==(const Charged&) const = default;
};

inline Charged vacuum_at(const Charge& s) {
    return {Multipartition(s.size()), s};
}

/* Box of a Young diagram: row a >= 1, column b >= 1, component j in 1..l. */
struct Box {
    int a = 1;
    int b = 1;
    int j = 1;
    bool operator==(const Box&) const = default;
};

inline long long part_size(const Partition& p) {
    long long n = 0;
    for (int x : p) n += x;
    return n;
}

inline long long mp_size(const Multipartition& mp) {
    long long n = 0;
    for (const auto& p : mp) n += part_size(p);
    return n;
}

/* Sorts descending and drops non-positive entries; the canonical form. */
Partition normalized(Partition parts);

bool is_partition(const Partition& p);

Partition transpose(const Partition& p);

/* Componentwise conjugate with negated charge; component order is kept. */
Charged charged_transpose(const Charged& x);

/* Multiset union of parts. */
Partition concat(const Partition& a, const Partition& b);

/* Each part repeated e times (multiplicities scaled by e). */
Partition power(const Partition& sigma, int e);

/* Unique splitting lambda = sigma^e |_| rho with rho e-regular: each part
   multiplicity m contributes floor(m/e) to sigma and m mod e to rho. */
std::pair<Partition, Partition> euclid_div(const Partition& lambda, int e);

/* True iff no part occurs d or more times. */
bool is_regular(const Partition& p, int d);

/* Digits lambda_(0), lambda_(1), ... with lambda = |_|_i (lambda_(i))^(d^i),
   every digit d-regular; digit i takes the i-th base-d digit of each part
   multiplicity.  Always returns at least one digit. */
std::vector<Partition> d_adic_expand(const Partition& lambda, int d);

/* Beta-numbers b_u = lambda_u + s - u + 1 for u = 1..depth, strictly
   decreasing; values below the window are implicitly the full co-finite
   tail s - depth, s - depth - 1, ... */
std::vector<int> beta_numbers(const Partition& p, int s, int depth);

/* Inverse of the abacus reading: `beads` lists, strictly decreasing, every
   bead with value >= floor; below `floor` the abacus is full.  Returns the
   charged partition this bead set encodes. */
std::pair<Partition, int> from_beta(int floor, const std::vector<int>& beads);

/* Text grammar.  partition = "-" | part ("." part)*, part = INT ("^" INT)?;
   multipartition = partition ("|" partition)*; charge = INT ("," INT)*.
   Parts must already be listed weakly decreasing; errors carry the
   character position. */
Partition parse_partition(const std::string& text);
Multipartition parse_multipartition(const std::string& text);
Charge parse_charge(const std::string& text);

std::string format_partition(const Partition& p);
std::string format_multipartition(const Multipartition& mp);
std::string format_charge(const Charge& s);

} // namespace fock
