#pragma once

#include <optional>
#include <vector>

#include "fock/partitions.hpp"

namespace fock {

/* The Kashiwara crystal on charged multipartitions, parameterized by the
   rank so the same engine drives both the rank-e structure and the dual
   rank-l structure.  Boxes carry the key b - a + s_j; the residue is that
   key mod rank. */

struct SignatureEntry {
    Box box;
    int key = 0;
    bool addable = true;
    bool operator==(const SignatureEntry&) const = default;
};

int residue(const Box& box, const Charge& s, int rank);

/* All addable and removable boxes of the given residue, sorted by key
   ascending, ties broken by component index descending.  This is the raw
   signature word; cancellation happens inside lower/raise. */
std::vector<SignatureEntry> signature(const Charged& x, int i, int rank);

/* Good-box operators.  The signature word is reduced by repeatedly
   cancelling adjacent (Removable, Addable) pairs; the lowering operator
   adds the last surviving addable box, the raising operator removes the
   first surviving removable box.  Empty optional encodes the zero vector. */
std::optional<Charged> lower(const Charged& x, int i, int rank);
std::optional<Charged> raise(const Charged& x, int i, int rank);

/* Counts of surviving addable/removable entries (phi_i and epsilon_i). */
std::pair<int, int> string_counts(const Charged& x, int i, int rank);

/* Applies lowering operators left to right; a word that dies is an
   internal error, because every caller applies words whose validity is
   guaranteed by construction. */
Charged apply_word(const Charged& x, const std::vector<int>& word, int rank);

struct PeelResult {
    Charged hw;
    /* Lowering word in application order: apply_word(hw, word) returns
       the peeled vertex. */
    std::vector<int> word;
};

/* Raises greedily, smallest residue first at each step, until every
   raising operator vanishes. */
PeelResult peel(const Charged& x, int rank);

bool is_hw(const Charged& x, int rank);
bool is_uglov(const Charged& x, int rank);

/* Fundamental-domain test: s_1 <= s_2 <= ... <= s_l <= s_1 + e. */
bool in_A(const Charge& s, int e);

/* All charges of the given length and total inside the fundamental
   domain (finitely many). */
std::vector<Charge> A_charges(int l, int e, int total);

/* Minimal lift t of s with t_i = s_i mod e and consecutive gaps >= n. */
Charge kleshchev_charge(const Charge& s, int e, int n);

struct FiniteWeight {
    std::vector<long long> box_counts; /* residue -> number of boxes */
    std::vector<int> lambda_indices;   /* s_j mod rank, in component order */
    bool operator==(const FiniteWeight&) const = default;
};

FiniteWeight finite_weight(const Charged& x, int rank);

/* Deterministic enumeration used by the graph builder and the sweeps:
   partitions largest-first-part first, multipartitions by splitting the
   total left to right, larger first-component share first. */
std::vector<Partition> partitions_of(int n);
std::vector<Multipartition> multipartitions_of(int n, int l);

struct CrystalGraph {
    Charge s;
    int rank = 2;
    std::vector<Charged> vertices; /* size ascending, enumeration order */
    struct Edge {
        int from = 0;
        int to = 0;
        int residue = 0;
        bool operator==(const Edge&) const = default;
    };
    std::vector<Edge> edges;
};

/* Vertices are every multipartition of size <= n_max at charge s; arrows
   are all defined lowering operators between them, labeled by residue. */
CrystalGraph crystal_graph(const Charge& s, int rank, int n_max);

bool charged_less(const Charged& a, const Charged& b);

} // namespace fock
