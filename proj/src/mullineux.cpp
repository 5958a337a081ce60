#include "fock/mullineux.hpp"

#include <algorithm>

#include "fock/common.hpp"

namespace fock {

namespace {

/* One e-rim strip.  The rim cell (i, j) has j between the next part and
   lam_i; the strip walks it from the top right, takes e consecutive cells
   per segment and restarts each following segment at the rightmost rim
   cell of the row below the previous segment's last cell. */
struct StripStep {
    Partition inner;
    int removed = 0;
};

StripStep strip_rim(const Partition& lam, int e) {
    int rows = static_cast<int>(lam.size());
    std::vector<std::pair<int, int>> walk; /* (row 1-based, column) */
    for (int i = 1; i <= rows; ++i) {
        int next = i < rows ? lam[i] : 0;
        for (int j = lam[i - 1]; j >= std::max(1, next); --j)
            walk.push_back({i, j});
    }

    std::vector<int> removed(rows, 0);
    StripStep out;
    size_t pos = 0;
    while (pos < walk.size()) {
        int take = std::min<int>(e, static_cast<int>(walk.size() - pos));
        int last_row = walk[pos + take - 1].first;
        for (int t = 0; t < take; ++t) ++removed[walk[pos + t].first - 1];
        out.removed += take;
        pos += take;
        while (pos < walk.size() && walk[pos].first <= last_row) ++pos;
    }

    for (int i = 0; i < rows; ++i)
        if (int rest = lam[i] - removed[i]; rest > 0) out.inner.push_back(rest);
    ensure(is_partition(out.inner), "rim strip left a non-partition");
    return out;
}

/* Inverse of one strip: the unique partition with `rows` rows whose e-rim
   strip removes `cells` cells and leaves `inner`. */
Partition unstrip_rim(const Partition& inner, int cells, int rows, int e) {
    std::optional<Partition> found;
    for (const Partition& cand : partitions_of(static_cast<int>(part_size(inner)) + cells)) {
        if (static_cast<int>(cand.size()) != rows) continue;
        bool covers = cand.size() >= inner.size();
        for (size_t i = 0; covers && i < inner.size(); ++i)
            covers = cand[i] >= inner[i];
        if (!covers) continue;
        StripStep st = strip_rim(cand, e);
        if (st.removed == cells && st.inner == inner) {
            ensure(!found.has_value(), "rim symbol reconstruction is ambiguous");
            found = cand;
        }
    }
    ensure(found.has_value(), "rim symbol reconstruction found no partition");
    return *found;
}

} // namespace

Partition m_e_crystal(const Partition& lam, int e) {
    require(e >= 2, "modulus must be at least 2");
    require(is_partition(lam), "not a partition");
    require(is_regular(lam, e), "partition is not e-regular");
    Charged out = phi_uglov(Charged{{lam}, {0}}, e);
    return out.mp[0];
}

Partition m_e_classical(const Partition& lam, int e) {
    require(e >= 2, "modulus must be at least 2");
    require(is_partition(lam), "not a partition");
    require(is_regular(lam, e), "partition is not e-regular");

    std::vector<int> cells, rows;
    Partition cur = lam;
    while (!cur.empty()) {
        rows.push_back(static_cast<int>(cur.size()));
        StripStep st = strip_rim(cur, e);
        cells.push_back(st.removed);
        cur = st.inner;
    }

    Partition image;
    for (int i = static_cast<int>(cells.size()) - 1; i >= 0; --i) {
        int eps = cells[i] % e != 0 ? 1 : 0;
        image = unstrip_rim(image, cells[i], cells[i] - rows[i] + eps, e);
    }
    return image;
}

Charged phi_uglov(const Charged& x, int rank) {
    require(rank >= 1, "rank must be positive");
    require(!x.mp.empty() && x.mp.size() == x.s.size(),
            "charge length does not match components");
    require(is_uglov(x, rank), "not an Uglov vertex");
    PeelResult pr = peel(x, rank);
    Charge ns(x.s.rbegin(), x.s.rend());
    for (int& v : ns) v = -v;
    std::vector<int> word;
    word.reserve(pr.word.size());
    for (int i : pr.word) word.push_back(imod(-i, rank));
    return apply_word(vacuum_at(ns), word, rank);
}

MullineuxResult phi(const Charged& x, int e) {
    TripleCoordinates in = beta_decompose(x, e);
    int l = static_cast<int>(x.mp.size());
    TripleCoordinates out{phi_uglov(in.e_side, e), transpose(in.sigma),
                          phi_uglov(in.l_side, l)};
    ensure(out.l_side.s == dual_charge(out.base(), e),
           "flipped bases lost the duality");

    Charged image = beta_recompose(out, e);
    Charge ns(x.s.rbegin(), x.s.rend());
    for (int& v : ns) v = -v;
    ensure(image.s == ns, "image charge is not the reversed negation");
    ensure(mp_size(image.mp) == mp_size(x.mp), "image changed size");
    return {image, in, out};
}

Partition M_e(const Partition& lam, int e) {
    require(e >= 2, "modulus must be at least 2");
    require(is_partition(lam), "not a partition");
    auto [sg, rho] = euclid_div(lam, e);
    return concat(power(transpose(sg), e), m_e_crystal(rho, e));
}

bool equal_up_to_shift(const Charged& a, const Charged& b) {
    if (a.mp != b.mp || a.s.size() != b.s.size() || a.s.empty()) return false;
    int shift = b.s[0] - a.s[0];
    for (size_t i = 0; i < a.s.size(); ++i)
        if (b.s[i] - a.s[i] != shift) return false;
    return true;
}

std::optional<Partition> f_kj(const Partition& lam, int k, int j, int d) {
    require(d >= 2, "digit base must be at least 2");
    require(j >= 0, "digit index must be nonnegative");
    require(is_partition(lam), "not a partition");

    std::vector<Partition> digits = d_adic_expand(lam, d);
    while (static_cast<int>(digits.size()) <= j) digits.push_back({});
    auto down = lower(Charged{{digits[j]}, {0}}, imod(k, d), d);
    if (!down.has_value()) return std::nullopt;
    digits[j] = down->mp[0];

    Partition out;
    long long weight = 1;
    for (size_t i = 0; i < digits.size(); ++i) {
        out = concat(out, power(digits[i], static_cast<int>(weight)));
        weight *= d;
        require(weight <= 1000000, "digit index too large");
    }
    return out;
}

Charged phi_d(const Charged& x, int e, int d, DigitMode mode) {
    require(d >= 2, "digit base must be at least 2");
    TripleCoordinates in = beta_decompose(x, e);
    int l = static_cast<int>(x.mp.size());

    Partition label;
    long long weight = 1;
    for (const Partition& digit : d_adic_expand(in.sigma, d)) {
        Partition m;
        if (mode == DigitMode::consistent) {
            m = m_e_crystal(digit, d);
        } else {
            require(is_regular(digit, e),
                    "digit not regular for the selected digitwise map in "
                    "literal-paper mode");
            m = m_e_crystal(digit, e);
        }
        label = concat(label, power(m, static_cast<int>(weight)));
        weight *= d;
        require(weight <= 1000000, "digit index too large");
    }

    return beta_recompose(
        {phi_uglov(in.e_side, e), label, phi_uglov(in.l_side, l)}, e);
}

} // namespace fock
