#include "fock/levelrank.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fock/common.hpp"

namespace fock {

namespace {

/* Bead values b_u = lambda_u + s - u + off for u = 1..depth, descending. */
std::vector<long long> bead_window(const Partition& p, int s, int depth, int off) {
    std::vector<long long> out;
    out.reserve(depth);
    for (int u = 1; u <= depth; ++u) {
        long long pu = u - 1 < static_cast<int>(p.size()) ? p[u - 1] : 0;
        out.push_back(pu + s - u + off);
    }
    return out;
}

/* Inverse: beads >= floor listed descending, everything below present. */
std::pair<Partition, int> from_window(long long floor, const std::vector<long long>& beads,
                                      int off) {
    long long t = floor + static_cast<long long>(beads.size()) - off;
    Partition parts;
    for (size_t u = 1; u <= beads.size(); ++u) {
        long long lam = beads[u - 1] - t + static_cast<long long>(u) - off;
        ensure(lam >= 0, "bead window is not a partition");
        if (lam > 0) parts.push_back(static_cast<int>(lam));
    }
    return {parts, static_cast<int>(t)};
}

long long encode(long long b, int d, int e, int l, const Codec& cd) {
    long long c0 = imod(b - cd.cb_in, e);
    long long m = idiv(b - cd.cb_in - c0, e);
    long long d0 = d - 1;
    long long k0 = cd.in_val ? c0 + e * d0 : d0 + l * c0;
    return k0 + static_cast<long long>(e) * l * m;
}

std::pair<long long, int> decode(long long k, int e, int l, const Codec& cd) {
    long long t0 = imod(k, static_cast<long long>(e) * l);
    long long m = idiv(k - t0, static_cast<long long>(e) * l);
    long long c0, d0;
    if (cd.out_val) {
        c0 = t0 % l;
        d0 = t0 / l;
    } else {
        d0 = t0 % e;
        c0 = t0 / e;
    }
    return {cd.cb_out + c0 + l * m, static_cast<int>(d0) + 1};
}

} // namespace

Codec Codec::mirror() const {
    int tw = twist == 1 ? 2 : twist == 2 ? 1 : twist;
    return {off, out_val, out_rev, cb_out, in_val, in_rev, cb_in, tw};
}

Codec frozen_codec() {
    return {0, true, true, 0, false, true, 0, 1};
}

Charged twist_mp(const Charged& x) {
    int l = static_cast<int>(x.mp.size());
    Charged out;
    out.mp.reserve(l);
    out.s.reserve(l);
    for (int j = 0; j < l; ++j) {
        out.mp.push_back(transpose(x.mp[l - 1 - j]));
        out.s.push_back(-x.s[l - 1 - j]);
    }
    return out;
}

Charged k_map(const Charged& x, int e, const Codec& cd) {
    require(e >= 1, "rank must be >= 1");
    require(!x.mp.empty() && x.mp.size() == x.s.size(),
            "multipartition and charge must have equal positive length");
    Charged in = cd.twist == 1 || cd.twist == 3 ? twist_mp(x) : x;
    int l = static_cast<int>(in.mp.size());
    auto [smin, smax] = std::minmax_element(in.s.begin(), in.s.end());
    int spread = *smax - *smin;
    int depth = std::max<long long>(12, mp_size(in.mp) + spread + 2LL * e * l + 10);

    std::set<long long> wedge;
    long long floor_k = 0;
    for (int j = 1; j <= l; ++j) {
        int d = cd.in_rev ? l + 1 - j : j;
        auto beads = bead_window(in.mp[j - 1], in.s[j - 1], depth, cd.off);
        for (long long b : beads) wedge.insert(encode(b, d, e, l, cd));
        long long kmin = encode(beads.back(), d, e, l, cd);
        if (j == 1 || kmin > floor_k) floor_k = kmin;
    }
    floor_k += static_cast<long long>(e) * l + 1;
    for (long long t = floor_k; t < floor_k + static_cast<long long>(e) * l; ++t)
        ensure(wedge.count(t) != 0, "shallow window");

    std::vector<std::vector<long long>> comp(e);
    for (long long k : wedge) {
        if (k < floor_k) continue;
        auto [b, dd] = decode(k, e, l, cd);
        comp[dd - 1].push_back(b);
    }
    std::vector<long long> comp_floor(e, 0);
    std::vector<bool> seen(e, false);
    for (long long t = floor_k - static_cast<long long>(e) * l; t < floor_k; ++t) {
        auto [b, dd] = decode(t, e, l, cd);
        if (!seen[dd - 1] || b > comp_floor[dd - 1]) comp_floor[dd - 1] = b;
        seen[dd - 1] = true;
    }
    Charged out;
    for (int dd = 0; dd < e; ++dd) {
        ensure(seen[dd], "shallow window");
        long long fl = comp_floor[dd] + 1;
        std::vector<long long> beads;
        for (long long b : comp[dd])
            if (b >= fl) beads.push_back(b);
        std::sort(beads.rbegin(), beads.rend());
        auto [p, t] = from_window(fl, beads, cd.off);
        out.mp.push_back(std::move(p));
        out.s.push_back(t);
    }
    if (cd.out_rev) {
        std::reverse(out.mp.begin(), out.mp.end());
        std::reverse(out.s.begin(), out.s.end());
    }
    if (cd.twist == 2 || cd.twist == 3) out = twist_mp(out);
    return out;
}

Charged k_map(const Charged& x, int e) { return k_map(x, e, frozen_codec()); }

Charged kdot_map(const Charged& y, int l, const Codec& cd) {
    return k_map(y, l, cd.mirror());
}

Charged kdot_map(const Charged& y, int l) { return kdot_map(y, l, frozen_codec()); }

Charge dual_charge(const Charge& r, int e) {
    require(in_A(r, e), "base charge not in fundamental domain");
    Charged vac{Multipartition(r.size()), r};
    Charged dual = k_map(vac, e);
    ensure(mp_size(dual.mp) == 0, "duality does not fix the vacuum");
    return dual.s;
}

std::vector<long long> theta(const Charge& s, int e) {
    require(!s.empty(), "charge must be nonempty");
    int l = static_cast<int>(s.size());
    std::vector<long long> a;
    a.reserve(l);
    a.push_back(static_cast<long long>(e) - s[0] + s[l - 1]);
    for (int i = 1; i < l; ++i) a.push_back(static_cast<long long>(s[i - 1]) - s[i]);
    return a;
}

Charge theta_inv(const std::vector<long long>& a, int e, long long s_total) {
    require(!a.empty(), "tuple must be nonempty");
    int l = static_cast<int>(a.size());
    long long sum = 0;
    for (long long v : a) sum += v;
    require(sum == e, "components do not sum to the rank");
    long long numer = s_total;
    for (int j = 1; j < l; ++j) numer -= static_cast<long long>(j) * a[j];
    require(imod(numer, l) == 0, "no integral charge with this total");
    long long base = numer / l;
    Charge s(l);
    long long suffix = 0;
    for (int i = l - 1; i >= 0; --i) {
        s[i] = static_cast<int>(base + suffix);
        suffix += a[i];
    }
    return s;
}

std::optional<Charged> dotted_lower(const Charged& x, int j, int e) {
    int l = static_cast<int>(x.mp.size());
    auto down = lower(k_map(x, e), j, l);
    if (!down) return std::nullopt;
    return kdot_map(*down, l);
}

std::optional<Charged> dotted_raise(const Charged& x, int j, int e) {
    int l = static_cast<int>(x.mp.size());
    auto up = raise(k_map(x, e), j, l);
    if (!up) return std::nullopt;
    return kdot_map(*up, l);
}

PeelResult dotted_peel(const Charged& x, int e) {
    int l = static_cast<int>(x.mp.size());
    PeelResult res = peel(k_map(x, e), l);
    res.hw = kdot_map(res.hw, l);
    return res;
}

bool is_dotted_hw(const Charged& x, int e) {
    return is_hw(k_map(x, e), static_cast<int>(x.mp.size()));
}

} // namespace fock
