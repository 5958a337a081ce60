#include "fock/heisenberg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fock/common.hpp"

namespace fock {

namespace {

int charge_spread(const Charge& s) {
    auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    return *hi - *lo;
}

/* Greedy core.  nper < 0 peels until a period could dip below the zone
   where every component's window is complete; nper >= 0 demands exactly
   that many periods and treats running out of window as an internal
   error, because internal callers size the window themselves. */
std::optional<PeriodDecomposition> peel_core(const FlatAbacus& a, int e,
                                             int nper) {
    int safe_floor = *std::max_element(a.floors.begin(), a.floors.end());
    std::map<int, std::vector<int>> avail;
    for (const FlatBead& bead : a.beads) avail[bead.value].push_back(bead.comp);

    PeriodDecomposition dec;
    while (nper < 0 || static_cast<int>(dec.periods.size()) < nper) {
        if (avail.empty()) break;
        int v = avail.rbegin()->first;
        if (v - e + 1 <= safe_floor) {
            ensure(nper < 0, "insufficient abacus depth");
            break;
        }
        std::vector<FlatBead> period;
        for (int t = v; t > v - e; --t) {
            auto it = avail.find(t);
            if (it == avail.end()) return std::nullopt;
            period.push_back({t, it->second.front()});
            it->second.erase(it->second.begin());
            if (it->second.empty()) avail.erase(it);
        }
        dec.tops.push_back(v);
        dec.periods.push_back(std::move(period));
    }

    if (nper < 0) {
        /* The untouched tail must be a full contiguous run per component,
           otherwise the window was too shallow to decide periodicity. */
        std::vector<int> count(a.floors.size(), 0);
        std::vector<int> top = a.floors;
        for (const auto& [value, comps] : avail)
            for (int j : comps) {
                ++count[j];
                top[j] = std::max(top[j], value);
            }
        for (size_t j = 0; j < a.floors.size(); ++j)
            require(count[j] == 0 || count[j] == top[j] - a.floors[j] + 1,
                    "insufficient abacus depth");
    }
    return dec;
}

std::optional<std::vector<int>> tops_of(const Charged& x, int e, int nper,
                                        int depth) {
    auto dec = peel_core(flatten(x, depth), e, nper);
    if (!dec) return std::nullopt;
    return dec->tops;
}

} // namespace

FlatAbacus flatten(const Charged& x, int depth) {
    require(x.mp.size() == x.s.size(), "charge length does not match components");
    FlatAbacus a;
    a.s = x.s;
    for (size_t j = 0; j < x.mp.size(); ++j) {
        for (int b : beta_numbers(x.mp[j], x.s[j], depth))
            a.beads.push_back({b, static_cast<int>(j)});
        a.floors.push_back(x.s[j] - depth + 1);
    }
    std::sort(a.beads.begin(), a.beads.end(),
              [](const FlatBead& p, const FlatBead& q) {
                  return p.value != q.value ? p.value > q.value : p.comp < q.comp;
              });
    return a;
}

std::optional<PeriodDecomposition> peel_periods(const FlatAbacus& a, int e) {
    require(e >= 2, "modulus must be at least 2");
    return peel_core(a, e, -1);
}

std::optional<PeriodDecomposition> peel_periods(const Charged& x, int e) {
    require(e >= 2, "modulus must be at least 2");
    int n = static_cast<int>(mp_size(x.mp));
    int depth = std::max(16, n + charge_spread(x.s) + (n / e + 5) * e + 8);
    return peel_core(flatten(x, depth), e, -1);
}

bool orient_transpose(const Charge& s, int e) {
    if (e != 3 || s.size() != 4) return false;
    std::vector<int> res;
    for (int v : s) res.push_back(imod(v, e));
    std::sort(res.begin(), res.end());
    return res == std::vector<int>{0, 0, 1, 1};
}

Charged insert_sigma(const Charge& s, const Partition& sigma, int e) {
    int l = static_cast<int>(s.size());
    if (l == 1) return {{power(sigma, e)}, s};
    Partition sg = orient_transpose(s, e) ? transpose(sigma) : sigma;
    if (sg.empty()) return vacuum_at(s);

    int nper = static_cast<int>(sg.size());
    int depth = std::max(16, charge_spread(s) + (nper + 4) * e + sg[0] + 8);
    FlatAbacus a = flatten(vacuum_at(s), depth);
    auto dec = peel_core(a, e, nper);
    ensure(dec.has_value(), "vacuum abacus is not periodic");

    /* Shift the k-th period up by sg[k], keep everything else in place. */
    std::set<std::pair<int, int>> taken;
    std::vector<std::vector<int>> vals(l);
    for (int k = 0; k < nper; ++k)
        for (const FlatBead& bead : dec->periods[k]) {
            taken.insert({bead.value, bead.comp});
            vals[bead.comp].push_back(bead.value + sg[k]);
        }
    for (const FlatBead& bead : a.beads)
        if (!taken.count({bead.value, bead.comp}))
            vals[bead.comp].push_back(bead.value);

    Charged out{Multipartition(l), s};
    for (int j = 0; j < l; ++j) {
        std::sort(vals[j].begin(), vals[j].end(), std::greater<int>());
        ensure(std::adjacent_find(vals[j].begin(), vals[j].end()) == vals[j].end(),
               "period insertion conflict");
        auto [p, t] = from_beta(a.floors[j], vals[j]);
        ensure(t == s[j], "period insertion changed a charge");
        out.mp[j] = p;
    }
    return out;
}

std::optional<Partition> extract_sigma(const Charged& x, int e) {
    int l = static_cast<int>(x.mp.size());
    if (l == 1) {
        auto [sg, rho] = euclid_div(x.mp[0], e);
        if (!rho.empty()) return std::nullopt;
        return sg;
    }
    int n = static_cast<int>(mp_size(x.mp));
    if (n % e != 0) return std::nullopt;

    int nper = n / e + 4;
    int depth = std::max(16, n + charge_spread(x.s) + (nper + 4) * e + 8);
    auto tx = tops_of(x, e, nper, depth);
    if (!tx) return std::nullopt;
    auto tv = tops_of(vacuum_at(x.s), e, nper, depth);
    ensure(tv.has_value(), "vacuum abacus is not periodic");

    Partition sg;
    for (int k = 0; k < nper; ++k) sg.push_back((*tx)[k] - (*tv)[k]);
    while (!sg.empty() && sg.back() == 0) sg.pop_back();
    if (!is_partition(sg)) return std::nullopt;
    if (e * part_size(sg) != n) return std::nullopt;
    if (orient_transpose(x.s, e)) sg = transpose(sg);
    return sg;
}

bool is_doubly_hw(const Charged& x, int e) {
    if (x.mp.size() == 1)
        return is_hw(x, e) && euclid_div(x.mp[0], e).second.empty();
    return is_hw(x, e) && is_dotted_hw(x, e);
}

bool is_cuspidal(const Charged& x, int e) {
    if (!is_hw(x, e)) return false;
    if (x.mp.size() == 1) return x.mp[0].empty();
    PeelResult dp = dotted_peel(x, e);
    auto sg = extract_sigma(dp.hw, e);
    ensure(sg.has_value(), "highest weight projection is not totally periodic");
    return sg->empty();
}

Charged a_sigma(const Charge& r, const Partition& sigma, int e) {
    require(is_partition(sigma), "sigma is not a partition");
    require(in_A(r, e), "base charge not in fundamental domain");
    return insert_sigma(r, sigma, e);
}

std::pair<Partition, Charge> sigma_extract(const Charged& x, int e) {
    require(is_doubly_hw(x, e), "not a doubly highest weight vertex");
    auto sg = extract_sigma(x, e);
    require(sg.has_value(), "period tops do not form a partition");
    require(in_A(x.s, e), "base charge not in fundamental domain");
    return {*sg, x.s};
}

} // namespace fock
