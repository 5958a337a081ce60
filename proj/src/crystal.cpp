#include "fock/crystal.hpp"

#include <algorithm>
#include <map>

namespace fock {

int residue(const Box& box, const Charge& s, int rank) {
    require(rank >= 1, "rank must be >= 1");
    require(box.j >= 1 && box.j <= static_cast<int>(s.size()), "box component out of range");
    return imod(box.b - box.a + s[box.j - 1], rank);
}

/* Enumerates every addable and removable box of one component.  Addable
   rows are u = 1..rows+1 where placing a box keeps rows weakly
   decreasing; removable rows are those strictly longer than the next. */
static void component_cells(const Partition& p, int s_j, int j,
                            std::vector<SignatureEntry>& out) {
    int rows = static_cast<int>(p.size());
    for (int u = 1; u <= rows + 1; ++u) {
        int col = (u <= rows ? p[u - 1] : 0) + 1;
        if (u > 1 && p[u - 2] < col) continue;
        out.push_back({{u, col, j}, col - u + s_j, true});
    }
    for (int u = 1; u <= rows; ++u) {
        int below = u < rows ? p[u] : 0;
        if (p[u - 1] > below)
            out.push_back({{u, p[u - 1], j}, p[u - 1] - u + s_j, false});
    }
}

std::vector<SignatureEntry> signature(const Charged& x, int i, int rank) {
    require(x.mp.size() == x.s.size(), "component/charge length mismatch");
    require(i >= 0 && i < rank, "residue out of range");
    std::vector<SignatureEntry> all;
    for (size_t j = 0; j < x.mp.size(); ++j)
        component_cells(x.mp[j], x.s[j], static_cast<int>(j) + 1, all);
    std::vector<SignatureEntry> matching;
    for (const auto& entry : all)
        if (imod(entry.key, rank) == i) matching.push_back(entry);
    std::stable_sort(matching.begin(), matching.end(),
                     [](const SignatureEntry& a, const SignatureEntry& b) {
                         if (a.key != b.key) return a.key < b.key;
                         return a.box.j > b.box.j;
                     });
    return matching;
}

static std::vector<SignatureEntry> reduced(std::vector<SignatureEntry> entries) {
    std::vector<SignatureEntry> stack;
    for (auto& entry : entries) {
        if (entry.addable && !stack.empty() && !stack.back().addable)
            stack.pop_back();
        else
            stack.push_back(entry);
    }
    return stack;
}

static Charged with_box_added(const Charged& x, const Box& box) {
    Charged out = x;
    Partition& p = out.mp[box.j - 1];
    if (box.a == static_cast<int>(p.size()) + 1)
        p.push_back(1);
    else
        p[box.a - 1] += 1;
    return out;
}

static Charged with_box_removed(const Charged& x, const Box& box) {
    Charged out = x;
    Partition& p = out.mp[box.j - 1];
    p[box.a - 1] -= 1;
    while (!p.empty() && p.back() == 0) p.pop_back();
    return out;
}

std::optional<Charged> lower(const Charged& x, int i, int rank) {
    auto surv = reduced(signature(x, i, rank));
    for (auto it = surv.rbegin(); it != surv.rend(); ++it)
        if (it->addable) return with_box_added(x, it->box);
    return std::nullopt;
}

std::optional<Charged> raise(const Charged& x, int i, int rank) {
    auto surv = reduced(signature(x, i, rank));
    for (const auto& entry : surv)
        if (!entry.addable) return with_box_removed(x, entry.box);
    return std::nullopt;
}

std::pair<int, int> string_counts(const Charged& x, int i, int rank) {
    auto surv = reduced(signature(x, i, rank));
    int addable = 0, removable = 0;
    for (const auto& entry : surv) (entry.addable ? addable : removable) += 1;
    return {addable, removable};
}

Charged apply_word(const Charged& x, const std::vector<int>& word, int rank) {
    Charged cur = x;
    for (int i : word) {
        auto next = lower(cur, i, rank);
        ensure(next.has_value(), "lowering word died mid-application");
        cur = std::move(*next);
    }
    return cur;
}

PeelResult peel(const Charged& x, int rank) {
    Charged cur = x;
    std::vector<int> raise_order;
    for (;;) {
        bool moved = false;
        for (int i = 0; i < rank && !moved; ++i) {
            if (auto up = raise(cur, i, rank)) {
                cur = std::move(*up);
                raise_order.push_back(i);
                moved = true;
            }
        }
        if (!moved) break;
    }
    std::reverse(raise_order.begin(), raise_order.end());
    return {std::move(cur), std::move(raise_order)};
}

bool is_hw(const Charged& x, int rank) {
    for (int i = 0; i < rank; ++i)
        if (raise(x, i, rank)) return false;
    return true;
}

bool is_uglov(const Charged& x, int rank) {
    return mp_size(peel(x, rank).hw.mp) == 0;
}

bool in_A(const Charge& s, int e) {
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] > s[i + 1]) return false;
    return s.empty() || s.back() <= s.front() + e;
}

std::vector<Charge> A_charges(int l, int e, int total) {
    std::vector<Charge> out;
    Charge cur(l);
    /* s_1 ranges over a window wide enough to hit every member: the mean
       lies within e of s_1 for any in-domain charge. */
    int lo = (total - (l - 1) * e) / l - e - 2;
    int hi = total / l + e + 2;
    auto rec = [&](auto&& self, int idx, int sum) -> void {
        if (idx == l) {
            if (sum == total && in_A(cur, e)) out.push_back(cur);
            return;
        }
        int from = idx == 0 ? lo : cur[idx - 1];
        int to = idx == 0 ? hi : cur[0] + e;
        for (int v = from; v <= to; ++v) {
            cur[idx] = v;
            self(self, idx + 1, sum + v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

Charge kleshchev_charge(const Charge& s, int e, int n) {
    require(e >= 2, "rank must be >= 2");
    require(n >= 0, "size must be >= 0");
    Charge t;
    t.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (i == 0) {
            t.push_back(s[0]);
        } else {
            int low = t.back() + n;
            t.push_back(s[i] >= low ? s[i] : low + imod(s[i] - low, e));
        }
    }
    return t;
}

FiniteWeight finite_weight(const Charged& x, int rank) {
    FiniteWeight w;
    w.box_counts.assign(rank, 0);
    for (size_t j = 0; j < x.mp.size(); ++j) {
        const Partition& p = x.mp[j];
        for (int a = 1; a <= static_cast<int>(p.size()); ++a)
            for (int b = 1; b <= p[a - 1]; ++b)
                w.box_counts[imod(b - a + x.s[j], rank)] += 1;
        w.lambda_indices.push_back(imod(x.s[j], rank));
    }
    return w;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Multipartition> multipartitions_of(int n, int l) {
    std::vector<Multipartition> out;
    Multipartition cur(l);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == l - 1) {
            for (auto& p : partitions_of(left)) {
                cur[idx] = std::move(p);
                out.push_back(cur);
            }
            cur[idx].clear();
            return;
        }
        for (int take = left; take >= 0; --take) {
            for (auto& p : partitions_of(take)) {
                cur[idx] = std::move(p);
                self(self, idx + 1, left - take);
            }
            cur[idx].clear();
        }
    };
    if (l >= 1) rec(rec, 0, n);
    return out;
}

bool charged_less(const Charged& a, const Charged& b) {
    if (a.mp != b.mp) return a.mp < b.mp;
    return a.s < b.s;
}

CrystalGraph crystal_graph(const Charge& s, int rank, int n_max) {
    require(n_max >= 0, "graph size bound must be >= 0");
    CrystalGraph g;
    g.s = s;
    g.rank = rank;
    std::map<Multipartition, int> index;
    for (int n = 0; n <= n_max; ++n) {
        for (auto& mp : multipartitions_of(n, static_cast<int>(s.size()))) {
            index.emplace(mp, static_cast<int>(g.vertices.size()));
            g.vertices.push_back({std::move(mp), s});
        }
    }
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        if (mp_size(g.vertices[v].mp) == n_max) continue;
        for (int i = 0; i < rank; ++i) {
            if (auto down = lower(g.vertices[v], i, rank)) {
                auto at = index.find(down->mp);
                ensure(at != index.end(), "lowering left the enumerated size range");
                g.edges.push_back({v, at->second, i});
            }
        }
    }
    return g;
}

} // namespace fock
