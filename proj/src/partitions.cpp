#include "fock/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fock {

Partition normalized(Partition parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() <= 0) parts.pop_back();
    return parts;
}

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

Partition transpose(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    out.resize(p[0]);
    for (int col = 1; col <= p[0]; ++col) {
        int rows = 0;
        for (int part : p) {
            if (part >= col) ++rows;
            else break;
        }
        out[col - 1] = rows;
    }
    return out;
}

Charged charged_transpose(const Charged& x) {
    Charged out;
    out.mp.reserve(x.mp.size());
    for (const auto& p : x.mp) out.mp.push_back(transpose(p));
    out.s.reserve(x.s.size());
    for (int v : x.s) out.s.push_back(-v);
    return out;
}

Partition concat(const Partition& a, const Partition& b) {
    Partition out = a;
    out.insert(out.end(), b.begin(), b.end());
    return normalized(std::move(out));
}

Partition power(const Partition& sigma, int e) {
    require(e >= 1, "power exponent must be >= 1");
    Partition out;
    out.reserve(sigma.size() * e);
    for (int part : sigma)
        for (int k = 0; k < e; ++k) out.push_back(part);
    return out;
}

static std::map<int, int, std::greater<int>> multiplicities(const Partition& p) {
    std::map<int, int, std::greater<int>> mult;
    for (int part : p) ++mult[part];
    return mult;
}

std::pair<Partition, Partition> euclid_div(const Partition& lambda, int e) {
    require(e >= 2, "euclidean division needs e >= 2");
    Partition sigma, rho;
    for (auto [part, m] : multiplicities(lambda)) {
        for (int k = 0; k < m / e; ++k) sigma.push_back(part);
        for (int k = 0; k < m % e; ++k) rho.push_back(part);
    }
    return {sigma, rho};
}

bool is_regular(const Partition& p, int d) {
    require(d >= 2, "regularity needs d >= 2");
    int run = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        run = (i > 0 && p[i] == p[i - 1]) ? run + 1 : 1;
        if (run >= d) return false;
    }
    return true;
}

std::vector<Partition> d_adic_expand(const Partition& lambda, int d) {
    require(d >= 2, "d-adic expansion needs d >= 2");
    std::vector<Partition> digits(1);
    for (auto [part, m] : multiplicities(lambda)) {
        int i = 0;
        while (m > 0) {
            if (static_cast<size_t>(i) >= digits.size()) digits.emplace_back();
            for (int k = 0; k < m % d; ++k) digits[i].push_back(part);
            m /= d;
            ++i;
        }
    }
    /* Each digit was filled largest part first, so it is already sorted. */
    return digits;
}

std::vector<int> beta_numbers(const Partition& p, int s, int depth) {
    require(depth >= static_cast<int>(p.size()), "insufficient abacus depth");
    std::vector<int> beads(depth);
    for (int u = 1; u <= depth; ++u) {
        int part = u <= static_cast<int>(p.size()) ? p[u - 1] : 0;
        beads[u - 1] = part + s - u + 1;
    }
    return beads;
}

std::pair<Partition, int> from_beta(int floor, const std::vector<int>& beads) {
    int cnt = static_cast<int>(beads.size());
    int s = floor + cnt - 1;
    Partition p(cnt);
    for (int u = 1; u <= cnt; ++u) {
        ensure(beads[u - 1] >= floor, "bead below abacus floor");
        ensure(u == 1 || beads[u - 1] < beads[u - 2], "beads not strictly decreasing");
        p[u - 1] = beads[u - 1] - s + u - 1;
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    ensure(is_partition(p), "bead set does not encode a partition");
    return {p, s};
}

/* ---- text parsing ------------------------------------------------- */

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream msg;
        msg << "parse error at position " << pos << ": " << what;
        throw input_error(msg.str());
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    int integer(bool allow_negative) {
        size_t start = pos;
        bool neg = false;
        if (allow_negative && peek() == '-') { neg = true; ++pos; }
        if (done() || !isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        long long value = 0;
        while (!done() && isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000000LL) { pos = start; fail("integer out of range"); }
            ++pos;
        }
        return static_cast<int>(neg ? -value : value);
    }
};

Partition partition_at(Cursor& c) {
    Partition p;
    if (c.peek() == '-') { ++c.pos; return p; }
    while (true) {
        size_t at = c.pos;
        int part = c.integer(false);
        if (part < 1) { c.pos = at; c.fail("parts must be positive"); }
        int mult = 1;
        if (c.peek() == '^') {
            ++c.pos;
            mult = c.integer(false);
            if (mult < 1) { c.pos = at; c.fail("multiplicity must be positive"); }
        }
        if (!p.empty() && part > p.back()) { c.pos = at; c.fail("parts must be weakly decreasing"); }
        for (int k = 0; k < mult; ++k) p.push_back(part);
        if (c.peek() != '.') break;
        ++c.pos;
    }
    return p;
}

std::string trimmed(const std::string& text) {
    size_t a = text.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = text.find_last_not_of(" \t");
    return text.substr(a, b - a + 1);
}

} // namespace

Partition parse_partition(const std::string& text) {
    std::string t = trimmed(text);
    Cursor c{t};
    Partition p = partition_at(c);
    if (!c.done()) c.fail("trailing characters after partition");
    return p;
}

Multipartition parse_multipartition(const std::string& text) {
    std::string t = trimmed(text);
    Cursor c{t};
    Multipartition mp;
    mp.push_back(partition_at(c));
    while (c.peek() == '|') {
        ++c.pos;
        mp.push_back(partition_at(c));
    }
    if (!c.done()) c.fail("trailing characters after multipartition");
    return mp;
}

Charge parse_charge(const std::string& text) {
    std::string t = trimmed(text);
    Cursor c{t};
    Charge s;
    s.push_back(c.integer(true));
    while (c.peek() == ',') {
        ++c.pos;
        s.push_back(c.integer(true));
    }
    if (!c.done()) c.fail("trailing characters after charge");
    return s;
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "-";
    std::ostringstream out;
    size_t i = 0;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (i > 0) out << '.';
        out << p[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

std::string format_multipartition(const Multipartition& mp) {
    std::ostringstream out;
    for (size_t j = 0; j < mp.size(); ++j) {
        if (j > 0) out << '|';
        out << format_partition(mp[j]);
    }
    return out.str();
}

std::string format_charge(const Charge& s) {
    std::ostringstream out;
    for (size_t j = 0; j < s.size(); ++j) {
        if (j > 0) out << ',';
        out << s[j];
    }
    return out.str();
}

} // namespace fock
