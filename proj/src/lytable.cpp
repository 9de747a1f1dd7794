#include "lycov/lytable.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lycov {

LyubeznikTable::LyubeznikTable(int n, int d) : n_(n), d_(d) {
    if (d < 0 || d > n) throw std::invalid_argument("bad table dimensions");
}

long long LyubeznikTable::at(int p, int i) const {
    auto it = e_.find({p, i});
    return it == e_.end() ? 0 : it->second;
}

void LyubeznikTable::set(int p, int i, long long v) {
    if (p < 0 || p > i || i > d_)
        throw std::out_of_range("table entry outside 0 <= p <= i <= d");
    if (v < 0) throw std::invalid_argument("negative table entry");
    if (v == 0) e_.erase({p, i});
    else e_[{p, i}] = v;
}

void LyubeznikTable::add(int p, int i, long long v) { set(p, i, at(p, i) + v); }

bool LyubeznikTable::is_trivial() const {
    return e_.size() == 1 && at(d_, d_) == 1;
}

LyubeznikTable LyubeznikTable::embed(int extra) const {
    if (extra < 0) throw std::invalid_argument("embed needs e >= 0");
    LyubeznikTable t(n_ + extra, d_ + extra);
    for (const auto& [pi, v] : e_) t.set(pi.first + extra, pi.second + extra, v);
    return t;
}

std::map<std::pair<int, int>, long long> LyubeznikTable::pattern() const {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [pi, v] : e_) out[{d_ - pi.first, d_ - pi.second}] = v;
    return out;
}

int LyubeznikTable::smallest_nonzero_index() const {
    if (e_.empty()) throw std::domain_error("smallest index of a zero table");
    int best = d_;
    for (const auto& [pi, v] : e_) best = std::min(best, pi.second);
    return best;
}

LyubeznikTable trivial_table(int n, int d) {
    LyubeznikTable t(n, d);
    t.set(d, d, 1);
    return t;
}

namespace {

// n = 3k + l with l in {-1, 0, 1}
int cycle_k(int n) {
    switch (n % 3) {
        case 0: return n / 3;
        case 1: return (n - 1) / 3;
        default: return (n + 1) / 3;
    }
}

}  // namespace

LyubeznikTable cycle_table(int n) {
    if (n < 3) throw std::invalid_argument("cycle table needs n >= 3");
    int d = n - 2, k = cycle_k(n);
    LyubeznikTable t(n, d);
    for (int i = 0; i <= k - 2; ++i) {
        t.set(d - 3 * i, d - i, 1);
        t.set(d - 3 * i - 1, d - i, 1);
    }
    t.set(d - 3 * (k - 1), d - (k - 1), 1);
    return t;
}

LyubeznikTable complement_cycle_table(int n) {
    if (n < 5) throw std::invalid_argument("complement cycle table needs n >= 5");
    int d = n - 2;
    LyubeznikTable t(n, d);
    t.set(0, d - 1, 1);
    t.set(2, d, 1);
    t.set(d, d, 1);
    return t;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

LyubeznikTable disjoint_trivial_table(int c, int d) {
    if (c < 1) throw std::invalid_argument("need at least one component");
    if (d - 2 * (c - 1) < 0)
        throw std::invalid_argument("too many components for this dimension");
    LyubeznikTable t(d + 2, d);
    for (int k = 0; k <= c - 1; ++k) t.set(d - 2 * k, d - k, binomial(c, k + 1));
    return t;
}

LyubeznikTable two_cycles_table(int m, int n, int total_vertices) {
    if (m < 3 || n < 3 || m > n) throw std::invalid_argument("need 3 <= m <= n");
    if (total_vertices < m + n - 2)
        throw std::invalid_argument("too few vertices for an L-join");
    int k1 = cycle_k(m), k2 = cycle_k(n);
    int d = total_vertices - 2;
    LyubeznikTable t(total_vertices, d);
    auto put = [&](int p, int i, long long v) {
        if (v > 0) t.set(p, i, v);
    };
    for (int i = 0; i <= k1 - 2; ++i) {
        put(d - 3 * i, d - i, i + 1);
        put(d - 3 * i - 1, d - i, i + 2);
    }
    for (int i = k1 - 1; i <= k2 - 2; ++i) {
        put(d - 3 * i, d - i, k1);
        put(d - 3 * i - 1, d - i, k1);
    }
    for (int i = k2 - 1; i <= k1 + k2 - 2; ++i) {
        put(d - 3 * i, d - i, k1 + k2 - i - 1);
        put(d - 3 * i - 1, d - i, k1 + k2 - i - 2);
    }
    return t;
}

LyubeznikTable thom_sebastiani(const LyubeznikTable& a, const LyubeznikTable& b) {
    int na = a.ambient(), nb = b.ambient();
    int ha = na - a.dim(), hb = nb - b.dim();
    if (ha == 1 || hb == 1)
        return trivial_table(na + nb, na + nb - 1);
    LyubeznikTable t(na + nb, na + nb - std::min(ha, hb));
    for (const auto& [pi, v] : a.entries()) t.add(pi.first + nb, pi.second + nb, v);
    for (const auto& [pi, v] : b.entries()) t.add(pi.first + na, pi.second + na, v);
    for (const auto& [qa, va] : a.entries())
        for (const auto& [qb, vb] : b.entries())
            t.add(qa.first + qb.first, qa.second + qb.second + 1, va * vb);
    return t;
}

int disjoint_top(const std::vector<int>& component_indices) {
    if (component_indices.empty()) throw std::invalid_argument("no components");
    int s = 0;
    for (int i : component_indices) s += i;
    return s + static_cast<int>(component_indices.size()) - 1;
}

std::string render_table_text(const LyubeznikTable& t) {
    // column widths per column i
    int d = t.dim();
    std::vector<std::size_t> width(static_cast<std::size_t>(d) + 1, 1);
    for (int i = 0; i <= d; ++i)
        for (int p = 0; p <= i; ++p)
            width[static_cast<std::size_t>(i)] = std::max(
                width[static_cast<std::size_t>(i)], std::to_string(t.at(p, i)).size());
    std::ostringstream out;
    for (int p = 0; p <= d; ++p) {
        std::string line;
        for (int i = 0; i <= d; ++i) {
            std::string cell = i < p ? "" : std::to_string(t.at(p, i));
            while (cell.size() < width[static_cast<std::size_t>(i)]) cell.insert(cell.begin(), ' ');
            if (i) line += ' ';
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

std::string render_table_json(const LyubeznikTable& t) {
    nlohmann::json j;
    j["n"] = t.ambient();
    j["d"] = t.dim();
    j["entries"] = nlohmann::json::array();
    for (const auto& [pi, v] : t.entries())
        j["entries"].push_back({{"p", pi.first}, {"i", pi.second}, {"v", v}});
    return j.dump();
}

}  // namespace lycov
