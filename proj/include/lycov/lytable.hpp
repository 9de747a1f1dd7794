#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lycov {

// Upper-triangular table of Lyubeznik numbers lambda_{p,i}, 0 <= p <= i <= d,
// carried together with its ambient variable count n. Only nonzero entries
// are stored. For cover ideals of graphs d = n - 2.
class LyubeznikTable {
public:
    LyubeznikTable(int n, int d);

    int ambient() const { return n_; }
    int dim() const { return d_; }

    long long at(int p, int i) const;
    void set(int p, int i, long long v);   // v = 0 erases
    void add(int p, int i, long long v);

    const std::map<std::pair<int, int>, long long>& entries() const { return e_; }

    bool is_trivial() const;

    // Polynomial-extension shift: n += e, d += e, entries move diagonally.
    LyubeznikTable embed(int extra) const;

    // Corner-anchored view: (a, b) -> lambda_{d-a, d-b}. Equal patterns mean
    // equal tables up to variable extension.
    std::map<std::pair<int, int>, long long> pattern() const;

    // Smallest column index i with a nonzero entry; requires a nonzero table.
    int smallest_nonzero_index() const;

    bool operator==(const LyubeznikTable& o) const {
        return n_ == o.n_ && d_ == o.d_ && e_ == o.e_;
    }

private:
    int n_, d_;
    std::map<std::pair<int, int>, long long> e_;
};

LyubeznikTable trivial_table(int n, int d);

// Closed form for the cover ideal of an n-cycle, n = 3k + l, l in {-1,0,1}.
LyubeznikTable cycle_table(int n);

// Closed form for J(C_n^c), n >= 5: lambda_{0,d-1} = lambda_{2,d} =
// lambda_{d,d} = 1.
LyubeznikTable complement_cycle_table(int n);

// c components with trivial tables of equal dimension d in disjoint
// variables: lambda_{d-2k,d-k} = C(c, k+1).
LyubeznikTable disjoint_trivial_table(int c, int d);

// Closed form for two L-joined cycles C_m * C_n on N vertices total.
LyubeznikTable two_cycles_table(int m, int n, int total_vertices);

// Lyubeznik table of T/(I ∩ J)T for ideals in disjoint variable sets,
// from the two intrinsic tables. Heights are read off as n - d.
LyubeznikTable thom_sebastiani(const LyubeznikTable& a, const LyubeznikTable& b);

// Smallest nonzero column index of a disjoint union from the per-component
// smallest indices: sum + (c - 1).
int disjoint_top(const std::vector<int>& component_indices);

long long binomial(int n, int k);

// Paper-style rendering: rows p, columns i, zeros printed as 0.
std::string render_table_text(const LyubeznikTable& t);
// {"n":..., "d":..., "entries":[{"p":..,"i":..,"v":..}]}
std::string render_table_json(const LyubeznikTable& t);

}  // namespace lycov
