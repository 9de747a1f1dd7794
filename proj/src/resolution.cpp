#include "lycov/resolution.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lycov/chain.hpp"

namespace lycov {

int GradedResolution::length() const {
    for (int j = static_cast<int>(levels.size()) - 1; j >= 0; --j)
        if (!levels[static_cast<std::size_t>(j)].empty()) return j;
    return -1;
}

GradedResolution taylor(int nvars, const std::vector<Mask>& gens) {
    int m = static_cast<int>(gens.size());
    if (m == 0) throw std::invalid_argument("taylor complex of the zero ideal");
    if (m > 20) throw BudgetExceeded("taylor complex limited to 20 generators");
    std::uint32_t total = 1u << m;
    // degree of every generator subset
    std::vector<Mask> deg(total, 0);
    for (std::uint32_t s = 1; s < total; ++s) {
        int low = std::countr_zero(s);
        deg[s] = deg[s & (s - 1)] | gens[static_cast<std::size_t>(low)];
    }
    GradedResolution r;
    r.nvars = nvars;
    r.levels.resize(static_cast<std::size_t>(m));
    std::vector<int> index(total, -1);
    std::vector<std::vector<std::uint32_t>> subsets(static_cast<std::size_t>(m));
    for (std::uint32_t s = 1; s < total; ++s) {
        int j = std::popcount(s) - 1;
        index[s] = static_cast<int>(r.levels[static_cast<std::size_t>(j)].size());
        r.levels[static_cast<std::size_t>(j)].push_back(deg[s]);
        subsets[static_cast<std::size_t>(j)].push_back(s);
    }
    r.diffs.resize(static_cast<std::size_t>(m) - 1);
    for (int j = 1; j < m; ++j) {
        auto& entries = r.diffs[static_cast<std::size_t>(j - 1)];
        for (std::uint32_t s : subsets[static_cast<std::size_t>(j)]) {
            int col = index[s];
            int pos = 0;
            for (std::uint32_t rest = s; rest; rest &= rest - 1, ++pos) {
                std::uint32_t g = rest & ~(rest - 1);
                entries.emplace_back(index[s ^ g], col, pos % 2 == 0 ? 1 : -1);
            }
        }
    }
    return r;
}

namespace {

// workspace for unit-entry cancellation with row and column access
struct Reducer {
    const FieldSpec& F;
    int nlevels;
    std::vector<std::vector<Mask>> deg;                     // [level][slot]
    std::vector<std::vector<char>> alive;                   // [level][slot]
    std::vector<std::vector<std::map<int, std::uint32_t>>> rows;  // [j][slot of level j-1]
    std::vector<std::vector<std::map<int, std::uint32_t>>> cols;  // [j][slot of level j]
    // unit entries per differential, ordered by (degree, row, col)
    std::vector<std::set<std::tuple<Mask, int, int>>> units;

    explicit Reducer(const GradedResolution& r, const FieldSpec& f) : F(f) {
        nlevels = static_cast<int>(r.levels.size());
        deg = r.levels;
        alive.resize(deg.size());
        for (std::size_t l = 0; l < deg.size(); ++l)
            alive[l].assign(deg[l].size(), 1);
        rows.resize(static_cast<std::size_t>(nlevels));
        cols.resize(static_cast<std::size_t>(nlevels));
        units.resize(static_cast<std::size_t>(nlevels));
        for (int j = 1; j < nlevels; ++j) {
            rows[static_cast<std::size_t>(j)].resize(deg[static_cast<std::size_t>(j - 1)].size());
            cols[static_cast<std::size_t>(j)].resize(deg[static_cast<std::size_t>(j)].size());
            for (auto [row, col, val] : r.diffs[static_cast<std::size_t>(j - 1)]) {
                std::uint32_t v = F.reduce(val);
                if (v == 0) continue;
                rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)][col] = v;
                cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)][row] = v;
                if (deg[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(row)] ==
                    deg[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)])
                    units[static_cast<std::size_t>(j)].insert({degree_of(j, col), row, col});
            }
        }
    }

    Mask degree_of(int j, int col) const {
        return deg[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)];
    }

    void set_entry(int j, int row, int col, std::uint32_t v) {
        auto& rm = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)];
        auto& cm = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)];
        bool is_unit = deg[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(row)] ==
                       deg[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)];
        if (v == 0) {
            rm.erase(col);
            cm.erase(row);
            if (is_unit) units[static_cast<std::size_t>(j)].erase({degree_of(j, col), row, col});
        } else {
            rm[col] = v;
            cm[row] = v;
            if (is_unit) units[static_cast<std::size_t>(j)].insert({degree_of(j, col), row, col});
        }
    }

    std::uint32_t get_entry(int j, int row, int col) const {
        const auto& rm = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)];
        auto it = rm.find(col);
        return it == rm.end() ? 0 : it->second;
    }

    // Gaussian elimination step on the pair (row t of level j-1, col s of
    // level j). Only the middle differential changes; the neighbors just
    // lose the corresponding row or column.
    void cancel(int j, int t, int s) {
        std::uint32_t u = get_entry(j, t, s);
        std::uint32_t uinv = F.inv(u);
        auto colvals = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
        auto rowvals = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
        colvals.erase(t);
        rowvals.erase(s);
        for (auto [y, cy] : colvals) {
            std::uint32_t f = F.mul(cy, uinv);
            for (auto [x, rx] : rowvals) {
                std::uint32_t delta = F.mul(f, rx);
                std::uint32_t cur = get_entry(j, y, x);
                set_entry(j, y, x, F.sub(cur, delta));
            }
        }
        // clear row t and col s of D_j (copy first: erasing invalidates)
        {
            auto row_copy = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
            for (auto [x, v] : row_copy) set_entry_erase_only(j, t, x);
            auto col_copy = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
            for (auto [y, v] : col_copy) set_entry_erase_only(j, y, s);
        }
        rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)].clear();
        cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)].clear();
        alive[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] = 0;
        alive[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(t)] = 0;
        // slot s of level j was a target of D_{j+1}: drop that row
        if (j + 1 < nlevels) {
            auto& row_s = rows[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(s)];
            for (auto [x, v] : row_s) {
                cols[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(x)].erase(s);
                if (deg[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] ==
                    deg[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(x)])
                    units[static_cast<std::size_t>(j + 1)].erase({degree_of(j + 1, x), s, x});
            }
            row_s.clear();
        }
        // slot t of level j-1 was a source of D_{j-1}: drop that column
        if (j - 1 >= 1) {
            auto& col_t = cols[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(t)];
            for (auto [y, v] : col_t) {
                rows[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(y)].erase(t);
                if (deg[static_cast<std::size_t>(j - 2)][static_cast<std::size_t>(y)] ==
                    deg[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(t)])
                    units[static_cast<std::size_t>(j - 1)].erase({degree_of(j - 1, t), y, t});
            }
            col_t.clear();
        }
    }

    void set_entry_erase_only(int j, int row, int col) {
        bool is_unit = deg[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(row)] ==
                       deg[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)];
        if (is_unit) units[static_cast<std::size_t>(j)].erase({degree_of(j, col), row, col});
        rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)].erase(col);
        cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)].erase(row);
    }

    void run_deterministic() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int j = 1; j < nlevels; ++j)
                while (!units[static_cast<std::size_t>(j)].empty()) {
                    auto [dg, t, s] = *units[static_cast<std::size_t>(j)].begin();
                    cancel(j, t, s);
                    changed = true;
                }
        }
    }

    void run_random(std::mt19937& rng) {
        while (true) {
            std::vector<std::tuple<int, int, int>> all;
            for (int j = 1; j < nlevels; ++j)
                for (auto [dg, t, s] : units[static_cast<std::size_t>(j)])
                    all.emplace_back(j, t, s);
            if (all.empty()) break;
            auto [j, t, s] =
                all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
            cancel(j, t, s);
        }
    }

    GradedResolution extract(int nvars) const {
        GradedResolution out;
        out.nvars = nvars;
        out.levels.resize(deg.size());
        std::vector<std::vector<int>> remap(deg.size());
        for (std::size_t l = 0; l < deg.size(); ++l) {
            remap[l].assign(deg[l].size(), -1);
            for (std::size_t i = 0; i < deg[l].size(); ++i)
                if (alive[l][i]) {
                    remap[l][i] = static_cast<int>(out.levels[l].size());
                    out.levels[l].push_back(deg[l][i]);
                }
        }
        out.diffs.resize(deg.size() - 1);
        for (int j = 1; j < nlevels; ++j)
            for (std::size_t t = 0; t < rows[static_cast<std::size_t>(j)].size(); ++t)
                for (auto [s, v] : rows[static_cast<std::size_t>(j)][t])
                    out.diffs[static_cast<std::size_t>(j - 1)].emplace_back(
                        remap[static_cast<std::size_t>(j - 1)][t],
                        remap[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)], v);
        return out;
    }
};

}  // namespace

void minimalize(GradedResolution& r, const FieldSpec& F) {
    Reducer red(r, F);
    red.run_deterministic();
    r = red.extract(r.nvars);
}

void minimalize_random_order(GradedResolution& r, const FieldSpec& F, std::mt19937& rng) {
    Reducer red(r, F);
    red.run_random(rng);
    r = red.extract(r.nvars);
}

bool verify_resolution(const GradedResolution& r, const FieldSpec& F) {
    // monomial-matrix sanity: entries only where row degree divides column
    // degree, and d∘d = 0
    int L = static_cast<int>(r.levels.size());
    for (int j = 1; j < L; ++j)
        for (auto [row, col, val] : r.diffs[static_cast<std::size_t>(j - 1)]) {
            Mask a = r.levels[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(row)];
            Mask b = r.levels[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)];
            if (F.reduce(val) != 0 && !mask_contains(b, a)) return false;
        }
    for (int j = 2; j < L; ++j) {
        const auto& d1 = r.diffs[static_cast<std::size_t>(j - 1)];  // level j -> j-1
        const auto& d0 = r.diffs[static_cast<std::size_t>(j - 2)];  // level j-1 -> j-2
        std::vector<std::vector<std::pair<int, std::uint32_t>>> byrow(
            r.levels[static_cast<std::size_t>(j - 1)].size());
        for (auto [row, col, val] : d0)
            byrow[static_cast<std::size_t>(col)].emplace_back(row, F.reduce(val));
        std::map<std::pair<int, int>, std::uint32_t> acc;
        for (auto [mid, col, val] : d1)
            for (auto [row, v0] : byrow[static_cast<std::size_t>(mid)]) {
                auto key = std::make_pair(row, col);
                acc[key] = F.add(acc[key], F.mul(F.reduce(val), v0));
            }
        for (auto& [k, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

std::map<std::pair<int, Mask>, int> betti(const GradedResolution& rmin) {
    std::map<std::pair<int, Mask>, int> out;
    for (int j = 0; j < static_cast<int>(rmin.levels.size()); ++j)
        for (Mask d : rmin.levels[static_cast<std::size_t>(j)]) ++out[{j, d}];
    return out;
}

int upper_koszul_betti(int nvars, const std::vector<Mask>& gens, int j, Mask alpha,
                       const FieldSpec& F) {
    (void)nvars;
    if (j < 0) return 0;
    auto divides_some = [&](Mask avail) {
        for (Mask g : gens)
            if (mask_contains(avail, g)) return true;
        return false;
    };
    std::vector<int> supp = mask_elements(alpha);
    int k = static_cast<int>(supp.size());
    if (k > 24) throw BudgetExceeded("upper Koszul complex limited to 24 variables");
    SimplicialComplex sc;
    sc.nverts = k;
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
        Mask smask = 0;
        for (int b = 0; b < k; ++b)
            if ((s >> b) & 1) smask |= bit(supp[static_cast<std::size_t>(b)]);
        if (!divides_some(alpha & ~smask)) continue;
        std::vector<int> face;
        for (int b = 0; b < k; ++b)
            if ((s >> b) & 1) face.push_back(b);
        sc.faces.push_back(std::move(face));
    }
    return reduced_homology_dim(sc, j - 1, F);
}

std::vector<int> strand_homology(const GradedResolution& rmin, int r, const FieldSpec& F) {
    int n = rmin.nvars;
    if (r < 0 || r > n) throw std::invalid_argument("strand index outside [0, n]");
    int len = n - r;  // positions 0..len
    // strand basis at resolution level j: degrees of size j + r
    std::vector<std::vector<int>> pick(rmin.levels.size());
    std::vector<int> strand_dim(static_cast<std::size_t>(len) + 1, 0);
    for (int p = 0; p <= len; ++p) {
        int j = len - p;
        if (j >= static_cast<int>(rmin.levels.size())) continue;
        auto& idx = pick[static_cast<std::size_t>(j)];
        const auto& lv = rmin.levels[static_cast<std::size_t>(j)];
        idx.assign(lv.size(), -1);
        int cnt = 0;
        for (std::size_t i = 0; i < lv.size(); ++i)
            if (popcount(lv[i]) == j + r) idx[i] = cnt++;
        strand_dim[static_cast<std::size_t>(p)] = cnt;
    }
    VSChainComplex cc;
    cc.dims.assign(strand_dim.begin(), strand_dim.end());
    for (int p = 1; p <= len; ++p) {
        int j = len - p;  // differential F*_p -> F*_{p-1} transposes level j+1 -> level j
        ScalarMatrix d(cc.dims[static_cast<std::size_t>(p - 1)],
                       cc.dims[static_cast<std::size_t>(p)]);
        if (j + 1 < static_cast<int>(rmin.levels.size()) &&
            cc.dims[static_cast<std::size_t>(p)] > 0 &&
            cc.dims[static_cast<std::size_t>(p - 1)] > 0) {
            const auto& tgt = pick[static_cast<std::size_t>(j)];
            const auto& src = pick[static_cast<std::size_t>(j + 1)];
            for (auto [row, col, val] : rmin.diffs[static_cast<std::size_t>(j)]) {
                if (tgt[static_cast<std::size_t>(row)] < 0) continue;
                if (src[static_cast<std::size_t>(col)] < 0) continue;
                // transpose: resolution rows become columns
                d.set(src[static_cast<std::size_t>(col)], tgt[static_cast<std::size_t>(row)],
                      F.reduce(val));
            }
        }
        cc.diffs.push_back(std::move(d));
    }
    return homology_dims(cc, F);
}

LyubeznikTable oracle_table(const SqfreeIdeal& j, const FieldSpec& F) {
    int n = j.ambient();
    int ht = j.height();
    GradedResolution res = taylor(n, alexander_dual(j).gens());
    minimalize(res, F);
    LyubeznikTable t(n, n - ht);
    for (int r = ht; r <= n; ++r) {
        auto lam = strand_homology(res, r, F);
        for (int p = 0; p < static_cast<int>(lam.size()); ++p)
            if (lam[static_cast<std::size_t>(p)] != 0)
                t.set(p, n - r, lam[static_cast<std::size_t>(p)]);
    }
    return t;
}

LyubeznikTable oracle_table(const Graph& g, const FieldSpec& F) {
    auto [h, labels] = g.compact();
    return oracle_table(cover_ideal(h), F);
}

int projective_dimension(const SqfreeIdeal& ideal, const FieldSpec& F) {
    GradedResolution res = taylor(ideal.ambient(), ideal.gens());
    minimalize(res, F);
    return res.length() + 1;
}

std::string betti_table_text(const GradedResolution& rmin) {
    auto b = betti(rmin);
    std::map<std::pair<int, int>, int> bydeg;  // (j, total degree) -> count
    int maxj = 0, mind = 1 << 30, maxd = 0;
    for (const auto& [key, cnt] : b) {
        int j = key.first, deg = popcount(key.second);
        bydeg[{j, deg}] += cnt;
        maxj = std::max(maxj, j);
        mind = std::min(mind, deg);
        maxd = std::max(maxd, deg);
    }
    std::ostringstream out;
    out << "level";
    for (int d = mind; d <= maxd; ++d) out << '\t' << d;
    out << '\n';
    for (int j = 0; j <= maxj; ++j) {
        out << j;
        for (int d = mind; d <= maxd; ++d) {
            auto it = bydeg.find({j, d});
            out << '\t' << (it == bydeg.end() ? 0 : it->second);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace lycov
