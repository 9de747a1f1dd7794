#include "lycov/census.hpp"

#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lycov/graph.hpp"
#include "lycov/splitter.hpp"

namespace lycov {

TableType classify_table(const LyubeznikTable& t) {
    if (t.is_trivial()) return TableType::Trivial;
    auto pat = t.pattern();
    for (int m = 5; m <= t.ambient(); ++m)
        if (pat == cycle_table(m).pattern()) return TableType::CyclePattern;
    for (int m = 5; m <= t.ambient(); ++m)
        if (pat == complement_cycle_table(m).pattern())
            return TableType::ComplementCyclePattern;
    return TableType::Other;
}

CensusRow census(int n, const FieldSpec& F, int jobs) {
    if (n < 4 || n > 7) throw std::invalid_argument("census supports 4 <= n <= 7");
    auto graphs = enumerate_connected(n);
    SplitPolicy pol;
    pol.field = F;
    auto count_range = [&](std::size_t lo, std::size_t hi) {
        CensusRow row;
        for (std::size_t i = lo; i < hi; ++i) {
            auto res = split_table(graphs[i], pol);
            switch (classify_table(res.table)) {
                case TableType::Trivial: ++row.trivial; break;
                case TableType::CyclePattern: ++row.cycle; break;
                case TableType::ComplementCyclePattern: ++row.complement_cycle; break;
                case TableType::Other: ++row.other; break;
            }
            ++row.total;
        }
        return row;
    };
    CensusRow out;
    out.n = n;
    if (jobs <= 1) {
        CensusRow r = count_range(0, graphs.size());
        out.trivial = r.trivial;
        out.cycle = r.cycle;
        out.complement_cycle = r.complement_cycle;
        out.other = r.other;
        out.total = r.total;
        return out;
    }
    std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(jobs), graphs.size());
    std::vector<std::future<CensusRow>> parts;
    std::size_t chunk = (graphs.size() + nw - 1) / nw;
    for (std::size_t w = 0; w < nw; ++w) {
        std::size_t lo = w * chunk, hi = std::min(graphs.size(), lo + chunk);
        if (lo >= hi) break;
        parts.push_back(std::async(std::launch::async, count_range, lo, hi));
    }
    for (auto& f : parts) {
        CensusRow r = f.get();
        out.trivial += r.trivial;
        out.cycle += r.cycle;
        out.complement_cycle += r.complement_cycle;
        out.other += r.other;
        out.total += r.total;
    }
    return out;
}

}  // namespace lycov
