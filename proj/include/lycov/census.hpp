#pragma once

#include "lycov/field.hpp"
#include "lycov/lytable.hpp"

namespace lycov {

enum class TableType { Trivial, CyclePattern, ComplementCyclePattern, Other };

// Corner-anchored classification against the closed-form families.
TableType classify_table(const LyubeznikTable& t);

struct CensusRow {
    int n = 0;
    long long trivial = 0;
    long long cycle = 0;
    long long complement_cycle = 0;
    long long other = 0;
    long long total = 0;
};

// Lyubeznik types of all connected graphs on n vertices (4 <= n <= 7;
// 7 is slow). jobs <= 1 runs single-threaded.
CensusRow census(int n, const FieldSpec& F = FieldSpec{}, int jobs = 1);

}  // namespace lycov
