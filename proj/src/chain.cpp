#include "lycov/chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lycov {

bool is_valid_complex(const VSChainComplex& c, const FieldSpec& F) {
    int m = static_cast<int>(c.dims.size()) - 1;
    if (m < 0) return false;
    if (static_cast<int>(c.diffs.size()) != m) return false;
    for (int p = 1; p <= m; ++p) {
        const ScalarMatrix& d = c.diffs[p - 1];
        if (d.rows() != c.dims[p - 1] || d.cols() != c.dims[p]) return false;
    }
    for (int p = 1; p + 1 <= m; ++p) {
        if (c.dims[p - 1] == 0 || c.dims[p] == 0 || c.dims[p + 1] == 0) continue;
        if (!multiply(c.diffs[p - 1], c.diffs[p], F).is_zero()) return false;
    }
    return true;
}

std::vector<int> homology_dims(const VSChainComplex& c, const FieldSpec& F) {
    if (!is_valid_complex(c, F))
        throw std::invalid_argument("not a chain complex (shape or d∘d = 0 violated)");
    int m = static_cast<int>(c.dims.size()) - 1;
    std::vector<int> rk(m + 2, 0);  // rk[p] = rank d_p, with rk[0] = rk[m+1] = 0
    for (int p = 1; p <= m; ++p) rk[p] = rank(c.diffs[p - 1], F);
    std::vector<int> h(m + 1);
    for (int p = 0; p <= m; ++p) h[p] = c.dims[p] - rk[p] - rk[p + 1];
    return h;
}

std::vector<int> reduced_homology(const SimplicialComplex& sc, const FieldSpec& F) {
    if (sc.faces.empty()) return {};  // void complex
    std::size_t maxcard = 0;
    for (const auto& f : sc.faces) maxcard = std::max(maxcard, f.size());
    // group faces by cardinality; cardinality c sits at degree c-1
    std::vector<std::map<std::vector<int>, int>> index(maxcard + 1);
    for (const auto& f : sc.faces) {
        auto& m = index[f.size()];
        int id = static_cast<int>(m.size());
        m.emplace(f, id);
    }
    VSChainComplex cc;
    cc.dims.resize(maxcard + 1);
    for (std::size_t c = 0; c <= maxcard; ++c)
        cc.dims[c] = static_cast<int>(index[c].size());
    for (std::size_t c = 1; c <= maxcard; ++c) {
        ScalarMatrix d(cc.dims[c - 1], cc.dims[c]);
        for (const auto& [face, col] : index[c]) {
            std::uint32_t sign_pos = 1, sign_neg = F.neg(1);
            for (std::size_t k = 0; k < face.size(); ++k) {
                std::vector<int> sub;
                sub.reserve(face.size() - 1);
                for (std::size_t t = 0; t < face.size(); ++t)
                    if (t != k) sub.push_back(face[t]);
                auto it = index[c - 1].find(sub);
                if (it == index[c - 1].end())
                    throw std::invalid_argument("face list not closed under subsets");
                d.set(it->second, col, (k % 2 == 0) ? sign_pos : sign_neg);
            }
        }
        cc.diffs.push_back(std::move(d));
    }
    return homology_dims(cc, F);
}

int reduced_homology_dim(const SimplicialComplex& sc, int deg, const FieldSpec& F) {
    auto h = reduced_homology(sc, F);
    int idx = deg + 1;
    if (idx < 0 || idx >= static_cast<int>(h.size())) return 0;
    return h[idx];
}

}  // namespace lycov
