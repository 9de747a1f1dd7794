#include "lycov/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lycov/chain.hpp"

namespace lycov {

namespace {

void sort_masks(std::vector<Mask>& v) {
    std::sort(v.begin(), v.end(), [](Mask a, Mask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Mask> minimalize_antichain(std::vector<Mask> masks) {
    sort_masks(masks);
    std::vector<Mask> out;
    for (Mask m : masks) {
        bool redundant = false;
        for (Mask kept : out)
            if (mask_contains(m, kept)) { redundant = true; break; }
        if (!redundant) out.push_back(m);
    }
    return out;
}

std::vector<Mask> minimal_transversals(int n, const std::vector<Mask>& masks) {
    (void)n;
    // Berge-style expansion: maintain the minimal transversals of the
    // prefix of the mask list. Degenerate inputs work out on their own:
    // the empty family gives {0} (unit <-> zero duality) and a family
    // containing the zero mask gives {}.
    std::vector<Mask> trans{0};
    for (Mask m : masks) {
        std::vector<Mask> next;
        for (Mask t : trans) {
            if (t & m) {
                next.push_back(t);
            } else {
                for (int v : mask_elements(m)) next.push_back(t | bit(v));
            }
        }
        trans = minimalize_antichain(std::move(next));
    }
    return trans;
}

SqfreeIdeal SqfreeIdeal::from_gens(int n, std::vector<Mask> gens) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("bad ambient size");
    for (Mask g : gens)
        if (!mask_contains(full_mask(n), g))
            throw std::invalid_argument("generator outside ambient variables");
    SqfreeIdeal j;
    j.n_ = n;
    j.gens_ = minimalize_antichain(std::move(gens));
    return j;
}

SqfreeIdeal SqfreeIdeal::from_primes(int n, std::vector<Mask> primes) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("bad ambient size");
    for (Mask p : primes)
        if (!mask_contains(full_mask(n), p))
            throw std::invalid_argument("prime outside ambient variables");
    SqfreeIdeal j;
    j.n_ = n;
    j.primes_ = minimalize_antichain(std::move(primes));
    return j;
}

const std::vector<Mask>& SqfreeIdeal::gens() const {
    if (!gens_) gens_ = minimal_transversals(n_, *primes_);
    return *gens_;
}

const std::vector<Mask>& SqfreeIdeal::primes() const {
    if (!primes_) primes_ = minimal_transversals(n_, *gens_);
    return *primes_;
}

bool SqfreeIdeal::is_unit() const {
    if (primes_) return primes_->empty();
    return !gens_->empty() && gens_->front() == 0;
}

bool SqfreeIdeal::is_zero() const {
    if (gens_) return gens_->empty();
    return !primes_->empty() && primes_->front() == 0;
}

int SqfreeIdeal::height() const {
    if (is_unit() || is_zero())
        throw std::domain_error("height needs a proper nonzero ideal");
    int h = kMaxVars + 1;
    for (Mask p : primes()) h = std::min(h, popcount(p));
    return h;
}

bool SqfreeIdeal::contains_monomial(Mask m) const {
    for (Mask g : gens())
        if (mask_contains(m, g)) return true;
    return false;
}

bool SqfreeIdeal::operator==(const SqfreeIdeal& o) const {
    return n_ == o.n_ && primes() == o.primes();
}

SqfreeIdeal cover_ideal(const Graph& g) {
    if (g.vertices() != full_mask(g.ambient()))
        throw std::invalid_argument("cover_ideal expects a fully active graph");
    if (g.edge_count() == 0)
        throw std::invalid_argument("cover ideal of an edgeless graph");
    std::vector<Mask> primes;
    for (auto [u, v] : g.edges()) primes.push_back(bit(u) | bit(v));
    return SqfreeIdeal::from_primes(g.ambient(), std::move(primes));
}

SqfreeIdeal edge_ideal(const Graph& g) {
    if (g.vertices() != full_mask(g.ambient()))
        throw std::invalid_argument("edge_ideal expects a fully active graph");
    if (g.edge_count() == 0)
        throw std::invalid_argument("edge ideal of an edgeless graph");
    std::vector<Mask> gens;
    for (auto [u, v] : g.edges()) gens.push_back(bit(u) | bit(v));
    return SqfreeIdeal::from_gens(g.ambient(), std::move(gens));
}

SqfreeIdeal alexander_dual(const SqfreeIdeal& j) {
    // gens and primes trade places
    if (j.has_primes_view()) {
        SqfreeIdeal d = SqfreeIdeal::from_gens(j.ambient(), j.primes());
        return d;
    }
    return SqfreeIdeal::from_primes(j.ambient(), j.gens());
}

SqfreeIdeal restrict_ideal(const SqfreeIdeal& j, Mask alpha) {
    if (alpha == 0) throw std::invalid_argument("restriction to the empty face");
    std::vector<int> vars = mask_elements(alpha);
    std::vector<int> newpos(static_cast<std::size_t>(j.ambient()) + 1, 0);
    for (std::size_t i = 0; i < vars.size(); ++i) newpos[vars[i]] = static_cast<int>(i) + 1;
    std::vector<Mask> kept;
    for (Mask p : j.primes()) {
        if (!mask_contains(alpha, p)) continue;
        Mask q = 0;
        for (int v : mask_elements(p)) q |= bit(newpos[v]);
        kept.push_back(q);
    }
    return SqfreeIdeal::from_primes(static_cast<int>(vars.size()), std::move(kept));
}

SqfreeIdeal ideal_sum(const SqfreeIdeal& a, const SqfreeIdeal& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
    std::vector<Mask> primes;
    for (Mask p : a.primes())
        for (Mask q : b.primes()) primes.push_back(p | q);
    return SqfreeIdeal::from_primes(a.ambient(), std::move(primes));
}

SqfreeIdeal ideal_intersection(const SqfreeIdeal& a, const SqfreeIdeal& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
    std::vector<Mask> primes = a.primes();
    const auto& bp = b.primes();
    primes.insert(primes.end(), bp.begin(), bp.end());
    return SqfreeIdeal::from_primes(a.ambient(), std::move(primes));
}

std::vector<Mask> sum_poset(const SqfreeIdeal& j) {
    const auto& primes = j.primes();
    if (primes.empty()) throw std::invalid_argument("sum poset of the unit ideal");
    std::set<Mask> elems(primes.begin(), primes.end());
    // close under pairwise union
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mask> cur(elems.begin(), elems.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t k = i + 1; k < cur.size(); ++k)
                if (elems.insert(cur[i] | cur[k]).second) grew = true;
    }
    std::vector<Mask> out(elems.begin(), elems.end());
    sort_masks(out);
    return out;
}

int m_coeff(const SqfreeIdeal& j, int r, Mask alpha, const FieldSpec& F) {
    if (r < 0) throw std::invalid_argument("m_coeff needs r >= 0");
    auto poset = sum_poset(j);
    if (std::find(poset.begin(), poset.end(), alpha) == poset.end()) return 0;
    // open interval above alpha in the reverse-inclusion order: elements
    // whose masks are strictly contained in alpha
    std::vector<Mask> interval;
    for (Mask z : poset)
        if (z != alpha && mask_contains(alpha, z)) interval.push_back(z);
    // order complex: faces are chains under strict containment
    SimplicialComplex sc;
    sc.nverts = static_cast<int>(interval.size());
    sc.faces.push_back({});
    std::vector<std::vector<int>> stack;
    for (int v = 0; v < sc.nverts; ++v) stack.push_back({v});
    while (!stack.empty()) {
        auto chain = std::move(stack.back());
        stack.pop_back();
        sc.faces.push_back(chain);
        Mask tail = interval[static_cast<std::size_t>(chain.back())];
        for (int w = chain.back() + 1; w < sc.nverts; ++w) {
            Mask mw = interval[static_cast<std::size_t>(w)];
            // masks are sorted by (popcount, value), so a strict superset
            // always comes later; test containment directly
            if (mw != tail && mask_contains(mw, tail)) {
                auto ext = chain;
                ext.push_back(w);
                stack.push_back(std::move(ext));
            }
        }
    }
    return reduced_homology_dim(sc, popcount(alpha) - r - 1, F);
}

int graded_piece_dim(const SqfreeIdeal& j, int r, Mask alpha, const FieldSpec& F) {
    return m_coeff(j, r, alpha, F);
}

MvWitness check_mv_splitting(const SqfreeIdeal& l, const SqfreeIdeal& k,
                             const FieldSpec& F) {
    if (l.ambient() != k.ambient()) throw std::invalid_argument("ambient mismatch");
    SqfreeIdeal lk = ideal_sum(l, k);
    auto pl = sum_poset(l), pk = sum_poset(k), plk = sum_poset(lk);
    auto disjoint = [](const std::vector<Mask>& a, const std::vector<Mask>& b) {
        for (Mask x : a)
            if (std::find(b.begin(), b.end(), x) != b.end()) return false;
        return true;
    };
    if (disjoint(pl, pk) && disjoint(pl, plk) && disjoint(pk, plk))
        return MvWitness::ByPosets;
    int n = l.ambient();
    bool ok = true;
    for (Mask alpha : plk) {
        for (int r = 0; r <= n && ok; ++r) {
            if (m_coeff(lk, r, alpha, F) == 0) continue;
            if (m_coeff(l, r, alpha, F) != 0 || m_coeff(k, r, alpha, F) != 0)
                ok = false;
        }
        if (!ok) break;
    }
    return ok ? MvWitness::ByGradedPieces : MvWitness::Unknown;
}

const char* to_string(MvWitness w) {
    switch (w) {
        case MvWitness::ByPosets: return "ByPosets";
        case MvWitness::ByGradedPieces: return "ByGradedPieces";
        case MvWitness::Unknown: return "Unknown";
    }
    return "?";
}

SqfreeIdeal parse_ideal_literal(const std::string& text) {
    std::string body = text;
    bool gens_view = false;
    auto colon = body.find(':');
    if (colon != std::string::npos) {
        std::string head = body.substr(0, colon);
        head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
        if (head == "gens") gens_view = true;
        else if (head != "primes") throw std::invalid_argument("bad ideal view: " + head);
        body = body.substr(colon + 1);
    }
    auto semi = body.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("ideal literal needs 'n; masks'");
    int n = 0;
    {
        std::istringstream in(body.substr(0, semi));
        if (!(in >> n)) throw std::invalid_argument("bad ambient count in ideal literal");
    }
    std::vector<Mask> masks;
    std::string rest = body.substr(semi + 1);
    std::string tok;
    std::istringstream in(rest);
    while (std::getline(in, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        if (static_cast<int>(tok.size()) != n)
            throw std::invalid_argument("mask length differs from ambient count");
        masks.push_back(parse_mask(tok));
    }
    if (masks.empty()) throw std::invalid_argument("ideal literal lists no masks");
    return gens_view ? SqfreeIdeal::from_gens(n, std::move(masks))
                     : SqfreeIdeal::from_primes(n, std::move(masks));
}

std::string emit_ideal_literal(const SqfreeIdeal& j) {
    std::ostringstream out;
    out << j.ambient() << "; ";
    const auto& ps = j.primes();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out << ", ";
        out << format_mask(ps[i], j.ambient());
    }
    return out.str();
}

}  // namespace lycov
