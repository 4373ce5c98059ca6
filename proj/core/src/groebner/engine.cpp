#include "invchain/groebner/engine.hpp"

#include <algorithm>

#include "invchain/error.hpp"

namespace invchain {

std::strong_ordering DenseOrder::compare(std::span<const std::int32_t> a, std::span<const std::int32_t> b) const {
    if (elimination_block > 0) {
        std::int64_t da = 0, db = 0;
        for (std::size_t i = 0; i < elimination_block; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da <=> db;
    }
    return base.compare_dense<std::int32_t>(a, b);
}

namespace {

std::int64_t degree_of(const DenseExp& e) {
    std::int64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool coprime(const DenseExp& a, const DenseExp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

DenseExp lcm_of(const DenseExp& a, const DenseExp& b) {
    DenseExp l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

bool divides_plain(const DenseExp& a, const DenseExp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// m := m - a + b
void shift(DenseExp& m, const DenseExp& a, const DenseExp& b) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += b[i] - a[i];
}

}  // namespace

BinomialBuchberger::BinomialBuchberger(std::size_t nvars, DenseOrder order) : n_(nvars), order_(order) {}

std::uint64_t BinomialBuchberger::mask_of(const DenseExp& e) const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) m |= std::uint64_t{1} << (i % 64);
    return m;
}

bool BinomialBuchberger::divides(const DenseExp& a, std::uint64_t am, const DenseExp& b, std::uint64_t bm) const {
    if (am & ~bm) return false;
    return divides_plain(a, b);
}

void BinomialBuchberger::orient(DenseExp& a, DenseExp& b) const {
    if (order_.compare(a, b) < 0) std::swap(a, b);
}

void BinomialBuchberger::check_deadline() {
    if (!deadline_) return;
    if ((++ticks_ & 0xff) == 0 && Clock::now() > *deadline_) throw TimeoutError("Groebner basis computation timed out");
}

void BinomialBuchberger::add_generator(DenseExp a, DenseExp b) {
    if (a.size() != n_ || b.size() != n_) throw InputError("generator has the wrong number of variables");
    if (a == b) return;
    orient(a, b);
    if (degree_bound_ && degree_of(a) > *degree_bound_) return;
    pending_.push_back({std::move(a), std::move(b)});
}

bool BinomialBuchberger::top_reduce(DenseExp& lead, DenseExp& trail) {
    while (true) {
        check_deadline();
        if (lead == trail) return false;
        auto lm = mask_of(lead);
        bool reduced = false;
        for (auto idx : basis_) {
            const auto& g = elems_[idx];
            if (divides(g.lead, g.lead_mask, lead, lm)) {
                shift(lead, g.lead, g.trail);
                orient(lead, trail);
                reduced = true;
                break;
            }
        }
        if (!reduced) return lead != trail;
    }
}

void BinomialBuchberger::insert(DenseExp lead, DenseExp trail) {
    const auto h = static_cast<std::uint32_t>(elems_.size());
    elems_.push_back({std::move(lead), std::move(trail), 0, true});
    elems_[h].lead_mask = mask_of(elems_[h].lead);
    const auto& hl = elems_[h].lead;
    const auto hmask = elems_[h].lead_mask;

    // Gebauer-Moeller update.
    struct Cand {
        std::uint32_t g;
        DenseExp lcm;
        std::uint64_t mask;
        bool coprime;
        bool keep = true;
    };
    std::vector<Cand> cands;
    cands.reserve(basis_.size());
    for (auto g : basis_) {
        auto l = lcm_of(hl, elems_[g].lead);
        auto m = mask_of(l);
        cands.push_back({g, std::move(l), m, coprime(hl, elems_[g].lead)});
    }
    // Chain criterion among new pairs: drop (h,g) if some other (h,g') has an
    // lcm properly dividing it, or an equal lcm and comes first (or is coprime).
    for (std::size_t a = 0; a < cands.size(); ++a) {
        for (std::size_t b = 0; b < cands.size() && cands[a].keep; ++b) {
            if (a == b || !cands[b].keep) continue;
            if (!divides(cands[b].lcm, cands[b].mask, cands[a].lcm, cands[a].mask)) continue;
            if (cands[b].lcm != cands[a].lcm) {
                cands[a].keep = false;
            } else if (cands[b].coprime || (!cands[a].coprime && b < a)) {
                cands[a].keep = false;
            }
        }
    }
    // Old pairs (i,j) made redundant by h.
    for (auto& p : pairs_) {
        if (!p.alive) continue;
        if (!divides(hl, hmask, p.lcm, p.lcm_mask)) continue;
        auto li = lcm_of(elems_[p.i].lead, hl);
        auto lj = lcm_of(elems_[p.j].lead, hl);
        if (li != p.lcm && lj != p.lcm) p.alive = false;
    }
    auto cmp = [this](std::uint32_t x, std::uint32_t y) {
        const auto& a = pairs_[x];
        const auto& b = pairs_[y];
        if (a.degree != b.degree) return a.degree > b.degree;
        auto c = order_.compare(a.lcm, b.lcm);
        if (c != 0) return c > 0;
        return a.seq > b.seq;
    };
    for (auto& c : cands) {
        if (!c.keep || c.coprime) continue;
        auto deg = degree_of(c.lcm);
        if (degree_bound_ && deg > *degree_bound_) continue;
        pairs_.push_back({c.g, h, std::move(c.lcm), c.mask, deg, seq_++, true});
        heap_.push_back(static_cast<std::uint32_t>(pairs_.size() - 1));
        std::push_heap(heap_.begin(), heap_.end(), cmp);
        ++stats_.pairs_created;
    }
    // Remove basis elements whose leads h divides.
    std::vector<std::uint32_t> kept;
    kept.reserve(basis_.size() + 1);
    for (auto g : basis_) {
        if (divides(hl, hmask, elems_[g].lead, elems_[g].lead_mask))
            elems_[g].in_basis = false;
        else
            kept.push_back(g);
    }
    kept.push_back(h);
    basis_ = std::move(kept);
    stats_.max_basis_size = std::max(stats_.max_basis_size, basis_.size());
}

std::vector<DenseBinomial> BinomialBuchberger::run() {
    auto cmp = [this](std::uint32_t x, std::uint32_t y) {
        const auto& a = pairs_[x];
        const auto& b = pairs_[y];
        if (a.degree != b.degree) return a.degree > b.degree;
        auto c = order_.compare(a.lcm, b.lcm);
        if (c != 0) return c > 0;
        return a.seq > b.seq;
    };
    // Input generators are fed in increasing order of their leads.
    std::sort(pending_.begin(), pending_.end(), [this](const DenseBinomial& a, const DenseBinomial& b) {
        auto da = degree_of(a.lead), db = degree_of(b.lead);
        if (da != db) return da < db;
        return order_.compare(a.lead, b.lead) < 0;
    });
    std::size_t next_input = 0;
    while (true) {
        // Interleave inputs with pairs by degree so lower degrees finish first.
        std::int64_t pair_deg = heap_.empty() ? -1 : pairs_[heap_.front()].degree;
        bool take_input = next_input < pending_.size() &&
                          (heap_.empty() || degree_of(pending_[next_input].lead) <= pair_deg);
        DenseExp a, b;
        if (take_input) {
            a = pending_[next_input].lead;
            b = pending_[next_input].trail;
            ++next_input;
        } else if (!heap_.empty()) {
            std::pop_heap(heap_.begin(), heap_.end(), cmp);
            auto pi = heap_.back();
            heap_.pop_back();
            auto& p = pairs_[pi];
            if (!p.alive) continue;
            p.alive = false;
            ++stats_.pairs_reduced;
            const auto& fi = elems_[p.i];
            const auto& fj = elems_[p.j];
            a = p.lcm;
            shift(a, fi.lead, fi.trail);
            b = p.lcm;
            shift(b, fj.lead, fj.trail);
            orient(a, b);
        } else {
            break;
        }
        if (!top_reduce(a, b)) {
            ++stats_.zero_reductions;
            continue;
        }
        if (strip_) {
            bool stripped = false;
            for (std::size_t i = 0; i < n_; ++i) {
                auto c = std::min(a[i], b[i]);
                if (c) {
                    a[i] -= c;
                    b[i] -= c;
                    stripped = true;
                }
            }
            if (stripped && !top_reduce(a, b)) continue;
        }
        insert(std::move(a), std::move(b));
    }
    pending_.clear();

    // Interreduce: leads are already minimal; bring trails to normal form.
    std::vector<DenseBinomial> gb;
    for (auto idx : basis_) gb.push_back({elems_[idx].lead, elems_[idx].trail});
    std::vector<std::uint64_t> masks;
    for (const auto& g : gb) masks.push_back(mask_of(g.lead));
    for (auto& g : gb) {
        bool changed = true;
        while (changed) {
            check_deadline();
            changed = false;
            auto tm = mask_of(g.trail);
            for (std::size_t k = 0; k < gb.size(); ++k) {
                if (divides(gb[k].lead, masks[k], g.trail, tm)) {
                    shift(g.trail, gb[k].lead, gb[k].trail);
                    changed = true;
                    break;
                }
            }
        }
    }
    std::sort(gb.begin(), gb.end(),
              [this](const DenseBinomial& x, const DenseBinomial& y) { return order_.compare(x.lead, y.lead) > 0; });
    gb.erase(std::unique(gb.begin(), gb.end(),
                         [](const DenseBinomial& x, const DenseBinomial& y) { return x.lead == y.lead; }),
             gb.end());
    return gb;
}

DenseExp dense_normal_form(DenseExp m, const std::vector<DenseBinomial>& gb) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& g : gb) {
            if (divides_plain(g.lead, m)) {
                shift(m, g.lead, g.trail);
                changed = true;
                break;
            }
        }
    }
    return m;
}

bool certify_groebner(const std::vector<DenseBinomial>& gb, const DenseOrder& order) {
    for (std::size_t i = 0; i < gb.size(); ++i) {
        if (order.compare(gb[i].lead, gb[i].trail) <= 0) return false;
        for (std::size_t j = 0; j < gb.size(); ++j)
            if (i != j && divides_plain(gb[j].lead, gb[i].lead)) return false;
    }
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            if (coprime(gb[i].lead, gb[j].lead)) continue;
            auto l = lcm_of(gb[i].lead, gb[j].lead);
            auto a = l;
            shift(a, gb[i].lead, gb[i].trail);
            auto b = l;
            shift(b, gb[j].lead, gb[j].trail);
            if (dense_normal_form(a, gb) != dense_normal_form(b, gb)) return false;
        }
    return true;
}

}  // namespace invchain
