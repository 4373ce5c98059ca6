#include "invchain/groebner/ideal.hpp"

#include <algorithm>

#include "invchain/error.hpp"
#include "invchain/lattice/normal_form.hpp"

namespace invchain {

PolyRing::PolyRing(std::vector<Variable> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    for (std::size_t i = 0; i < vars_.size(); ++i) index_.emplace(vars_[i], i);
}

PolyRing PolyRing::ordered(std::vector<Variable> vars) {
    PolyRing r;
    r.vars_ = std::move(vars);
    for (std::size_t i = 0; i < r.vars_.size(); ++i)
        if (!r.index_.emplace(r.vars_[i], i).second) throw InputError("repeated ring variable " + r.vars_[i].to_string());
    return r;
}

PolyRing PolyRing::of(const std::vector<Binomial>& gens) {
    std::vector<Variable> vars;
    for (const auto& g : gens) {
        auto vs = g.variables();
        vars.insert(vars.end(), vs.begin(), vs.end());
    }
    return PolyRing(std::move(vars));
}

std::size_t PolyRing::index_of(const Variable& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw InputError("variable " + v.to_string() + " is not in the ring");
    return it->second;
}

DenseExp PolyRing::dense(const Monomial& m) const {
    DenseExp e(vars_.size(), 0);
    for (const auto& [v, x] : m.terms()) e[index_of(v)] = static_cast<std::int32_t>(x);
    return e;
}

Monomial PolyRing::monomial(const DenseExp& e) const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) terms.emplace_back(vars_[i], e[i]);
    return Monomial(std::move(terms));
}

BinomialIdeal BinomialIdeal::of(std::vector<Binomial> gens, TermOrder order) {
    auto ring = PolyRing::of(gens);
    return {std::move(ring), std::move(gens), order};
}

bool BinomialIdeal::is_homogeneous() const {
    return std::all_of(generators.begin(), generators.end(), [](const Binomial& b) { return b.is_homogeneous(); });
}

GbOptions GbOptions::with_timeout(double seconds) {
    GbOptions o;
    if (seconds > 0)
        o.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
    return o;
}

GroebnerBasis::GroebnerBasis(PolyRing ring, TermOrder order, std::vector<DenseBinomial> elems)
    : ring_(std::move(ring)), order_(order), dense_(std::move(elems)) {}

std::vector<Binomial> GroebnerBasis::elements() const {
    std::vector<Binomial> out;
    out.reserve(dense_.size());
    for (const auto& g : dense_) out.emplace_back(ring_.monomial(g.lead), ring_.monomial(g.trail));
    return out;
}

Exponent GroebnerBasis::max_degree() const {
    Exponent best = 0;
    for (const auto& g : dense_) {
        Exponent a = 0, b = 0;
        for (auto x : g.lead) a += x;
        for (auto x : g.trail) b += x;
        best = std::max({best, a, b});
    }
    return best;
}

Monomial GroebnerBasis::normal_form(const Monomial& m) const {
    return ring_.monomial(dense_normal_form(ring_.dense(m), dense_));
}

bool GroebnerBasis::contains(const Binomial& b) const {
    return dense_normal_form(ring_.dense(b.lead()), dense_) == dense_normal_form(ring_.dense(b.trail()), dense_);
}

bool GroebnerBasis::contains_all(const std::vector<Binomial>& bs) const {
    return std::all_of(bs.begin(), bs.end(), [this](const Binomial& b) { return contains(b); });
}

namespace {

std::vector<DenseBinomial> run_engine(std::size_t n, const DenseOrder& order, const std::vector<DenseBinomial>& gens,
                                      const GbOptions& opts, bool strip = false) {
    BinomialBuchberger engine(n, order);
    engine.set_strip_common_factors(strip);
    engine.set_deadline(opts.deadline);
    engine.set_degree_bound(opts.degree_bound);
    for (const auto& g : gens) engine.add_generator(g.lead, g.trail);
    auto gb = engine.run();
    if (opts.certify && !opts.degree_bound && !certify_groebner(gb, order))
        throw VerificationError("Groebner basis failed its S-pair certification");
    return gb;
}

std::vector<DenseBinomial> dense_generators(const BinomialIdeal& ideal) {
    std::vector<DenseBinomial> out;
    out.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators) out.push_back({ideal.ring.dense(g.lead()), ideal.ring.dense(g.trail())});
    return out;
}

/// Reorders coordinates: out[k] = in[layout[k]].
DenseExp relayout(const DenseExp& in, const std::vector<std::size_t>& layout) {
    DenseExp out(layout.size());
    for (std::size_t k = 0; k < layout.size(); ++k) out[k] = in[layout[k]];
    return out;
}

}  // namespace

GroebnerBasis reduced_gb(const BinomialIdeal& ideal, const GbOptions& opts) {
    DenseOrder order{ideal.order, 0};
    auto gb = run_engine(ideal.ring.size(), order, dense_generators(ideal), opts);
    return GroebnerBasis(ideal.ring, ideal.order, std::move(gb));
}

GroebnerBasis saturate(const BinomialIdeal& ideal, SaturationMethod method, const GbOptions& opts) {
    const std::size_t n = ideal.ring.size();
    auto gens = dense_generators(ideal);
    if (method == SaturationMethod::PerVariable && ideal.is_homogeneous()) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> layout;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i) layout.push_back(k);
            layout.push_back(i);
            std::vector<DenseBinomial> moved;
            moved.reserve(gens.size());
            for (const auto& g : gens) moved.push_back({relayout(g.lead, layout), relayout(g.trail, layout)});
            auto gb = run_engine(n, DenseOrder{TermOrder::degrevlex(), 0}, moved, opts, true);
            gens.clear();
            for (auto& g : gb) {
                auto k = std::min(g.lead[n - 1], g.trail[n - 1]);
                g.lead[n - 1] -= k;
                g.trail[n - 1] -= k;
                DenseBinomial back{DenseExp(n), DenseExp(n)};
                for (std::size_t p = 0; p < n; ++p) {
                    back.lead[layout[p]] = g.lead[p];
                    back.trail[layout[p]] = g.trail[p];
                }
                gens.push_back(std::move(back));
            }
        }
        auto gb = run_engine(n, DenseOrder{ideal.order, 0}, gens, opts);
        return GroebnerBasis(ideal.ring, ideal.order, std::move(gb));
    }

    // Extra variable t in front of the ring, eliminated by a block order.
    std::vector<DenseBinomial> ext;
    ext.reserve(gens.size() + 1);
    for (const auto& g : gens) {
        DenseBinomial e{DenseExp(n + 1, 0), DenseExp(n + 1, 0)};
        std::copy(g.lead.begin(), g.lead.end(), e.lead.begin() + 1);
        std::copy(g.trail.begin(), g.trail.end(), e.trail.begin() + 1);
        ext.push_back(std::move(e));
    }
    ext.push_back({DenseExp(n + 1, 1), DenseExp(n + 1, 0)});
    auto gb = run_engine(n + 1, DenseOrder{ideal.order, 1}, ext, opts);
    std::vector<DenseBinomial> kept;
    for (const auto& g : gb) {
        if (g.lead[0] || g.trail[0]) continue;
        kept.push_back({DenseExp(g.lead.begin() + 1, g.lead.end()), DenseExp(g.trail.begin() + 1, g.trail.end())});
    }
    auto out = run_engine(n, DenseOrder{ideal.order, 0}, kept, opts);
    return GroebnerBasis(ideal.ring, ideal.order, std::move(out));
}

bool laurent_equal(const BinomialIdeal& I, const BinomialIdeal& J, SaturationMethod method, const GbOptions& opts) {
    if (!(I.ring == J.ring)) throw InputError("laurent_equal: ideals live in different rings");
    BinomialIdeal J2 = J;
    J2.order = I.order;
    return saturate(I, method, opts) == saturate(J2, method, opts);
}

bool laurent_equal_lattice(const BinomialIdeal& I, const BinomialIdeal& J) {
    if (!(I.ring == J.ring)) throw InputError("laurent_equal_lattice: ideals live in different rings");
    auto lattice = [](const BinomialIdeal& X) {
        LatticeBasis L(X.ring.size());
        for (const auto& g : X.generators) {
            auto a = X.ring.dense(g.lead());
            auto b = X.ring.dense(g.trail());
            std::vector<std::int64_t> d(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
            L.add(d);
        }
        return L;
    };
    return lattice(I) == lattice(J);
}

DivisionTrace divide_with_trace(const Binomial& f, const GroebnerBasis& G) {
    const auto& ring = G.ring();
    const auto& gb = G.dense();
    DivisionTrace trace;
    auto reduce = [&](DenseExp m, int sign) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 0; k < gb.size(); ++k) {
                const auto& g = gb[k];
                bool div = true;
                for (std::size_t i = 0; i < m.size() && div; ++i) div = g.lead[i] <= m[i];
                if (!div) continue;
                DenseExp mult(m.size());
                for (std::size_t i = 0; i < m.size(); ++i) {
                    mult[i] = m[i] - g.lead[i];
                    m[i] = mult[i] + g.trail[i];
                }
                trace.steps.push_back({k, ring.monomial(mult), sign});
                changed = true;
                break;
            }
        }
        return m;
    };
    auto na = reduce(ring.dense(f.lead()), +1);
    auto nb = reduce(ring.dense(f.trail()), -1);
    if (na != nb) trace.remainder = Binomial(ring.monomial(na), ring.monomial(nb));

    auto lhs = LaurentPolynomial::of(f);
    if (trace.remainder) {
        lhs.add(trace.remainder->lead().to_laurent(), -1);
        lhs.add(trace.remainder->trail().to_laurent(), 1);
    }
    if (!(expand_trace(trace, G) == lhs)) throw VerificationError("division trace does not re-expand to f - r");
    return trace;
}

LaurentPolynomial expand_trace(const DivisionTrace& trace, const GroebnerBasis& G) {
    const auto& ring = G.ring();
    LaurentPolynomial p;
    for (const auto& s : trace.steps) {
        const auto& g = G.dense()[s.generator];
        LaurentElement e(Binomial(ring.monomial(g.lead), ring.monomial(g.trail)));
        p.add_multiple(s.sign, s.multiplier.to_laurent(), e);
    }
    return p;
}

}  // namespace invchain
