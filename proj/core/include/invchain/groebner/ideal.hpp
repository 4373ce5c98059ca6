#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "invchain/algebra/binomial.hpp"
#include "invchain/algebra/laurent_polynomial.hpp"
#include "invchain/groebner/engine.hpp"

namespace invchain {

/// An ordered set of variables. Position 0 holds the largest variable for the
/// term order, which is the variable smallest in dlex.
class PolyRing {
public:
    PolyRing() = default;
    /// Sorts and deduplicates.
    explicit PolyRing(std::vector<Variable> vars);
    /// All variables occurring in the binomials.
    static PolyRing of(const std::vector<Binomial>& gens);
    /// Keeps the given order (first = largest) instead of sorting.
    static PolyRing ordered(std::vector<Variable> vars);

    std::size_t size() const { return vars_.size(); }
    const std::vector<Variable>& variables() const { return vars_; }
    const Variable& variable(std::size_t i) const { return vars_[i]; }
    bool contains(const Variable& v) const { return index_.count(v) != 0; }
    std::size_t index_of(const Variable& v) const;

    /// Throws InputError if m uses a variable outside the ring.
    DenseExp dense(const Monomial& m) const;
    Monomial monomial(const DenseExp& e) const;

    friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.vars_ == b.vars_; }

private:
    std::vector<Variable> vars_;
    std::unordered_map<Variable, std::size_t, VariableHash> index_;
};

struct BinomialIdeal {
    PolyRing ring;
    std::vector<Binomial> generators;
    TermOrder order;

    /// Ring spanned by the generators' variables.
    static BinomialIdeal of(std::vector<Binomial> gens, TermOrder order = TermOrder::degrevlex());
    bool is_homogeneous() const;
};

struct GbOptions {
    std::optional<Clock::time_point> deadline;
    /// Re-run the S-pair check on the result.
    bool certify = false;
    /// Stop at this degree; see BinomialBuchberger::set_degree_bound.
    std::optional<std::int64_t> degree_bound;

    static GbOptions with_timeout(double seconds);
};

/// Reduced Groebner basis with marked leads (lead > trail).
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(PolyRing ring, TermOrder order, std::vector<DenseBinomial> elems);

    const PolyRing& ring() const { return ring_; }
    const TermOrder& order() const { return order_; }
    std::size_t size() const { return dense_.size(); }
    const std::vector<DenseBinomial>& dense() const { return dense_; }
    std::vector<Binomial> elements() const;
    Exponent max_degree() const;

    Monomial normal_form(const Monomial& m) const;
    bool contains(const Binomial& b) const;
    bool contains_all(const std::vector<Binomial>& bs) const;
    /// Structural equality of reduced bases over the same ring and order.
    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.ring_ == b.ring_ && a.order_ == b.order_ && a.dense_ == b.dense_;
    }

private:
    PolyRing ring_;
    TermOrder order_;
    std::vector<DenseBinomial> dense_;
};

GroebnerBasis reduced_gb(const BinomialIdeal& ideal, const GbOptions& opts = {});

enum class SaturationMethod {
    /// Adjoin t, add t * prod(x) - 1, eliminate t.
    ExtraVariable,
    /// For each x_i: degrevlex with x_i last, divide the basis by x_i. Needs
    /// homogeneous generators; other input falls back to ExtraVariable.
    PerVariable,
};

/// I : (prod of all ring variables)^infinity, returned as its reduced basis.
GroebnerBasis saturate(const BinomialIdeal& ideal, SaturationMethod method = SaturationMethod::PerVariable,
                       const GbOptions& opts = {});

/// I and J agree after inverting every variable: their saturations have
/// identical reduced bases. Throws InputError if the rings differ.
bool laurent_equal(const BinomialIdeal& I, const BinomialIdeal& J,
                   SaturationMethod method = SaturationMethod::PerVariable, const GbOptions& opts = {});

/// Same question answered through exponent lattices: for pure-difference
/// binomials, I^{+-} is the Laurent lattice ideal of the lattice spanned by
/// the generators' exponent differences, so equal Hermite bases decide it.
bool laurent_equal_lattice(const BinomialIdeal& I, const BinomialIdeal& J);

/// Generator index, multiplier and sign of one division step.
struct TraceStep {
    std::size_t generator;
    Monomial multiplier;
    int sign;
};

struct DivisionTrace {
    std::vector<TraceStep> steps;
    /// nullopt when the remainder is zero.
    std::optional<Binomial> remainder;
};

/// Divides f by G. f - remainder = sum sign * multiplier * G[generator],
/// checked by expansion before returning.
DivisionTrace divide_with_trace(const Binomial& f, const GroebnerBasis& G);

/// Expands a trace back to f - remainder.
LaurentPolynomial expand_trace(const DivisionTrace& trace, const GroebnerBasis& G);

}  // namespace invchain
