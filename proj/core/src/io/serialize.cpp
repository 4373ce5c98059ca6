#include "invchain/io/serialize.hpp"

#include <json.hpp>

#include "invchain/error.hpp"

namespace invchain {

using nlohmann::json;

namespace {

template <class M>
json monomial_json(const M& m) {
    json out = json::array();
    for (const auto& [v, e] : m.terms()) out.push_back({v.to_string(), e});
    return out;
}

std::vector<Term> terms_of(const json& j) {
    if (!j.is_array()) throw InputError("monomial must be an array of [variable, exponent] pairs");
    std::vector<Term> t;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_number_integer())
            throw InputError("bad monomial term " + p.dump());
        t.emplace_back(Variable::parse(p[0].get<std::string>()), p[1].get<Exponent>());
    }
    return t;
}

json binomial_json(const Binomial& b) { return {{"lead", monomial_json(b.lead())}, {"trail", monomial_json(b.trail())}}; }

Binomial binomial_of(const json& j) {
    if (!j.is_object() || !j.contains("lead") || !j.contains("trail")) throw InputError("binomial needs lead and trail");
    return Binomial(Monomial(terms_of(j["lead"])), Monomial(terms_of(j["trail"])));
}

json laurent_json(const LaurentElement& e) {
    return {{"lead", monomial_json(e.lead())}, {"trail", monomial_json(e.trail())}};
}

LaurentElement laurent_of(const json& j) {
    if (!j.is_object() || !j.contains("lead") || !j.contains("trail")) throw InputError("element needs lead and trail");
    return {LaurentMonomial(terms_of(j["lead"])), LaurentMonomial(terms_of(j["trail"]))};
}

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError(std::string("unexpected JSON shape: ") + e.what());
    }
}

json permutation_json(const Permutation& p) { return std::vector<Index>(p.images().begin(), p.images().end()); }

}  // namespace

std::string engine_version() { return "invchain 0.1.0"; }

std::string to_json(const Binomial& b) { return binomial_json(b).dump(); }

Binomial parse_binomial_json(const std::string& text) {
    return guarded([&] { return binomial_of(parse_or_throw(text)); });
}

std::string to_json(const std::vector<Binomial>& bs) {
    json out = json::array();
    for (const auto& b : bs) out.push_back(binomial_json(b));
    return out.dump();
}

std::vector<Binomial> parse_binomials_json(const std::string& text) {
    return guarded([&] {
        auto j = parse_or_throw(text);
        if (!j.is_array()) throw InputError("expected an array of binomials");
        std::vector<Binomial> out;
        for (const auto& b : j) out.push_back(binomial_of(b));
        return out;
    });
}

std::string to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
        rows.push_back(r);
    }
    json out = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
    if (m.has_labels()) {
        json labels = json::array();
        for (const auto& v : m.labels()) labels.push_back(v.to_string());
        out["labels"] = labels;
    }
    return out.dump();
}

IntMatrix parse_matrix_json(const std::string& text) {
    return guarded([&] {
        auto j = parse_or_throw(text);
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const auto& entries = j.at("entries");
        if (entries.size() != rows) throw InputError("matrix row count mismatch");
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            if (entries[i].size() != cols) throw InputError("matrix column count mismatch in row " + std::to_string(i));
            for (std::size_t c = 0; c < cols; ++c) {
                const auto& x = entries[i][c];
                std::string s = x.is_string() ? x.get<std::string>() : x.dump();
                try {
                    m(i, c) = Integer(s);
                } catch (const std::invalid_argument&) {
                    throw InputError("bad matrix entry '" + s + "'");
                }
            }
        }
        if (j.contains("labels")) {
            std::vector<Variable> labels;
            for (const auto& v : j["labels"]) labels.push_back(Variable::parse(v.get<std::string>()));
            m.set_labels(std::move(labels));
        }
        return m;
    });
}

std::string to_json(const GroebnerBasis& gb) {
    json ring = json::array();
    for (const auto& v : gb.ring().variables()) ring.push_back(v.to_string());
    json elems = json::array();
    for (const auto& b : gb.elements()) elems.push_back(binomial_json(b));
    return json{{"order", gb.order().name()}, {"ring", ring}, {"elements", elems}}.dump();
}

GroebnerBasis parse_gb_json(const std::string& text) {
    return guarded([&] {
        auto j = parse_or_throw(text);
        auto order = TermOrder::parse(j.at("order").get<std::string>());
        std::vector<Variable> vars;
        for (const auto& v : j.at("ring")) vars.push_back(Variable::parse(v.get<std::string>()));
        auto ring = PolyRing::ordered(std::move(vars));
        std::vector<DenseBinomial> dense;
        for (const auto& e : j.at("elements")) {
            auto b = binomial_of(e);
            dense.push_back({ring.dense(b.lead()), ring.dense(b.trail())});
        }
        return GroebnerBasis(std::move(ring), order, std::move(dense));
    });
}

std::string to_json(const ChainGeneratorSet& set) {
    json gens = json::array();
    for (const auto& g : set.generators)
        gens.push_back({{"laurent", laurent_json(g.laurent)},
                        {"binomial", binomial_json(g.binomial)},
                        {"text", g.binomial.to_string()},
                        {"source", binomial_json(g.source)},
                        {"eta_kernel", g.from_eta_kernel}});
    json verified = json::object();
    for (const auto& [n, ok] : set.verified) verified[std::to_string(n)] = ok;
    json stats = {{"extended_quadrics", set.stats.extended_quadrics},
                  {"extended_orbits", set.stats.extended_orbits},
                  {"plain_orbits", set.stats.plain_orbits},
                  {"after_pruning", set.stats.after_pruning}};
    return json{{"alpha", set.spec.alpha},
                {"original", set.spec.original},
                {"bound", set.bound},
                {"generators", gens},
                {"stats", stats},
                {"verified", verified},
                {"engine", engine_version()}}
        .dump(2);
}

ChainGeneratorSet parse_chain_json(const std::string& text) {
    return guarded([&] {
        auto j = parse_or_throw(text);
        ChainGeneratorSet set;
        set.spec = MonomialSpec::raw(j.at("alpha").get<std::vector<std::int64_t>>());
        set.spec.original = j.at("original").get<std::vector<std::int64_t>>();
        set.spec.normalized = true;
        set.bound = j.at("bound").get<std::size_t>();
        for (const auto& g : j.at("generators"))
            set.generators.push_back({laurent_of(g.at("laurent")), binomial_of(g.at("binomial")),
                                      binomial_of(g.at("source")), g.at("eta_kernel").get<bool>()});
        const auto& st = j.at("stats");
        set.stats.extended_quadrics = st.at("extended_quadrics").get<std::size_t>();
        set.stats.extended_orbits = st.at("extended_orbits").get<std::size_t>();
        set.stats.plain_orbits = st.at("plain_orbits").get<std::size_t>();
        set.stats.after_pruning = st.at("after_pruning").get<std::size_t>();
        for (const auto& [k, v] : j.at("verified").items()) set.verified[std::stoul(k)] = v.get<bool>();
        return set;
    });
}

std::string to_json(const EquivariantExpression& e) {
    json terms = json::array();
    for (const auto& t : e.terms)
        terms.push_back({{"sign", t.sign},
                         {"coefficient", monomial_json(t.coefficient)},
                         {"sigma", permutation_json(t.sigma)},
                         {"cycles", t.sigma.to_string()},
                         {"generator", t.generator}});
    return json{{"target", binomial_json(e.target)}, {"terms", terms}, {"verified", e.verified}}.dump(2);
}

EquivariantExpression parse_expression_json(const std::string& text) {
    return guarded([&] {
        auto j = parse_or_throw(text);
        EquivariantExpression e;
        e.target = binomial_of(j.at("target"));
        for (const auto& t : j.at("terms"))
            e.terms.push_back({t.at("sign").get<std::int64_t>(), LaurentMonomial(terms_of(t.at("coefficient"))),
                               Permutation::from_images(t.at("sigma").get<std::vector<Index>>()),
                               t.at("generator").get<std::size_t>()});
        e.verified = j.at("verified").get<bool>();
        return e;
    });
}

}  // namespace invchain
