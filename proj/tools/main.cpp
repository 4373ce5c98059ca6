#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "invchain/algebra/orbit.hpp"
#include "invchain/chain/count.hpp"
#include "invchain/chain/matrices.hpp"
#include "invchain/chain/mu.hpp"
#include "invchain/chain/pipeline.hpp"
#include "invchain/error.hpp"
#include "invchain/io/cache.hpp"
#include "invchain/io/serialize.hpp"
#include "invchain/lattice/decompose.hpp"
#include "invchain/lattice/normal_form.hpp"
#include "invchain/wpo/dlex.hpp"

using namespace invchain;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kFailed = 2, kTimeout = 3, kBadInput = 4 };

struct RunConfig {
    std::string order = "degrevlex";
    std::size_t witness_bound = 8;
    double timeout = 1800;
    std::string cache_dir;
    std::string format = "json";
    std::size_t workers = 1;

    bool text() const { return format == "text"; }
    TermOrder term_order() const { return TermOrder::parse(order); }
    GbOptions gb() const { return GbOptions::with_timeout(timeout); }
    std::optional<ResultCache> cache() const {
        if (cache_dir.empty()) return std::nullopt;
        return ResultCache(cache_dir);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// "1,2;3,1" -> {{1,2},{3,1}}
std::vector<Tuple> parse_tuples(const std::string& text) {
    std::vector<Tuple> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        Tuple t;
        for (auto x : parse_int_list(part)) {
            if (x < 1) throw InputError("tuple entries must be positive, got " + std::to_string(x));
            t.push_back(static_cast<Index>(x));
        }
        if (t.empty()) throw InputError("empty tuple in '" + text + "'");
        out.push_back(std::move(t));
    }
    if (out.empty()) throw InputError("no tuple in '" + text + "'");
    return out;
}

Tuple parse_tuple(const std::string& text) {
    auto ts = parse_tuples(text);
    if (ts.size() != 1) throw InputError("expected a single tuple, got '" + text + "'");
    return ts[0];
}

std::vector<std::int64_t> parse_alpha(const std::string& text) {
    auto a = parse_int_list(text);
    if (a.empty()) throw InputError("alpha is empty");
    return a;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A JSON array of binomials or a generators report.
std::vector<Binomial> load_generators(const std::string& path) {
    auto text = read_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    if (j.is_object() && j.contains("generators")) return parse_chain_json(text).binomials();
    return parse_binomials_json(text);
}

std::vector<Binomial> collect_generators(const std::vector<std::string>& texts, const std::string& file) {
    std::vector<Binomial> G;
    for (const auto& t : texts) G.push_back(Binomial::parse(t));
    if (!file.empty()) {
        auto more = load_generators(file);
        G.insert(G.end(), more.begin(), more.end());
    }
    return G;
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
    if (cfg.text())
        std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    else
        std::cout << j.dump(2) << "\n";
}

json verified_json(const std::map<std::size_t, bool>& v) {
    json out = json::object();
    for (const auto& [n, ok] : v) out[std::to_string(n)] = ok;
    return out;
}

// ---- subcommands ----

int cmd_generators(const RunConfig& cfg, const std::vector<std::int64_t>& alpha, bool no_prune,
                   const std::string& method, const std::vector<std::size_t>& verify_at, const std::string& output) {
    auto spec = normalize_spec(alpha);
    ChainOptions opts;
    opts.order = cfg.term_order();
    opts.gb = cfg.gb();
    opts.prune = !no_prune;
    opts.method = parse_verify_method(method);
    opts.verify_at = verify_at;
    opts.workers = cfg.workers;

    std::string key = "chain|" + spec.to_string() + "|" + opts.order.name() + "|" + (opts.prune ? "prune" : "keep") +
                      "|" + method + "|";
    for (auto n : verify_at) key += std::to_string(n) + ",";
    key += "|" + engine_version();

    auto cache = cfg.cache();
    std::string doc;
    bool hit = false;
    const auto t0 = std::chrono::steady_clock::now();
    if (cache) {
        if (auto d = cache->load("chain", key)) {
            doc = *d;
            hit = true;
        }
    }
    if (!hit) {
        doc = to_json(chain_generators(spec, opts));
        if (cache) cache->store("chain", key, doc);
    }
    auto set = parse_chain_json(doc);
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw InputError("cannot write " + output);
        out << doc << "\n";
    }

    std::ostringstream text;
    text << "alpha " << spec.to_string() << " (given " << MonomialSpec::raw(spec.original).to_string() << "), N = "
         << set.bound << "\n";
    text << "extended quadrics " << set.stats.extended_quadrics << ", orbits " << set.stats.extended_orbits
         << ", after mu " << set.stats.plain_orbits << ", after pruning " << set.stats.after_pruning << "\n";
    for (std::size_t i = 0; i < set.generators.size(); ++i) {
        const auto& g = set.generators[i];
        text << "g" << i + 1 << " = " << g.binomial.to_string();
        text << (g.from_eta_kernel ? "   [eta kernel]" : "   [from " + g.source.to_string() + "]") << "\n";
    }
    for (const auto& [n, ok] : set.verified) text << "verified at n=" << n << ": " << (ok ? "yes" : "NO") << "\n";
    text << (hit ? "cache hit" : "computed") << " in " << seconds_since(t0) << " s";
    if (cfg.text())
        emit(cfg, {}, text.str());
    else
        std::cout << doc << "\n";
    return set.all_verified() ? kOk : kFailed;
}

struct NRange {
    std::size_t from = 0, to = 0;
};

NRange parse_range(const std::string& text) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            auto n = std::stoul(text);
            return {n, n};
        }
        return {std::stoul(text.substr(0, pos)), std::stoul(text.substr(pos + 2))};
    } catch (const std::logic_error&) {
        throw InputError("bad n range '" + text + "' (use 3..6 or 4)");
    }
}

int cmd_table(const RunConfig& cfg, const std::vector<std::string>& alphas, const std::string& range,
              const std::string& measure) {
    auto r = parse_range(range);
    const bool generators = measure == "generators";
    auto cache = cfg.cache();
    json cells = json::array();
    std::ostringstream text;
    text << "alpha";
    for (auto n = r.from; n <= r.to; ++n) text << "\tn=" << n;
    text << "\n";
    bool any_timeout = false;
    for (const auto& a : alphas) {
        auto spec = MonomialSpec::raw(parse_alpha(a));
        text << spec.to_string();
        std::ostringstream times;
        for (auto n = r.from; n <= r.to; ++n) {
            const auto t0 = std::chrono::steady_clock::now();
            json cell = {{"alpha", spec.alpha}, {"n", n}};
            try {
                if (n <= spec.k()) throw PreconditionError("degree complexity needs n > k");
                ToricOptions topts;
                topts.gb = cfg.gb();
                bool hit = false;
                auto gb = cached_toric_ideal(build_matrix_A(spec, n), cfg.term_order(), topts,
                                             cache ? &*cache : nullptr, &hit);
                cell["degree"] = gb.max_degree();
                cell["basis_size"] = gb.size();
                cell["cached"] = hit;
                if (generators) {
                    CountOptions co;
                    co.degree_limit = gb.max_degree();
                    co.gb = cfg.gb();
                    auto c = count_minimal_generators(spec, n, GeneratorSide::Plain, co);
                    cell["generator_degree"] = c.by_degree.empty() ? 0 : c.by_degree.rbegin()->first;
                    cell["minimal_generators"] = c.total;
                }
                text << "\t" << (generators ? cell["generator_degree"] : cell["degree"]).get<Exponent>();
            } catch (const TimeoutError&) {
                any_timeout = true;
                cell["degree"] = nullptr;
                text << "\t-";
            }
            cell["seconds"] = seconds_since(t0);
            times << " " << cell["seconds"].get<double>();
            cells.push_back(cell);
        }
        text << "\t(s:" << times.str() << ")\n";
    }
    emit(cfg, {{"order", cfg.order}, {"measure", measure}, {"cells", cells}, {"complete", !any_timeout}}, text.str());
    return kOk;
}

int cmd_express(const RunConfig& cfg, const std::string& alpha, std::size_t m, const std::string& target,
                const std::vector<std::string>& gens, const std::string& file, std::size_t max_m) {
    auto spec = normalize_spec(parse_alpha(alpha));
    auto G = collect_generators(gens, file);
    if (G.empty()) throw InputError("no generators given");
    ExpressOptions opts;
    opts.max_m = max_m;
    auto e = express_equivariant(Binomial::parse(target), G, spec, m, opts);
    std::ostringstream text;
    text << e.target.to_string() << "\n  =";
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const auto& t = e.terms[i];
        text << (i ? "\n  " : " ") << (t.sign < 0 ? "- " : "+ ");
        if (std::abs(t.sign) != 1) text << std::abs(t.sign) << " * ";
        text << "[" << t.coefficient.to_string() << "] * " << t.sigma.to_string() << " g" << t.generator + 1;
    }
    text << "\nverified: " << (e.verified ? "yes" : "NO");
    emit(cfg, json::parse(to_json(e)), text.str());
    return e.verified ? kOk : kFailed;
}

int cmd_mu(const RunConfig& cfg, const std::string& alpha, std::size_t n, const std::vector<std::string>& ws,
           bool all) {
    auto spec = normalize_spec(parse_alpha(alpha));
    std::vector<Variable> vars;
    if (all)
        vars = extended_ring(spec, n).variables();
    else
        for (const auto& w : ws)
            for (const auto& t : parse_tuples(w)) vars.push_back(Variable::extended(MultiIndex(t)));
    if (vars.empty()) throw InputError("give --w or --all");
    json rows = json::array();
    std::ostringstream text;
    std::size_t ok = 0;
    for (const auto& v : vars) {
        auto mu = construct_mu(v, spec, n);
        bool good = evaluate_phi(mu, spec, n) == v.multiset().counts(n);
        ok += good;
        rows.push_back({{"w", v.to_string()}, {"mu", mu.to_string()}, {"image_ok", good}});
        text << "mu(x" << v.to_string() << ") = " << mu.to_string() << (good ? "" : "   IMAGE MISMATCH") << "\n";
    }
    text << ok << "/" << vars.size() << " images agree";
    emit(cfg, {{"alpha", spec.alpha}, {"n", n}, {"values", rows}, {"all_ok", ok == vars.size()}}, text.str());
    return ok == vars.size() ? kOk : kFailed;
}

int cmd_decompose(const RunConfig& cfg, const std::string& beta_text, const std::string& alpha) {
    auto spec = MonomialSpec::raw(parse_alpha(alpha));
    auto beta = parse_int_list(beta_text);
    const auto n = beta.size();
    auto d = integer_decompose(beta, spec, n);
    json terms = json::array();
    for (const auto& t : d.terms)
        terms.push_back({{"coefficient", t.coefficient}, {"column", t.column}, {"tuple", t.label.to_string()}});
    const bool ok = d.sum(n) == beta;
    std::ostringstream text;
    text << vec_to_string(beta) << " = " << d.to_string() << "\nbezout " << vec_to_string(bezout(spec.alpha))
         << ", re-sum " << (ok ? "ok" : "FAILED");
    emit(cfg, {{"beta", beta}, {"alpha", spec.alpha}, {"bezout", bezout(spec.alpha)}, {"terms", terms}, {"resum_ok", ok}},
         text.str());
    return ok ? kOk : kFailed;
}

int cmd_order(const RunConfig& cfg, const std::string& relation, const std::vector<std::string>& args) {
    if (relation == "dlex") {
        if (args.size() != 2) throw InputError("usage: order dlex S T");
        auto c = dlex_compare(parse_tuple(args[0]), parse_tuple(args[1]));
        std::string sym = c < 0 ? "<" : c > 0 ? ">" : "=";
        emit(cfg, {{"relation", sym}}, args[0] + " " + sym + " " + args[1]);
        return kOk;
    }
    if (relation == "below") {
        if (args.size() != 1) throw InputError("usage: order below T");
        json list = json::array();
        std::string text;
        for (const auto& t : tuples_below(parse_tuple(args[0]))) {
            list.push_back(tuple_to_string(t));
            text += tuple_to_string(t) + "\n";
        }
        emit(cfg, {{"below", list}}, text);
        return kOk;
    }
    if (relation == "preceq") {
        if (args.size() != 2) throw InputError("usage: order preceq S T");
        auto s = parse_tuple(args[0]);
        auto t = parse_tuple(args[1]);
        auto r = preceq_witness(s, t, cfg.witness_bound);
        json j = {{"s", tuple_to_string(s)}, {"t", tuple_to_string(t)}, {"found", r.found}, {"search_bound", r.search_bound}};
        std::string text = r.found ? "witness " + r.witness->to_string() : "no witness";
        if (r.found) j["witness"] = r.witness->to_string();
        emit(cfg, j, text);
        return kOk;
    }
    throw InputError("unknown relation '" + relation + "' (dlex, below, preceq)");
}

int cmd_snf(const RunConfig& cfg, const std::string& alpha, std::size_t n, const std::string& which) {
    auto spec = MonomialSpec::raw(parse_alpha(alpha));
    auto A = which == "B" ? build_matrix_B(spec, n) : build_matrix_A(spec, n);
    auto r = snf(A);
    const bool ok = r.U * A * *r.V == r.D;
    json diag = json::array();
    std::string text = "diag(";
    for (std::size_t i = 0; i < r.rank; ++i) {
        diag.push_back(r.D(i, i).get_str());
        text += (i ? "," : "") + r.D(i, i).get_str();
    }
    text += ")";
    if (!ok) text += "   TRANSFORM CHECK FAILED";
    emit(cfg, {{"matrix", which}, {"rows", A.rows()}, {"cols", A.cols()}, {"diagonal", diag}, {"rank", r.rank},
               {"transform_ok", ok}},
         text);
    return ok ? kOk : kFailed;
}

int cmd_verify(const RunConfig& cfg, const std::string& alpha, std::size_t n, const std::vector<std::string>& gens,
               const std::string& file, const std::string& method) {
    auto spec = normalize_spec(parse_alpha(alpha));
    auto G = collect_generators(gens, file);
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = verify_generating_set(G, spec, n, parse_verify_method(method), cfg.gb());
    std::ostringstream text;
    text << G.size() << " generators, alpha " << spec.to_string() << ", n=" << n << " (" << method
         << "): " << (ok ? "generate" : "do NOT generate") << " the Laurent toric ideal";
    emit(cfg, {{"alpha", spec.alpha}, {"n", n}, {"method", method}, {"generators", G.size()}, {"verified", ok},
               {"seconds", seconds_since(t0)}},
         text.str());
    return ok ? kOk : kFailed;
}

int cmd_matrix(const RunConfig& cfg, const std::string& alpha, std::size_t n, const std::string& which, bool kernel) {
    auto spec = MonomialSpec::raw(parse_alpha(alpha));
    auto A = which == "B" ? build_matrix_B(spec, n) : build_matrix_A(spec, n);
    if (!kernel) {
        emit(cfg, json::parse(to_json(A)), A.to_string());
        return kOk;
    }
    IntMatrix K = IntMatrix::from_rows(kernel_basis(A), A.cols());
    K.set_labels(A.labels());
    emit(cfg, json::parse(to_json(K)), K.to_string());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant chains of Laurent toric ideals induced by a monomial"};
    app.require_subcommand(1);
    RunConfig cfg;
    if (const char* env = std::getenv("INVCHAIN_CACHE_DIR")) cfg.cache_dir = env;
    app.add_option("--order", cfg.order, "Term order")
        ->check(CLI::IsMember({"degrevlex", "deglex", "lex"}))
        ->capture_default_str();
    app.add_option("--timeout", cfg.timeout, "Seconds per Groebner computation (0 = none)")->capture_default_str();
    app.add_option("--cache-dir", cfg.cache_dir, "Result cache directory (default $INVCHAIN_CACHE_DIR)");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--workers", cfg.workers, "Threads for the pipeline")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--witness-bound", cfg.witness_bound, "Largest M for the witness search")->capture_default_str();
    app.fallthrough();

    std::function<int()> run;

    auto* gen = app.add_subcommand("generators", "Chain generators up to symmetry, verified");
    std::vector<std::int64_t> g_alpha;
    bool g_no_prune = false;
    std::string g_method = "lattice", g_output;
    std::vector<std::size_t> g_verify_at;
    gen->add_option("alpha", g_alpha, "Exponents of y^alpha")->required();
    gen->add_flag("--no-prune", g_no_prune, "Keep every orbit representative");
    gen->add_option("--verify-method", g_method, "lattice, saturation or both")->capture_default_str();
    gen->add_option("--verify-at", g_verify_at, "Values of n to certify (default N and N+1)")->delimiter(',');
    gen->add_option("--output", g_output, "Also write the JSON report here");
    gen->callback([&] { run = [&] { return cmd_generators(cfg, g_alpha, g_no_prune, g_method, g_verify_at, g_output); }; });

    auto* tab = app.add_subcommand("table", "Degree-complexity table");
    std::vector<std::string> t_alpha;
    std::string t_range = "3..6";
    std::string t_measure = "basis";
    tab->add_option("--alpha", t_alpha, "Exponent vector, e.g. 2,1; repeatable")->required();
    tab->add_option("--n", t_range, "Range such as 3..6")->capture_default_str();
    tab->add_option("--measure", t_measure, "basis: reduced basis degree; generators: minimal generator degree")
        ->check(CLI::IsMember({"basis", "generators"}))
        ->capture_default_str();
    tab->callback([&] { run = [&] { return cmd_table(cfg, t_alpha, t_range, t_measure); }; });

    auto* ex = app.add_subcommand("express", "Write a binomial through permuted generators");
    std::string e_alpha, e_target, e_file;
    std::size_t e_m = 0, e_max = 10;
    std::vector<std::string> e_gens;
    ex->add_option("--alpha", e_alpha)->required();
    ex->add_option("--m", e_m)->required();
    ex->add_option("--target", e_target, "Binomial such as \"(3,9)*(7,9) - (3,7)*(9,7)\"")->required();
    ex->add_option("--generator", e_gens, "Generator binomial; repeatable");
    ex->add_option("--generators-file", e_file, "JSON list of binomials or a generators report");
    ex->add_option("--max-m", e_max, "Largest m accepted")->capture_default_str();
    ex->callback([&] { run = [&] { return cmd_express(cfg, e_alpha, e_m, e_target, e_gens, e_file, e_max); }; });

    auto* mu = app.add_subcommand("mu", "Monomial quotients mu(x_w)");
    std::string m_alpha;
    std::size_t m_n = 0;
    std::vector<std::string> m_w;
    bool m_all = false;
    mu->add_option("--alpha", m_alpha)->required();
    mu->add_option("--n", m_n)->required();
    mu->add_option("--w", m_w, "Multisets such as 1,1,2;1,2,3; repeatable");
    mu->add_flag("--all", m_all, "Every extended variable over [n]");
    mu->callback([&] { run = [&] { return cmd_mu(cfg, m_alpha, m_n, m_w, m_all); }; });

    auto* dec = app.add_subcommand("decompose", "Integer decomposition over permutations of alpha");
    std::string d_beta, d_alpha;
    dec->add_option("--beta", d_beta)->required();
    dec->add_option("--alpha", d_alpha)->required();
    dec->callback([&] { run = [&] { return cmd_decompose(cfg, d_beta, d_alpha); }; });

    auto* ord = app.add_subcommand("order", "dlex comparison, tuples below, witness search");
    std::string o_rel;
    std::vector<std::string> o_args;
    ord->add_option("relation", o_rel, "dlex, below or preceq")->required();
    ord->add_option("tuples", o_args, "Tuples such as 2,3");
    ord->callback([&] { run = [&] { return cmd_order(cfg, o_rel, o_args); }; });

    auto* sn = app.add_subcommand("snf", "Smith normal form of A_n or B_n");
    std::string s_alpha, s_which = "A";
    std::size_t s_n = 0;
    sn->add_option("--alpha", s_alpha)->required();
    sn->add_option("--n", s_n)->required();
    sn->add_option("--matrix", s_which)->check(CLI::IsMember({"A", "B"}))->capture_default_str();
    sn->callback([&] { run = [&] { return cmd_snf(cfg, s_alpha, s_n, s_which); }; });

    auto* ver = app.add_subcommand("verify", "Check that generators give the Laurent toric ideal at n");
    std::string v_alpha, v_file, v_method = "lattice";
    std::size_t v_n = 0;
    std::vector<std::string> v_gens;
    ver->add_option("--alpha", v_alpha)->required();
    ver->add_option("--n", v_n)->required();
    ver->add_option("--generator", v_gens, "Generator binomial; repeatable");
    ver->add_option("--generators-file", v_file, "JSON list of binomials or a generators report");
    ver->add_option("--method", v_method, "lattice, saturation or both")->capture_default_str();
    ver->callback([&] { run = [&] { return cmd_verify(cfg, v_alpha, v_n, v_gens, v_file, v_method); }; });

    auto* mat = app.add_subcommand("matrix", "Print A_n or B_n, or a kernel basis");
    std::string x_alpha, x_which = "A";
    std::size_t x_n = 0;
    bool x_kernel = false;
    mat->add_option("--alpha", x_alpha)->required();
    mat->add_option("--n", x_n)->required();
    mat->add_option("--matrix", x_which)->check(CLI::IsMember({"A", "B"}))->capture_default_str();
    mat->add_flag("--kernel", x_kernel, "Rows of a kernel basis instead");
    mat->callback([&] { run = [&] { return cmd_matrix(cfg, x_alpha, x_n, x_which, x_kernel); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }
    try {
        return run();
    } catch (const TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return kTimeout;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kFailed;
    } catch (const MembershipError& e) {
        std::cerr << "not a member: " << e.what() << "\n";
        return kFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
