// kmw: weight-set calculator for highest-weight modules over Kac-Moody
// algebras, with an exact finite-type engine for cross-verification.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "kmw/enumerate.hpp"
#include "kmw/error.hpp"
#include "kmw/formulas.hpp"
#include "kmw/integrable.hpp"
#include "kmw/json_io.hpp"
#include "kmw/verify.hpp"

namespace {

using namespace kmw;

struct Args {
    std::string algebra;
    std::string lambda;
    std::string relations;
    std::string presentation;
    std::string j, i, mu, c, free_nodes;
    int height = 8;
    bool exhaustive = false;
    unsigned seed = 20240901;
    bool quick = false;
    int max_size = 2;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

ModulePresentation presentation_from(const Args& a) {
    if (!a.presentation.empty()) {
        // whole-presentation JSON, inline or from a file
        std::string text = a.presentation;
        if (!text.empty() && text.front() != '{') {
            std::ifstream in(text);
            require(in.good(), "ParseError", "cannot read presentation file '" + text + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        Json j = Json::parse(text, nullptr, false);
        require(!j.is_discarded(), "ParseError", "malformed presentation JSON");
        return parse_presentation_json(j);
    }
    ModulePresentation p;
    p.algebra = parse_algebra_arg(a.algebra);
    p.lambda = parse_lambda_csv(a.lambda);
    require(p.lambda.size() == p.algebra.n, "ParseError", "lambda rank mismatch");
    p.relations = parse_relations_arg(a.relations);
    p.height_bound = a.height;
    return p;
}

int run_roots(const Args& a) {
    const Gcm g = parse_algebra_arg(a.algebra);
    RootSet rs = positive_roots(g, a.height);
    if (!a.j.empty()) rs = parabolic_roots(rs, parse_nodes_csv(a.j, g.n));
    std::vector<Root> rows;
    if (!a.i.empty()) rows = unit_height_roots(rs, parse_nodes_csv(a.i, g.n));
    else rows = rs.roots;
    Json out;
    out["command"] = "roots";
    out["verified_height"] = a.height;
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json e;
        e["depth"] = depth_json(r.depth);
        e["kind"] = r.kind == RootKind::Real ? "real" : "imaginary";
        arr.push_back(std::move(e));
    }
    out["roots"] = std::move(arr);
    emit(out);
    return 0;
}

int run_weights(const Args& a, const std::string& kind) {
    Json out;
    out["command"] = "weights " + kind;
    out["verified_height"] = a.height;
    if (kind == "module") {
        QuotientModule v(presentation_from(a));
        const Gcm& g = v.presentation().algebra;
        const int h = v.presentation().height_bound;
        out["verified_height"] = h;
        out.update(weight_set_json(v.weights()));
        Json dims = Json::array();
        for (const auto& d : v.weights().depths()) dims.push_back(v.dim_at(d));
        out["dims"] = std::move(dims);
        out["integrability"] = nodes_json(v.integrability());
        // string-continuity gaps (mu +- alpha_i present, mu missing) are an
        // open problem; they are reported here, never judged
        Json gaps = Json::array();
        for (const auto& d : all_depths(g.n, h - 1)) {
            if (v.weights().contains(d)) continue;
            for (int i = 0; i < g.n; ++i) {
                auto above = d.minus(DepthVector::unit(g.n, i));
                if (!above || !v.weights().contains(*above)) continue;
                if (!v.weights().contains(d.plus_units(i, 1))) continue;
                Json e;
                e["depth"] = depth_json(d);
                e["node"] = i;
                gaps.push_back(std::move(e));
            }
        }
        out["string_gaps"] = std::move(gaps);
        emit(out);
        return 0;
    }
    const Gcm g = parse_algebra_arg(a.algebra);
    const HighestWeight lam = parse_lambda_csv(a.lambda);
    require(lam.size() == g.n, "ParseError", "lambda rank mismatch");
    if (kind == "verma") {
        TruncatedWeightSet s(lam, a.height);
        for (const auto& d : all_depths(g.n, a.height)) s.insert(d);
        out.update(weight_set_json(s));
    } else if (kind == "parabolic") {
        out.update(weight_set_json(parabolic_verma_weights(g, lam, parse_nodes_csv(a.j, g.n), a.height)));
    } else if (kind == "simple") {
        out.update(weight_set_json(simple_weights(g, lam, a.height)));
    } else {  // integrable
        out.update(weight_set_json(integrable_weights(g, lam, parse_nodes_csv(a.j, g.n), a.height)));
    }
    emit(out);
    return 0;
}

int run_jv(const Args& a) {
    QuotientModule v(presentation_from(a));
    const MembershipOracle oracle = MembershipOracle::from_module(v);
    const JvReport rep = compute_jv(oracle, v.presentation().algebra, a.height);
    Json out;
    out["command"] = "jv";
    out["jv"] = nodes_json(rep.jv);
    Json w = Json::array();
    for (const auto& s : rep.witnesses) w.push_back(nodes_json(s));
    out["witnesses"] = std::move(w);
    out["heights_checked"] = rep.heights_checked;
    out["verified_height"] = a.height;
    emit(out);
    return 0;
}

int run_check(const Args& a, const std::string& which) {
    QuotientModule v(presentation_from(a));
    const Gcm& g = v.presentation().algebra;
    const HighestWeight& lam = v.presentation().lambda;
    const MembershipOracle oracle = MembershipOracle::from_module(v);
    Json out;
    out["command"] = "check " + which;
    if (which == "thmA") {
        const NodeSet jl = j_lambda(lam);
        const TruncatedWeightSet ext = extend_thmA(v.weights().restrict_support(jl), g, lam, a.height);
        int gen_h = 0;
        const NodeSet jlc = g.all_nodes().minus(jl);
        if (!jlc.empty())
            for (const auto& r : unit_height_roots(positive_roots(g, a.height), jlc))
                gen_h = std::max(gen_h, r.depth.height());
        const int margin = a.height - gen_h;
        const auto lhs = v.weights().truncate(margin);
        const auto rhs = ext.truncate(margin);
        Json mism = Json::array();
        for (const auto& d : lhs.difference(rhs)) mism.push_back(depth_json(d));
        for (const auto& d : rhs.difference(lhs)) mism.push_back(depth_json(d));
        out["holds"] = mism.empty();
        out["verified_height"] = margin;
        out["mismatches"] = std::move(mism);
    } else if (which == "thmB") {
        const NodeSet j = parse_nodes_csv(a.j, g.n);
        const IntervalReport rep = interval_check(v, j, a.height);
        out["holds"] = rep.holds;
        out["max_surjects"] = rep.max_surjects;
        out["min_surjects"] = rep.min_surjects;
        out["verified_height"] = rep.verified_height;
        const TruncatedWeightSet lhs = v.weights().truncate(a.height);
        const TruncatedWeightSet rhs = parabolic_verma_weights(g, lam, j, a.height);
        Json mism = Json::array();
        for (const auto& d : lhs.difference(rhs)) mism.push_back(depth_json(d));
        for (const auto& d : rhs.difference(lhs)) mism.push_back(depth_json(d));
        out["counterexamples"] = std::move(mism);
    } else {  // thmC
        const NodeSet j = parse_nodes_csv(a.j, g.n);
        const MinkowskiReport rep = minkowski_holds(oracle, g, j, a.height);
        const JvReport jv = compute_jv(oracle, g, a.height);
        out["holds"] = rep.holds;
        out["verified_height"] = rep.verified_height;
        Json mism = Json::array();
        for (const auto& d : rep.mismatches) mism.push_back(depth_json(d));
        out["counterexamples"] = std::move(mism);
        out["jv"] = nodes_json(jv.jv);
        out["equivalence_consistent"] = (rep.holds == jv.jv.subset_of(j));
    }
    emit(out);
    return 0;
}

int run_slices(const Args& a) {
    QuotientModule v(presentation_from(a));
    const Gcm& g = v.presentation().algebra;
    const MembershipOracle oracle = MembershipOracle::from_module(v);
    const auto slices = slice_decompose(oracle, g, parse_nodes_csv(a.j, g.n), a.height);
    Json out;
    out["command"] = "slices";
    out["verified_height"] = a.height;
    Json arr = Json::array();
    for (const auto& [xi, s] : slices) {
        Json e;
        e["xi"] = depth_json(xi);
        Json depths = Json::array();
        for (const auto& d : s.depths()) depths.push_back(depth_json(d));
        e["depths"] = std::move(depths);
        arr.push_back(std::move(e));
    }
    out["slices"] = std::move(arr);
    emit(out);
    return 0;
}

int run_chain(const Args& a) {
    QuotientModule v(presentation_from(a));
    const Gcm& g = v.presentation().algebra;
    const MembershipOracle oracle = MembershipOracle::from_module(v);
    const DepthVector mu = parse_depth_csv(a.mu, g.n);
    const NodeSet j = a.j.empty() ? j_lambda(v.presentation().lambda) : parse_nodes_csv(a.j, g.n);
    Json out;
    out["command"] = "chain";
    out["verified_height"] = a.height;
    auto chain_json = [](const std::vector<ChainEntry>& chain) {
        Json arr = Json::array();
        for (const auto& e : chain) {
            Json x;
            x["depth"] = depth_json(e.depth);
            x["node"] = e.node;
            arr.push_back(std::move(x));
        }
        return arr;
    };
    if (a.exhaustive) {
        Json arr = Json::array();
        for (const auto& c : all_ascend_chains(oracle, g, mu, j, a.height, 200)) arr.push_back(chain_json(c));
        out["chains"] = std::move(arr);
    } else {
        out["chain"] = chain_json(ascend_chain(oracle, g, mu, j, a.height));
    }
    emit(out);
    return 0;
}

int run_enumerate(const Args& a) {
    const Gcm g = parse_algebra_arg(a.algebra);
    const HighestWeight lam = parse_lambda_csv(a.lambda);
    const NodeSet free = parse_nodes_csv(a.free_nodes, g.n);
    const DepthVector cvec = parse_depth_csv(a.c, free.size());
    std::map<int, int> c;
    for (int k = 0; k < free.size(); ++k) c[free.members()[k]] = cvec.c[k];
    const auto plans = enumerate_free(g, lam, free, c,
                                      a.exhaustive ? EnumerationMode::Exhaustive : EnumerationMode::Deterministic);
    Json out;
    out["command"] = "enumerate";
    Json arr = Json::array();
    for (const auto& p : plans) {
        Json e;
        Json ord = Json::array();
        for (int i : p.ordering) ord.push_back(i);
        e["ordering"] = std::move(ord);
        e["terminal_independent"] = nodes_json(p.terminal_independent);
        arr.push_back(std::move(e));
    }
    out["plans"] = std::move(arr);
    emit(out);
    return 0;
}

int run_bound(const Args& a) {
    QuotientModule v(presentation_from(a));
    const Gcm& g = v.presentation().algebra;
    const MembershipOracle oracle = MembershipOracle::from_module(v);
    const JvReport jv = compute_jv(oracle, g, a.height);
    const NodeSet free = g.all_nodes().minus(jv.jv);
    require(!free.empty(), "Precondition", "J_V^c is empty; no free directions to bound");
    const DepthVector cvec = parse_depth_csv(a.c, free.size());
    std::map<int, int> c;
    for (int k = 0; k < free.size(); ++k) c[free.members()[k]] = cvec.c[k];
    const MultiplicityBound mb =
        multiplicity_lower_bound(g, v.presentation().lambda, free, c, &v, a.height);
    if (!a.mu.empty())
        require(parse_depth_csv(a.mu, g.n) == mb.mu, "Precondition", "--mu disagrees with --c");
    Json out;
    out["command"] = "bound";
    out["mu"] = depth_json(mb.mu);
    out["jv"] = nodes_json(jv.jv);
    out["free_nodes"] = nodes_json(free);
    out["bound"] = mb.bound;
    out["exact"] = mb.exact;
    out["engine_dim"] = v.dim_at(mb.mu);
    Json contribs = Json::array();
    for (const auto& cb : mb.contributors) {
        Json e;
        e["nodes"] = nodes_json(cb.h);
        e["shifted_lambda"] = lambda_json(cb.shifted);
        e["dim"] = cb.dim;
        contribs.push_back(std::move(e));
    }
    out["contributors"] = std::move(contribs);
    out["verified_height"] = a.height;
    emit(out);
    return 0;
}

int run_verify_suite(const Args& a) {
    int bad = 0;
    for (const auto& r : run_verification_suite(a.quick, a.seed)) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        if (!r.pass) ++bad;
    }
    std::cout << (bad ? "verification suite FAILED\n" : "verification suite passed\n");
    return bad ? 3 : 0;
}

// Experimental search for root-subsets S with wt V - Z>=0 S inside wt V, up
// to truncation. Reports candidates only; asserts nothing.
int run_free_root_subsets(const Args& a) {
    QuotientModule v(presentation_from(a));
    const Gcm& g = v.presentation().algebra;
    const RootSet rs = positive_roots(g, a.height);
    const int margin = a.height - 1;
    std::vector<std::vector<int>> picks;  // index subsets of size <= max_size
    const int nr = static_cast<int>(rs.roots.size());
    for (int x = 0; x < nr; ++x) picks.push_back({x});
    if (a.max_size >= 2)
        for (int x = 0; x < nr; ++x)
            for (int y = x + 1; y < nr; ++y) picks.push_back({x, y});
    Json found = Json::array();
    for (const auto& pick : picks) {
        int genh = 0;
        std::vector<DepthVector> gens;
        for (int x : pick) {
            gens.push_back(rs.roots[x].depth);
            genh = std::max(genh, gens.back().height());
        }
        const int cmp = std::min(margin, a.height - genh);
        const TruncatedWeightSet closed = cone_subtract(v.weights().truncate(cmp), gens, cmp);
        if (closed.equals(v.weights().truncate(cmp))) {
            Json e = Json::array();
            for (const auto& d : gens) e.push_back(depth_json(d));
            found.push_back(std::move(e));
        }
    }
    Json out;
    out["command"] = "free-root-subsets";
    out["verified_height"] = margin;
    out["free_subsets"] = std::move(found);
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weight-sets of highest-weight modules over Kac-Moody algebras"};
    app.require_subcommand(1);
    Args a;

    auto add_common = [&](CLI::App* cmd, bool lambda = true, bool relations = false) {
        cmd->add_option("--algebra", a.algebra, "built-in label, inline JSON, or file");
        if (lambda) cmd->add_option("--lambda", a.lambda, "pairings, e.g. 1,-3/2");
        if (relations) {
            cmd->add_option("--relations", a.relations, "JSON words, e.g. [[[0,2],[1,1]]]");
            cmd->add_option("--presentation", a.presentation,
                            "whole presentation as JSON (inline or a file); overrides the flags above");
        }
        cmd->add_option("--height", a.height, "truncation height bound");
    };

    auto* roots = app.add_subcommand("roots", "positive roots with real/imaginary tags");
    add_common(roots, false);
    roots->add_option("--parabolic", a.j, "restrict support to these nodes");
    roots->add_option("--unit-slice", a.i, "report the unit-I-height slice");

    auto* weights = app.add_subcommand("weights", "weight-sets");
    weights->require_subcommand(1);
    for (const auto& kind : {"verma", "parabolic", "simple", "integrable", "module"}) {
        auto* sub = weights->add_subcommand(kind);
        add_common(sub, true, std::string(kind) == "module");
        if (std::string(kind) == "parabolic" || std::string(kind) == "integrable")
            sub->add_option("--J", a.j, "parabolic node set");
    }

    auto* jv = app.add_subcommand("jv", "free-direction obstruction set J_V");
    add_common(jv, true, true);

    auto* check = app.add_subcommand("check", "run a theorem check on a presentation");
    check->require_subcommand(1);
    for (const auto& which : {"thmA", "thmB", "thmC"}) {
        auto* sub = check->add_subcommand(which);
        add_common(sub, true, true);
        if (std::string(which) != "thmA") sub->add_option("--J", a.j, "node set");
    }

    auto* slices = app.add_subcommand("slices", "J-slice decomposition of a module weight-set");
    add_common(slices, true, true);
    slices->add_option("--J", a.j, "node set containing J_V");

    auto* chain = app.add_subcommand("chain", "ascent chain inside a J-slice");
    add_common(chain, true, true);
    chain->add_option("--J", a.j, "node set (default J_lambda)");
    chain->add_option("--mu", a.mu, "depth vector of the starting weight")->required();
    chain->add_flag("--exhaustive", a.exhaustive, "report all chains");

    auto* enumerate = app.add_subcommand("enumerate", "free-direction enumeration plans");
    add_common(enumerate, true, false);
    enumerate->add_option("--free-nodes", a.free_nodes, "node set to enumerate")->required();
    enumerate->add_option("--c", a.c, "exponents, aligned with --free-nodes")->required();
    enumerate->add_flag("--exhaustive", a.exhaustive, "collect every reachable plan");

    auto* bound = app.add_subcommand("bound", "multiplicity lower bound along free directions");
    add_common(bound, true, true);
    bound->add_option("--c", a.c, "exponents, aligned with the free nodes")->required();
    bound->add_option("--mu", a.mu, "optional cross-check of the target depth");

    auto* vs = app.add_subcommand("verify-suite", "run every cross-check; exit nonzero on failure");
    vs->add_flag("--quick", a.quick, "smaller instance counts");
    vs->add_option("--seed", a.seed, "RNG seed for the randomized checks");

    auto* frs = app.add_subcommand("free-root-subsets", "experimental: root subsets S with wt V - Z>=0 S inside wt V");
    add_common(frs, true, true);
    frs->add_option("--max-size", a.max_size, "largest subset size to try");

    CLI11_PARSE(app, argc, argv);

    try {
        if (roots->parsed()) return run_roots(a);
        if (weights->parsed())
            return run_weights(a, weights->get_subcommands().front()->get_name());
        if (jv->parsed()) return run_jv(a);
        if (check->parsed()) return run_check(a, check->get_subcommands().front()->get_name());
        if (slices->parsed()) return run_slices(a);
        if (chain->parsed()) return run_chain(a);
        if (enumerate->parsed()) return run_enumerate(a);
        if (bound->parsed()) return run_bound(a);
        if (vs->parsed()) return run_verify_suite(a);
        if (frs->parsed()) return run_free_root_subsets(a);
    } catch (const kmw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        const std::string code = e.code();
        if (code == "ParseError") return 1;
        if (code == "InternalMismatch" || code == "NoWitness" || code == "NoStep" ||
            code == "ChainNotFound")
            return 3;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
