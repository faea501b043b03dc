#include "kmw/json_io.hpp"

#include <fstream>
#include <sstream>

#include "kmw/error.hpp"

namespace kmw {

namespace {

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail("ParseError", "malformed JSON: " + text.substr(0, 80));
    return j;
}

}  // namespace

Gcm parse_algebra_json(const Json& j) {
    if (j.is_string()) return gcm_of_type(j.get<std::string>());
    if (j.is_object() && j.contains("type")) return gcm_of_type(j.at("type").get<std::string>());
    if (j.is_object() && j.contains("cartan")) {
        std::vector<std::vector<int>> m;
        for (const auto& row : j.at("cartan")) m.push_back(row.get<std::vector<int>>());
        return build_gcm(m);
    }
    fail("ParseError", "algebra descriptor needs \"type\" or \"cartan\"");
}

Gcm parse_algebra_arg(const std::string& arg) {
    if (is_builtin_type(arg)) return gcm_of_type(arg);
    if (!arg.empty() && arg.front() == '{') return parse_algebra_json(parse_json_text(arg));
    std::ifstream in(arg);
    if (in.good()) {
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_algebra_json(parse_json_text(ss.str()));
    }
    fail("ParseError", "unknown algebra '" + arg + "' (not a built-in label, inline JSON, or readable file)");
}

HighestWeight parse_lambda_json(const Json& j) {
    require(j.is_array(), "ParseError", "lambda must be an array");
    std::vector<Rat> p;
    for (const auto& x : j) {
        if (x.is_string()) p.push_back(parse_rat(x.get<std::string>()));
        else if (x.is_number_integer()) p.push_back(Rat(x.get<long>()));
        else fail("ParseError", "lambda entries must be strings or integers");
    }
    return HighestWeight(std::move(p));
}

HighestWeight parse_lambda_csv(const std::string& arg) {
    std::vector<Rat> p;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) p.push_back(parse_rat(tok));
    require(!p.empty(), "ParseError", "empty lambda");
    return HighestWeight(std::move(p));
}

NodeSet parse_nodes_csv(const std::string& arg, int n) {
    std::vector<int> v;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            v.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            fail("ParseError", "bad node '" + tok + "'");
        }
        require(v.back() >= 0 && v.back() < n, "Precondition", "node " + tok + " out of range");
    }
    return NodeSet(std::move(v));
}

DepthVector parse_depth_csv(const std::string& arg, int n) {
    std::vector<int> v;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            fail("ParseError", "bad depth entry '" + tok + "'");
        }
        require(v.back() >= 0, "Precondition", "depth entries must be >= 0");
    }
    require(static_cast<int>(v.size()) == n, "ParseError",
            "depth needs " + std::to_string(n) + " entries");
    return DepthVector(std::move(v));
}

std::vector<Word> parse_relations_json(const Json& j) {
    require(j.is_array(), "ParseError", "relations must be an array of words");
    std::vector<Word> out;
    for (const auto& wj : j) {
        require(wj.is_array(), "ParseError", "each relation is an array of [node, exponent] pairs");
        Word w;
        for (const auto& f : wj) {
            require(f.is_array() && f.size() == 2, "ParseError", "word factors are [node, exponent]");
            w.factors.push_back({f.at(0).get<int>(), f.at(1).get<int>()});
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Word> parse_relations_arg(const std::string& arg) {
    if (arg.empty()) return {};
    return parse_relations_json(parse_json_text(arg));
}

ModulePresentation parse_presentation_json(const Json& j) {
    ModulePresentation p;
    require(j.contains("algebra") && j.contains("lambda"), "ParseError",
            "presentation needs \"algebra\" and \"lambda\"");
    p.algebra = parse_algebra_json(j.at("algebra"));
    p.lambda = parse_lambda_json(j.at("lambda"));
    require(p.lambda.size() == p.algebra.n, "ParseError", "lambda rank mismatch");
    if (j.contains("relations")) p.relations = parse_relations_json(j.at("relations"));
    p.height_bound = j.value("H", 8);
    return p;
}

Json lambda_json(const HighestWeight& lam) {
    Json out = Json::array();
    for (const auto& x : lam.p) out.push_back(rat_str(x));
    return out;
}

Json depth_json(const DepthVector& d) {
    Json out = Json::array();
    for (int x : d.c) out.push_back(x);
    return out;
}

Json nodes_json(const NodeSet& s) {
    Json out = Json::array();
    for (int x : s) out.push_back(x);
    return out;
}

Json weight_set_json(const TruncatedWeightSet& s) {
    Json out;
    out["lambda"] = lambda_json(s.lambda());
    out["H"] = s.height_bound();
    Json depths = Json::array();
    for (const auto& d : s.depths()) depths.push_back(depth_json(d));
    out["depths"] = std::move(depths);
    return out;
}

}  // namespace kmw
