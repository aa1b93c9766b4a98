#pragma once

// JSON (de)serialization for every object kind the CLI speaks, plus the
// short text names ("V30", "M13!").  Parsers validate invariants and throw
// std::invalid_argument with a usable message.

#include <json.hpp>

#include <string>
#include <vector>

#include "bijections.hpp"
#include "chords.hpp"
#include "forest.hpp"
#include "hereditary.hpp"
#include "tube.hpp"

namespace excseq {

using json = nlohmann::json;

inline std::string brick_name(const TubeObject& v) {
    auto [i, j] = v.v_pair();
    return "V" + std::to_string(i) + std::to_string(j);
}

inline std::string module_name(const HereditaryCategory& cat, const SignedMod& x) {
    return cat.name_of(x.id) + (x.shifted ? "!" : "");
}

// --- forests and trees --------------------------------------------------------

inline json forest_to_json(const RootedForest& f) {
    return json{{"n", f.n}, {"parent", f.parent}};
}

inline RootedForest forest_from_json(const json& j) {
    RootedForest f;
    f.n = j.at("n").get<int>();
    f.parent = j.at("parent").get<std::vector<int>>();
    if (!forest_is_valid(f)) throw std::invalid_argument("invalid forest: bad parent map");
    return f;
}

inline json augmented_tree_to_json(const AugmentedTree& t) {
    json j = forest_to_json(t.tree);
    j["epsilon"] = t.epsilon;
    return j;
}

inline AugmentedTree augmented_tree_from_json(const json& j) {
    AugmentedTree t;
    t.tree = forest_from_json(j);
    t.epsilon = j.at("epsilon").get<int>();
    if (!augmented_tree_is_valid(t))
        throw std::invalid_argument("invalid augmented tree: need one root and epsilon in Z_n");
    return t;
}

inline json augmented_forest_to_json(const AugmentedForest& f) {
    json j = forest_to_json(f.forest);
    j["epsilon_map"] = f.epsilon_map();
    return j;
}

inline AugmentedForest augmented_forest_from_json(const json& j) {
    AugmentedForest f;
    f.forest = forest_from_json(j);
    auto eps = j.at("epsilon_map").get<std::vector<int>>();
    f.modulus = static_cast<int>(eps.size());
    if (f.modulus != f.forest.n + 1)
        throw std::invalid_argument("epsilon map must have one more entry than vertices");
    f.eps0 = eps.at(0);
    if (!augmented_forest_is_valid(f)) throw std::invalid_argument("invalid augmented forest");
    if (f.epsilon_map() != eps)
        throw std::invalid_argument("epsilon map violates the weight recurrence");
    return f;
}

// --- chord sequences ------------------------------------------------------------

inline json chords_to_json(const ChordSequence& s) {
    json arr = json::array();
    for (auto& g : s.items) arr.push_back(json::array({g.from, g.to}));
    return json{{"n", s.n}, {"chords", arr}};
}

inline ChordSequence chords_from_json(const json& j) {
    ChordSequence s;
    s.n = j.at("n").get<int>();
    for (auto& e : j.at("chords")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("chords must be [from,to] pairs");
        s.items.push_back(ChordObject{e[0].get<int>(), e[1].get<int>()});
    }
    if (!is_valid_sequence(s)) throw std::invalid_argument("chord sequence is not noncrossing");
    return s;
}

// --- tube sequences ---------------------------------------------------------------

inline json tube_to_json(const std::vector<TubeObject>& seq, int n) {
    json arr = json::array();
    for (auto& v : seq) arr.push_back(json::array({v.a, v.b}));
    return json{{"n", n}, {"objects", arr}};
}

inline std::vector<TubeObject> tube_from_json(const json& j, int* n_out = nullptr) {
    int n = j.at("n").get<int>();
    if (n_out) *n_out = n;
    std::vector<TubeObject> seq;
    for (auto& e : j.at("objects")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("objects must be [a,b] pairs");
        seq.emplace_back(e[0].get<int>(), e[1].get<int>(), n);
    }
    return seq;
}

inline json signed_tube_to_json(const std::vector<SignedTubeObject>& seq, int n) {
    std::vector<TubeObject> under;
    json shifted = json::array();
    for (auto& x : seq) {
        under.push_back(x.obj);
        shifted.push_back(x.shifted);
    }
    json j = tube_to_json(under, n);
    j["shifted"] = shifted;
    return j;
}

inline std::vector<SignedTubeObject> signed_tube_from_json(const json& j, int* n_out = nullptr) {
    auto under = tube_from_json(j, n_out);
    std::vector<bool> shifted(under.size(), false);
    if (j.contains("shifted")) shifted = j.at("shifted").get<std::vector<bool>>();
    if (shifted.size() != under.size())
        throw std::invalid_argument("shifted flags must match the object count");
    std::vector<SignedTubeObject> out;
    for (size_t t = 0; t < under.size(); ++t)
        out.push_back(SignedTubeObject{under[t], shifted[t]});
    return out;
}

// --- C_n module sequences ----------------------------------------------------------

inline json cn_to_json(const HereditaryCategory& cat, const std::vector<int>& seq) {
    json arr = json::array();
    for (int id : seq) {
        Mod m = cat.module(id);
        arr.push_back(json::array({m.i, m.j}));
    }
    return json{{"n", cat.rank()}, {"modules", arr}};
}

inline std::vector<int> cn_from_json(const HereditaryCategory& cat, const json& j) {
    if (j.at("n").get<int>() != cat.rank())
        throw std::invalid_argument("module sequence rank mismatch");
    std::vector<int> seq;
    for (auto& e : j.at("modules")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("modules must be [i,j] pairs");
        seq.push_back(cat.index_of(Mod{e[0].get<int>(), e[1].get<int>()}));
    }
    return seq;
}

inline json signed_cn_to_json(const HereditaryCategory& cat, const std::vector<SignedMod>& seq) {
    std::vector<int> under;
    json shifted = json::array();
    for (auto& x : seq) {
        under.push_back(x.id);
        shifted.push_back(x.shifted);
    }
    json j = cn_to_json(cat, under);
    j["shifted"] = shifted;
    return j;
}

inline std::vector<SignedMod> signed_cn_from_json(const HereditaryCategory& cat, const json& j) {
    auto under = cn_from_json(cat, j);
    std::vector<bool> shifted(under.size(), false);
    if (j.contains("shifted")) shifted = j.at("shifted").get<std::vector<bool>>();
    if (shifted.size() != under.size())
        throw std::invalid_argument("shifted flags must match the module count");
    std::vector<SignedMod> out;
    for (size_t t = 0; t < under.size(); ++t) out.push_back(SignedMod{under[t], shifted[t]});
    return out;
}

}  // namespace excseq
