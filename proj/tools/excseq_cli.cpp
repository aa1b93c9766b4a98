// Command-line surface: enumerate, count, map, braid, stats, verify, render.
//
// Streams are newline-delimited JSON in deterministic order; reports are
// single JSON documents.  Exit codes: 0 ok, 1 verification or round-trip
// failure, 2 usage/input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <functional>
#include <random>
#include <sstream>

#include "excseq/counting.hpp"
#include "excseq/io.hpp"
#include "excseq/render.hpp"
#include "excseq/verify.hpp"

using namespace excseq;

namespace {

int default_jobs() {
    if (const char* env = std::getenv("EXCSEQ_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
            stream = &file;
        }
    }
    std::ostream& out() { return *stream; }
};

// --- enumerate -----------------------------------------------------------------

// Streams records through the sink in deterministic order; the sink returns
// false to stop early (used by --limit).
void enumerate_stream(const std::string& family, int n, int k, bool signed_flag, bool soft,
                      const std::function<bool(json)>& sink) {
    if (family == "cn") {
        auto cat = HereditaryCategory::type_c(n);
        if (k < 0) k = n;
        if (signed_flag) {
            signed_sequences_visit(cat, k, [&](const std::vector<SignedMod>& s) {
                return sink(signed_cn_to_json(cat, s));
            });
        } else {
            enumerate_exc_sequences_visit(cat, k, [&](const std::vector<int>& s) {
                return sink(cn_to_json(cat, s));
            });
        }
    } else if (family == "an") {
        auto cat = HereditaryCategory::type_a(n);
        if (k < 0) k = n;
        enumerate_exc_sequences_visit(cat, k, [&](const std::vector<int>& s) {
            return sink(cn_to_json(cat, s));
        });
    } else if (family == "tube") {
        if (k < 0) k = soft ? n : n - 1;
        enumerate_tube_sequences_visit(n, k, soft, [&](const std::vector<TubeObject>& s) {
            return sink(tube_to_json(s, n));
        });
    } else if (family == "diagram") {
        if (k < 0) k = n - 1;
        enumerate_sequences_visit(n, k, ChordMode::ChordsOnly, [&](const ChordSequence& s) {
            return sink(chords_to_json(s));
        });
    } else if (family == "pointed") {
        enumerate_sequences_visit(n, n, ChordMode::WithLoops, [&](const ChordSequence& s) {
            return sink(chords_to_json(s));
        });
    } else if (family == "tree") {
        for (auto& t : enumerate_augmented_trees(n))
            if (!sink(augmented_tree_to_json(t))) return;
    } else if (family == "forest") {
        for (auto& f : enumerate_augmented_forests(n))
            if (!sink(augmented_forest_to_json(f))) return;
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
}

// --- map -----------------------------------------------------------------------

json map_object(const std::string& from, const std::string& to, const json& input) {
    if (from == to) return input;

    if (from == "tree" && to == "diagram")
        return chords_to_json(diagram_from_tree(augmented_tree_from_json(input)));
    if (from == "diagram" && to == "tree")
        return augmented_tree_to_json(hasse_tree(chords_from_json(input)));

    if (from == "tube-seq" && to == "forest")
        return augmented_forest_to_json(
            forest_of_complete_tube_sequence(tube_from_json(input)));
    if (from == "forest" && to == "tube-seq") {
        AugmentedForest f = augmented_forest_from_json(input);
        return tube_to_json(tube_sequence_of_forest(f), f.modulus);
    }

    if (from == "tube-seq" && to == "diagram") {
        int n = 0;
        auto seq = tube_from_json(input, &n);
        return chords_to_json(chords_of_tube_sequence(seq, n));
    }
    if (from == "diagram" && to == "tube-seq") {
        ChordSequence s = chords_from_json(input);
        for (auto& g : s.items)
            if (g.is_loop()) throw std::invalid_argument("tube sequences carry no loops");
        return tube_to_json(tube_sequence_of_chords(s), s.n);
    }

    if (from == "cn-seq" && to == "diagram") {
        auto cat = HereditaryCategory::type_c(input.at("n").get<int>());
        return chords_to_json(chords_of_cn_sequence(cat, cn_from_json(cat, input)));
    }
    if (from == "diagram" && to == "cn-seq") {
        ChordSequence s = chords_from_json(input);
        auto cat = HereditaryCategory::type_c(s.n);
        return cn_to_json(cat, cn_sequence_of_chords(cat, s));
    }

    if (from == "signed-tube" && to == "signed-cn") {
        int n = 0;
        auto s = signed_tube_from_json(input, &n);
        auto cat = HereditaryCategory::type_c(n - 1);
        return signed_cn_to_json(cat, full_chain(cat, s));
    }
    if (from == "signed-cn" && to == "signed-tube") {
        auto cat = HereditaryCategory::type_c(input.at("n").get<int>());
        auto s = signed_cn_from_json(cat, input);
        return signed_tube_to_json(full_chain_inverse(cat, s), cat.rank() + 1);
    }

    throw std::invalid_argument("unsupported conversion: " + from + " -> " + to);
}

// --- braid ----------------------------------------------------------------------

json braid_apply(const std::string& family, const BraidWord& word, const json& input) {
    if (family == "forest")
        return forest_to_json(act_word_forest(word, forest_from_json(input)));
    if (family == "tree") {
        if (input.contains("epsilon"))
            return augmented_tree_to_json(act_word_augmented(word, augmented_tree_from_json(input)));
        return forest_to_json(act_word_tree(word, forest_from_json(input)));
    }
    if (family == "pointed")
        return chords_to_json(act_word_pointed(word, chords_from_json(input)));
    if (family == "cn") {
        auto cat = HereditaryCategory::type_c(input.at("n").get<int>());
        return cn_to_json(cat, act_word_cn_sequence(cat, word, cn_from_json(cat, input)));
    }
    throw std::invalid_argument("braid acts on forest, tree, pointed or cn");
}

// --- stats ------------------------------------------------------------------------

std::string ratio(long long num, long long den) {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q.get_str();
}

json stats_report(const std::string& family, int n, int k) {
    RelProjDistribution d;
    if (family == "cn") {
        auto cat = HereditaryCategory::type_c(n);
        if (k < 0) k = n;
        d = relproj_distribution_cn(cat, k);
    } else if (family == "tube") {
        if (k < 0) k = n - 1;
        d = relproj_distribution_tube(n, k);
    } else {
        throw std::invalid_argument("stats supports families cn and tube");
    }
    json marg = json::array(), inj = json::array();
    for (int j = 1; j <= d.k; ++j) {
        marg.push_back(ratio(d.proj_marginals[static_cast<size_t>(j - 1)], d.total));
        inj.push_back(ratio(d.inj_marginals[static_cast<size_t>(j - 1)], d.total));
    }
    json joint = json::object();
    for (auto& [mask, count] : d.joint) {
        std::string key;
        for (int j = 1; j <= d.k; ++j) key += (mask >> (j - 1)) & 1 ? '1' : '0';
        joint[key] = count;
    }
    json report{{"family", family},
                {"n", n},
                {"k", d.k},
                {"total", d.total},
                {"rel_projective_marginals", marg},
                {"rel_injective_marginals", inj},
                {"joint", joint},
                {"independent", joint_is_product_of_marginals(d)},
                {"never_both_proj_and_inj", d.both_proj_and_inj == 0}};
    if (family == "cn") {
        json poly = json::object();
        auto cat = HereditaryCategory::type_c(n);
        for (auto& [mask, coef] : generating_polynomial_enumerated(cat, d.k)) {
            std::string key;
            for (int i = 1; i <= d.k; ++i) key += (mask >> (i - 1)) & 1 ? '1' : '0';
            poly[key] = coef.get_str();
        }
        report["generating_polynomial"] = poly;
    }
    return report;
}

// --- verify -------------------------------------------------------------------------

json verify_report(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    bool all_pass = true;
    for (auto& c : checks) {
        json e{{"suite", c.suite}, {"claim", c.claim},       {"anchor", c.anchor},
               {"n", c.n},         {"expected", c.expected}, {"actual", c.actual},
               {"status", c.pass ? "pass" : "fail"}};
        if (c.k >= 0) e["k"] = c.k;
        if (!c.counterexample.empty()) e["counterexample"] = c.counterexample;
        arr.push_back(e);
        all_pass = all_pass && c.pass;
    }
    return json{{"checks", arr},
                {"total", checks.size()},
                {"status", all_pass ? "pass" : "fail"}};
}

// --- render -------------------------------------------------------------------------

std::string render_object(const json& input, const std::string& format) {
    if (input.contains("chords")) {
        if (format != "svg") throw std::invalid_argument("chord diagrams render to svg only");
        return svg_diagram(chords_from_json(input));
    }
    if (input.contains("parent")) {
        RootedForest f = forest_from_json(input);
        std::string caption;
        if (input.contains("epsilon"))
            caption = "epsilon = " + std::to_string(input.at("epsilon").get<int>());
        if (input.contains("epsilon_map")) {
            caption = "epsilon = ";
            for (auto& e : input.at("epsilon_map")) caption += std::to_string(e.get<int>());
        }
        if (format == "svg") return svg_forest(f, caption);
        if (format == "dot") return dot_forest(f, caption);
        throw std::invalid_argument("forests render to svg or dot");
    }
    throw std::invalid_argument("input is not renderable (need chords or parent)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exceptional sequences in tubes, type C modules and chord diagrams"};
    app.require_subcommand(1);

    std::string family = "cn", from, to, word_text, suite = "all", format = "json";
    std::string input_path, output_path, kind_name;
    int n = 0, k = -1, n_max = 0, limit = -1, sample = 0;
    unsigned long long seed = 0;
    int jobs = default_jobs();
    bool signed_flag = false, soft = false, round_trip = false;

    auto* cmd_enum = app.add_subcommand("enumerate", "stream objects as JSON lines");
    cmd_enum->add_option("--family", family)->required();
    cmd_enum->add_option("--n", n)->required();
    cmd_enum->add_option("--k", k);
    cmd_enum->add_flag("--signed", signed_flag);
    cmd_enum->add_flag("--soft", soft);
    cmd_enum->add_option("--limit", limit);
    cmd_enum->add_option("--sample", sample);
    cmd_enum->add_option("--seed", seed);
    cmd_enum->add_option("--output", output_path);

    auto* cmd_count = app.add_subcommand("count", "evaluate a closed-form counter");
    cmd_count->add_option("--kind", kind_name);
    cmd_count->add_option("--family", family);
    cmd_count->add_option("--n", n)->required();
    cmd_count->add_option("--k", k);
    cmd_count->add_flag("--signed", signed_flag);
    cmd_count->add_option("--output", output_path);

    auto* cmd_map = app.add_subcommand("map", "convert an object between models");
    cmd_map->add_option("--from", from)->required();
    cmd_map->add_option("--to", to)->required();
    cmd_map->add_option("--input", input_path);
    cmd_map->add_option("--output", output_path);
    cmd_map->add_flag("--round-trip", round_trip);

    auto* cmd_braid = app.add_subcommand("braid", "apply a braid word to an object");
    cmd_braid->add_option("--family", family)->required();
    cmd_braid->add_option("--word", word_text)->required();
    cmd_braid->add_option("--input", input_path);
    cmd_braid->add_option("--output", output_path);

    auto* cmd_stats = app.add_subcommand("stats", "exact relative-projectivity statistics");
    cmd_stats->add_option("--family", family)->required();
    cmd_stats->add_option("--n", n)->required();
    cmd_stats->add_option("--k", k);
    cmd_stats->add_option("--output", output_path);

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("--suite", suite);
    cmd_verify->add_option("--n-max", n_max);
    cmd_verify->add_option("--jobs", jobs);
    cmd_verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    cmd_verify->add_option("--output", output_path);

    auto* cmd_render = app.add_subcommand("render", "draw an object as svg or dot");
    cmd_render->add_option("--format", format)->check(CLI::IsMember({"svg", "dot", "json"}));
    cmd_render->add_option("--input", input_path);
    cmd_render->add_option("--output", output_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_enum->parsed()) {
            Output out(output_path);
            if (sample > 0) {
                // uniform sampling by index, deterministic for a fixed seed
                std::vector<json> records;
                enumerate_stream(family, n, k, signed_flag, soft, [&](json r) {
                    records.push_back(std::move(r));
                    return true;
                });
                if (records.empty()) throw std::invalid_argument("nothing to sample");
                std::mt19937_64 rng(seed);
                std::uniform_int_distribution<size_t> pick(0, records.size() - 1);
                for (int t = 0; t < sample; ++t) out.out() << records[pick(rng)].dump() << "\n";
            } else {
                long long emitted = 0;
                enumerate_stream(family, n, k, signed_flag, soft, [&](json r) {
                    if (limit >= 0 && emitted >= limit) return false;
                    out.out() << r.dump() << "\n";
                    ++emitted;
                    return true;
                });
            }
            return 0;
        }
        if (cmd_count->parsed()) {
            std::optional<CountKind> kind;
            if (!kind_name.empty()) {
                kind = parse_count_kind(kind_name);
                if (!kind) throw std::invalid_argument("unknown count kind: " + kind_name);
            } else if (family == "cn") {
                kind = signed_flag ? CountKind::SignedCn : CountKind::ExcCn;
            } else if (family == "an") {
                kind = CountKind::ExcAn;
            } else if (family == "tube") {
                kind = CountKind::ChordOriented;
            } else if (family == "pointed") {
                kind = CountKind::Pointed;
            } else {
                throw std::invalid_argument("count needs --kind or a family of cn/an/tube/pointed");
            }
            if (count_kind_wants_k(*kind) && k < 0) k = *kind == CountKind::ChordOriented ? n - 1 : n;
            Output out(output_path);
            out.out() << count_formula(*kind, n, count_kind_wants_k(*kind) ? k : -1).get_str()
                      << "\n";
            return 0;
        }
        if (cmd_map->parsed()) {
            json input = json::parse(read_input(input_path));
            json result = map_object(from, to, input);
            if (round_trip) {
                json back = map_object(to, from, result);
                if (back != input) {
                    std::cerr << "round trip mismatch\n";
                    return 1;
                }
            }
            Output out(output_path);
            out.out() << result.dump() << "\n";
            return 0;
        }
        if (cmd_braid->parsed()) {
            json input = json::parse(read_input(input_path));
            BraidWord word = parse_braid_word(word_text);
            Output out(output_path);
            out.out() << braid_apply(family, word, input).dump() << "\n";
            return 0;
        }
        if (cmd_stats->parsed()) {
            Output out(output_path);
            out.out() << stats_report(family, n, k).dump(2) << "\n";
            return 0;
        }
        if (cmd_verify->parsed()) {
            VerifyOptions opt;
            opt.n_max = n_max;
            opt.jobs = jobs;
            auto checks = run_suite(suite, opt);
            bool all_pass = true;
            Output out(output_path);
            if (format == "text") {
                for (auto& c : checks) {
                    out.out() << (c.pass ? "[pass] " : "[FAIL] ") << c.suite << ": " << c.claim
                              << " (n=" << c.n;
                    if (c.k >= 0) out.out() << ", k=" << c.k;
                    out.out() << ") expected " << c.expected << ", got " << c.actual;
                    if (!c.counterexample.empty())
                        out.out() << " [witness: " << c.counterexample << "]";
                    out.out() << "\n";
                    all_pass = all_pass && c.pass;
                }
                out.out() << (all_pass ? "all checks passed\n" : "FAILURES present\n");
            } else {
                json report = verify_report(checks);
                all_pass = report["status"] == "pass";
                out.out() << report.dump(2) << "\n";
            }
            return all_pass ? 0 : 1;
        }
        if (cmd_render->parsed()) {
            json input = json::parse(read_input(input_path));
            Output out(output_path);
            out.out() << render_object(input, format == "json" ? "svg" : format);
            return 0;
        }
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
