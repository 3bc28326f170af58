// Command-line front end: root-vector tables, canonical basis listings,
// crystal graphs, descent reports, and batch verification suites.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcanon/serialize.hpp"
#include "qcanon/verma.hpp"

using namespace qcanon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_word(const std::string& s) {
    std::vector<int> letters;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 1) throw std::domain_error("word letters are 1-based node labels");
        letters.push_back(v - 1);
    }
    return letters;
}

Coords parse_coords(const std::string& s) {
    Coords c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.push_back(std::stoi(tok));
    return c;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::domain_error("cannot open output file " + out);
        f << text;
    }
}

std::vector<Coords> weights_up_to_height(const DynkinDiagram& d, int hmax) {
    std::vector<Coords> out;
    Coords cur(d.rank(), 0);
    std::function<void(int, int)> rec = [&](int left, int idx) {
        if (idx == d.rank()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            cur[idx] = c;
            rec(left - c, idx + 1);
        }
        cur[idx] = 0;
    };
    for (int h = 1; h <= hmax; ++h) rec(h, 0);
    return out;
}

struct Session {
    DynkinDiagram d;
    UqMinusContext minus;
    UqFullContext full;
    PbwContext pbw;
    CanonicalContext can;

    Session(const std::string& type, int bound)
        : d(DynkinDiagram::from_string(type)), minus(d, bound), full(d),
          pbw(minus, full), can(pbw) {}

    ReducedWord word(const std::string& spec) {
        if (spec.empty()) return canonical_w0_word(d);
        return ReducedWord(d, parse_word(spec));
    }
};

struct Suite {
    json checks = json::array();
    bool pass = true;

    void record(const std::string& name, bool ok, const std::string& detail = "") {
        json c{{"name", name}, {"pass", ok}};
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(c);
        if (!ok) pass = false;
        std::cerr << (ok ? "  ok   " : "  FAIL ") << name << "\n";
    }
};

void suite_braid_relations(Session& s, Suite& out) {
    const DynkinDiagram& d = s.d;
    auto zero = [&](const UqElement& x) {
        return equals_zero_generic_verma(s.full, s.minus, x);
    };
    for (int i = 0; i < d.rank(); ++i)
        for (int j = i + 1; j < d.rank(); ++j) {
            bool ok = true;
            for (auto& g : s.full.generators()) {
                UqElement lhs, rhs;
                if (d.adjacent(i, j)) {
                    lhs = s.full.braid_T(i, s.full.braid_T(j, s.full.braid_T(i, g)));
                    rhs = s.full.braid_T(j, s.full.braid_T(i, s.full.braid_T(j, g)));
                } else {
                    lhs = s.full.braid_T(i, s.full.braid_T(j, g));
                    rhs = s.full.braid_T(j, s.full.braid_T(i, g));
                }
                if (!zero(lhs - rhs)) ok = false;
            }
            out.record("braid relation (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")",
                       ok);
        }
}

void suite_pbw_basis(Session& s, int hmax, Suite& out) {
    ReducedWord w0 = canonical_w0_word(s.d);
    KostantCounter kostant(s.d);
    for (auto& nu : weights_up_to_height(s.d, hmax)) {
        const auto& datas = s.pbw.data_of_weight(w0, nu);
        bool count_ok = static_cast<long long>(datas.size()) == kostant.count(nu);
        bool rank_ok = true;
        try {
            // the expansion system validates nonsingularity on construction
            const auto& words = s.minus.words_of_weight(nu);
            if (!words.empty())
                s.pbw.pbw_expand(UMinusElement::term(words.front(), RatFunc(1)), w0);
        } catch (const std::exception& e) {
            rank_ok = false;
        }
        std::string label = "weight";
        for (int v : nu) label += " " + std::to_string(v);
        out.record("pbw count+rank at " + label, count_ok && rank_ok);
    }
}

void suite_lattice_moves(Session& s, int hmax, Suite& out) {
    ReducedWord w0 = canonical_w0_word(s.d);
    auto weights = weights_up_to_height(s.d, hmax);
    for (auto& letters : all_reduced_words(w0)) {
        ReducedWord w(s.d, letters);
        int checked = 0, failed = 0;
        for (int k = 0; k + 1 < w.size(); ++k) {
            for (auto kind : {BraidMove::Swap2, BraidMove::Braid3}) {
                BraidMove m{k, kind};
                if (!move_legal(s.d, letters, m)) continue;
                for (auto& nu : weights) {
                    auto rep = s.pbw.verify_lattice_move(w, m, nu);
                    ++checked;
                    if (!rep.pass()) ++failed;
                }
            }
        }
        std::string label;
        for (int l : letters) label += std::to_string(l + 1);
        out.record("lattice moves on " + label + " (" + std::to_string(checked) + ")",
                   failed == 0);
    }
}

void suite_thm_ut(Session& s, const ReducedWord& w, int hmax, Suite& out) {
    for (auto& nu : weights_up_to_height(s.d, hmax)) {
        bool ok = true;
        std::string why;
        for (auto& a : s.pbw.data_of_weight(w, nu)) {
            try {
                s.can.bar_in_pbw(LusztigData(w, a));
            } catch (const std::exception& e) {
                ok = false;
                why = e.what();
            }
        }
        std::string label = "weight";
        for (int v : nu) label += " " + std::to_string(v);
        out.record("unit triangularity at " + label, ok, why);
    }
}

void suite_canonical(Session& s, const ReducedWord& w, int hmax, Suite& out) {
    for (auto& nu : weights_up_to_height(s.d, hmax)) {
        bool ok = true;
        std::string why;
        try {
            for (auto& el : s.can.canonical_basis(w, nu)) {
                if (!s.minus.is_zero(el.element.bar() - el.element)) {
                    ok = false;
                    why = "not bar-invariant";
                }
                for (auto& [a, c] : el.coords) {
                    if (a == el.a) continue;
                    if (!c.is_laurent() || !c.regular_at_zero() ||
                        !(c.value_at_zero() == 0)) {
                        ok = false;
                        why = "off-diagonal coordinate not in qZ[q]";
                    }
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        std::string label = "weight";
        for (int v : nu) label += " " + std::to_string(v);
        out.record("canonical basis at " + label, ok, why);
    }
}

void suite_crystal(Session& s, const ReducedWord& w, int hmax, Suite& out) {
    CrystalContext cry(s.can, w);
    for (auto& nu : weights_up_to_height(s.d, hmax)) {
        if (height(nu) + 1 > s.minus.height_bound()) continue;
        bool ok = true;
        std::string why;
        for (auto& a : s.pbw.data_of_weight(w, nu))
            for (int i = 0; i < s.d.rank(); ++i) {
                auto rep = cry.verify_kashiwara_agreement(i, LusztigData(w, a));
                if (!rep.pass) {
                    ok = false;
                    why = rep.detail;
                }
            }
        std::string label = "weight";
        for (int v : nu) label += " " + std::to_string(v);
        out.record("crystal agreement at " + label, ok, why);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical bases of ADE quantized enveloping algebras"};
    app.set_config("--config", "", "key=value configuration file");
    argv = app.ensure_utf8(argv);

    std::string type = "A2";
    std::vector<std::string> word_toks;
    std::vector<std::string> weight_toks;
    std::string format;
    std::string suite;
    std::string out_path;
    int max_height = 8;
    int depth = 3;
    unsigned seed = 0;
    app.add_option("--type", type, "diagram type (A1..A8, D4..D8, E6, E7, E8)");
    app.add_option("--word", word_toks, "reduced word of w0, comma-separated 1-based");
    app.add_option("--weight", weight_toks, "weight coordinates, comma-separated");
    app.add_option("--max-height", max_height, "height bound for weight spaces");
    app.add_option("--depth", depth, "crystal graph depth");
    app.add_option("--format", format, "output format (text|json|csv|dot)");
    app.add_option("--suite", suite, "verification suite name");
    app.add_option("--seed", seed, "seed for sampled checks");
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    auto* cmd_roots = app.add_subcommand("roots", "beta-sequence and root-vector table");
    auto* cmd_canonical =
        app.add_subcommand("canonical", "canonical basis of one weight space");
    auto* cmd_crystal = app.add_subcommand("crystal", "truncated crystal graph");
    auto* cmd_descent = app.add_subcommand("descent", "descent report for a highest weight");
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    app.require_subcommand(0, 1);
    for (auto* sub : {cmd_roots, cmd_canonical, cmd_crystal, cmd_descent, cmd_verify})
        sub->fallthrough();  // global flags may follow the subcommand name

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitOk;
    }
    // a config file splits comma lists into tokens; rejoin either way
    auto join = [](const std::vector<std::string>& toks) {
        std::string s;
        for (auto& t : toks) {
            if (!s.empty()) s += ",";
            s += t;
        }
        return s;
    };
    std::string word_spec = join(word_toks);
    std::string weight_spec = join(weight_toks);

    try {
        if (cmd_roots->parsed()) {
            Session s(type, max_height);
            ReducedWord w = s.word(word_spec);
            const auto& t = s.pbw.root_vectors(w);
            if (format == "json") {
                json rows = json::array();
                for (int k = 0; k < w.size(); ++k)
                    rows.push_back(json{{"beta", t.betas[k].coords},
                                        {"vector", to_json(t.vectors[k])}});
                emit(rows.dump(2) + "\n", out_path);
            } else if (format.empty() || format == "text") {
                std::string text;
                for (int k = 0; k < w.size(); ++k)
                    text += t.betas[k].to_string() + "  :  " +
                            t.vectors[k].to_string() + "\n";
                emit(text, out_path);
            } else {
                throw std::domain_error("unsupported format for roots: " + format);
            }
            return kExitOk;
        }

        if (cmd_canonical->parsed()) {
            if (weight_spec.empty())
                throw std::domain_error("canonical requires --weight");
            Session s(type, max_height);
            ReducedWord w = s.word(word_spec);
            Coords nu = parse_coords(weight_spec);
            const auto& basis = s.can.canonical_basis(w, nu);
            if (format == "json") {
                json rows = json::array();
                for (auto& el : basis) rows.push_back(to_json(el));
                emit(rows.dump(2) + "\n", out_path);
            } else if (format.empty() || format == "text") {
                std::string text;
                for (auto& el : basis) {
                    text += "data";
                    for (int v : el.a) text += " " + std::to_string(v);
                    text += "\n  coords:";
                    for (auto& [a, c] : el.coords) {
                        text += " [";
                        for (size_t k = 0; k < a.size(); ++k)
                            text += (k ? "," : "") + std::to_string(a[k]);
                        text += "]*(" + c.to_string() + ")";
                    }
                    text += "\n  element: " + el.element.to_string() + "\n";
                }
                emit(text, out_path);
            } else {
                throw std::domain_error("unsupported format for canonical: " + format);
            }
            return kExitOk;
        }

        if (cmd_crystal->parsed()) {
            Session s(type, std::max(max_height, depth));
            ReducedWord w = s.word(word_spec);
            CrystalContext cry(s.can, w);
            CrystalGraph g = cry.crystal_graph(depth);
            if (format == "json") {
                emit(to_json(g).dump(2) + "\n", out_path);
            } else if (format.empty() || format == "dot") {
                emit(g.to_dot(), out_path);
            } else {
                throw std::domain_error("unsupported format for crystal: " + format);
            }
            return kExitOk;
        }

        if (cmd_descent->parsed()) {
            if (weight_spec.empty())
                throw std::domain_error("descent requires --weight (fundamental-weight coefficients)");
            Session s(type, max_height);
            ReducedWord w = s.word(word_spec);
            CrystalContext cry(s.can, w);
            DescentReport rep = cry.descent_report(parse_coords(weight_spec));
            if (format == "json") {
                emit(to_json(rep).dump(2) + "\n", out_path);
            } else if (format.empty() || format == "csv") {
                emit(to_csv(rep), out_path);
            } else {
                throw std::domain_error("unsupported format for descent: " + format);
            }
            return rep.pass ? kExitOk : kExitSuiteFailure;
        }

        if (cmd_verify->parsed()) {
            if (suite.empty()) throw std::domain_error("verify requires --suite");
            Session s(type, max_height);
            Suite result;
            std::cerr << "suite " << suite << " on " << type << "\n";
            if (suite == "braid-relations") {
                suite_braid_relations(s, result);
            } else if (suite == "pbw-basis") {
                suite_pbw_basis(s, max_height, result);
            } else if (suite == "lattice-moves") {
                suite_lattice_moves(s, max_height, result);
            } else if (suite == "thm-ut") {
                suite_thm_ut(s, s.word(word_spec), max_height, result);
            } else if (suite == "canonical") {
                suite_canonical(s, s.word(word_spec), max_height, result);
            } else if (suite == "crystal") {
                suite_crystal(s, s.word(word_spec), max_height, result);
            } else {
                throw std::domain_error("unknown suite: " + suite);
            }
            json rep{{"suite", suite}, {"type", type}, {"pass", result.pass},
                     {"checks", result.checks}};
            emit(rep.dump(2) + "\n", out_path);
            return result.pass ? kExitOk : kExitSuiteFailure;
        }

        std::cerr << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
