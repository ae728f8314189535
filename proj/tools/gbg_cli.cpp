// Command-line surface for the graph braid group toolkit.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gbg/braid.hpp"
#include "gbg/geom.hpp"
#include "gbg/json_io.hpp"
#include "gbg/morse.hpp"
#include "gbg/presentation.hpp"
#include "gbg/theta.hpp"
#include "gbg/theta4_reference.hpp"
#include "gbg/yang_baxter.hpp"
#include "json.hpp"

using namespace gbg;

namespace {

// Inputs are file paths, or "fixture:<name>" for the bundled graphs.
GraphBundle load_graph(const std::string& spec) {
    if (spec.rfind("fixture:", 0) == 0) return fixture(spec.substr(8));
    return graph_from_file(spec);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Prepared {
    SpanningTree tree;
    int n;
};

Prepared prepare(const std::string& input, int n) {
    GraphBundle b = load_graph(input);
    require(b.g.root().has_value(), "graph needs a \"root\" entry");
    Graph g = ensure_sufficient_subdivision(b.g, n);
    std::vector<std::string> hints;
    if (g.vertex_count() == b.g.vertex_count()) hints = b.deleted_hints;
    SpanningTree t = build_spanning_tree(g, *g.root(), hints);
    return Prepared{std::move(t), n};
}

std::string presentation_text(const Presentation& p) { return p.to_text(); }

int run(int argc, char** argv) {
    CLI::App app{"graph braid group presentations, quotients, and Yang-Baxter checks"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // connectivity
    auto* c_conn = app.add_subcommand("connectivity", "topological connectivity of a graph");
    std::string conn_input;
    c_conn->add_option("input", conn_input, "graph JSON path or fixture:<name>")->required();

    // presentation
    auto* c_pres = app.add_subcommand("presentation", "Morse presentation of B_n");
    std::string pres_input;
    int pres_n = 2;
    bool pres_geometric = false, pres_simplify = false;
    c_pres->add_option("input", pres_input)->required();
    c_pres->add_option("-n", pres_n, "particle count")->check(CLI::PositiveNumber);
    c_pres->add_flag("--geometric", pres_geometric, "emit the geometric dictionary");
    c_pres->add_flag("--simplify", pres_simplify, "Tietze-simplify the presentation");

    // quotient
    auto* c_quot = app.add_subcommand("quotient", "quotient / identification of the presentation");
    std::string quot_input, quot_spec;
    int quot_n = 2;
    c_quot->add_option("input", quot_input)->required();
    c_quot->add_option("-n", quot_n)->check(CLI::PositiveNumber);
    c_quot->add_option("--spec", quot_spec, "quotient spec JSON file")->required();

    // theta-classes
    auto* c_theta = app.add_subcommand("theta-classes", "theta-relatedness classes of triples");
    std::string theta_input;
    c_theta->add_option("input", theta_input)->required();

    // verify-planar
    auto* c_planar = app.add_subcommand("verify-planar", "planar quotient pipeline");
    std::string planar_input;
    int planar_n = 2;
    c_planar->add_option("input", planar_input)->required();
    c_planar->add_option("-n", planar_n)->check(CLI::PositiveNumber);

    // yb
    auto* c_yb = app.add_subcommand("yb", "Yang-Baxter residuals and scans");
    std::string yb_mode = "swap";
    int yb_d = 2, yb_rep_n = 3, yb_steps = 8;
    unsigned long long yb_seed = 1;
    std::vector<std::string> yb_files;
    c_yb->add_option("--mode", yb_mode, "swap | random | scan | rep | files")
        ->check(CLI::IsMember({"swap", "random", "scan", "rep", "files"}));
    c_yb->add_option("-d", yb_d)->check(CLI::PositiveNumber);
    c_yb->add_option("--seed", yb_seed);
    c_yb->add_option("--rep-n", yb_rep_n);
    c_yb->add_option("--steps", yb_steps);
    c_yb->add_option("--matrices", yb_files, "three matrix JSON files")->expected(3);

    // verify-appendix
    auto* c_app = app.add_subcommand("verify-appendix",
                                     "golden check of the bundled theta4 computation");

    // dump-fixture
    auto* c_dump = app.add_subcommand("dump-fixture", "write a bundled fixture as JSON");
    std::string dump_name;
    c_dump->add_option("name", dump_name)->required();

    // cells
    auto* c_cells = app.add_subcommand("cells", "dump the cells of D_n");
    std::string cells_input;
    int cells_n = 2, cells_dim = -1;
    c_cells->add_option("input", cells_input)->required();
    c_cells->add_option("-n", cells_n)->check(CLI::PositiveNumber);
    c_cells->add_option("--dim", cells_dim);

    CLI11_PARSE(app, argc, argv);

    if (*c_conn) {
        GraphBundle b = load_graph(conn_input);
        int k = b.g.topological_connectivity();
        if (format == "json") {
            nlohmann::ordered_json j;
            j["connectivity"] = k;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << k << "\n";
        }
        return 0;
    }

    if (*c_pres) {
        Prepared pr = prepare(pres_input, pres_n);
        MorseComplex mc(pr.tree, pr.n, 2);
        MorsePresentation mp = morse_presentation(mc);
        Presentation p;
        p.gens = mp.generator_names;
        for (const auto& r : mp.relators) p.relators.push_back(Word(std::vector<int>(r)));
        nlohmann::ordered_json j;
        j["generators"] = p.gens;
        {
            std::vector<std::vector<int>> rels;
            for (const Word& r : p.relators) rels.push_back(r.ls);
            j["relators"] = rels;
        }
        if (pres_simplify) {
            TietzeResult tz = tietze_simplify(p);
            j["simplified_generators"] = tz.p.gens;
            std::vector<std::vector<int>> rels;
            for (const Word& r : tz.p.relators) rels.push_back(r.ls);
            j["simplified_relators"] = rels;
            if (tz.p.relators.empty()) {
                j["free_rank"] = static_cast<int>(tz.p.gens.size());
            }
            p = tz.p;
        }
        if (pres_geometric) {
            nlohmann::ordered_json dict = nlohmann::ordered_json::object();
            for (size_t i = 0; i < mp.generators.size(); ++i) {
                auto word = critical_to_geometric(mc, mp.generators[i]);
                std::string s;
                for (const auto& tok : word) {
                    if (!s.empty()) s += " ";
                    s += token_name(pr.tree, tok);
                }
                dict[mp.generator_names[i]] = s;
            }
            j["dictionary"] = dict;
        }
        if (format == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            if (p.relators.empty())
                std::cout << "free, rank " << p.gens.size() << "\n";
            std::cout << presentation_text(p);
            if (pres_geometric) {
                std::cout << "dictionary:\n";
                for (auto it = j["dictionary"].begin(); it != j["dictionary"].end(); ++it)
                    std::cout << "  " << it.key() << " -> " << it.value().get<std::string>()
                              << "\n";
            }
        }
        return 0;
    }

    if (*c_quot) {
        Prepared pr = prepare(quot_input, quot_n);
        MorseComplex mc(pr.tree, pr.n, 2);
        GeometricPresentation gp = geometric_presentation(mc);
        QuotientSpec spec = quotient_spec_from_json(slurp(quot_spec));
        TietzeResult tz = quotient_and_identify(gp.p, spec.kill, spec.identify);
        if (format == "json")
            std::cout << tz.p.to_json() << "\n";
        else
            std::cout << presentation_text(tz.p);
        return tz.budget_exhausted ? 1 : 0;
    }

    if (*c_theta) {
        GraphBundle b = load_graph(theta_input);
        SpanningTree t = build_spanning_tree(b.g, *b.g.root(), b.deleted_hints);
        ThetaClasses cls = theta_classes(t);
        nlohmann::ordered_json j;
        nlohmann::ordered_json classes = nlohmann::ordered_json::array();
        for (const auto& c : cls.classes) {
            nlohmann::ordered_json one = nlohmann::ordered_json::array();
            for (const auto& tr : c) one.push_back(triple_name(t, tr));
            classes.push_back(one);
        }
        j["classes"] = classes;
        if (format == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << cls.classes.size() << " classes\n";
            for (const auto& c : cls.classes) {
                for (const auto& tr : c) std::cout << triple_name(t, tr) << " ";
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (*c_planar) {
        Prepared pr = prepare(planar_input, planar_n);
        MorseComplex mc(pr.tree, pr.n, 2);
        PlanarQuotientReport rep = verify_planar_quotient(mc);
        if (format == "json")
            std::cout << rep.to_json(pr.tree) << "\n";
        else
            std::cout << "classes: " << rep.class_count
                      << ", relators trivial: " << (rep.all_relators_trivial ? "yes" : "no")
                      << ", abelianization: " << rep.ab.to_string() << "\n";
        return (rep.all_relators_trivial && rep.abelianization_is_Z) ? 0 : 1;
    }

    if (*c_yb) {
        nlohmann::ordered_json j;
        int rc = 0;
        if (yb_mode == "swap") {
            double r = yb_residual(swap_matrix(yb_d));
            j["residual"] = r;
            rc = (r <= 1e-12) ? 0 : 1;
        } else if (yb_mode == "random") {
            double r = yb_residual(random_unitary(yb_d, yb_seed));
            j["residual"] = r;
        } else if (yb_mode == "scan") {
            std::cout << mixed_scan_csv(yb_d, yb_steps);
            return 0;
        } else if (yb_mode == "rep") {
            RMatrix s = swap_matrix(yb_d);
            BraidRepReport rep = braid_rep_check(yb_rep_n, s, s, s);
            nlohmann::ordered_json entries = nlohmann::ordered_json::array();
            for (const auto& e : rep.entries) {
                nlohmann::ordered_json one;
                one["relator"] = e.relator;
                one["distance"] = e.distance;
                entries.push_back(one);
            }
            j["entries"] = entries;
            j["max_distance"] = rep.max_distance;
            rc = (rep.max_distance <= 1e-12) ? 0 : 1;
        } else { // files
            RMatrix r = rmatrix_from_json(slurp(yb_files[0]));
            RMatrix rp = rmatrix_from_json(slurp(yb_files[1]));
            RMatrix rpp = rmatrix_from_json(slurp(yb_files[2]));
            j["mixed_residual"] = mixed_yb_residual(r, rp, rpp);
        }
        if (format == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << j.dump(2) << "\n";
        return rc;
    }

    if (*c_app) {
        Theta4ReferenceReport rep = run_theta4_reference_check();
        std::cout << "25 generators, 21 relators, reduced "
                  << (rep.reduced_6_1 ? "6/1" : "FAILED") << "\n";
        std::cout << rep.summary() << "\n";
        return rep.ok() ? 0 : 1;
    }

    if (*c_dump) {
        std::cout << fixture_json(dump_name) << "\n";
        return 0;
    }

    if (*c_cells) {
        Prepared pr = prepare(cells_input, cells_n);
        auto cells = enumerate_cells(pr.tree, pr.n, cells_dim);
        for (const auto& c : cells) std::cout << cell_to_string(pr.tree, c) << "\n";
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
