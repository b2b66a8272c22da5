#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stillife/bounds.hpp"
#include "stillife/constructions.hpp"
#include "stillife/core.hpp"
#include "stillife/pattern_io.hpp"
#include "stillife/reports.hpp"
#include "stillife/rules.hpp"
#include "stillife/search.hpp"
#include "stillife/voronoi.hpp"

using namespace stillife;
using nlohmann::json;

namespace {

std::vector<int> parse_dims(const std::string& s) {
    std::vector<int> dims;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find('x', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1) throw std::invalid_argument("");
            dims.push_back(v);
        } catch (...) {
            throw std::invalid_argument("bad dims '" + s + "': expected WxH[xD...]");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (dims.empty()) throw std::invalid_argument("bad dims '" + s + "'");
    return dims;
}

Neighborhood named_neighborhood(const std::string& name) {
    auto nb = neighborhood_by_name(name);
    if (!nb) throw std::invalid_argument("unknown neighborhood '" + name + "'");
    return *nb;
}

TorusPattern torus_of(ParsedPattern&& p, const char* need) {
    if (auto* t = std::get_if<TorusPattern>(&p)) return std::move(*t);
    throw std::invalid_argument(std::string(need) + " needs a torus pattern, got a window");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact density tools for neighbor-constrained lattice patterns"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --json sit after the subcommand as well as before
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the report as JSON");

    auto* check = app.add_subcommand("check", "verify still-life or degree-cap conditions");
    std::string check_file, check_nb = "moore8";
    bool check_still = false;
    int check_degree = -1;
    check->add_option("file", check_file, "pattern file")->required();
    check->add_flag("--still-life", check_still, "check the three still-life conditions");
    check->add_option("--degree", check_degree, "check max degree <= this cap");
    check->add_option("--neighborhood", check_nb, "moore8 | vn4 | tri6 | unit:k");

    auto* density_cmd = app.add_subcommand("density", "exact live-cell density");
    std::string density_file;
    density_cmd->add_option("file", density_file)->required();

    auto* evolve = app.add_subcommand("evolve", "apply synchronous updates");
    std::string evolve_file;
    int evolve_steps = 1;
    evolve->add_option("file", evolve_file)->required();
    evolve->add_option("--steps", evolve_steps, "number of updates (default 1)");

    auto* period = app.add_subcommand("period", "least return time under updates");
    std::string period_file;
    int period_max = 1024;
    period->add_option("file", period_file)->required();
    period->add_option("--max-steps", period_max, "give up after this many updates");

    auto* voronoi = app.add_subcommand("voronoi", "per-cell gauge areas of the augmented pattern");
    std::string voronoi_file;
    voronoi->add_option("file", voronoi_file)->required();

    auto* bound = app.add_subcommand("bound", "analytic and certificate density bounds");
    bound->require_subcommand(1);
    auto* bverify = bound->add_subcommand("verify", "check a weight certificate");
    std::string cert_file;
    long long verify_budget = 2'000'000'000;
    bverify->add_option("file", cert_file)->required();
    bverify->add_option("--budget", verify_budget, "search node budget");
    auto* blp = bound->add_subcommand("lp", "optimal box weights by cutting planes");
    std::string lp_box;
    int lp_n = 0;
    long long lp_budget = 2'000'000'000;
    blp->add_option("--box", lp_box, "box dims WxH")->required();
    blp->add_option("--n", lp_n, "degree cap")->required();
    blp->add_option("--budget", lp_budget, "search node budget");
    auto* bsuite = bound->add_subcommand("suite", "best analytic bound");
    std::string suite_nb = "moore8";
    int suite_n = 0;
    bsuite->add_option("--neighborhood", suite_nb, "moore8 | vn4 | tri6 | unit:k");
    bsuite->add_option("--n", suite_n, "degree cap")->required();

    auto* search = app.add_subcommand("search", "exact max density by branch and bound");
    std::string search_dims, search_nb = "moore8";
    int search_degree = -1;
    bool search_still = false;
    long long search_budget = 400'000'000;
    search->add_option("--dims", search_dims, "torus dims WxH[xD...]")->required();
    search->add_option("--degree", search_degree, "max live-neighbor cap");
    search->add_flag("--still-life", search_still, "maximize still-life density instead");
    search->add_option("--neighborhood", search_nb, "moore8 | vn4 | tri6 | unit:k");
    search->add_option("--budget", search_budget, "node budget");

    auto* gen = app.add_subcommand("gen", "emit a catalogued construction");
    std::string gen_name, gen_out;
    std::vector<int> gen_params;
    gen->add_option("name", gen_name, "construction name")->required();
    gen->add_option("params", gen_params, "integer parameters");
    gen->add_option("-o,--output", gen_out, "write the pattern here instead of stdout");

    auto* gallery_cmd = app.add_subcommand("gallery", "transcribed figure patterns");
    std::string gallery_name;
    bool gallery_list = false, gallery_window = false;
    gallery_cmd->add_option("name", gallery_name, "item name");
    gallery_cmd->add_flag("--list", gallery_list, "list item names");
    gallery_cmd->add_flag("--window", gallery_window, "emit the finite window form");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Report rep;
        if (*check) {
            ParsedPattern p = load_pattern(check_file);
            if (check_degree >= 0) {
                rep = report_degree_check(torus_of(std::move(p), "degree check"),
                                          named_neighborhood(check_nb), check_degree);
            } else if (auto* g = std::get_if<FiniteGrid>(&p)) {
                rep = report_interior_check(*g);
            } else {
                rep = report_still_check(std::get<TorusPattern>(p));
            }
        } else if (*density_cmd) {
            ParsedPattern p = load_pattern(density_file);
            if (auto* g = std::get_if<FiniteGrid>(&p))
                rep = report_grid_density(*g);
            else
                rep = report_density(std::get<TorusPattern>(p));
        } else if (*evolve) {
            rep = report_evolve(torus_of(load_pattern(evolve_file), "evolve"), evolve_steps);
        } else if (*period) {
            rep = report_period(torus_of(load_pattern(period_file), "period"), period_max);
        } else if (*voronoi) {
            TorusPattern p = torus_of(load_pattern(voronoi_file), "area accounting");
            if (p.dimension() != 2)
                throw std::invalid_argument("area accounting needs a 2-D torus");
            std::vector<int> dims = p.dims();
            for (int& d : dims)
                if (d % 3 != 0) d *= 3;
            TorusPattern tiled = tile(p, dims);
            TorusPattern aug = augment_isolated(tiled);
            rep = report_voronoi(aug, static_cast<int>(aug.count() - tiled.count()));
        } else if (*bound) {
            if (*bverify) {
                WeightCertificate cert = load_certificate(cert_file);
                rep = report_certificate(cert, verify_certificate(cert, verify_budget));
            } else if (*blp) {
                std::vector<int> box = parse_dims(lp_box);
                if (box.size() != 2) throw std::invalid_argument("--box expects WxH");
                rep = report_lp(box[0], box[1], lp_n,
                                optimal_weights_lp(box[0], box[1], moore8(), lp_n, lp_budget));
            } else {
                Neighborhood nb = named_neighborhood(suite_nb);
                rep = report_bound_suite(nb, suite_n, bound_suite(nb, suite_n));
            }
        } else if (*search) {
            std::vector<int> dims = parse_dims(search_dims);
            if (search_still == (search_degree >= 0))
                throw std::invalid_argument("pass exactly one of --degree N or --still-life");
            SearchResult r =
                search_still
                    ? max_still_life_density(dims, search_budget)
                    : max_density(dims,
                                  Constraint(MaxDegree(named_neighborhood(search_nb),
                                                       search_degree)),
                                  search_budget);
            rep = report_search(r);
        } else if (*gen) {
            TorusPattern p = generate(gen_name, gen_params);
            std::string text = serialize(p);
            if (!gen_out.empty()) {
                std::ofstream out(gen_out);
                if (!out) throw std::runtime_error("cannot write " + gen_out);
                out << text;
                rep.text = "wrote " + gen_out;
                rep.data = json{{"command", "gen"}, {"name", gen_name}, {"wrote", gen_out}};
            } else {
                rep.text = text;
                while (!rep.text.empty() && rep.text.back() == '\n') rep.text.pop_back();
                rep.data = json{{"command", "gen"},
                                {"name", gen_name},
                                {"params", gen_params},
                                {"pattern", text}};
            }
        } else if (*gallery_cmd) {
            if (gallery_list || gallery_name.empty()) {
                std::string text;
                json names = json::array();
                for (const auto& n : gallery_names()) {
                    if (!text.empty()) text += "\n";
                    text += n;
                    names.push_back(n);
                }
                rep.text = text;
                rep.data = json{{"command", "gallery"}, {"names", names}};
            } else {
                const GalleryItem& item = gallery_item(gallery_name);
                std::string text;
                if (gallery_window) {
                    if (!item.window)
                        throw std::invalid_argument(gallery_name + " has no window form");
                    text = serialize(*item.window);
                } else if (item.torus) {
                    text = serialize(*item.torus);
                } else {
                    text = serialize(*item.window);
                }
                std::string head;
                if (!item.note.empty()) head = "! " + item.note + "\n";
                rep.text = head + text;
                while (!rep.text.empty() && rep.text.back() == '\n') rep.text.pop_back();
                rep.data = json{{"command", "gallery"},
                                {"name", item.name},
                                {"neighborhood", item.nb.name},
                                {"note", item.note},
                                {"pattern", text}};
            }
        }
        if (as_json)
            std::cout << rep.data.dump(2) << "\n";
        else
            std::cout << rep.text << "\n";
        return rep.status;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
