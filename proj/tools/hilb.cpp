#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hilb/apolarity.hpp"
#include "hilb/corpus.hpp"
#include "hilb/criteria.hpp"
#include "hilb/errors.hpp"
#include "hilb/graded_hom.hpp"
#include "hilb/groebner.hpp"
#include "hilb/hilbert.hpp"
#include "hilb/ideal.hpp"
#include "hilb/json_io.hpp"
#include "hilb/order.hpp"
#include "hilb/staircase.hpp"

namespace {

using namespace hilb;

std::string read_text(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot read file: " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

Ideal load_ideal(const std::string& path) { return ideal_from_json_text(read_text(path)); }

Polynomial load_poly(const std::string& path) {
    return polynomial_from_json_text(read_text(path));
}

MonomialOrder pick_order(const PolyRing& ring, const std::string& text) {
    return text.empty() ? default_order(ring) : MonomialOrder::parse(ring, text);
}

void emit(const nlohmann::json& doc) { std::cout << json_text(doc); }

nlohmann::json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [s, t] : pairs) rows.push_back(nlohmann::json::array({s, t}));
    return rows;
}

HilbertTable parse_table_flag(const std::string& csv, std::optional<long> tail) {
    HilbertTable table;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            size_t used = 0;
            const long v = std::stol(cell, &used);
            if (used != cell.size()) throw std::invalid_argument(cell);
            table.values.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad Hilbert table entry: " + cell);
        }
    }
    if (table.values.empty()) throw InputError("empty Hilbert table");
    table.eventual_constant = tail;
    return table;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for limits of ideals of points: Hilbert functions, "
                 "saturations, graded Hom tangent spaces, apolarity, and membership "
                 "criteria for the scheme-theoretic limit component"};
    app.require_subcommand(1);
    app.fallthrough();

    Limits& limits = global_limits();
    app.add_option("--max-basis", limits.max_basis, "Groebner basis size cap")
        ->envname("HILB_MAX_BASIS");
    app.add_option("--max-degree-cap", limits.max_degree,
                   "degree cap for Groebner basis elements")
        ->envname("HILB_MAX_DEGREE");
    app.add_option("--max-trunc", limits.max_truncation, "Hom truncation ceiling")
        ->envname("HILB_MAX_TRUNC");

    int exit_code = 0;

    // ---- hf ----
    auto* hf_cmd = app.add_subcommand("hf", "Hilbert function value of S/I at one degree");
    std::string hf_path = "-";
    long hf_degree = 0;
    hf_cmd->add_option("ideal", hf_path, "ideal JSON file, or - for stdin");
    hf_cmd->add_option("--degree", hf_degree, "degree to evaluate")->required();
    hf_cmd->callback([&] {
        emit({{"value", hilbert_function(load_ideal(hf_path), hf_degree)}});
    });

    // ---- hp ----
    auto* hp_cmd = app.add_subcommand(
        "hp", "Hilbert function table of S/I with the eventually-constant tail");
    std::string hp_path = "-";
    long hp_top = 12;
    hp_cmd->add_option("ideal", hp_path, "ideal JSON file, or - for stdin");
    hp_cmd->add_option("--top", hp_top, "largest tabulated degree");
    hp_cmd->callback([&] {
        const Ideal ideal = load_ideal(hp_path);
        nlohmann::json doc{{"table", table_to_json(hilbert_table(ideal, hp_top))}};
        try {
            doc["constant_value"] = constant_hilbert_value(ideal);
        } catch (const InputError&) {
            doc["constant_value"] = nullptr; // quotient is not zero-dimensional
        }
        emit(doc);
    });

    // ---- sat ----
    auto* sat_cmd = app.add_subcommand("sat", "saturation with respect to the irrelevant ideal");
    std::string sat_path = "-";
    sat_cmd->add_option("ideal", sat_path, "ideal JSON file, or - for stdin");
    sat_cmd->callback([&] { emit(ideal_to_json(saturate_irrelevant(load_ideal(sat_path)))); });

    // ---- colon ----
    auto* colon_cmd = app.add_subcommand("colon", "colon ideal (I : f) or (I : J)");
    std::string colon_path = "-", colon_poly, colon_ideal_path;
    colon_cmd->add_option("ideal", colon_path, "ideal JSON file, or - for stdin");
    auto* colon_by_poly =
        colon_cmd->add_option("--poly", colon_poly, "divisor polynomial, in the ideal's ring");
    auto* colon_by_ideal =
        colon_cmd->add_option("--divisor", colon_ideal_path, "divisor ideal JSON file");
    colon_by_poly->excludes(colon_by_ideal);
    colon_cmd->callback([&] {
        const Ideal ideal = load_ideal(colon_path);
        if (!colon_poly.empty()) {
            emit(ideal_to_json(
                ideal_colon(ideal, Polynomial::parse(ideal.ring(), colon_poly))));
        } else if (!colon_ideal_path.empty()) {
            emit(ideal_to_json(ideal_colon(ideal, load_ideal(colon_ideal_path))));
        } else {
            throw InputError("colon needs --poly or --divisor");
        }
    });

    // ---- intersect ----
    auto* intersect_cmd = app.add_subcommand("intersect", "intersection of two ideals");
    std::string intersect_a, intersect_b;
    intersect_cmd->add_option("a", intersect_a, "first ideal JSON file")->required();
    intersect_cmd->add_option("b", intersect_b, "second ideal JSON file")->required();
    intersect_cmd->callback([&] {
        emit(ideal_to_json(ideal_intersection(load_ideal(intersect_a), load_ideal(intersect_b))));
    });

    // ---- power ----
    auto* power_cmd = app.add_subcommand("power", "k-th power of an ideal");
    std::string power_path = "-";
    int power_k = 2;
    power_cmd->add_option("ideal", power_path, "ideal JSON file, or - for stdin");
    power_cmd->add_option("--k", power_k, "exponent (>= 1)")->required();
    power_cmd->callback([&] {
        if (power_k < 1) throw InputError("power exponent must be >= 1");
        emit(ideal_to_json(ideal_power(load_ideal(power_path), power_k)));
    });

    // ---- gb ----
    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis");
    std::string gb_path = "-", gb_order;
    gb_cmd->add_option("ideal", gb_path, "ideal JSON file, or - for stdin");
    gb_cmd->add_option("--order", gb_order,
                       "monomial order, e.g. lex:a0,a1,a2 or wlex:1,2,2/a0,a1,a2");
    gb_cmd->callback([&] {
        const Ideal ideal = load_ideal(gb_path);
        const MonomialOrder order = pick_order(*ideal.ring(), gb_order);
        const auto gb = ideal.reduced_gb(order);
        std::vector<std::string> gens;
        for (const auto& g : gb->elements) gens.push_back(g.str());
        emit({{"order", order.str(*ideal.ring())},
              {"generators", gens},
              {"reduced", gb->reduced}});
    });

    // ---- initial ----
    auto* initial_cmd = app.add_subcommand("initial", "initial (leading-term) ideal");
    std::string initial_path = "-", initial_order;
    initial_cmd->add_option("ideal", initial_path, "ideal JSON file, or - for stdin");
    initial_cmd->add_option("--order", initial_order, "monomial order text");
    initial_cmd->callback([&] {
        const Ideal ideal = load_ideal(initial_path);
        emit(ideal_to_json(initial_ideal(ideal, pick_order(*ideal.ring(), initial_order))));
    });

    // ---- member ----
    auto* member_cmd = app.add_subcommand("member", "ideal membership test");
    std::string member_path = "-", member_poly;
    member_cmd->add_option("ideal", member_path, "ideal JSON file, or - for stdin");
    member_cmd->add_option("--poly", member_poly, "polynomial to test")->required();
    member_cmd->callback([&] {
        const Ideal ideal = load_ideal(member_path);
        const Polynomial f = Polynomial::parse(ideal.ring(), member_poly);
        emit({{"polynomial", f.str()}, {"member", ideal_member(f, ideal)}});
    });

    // ---- staircase ----
    auto* staircase_cmd = app.add_subcommand(
        "staircase", "staircase data of a finite-colength 2-variable monomial ideal");
    std::string staircase_path = "-";
    staircase_cmd->add_option("ideal", staircase_path, "ideal JSON file, or - for stdin");
    staircase_cmd->callback([&] {
        const StaircaseDiagram diag = StaircaseDiagram::from_ideal(load_ideal(staircase_path));
        emit({{"colength", diag.colength()},
              {"boxes", pairs_to_json(diag.boxes())},
              {"generators", pairs_to_json(diag.generators())},
              {"relations", pairs_to_json(diag.relations())},
              {"hom_positive", diag.hom_positive()},
              {"extended_tangent_dim", diag.extended_tangent_dim()},
              {"render", diag.render()}});
    });

    // ---- tangent ----
    auto* tangent_cmd = app.add_subcommand(
        "tangent", "graded Hom dimension dim Hom(I, S/I)_d (d = 0: tangent space)");
    std::string tangent_path = "-";
    long tangent_degree = 0;
    long tangent_trunc = -1;
    tangent_cmd->add_option("ideal", tangent_path, "ideal JSON file, or - for stdin");
    tangent_cmd->add_option("--degree", tangent_degree, "internal degree d");
    tangent_cmd->add_option("--truncation", tangent_trunc,
                            "explicit syzygy-degree truncation (skips the stabilization search)");
    tangent_cmd->callback([&] {
        const std::optional<long> trunc =
            tangent_trunc >= 0 ? std::optional<long>(tangent_trunc) : std::nullopt;
        emit(hom_to_json(hom_graded_dim(load_ideal(tangent_path), tangent_degree, trunc)));
    });

    // ---- apolar ----
    auto* apolar_cmd = app.add_subcommand("apolar", "apolarity toolkit");
    apolar_cmd->require_subcommand(1);

    auto* ann_cmd = apolar_cmd->add_subcommand("ann", "annihilator ideal of a dual polynomial");
    std::string ann_path = "-";
    ann_cmd->add_option("poly", ann_path, "polynomial JSON file, or - for stdin");
    ann_cmd->callback([&] { emit(ideal_to_json(annihilator_generators(load_poly(ann_path)))); });

    auto* cat_cmd =
        apolar_cmd->add_subcommand("cat", "catalecticant rank and kernel in one degree");
    std::string cat_path = "-";
    long cat_e = 1;
    cat_cmd->add_option("poly", cat_path, "polynomial JSON file, or - for stdin");
    cat_cmd->add_option("--e", cat_e, "operator degree")->required();
    cat_cmd->callback([&] {
        const Catalecticant c = catalecticant(load_poly(cat_path), cat_e);
        std::vector<std::string> kernel;
        for (const auto& g : c.kernel_basis) kernel.push_back(g.str());
        emit({{"rank", c.rank}, {"kernel", kernel}});
    });

    auto* concise_cmd = apolar_cmd->add_subcommand("concise", "conciseness test");
    std::string concise_path = "-";
    concise_cmd->add_option("poly", concise_path, "polynomial JSON file, or - for stdin");
    concise_cmd->callback([&] { emit({{"concise", is_concise(load_poly(concise_path))}}); });

    auto* hessian_cmd = apolar_cmd->add_subcommand("hessian", "Hessian determinant");
    std::string hessian_path = "-";
    hessian_cmd->add_option("poly", hessian_path, "polynomial JSON file, or - for stdin");
    hessian_cmd->callback([&] {
        const Polynomial h = hessian_det(load_poly(hessian_path));
        emit({{"hessian_determinant", h.str()}, {"is_zero", h.is_zero()}});
    });

    auto* certify_cmd = apolar_cmd->add_subcommand(
        "certify", "cactus-rank upper-bound certificate for an apolar ideal");
    std::string certify_ideal = "-", certify_target;
    long certify_r = 0;
    certify_cmd->add_option("ideal", certify_ideal, "ideal JSON file, or - for stdin");
    certify_cmd->add_option("--target", certify_target, "polynomial JSON file")->required();
    certify_cmd->add_option("--r", certify_r, "claimed rank bound")->required();
    certify_cmd->callback([&] {
        emit(certificate_to_json(cactus_bound_certificate(
            load_ideal(certify_ideal), load_poly(certify_target), certify_r)));
    });

    auto* quartic_cmd = apolar_cmd->add_subcommand(
        "quartic-case", "one of the nine wild-quartic apolar family constructors");
    std::string quartic_case = "1A", quartic_a = "0", quartic_b = "0", quartic_q;
    quartic_cmd->add_option("--case", quartic_case, "case name: 1A 1B 1C 2A 2A0 2B 3A 3A0 3B")
        ->required();
    quartic_cmd->add_option("--a", quartic_a, "parameter a (rational)");
    quartic_cmd->add_option("--b", quartic_b, "parameter b (rational)");
    quartic_cmd->add_option("--q", quartic_q, "binary quartic Q in x2, x3 (empty = 0)");
    quartic_cmd->callback([&] {
        const RingPtr dual = dual_ring(4);
        const Polynomial q = quartic_q.empty() ? Polynomial::zero(dual)
                                               : Polynomial::parse(dual, quartic_q);
        const QuarticFamily fam =
            quartic_case_family(parse_quartic_case(quartic_case), Rational::parse(quartic_a),
                                Rational::parse(quartic_b), q);
        emit({{"case", quartic_case_name(parse_quartic_case(quartic_case))},
              {"dual_f", fam.dual_f.str()},
              {"ideal", ideal_to_json(fam.ideal)},
              {"coeff_a", fam.coeff_a.str()},
              {"coeff_b", fam.coeff_b.str()}});
    });

    // ---- slip ----
    auto* slip_cmd = app.add_subcommand(
        "slip", "one-sided membership verdict for the limit component");
    std::string slip_path = "-", slip_hf;
    long slip_r = 0, slip_kmax = 3, slip_window = 2, slip_tail = -1;
    slip_cmd->add_option("ideal", slip_path, "ideal JSON file, or - for stdin");
    slip_cmd->add_option("--r", slip_r, "number of points")->required();
    slip_cmd->add_option("--kmax", slip_kmax, "largest power probed by the necessary check");
    slip_cmd->add_option("--window", slip_window, "degrees probed past k(e+1)");
    slip_cmd->add_option("--hf", slip_hf,
                         "expected Hilbert values 'h0,h1,...' (default: generic table)");
    slip_cmd->add_option("--hf-tail", slip_tail,
                         "eventually-constant tail value of --hf (omit if unknown)");
    slip_cmd->callback([&] {
        SlipOptions options;
        options.k_max = slip_kmax;
        options.window = slip_window;
        if (!slip_hf.empty())
            options.table = parse_table_flag(
                slip_hf, slip_tail >= 0 ? std::optional<long>(slip_tail) : std::nullopt);
        else if (slip_tail >= 0)
            throw InputError("--hf-tail needs --hf");
        emit(verdict_to_json(slip_verdict(load_ideal(slip_path), slip_r, options)));
    });

    // ---- family ----
    auto* family_cmd = app.add_subcommand(
        "family", "plane degeneration family (J, I, K) for parameters (r, d, e)");
    long family_r = 0, family_d = 0, family_e = 0;
    family_cmd->add_option("--r", family_r, "number of points")->required();
    family_cmd->add_option("--d", family_d, "dropped Hilbert value")->required();
    family_cmd->add_option("--e", family_e, "degree of the drop")->required();
    family_cmd->callback([&] {
        const PlaneFamily fam = family_jik(family_r, family_d, family_e);
        emit({{"r", fam.r},
              {"d", fam.d},
              {"e", fam.e},
              {"j", ideal_to_json(fam.j)},
              {"i", ideal_to_json(fam.i)},
              {"k", ideal_to_json(fam.k)}});
    });

    // ---- examples ----
    auto* examples_cmd =
        app.add_subcommand("examples", "the built-in worked examples used by verify-paper");
    bool examples_full = false;
    examples_cmd->add_flag("--paper", examples_full,
                           "emit the full ideal documents, not just names");
    examples_cmd->callback([&] {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& item : corpus()) {
            nlohmann::json row{{"name", item.name}, {"summary", item.summary}, {"r", item.r}};
            if (examples_full) row["ideal"] = ideal_to_json(item.ideal);
            rows.push_back(row);
        }
        emit({{"examples", rows}});
    });

    // ---- verify-paper ----
    auto* verify_cmd = app.add_subcommand(
        "verify-paper", "run the built-in acceptance battery (exit 1 on any failure)");
    verify_cmd->callback([&] {
        const auto items = verification_battery();
        emit(verify_items_to_json(items));
        if (!all_pass(items)) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
