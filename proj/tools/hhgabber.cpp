// hhgabber: involutivity checks for characteristic ideals and their
// radicals, plus the supporting Groebner / symbol / bracket / Koszul
// machinery, over exact rationals.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hhgabber/pipeline.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

hhgabber::RadicalStrategy strategy_from_name(const std::string& name) {
    using K = hhgabber::RadicalStrategy;
    if (name == "auto")
        return K::auto_detect();
    if (name == "monomial")
        return K::monomial();
    if (name == "principal")
        return K::principal();
    if (name == "zerodim")
        return K::zero_dimensional();
    if (name == "user")
        return {hhgabber::RadicalStrategy::Kind::user_supplied, {}};
    throw CLI::ValidationError("--radical-strategy",
                               "expected auto|monomial|principal|zerodim|user");
}

hhgabber::MonomialOrder order_from_name(const std::string& name, std::size_t arity) {
    if (name == "lex")
        return hhgabber::MonomialOrder::lex();
    if (name == "grevlex")
        return hhgabber::MonomialOrder::grevlex();
    if (name.rfind("weight:", 0) == 0) {
        std::vector<std::int32_t> w;
        std::stringstream ss(name.substr(7));
        std::string piece;
        while (std::getline(ss, piece, ','))
            w.push_back(static_cast<std::int32_t>(std::stol(piece)));
        if (w.size() != arity)
            throw std::runtime_error("weight vector length " + std::to_string(w.size()) +
                                     " does not match the ring arity " + std::to_string(arity));
        return hhgabber::MonomialOrder::weighted(std::move(w));
    }
    throw std::runtime_error("unknown order '" + name + "' (lex|grevlex|weight:W)");
}

int run_check(const std::string& file, bool json, const std::string& strategy_name) {
    hhgabber::Problem problem = hhgabber::parse_input(read_file(file));
    hhgabber::GabberReport report =
        hhgabber::run_gabber_check(problem, strategy_from_name(strategy_name));
    std::cout << hhgabber::report_render(
        report, json ? hhgabber::ReportFormat::json : hhgabber::ReportFormat::text);
    return hhgabber::exit_code(report.status);
}

int run_groebner(const std::string& file, const std::string& order_name, bool json) {
    hhgabber::Problem problem = hhgabber::parse_input(read_file(file));
    if (!problem.ideal)
        throw std::runtime_error("groebner needs an 'ideal' stanza in " + file);
    hhgabber::MonomialOrder order = order_from_name(order_name, problem.ring->arity());
    const auto& gb = problem.ideal->groebner_basis(order);
    if (json) {
        nlohmann::ordered_json j;
        j["order"] = order.key();
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& g : gb)
            arr.push_back(g.to_string());
        j["basis"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& g : gb)
            std::cout << g.to_string() << "\n";
    }
    return 0;
}

int run_charideal(const std::string& file, bool json) {
    hhgabber::Problem problem = hhgabber::parse_input(read_file(file));
    if (!problem.dmodule)
        throw std::runtime_error("charideal needs a 'dmodule' stanza in " + file);
    hhgabber::Ideal J = hhgabber::characteristic_ideal(*problem.dmodule);
    const auto& gb = J.groebner_basis(hhgabber::MonomialOrder::grevlex());
    if (json) {
        nlohmann::ordered_json j;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& g : gb)
            arr.push_back(g.to_string());
        j["char_ideal"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& g : gb)
            std::cout << g.to_string() << "\n";
    }
    return 0;
}

int run_hkr(std::size_t vars, std::size_t degree, bool json) {
    hhgabber::HkrReport rep = hhgabber::hkr_compare(vars, degree);
    if (json) {
        nlohmann::ordered_json j;
        j["vars"] = vars;
        j["degree"] = degree;
        j["koszul_rank"] = rep.koszul_rank;
        j["form_rank"] = rep.form_rank;
        j["equal"] = rep.equal;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [e, dx] : rep.basis_map) {
            nlohmann::ordered_json m;
            m["koszul"] = e;
            m["form"] = dx;
            arr.push_back(m);
        }
        j["basis_map"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "koszul rank " << rep.koszul_rank << ", form rank " << rep.form_rank
                  << (rep.equal ? " (equal)" : " (MISMATCH)") << "\n";
        for (const auto& [e, dx] : rep.basis_map)
            std::cout << "  " << e << " -> " << dx << "\n";
    }
    return rep.equal ? 0 : 1;
}

int run_bracket(const std::string& file, const std::string& f_text, const std::string& g_text,
                bool json) {
    hhgabber::Problem problem = hhgabber::parse_input(read_file(file));
    hhgabber::Bivector theta = [&]() {
        if (problem.bracket_table)
            return hhgabber::deformation_class(*problem.bracket_table);
        if (problem.bracket_canonical || problem.ring->cotangent())
            return hhgabber::canonical_symplectic(problem.ring);
        throw std::runtime_error("no bracket declared in " + file);
    }();
    hhgabber::Polynomial f = hhgabber::parse_polynomial(f_text, problem.ring);
    hhgabber::Polynomial g = hhgabber::parse_polynomial(g_text, problem.ring);
    hhgabber::Polynomial br = hhgabber::bracket_eval(theta, f, g);
    if (json) {
        nlohmann::ordered_json j;
        j["f"] = f.to_string();
        j["g"] = g.to_string();
        j["bracket"] = br.to_string();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << br.to_string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"involutivity checker for characteristic ideals"};
    app.require_subcommand(1);

    std::string file, strategy = "auto", order = "grevlex";
    bool json = false;
    std::size_t vars = 1, degree = 0;

    auto* check = app.add_subcommand("check", "run the involutivity check on a problem file");
    check->add_option("file", file, "problem file")->required();
    check->add_flag("--json", json, "emit the JSON report");
    check->add_option("--radical-strategy", strategy,
                      "auto|monomial|principal|zerodim|user");

    auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis of the ideal");
    groebner->add_option("file", file, "problem file")->required();
    groebner->add_option("--order", order, "lex|grevlex|weight:W (W comma-separated)");
    groebner->add_flag("--json", json, "emit JSON");

    auto* charideal = app.add_subcommand("charideal", "characteristic ideal of the dmodule");
    charideal->add_option("file", file, "problem file")->required();
    charideal->add_flag("--json", json, "emit JSON");

    auto* hkr = app.add_subcommand("hkr", "Koszul homology rank against the form rank");
    hkr->add_option("--vars", vars, "number of variables")->required();
    hkr->add_option("--degree", degree, "homological degree")->required();
    hkr->add_flag("--json", json, "emit JSON");

    std::vector<std::string> eval_args;
    auto* bracket = app.add_subcommand("bracket", "evaluate the declared bracket");
    bracket->add_option("file", file, "problem file")->required();
    bracket->add_option("--eval", eval_args, "the two arguments F G")
        ->required()
        ->expected(2);
    bracket->add_flag("--json", json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(file, json, strategy);
        if (groebner->parsed())
            return run_groebner(file, order, json);
        if (charideal->parsed())
            return run_charideal(file, json);
        if (hkr->parsed())
            return run_hkr(vars, degree, json);
        if (bracket->parsed())
            return run_bracket(file, eval_args[0], eval_args[1], json);
    } catch (const hhgabber::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
