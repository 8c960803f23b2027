#include "hhgabber/pipeline.hpp"

#include <json.hpp>

namespace hhgabber {

const char* to_string(Status s) {
    switch (s) {
    case Status::involutive:
        return "involutive";
    case Status::violation:
        return "violation";
    case Status::error:
        return "error";
    case Status::unsupported:
        return "unsupported";
    }
    return "?";
}

int exit_code(Status s) {
    switch (s) {
    case Status::involutive:
        return 0;
    case Status::violation:
        return 1;
    case Status::error:
        return 2;
    case Status::unsupported:
        return 3;
    }
    return 2;
}

namespace {

// Criterion chain on the radical's generating set. Single-generator centres
// are the trivial case: Lambda^2 of a line vanishes, a 2-vector cannot pair
// with a 1-form, and the class action dies in negative form degree, so all
// three legs vanish without any computation.
CrossCheck run_cross_check(const Bivector& theta, const std::vector<Polynomial>& fs,
                           const Ideal& radical_ideal) {
    CrossCheck cc;
    DifferentialForm omega = conormal_determinant(fs);  // regularity gate; throws
    if (fs.size() < 2) {
        cc.eta_vanishes = true;
        cc.contraction_vanishes = true;
        cc.chern_vanishes = true;
        cc.agree = true;
        cc.note = "single-generator centre: all three criteria vanish for degree reasons";
        return cc;
    }

    NormalBivectorClass eta = conormal_projection(theta, fs);
    cc.eta_vanishes = eta.is_zero();
    DifferentialForm contracted = contract_form(theta, omega);
    const MonomialOrder order = MonomialOrder::grevlex();
    const auto& gb = radical_ideal.groebner_basis(order);
    bool vanishes = true;
    for (const auto& [S, c] : contracted.coefficients())
        if (!normal_form(c, gb, order).is_zero())
            vanishes = false;
    cc.contraction_vanishes = vanishes;

    auto dim = vector_space_dimension(radical_ideal, order);
    if (dim.has_value() && *dim > 0) {
        ChernCharacter ch = chern_character(radical_ideal, fs);
        cc.chern_vanishes = theta_annihilates_chern(theta, ch);
    } else {
        cc.note = "chern leg skipped: quotient not finite-dimensional";
    }

    cc.agree = (cc.eta_vanishes == cc.contraction_vanishes) &&
               (!cc.chern_vanishes || *cc.chern_vanishes == cc.eta_vanishes);
    return cc;
}

}  // namespace

GabberReport run_gabber_check(const Problem& problem, const RadicalStrategy& strategy) {
    GabberReport report;
    report.input_digest = problem.echo();

    if (!problem.dmodule && !problem.ideal) {
        report.status = Status::error;
        report.message = "input declares neither an ideal nor a dmodule";
        return report;
    }
    if (!problem.dmodule && !problem.bracket_canonical && !problem.bracket_table) {
        report.status = Status::error;
        report.message = "ideal input needs a bracket declaration";
        return report;
    }

    report.dmodule_input = problem.dmodule.has_value();
    Ideal char_ideal = problem.dmodule ? characteristic_ideal(*problem.dmodule)
                                       : *problem.ideal;
    Bivector theta = problem.dmodule        ? canonical_symplectic(char_ideal.ring())
                     : problem.bracket_canonical ? canonical_symplectic(problem.ring)
                                                 : deformation_class(*problem.bracket_table);

    // (1) the characteristic ideal (or the raw ideal), canonicalized.
    const MonomialOrder order = MonomialOrder::grevlex();
    report.char_ideal = char_ideal.groebner_basis(order);

    // (2) its involutivity.
    report.char_ideal_involutive = is_involutive(char_ideal, theta);

    // (3) the radical. A 'radical user' stanza supplies generators; it also
    // selects the user strategy when the caller left the choice automatic.
    RadicalStrategy effective = strategy;
    if (effective.kind == RadicalStrategy::Kind::user_supplied &&
        effective.user_generators.empty()) {
        if (!problem.user_radical) {
            report.status = Status::error;
            report.message =
                "user radical strategy requested but the input has no 'radical user' stanza";
            return report;
        }
        effective.user_generators = *problem.user_radical;
    }
    if (effective.kind == RadicalStrategy::Kind::auto_detect && problem.user_radical)
        effective = RadicalStrategy::user_supplied(*problem.user_radical);

    std::optional<RadicalResult> rad;
    try {
        rad = radical(char_ideal, effective);
    } catch (const std::invalid_argument& e) {
        report.status = Status::unsupported;
        report.message = e.what();
        return report;
    }
    report.radical_generators = rad->ideal.generators();
    report.strategy_used = rad->strategy_used;
    report.radical_trusted = rad->trusted;

    // (4) the verdict on the radical.
    report.radical_involutive = is_involutive(rad->ideal, theta);

    // (5) criterion chain when the radical generators form a regular
    // sequence.
    try {
        report.cross_check = run_cross_check(theta, rad->ideal.generators(), rad->ideal);
    } catch (const std::domain_error& e) {
        report.cross_check_note = std::string("cross-check skipped: ") + e.what();
    } catch (const std::invalid_argument& e) {
        report.cross_check_note = std::string("cross-check skipped: ") + e.what();
    }

    bool ok = report.char_ideal_involutive.involutive && report.radical_involutive.involutive;
    report.status = ok ? Status::involutive : Status::violation;
    if (!ok && report.dmodule_input) {
        report.message =
            "ALERT: involutivity violated on a D-module input; this contradicts the "
            "theorem and means either a kernel bug or a counterexample -- witnesses below";
    }
    return report;
}

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson witnesses_json(const InvolutivityResult& r) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& w : r.witnesses) {
        OrderedJson entry;
        entry["f"] = w.f.to_string();
        entry["g"] = w.g.to_string();
        entry["bracket"] = w.bracket.to_string();
        entry["normal_form"] = w.normal_form.to_string();
        arr.push_back(entry);
    }
    return arr;
}

OrderedJson involutivity_json(const InvolutivityResult& r) {
    OrderedJson j;
    j["verdict"] = r.involutive ? "involutive" : "violation";
    j["witnesses"] = witnesses_json(r);
    return j;
}

std::string render_text(const GabberReport& r) {
    std::string out;
    out += "status: " + std::string(to_string(r.status)) + "\n";
    if (!r.message.empty())
        out += r.message + "\n";
    out += "char_ideal:";
    for (const auto& g : r.char_ideal)
        out += " (" + g.to_string() + ")";
    out += "\n";
    out += "char_ideal_involutive: " +
           std::string(r.char_ideal_involutive.involutive ? "involutive" : "violation") + "\n";
    for (const auto& w : r.char_ideal_involutive.witnesses)
        out += "  witness {" + w.f.to_string() + ", " + w.g.to_string() +
               "} = " + w.bracket.to_string() + ", normal form " + w.normal_form.to_string() +
               "\n";
    out += "radical (strategy " + std::string(to_string(r.strategy_used)) +
           (r.radical_trusted ? ", computed" : ", user-asserted") + "):";
    for (const auto& g : r.radical_generators)
        out += " (" + g.to_string() + ")";
    out += "\n";
    out += "radical_involutive: " +
           std::string(r.radical_involutive.involutive ? "involutive" : "violation") + "\n";
    for (const auto& w : r.radical_involutive.witnesses)
        out += "  witness {" + w.f.to_string() + ", " + w.g.to_string() +
               "} = " + w.bracket.to_string() + ", normal form " + w.normal_form.to_string() +
               "\n";
    if (r.cross_check) {
        const CrossCheck& cc = *r.cross_check;
        out += "cross_check: eta=" + std::string(cc.eta_vanishes ? "0" : "nonzero") +
               " contraction=" + std::string(cc.contraction_vanishes ? "0" : "nonzero");
        if (cc.chern_vanishes)
            out += " chern_action=" + std::string(*cc.chern_vanishes ? "0" : "nonzero");
        out += cc.agree ? " (agree)" : " (DISAGREE)";
        out += "\n";
        if (!cc.note.empty())
            out += "  note: " + cc.note + "\n";
    } else if (!r.cross_check_note.empty()) {
        out += "cross_check: " + r.cross_check_note + "\n";
    }
    out += "input:\n";
    out += r.input_digest;
    return out;
}

std::string render_json(const GabberReport& r) {
    OrderedJson j;
    j["status"] = to_string(r.status);
    OrderedJson ci = OrderedJson::array();
    for (const auto& g : r.char_ideal)
        ci.push_back(g.to_string());
    j["char_ideal"] = ci;
    j["char_ideal_involutive"] = involutivity_json(r.char_ideal_involutive);
    OrderedJson rad;
    OrderedJson rg = OrderedJson::array();
    for (const auto& g : r.radical_generators)
        rg.push_back(g.to_string());
    rad["generators"] = rg;
    rad["strategy"] = to_string(r.strategy_used);
    rad["trusted"] = r.radical_trusted;
    j["radical"] = rad;
    j["radical_involutive"] = involutivity_json(r.radical_involutive);
    OrderedJson cc;
    if (r.cross_check) {
        cc["available"] = true;
        cc["eta_vanishes"] = r.cross_check->eta_vanishes;
        cc["contraction_vanishes"] = r.cross_check->contraction_vanishes;
        if (r.cross_check->chern_vanishes)
            cc["chern_action_vanishes"] = *r.cross_check->chern_vanishes;
        else
            cc["chern_action_vanishes"] = nullptr;
        cc["agree"] = r.cross_check->agree;
        cc["note"] = r.cross_check->note;
    } else {
        cc["available"] = false;
        cc["note"] = r.cross_check_note;
    }
    j["cross_check"] = cc;
    if (!r.message.empty())
        j["message"] = r.message;
    j["input_digest"] = r.input_digest;
    return j.dump(2) + "\n";
}

}  // namespace

std::string report_render(const GabberReport& report, ReportFormat format) {
    return format == ReportFormat::text ? render_text(report) : render_json(report);
}

}  // namespace hhgabber
