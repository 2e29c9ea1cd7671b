#ifndef MONTYPE_REPORT_HPP
#define MONTYPE_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "montype/ideal_io.hpp"
#include "montype/jets.hpp"
#include "montype/nss.hpp"
#include "montype/numeric.hpp"
#include "montype/oracle.hpp"
#include "montype/type_invariants.hpp"

// Report documents for the CLI. Machine output is one JSON document per
// run with a schema_version field; every rational is serialized as an
// exact "p/q" string. The JSON carries no timing so identical flags and
// seed give byte-identical output; wall-clock timing is printed on the
// human-readable side only.

namespace montype {

using nlohmann::json;

constexpr int kReportSchemaVersion = 1;

inline json input_json(const IdealFile& file) {
    json gens = json::array();
    for (const auto& g : file.generators) {
        if (g.is_monomial())
            gens.push_back(monomial_to_string(g.monomial_exponent(), file.var_names));
        else {
            std::string s;
            for (const auto& [expo, coeff] : g.terms()) {
                if (!s.empty()) s += " + ";
                if (coeff != 1 || total_degree(expo) == 0) s += rat_to_string(coeff) + "*";
                if (total_degree(expo) > 0) s += monomial_to_string(expo, file.var_names);
                if (s.ends_with("*")) s.pop_back();
            }
            gens.push_back(s);
        }
    }
    return json{{"n", file.n}, {"variables", file.var_names}, {"generators", gens}};
}

inline json report_base(const std::string& command, const IdealFile& file) {
    return json{{"schema_version", kReportSchemaVersion},
                {"command", command},
                {"input", input_json(file)}};
}

inline json witness_json(const Witness& w) {
    json weight = json::array();
    for (const Int& e : w.weight.primitive()) weight.push_back(e.str());
    return json{{"weight", weight},
                {"r", rat_to_string(w.r)},
                {"m", rat_to_string(w.m)},
                {"ratio", rat_to_string(w.ratio)},
                {"center_dim", w.center_dim}};
}

inline std::string weight_string(const std::vector<Int>& w) {
    std::string s = "(";
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j) s += ",";
        s += w[j].str();
    }
    return s + ")";
}

/// Parametrization text t -> (c_1 t^{w_1}, ...).
inline std::string arc_to_string(const Arc& arc) {
    std::string s = "t -> (";
    for (int j = 0; j < arc.dim(); ++j) {
        if (j) s += ", ";
        const Jet& c = arc.components[j];
        OrderResult o = c.order();
        if (!o.finite) {
            s += "0";
            continue;
        }
        std::string coeff = rat_to_string(c[o.value]);
        if (o.value == 0)
            s += coeff;
        else {
            if (coeff == "1")
                s += "t";
            else if (coeff == "-1")
                s += "-t";
            else
                s += coeff + "*t";
            if (o.value > 1) s += "^" + std::to_string(o.value);
        }
    }
    return s + ")";
}

inline json arc_json(const Arc& arc) {
    json weights = json::array();
    for (const Int& w : arc.weights) weights.push_back(w.str());
    json coeffs = json::array();
    for (const Jet& c : arc.components) {
        OrderResult o = c.order();
        coeffs.push_back(o.finite ? rat_to_string(c[o.value]) : "0");
    }
    return json{{"weights", weights},
                {"coefficients", coeffs},
                {"parametrization", arc_to_string(arc)}};
}

inline json type_report_json(const IdealFile& file, const TypeReport& report,
                             const Rat& boundary) {
    json doc = report_base("type", file);
    doc["value"] = rat_to_string(report.value);
    doc["boundary_type"] = rat_to_string(boundary);
    json witnesses = json::array();
    for (const auto& w : report.witnesses) witnesses.push_back(witness_json(w));
    doc["witnesses"] = witnesses;
    return doc;
}

inline json ttype_report_json(const IdealFile& file, const TypeReport& report, int dim_z) {
    json doc = report_base("ttype", file);
    doc["value"] = rat_to_string(report.value);
    doc["dim_zero_locus"] = dim_z;
    json rad = json::array();
    for (const auto& g : report.denominator_ideal.generators())
        rad.push_back(monomial_to_string(g, file.var_names));
    doc["radical"] = rad;
    json witnesses = json::array();
    for (const auto& w : report.witnesses) witnesses.push_back(witness_json(w));
    doc["witnesses"] = witnesses;
    return doc;
}

inline json nss_report_json(const IdealFile& file, const NssReport& report) {
    json doc = report_base("nss", file);
    doc["ttype"] = rat_to_string(report.ttype_value);
    doc["exponent"] = report.exponent_n.str();
    doc["sigma_min"] = report.sigma_min.str();
    json inclusion{{"holds", report.inclusion_holds}};
    json certs = json::array();
    for (const auto& c : report.inclusion.certificates)
        certs.push_back(json{{"monomial", monomial_to_string(c.monomial, file.var_names)},
                             {"divisor", monomial_to_string(c.divisor, file.var_names)},
                             {"cofactor", monomial_to_string(c.cofactor, file.var_names)}});
    inclusion["certificates"] = certs;
    if (report.inclusion.violation)
        inclusion["violation"] = monomial_to_string(*report.inclusion.violation, file.var_names);
    doc["inclusion"] = inclusion;
    json bs{{"holds", report.bs_holds}};
    if (report.briancon_skoda.violation)
        bs["violation"] = monomial_to_string(*report.briancon_skoda.violation, file.var_names);
    doc["briancon_skoda"] = bs;
    doc["degree_bound"] = json{{"d", report.max_degree},
                               {"bound", report.geometric_bound.str()},
                               {"holds", report.geometric_ok}};
    return doc;
}

inline json probe_report_json(const IdealFile& file, const ProbeResult& result,
                              const std::string& status, const ProbeStrategy& strategy) {
    json doc = report_base("probe", file);
    doc["lower_bound"] = rat_to_string(result.lower_bound);
    doc["status"] = status;
    doc["boundary_type"] = rat_to_string(2 * result.lower_bound);
    doc["weight_bound"] = strategy.weight_bound;
    doc["truncation"] = strategy.truncation;
    doc["seed"] = strategy.seed;
    if (result.best_arc) {
        json arc = arc_json(*result.best_arc);
        arc["numerator_order"] = rat_to_string(result.best_numerator);
        arc["denominator_order"] = rat_to_string(result.best_denominator);
        doc["best_arc"] = arc;
    }
    doc["inconclusive"] = result.inconclusive;
    return doc;
}

inline json curves_report_json(const IdealFile& file, const TypeReport& report,
                               const std::vector<Arc>& arcs, std::uint64_t seed) {
    json doc = report_base("curves", file);
    doc["value"] = rat_to_string(report.value);
    doc["seed"] = seed;
    json curves = json::array();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        json c = arc_json(arcs[i]);
        c["orders"] = json{{"r", rat_to_string(report.witnesses[i].r)},
                           {"m", rat_to_string(report.witnesses[i].m)}};
        curves.push_back(c);
    }
    doc["curves"] = curves;
    return doc;
}

inline json oracle_json(const CrossCheckReport& report) {
    return json{{"passed", report.passed},
                {"points_checked", report.points_checked},
                {"mismatches", report.mismatches}};
}

// Human-readable rendering.

inline std::string describe_witness(const Witness& w) {
    std::ostringstream os;
    os << "weight " << weight_string(w.weight.primitive()) << ": r = " << rat_to_string(w.r)
       << ", m = " << rat_to_string(w.m) << ", ratio = " << rat_to_string(w.ratio)
       << ", center dim " << w.center_dim;
    return os.str();
}

inline std::string render_text(const json& doc) {
    std::ostringstream os;
    const std::string command = doc.at("command").get<std::string>();
    const json& input = doc.at("input");
    os << command << ": " << input.at("n").get<int>() << " variables, "
       << input.at("generators").size() << " generators\n";

    auto print_witnesses = [&](const json& ws) {
        for (const auto& w : ws) {
            os << "  witness weight (";
            const auto& weight = w.at("weight");
            for (std::size_t j = 0; j < weight.size(); ++j)
                os << (j ? "," : "") << weight[j].get<std::string>();
            os << "): r = " << w.at("r").get<std::string>()
               << ", m = " << w.at("m").get<std::string>() << ", center dim "
               << w.at("center_dim").get<int>() << "\n";
        }
    };

    if (command == "type") {
        os << "T = " << doc.at("value").get<std::string>() << "\n";
        os << "boundary type 2T = " << doc.at("boundary_type").get<std::string>() << "\n";
        print_witnesses(doc.at("witnesses"));
    } else if (command == "ttype") {
        os << "ttype = " << doc.at("value").get<std::string>() << "\n";
        os << "dim Z = " << doc.at("dim_zero_locus").get<int>() << "\n";
        print_witnesses(doc.at("witnesses"));
    } else if (command == "nss") {
        os << "ttype = " << doc.at("ttype").get<std::string>() << "\n";
        os << "Nullstellensatz exponent N = " << doc.at("exponent").get<std::string>() << "\n";
        os << "sigma_min = " << doc.at("sigma_min").get<std::string>() << "\n";
        const json& inc = doc.at("inclusion");
        os << "radical^N inside ideal: " << (inc.at("holds").get<bool>() ? "yes" : "NO") << "\n";
        for (const auto& c : inc.at("certificates"))
            os << "  " << c.at("monomial").get<std::string>() << " = ("
               << c.at("divisor").get<std::string>() << ") * ("
               << c.at("cofactor").get<std::string>() << ")\n";
        os << "Briancon-Skoda closure(I^n) inside I: "
           << (doc.at("briancon_skoda").at("holds").get<bool>() ? "yes" : "NO") << "\n";
        const json& geo = doc.at("degree_bound");
        os << "degree bound: ttype <= d^n with d = " << geo.at("d").get<int>() << ", d^n = "
           << geo.at("bound").get<std::string>() << ": "
           << (geo.at("holds").get<bool>() ? "yes" : "NO") << "\n";
    } else if (command == "probe") {
        os << "certified lower bound = " << doc.at("lower_bound").get<std::string>() << " ("
           << doc.at("status").get<std::string>() << ")\n";
        os << "boundary type report = " << doc.at("boundary_type").get<std::string>() << "\n";
        if (doc.contains("best_arc")) {
            const json& arc = doc.at("best_arc");
            os << "best arc " << arc.at("parametrization").get<std::string>() << " with orders "
               << arc.at("numerator_order").get<std::string>() << "/"
               << arc.at("denominator_order").get<std::string>() << "\n";
        }
        for (const auto& item : doc.at("inconclusive"))
            os << "  inconclusive: " << item.get<std::string>() << "\n";
    } else if (command == "curves") {
        os << "value = " << doc.at("value").get<std::string>() << "\n";
        for (const auto& c : doc.at("curves"))
            os << "  " << c.at("parametrization").get<std::string>() << "  orders (r, m) = ("
               << c.at("orders").at("r").get<std::string>() << ", "
               << c.at("orders").at("m").get<std::string>() << ")\n";
    }

    if (doc.contains("oracle")) {
        const json& oracle = doc.at("oracle");
        os << "oracle cross-check: " << (oracle.at("passed").get<bool>() ? "passed" : "FAILED")
           << " (" << oracle.at("points_checked").get<long long>() << " lattice points)\n";
        for (const auto& m : oracle.at("mismatches")) os << "  " << m.get<std::string>() << "\n";
    }
    return os.str();
}

}  // namespace montype

#endif
