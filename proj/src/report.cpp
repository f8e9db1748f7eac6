#include "lambdacoh/report.hpp"

#include "lambdacoh/spec_json.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace lambdacoh {

using nlohmann::json;

json validation_to_json(const ValidationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(e);
    }
    json out;
    out["checks"] = checks;
    out["overall"] = rep.overall;
    return out;
}

namespace {

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json invariants_to_json(const AbelianInvariants& inv) {
    json out;
    json tors = json::array();
    for (const auto& d : inv.torsion) tors.push_back(int_to_json(d));
    out["torsion"] = tors;
    out["free_rank"] = inv.free_rank;
    out["pretty"] = inv.to_string();
    return out;
}

}  // namespace

json cohomology_to_json(const CohomologyReport& rep) {
    json out;
    out["n"] = rep.n;
    out["label"] = rep.label;
    json basis = json::array();
    for (const auto& b : rep.h0_basis) basis.push_back(matrix_to_json(b.matrix()));
    out["h0"] = {{"rank", rep.h0_rank},
                 {"basis", basis},
                 {"commutative", rep.h0_commutative},
                 {"stabilized", rep.h0_stabilized}};
    json h1 = invariants_to_json(rep.h1);
    h1["torsion_stable"] = rep.h1_torsion_stable;
    if (rep.h1_free_rank_formula) h1["free_rank_formula"] = *rep.h1_free_rank_formula;
    out["h1"] = h1;
    out["graded_commutative"] = rep.graded_commutative;
    if (!rep.witness_note.empty()) out["witness"] = rep.witness_note;
    return out;
}

json make_report(const std::string& command, const AdamsSpec& spec, const std::vector<long>& primes,
                 json results, bool ok, std::vector<std::string> theorem_tags) {
    json rep;
    rep["schema"] = 1;
    rep["command"] = command;
    rep["spec"] = ring_spec_to_json(spec);
    rep["primes"] = primes;
    rep["results"] = std::move(results);
    rep["ok"] = ok;
    json prov;
    prov["theorems"] = theorem_tags;
    prov["window"] = primes;
    rep["provenance"] = prov;
    return rep;
}

std::string matrix_to_markdown(const IntMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::vector<std::size_t> width(m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i][j] = m.at(i, j) == 0 ? "" : m.at(i, j).str();
            width[j] = std::max(width[j], cells[i][j].size());
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "    [ ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
            os << (j + 1 < m.cols() ? "  " : " ");
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

void render_value(std::ostringstream& os, const json& v, int depth);

void render_object(std::ostringstream& os, const json& v, int depth) {
    for (const auto& [key, val] : v.items()) {
        os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << "- **" << key << "**: ";
        if (val.is_object() || (val.is_array() && !val.empty() && val.front().is_array())) {
            os << "\n";
            render_value(os, val, depth + 1);
        } else {
            render_value(os, val, depth);
            os << "\n";
        }
    }
}

void render_value(std::ostringstream& os, const json& v, int depth) {
    if (v.is_object()) {
        render_object(os, v, depth);
    } else if (v.is_array() && !v.empty() && v.front().is_array()) {
        // matrix: render with blank zeros
        IntMatrix m(v.size(), v.front().size());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v[i].size(); ++j) m.at(i, j) = json_to_int(v[i][j]);
        os << matrix_to_markdown(m);
    } else {
        os << v.dump();
    }
}

}  // namespace

std::string report_to_markdown(const json& report) {
    std::ostringstream os;
    os << "# " << report.value("command", "report") << "\n\n";
    if (report.contains("spec") && report["spec"].contains("family"))
        os << "family: `" << report["spec"]["family"].get<std::string>() << "`";
    if (report.contains("primes")) os << "  window: " << report["primes"].dump();
    os << "  ok: " << (report.value("ok", false) ? "yes" : "no") << "\n\n";
    if (report.contains("results")) render_value(os, report["results"], 0);
    return os.str();
}

}  // namespace lambdacoh
