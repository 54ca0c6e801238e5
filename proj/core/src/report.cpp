#include "mdlie/report.hpp"

#include <json.hpp>

#include <sstream>

namespace mdlie {

namespace {

using nlohmann::ordered_json;

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json functional_json(const Functional& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : f) arr.push_back(x.str());
    return arr;
}

ordered_json vector_json(const std::vector<Rational>& v) { return functional_json(v); }

ordered_json matrix_json(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json spectrum_fields(const RankSpectrum& rs) {
    ordered_json doc;
    ordered_json observed = ordered_json::array();
    for (auto r : rs.observed) observed.push_back(r);
    doc["observed"] = std::move(observed);
    doc["max_rank"] = rs.max_rank;
    doc["sample_count"] = rs.sample_count;
    return doc;
}

std::string series_dims(const std::vector<Subspace>& series) {
    std::string out;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i) out += " > ";
        out += std::to_string(series[i].dim());
    }
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_functional(const Functional& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        out += f[i].str();
    }
    return out;
}

std::optional<Functional> parse_functional(std::string_view text, std::size_t dim) {
    Functional f;
    std::string token;
    auto flush = [&]() -> bool {
        auto r = Rational::parse(token);
        if (!r) return false;
        f.push_back(*r);
        token.clear();
        return true;
    };
    for (char ch : text) {
        if (ch == ',') {
            if (!flush()) return std::nullopt;
        } else if (ch == ' ') {
            continue;
        } else {
            token += ch;
        }
    }
    if (token.empty() || !flush()) return std::nullopt;
    if (f.size() != dim) return std::nullopt;
    return f;
}

std::string format_rank_set(const std::set<std::size_t>& ranks) {
    std::string out = "{";
    bool first = true;
    for (auto r : ranks) {
        if (!first) out += ", ";
        out += std::to_string(r);
        first = false;
    }
    out += "}";
    return out;
}

std::string validate_text(const std::variant<LieAlgebra, JacobiViolation>& result) {
    std::ostringstream os;
    if (const auto* g = std::get_if<LieAlgebra>(&result)) {
        os << "valid: dim " << g->dim() << ", " << g->table().size()
           << " nonzero bracket pair(s)\n";
    } else {
        const auto& v = std::get<JacobiViolation>(result);
        os << "invalid: Jacobi violation at triple (" << v.i + 1 << "," << v.j + 1 << ","
           << v.k + 1 << "), residual " << format_functional(v.residual) << "\n";
    }
    return os.str();
}

std::string validate_json(const std::variant<LieAlgebra, JacobiViolation>& result) {
    ordered_json doc;
    if (const auto* g = std::get_if<LieAlgebra>(&result)) {
        doc["valid"] = true;
        doc["dim"] = g->dim();
        doc["bracket_pairs"] = g->table().size();
    } else {
        const auto& v = std::get<JacobiViolation>(result);
        doc["valid"] = false;
        doc["violation"]["triple"] = {v.i + 1, v.j + 1, v.k + 1};
        doc["violation"]["residual"] = vector_json(v.residual);
    }
    return dump(doc);
}

std::string invariants_text(const LieAlgebra& g) {
    std::ostringstream os;
    os << "dim: " << g.dim() << "\n";
    os << "abelian: " << yes_no(is_abelian(g)) << "\n";
    os << "solvable: " << yes_no(is_solvable(g)) << "\n";
    os << "nilpotent: " << yes_no(is_nilpotent(g)) << "\n";
    os << "derived series dims: " << series_dims(derived_series(g)) << "\n";
    os << "lower central series dims: " << series_dims(lower_central_series(g)) << "\n";
    os << "center dim: " << center(g).dim() << "\n";
    os << "second derived ideal commutative: " << yes_no(necessary_condition(g)) << "\n";
    return os.str();
}

std::string invariants_json(const LieAlgebra& g) {
    ordered_json doc;
    doc["dim"] = g.dim();
    doc["abelian"] = is_abelian(g);
    doc["solvable"] = is_solvable(g);
    doc["nilpotent"] = is_nilpotent(g);
    ordered_json ds = ordered_json::array(), lcs = ordered_json::array();
    for (const auto& s : derived_series(g)) ds.push_back(s.dim());
    for (const auto& s : lower_central_series(g)) lcs.push_back(s.dim());
    doc["derived_series_dims"] = std::move(ds);
    doc["lower_central_series_dims"] = std::move(lcs);
    doc["center_dim"] = center(g).dim();
    doc["second_derived_commutative"] = necessary_condition(g);
    return dump(doc);
}

std::string orbit_dim_text(const LieAlgebra& g, const Functional& f) {
    std::ostringstream os;
    os << "functional: " << format_functional(f) << "\n";
    os << "orbit dimension: " << orbit_dimension(g, f) << "\n";
    os << "stabilizer dimension: " << stabilizer(g, f).dim() << "\n";
    return os.str();
}

std::string orbit_dim_json(const LieAlgebra& g, const Functional& f) {
    ordered_json doc;
    doc["functional"] = format_functional(f);
    doc["orbit_dimension"] = orbit_dimension(g, f);
    doc["stabilizer_dimension"] = stabilizer(g, f).dim();
    doc["b_form"] = matrix_json(b_form(g, f));
    return dump(doc);
}

std::string verdict_text(const MDVerdict& v, std::uint64_t seed) {
    std::ostringstream os;
    os << "seed: " << seed << "\n";
    os << "MD: " << md_status_name(v.status) << "\n";
    os << "max orbit dimension: " << v.max_rank << "\n";
    os << "observed ranks: " << format_rank_set(v.spectrum.observed) << "\n";
    if (v.witness) os << "witness: " << format_functional(*v.witness) << "\n";
    os << "certificate:\n";
    std::istringstream trace(v.certificate_trace);
    for (std::string line; std::getline(trace, line);) os << "  " << line << "\n";
    return os.str();
}

std::string verdict_json(const MDVerdict& v, std::uint64_t seed) {
    ordered_json doc;
    doc["status"] = md_status_name(v.status);
    doc["witness"] = v.witness ? ordered_json(format_functional(*v.witness))
                               : ordered_json(nullptr);
    doc["spectrum"] = spectrum_fields(v.spectrum);
    doc["max_rank"] = v.max_rank;
    doc["certificate_trace"] = v.certificate_trace;
    doc["seed"] = seed;
    return dump(doc);
}

std::string spectrum_text(const RankSpectrum& rs, std::uint64_t seed) {
    std::ostringstream os;
    os << "seed: " << seed << "\n";
    os << "observed ranks: " << format_rank_set(rs.observed) << "\n";
    os << "max observed rank: " << rs.max_rank << "\n";
    os << "functionals evaluated: " << rs.sample_count << "\n";
    return os.str();
}

std::string spectrum_json(const RankSpectrum& rs, std::uint64_t seed) {
    ordered_json doc = spectrum_fields(rs);
    doc["seed"] = seed;
    return dump(doc);
}

std::string classify_text(const ClassifyResult& r) {
    std::ostringstream os;
    os << "label: " << r.label.str() << "\n";
    if (r.witness) {
        os << "witness (new basis vectors as columns, input coordinates):\n";
        const auto& p = r.witness->p();
        for (std::size_t row = 0; row < p.rows(); ++row) {
            os << " ";
            for (std::size_t col = 0; col < p.cols(); ++col)
                os << " " << p.at(row, col).str();
            os << "\n";
        }
    }
    return os.str();
}

std::string classify_json(const ClassifyResult& r) {
    ordered_json doc;
    doc["label"] = r.label.str();
    ordered_json params = ordered_json::array();
    for (const auto& p : r.label.params) params.push_back(p.str());
    doc["params"] = std::move(params);
    if (!r.label.reason.empty()) doc["reason"] = r.label.reason;
    doc["witness"] = r.witness ? matrix_json(r.witness->p()) : ordered_json(nullptr);
    return dump(doc);
}

std::string distinct_text(const std::vector<DistinctnessPair>& pairs) {
    std::ostringstream os;
    for (const auto& p : pairs) {
        os << p.a.str() << " vs " << p.b.str() << ": "
           << (p.distinct ? "distinct" : "potentially isomorphic") << " - " << p.reason
           << "\n";
    }
    return os.str();
}

std::string distinct_json(const std::vector<DistinctnessPair>& pairs) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pairs) {
        ordered_json entry;
        entry["a"] = p.a.str();
        entry["b"] = p.b.str();
        entry["distinct"] = p.distinct;
        entry["reason"] = p.reason;
        arr.push_back(std::move(entry));
    }
    return dump(arr);
}

}  // namespace mdlie
