#include "unimod/reports.hpp"

#include <cstdio>

namespace unimod {

using nlohmann::json;

namespace {

std::string u64(std::uint64_t v) { return std::to_string(v); }

// %.17g keeps doubles round-trippable and byte-stable.
std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json zeta_terms_json(const std::vector<ZetaTerms>& terms) {
    json arr = json::array();
    for (const auto& t : terms)
        arr.push_back({{"j", t.j}, {"partial_terms", t.partial_terms}, {"correction_terms", t.correction_terms}});
    return arr;
}

} // namespace

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (const auto& v : m.row(i)) row.push_back(v.get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty())
        throw DomainError("matrix JSON must be a nonempty array of nonempty arrays");
    const std::size_t k = j.size(), n = j.front().size();
    std::vector<BigInt> entries;
    entries.reserve(k * n);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n) throw DomainError("ragged matrix JSON");
        for (const auto& v : row) {
            if (v.is_string())
                entries.emplace_back(v.get<std::string>(), 10);
            else if (v.is_number_integer())
                entries.emplace_back(std::to_string(v.get<long long>()), 10);
            else
                throw DomainError("matrix entries must be integers or decimal strings");
        }
    }
    return IntMatrix(k, n, std::move(entries));
}

std::string rational_string(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

json to_json(const BoxSpec& s) { return {{"k", s.k}, {"n", s.n}, {"bound", u64(s.bound)}}; }

json to_json(const EstimateReport& r) {
    return {{"spec", to_json(r.spec)},
            {"samples", u64(r.samples)},
            {"hits", u64(r.hits)},
            {"estimate", r.estimate},
            {"std_error", r.std_error},
            {"seed", u64(r.seed)},
            {"shards", r.shards},
            {"stream", to_string(r.stream)},
            {"theory_value", r.theory_value},
            {"z_score", r.z_score ? json(*r.z_score) : json(nullptr)}};
}

json to_json(const ExhaustiveReport& r) {
    return {{"spec", to_json(r.spec)},
            {"total", r.total.get_str()},
            {"hits", r.hits.get_str()},
            {"density", rational_string(r.density)},
            {"density_decimal", r.density.get_d()}};
}

json to_json(const LocalDensityCheck& r) {
    return {{"p", u64(r.p)},
            {"k", r.k},
            {"n", r.n},
            {"total", r.total.get_str()},
            {"full_rank", r.full_rank.get_str()},
            {"formula_count", r.formula_count.get_str()},
            {"empirical", rational_string(r.empirical)},
            {"theory", rational_string(r.theory)},
            {"agree", r.agree}};
}

json to_json(const DensityReport& r) {
    json out;
    if (r.codimension) {
        out["d"] = r.codimension;
    } else {
        out["k"] = r.k;
        out["n"] = r.n;
    }
    out["value"] = to_decimal_string(r.value);
    out["abs_error_bound"] = to_sci_string(r.abs_error_bound);
    json terms{{"zeta", zeta_terms_json(r.zeta_terms)}};
    if (r.product_cutoff) terms["product_cutoff"] = r.product_cutoff;
    out["terms"] = std::move(terms);
    return out;
}

json to_json(const HnfResult& r) {
    json pivots = json::array();
    for (long c : r.pivot_cols) pivots.push_back(c < 0 ? json(nullptr) : json(c));
    return {{"H", matrix_to_json(r.H)}, {"U", matrix_to_json(r.U)}, {"det_U", r.det_u}, {"rank", r.rank},
            {"pivot_cols", pivots}};
}

json to_json(const SnfResult& r) {
    json inv = json::array();
    for (const auto& d : r.invariants) inv.push_back(d.get_str());
    return {{"S", matrix_to_json(r.S)}, {"invariants", inv}, {"L", matrix_to_json(r.L)}, {"R", matrix_to_json(r.R)}};
}

std::string sweep_csv(std::span<const EstimateReport> reports) {
    std::string out = "B,samples,hits,estimate,std_error,theory,z\n";
    for (const auto& r : reports) {
        out += u64(r.spec.bound) + ',' + u64(r.samples) + ',' + u64(r.hits) + ',' + fmt_double(r.estimate) + ',' +
               fmt_double(r.std_error) + ',' + fmt_double(r.theory_value) + ',' +
               (r.z_score ? fmt_double(*r.z_score) : std::string()) + '\n';
    }
    return out;
}

} // namespace unimod
