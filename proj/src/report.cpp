#include "wsp/report.hpp"

#include <sstream>

namespace wsp {

using nlohmann::json;

std::string join(const std::vector<long long>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
    return os.str();
}

json json_report(const NumericalSemigroup& s) {
    const BoundsReport b = bounds_report(s);
    const GradedT1Table t = t1_table(s);

    json by_degree = json::object();
    for (const auto& [degree, dim] : t.by_degree)
        by_degree[std::to_string(degree)] = dim;

    json out = json::object();
    out["generators"] = s.min_gens();
    out["gaps"] = s.gaps();
    out["genus"] = s.genus();
    out["frobenius"] = s.frobenius();
    out["symmetric"] = is_symmetric(s);
    out["lambda"] = b.lambda;
    out["ewt"] = b.ewt;
    out["wt"] = b.wt;
    out["t1"] = {{"plus", t.t1_plus}, {"minus", t.t1_minus}, {"by_degree", by_degree}};
    json bounds = {{"pflueger_lower", b.pflueger_lower},
                   {"rv_upper", b.rv_upper},
                   {"new_lower", b.new_lower},
                   {"smoothing_dim", b.smoothing_dim}};
    bounds["exact_moduli_dim"] =
        b.exact_moduli_dim ? json(*b.exact_moduli_dim) : json(nullptr);
    out["bounds"] = bounds;
    out["negatively_graded"] = b.negatively_graded;
    return out;
}

std::string info_text(const NumericalSemigroup& s) {
    std::ostringstream os;
    os << "generators: " << join(s.min_gens()) << "\n";
    os << "gaps: " << join(s.gaps()) << "\n";
    os << "genus: " << s.genus() << "\n";
    os << "frobenius: " << s.frobenius() << "\n";
    os << "multiplicity: " << s.multiplicity() << "\n";
    os << "symmetric: " << (is_symmetric(s) ? "yes" : "no") << "\n";
    if (s.genus() >= 1) {
        os << "lambda: " << lambda(s) << "\n";
        os << "ewt: " << ewt(s) << "\n";
        os << "wt: " << wt(s) << "\n";
    }
    return os.str();
}

std::string t1_text(const NumericalSemigroup& s, const GradedT1Table& table) {
    std::ostringstream os;
    os << "generators: " << join(s.min_gens()) << "\n";
    os << "degree  dim T^1\n";
    for (const auto& [degree, dim] : table.by_degree)
        os << degree << "  " << dim << "\n";
    os << "t1_plus: " << table.t1_plus << "\n";
    os << "t1_minus: " << table.t1_minus << "\n";
    return os.str();
}

std::string bounds_text(const NumericalSemigroup& s, const BoundsReport& report) {
    std::ostringstream os;
    os << "generators: " << join(s.min_gens()) << "\n";
    os << "genus: " << report.genus << "\n";
    os << "lambda: " << report.lambda << "\n";
    os << "ewt: " << report.ewt << "\n";
    os << "t1_plus: " << report.t1_plus << "\n";
    os << "t1_minus: " << report.t1_minus << "\n";
    os << "pflueger_lower: " << report.pflueger_lower << "\n";
    os << "rv_upper: " << report.rv_upper << "\n";
    os << "new_lower: " << report.new_lower << "\n";
    os << "smoothing_dim: " << report.smoothing_dim << "\n";
    os << "negatively_graded: " << (report.negatively_graded ? "yes" : "no") << "\n";
    if (report.exact_moduli_dim)
        os << "exact_moduli_dim: " << *report.exact_moduli_dim << "\n";
    return os.str();
}

std::string csv_row(const NumericalSemigroup& s, const BoundsReport& report) {
    auto compact = [](const std::vector<long long>& values) {
        std::ostringstream os;
        for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
        return os.str();
    };
    std::ostringstream os;
    os << compact(s.gaps()) << ';' << compact(s.min_gens()) << ';' << report.genus << ';'
       << report.lambda << ';' << report.ewt << ';' << report.t1_plus << ';' << report.t1_minus
       << ';' << report.pflueger_lower << ';' << report.new_lower << ';' << report.rv_upper;
    return os.str();
}

std::string table1_text(const std::vector<Table1Row>& rows) {
    std::ostringstream os;
    os << "gaps | new_lower | rv_upper | t1_plus\n";
    for (const auto& row : rows)
        os << join(row.gaps) << " | " << row.new_lower << " | " << row.rv_upper << " | "
           << row.t1_plus << "\n";
    return os.str();
}

} // namespace wsp
