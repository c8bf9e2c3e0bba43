#include "llike/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace llike {

std::string format_double(double v) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, res.ptr);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

nlohmann::json to_json(const RationalSum& s) {
    nlohmann::json j;
    j["value"] = s.value();
    j["exact"] = s.exact() ? nlohmann::json(s.exact()->str()) : nlohmann::json(nullptr);
    j["error_bound"] = s.error_bound();
    j["terms"] = s.terms();
    return j;
}

nlohmann::json set_json(const CoprimeSet& set) {
    return {{"family", set.family()},
            {"variant", variant_name(set.variant())},
            {"xmax", set.bound()},
            {"size", set.size()}};
}

nlohmann::json to_json(const CorrelationSpec& spec) {
    return {{"k", spec.k()}, {"a", spec.coeffs}, {"h", spec.shifts}};
}

nlohmann::json to_json(const ConvergenceReport& r) {
    return {{"set", r.set_descriptor},
            {"variant", variant_name(r.variant)},
            {"spec", to_json(r.spec)},
            {"grid", r.grid},
            {"counts", r.counts},
            {"values", r.values}};
}

nlohmann::json to_json(const Decomposition& d, std::size_t max_listed) {
    nlohmann::json spf = nlohmann::json::array();
    for (std::size_t i = 0; i < d.composites.size(); ++i)
        spf.push_back({{"c", d.composites[i]}, {"p", d.spf[i]}});
    const std::size_t listed = std::min(max_listed, d.primes.size());
    return {{"composites", d.composites},
            {"spf", spf},
            {"prime_count", d.primes.size()},
            {"primes", std::vector<std::uint64_t>(d.primes.begin(), d.primes.begin() + static_cast<std::ptrdiff_t>(listed))},
            {"primes_truncated", listed < d.primes.size()},
            {"recip_sum_C", to_json(d.recip_sum_C)},
            {"recip_sum_P", to_json(d.recip_sum_P)}};
}

std::string exponent_string(const SemigroupEnumeration& e, std::size_t i) {
    std::string s;
    for (auto [g, ex] : e.exponents[i]) {
        if (!s.empty()) s += '/';
        s += std::to_string(e.generators[g]) + "^" + std::to_string(ex);
    }
    return s;
}

nlohmann::json to_json(const SemigroupEnumeration& e) {
    nlohmann::json exps = nlohmann::json::array();
    for (std::size_t i = 0; i < e.count(); ++i) exps.push_back(exponent_string(e, i));
    return {{"bound", e.bound},
            {"generators", e.generators},
            {"count", e.count()},
            {"elements", e.elements},
            {"exponents", exps}};
}

nlohmann::json to_json(const ReciprocalMass& m) {
    return {{"I", to_json(m.mass)},
            {"product_bound", static_cast<double>(m.product_bound)},
            {"product_bound_exact",
             m.product_bound_exact ? nlohmann::json(m.product_bound_exact->str()) : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const LcmMoment& m) {
    return {{"sum", to_json(m.sum)},
            {"product_bound", static_cast<double>(m.product_bound)},
            {"tuples", to_string_i128(static_cast<i128>(m.tuples))}};
}

nlohmann::json to_json(const TailMass& t) {
    return {{"T", t.threshold},
            {"tail", to_json(t.tail)},
            {"I", to_json(t.mass)},
            {"tail_count", t.tail_count},
            {"comparison_T^-1/2*I", t.comparison},
            {"count_over_T", t.count_bound}};
}

nlohmann::json to_json(const BoundReport& b) {
    return {{"x", b.x},
            {"K", b.K},
            {"recip_sum", to_json(b.recip_sum)},
            {"ht_bound", b.ht_bound},
            {"empirical_sum", b.empirical_sum},
            {"empirical", b.empirical},
            {"ratio", b.ratio}};
}

nlohmann::json to_json(const TruncationReport& r) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : r.terms)
        terms.push_back({{"n_C", t.n_c},
                         {"lambda_C", t.lambda_c},
                         {"inner", t.inner},
                         {"contribution", t.contribution},
                         {"inner_average", t.inner_average}});
    return {{"x", r.x},
            {"T", r.threshold},
            {"terms", terms},
            {"total_count", r.total_count},
            {"direct_count", r.direct_count},
            {"matches", r.matches()},
            {"tail_count", r.tail_count},
            {"tail_value", r.tail_value},
            {"max_tail_inner_average", r.max_tail_inner_average},
            {"tail_mass", to_json(r.tail)},
            {"tail_bound", r.tail_bound},
            {"tail_bounded", r.tail_bounded()}};
}

void write_convergence_csv(std::ostream& out, const ConvergenceReport& r) {
    out << "x,count,value\n";
    for (std::size_t i = 0; i < r.grid.size(); ++i)
        out << r.grid[i] << ',' << r.counts[i] << ',' << format_double(r.values[i]) << '\n';
}

void write_decomposition_csv(std::ostream& out, const Decomposition& d) {
    out << "generator,part,spf\n";
    std::size_t i = 0, j = 0;
    while (i < d.composites.size() || j < d.primes.size()) {
        if (j == d.primes.size() || (i < d.composites.size() && d.composites[i] < d.primes[j])) {
            out << d.composites[i] << ",C," << d.spf[i] << '\n';
            ++i;
        } else {
            out << d.primes[j] << ",P,\n";
            ++j;
        }
    }
}

void write_semigroup_csv(std::ostream& out, const SemigroupEnumeration& e) {
    out << "element,exponents\n";
    for (std::size_t i = 0; i < e.count(); ++i)
        out << e.elements[i] << ',' << exponent_string(e, i) << '\n';
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundReport>& rows) {
    out << "x,K,recip_sum,ht_bound,empirical,ratio\n";
    for (const auto& b : rows)
        out << b.x << ',' << format_double(b.K) << ',' << format_double(b.recip_sum.value()) << ','
            << format_double(b.ht_bound) << ',' << b.empirical << ',' << format_double(b.ratio)
            << '\n';
}

namespace {

std::string xml_escape(const std::string& t) {
    std::string r;
    for (char ch : t) {
        switch (ch) {
        case '<': r += "&lt;"; break;
        case '>': r += "&gt;"; break;
        case '&': r += "&amp;"; break;
        case '"': r += "&quot;"; break;
        default: r += ch;
        }
    }
    return r;
}

} // namespace

std::string svg_chart(const std::vector<std::uint64_t>& xs, const std::vector<double>& values,
                      const std::string& title) {
    constexpr double W = 640, H = 400, L = 70, R = 20, T = 40, B = 50;
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < xs.size() && i < values.size(); ++i) {
        lx.push_back(std::log10(static_cast<double>(xs[i])));
        ly.push_back(std::fabs(values[i]));
    }
    double x0 = lx.empty() ? 0 : *std::min_element(lx.begin(), lx.end());
    double x1 = lx.empty() ? 1 : *std::max_element(lx.begin(), lx.end());
    if (x1 - x0 < 1e-9) {
        x0 -= 0.5;
        x1 += 0.5;
    }
    double y1 = ly.empty() ? 1 : *std::max_element(ly.begin(), ly.end());
    if (y1 <= 0) y1 = 1;
    auto px = [&](double v) { return L + (v - x0) / (x1 - x0) * (W - L - R); };
    auto py = [&](double v) { return H - B - v / y1 * (H - T - B); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">"
      << xml_escape(title) << "</text>\n";
    s << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double vx = x0 + (x1 - x0) * i / 4, vy = y1 * i / 4;
        s << "<text x=\"" << px(vx) << "\" y=\"" << H - B + 18
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
          << format_double(std::round(vx * 100) / 100) << "</text>\n";
        s << "<text x=\"" << L - 6 << "\" y=\"" << py(vy) + 4
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << vy
          << "</text>\n";
    }
    s << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 10
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">log10 x</text>\n";
    s << "<text x=\"16\" y=\"" << (T + H - B) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 "
      << (T + H - B) / 2 << ")\">|value|</text>\n";
    s << "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < lx.size(); ++i) s << (i ? " " : "") << px(lx[i]) << ',' << py(ly[i]);
    s << "\"/>\n";
    for (std::size_t i = 0; i < lx.size(); ++i)
        s << "<circle cx=\"" << px(lx[i]) << "\" cy=\"" << py(ly[i]) << "\" r=\"3\" fill=\"#1f5fbf\"/>\n";
    s << "</svg>\n";
    return s.str();
}

} // namespace llike
