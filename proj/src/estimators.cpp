#include "llike/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "llike/error.hpp"
#include "llike/parallel.hpp"

namespace llike {

std::string CorrelationSpec::str() const {
    std::string s = "k=" + std::to_string(k()) + " a=";
    for (std::size_t i = 0; i < k(); ++i) s += (i ? "," : "") + std::to_string(coeffs[i]);
    s += " h=";
    for (std::size_t i = 0; i < k(); ++i) s += (i ? "," : "") + std::to_string(shifts[i]);
    return s;
}

CorrelationSpec make_correlation_spec(std::vector<std::uint64_t> coeffs,
                                      std::vector<std::uint64_t> shifts) {
    if (coeffs.empty() || coeffs.size() != shifts.size())
        throw Error(Errc::bad_params, "need k >= 1 coefficients and as many shifts");
    for (std::uint64_t a : coeffs)
        if (a == 0) throw Error(Errc::bad_params, "coefficients must be positive");
    const std::size_t k = coeffs.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (static_cast<u128>(coeffs[i]) * shifts[j] == static_cast<u128>(coeffs[j]) * shifts[i])
                throw Error(Errc::degenerate_spec,
                            "a" + std::to_string(i + 1) + "*h" + std::to_string(j + 1) + " = a" +
                                std::to_string(j + 1) + "*h" + std::to_string(i + 1));
    return {std::move(coeffs), std::move(shifts)};
}

namespace {

void check_grid(const std::vector<std::uint64_t>& grid) {
    if (grid.empty()) throw Error(Errc::bad_params, "empty grid");
    if (grid.front() < 1) throw Error(Errc::bad_params, "grid points must be >= 1");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1]) throw Error(Errc::bad_params, "grid must be strictly ascending");
}

std::uint64_t segment_length(const SieveOptions& opts) {
    return (std::max<std::uint64_t>(opts.segment_len, 64) + 63) / 64 * 64;
}

// Per-segment partial sums: total over the segment and prefix sums at the
// grid points that fall inside it. Stitched sequentially afterwards.
struct SegmentSums {
    std::int64_t total = 0;
    std::vector<std::int64_t> at_points;
};

std::vector<std::int64_t> stitch(const std::vector<SegmentSums>& segs) {
    std::vector<std::int64_t> out;
    std::int64_t before = 0;
    for (const SegmentSums& s : segs) {
        for (std::int64_t partial : s.at_points) out.push_back(before + partial);
        before += s.total;
    }
    return out;
}

// Grid indices [begin, end) falling in [lo, hi].
std::pair<std::size_t, std::size_t> points_in(const std::vector<std::uint64_t>& grid,
                                              std::uint64_t lo, std::uint64_t hi) {
    auto b = std::lower_bound(grid.begin(), grid.end(), lo);
    auto e = std::upper_bound(b, grid.end(), hi);
    return {static_cast<std::size_t>(b - grid.begin()), static_cast<std::size_t>(e - grid.begin())};
}

std::vector<std::int64_t> mean_counts(const CoprimeSet& set, const std::vector<std::uint64_t>& grid,
                                      const SieveOptions& opts) {
    const std::uint64_t x = grid.back();
    if (x > set.bound())
        throw Error(Errc::set_bound_exceeded,
                    std::to_string(x) + " > X_max=" + std::to_string(set.bound()));
    const std::uint64_t seg = segment_length(opts);
    const std::size_t nseg = (x + seg - 1) / seg;
    const auto gens = set.generators_up_to(x);
    std::vector<SegmentSums> sums(nseg);
    for_each_segment(nseg, opts.workers, [&](std::size_t k) {
        const std::uint64_t lo = 1 + k * seg;
        const std::uint64_t hi = std::min(x, lo + seg - 1);
        std::vector<std::uint64_t> bits((hi - lo + 64) / 64, 0);
        lambda_parity(gens, set.variant(), lo, hi, bits);
        const std::uint64_t len = hi - lo + 1;
        sums[k].total = static_cast<std::int64_t>(len) -
                        2 * static_cast<std::int64_t>(popcount_prefix(bits, len));
        auto [b, e] = points_in(grid, lo, hi);
        for (std::size_t i = b; i < e; ++i) {
            const std::uint64_t upto = grid[i] - lo + 1;
            sums[k].at_points.push_back(static_cast<std::int64_t>(upto) -
                                        2 * static_cast<std::int64_t>(popcount_prefix(bits, upto)));
        }
    });
    return stitch(sums);
}

std::vector<std::int64_t> correlation_counts(const CoprimeSet& set, const CorrelationSpec& spec,
                                             const std::vector<std::uint64_t>& grid,
                                             const SieveOptions& opts) {
    const std::uint64_t x = grid.back();
    std::uint64_t top = 0;
    for (std::size_t i = 0; i < spec.k(); ++i) {
        std::uint64_t v;
        if (__builtin_mul_overflow(spec.coeffs[i], x, &v) ||
            __builtin_add_overflow(v, spec.shifts[i], &v))
            throw Error(Errc::overflow, "a_i x + h_i above 2^64");
        top = std::max(top, v);
    }
    if (top > set.bound())
        throw Error(Errc::set_bound_exceeded, "max_i(a_i x + h_i) = " + std::to_string(top) +
                                                  " > X_max=" + std::to_string(set.bound()));
    const std::vector<std::uint64_t> plane = lambda_plane(set, top, opts);
    const std::uint64_t* w = plane.data();

    const std::uint64_t block = segment_length(opts);
    const std::size_t nblocks = (x + block - 1) / block;
    std::vector<SegmentSums> sums(nblocks);
    for_each_segment(nblocks, opts.workers, [&](std::size_t k) {
        const std::uint64_t lo = 1 + k * block;
        const std::uint64_t hi = std::min(x, lo + block - 1);
        auto [b, e] = points_in(grid, lo, hi);
        std::int64_t acc = 0;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            std::uint64_t parity = 0;
            for (std::size_t i = 0; i < spec.k(); ++i) {
                const std::uint64_t idx = spec.coeffs[i] * n + spec.shifts[i] - 1;
                parity ^= w[idx >> 6] >> (idx & 63);
            }
            acc += (parity & 1) ? -1 : 1;
            if (b < e && grid[b] == n) {
                sums[k].at_points.push_back(acc);
                ++b;
            }
        }
        sums[k].total = acc;
    });
    return stitch(sums);
}

ConvergenceReport make_report(const CoprimeSet& set, const CorrelationSpec& spec,
                              const std::vector<std::uint64_t>& grid,
                              std::vector<std::int64_t> counts) {
    ConvergenceReport r;
    r.set_descriptor = set.family();
    r.variant = set.variant();
    r.spec = spec;
    r.grid = grid;
    r.counts = std::move(counts);
    for (std::size_t i = 0; i < grid.size(); ++i)
        r.values.push_back(static_cast<double>(r.counts[i]) / static_cast<double>(grid[i]));
    return r;
}

} // namespace

Estimate mean(const CoprimeSet& set, std::uint64_t x, const SieveOptions& opts) {
    check_grid({x});
    const auto counts = mean_counts(set, {x}, opts);
    return {x, counts[0], static_cast<double>(counts[0]) / static_cast<double>(x)};
}

Estimate correlate(const CoprimeSet& set, const CorrelationSpec& spec, std::uint64_t x,
                   const SieveOptions& opts) {
    make_correlation_spec(spec.coeffs, spec.shifts);
    check_grid({x});
    const auto counts = correlation_counts(set, spec, {x}, opts);
    return {x, counts[0], static_cast<double>(counts[0]) / static_cast<double>(x)};
}

ConvergenceReport convergence_grid(const CoprimeSet& set, const CorrelationSpec& spec,
                                   const std::vector<std::uint64_t>& grid,
                                   const SieveOptions& opts) {
    make_correlation_spec(spec.coeffs, spec.shifts);
    check_grid(grid);
    auto counts = spec.is_mean() ? mean_counts(set, grid, opts)
                                 : correlation_counts(set, spec, grid, opts);
    return make_report(set, spec, grid, std::move(counts));
}

bool TruncationReport::tail_bounded() const {
    // |tail| <= sum_{n_C > T} |inner| / x
    //        =  sum_{n_C > T} (1/n_C) * inner_average
    //        <= tail mass * max inner_average
    const double slack = 1e-12 * std::max(1.0, tail_bound);
    return std::fabs(tail_value) <= tail_bound + slack;
}

TruncationReport truncation_diagnostic(const CoprimeSet& set, const Decomposition& dec,
                                       std::uint64_t x, std::uint64_t threshold,
                                       const SieveOptions& opts) {
    if (threshold < 1 || threshold > x)
        throw Error(Errc::bad_params, "threshold T must satisfy 1 <= T <= x");
    if (x > set.bound())
        throw Error(Errc::set_bound_exceeded,
                    std::to_string(x) + " > X_max=" + std::to_string(set.bound()));

    std::vector<std::uint64_t> small_c;
    for (std::uint64_t c : dec.composites)
        if (c <= x) small_c.push_back(c);
    const SemigroupEnumeration e = enumerate(small_c, x);

    // Prefix sums of lambda~_P at the points floor(x / n_C).
    std::vector<std::uint64_t> queries;
    for (std::uint64_t n : e.elements) queries.push_back(x / n);
    std::sort(queries.begin(), queries.end());
    queries.erase(std::unique(queries.begin(), queries.end()), queries.end());

    const std::uint64_t seg = segment_length(opts);
    const std::size_t nseg = (x + seg - 1) / seg;
    std::vector<SegmentSums> sums(nseg);
    const bool omega = set.variant() == Variant::omega;
    for_each_segment(nseg, opts.workers, [&](std::size_t k) {
        const std::uint64_t lo = 1 + k * seg;
        const std::uint64_t hi = std::min(x, lo + seg - 1);
        const std::size_t words = (hi - lo + 64) / 64;
        std::vector<std::uint64_t> parity(words, 0), killed(words, 0);
        lambda_parity(dec.primes, omega ? Variant::omega : Variant::big_omega, lo, hi, parity);
        for (std::uint64_t c : small_c) {
            if (c > hi) break;
            for (std::uint64_t m = (lo + c - 1) / c * c; m <= hi; m += c) {
                const std::uint64_t i = m - lo;
                killed[i >> 6] |= std::uint64_t{1} << (i & 63);
            }
        }
        auto [b, q_end] = points_in(queries, lo, hi);
        std::int64_t acc = 0;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            const std::uint64_t i = n - lo;
            if (!((killed[i >> 6] >> (i & 63)) & 1)) acc += ((parity[i >> 6] >> (i & 63)) & 1) ? -1 : 1;
            if (b < q_end && queries[b] == n) {
                sums[k].at_points.push_back(acc);
                ++b;
            }
        }
        sums[k].total = acc;
    });
    const std::vector<std::int64_t> prefix = stitch(sums);

    TruncationReport r;
    r.x = x;
    r.threshold = threshold;
    const double xd = static_cast<double>(x);
    for (std::size_t i = 0; i < e.count(); ++i) {
        TruncationTerm t;
        t.n_c = e.elements[i];
        unsigned om = 0, bom = 0;
        for (auto [g, ex] : e.exponents[i]) {
            ++om;
            bom += ex;
        }
        t.lambda_c = ((omega ? om : bom) & 1) ? -1 : 1;
        const auto q = std::lower_bound(queries.begin(), queries.end(), x / t.n_c) - queries.begin();
        t.inner = prefix[static_cast<std::size_t>(q)];
        t.contribution = static_cast<double>(t.lambda_c * t.inner) / xd;
        t.inner_average = static_cast<double>(std::llabs(t.inner)) * static_cast<double>(t.n_c) / xd;
        r.total_count += t.lambda_c * t.inner;
        if (t.n_c > threshold) {
            r.tail_count += t.lambda_c * t.inner;
            r.max_tail_inner_average = std::max(r.max_tail_inner_average, t.inner_average);
        }
        r.terms.push_back(t);
    }
    r.tail_value = static_cast<double>(r.tail_count) / xd;
    r.direct_count = mean(set, x, opts).count;
    r.tail = tail_mass(e, threshold);
    r.tail_bound = r.tail.tail.value() * r.max_tail_inner_average;
    return r;
}

} // namespace llike
