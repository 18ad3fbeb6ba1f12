#include "ramsey/regularity_check.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ramsey {

namespace {

// |e/(a1*b1) - E/(ab)| >= eps, all integer counts, exact.
bool deviates(std::int64_t e, std::int64_t a1, std::int64_t b1,
              std::int64_t E, std::int64_t ab, const Rational& eps) {
    std::int64_t lhs = e * ab - E * a1 * b1;
    if (lhs < 0) lhs = -lhs;
    const BigInt p = numerator(eps);
    const BigInt q = denominator(eps);
    static const BigInt kFit = BigInt(1) << 62;
    if (p < kFit && q < kFit && ab <= (1 << 20)) {
        // fast path: products stay well within 128 bits
        auto pu = p.convert_to<unsigned long long>();
        auto qu = q.convert_to<unsigned long long>();
        unsigned __int128 l = static_cast<unsigned __int128>(lhs) * qu;
        unsigned __int128 r = static_cast<unsigned __int128>(pu) * static_cast<unsigned long long>(a1 * b1);
        // r * ab could exceed 128 bits only if pu ~ 2^62 and sets are huge; guarded by ab cap
        return l >= r * static_cast<unsigned long long>(ab);
    }
    return Rational(lhs) * q >= Rational(p) * a1 * b1 * ab;
}

VertexSet mask_to_set(std::uint32_t mask, const VertexSet& base) {
    VertexSet out;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (mask & (1u << i)) out.push_back(base[i]);
    return out;
}

void check_sides(int n, const VertexSet& A, const VertexSet& B) {
    if (A.empty() || B.empty()) throw std::invalid_argument("is_eps_regular: empty side");
    VertexSet a = normalise_vertex_set(A, n), b = normalise_vertex_set(B, n);
    if (a.size() != A.size() || b.size() != B.size())
        throw std::invalid_argument("is_eps_regular: duplicate vertices in a side");
    if (!sets_disjoint(a, b)) throw std::invalid_argument("is_eps_regular: sides overlap");
}

long long min_subset_size(const Rational& eps, std::size_t side) {
    BigInt m = ceil_rational(eps * static_cast<long long>(side));
    if (m < 1) m = 1;
    return to_ll(m);
}

RegularityResult exact_check(const SimpleGraph& g, const VertexSet& A, const VertexSet& B,
                             const Rational& eps, const RegularityOptions& opt) {
    int a = static_cast<int>(A.size()), b = static_cast<int>(B.size());
    if (a > opt.exact_limit || b > opt.exact_limit)
        throw std::invalid_argument("is_eps_regular: sides exceed exact-mode limit");

    std::vector<std::uint32_t> abits(b, 0);  // B-index -> bitmask of A-neighbours
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < a; ++i)
            if (g.has_edge(A[i], B[j])) abits[j] |= 1u << i;

    std::int64_t ab = static_cast<std::int64_t>(a) * b;
    std::int64_t E = 0;
    for (auto m : abits) E += __builtin_popcount(m);

    long long min_a = min_subset_size(eps, A.size());
    long long min_b = min_subset_size(eps, B.size());

    RegularityResult res;
    res.exhaustive = true;
    if (min_a > a || min_b > b) {  // no qualifying pairs at all
        res.regular = true;
        return res;
    }

    std::vector<int> cnt(b);
    for (std::uint32_t sa = 1; sa < (1u << a); ++sa) {
        int a1 = __builtin_popcount(sa);
        if (a1 < min_a) continue;
        for (int j = 0; j < b; ++j) cnt[j] = __builtin_popcount(sa & abits[j]);

        // Gray-code walk over B-subsets, maintaining the running edge count.
        std::int64_t e = 0;
        std::uint32_t sb = 0;
        std::uint64_t steps = 1ull << b;
        for (std::uint64_t i = 1; i < steps; ++i) {
            int j = __builtin_ctzll(i);
            std::uint32_t bit = 1u << j;
            sb ^= bit;
            e += (sb & bit) ? cnt[j] : -cnt[j];
            int b1 = __builtin_popcount(sb);
            if (b1 < min_b) continue;
            ++res.pairs_checked;
            if (deviates(e, a1, b1, E, ab, eps)) {
                res.regular = false;
                res.violation = RegularityViolation{
                    mask_to_set(sa, A), mask_to_set(sb, B),
                    Rational(e, static_cast<std::int64_t>(a1) * b1), Rational(E, ab)};
                return res;
            }
        }
    }
    res.regular = true;
    return res;
}

RegularityResult sampled_check(const SimpleGraph& g, const VertexSet& A, const VertexSet& B,
                               const Rational& eps, const RegularityOptions& opt) {
    long long min_a = min_subset_size(eps, A.size());
    long long min_b = min_subset_size(eps, B.size());

    RegularityResult res;
    res.exhaustive = false;
    if (min_a > static_cast<long long>(A.size()) || min_b > static_cast<long long>(B.size())) {
        res.regular = true;
        return res;
    }

    std::int64_t ab = static_cast<std::int64_t>(A.size()) * B.size();
    std::vector<char> in_a(g.vertex_count(), 0);
    for (int v : A) in_a[v] = 1;
    std::int64_t E = 0;
    for (int v : B)
        for (int w : g.neighbours(v)) E += in_a[w];

    std::mt19937_64 rng(opt.seed);
    VertexSet pa = A, pb = B;
    std::vector<char> sel_a(g.vertex_count(), 0);

    for (std::uint64_t t = 0; t < opt.trials; ++t) {
        long long a1 = std::uniform_int_distribution<long long>(min_a, A.size())(rng);
        long long b1 = std::uniform_int_distribution<long long>(min_b, B.size())(rng);
        // partial Fisher-Yates for each side
        for (long long i = 0; i < a1; ++i) {
            std::size_t j = std::uniform_int_distribution<std::size_t>(i, pa.size() - 1)(rng);
            std::swap(pa[i], pa[j]);
        }
        for (long long i = 0; i < b1; ++i) {
            std::size_t j = std::uniform_int_distribution<std::size_t>(i, pb.size() - 1)(rng);
            std::swap(pb[i], pb[j]);
        }
        for (long long i = 0; i < a1; ++i) sel_a[pa[i]] = 1;
        std::int64_t e = 0;
        for (long long i = 0; i < b1; ++i)
            for (int w : g.neighbours(pb[i])) e += sel_a[w];
        for (long long i = 0; i < a1; ++i) sel_a[pa[i]] = 0;

        ++res.pairs_checked;
        if (deviates(e, a1, b1, E, ab, eps)) {
            VertexSet sa(pa.begin(), pa.begin() + a1), sb(pb.begin(), pb.begin() + b1);
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            res.regular = false;
            res.violation = RegularityViolation{std::move(sa), std::move(sb),
                                                Rational(e, a1 * b1), Rational(E, ab)};
            return res;
        }
    }
    res.regular = true;
    return res;
}

}  // namespace

RegularityResult is_eps_regular(const SimpleGraph& g, const VertexSet& A, const VertexSet& B,
                                const Rational& eps, RegularityMode mode,
                                const RegularityOptions& opt) {
    check_sides(g.vertex_count(), A, B);
    if (eps < 0) throw std::invalid_argument("is_eps_regular: negative eps");
    return mode == RegularityMode::exact ? exact_check(g, A, B, eps, opt)
                                         : sampled_check(g, A, B, eps, opt);
}

RegularityResult is_eps_regular(const EdgeColouring& g, const VertexSet& A, const VertexSet& B,
                                Colour c, const Rational& eps, RegularityMode mode,
                                const RegularityOptions& opt) {
    return is_eps_regular(g.colour_class(c), A, B, eps, mode, opt);
}

RegularityResult is_eps_regular(const MultiColouredGraph& g, const VertexSet& A, const VertexSet& B,
                                Colour c, const Rational& eps, RegularityMode mode,
                                const RegularityOptions& opt) {
    return is_eps_regular(g.colour_class(c), A, B, eps, mode, opt);
}

}  // namespace ramsey
