#include "tks/concavity.hpp"

#include <cmath>
#include <sstream>

namespace tks {

namespace mp = boost::multiprecision;

std::optional<Int> exact_integer_root(const Int& a, unsigned k) {
    if (a < 0 || k == 0) return std::nullopt;
    if (a < 2 || k == 1) return a;
    Int lo = 0;
    Int hi = Int(1) << (mp::msb(a) / k + 1);
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (mp::pow(mid, k) <= a) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    if (mp::pow(lo, k) == a) return lo;
    return std::nullopt;
}

std::optional<Rat> exact_root(const Rat& q, unsigned k) {
    if (q < 0) return std::nullopt;
    auto num = exact_integer_root(mp::numerator(q), k);
    if (!num) return std::nullopt;
    auto den = exact_integer_root(mp::denominator(q), k);
    if (!den) return std::nullopt;
    return Rat(*num, *den);
}

RootBracket root_bracket(const Rat& q, unsigned k, const Rat& width) {
    if (q < 0) throw math_error("root_bracket: negative radicand");
    if (q == 0) return {Rat(0), Rat(0)};
    if (auto r = exact_root(q, k)) return {*r, *r};
    // Seed from a floating-point estimate, then widen until it brackets.
    double est = std::pow(to_double(q), 1.0 / k);
    Rat lo(est * (1 - 1e-6));
    Rat hi(est * (1 + 1e-6) + 1e-300);
    while (lo > 0 && pow_rat(lo, k) > q) lo /= 2;
    if (lo < 0) lo = 0;
    while (pow_rat(hi, k) < q) hi *= 2;
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        if (pow_rat(mid, k) <= q) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

namespace {

RootOrder compare(const Rat& a, const Rat& b) {
    if (a < b) return RootOrder::less;
    if (a > b) return RootOrder::greater;
    return RootOrder::equal;
}

// Sign of t^(1/k) - (s + 1)/2 with s already an exact root; compares k-th powers.
RootOrder compare_normalized(const Rat& t, const Rat& s, unsigned k) {
    return compare(t, pow_rat((s + 1) / 2, k));
}

}  // namespace

MidpointComparison compare_midpoint_root(const Rat& qa, const Rat& qm, const Rat& qb, unsigned k) {
    if (qa < 0 || qm < 0 || qb < 0) throw math_error("compare_midpoint_root: negative value");
    if (k == 1) return {compare(qm, (qa + qb) / 2)};
    if (qa == 0 && qb == 0) return {compare(qm, Rat(0))};
    // Divide through by the k-th root of a positive endpoint. If the other
    // endpoint's ratio is a perfect power the comparison is exact.
    if (qb > 0) {
        if (auto s = exact_root(qa / qb, k)) return {compare_normalized(qm / qb, *s, k)};
    }
    if (qa > 0) {
        if (auto s = exact_root(qb / qa, k)) return {compare_normalized(qm / qa, *s, k)};
    }
    Rat width(1, 1000000000);
    const Rat floor_width = pow_rat(Rat(1, 10), 90);
    while (true) {
        auto a = root_bracket(qa, k, width);
        auto m = root_bracket(qm, k, width);
        auto b = root_bracket(qb, k, width);
        Rat rhs_lo = (a.lo + b.lo) / 2;
        Rat rhs_hi = (a.hi + b.hi) / 2;
        if (m.lo > rhs_hi) return {RootOrder::greater};
        if (m.hi < rhs_lo) return {RootOrder::less};
        if (width <= floor_width) return {RootOrder::equal, true};
        width /= 10000000000LL;
    }
}

ConcavityReport check_root_concavity(const PiecewisePolynomial& Q, unsigned n, int triples) {
    ConcavityReport report;
    if (n < 2) return report;
    const unsigned k = n - 1;
    const Rat lo = Q.lower();
    const Rat step = (Q.upper() - lo) / (triples + 1);
    for (int i = 0; i < triples; ++i) {
        Rat xa = lo + step * i;
        Rat xm = xa + step;
        Rat xb = xm + step;
        Rat qa = Q(xa), qm = Q(xm), qb = Q(xb);
        ++report.triples;
        if (qa < 0 || qm < 0 || qb < 0) {
            ++report.violations;
            report.details.push_back("negative Q near x = " + short_string(xm));
            continue;
        }
        auto cmp = compare_midpoint_root(qa, qm, qb, k);
        if (cmp.by_refinement) ++report.declared_equal_by_refinement;
        if (cmp.order == RootOrder::less) {
            ++report.violations;
            std::ostringstream os;
            os << "midpoint concavity fails at x = " << short_string(xa) << ", " << short_string(xm) << ", "
               << short_string(xb);
            report.details.push_back(os.str());
        }
    }
    return report;
}

}  // namespace tks
