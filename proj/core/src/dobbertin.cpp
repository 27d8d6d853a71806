#include "seqcorr/dobbertin.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace seqcorr {
namespace {

// 2^e mod 2^k - 1 = 2^(e mod k)
std::uint64_t two_pow_mod(std::uint64_t e, int k) {
    return std::uint64_t{1} << (e % static_cast<std::uint64_t>(k));
}

}  // namespace

LParams make_lparams(int k, int l) {
    if (l <= 0 || l >= k || std::gcd(l, k) != 1) {
        throw NotCoprime("need 0 < l < k with gcd(l, k) = 1; got l=" + std::to_string(l) +
                         ", k=" + std::to_string(k));
    }
    LParams lp;
    lp.k = k;
    lp.l = l;
    for (int t = 1; t < k; ++t) {
        if (t * l % k == 1) {
            lp.l_prime = t;
            break;
        }
    }
    if (lp.l_prime == 0) throw Error("no inverse of l modulo k");

    const std::uint64_t nk = (std::uint64_t{1} << k) - 1;
    std::uint64_t e = 0;
    for (int i = 1; i <= lp.l_prime; ++i) {
        e += two_pow_mod(static_cast<std::uint64_t>((i - 1) * l), k);
        if (e >= nk) e -= nk;
        lp.e.push_back(e);
    }
    // e(l') is the inverse of 2^l - 1 mod 2^k - 1
    const std::uint64_t check = lp.e.back() * ((std::uint64_t{1} << l) - 1) % nk;
    if (check != 1) throw Error("e(l') * (2^l - 1) != 1 mod 2^k - 1");
    return lp;
}

FGPair fg_eval(const FieldCtx& F, const LParams& lp, int i, Elem v) {
    if (i < 1 || i > lp.l_prime + 1) {
        throw PreconditionViolated("fg_eval index must lie in [1, l'+1]");
    }
    const std::uint64_t nk = (std::uint64_t{1} << lp.k) - 1;
    FGPair lo{v, F.zero()};  // F_1, G_1
    if (i == 1) return lo;
    FGPair hi{F.pow(v, (std::uint64_t{1} << lp.l) + 1),
              F.pow(v, (std::uint64_t{1} << lp.l) - 1)};  // F_2, G_2
    for (int j = 1; j + 2 <= i; ++j) {
        // multipliers for step j: v^(2^((j+1)l)) and v^(2^((j+1)l) - 2^(jl))
        const std::uint64_t t1 = two_pow_mod(static_cast<std::uint64_t>((j + 1) * lp.l), lp.k);
        const std::uint64_t t0 = two_pow_mod(static_cast<std::uint64_t>(j * lp.l), lp.k);
        const std::uint64_t t2 = (t1 + nk - t0) % nk;
        const Elem m1 = F.pow(v, t1);
        const Elem m2 = F.pow(v, t2);
        FGPair next{F.add(F.mul(m1, hi.f), F.mul(m2, lo.f)),
                    F.add(F.mul(m1, hi.g), F.mul(m2, lo.g))};
        lo = hi;
        hi = next;
    }
    return hi;
}

Elem r_eval(const FieldCtx& F, const LParams& lp, Elem v) {
    if (v.bits == 0) return F.zero();
    const std::uint64_t nk = (std::uint64_t{1} << lp.k) - 1;
    Elem sum_f = v;  // F_1
    FGPair lo{v, F.zero()};
    FGPair hi{F.pow(v, (std::uint64_t{1} << lp.l) + 1),
              F.pow(v, (std::uint64_t{1} << lp.l) - 1)};
    if (lp.l_prime == 1) return F.add(sum_f, lo.g);
    sum_f = F.add(sum_f, hi.f);
    for (int j = 1; j + 2 <= lp.l_prime; ++j) {
        const std::uint64_t t1 = two_pow_mod(static_cast<std::uint64_t>((j + 1) * lp.l), lp.k);
        const std::uint64_t t0 = two_pow_mod(static_cast<std::uint64_t>(j * lp.l), lp.k);
        const std::uint64_t t2 = (t1 + nk - t0) % nk;
        const Elem m1 = F.pow(v, t1);
        const Elem m2 = F.pow(v, t2);
        FGPair next{F.add(F.mul(m1, hi.f), F.mul(m2, lo.f)),
                    F.add(F.mul(m1, hi.g), F.mul(m2, lo.g))};
        lo = hi;
        hi = next;
        sum_f = F.add(sum_f, hi.f);
    }
    return F.add(sum_f, hi.g);
}

Elem d_eval(const FieldCtx& F, const LParams& lp, Elem v) {
    if (v.bits == 0) throw ZeroArgument("D(0) is undefined");
    Elem num = F.from_int(static_cast<std::uint64_t>(lp.l_prime) + 1);
    for (int i = 1; i <= lp.l_prime; ++i) {
        num = F.add(num, F.pow(v, two_pow_mod(static_cast<std::uint64_t>(i * lp.l), lp.k)));
    }
    return F.mul(num, F.inv(F.pow(v, (std::uint64_t{1} << lp.l) + 1)));
}

ExpSet h_expset(const LParams& lp, int i) {
    if (lp.k > 11) {
        throw PreconditionViolated("symbolic expansion of (1+v)^e(i) is capped at k <= 11");
    }
    if (i < 1 || i > lp.l_prime) {
        throw PreconditionViolated("h_expset index must lie in [1, l']");
    }
    // Terms of 1 + (1+v)^e(i) are v^e for nonempty subsets T of {0..i-1},
    // e = sum of 2^(jl) over T (integer exponents).  Shifting e right until
    // odd maps T to its difference pattern T - min(T), so subsets with one
    // pattern collapse onto a single reduced exponent and cancel in pairs:
    // a pattern with maximum element mx occurs i - mx times.  A surviving
    // pattern contributes 1 + sum of 2^((jl) mod k) over its nonzero members
    // once exponents are folded into [1, 2^k - 1].
    std::set<std::uint64_t> terms;
    const std::uint64_t patterns = std::uint64_t{1} << i;
    for (std::uint64_t mask = 1; mask < patterns; mask += 2) {  // bit 0: pattern contains 0
        const int mx = 63 - std::countl_zero(mask);
        if ((i - mx) % 2 == 0) continue;  // even multiplicity cancels
        std::uint64_t e = 1;
        for (int j = 1; j <= mx; ++j) {
            if ((mask >> j) & 1u) e += std::uint64_t{1} << (j * lp.l % lp.k);
        }
        if (!terms.insert(e).second) {
            throw Error("reduced exponents collided; the pattern map must be injective");
        }
    }
    ExpSet out;
    out.exponents.assign(terms.begin(), terms.end());
    out.constant = false;
    return out;
}

Elem h_eval(const FieldCtx& F, const LParams& lp, int i, Elem v) {
    if (i < 1 || i > lp.l_prime) {
        throw PreconditionViolated("h_eval index must lie in [1, l']");
    }
    if (v.bits == 0) return F.zero();
    const std::uint64_t nk = (std::uint64_t{1} << lp.k) - 1;
    const Elem w = F.add(F.one(), v);
    Elem acc = F.zero();
    std::uint64_t t = 0;  // partial sums 0, 2^l, 2^l + 2^(2l), ...
    for (int j = 0; j < i; ++j) {
        if (j > 0) {
            t += two_pow_mod(static_cast<std::uint64_t>(j * lp.l), lp.k);
            if (t >= nk) t -= nk;
        }
        acc = F.add(acc, F.pow(w, t));
    }
    return F.mul(v, acc);
}

Elem eval_expset(const FieldCtx& F, const ExpSet& set, Elem v) {
    Elem acc = set.constant ? F.one() : F.zero();
    for (const std::uint64_t e : set.exponents) acc = F.add(acc, F.pow(v, e));
    return acc;
}

std::string to_string(const ExpSet& set) {
    std::string s;
    if (set.constant) s = "1";
    for (const std::uint64_t e : set.exponents) {
        if (!s.empty()) s += " + ";
        s += e == 1 ? "v" : "v^" + std::to_string(e);
    }
    return s.empty() ? "0" : s;
}

Elem q_eval(const FieldCtx& F, const LParams& lp, Elem x0, Elem v) {
    if (x0.bits == 0) throw ZeroArgument("Q requires x0 != 0");
    const Elem c1 = F.add(F.pow(x0, (std::uint64_t{1} << lp.l) + 1), x0);
    return F.add(F.add(F.mul(c1, F.frob(v, lp.l)), F.mul(F.square(x0), v)), x0);
}

bool lemma5_check(const FieldCtx& F, const LParams& lp, Elem x0) {
    if (x0 == F.zero() || x0 == F.one()) {
        throw DegenerateX0("x0 in {0, 1} gives a = 0");
    }
    const Elem a = F.add(F.pow(x0, (std::uint64_t{1} << lp.l) + 1), x0);
    if (a.bits == 0) throw DegenerateX0("x0^(2^l+1) + x0 vanished");
    const Elem lhs_arg = F.add(F.one(), F.pow(F.add(F.one(), F.inv(x0)), lp.e.back()));
    const int lhs = F.trace_k(lhs_arg);
    const int rhs = F.trace_k(r_eval(F, lp, F.inv(a)));
    return lhs == rhs;
}

}  // namespace seqcorr
