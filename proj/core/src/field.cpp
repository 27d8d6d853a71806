#include "seqcorr/field.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "seqcorr/gf2linalg.hpp"

namespace seqcorr {
namespace {

// Carry-less product of two polynomials over GF(2); operands of degree < 32,
// so the product fits in 64 bits.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t window[16];
    window[0] = 0;
    window[1] = a;
    for (int i = 2; i < 16; i += 2) {
        window[i] = window[i / 2] << 1;
        window[i + 1] = window[i] ^ a;
    }
    std::uint64_t r = 0;
    int shift = 0;
    while (b) {
        r ^= window[b & 15] << shift;
        b >>= 4;
        shift += 4;
    }
    return r;
}

std::uint64_t poly_reduce(std::uint64_t prod, std::uint64_t modulus, int m) {
    for (int bit = 2 * m - 2; bit >= m; --bit) {
        if ((prod >> bit) & 1u) prod ^= modulus << (bit - m);
    }
    return prod;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, int m) {
    return poly_reduce(clmul(a, b), modulus, m);
}

std::uint64_t poly_powmod(std::uint64_t x, std::uint64_t e, std::uint64_t modulus, int m) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = poly_mulmod(r, x, modulus, m);
        x = poly_mulmod(x, x, modulus, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

// x generates the full multiplicative group iff x^n = 1 and x^(n/q) != 1 for
// every prime q | n; that forces the modulus to be primitive.
bool x_has_full_order(std::uint64_t modulus, int m) {
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    if (poly_powmod(2, n, modulus, m) != 1) return false;
    for (std::uint64_t q : distinct_prime_factors(n)) {
        if (poly_powmod(2, n / q, modulus, m) == 1) return false;
    }
    return true;
}

void check_element_order(const FieldCtx& F, Elem g, std::uint64_t ord, const char* name) {
    if (F.pow(g, ord) != F.one()) {
        throw Error(std::string(name) + " does not have the required order");
    }
    for (std::uint64_t q : distinct_prime_factors(ord)) {
        if (F.pow(g, ord / q) == F.one()) {
            throw Error(std::string(name) + " has order smaller than required");
        }
    }
}

}  // namespace

std::uint64_t default_modulus(int m) {
    // Lexicographically smallest primitive polynomial per even degree,
    // re-verified at every build.
    static const std::map<int, std::uint64_t> table = {
        {2, 0x7},         {4, 0x13},        {6, 0x43},        {8, 0x11d},
        {10, 0x409},      {12, 0x1053},     {14, 0x402b},     {16, 0x1002d},
        {18, 0x40027},    {20, 0x100009},   {22, 0x400003},   {24, 0x100001b},
        {26, 0x4000047},  {28, 0x10000009}, {30, 0x40000053}, {32, 0x1000000af},
    };
    const auto it = table.find(m);
    if (it == table.end()) throw UnsupportedDegree("no default modulus for m=" + std::to_string(m));
    return it->second;
}

std::map<int, std::uint64_t> parse_modulus_config(std::istream& in) {
    std::map<int, std::uint64_t> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        int m = 0;
        std::string hex;
        if (!(fields >> m)) continue;  // blank or comment-only line
        if (!(fields >> hex)) {
            throw Error("modulus config line " + std::to_string(lineno) + ": missing hex value");
        }
        std::string rest;
        if (fields >> rest) {
            throw Error("modulus config line " + std::to_string(lineno) + ": trailing tokens");
        }
        if (hex.starts_with("0x") || hex.starts_with("0X")) hex.erase(0, 2);
        std::uint64_t value = 0;
        try {
            std::size_t used = 0;
            value = std::stoull(hex, &used, 16);
            if (used != hex.size()) throw std::invalid_argument(hex);
        } catch (const std::exception&) {
            throw Error("modulus config line " + std::to_string(lineno) + ": bad hex '" + hex + "'");
        }
        out[m] = value;
    }
    return out;
}

std::map<int, std::uint64_t> load_modulus_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open modulus config '" + path + "'");
    return parse_modulus_config(in);
}

std::string poly_to_string(std::uint64_t p) {
    if (p == 0) return "0";
    std::string s;
    for (int i = 63; i >= 0; --i) {
        if (!((p >> i) & 1u)) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += "1";
        } else if (i == 1) {
            s += "x";
        } else {
            s += "x^" + std::to_string(i);
        }
    }
    return s;
}

FieldCtx FieldCtx::build(int k, std::optional<std::uint64_t> modulus) {
    if (k < 1 || k > max_k) {
        throw UnsupportedDegree("k must lie in [1, " + std::to_string(max_k) + "], got " +
                                std::to_string(k));
    }
    const int m = 2 * k;
    const std::uint64_t p = modulus ? *modulus : default_modulus(m);
    if (p == 0 || std::bit_width(p) - 1 != m) {
        throw NonPrimitiveModulus("modulus must have degree exactly " + std::to_string(m));
    }
    if (!(p & 1)) {
        throw NonPrimitiveModulus("modulus must have constant term 1");
    }
    if (!x_has_full_order(p, m)) {
        throw NonPrimitiveModulus("order check failed: x does not generate GF(2^" +
                                  std::to_string(m) + ")^* modulo " + poly_to_string(p));
    }

    FieldCtx F;
    F.spec_ = FieldSpec{k, m, p};
    F.n_ = (std::uint64_t{1} << m) - 1;
    F.nk_ = (std::uint64_t{1} << k) - 1;
    F.alpha_ = Elem{2};

    if (m <= table_threshold_m) {
        F.antilog_.resize(F.n_);
        F.log_.assign(std::uint64_t{1} << m, 0);
        std::uint64_t a = 1;
        for (std::uint64_t i = 0; i < F.n_; ++i) {
            F.antilog_[i] = static_cast<std::uint32_t>(a);
            F.log_[a] = static_cast<std::uint32_t>(i);
            a <<= 1;
            if ((a >> m) & 1u) a ^= p;
        }
        if (a != 1) throw Error("antilog table did not close after 2^m-1 steps");
    }

    // Per-basis traces; each must land in GF(2).
    for (int j = 0; j < m; ++j) {
        Elem y{std::uint64_t{1} << j};
        Elem t{0};
        for (int i = 0; i < m; ++i) {
            t = F.add(t, y);
            y = F.mul(y, y);
        }
        if (t.bits > 1) throw Error("trace of a basis element fell outside GF(2)");
        F.trace_mask_ |= t.bits << j;
    }

    F.beta_ = F.pow(F.alpha_, (std::uint64_t{1} << k) + 1);
    check_element_order(F, F.alpha_, F.n_, "alpha");
    if (k > 1) check_element_order(F, F.beta_, F.nk_, "beta");

    F.gram_rows_.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        const Elem bi{std::uint64_t{1} << i};
        std::uint64_t row = 0;
        for (int j = 0; j < m; ++j) {
            const Elem bj{std::uint64_t{1} << j};
            row |= static_cast<std::uint64_t>(F.trace_m(F.mul(bi, bj))) << j;
        }
        F.gram_rows_[static_cast<std::size_t>(i)] = row;
    }

    F.sub_basis_.reserve(static_cast<std::size_t>(k));
    Elem bp = F.one();
    for (int j = 0; j < k; ++j) {
        F.sub_basis_.push_back(bp);
        bp = F.mul(bp, F.beta_);
    }

    F.sub_elems_.reserve(std::size_t{1} << k);
    F.sub_elems_.push_back(F.zero());
    Elem w = F.one();
    for (std::uint64_t t = 0; t < F.nk_; ++t) {
        F.sub_elems_.push_back(w);
        w = F.mul(w, F.beta_);
    }
    std::sort(F.sub_elems_.begin(), F.sub_elems_.end());
    if (std::adjacent_find(F.sub_elems_.begin(), F.sub_elems_.end()) != F.sub_elems_.end()) {
        throw Error("beta powers did not enumerate 2^k distinct subfield elements");
    }
    for (const Elem e : F.sub_elems_) {
        if (F.frob(e, k) != e) throw Error("claimed subfield element fails x^(2^k) = x");
    }

    // Tr_k(y) = Tr_m(c*y) on the subfield for any c with c + c^(2^k) = 1;
    // solve the linear system for such a c, then the subfield trace is the
    // masked parity against u(c).
    {
        std::vector<std::uint64_t> images;
        images.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            images.push_back(F.trace_k_m(Elem{std::uint64_t{1} << j}).bits);
        }
        const auto combo = gf2_solve(images, 1);
        if (!combo) throw Error("no element with relative trace 1 found");
        const Elem c{*combo};
        if (F.trace_k_m(c) != F.one()) throw Error("relative trace solve failed");
        F.tk_mask_ = F.wht_index(c);
        for (const Elem b : F.sub_basis_) {
            const int via_mask = static_cast<int>(std::popcount(b.bits & F.tk_mask_) & 1u);
            if (via_mask != F.trace_k_reference(b)) {
                throw Error("subfield trace mask disagrees with conjugate sum");
            }
        }
    }

    if (k % 2 == 1) {
        const Elem r = F.pow(F.alpha_, F.nk_);
        if (F.pow(r, (std::uint64_t{1} << k) + 1) != F.one()) {
            throw NoncubeUnavailable("alpha^(2^k-1) is not a (2^k+1)-th root of unity");
        }
        if (F.is_cube(r)) {
            throw NoncubeUnavailable("alpha^(2^k-1) is unexpectedly a cube");
        }
        F.r_ = r;
    }

    return F;
}

Elem FieldCtx::mul_carryless(Elem a, Elem b) const {
    return Elem{poly_reduce(clmul(a.bits, b.bits), spec_.modulus, spec_.m)};
}

Elem FieldCtx::inv(Elem a) const {
    if (a.bits == 0) throw DivisionByZero("inverse of zero");
    if (!antilog_.empty()) {
        const std::uint64_t l = log_[a.bits];
        return Elem{antilog_[l == 0 ? 0 : n_ - l]};
    }
    return pow(a, n_ - 1);
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
    e %= n_;
    if (a.bits == 0) return e == 0 ? one() : zero();
    if (e == 0) return one();
    if (!antilog_.empty()) {
        // log < 2^22 and e < 2^22 here, so the product cannot overflow
        return Elem{antilog_[(static_cast<std::uint64_t>(log_[a.bits]) * e) % n_]};
    }
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem FieldCtx::frob(Elem a, int j) const {
    j %= spec_.m;
    if (j < 0) j += spec_.m;
    for (int i = 0; i < j; ++i) a = mul(a, a);
    return a;
}

int FieldCtx::trace_m_reference(Elem a) const {
    Elem t{0};
    for (int i = 0; i < spec_.m; ++i) {
        t = add(t, a);
        a = mul(a, a);
    }
    if (t.bits > 1) throw Error("trace fell outside GF(2)");
    return static_cast<int>(t.bits);
}

int FieldCtx::trace_k(Elem a) const {
    if (!in_subfield(a)) throw NotInSubfield("trace_k requires a subfield element");
    return static_cast<int>(std::popcount(a.bits & tk_mask_) & 1u);
}

int FieldCtx::trace_k_reference(Elem a) const {
    if (!in_subfield(a)) throw NotInSubfield("trace_k requires a subfield element");
    Elem t{0};
    for (int i = 0; i < spec_.k; ++i) {
        t = add(t, a);
        a = mul(a, a);
    }
    if (t.bits > 1) throw Error("subfield trace fell outside GF(2)");
    return static_cast<int>(t.bits);
}

bool FieldCtx::is_cube(Elem a) const {
    if (a.bits == 0) return true;
    if (!antilog_.empty()) return log_[a.bits] % 3 == 0;
    return pow(a, n_ / 3) == one();
}

Elem FieldCtx::pick_noncube_r() const {
    if (!r_) throw PreconditionViolated("the noncube r exists only for odd k");
    return *r_;
}

std::uint64_t FieldCtx::log_of(Elem a) const {
    if (antilog_.empty()) throw Error("log_of requires log tables (m <= 22)");
    if (a.bits == 0) throw DivisionByZero("log of zero");
    return log_[a.bits];
}

std::string FieldCtx::hex(Elem a) const {
    const int width = (spec_.m + 3) / 4;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*llx", width, static_cast<unsigned long long>(a.bits));
    return buf;
}

Elem FieldCtx::elem_from_hex(const std::string& s) const {
    std::string h = s;
    if (h.starts_with("0x") || h.starts_with("0X")) h.erase(0, 2);
    std::uint64_t v = 0;
    try {
        std::size_t used = 0;
        v = std::stoull(h, &used, 16);
        if (used != h.size()) throw std::invalid_argument(h);
    } catch (const std::exception&) {
        throw Error("bad element hex '" + s + "'");
    }
    if (v > n_) throw Error("element hex '" + s + "' exceeds 2^m - 1");
    return Elem{v};
}

}  // namespace seqcorr
