#include "tropicap/numbers.hpp"

namespace tropicap {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::non_symmetric: return "NonSymmetric";
        case Errc::bad_corank: return "BadCorank";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::not_a_circuit: return "NotACircuit";
        case Errc::polygon_not_planar: return "PolygonNotPlanar";
        case Errc::not_full_dimensional: return "NotFullDimensional";
        case Errc::not_transversal: return "NotTransversal";
        case Errc::not_pure: return "NotPure";
        case Errc::not_balanced: return "NotBalanced";
        case Errc::not_simplicial: return "NotSimplicial";
        case Errc::not_zero_dimensional: return "NotZeroDimensional";
        case Errc::bad_partition: return "BadPartition";
        case Errc::retries_exhausted: return "RetriesExhausted";
        case Errc::parse_error: return "ParseError";
        case Errc::invalid_config: return "InvalidConfig";
        case Errc::internal: return "Internal";
    }
    return "Unknown";
}

IVec to_integer(const RVec& v) {
    IVec out(v.size());
    for (Index i = 0; i < v.size(); ++i) {
        require(denominator(v[i]) == 1, "to_integer: entry is not integral");
        out[i] = numerator(v[i]);
    }
    return out;
}

RVec to_rational(const IVec& v) {
    RVec out(v.size());
    for (Index i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

RMat to_rational(const IMat& m) {
    RMat out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

Integer content(const IVec& v) {
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
    return abs(g);
}

IVec make_primitive(const IVec& v) {
    Integer g = content(v);
    if (g == 0 || g == 1) return v;
    IVec out(v.size());
    for (Index i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

Integer common_denominator(const RVec& v) {
    Integer d = 1;
    for (Index i = 0; i < v.size(); ++i) d = lcm(d, denominator(v[i]));
    return d;
}

IVec clear_denominators(const RVec& v) {
    Integer d = common_denominator(v);
    IVec out(v.size());
    for (Index i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * d;
        out[i] = numerator(scaled);
    }
    return out;
}

IVec primitive_direction(const RVec& v) { return make_primitive(clear_denominators(v)); }

Rational dot(const RVec& a, const RVec& b) {
    require(a.size() == b.size(), "dot: size mismatch");
    Rational s = 0;
    for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer dot(const IVec& a, const IVec& b) {
    require(a.size() == b.size(), "dot: size mismatch");
    Integer s = 0;
    for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IVec& a, const RVec& b) {
    require(a.size() == b.size(), "dot: size mismatch");
    Rational s = 0;
    for (Index i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

bool is_zero(const IVec& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

bool is_zero(const RVec& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

bool vec_eq(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) return false;
    for (Index i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool vec_eq(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) return false;
    for (Index i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool is_symmetric(const RMat& m) {
    if (m.rows() != m.cols()) return false;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

std::string rat_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rat_from_string(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) fail(Errc::parse_error, "zero denominator in '" + s + "'");
        return Rational(num, den);  // canonicalizes
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::parse_error, "bad rational '" + s + "'");
    }
}

std::string int_to_string(const Integer& z) { return z.str(); }

Integer int_from_string(const std::string& s) {
    try {
        return Integer(s);
    } catch (const std::exception&) {
        fail(Errc::parse_error, "bad integer '" + s + "'");
    }
}

IVec ivec_from(std::initializer_list<long> xs) {
    IVec v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

RVec rvec_from(std::initializer_list<long> xs) {
    RVec v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

long Rng::next_in(long lo, long hi) {
    require(lo <= hi, "Rng::next_in: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(next_u64());  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

Rng Rng::fork(std::uint64_t salt) {
    // golden-ratio mix keeps substreams decorrelated
    std::uint64_t s = next_u64() ^ (salt * 0x9e3779b97f4a7c15ull + 0x7f4a7c15ull);
    return Rng(s);
}

}  // namespace tropicap
