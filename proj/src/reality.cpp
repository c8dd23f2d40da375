#include "adreal/reality.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace adreal {

namespace {

constexpr std::array<std::pair<Reason, const char*>, 6> kReasonNames{{
    {Reason::PairingFailure, "PairingFailure"},
    {Reason::PartitionMismatch, "PartitionMismatch"},
    {Reason::ZeroPartitionObstruction, "ZeroPartitionObstruction"},
    {Reason::ModFourObstruction, "ModFourObstruction"},
    {Reason::OddImaginaryMultiplicity, "OddImaginaryMultiplicity"},
    {Reason::AllConditionsMet, "AllConditionsMet"},
}};

void require_field(const JordanData& jd, Field f, const char* what)
{
    if (jd.field != f)
        throw std::invalid_argument(std::string(what) + ": Jordan data over the wrong field");
}

// Trace of the element described by jd; over H this is tr_H.
Gaussian trace_of(const JordanData& jd)
{
    Gaussian t(0);
    for (const auto& d : jd.data) {
        const Gaussian m(static_cast<long>(d.multiplicity));
        t += jd.field == Field::C ? d.lambda * m : Gaussian(2 * d.lambda.re) * m;
    }
    return t;
}

void trace_gate(const JordanData& jd, bool gl_mode)
{
    if (gl_mode)
        return;
    const Gaussian t = trace_of(jd);
    if (!t.is_zero())
        throw NonZeroTrace("trace " + to_string(t) + " is nonzero; the element is not in sl(n, " + to_string(jd.field) +
                           ")");
}

// Pairing of eigenvalue classes with their negatives, restricted to classes selected by `constrained`.
template <class Pred>
Verdict pairing_verdict(const JordanData& jd, Pred constrained)
{
    for (const auto& d : jd.data) {
        if (!constrained(d.lambda))
            continue;
        const auto* partner = jd.find(EigenvalueClass::of(-d.lambda, jd.field).representative);
        if (!partner || partner->multiplicity != d.multiplicity)
            return {false, Reason::PairingFailure};
    }
    for (const auto& d : jd.data) {
        if (!constrained(d.lambda))
            continue;
        if (jd.find(EigenvalueClass::of(-d.lambda, jd.field).representative)->partition != d.partition)
            return {false, Reason::PartitionMismatch};
    }
    return {true, Reason::AllConditionsMet};
}

bool has_odd_part(const Partition& p)
{
    return std::any_of(p.parts().begin(), p.parts().end(), [](const auto& pm) { return pm.part % 2 == 1; });
}

} // namespace

std::string to_string(Reason r)
{
    for (const auto& [value, name] : kReasonNames)
        if (value == r)
            return name;
    return "Unknown";
}

Reason parse_reason(std::string_view text)
{
    for (const auto& [value, name] : kReasonNames)
        if (text == name)
            return value;
    throw ParseError("unknown reason '" + std::string(text) + "'");
}

Verdict is_real_C(const JordanData& jd, bool gl_mode)
{
    require_field(jd, Field::C, "is_real_C");
    trace_gate(jd, gl_mode);
    return pairing_verdict(jd, [](const Gaussian& l) { return !l.is_zero(); });
}

Verdict is_real_H(const JordanData& jd, bool gl_mode)
{
    require_field(jd, Field::H, "is_real_H");
    trace_gate(jd, gl_mode);
    // Purely imaginary classes coincide with their negatives.
    return pairing_verdict(jd, [](const Gaussian& l) { return !l.is_imaginary(); });
}

// An involutive reverser restricted to the nonzero spectrum swaps each lambda-sector with
// its -lambda partner and has determinant (-1)^p, p = half that dimension. On the nilpotent
// part its determinant can be either sign iff the zero partition has an odd part, and is
// (-1)^{sum of t_eta, eta = 2 mod 4} otherwise.
Verdict is_strongly_real_C(const JordanData& jd, bool gl_mode)
{
    const Verdict real = is_real_C(jd, gl_mode);
    if (!real.holds)
        return real;
    if (jd.n % 4 != 2)
        return {true, Reason::AllConditionsMet};
    const auto* zero = jd.find(Gaussian(0));
    if (!zero)
        return {false, Reason::ModFourObstruction};
    if (has_odd_part(zero->partition))
        return {true, Reason::AllConditionsMet};
    if (classify_partition(zero->partition).in_p_tilde_e)
        return {false, Reason::ZeroPartitionObstruction};
    return {false, Reason::ModFourObstruction};
}

Verdict is_strongly_real_H(const JordanData& jd, bool gl_mode)
{
    const Verdict real = is_real_H(jd, gl_mode);
    if (!real.holds)
        return real;
    for (const auto& d : jd.data) {
        if (d.lambda.is_zero() || !d.lambda.is_imaginary())
            continue;
        for (const auto& pm : d.partition.parts())
            if (pm.multiplicity % 2 != 0)
                return {false, Reason::OddImaginaryMultiplicity};
    }
    return {true, Reason::AllConditionsMet};
}

ClassificationReport classify(const JordanData& jd, bool gl_mode)
{
    ClassificationReport r;
    r.field = jd.field;
    r.n = jd.n;
    r.spectrum = jd.data;
    const Verdict strong = jd.field == Field::C ? is_strongly_real_C(jd, gl_mode) : is_strongly_real_H(jd, gl_mode);
    const Verdict real = jd.field == Field::C ? is_real_C(jd, gl_mode) : is_real_H(jd, gl_mode);
    r.is_real = real.holds;
    r.is_strongly_real = strong.holds;
    r.reason = strong.reason;
    return r;
}

namespace {

MatrixC diagonal_part_C(const JordanData& jd)
{
    MatrixC d(jd.n, jd.n);
    std::size_t at = 0;
    for (const auto& datum : jd.data)
        for (std::size_t k = 0; k < datum.multiplicity; ++k, ++at)
            d(at, at) = datum.lambda;
    return d;
}

} // namespace

SemisimpleNilpotentSplit<MatrixC> split_semisimple_nilpotent(const MatrixC& x, const JordanData& jd)
{
    require_field(jd, Field::C, "split_semisimple_nilpotent");
    const MatrixC xs = inverse_C(jd.base_change_c) * diagonal_part_C(jd) * jd.base_change_c;
    return {xs, x - xs};
}

SemisimpleNilpotentSplit<MatrixH> split_semisimple_nilpotent(const MatrixH& x, const JordanData& jd)
{
    require_field(jd, Field::H, "split_semisimple_nilpotent");
    const MatrixH xs = inverse_H(jd.base_change_h) * to_quaternionic(diagonal_part_C(jd)) * jd.base_change_h;
    return {xs, x - xs};
}

std::vector<std::size_t> centralizer_block_structure(const JordanData& jd)
{
    std::vector<std::size_t> sizes;
    for (const auto& d : jd.data) {
        if (d.partition.largest() != 1)
            throw std::invalid_argument("centralizer_block_structure: spectrum is not semisimple");
        sizes.push_back(d.multiplicity);
    }
    return sizes;
}

std::size_t PairedArrangement::n() const
{
    std::size_t total = zero_size;
    for (auto s : sizes)
        total += 2 * s;
    return total;
}

MatrixC PairedArrangement::semisimple_form() const
{
    std::vector<Gaussian> diag(zero_size, Gaussian(0));
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        diag.insert(diag.end(), sizes[i], lambdas[i]);
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        diag.insert(diag.end(), sizes[i], -lambdas[i]);
    return MatrixC::diagonal(diag);
}

PairedArrangement paired_arrangement(const JordanData& jd)
{
    require_field(jd, Field::C, "paired_arrangement");
    centralizer_block_structure(jd);
    if (!pairing_verdict(jd, [](const Gaussian& l) { return !l.is_zero(); }).holds)
        throw std::invalid_argument("paired_arrangement: eigenvalues are not paired with their negatives");
    PairedArrangement a;
    for (const auto& d : jd.data) {
        if (d.lambda.is_zero())
            a.zero_size = d.multiplicity;
        else if (lex_less(-d.lambda, d.lambda)) {
            a.lambdas.push_back(d.lambda);
            a.sizes.push_back(d.multiplicity);
        }
    }
    return a;
}

std::string to_string(ShapeStatus s)
{
    switch (s) {
    case ShapeStatus::Conforms:
        return "Conforms";
    case ShapeStatus::ShapeViolation:
        return "ShapeViolation";
    case ShapeStatus::NotAReverser:
        return "NotAReverser";
    case ShapeStatus::NotSpecial:
        return "NotSpecial";
    }
    return "Unknown";
}

ShapeCheck reverser_shape_check(const MatrixC& sigma, const PairedArrangement& arrangement)
{
    const std::size_t n = arrangement.n();
    if (sigma.rows() != n || sigma.cols() != n)
        throw DimensionMismatch("reverser_shape_check: sigma is " + sigma.shape() + ", expected " +
                                std::to_string(n) + "x" + std::to_string(n));
    const MatrixC xs = arrangement.semisimple_form();
    if (sigma * xs + xs * sigma != MatrixC(n, n))
        return {false, ShapeStatus::NotAReverser};
    if (det_C(sigma) != Gaussian(1))
        return {false, ShapeStatus::NotSpecial};

    // Allowed nonzero blocks: alpha on the zero block, f_i and g_i coupling lambda_i with -lambda_i.
    const std::size_t p = (n - arrangement.zero_size) / 2;
    auto allowed = [&](std::size_t r, std::size_t c) {
        const std::size_t z = arrangement.zero_size;
        if (r < z || c < z)
            return r < z && c < z;
        const std::size_t rr = r - z;
        const std::size_t cc = c - z;
        if ((rr < p) == (cc < p))
            return false;
        // Same pair index on both sides.
        const std::size_t ra = rr % p;
        const std::size_t ca = cc % p;
        std::size_t start = 0;
        for (auto s : arrangement.sizes) {
            const bool r_in = ra >= start && ra < start + s;
            const bool c_in = ca >= start && ca < start + s;
            if (r_in || c_in)
                return r_in && c_in;
            start += s;
        }
        return false;
    };
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!sigma(r, c).is_zero() && !allowed(r, c))
                return {false, ShapeStatus::ShapeViolation};

    const std::size_t z = arrangement.zero_size;
    if (z > 0 && exact_rank(sigma.block(0, 0, z, z)) != z)
        return {false, ShapeStatus::ShapeViolation};
    std::size_t start = 0;
    for (auto s : arrangement.sizes) {
        if (exact_rank(sigma.block(z + start, z + p + start, s, s)) != s ||
            exact_rank(sigma.block(z + p + start, z + start, s, s)) != s)
            return {false, ShapeStatus::ShapeViolation};
        start += s;
    }
    return {true, ShapeStatus::Conforms};
}

} // namespace adreal
