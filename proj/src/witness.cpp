#include "adreal/witness.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace adreal {

// ---------------------------------------------------------------------------
// Verification

namespace {

template <class T, class Det>
Certificate verify_impl(const Matrix<T>& g, const Matrix<T>& x, Det det, Field field)
{
    g.require_square("verify");
    if (g.rows() != x.rows() || !x.is_square())
        throw DimensionMismatch("verify: g is " + g.shape() + " but X is " + x.shape());
    const auto d = det(g);
    if (is_zero(d))
        throw SingularMatrix("verify: g is singular");

    Certificate c;
    c.field = field;
    const std::size_t n = g.rows();
    c.flags.conjugates_to_negative = (g * x + x * g) == Matrix<T>(n, n);
    c.flags.involutive = g * g == Matrix<T>::identity(n);
    c.flags.special = d == decltype(d)(1);
    auto holds = [](bool b) { return b ? std::string("holds") : std::string("fails"); };
    c.transcript.push_back("g X + X g = 0: " + holds(c.flags.conjugates_to_negative));
    c.transcript.push_back("g^2 = I: " + holds(c.flags.involutive));
    c.transcript.push_back(std::string(field == Field::C ? "det g = " : "det_H g = ") + to_string(d));
    return c;
}

} // namespace

Certificate verify(const MatrixC& g, const MatrixC& x)
{
    Certificate c = verify_impl(g, x, [](const MatrixC& m) { return det_C(m); }, Field::C);
    c.g_c = g;
    return c;
}

Certificate verify(const MatrixH& g, const MatrixH& x)
{
    Certificate c = verify_impl(g, x, [](const MatrixH& m) { return det_H(m); }, Field::H);
    c.g_h = g;
    return c;
}

// ---------------------------------------------------------------------------
// Sign-basis involution on nilpotent Jordan forms

namespace {

// +1, -1, +1, ... restarting at every Jordan block.
std::vector<int> block_alternating(const Partition& d)
{
    std::vector<int> s;
    for (auto part : d.flatten())
        for (std::size_t k = 0; k < part; ++k)
            s.push_back(k % 2 == 0 ? 1 : -1);
    return s;
}

MatrixC diag_signs(const std::vector<int>& s)
{
    MatrixC m(s.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        m(i, i) = Gaussian(s[i]);
    return m;
}

std::vector<int> sign_basis_signs(const Partition& d)
{
    std::vector<int> s;
    for (auto part : d.flatten()) {
        const bool shifted = part % 4 == 3;
        for (std::size_t k = 0; k < part; ++k) {
            const std::size_t l = part - 1 - k; // power of X at this position
            s.push_back(((l + (shifted ? 1 : 0)) % 2 == 0) ? 1 : -1);
        }
    }
    return s;
}

int product(const std::vector<int>& s)
{
    int p = 1;
    for (int v : s)
        p *= v;
    return p;
}

} // namespace

MatrixC sign_basis_involution(const Partition& d) { return diag_signs(sign_basis_signs(d)); }

std::optional<MatrixC> nilpotent_involution(const Partition& d, int target_det)
{
    std::vector<int> s = sign_basis_signs(d);
    if (product(s) != target_det) {
        std::size_t at = 0;
        bool flipped = false;
        for (auto part : d.flatten()) {
            if (part % 2 == 1) {
                for (std::size_t k = 0; k < part; ++k)
                    s[at + k] = -s[at + k];
                flipped = true;
                break;
            }
            at += part;
        }
        if (!flipped)
            return std::nullopt;
    }
    return diag_signs(s);
}

Certificate build_strong_witness_nilpotent_C(const Partition& d)
{
    if (classify_partition(d).in_p_tilde_e)
        throw NoWitness("N(" + d.to_string() + ") is not strongly real in sl(" + std::to_string(d.total()) + ", C)",
                        to_string(Reason::ZeroPartitionObstruction));
    const auto g = nilpotent_involution(d, 1);
    if (!g)
        throw Error("build_strong_witness_nilpotent_C: determinant cannot be fixed (internal error)");
    Certificate c = verify(*g, nilpotent_assembly(d));
    c.transcript.insert(c.transcript.begin(), "sign-basis involution on " + d.to_string());
    if (!(c.flags.conjugates_to_negative && c.flags.involutive && c.flags.special))
        throw Error("build_strong_witness_nilpotent_C: certificate failed verification (internal error)");
    return c;
}

// ---------------------------------------------------------------------------
// Builders on the canonical Jordan form

namespace {

struct Sector {
    const SpectralDatum* datum;
    std::size_t offset;
};

std::vector<Sector> sectors(const JordanData& jd)
{
    std::vector<Sector> out;
    std::size_t at = 0;
    for (const auto& d : jd.data) {
        out.push_back({&d, at});
        at += d.multiplicity;
    }
    return out;
}

const Sector& sector_of(const std::vector<Sector>& secs, const Gaussian& lambda)
{
    for (const auto& s : secs)
        if (s.datum->lambda == lambda)
            return s;
    throw Error("missing eigenvalue sector " + to_string(lambda) + " (internal error)");
}

// (lambda, -lambda) sector pairs with Re lambda > 0, or lambda on the positive imaginary axis over C.
std::vector<std::pair<Sector, Sector>> signed_pairs(const JordanData& jd, const std::vector<Sector>& secs)
{
    std::vector<std::pair<Sector, Sector>> out;
    for (const auto& s : secs) {
        const Gaussian& l = s.datum->lambda;
        if (l.is_zero() || !lex_less(-l, l))
            continue;
        if (jd.field == Field::H && l.is_imaginary())
            continue;
        out.push_back({s, sector_of(secs, EigenvalueClass::of(-l, jd.field).representative)});
    }
    return out;
}

template <class T>
void place_pair(Matrix<T>& m, const Sector& a, const Sector& b, const Matrix<T>& upper, const Matrix<T>& lower)
{
    const std::size_t size = a.datum->multiplicity;
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            m(a.offset + i, a.offset + j) = T(0);
            m(b.offset + i, b.offset + j) = T(0);
        }
    m.set_block(a.offset, b.offset, upper);
    m.set_block(b.offset, a.offset, lower);
}

void require_verdict(const Verdict& v, const std::string& what)
{
    if (!v.holds)
        throw NoWitness(what + ": " + to_string(v.reason), to_string(v.reason));
}

void require_flags(const Certificate& c, bool involutive, const char* who)
{
    if (!c.flags.conjugates_to_negative || !c.flags.special || (involutive && !c.flags.involutive))
        throw Error(std::string(who) + ": certificate failed verification (internal error)");
}

// z in {1, i, -1, -i} with z^n (-1)^{floor(n/2)} = 1, so diag(z, -z, ...) has det 1.
Gaussian alternating_scale(std::size_t n)
{
    const Gaussian sign((n / 2) % 2 == 0 ? 1 : -1);
    for (const Gaussian& z : {Gaussian(1), Gaussian::unit_i(), Gaussian(-1), -Gaussian::unit_i()})
        if (pow(z, static_cast<unsigned>(n)) * sign == Gaussian(1))
            return z;
    throw Error("alternating_scale: no fourth root of unity fits (internal error)");
}

template <class T>
Matrix<T> global_alternating(std::size_t n, const T& z)
{
    Matrix<T> m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = k % 2 == 0 ? z : -z;
    return m;
}

// diag(j) on the -lambda sectors with Im lambda > 0: their canonical blocks J(d, -conj lambda)
// become J(d, -lambda) after conjugation by this matrix.
MatrixH working_change(const JordanData& jd, const std::vector<std::pair<Sector, Sector>>& pairs)
{
    MatrixH d = MatrixH::identity(jd.n);
    for (const auto& [pos, neg] : pairs)
        if (!pos.datum->lambda.is_real())
            for (std::size_t k = 0; k < neg.datum->multiplicity; ++k)
                d(neg.offset + k, neg.offset + k) = Quaternion::unit_j();
    return d;
}

std::string sector_summary(const JordanData& jd)
{
    std::string s;
    for (const auto& d : jd.data)
        s += (s.empty() ? "" : ", ") + to_string(d.lambda) + " " + d.partition.to_string();
    return s;
}

} // namespace

Certificate build_real_witness_C(const MatrixC& x, const JordanData& jd)
{
    if (jd.field != Field::C)
        throw std::invalid_argument("build_real_witness_C: Jordan data over H");
    require_verdict(is_real_C(jd, true), "not real");
    const std::size_t n = jd.n;
    if (x.is_zero()) {
        Certificate c = verify(MatrixC::identity(n), x);
        c.transcript.insert(c.transcript.begin(), "X = 0: identity certificate");
        return c;
    }

    const auto secs = sectors(jd);
    MatrixC sigma = MatrixC::identity(n);
    for (const auto& [pos, neg] : signed_pairs(jd, secs)) {
        const MatrixC id = MatrixC::identity(pos.datum->multiplicity);
        place_pair(sigma, pos, neg, -id, id);
    }
    const Gaussian z = alternating_scale(n);
    const MatrixC tau = global_alternating(n, z);
    const MatrixC g_canonical = tau * sigma;
    const MatrixC g = inverse_C(jd.base_change_c) * g_canonical * jd.base_change_c;

    Certificate c = verify(g, x);
    c.transcript.insert(c.transcript.begin(),
                        {"canonical spectrum: " + sector_summary(jd),
                         "g = tau sigma, sigma swaps each lambda-sector with its -lambda partner via [[0,-I],[I,0]]",
                         "tau = diag(z, -z, ...) with z = " + to_string(z),
                         "g mapped back through the Jordan base change"});
    require_flags(c, false, "build_real_witness_C");
    return c;
}

Certificate build_strong_witness_C(const MatrixC& x, const JordanData& jd)
{
    if (jd.field != Field::C)
        throw std::invalid_argument("build_strong_witness_C: Jordan data over H");
    require_verdict(is_strongly_real_C(jd, true), "not strongly real");
    const std::size_t n = jd.n;
    const auto secs = sectors(jd);
    const auto pairs = signed_pairs(jd, secs);

    std::size_t p = 0;
    MatrixC sigma = MatrixC::identity(n);
    MatrixC tau = MatrixC::identity(n);
    for (const auto& [pos, neg] : pairs) {
        const std::size_t m = pos.datum->multiplicity;
        p += m;
        const MatrixC id = MatrixC::identity(m);
        place_pair(sigma, pos, neg, id, id);
        const MatrixC t1 = diag_signs(block_alternating(pos.datum->partition));
        tau.set_block(pos.offset, pos.offset, t1);
        tau.set_block(neg.offset, neg.offset, t1);
    }
    // The swap part has determinant (-1)^p; the nilpotent block must match it.
    const int target = p % 2 == 0 ? 1 : -1;
    std::string zero_note = "no zero eigenvalue";
    if (const auto* zero = jd.find(Gaussian(0))) {
        const auto tau_o = nilpotent_involution(zero->partition, target);
        if (!tau_o)
            throw Error("build_strong_witness_C: nilpotent block determinant cannot be matched (internal error)");
        tau.set_block(sector_of(secs, Gaussian(0)).offset, sector_of(secs, Gaussian(0)).offset, *tau_o);
        zero_note = "tau_o = sign-basis involution on " + zero->partition.to_string() + " with det " +
                    std::to_string(target);
    } else if (target != 1) {
        throw Error("build_strong_witness_C: swap determinant is -1 without a zero block (internal error)");
    }
    if (sigma * tau != tau * sigma)
        throw Error("build_strong_witness_C: sigma and tau do not commute (internal error)");

    const MatrixC g_canonical = tau * sigma;
    const MatrixC g = inverse_C(jd.base_change_c) * g_canonical * jd.base_change_c;
    Certificate c = verify(g, x);
    c.transcript.insert(c.transcript.begin(),
                        {"canonical spectrum: " + sector_summary(jd),
                         "sigma swaps each lambda-sector with its -lambda partner via [[0,I],[I,0]]",
                         "tau = tau_o (+) tau_1 (+) tau_1 with tau_1 alternating per Jordan block", zero_note,
                         "sigma tau = tau sigma: holds", "g = tau sigma mapped back through the Jordan base change"});
    require_flags(c, true, "build_strong_witness_C");
    return c;
}

Certificate build_real_witness_H(const MatrixH& x, const JordanData& jd)
{
    if (jd.field != Field::H)
        throw std::invalid_argument("build_real_witness_H: Jordan data over C");
    require_verdict(is_real_H(jd, true), "not real");
    const std::size_t n = jd.n;
    const auto secs = sectors(jd);
    const auto pairs = signed_pairs(jd, secs);

    MatrixH sigma = MatrixH::identity(n);
    for (const auto& s : secs)
        if (s.datum->lambda.is_imaginary())
            for (std::size_t k = 0; k < s.datum->multiplicity; ++k)
                sigma(s.offset + k, s.offset + k) = Quaternion::unit_j();
    for (const auto& [pos, neg] : pairs) {
        const MatrixH id = MatrixH::identity(pos.datum->multiplicity);
        place_pair(sigma, pos, neg, MatrixH(-id), id);
    }
    const MatrixH tau = global_alternating(n, Quaternion(1));
    const MatrixH d = working_change(jd, pairs);
    const MatrixH g_canonical = inverse_H(d) * tau * sigma * d;
    const MatrixH g = inverse_H(jd.base_change_h) * g_canonical * jd.base_change_h;

    Certificate c = verify(g, x);
    c.transcript.insert(c.transcript.begin(),
                        {"canonical spectrum: " + sector_summary(jd),
                         "sigma = j on purely imaginary classes, [[0,-I],[I,0]] on each +-lambda pair",
                         "tau = diag(1, -1, ...)", "g = tau sigma mapped back through the Jordan base change"});
    require_flags(c, false, "build_real_witness_H");
    return c;
}

Certificate build_strong_witness_H(const MatrixH& x, const JordanData& jd)
{
    if (jd.field != Field::H)
        throw std::invalid_argument("build_strong_witness_H: Jordan data over C");
    require_verdict(is_strongly_real_H(jd, true), "not strongly real");
    const std::size_t n = jd.n;
    const auto secs = sectors(jd);
    const auto pairs = signed_pairs(jd, secs);

    MatrixH g_w = MatrixH::identity(n);
    for (const auto& s : secs) {
        const Gaussian& l = s.datum->lambda;
        if (l.is_zero()) {
            g_w.set_block(s.offset, s.offset, to_quaternionic(diag_signs(block_alternating(s.datum->partition))));
        } else if (l.is_imaginary()) {
            // Equal blocks paired adjacently: [[0, A], [-A, 0]] with A = diag(j, -j, ...).
            std::size_t at = s.offset;
            for (const auto& [size, count] : s.datum->partition.parts())
                for (std::size_t c = 0; c < count; c += 2, at += 2 * size)
                    for (std::size_t k = 0; k < size; ++k) {
                        const Quaternion a = k % 2 == 0 ? Quaternion::unit_j() : -Quaternion::unit_j();
                        g_w(at + k, at + k) = Quaternion(0);
                        g_w(at + size + k, at + size + k) = Quaternion(0);
                        g_w(at + k, at + size + k) = a;
                        g_w(at + size + k, at + k) = -a;
                    }
        }
    }
    for (const auto& [pos, neg] : pairs) {
        const MatrixH t1 = to_quaternionic(diag_signs(block_alternating(pos.datum->partition)));
        place_pair(g_w, pos, neg, t1, t1);
    }
    const MatrixH d = working_change(jd, pairs);
    const MatrixH g_canonical = inverse_H(d) * g_w * d;
    const MatrixH g = inverse_H(jd.base_change_h) * g_canonical * jd.base_change_h;

    Certificate c = verify(g, x);
    c.transcript.insert(c.transcript.begin(),
                        {"canonical spectrum: " + sector_summary(jd),
                         "g_o alternating per Jordan block on the zero class",
                         "imaginary classes: equal blocks paired by [[0,A],[-A,0]], A = diag(j,-j,...)",
                         "+-lambda pairs: [[0,T],[T,0]] with T alternating per Jordan block",
                         "g mapped back through the Jordan base change"});
    require_flags(c, true, "build_strong_witness_H");
    return c;
}

// ---------------------------------------------------------------------------
// Normalizing the determinant

namespace {

// beta in Z[i] with beta^n = u, or nothing.
std::optional<Gaussian> gaussian_integer_root(const Gaussian& u, unsigned n)
{
    const std::complex<long double> w(u.re.get_d(), u.im.get_d());
    const long double radius = std::pow(std::abs(w), 1.0L / n);
    if (!std::isfinite(radius) || radius > 1e15L)
        throw RootNotRepresentable("scale_to_special: determinant too large for the root search");
    const long double base_angle = std::arg(w) / n;
    for (unsigned k = 0; k < n; ++k) {
        const std::complex<long double> c = std::polar(radius, base_angle + 2 * std::numbers::pi_v<long double> * k / n);
        const long long re = std::llround(c.real());
        const long long im = std::llround(c.imag());
        for (long long dr = -1; dr <= 1; ++dr)
            for (long long di = -1; di <= 1; ++di) {
                const Gaussian beta(Rational(static_cast<long>(re + dr)), Rational(static_cast<long>(im + di)));
                if (pow(beta, n) == u)
                    return beta;
            }
    }
    return std::nullopt;
}

} // namespace

MatrixC scale_to_special(const MatrixC& g)
{
    g.require_square("scale_to_special");
    const std::size_t n = g.rows();
    const Gaussian d = det_C(g);
    if (d.is_zero())
        throw SingularMatrix("scale_to_special: g is singular");
    if (d == Gaussian(1))
        return g;
    // alpha^n = w = 1/d; with v clearing denominators, (alpha v)^n = w v^n lies in Z[i].
    const Gaussian w = d.inverse();
    mpz_class v;
    mpz_lcm(v.get_mpz_t(), w.re.get_den_mpz_t(), w.im.get_den_mpz_t());
    mpz_class vn;
    mpz_pow_ui(vn.get_mpz_t(), v.get_mpz_t(), n);
    const Gaussian u = w * Gaussian(Rational(vn));
    const auto beta = gaussian_integer_root(u, static_cast<unsigned>(n));
    if (!beta)
        throw RootNotRepresentable("scale_to_special: det g = " + to_string(d) + " has no " + std::to_string(n) +
                                   "-th root in Q(i)");
    const Gaussian alpha = *beta / Gaussian(Rational(v));
    return g.left_scale(alpha);
}

MatrixH scale_to_special(const MatrixH& g)
{
    g.require_square("scale_to_special");
    const std::size_t n = g.rows();
    const Rational d = det_H(g);
    if (sgn(d) == 0)
        throw SingularMatrix("scale_to_special: g is singular");
    if (d == 1)
        return g;
    const Rational w = 1 / d;
    const auto k = static_cast<unsigned long>(2 * n);
    mpz_class num, den;
    const bool exact = mpz_root(num.get_mpz_t(), w.get_num_mpz_t(), k) != 0 &&
                       mpz_root(den.get_mpz_t(), w.get_den_mpz_t(), k) != 0;
    if (!exact)
        throw RootNotRepresentable("scale_to_special: det_H g = " + to_string(d) + " has no rational " +
                                   std::to_string(k) + "-th root");
    return g.left_scale(Quaternion(Rational(num, den)));
}

// ---------------------------------------------------------------------------
// Monomial search

namespace {

template <class T>
class MonomialSearch {
public:
    MonomialSearch(const Matrix<T>& x, std::vector<T> fixed_units, std::vector<T> pair_units)
        : x_(x), n_(x.rows()), fixed_(std::move(fixed_units)), paired_(std::move(pair_units)),
          partner_(n_, kUnassigned), unit_(n_)
    {
    }

    template <class Accept>
    std::optional<Matrix<T>> run(Accept accept)
    {
        std::optional<Matrix<T>> found;
        search(0, accept, found);
        return found;
    }

private:
    static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

    // Entry (a, partner(c)) of g X + X g, defined once rows a and c are assigned.
    bool entry_vanishes(std::size_t a, std::size_t c) const
    {
        return is_zero(unit_[a] * x_(partner_[a], partner_[c]) + x_(a, c) * unit_[c]);
    }

    bool consistent(std::size_t r) const
    {
        for (std::size_t c = 0; c < n_; ++c) {
            if (partner_[c] == kUnassigned)
                continue;
            if (!entry_vanishes(r, c) || !entry_vanishes(c, r))
                return false;
        }
        return true;
    }

    Matrix<T> assemble() const
    {
        Matrix<T> g(n_, n_);
        for (std::size_t a = 0; a < n_; ++a)
            g(a, partner_[a]) = unit_[a];
        return g;
    }

    template <class Accept>
    bool search(std::size_t row, Accept& accept, std::optional<Matrix<T>>& found)
    {
        while (row < n_ && partner_[row] != kUnassigned)
            ++row;
        if (row == n_) {
            Matrix<T> g = assemble();
            if (!accept(g))
                return false;
            found = std::move(g);
            return true;
        }
        partner_[row] = row;
        for (const auto& u : fixed_) {
            unit_[row] = u;
            if (consistent(row) && search(row + 1, accept, found))
                return true;
        }
        for (std::size_t c = row + 1; c < n_; ++c) {
            if (partner_[c] != kUnassigned)
                continue;
            partner_[row] = c;
            partner_[c] = row;
            for (const auto& u : paired_) {
                unit_[row] = u;
                unit_[c] = conj(u); // inverse of a unit
                if (consistent(row) && consistent(c) && search(row + 1, accept, found))
                    return true;
            }
            partner_[c] = kUnassigned;
        }
        partner_[row] = kUnassigned;
        return false;
    }

    const Matrix<T>& x_;
    std::size_t n_;
    std::vector<T> fixed_;
    std::vector<T> paired_;
    std::vector<std::size_t> partner_;
    std::vector<T> unit_;
};

void check_search_bound(std::size_t n)
{
    if (n > kMonomialSearchBound)
        throw BoundExceeded("negative_search_oracle: n = " + std::to_string(n) + " exceeds " +
                            std::to_string(kMonomialSearchBound));
}

const char* kSearchNote = "monomial search only: a miss is evidence, not a proof of nonexistence";

} // namespace

std::optional<Certificate> negative_search_oracle(const MatrixC& x)
{
    x.require_square("negative_search_oracle");
    check_search_bound(x.rows());
    MonomialSearch<Gaussian> search(x, {Gaussian(1), Gaussian(-1)}, {Gaussian(1), Gaussian(-1)});
    const auto g = search.run([](const MatrixC& m) { return det_C(m) == Gaussian(1); });
    if (!g)
        return std::nullopt;
    Certificate c = verify(*g, x);
    c.transcript.insert(c.transcript.begin(), kSearchNote);
    return c;
}

std::optional<Certificate> negative_search_oracle(const MatrixH& x)
{
    x.require_square("negative_search_oracle");
    check_search_bound(x.rows());
    const Quaternion i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();
    MonomialSearch<Quaternion> search(x, {Quaternion(1), Quaternion(-1)},
                                      {Quaternion(1), Quaternion(-1), i, -i, j, -j, k, -k});
    const auto g = search.run([](const MatrixH& m) { return det_H(m) == 1; });
    if (!g)
        return std::nullopt;
    Certificate c = verify(*g, x);
    c.transcript.insert(c.transcript.begin(), kSearchNote);
    return c;
}

} // namespace adreal
