#include "adreal/spectral.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace adreal {

std::string to_string(Field f) { return f == Field::C ? "C" : "H"; }

Field parse_field(std::string_view text)
{
    if (text == "C" || text == "c")
        return Field::C;
    if (text == "H" || text == "h")
        return Field::H;
    throw ParseError("unknown field '" + std::string(text) + "' (expected C or H)");
}

EigenvalueClass EigenvalueClass::of(const Gaussian& lambda, Field field)
{
    if (field == Field::H && sgn(lambda.im) < 0)
        return {lambda.conj(), field};
    return {lambda, field};
}

const SpectralDatum* JordanData::find(const Gaussian& lambda) const
{
    for (const auto& d : data)
        if (d.lambda == lambda)
            return &d;
    return nullptr;
}

MatrixC jordan_block(std::size_t m, const Gaussian& lambda)
{
    MatrixC b(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        b(i, i) = lambda;
        if (i + 1 < m)
            b(i, i + 1) = Gaussian(1);
    }
    return b;
}

MatrixC jordan_assembly(const Partition& d, const Gaussian& lambda)
{
    std::vector<MatrixC> blocks;
    for (auto part : d.flatten())
        blocks.push_back(jordan_block(part, lambda));
    return block_diag(std::span<const MatrixC>(blocks));
}

MatrixC nilpotent_assembly(const Partition& d) { return jordan_assembly(d, Gaussian(0)); }

void sort_spectrum(std::vector<SpectralDatum>& data)
{
    std::sort(data.begin(), data.end(),
              [](const SpectralDatum& a, const SpectralDatum& b) { return lex_less(a.lambda, b.lambda); });
}

JordanData jordan_data_from_spec(Field field, std::vector<SpectralDatum> data)
{
    JordanData jd;
    jd.field = field;
    for (auto& d : data) {
        d.lambda = EigenvalueClass::of(d.lambda, field).representative;
        if (d.partition.empty())
            throw std::invalid_argument("spectral datum with empty partition");
        d.multiplicity = d.partition.total();
        jd.n += d.multiplicity;
    }
    sort_spectrum(data);
    for (std::size_t i = 1; i < data.size(); ++i)
        if (data[i].lambda == data[i - 1].lambda)
            throw std::invalid_argument("eigenvalue class " + to_string(data[i].lambda) + " listed twice");
    jd.data = std::move(data);
    if (field == Field::C)
        jd.base_change_c = MatrixC::identity(jd.n);
    else
        jd.base_change_h = MatrixH::identity(jd.n);
    return jd;
}

MatrixC canonical_form_C(const JordanData& jd)
{
    std::vector<MatrixC> blocks;
    for (const auto& d : jd.data)
        blocks.push_back(jordan_assembly(d.partition, d.lambda));
    return block_diag(std::span<const MatrixC>(blocks));
}

MatrixH canonical_form_H(const JordanData& jd) { return to_quaternionic(canonical_form_C(jd)); }

// ---------------------------------------------------------------------------
// Characteristic polynomial and roots in Q(i)

std::vector<Gaussian> characteristic_polynomial(const MatrixC& a)
{
    a.require_square("characteristic_polynomial");
    const std::size_t n = a.rows();
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    std::vector<Gaussian> c(n + 1, Gaussian(0));
    c[n] = Gaussian(1);
    MatrixC m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) += c[n - k + 1];
        const Gaussian t = (a * m).trace();
        c[n - k] = -t / Gaussian(static_cast<long>(k));
    }
    return c;
}

namespace {

Gaussian evaluate(const std::vector<Gaussian>& coeffs, const Gaussian& x)
{
    Gaussian acc(0);
    for (std::size_t k = coeffs.size(); k-- > 0;)
        acc = acc * x + coeffs[k];
    return acc;
}

// Divides by (x - r); r must be a root.
std::vector<Gaussian> deflate(const std::vector<Gaussian>& coeffs, const Gaussian& r)
{
    const std::size_t deg = coeffs.size() - 1;
    std::vector<Gaussian> out(deg, Gaussian(0));
    Gaussian carry(0);
    for (std::size_t k = deg; k-- > 0;) {
        carry = carry * r + coeffs[k + 1];
        out[k] = carry;
    }
    return out;
}

std::size_t strip_root(std::vector<Gaussian>& coeffs, const Gaussian& r)
{
    std::size_t mult = 0;
    while (coeffs.size() > 1 && evaluate(coeffs, r).is_zero()) {
        coeffs = deflate(coeffs, r);
        ++mult;
    }
    return mult;
}

struct ZI {
    mpz_class re;
    mpz_class im;
};

ZI zi_mul(const ZI& a, const ZI& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

bool zi_divides(const ZI& d, const ZI& c, ZI* quotient)
{
    const mpz_class norm = d.re * d.re + d.im * d.im;
    const ZI num = zi_mul(c, ZI{d.re, -d.im});
    if (!mpz_divisible_p(num.re.get_mpz_t(), norm.get_mpz_t()) ||
        !mpz_divisible_p(num.im.get_mpz_t(), norm.get_mpz_t()))
        return false;
    if (quotient) {
        mpz_divexact(quotient->re.get_mpz_t(), num.re.get_mpz_t(), norm.get_mpz_t());
        mpz_divexact(quotient->im.get_mpz_t(), num.im.get_mpz_t(), norm.get_mpz_t());
    }
    return true;
}

constexpr unsigned long kTrialDivisionLimit = 2'000'000;

// Rational prime factors of a positive integer by trial division.
std::vector<mpz_class> rational_prime_factors(mpz_class n)
{
    std::vector<mpz_class> primes;
    for (unsigned long p = 2; n > 1; ++p) {
        if (mpz_class(p) * p > n) {
            primes.push_back(n);
            break;
        }
        if (p > kTrialDivisionLimit)
            throw NonSplittingSpectrum("constant term too large to factor; supply the eigenvalues as hints");
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.emplace_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p))
                n /= p;
        }
    }
    return primes;
}

// All Gaussian integer divisors of c != 0, including the four unit multiples.
std::vector<ZI> gaussian_divisors(ZI c)
{
    std::vector<ZI> gaussian_primes;
    for (const auto& p : rational_prime_factors(c.re * c.re + c.im * c.im)) {
        if (p == 2) {
            gaussian_primes.push_back({1, 1});
        } else if (p % 4 == 3) {
            gaussian_primes.push_back({p, 0});
        } else {
            mpz_class a = 1;
            for (;; ++a) {
                const mpz_class rest = p - a * a;
                if (mpz_perfect_square_p(rest.get_mpz_t())) {
                    mpz_class b;
                    mpz_sqrt(b.get_mpz_t(), rest.get_mpz_t());
                    gaussian_primes.push_back({a, b});
                    gaussian_primes.push_back({a, -b});
                    break;
                }
            }
        }
    }

    std::vector<std::pair<ZI, unsigned>> factorization;
    for (const auto& pi : gaussian_primes) {
        unsigned e = 0;
        ZI q;
        while (zi_divides(pi, c, &q)) {
            c = q;
            ++e;
        }
        if (e > 0)
            factorization.push_back({pi, e});
    }

    std::vector<ZI> divisors{{1, 0}};
    for (const auto& [pi, e] : factorization) {
        std::vector<ZI> next;
        for (const auto& d : divisors) {
            ZI power = d;
            for (unsigned k = 0; k <= e; ++k) {
                next.push_back(power);
                power = zi_mul(power, pi);
            }
        }
        divisors = std::move(next);
    }
    std::vector<ZI> out;
    const ZI units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto& d : divisors)
        for (const auto& u : units)
            out.push_back(zi_mul(d, u));
    return out;
}

} // namespace

std::vector<std::pair<Gaussian, std::size_t>> split_over_gaussian_rationals(std::vector<Gaussian> coeffs,
                                                                           const std::vector<Gaussian>& hints)
{
    if (coeffs.empty() || coeffs.back() != Gaussian(1))
        throw std::invalid_argument("split_over_gaussian_rationals expects a monic polynomial");
    const std::vector<Gaussian> original = coeffs;
    std::vector<std::pair<Gaussian, std::size_t>> roots;
    auto record = [&](const Gaussian& r, std::size_t m) {
        for (auto& [root, mult] : roots)
            if (root == r) {
                mult += m;
                return;
            }
        roots.push_back({r, m});
    };

    for (const auto& h : hints) {
        if (!evaluate(original, h).is_zero())
            throw DefectiveHint("hint " + to_string(h) + " is not an eigenvalue");
        if (const auto m = strip_root(coeffs, h))
            record(h, m);
    }
    if (const auto m = strip_root(coeffs, Gaussian(0)))
        record(Gaussian(0), m);

    const std::size_t deg = coeffs.size() - 1;
    if (deg > 0) {
        // y = D x turns the remainder into a monic polynomial over Z[i]; its roots in Q(i)
        // are Gaussian integers dividing the constant term D^deg * c_0.
        mpz_class denom = 1;
        for (const auto& c : coeffs) {
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.re.get_den_mpz_t());
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.im.get_den_mpz_t());
        }
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), denom.get_mpz_t(), deg);
        const Rational re0 = coeffs[0].re * Rational(scale);
        const Rational im0 = coeffs[0].im * Rational(scale);
        const ZI constant{re0.get_num(), im0.get_num()};
        for (const auto& w : gaussian_divisors(constant)) {
            if (coeffs.size() == 1)
                break;
            const Gaussian x(Rational(w.re, denom), Rational(w.im, denom));
            Gaussian xc = x;
            xc.re.canonicalize();
            xc.im.canonicalize();
            if (const auto m = strip_root(coeffs, xc))
                record(xc, m);
        }
    }
    if (coeffs.size() > 1)
        throw NonSplittingSpectrum("characteristic polynomial has " + std::to_string(coeffs.size() - 1) +
                                   " eigenvalue(s) outside Q(i)");
    return roots;
}

// ---------------------------------------------------------------------------
// Generalized eigenvector chains

namespace {

using Vec = std::vector<Gaussian>;

Vec mat_vec(const MatrixC& a, const Vec& v)
{
    Vec out(a.rows(), Gaussian(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!v[j].is_zero())
                out[i] += a(i, j) * v[j];
    return out;
}

Vec to_vec(const MatrixC& column)
{
    Vec v(column.rows());
    for (std::size_t i = 0; i < column.rows(); ++i)
        v[i] = column(i, 0);
    return v;
}

// The right multiplication by j, read through (a; b) <-> a - conj(b) j: (a; b) -> (conj b; -conj a).
Vec quaternionic_partner(const Vec& v)
{
    const std::size_t n = v.size() / 2;
    Vec out(v.size());
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = v[i + n].conj();
        out[i + n] = -v[i].conj();
    }
    return out;
}

// Incremental independence test by forward elimination.
class SpanTracker {
public:
    bool add(Vec v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Gaussian f = v[pivots_[r]];
            if (f.is_zero())
                continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!rows_[r][j].is_zero())
                    v[j] -= f * rows_[r][j];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p].is_zero())
            ++p;
        if (p == v.size())
            return false;
        const Gaussian inv = v[p].inverse();
        for (auto& x : v)
            x *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

struct Chain {
    Vec top;
    std::size_t length;
    bool partner; // the j-image of the preceding chain
};

struct ChainResult {
    std::vector<Chain> chains;
    std::map<std::size_t, std::size_t, std::greater<>> counts; // block size -> number of blocks
};

// Jordan chains of A = X - lambda I on its generalized kernel of dimension `alg_mult`.
// With `quaternionic`, chains are chosen in pairs (u, partner(u)).
ChainResult build_chains(const MatrixC& a, std::size_t alg_mult, bool quaternionic)
{
    const std::size_t dim = a.rows();
    std::vector<std::vector<Vec>> kernels{{}};
    std::vector<std::size_t> rank{dim};
    MatrixC power = MatrixC::identity(dim);
    while (kernels.back().size() < alg_mult) {
        if (kernels.size() > alg_mult)
            throw Error("build_chains: kernel sequence did not stabilize (internal error)");
        power = power * a;
        std::vector<Vec> basis;
        for (const auto& col : nullspace(power))
            basis.push_back(to_vec(col));
        rank.push_back(dim - basis.size());
        kernels.push_back(std::move(basis));
    }
    if (kernels.back().size() != alg_mult)
        throw Error("build_chains: generalized kernel has unexpected dimension (internal error)");
    const std::size_t kmax = kernels.size() - 1;
    rank.push_back(rank.back());

    ChainResult result;
    for (std::size_t k = kmax; k >= 1; --k) {
        const std::size_t blocks = rank[k - 1] - 2 * rank[k] + rank[k + 1];
        if (blocks == 0)
            continue;
        if (quaternionic && blocks % 2 != 0)
            throw DoublingViolation("real eigenvalue has an odd number (" + std::to_string(blocks) +
                                    ") of Jordan blocks of size " + std::to_string(k) + " in Phi(X)");
        result.counts[k] = blocks;

        SpanTracker span;
        for (const auto& v : kernels[k - 1])
            span.add(v);
        for (const auto& c : result.chains) {
            Vec w = c.top;
            for (std::size_t s = 0; s < c.length - k; ++s)
                w = mat_vec(a, w);
            if (!span.add(std::move(w)))
                throw Error("build_chains: dependent chain vectors (internal error)");
        }
        std::size_t picked = 0;
        for (const auto& cand : kernels[k]) {
            if (picked == blocks)
                break;
            if (!span.add(cand))
                continue;
            result.chains.push_back({cand, k, false});
            ++picked;
            if (quaternionic) {
                Vec partner = quaternionic_partner(cand);
                if (!span.add(partner))
                    throw DoublingViolation("j-partner of a chain top is dependent (internal error)");
                result.chains.push_back({std::move(partner), k, true});
                ++picked;
            }
        }
        if (picked != blocks)
            throw Error("build_chains: could not complete the chain basis (internal error)");
    }
    return result;
}

// Columns A^{L-1} u, ..., A u, u.
std::vector<Vec> chain_columns(const MatrixC& a, const Chain& c)
{
    std::vector<Vec> cols(c.length);
    Vec w = c.top;
    for (std::size_t s = c.length; s-- > 0;) {
        cols[s] = w;
        w = mat_vec(a, w);
    }
    return cols;
}

Partition partition_from_counts(const std::map<std::size_t, std::size_t, std::greater<>>& counts,
                                std::size_t divide_by)
{
    std::vector<PartWithMultiplicity> parts;
    for (const auto& [size, count] : counts)
        parts.push_back({size, count / divide_by});
    return Partition(std::move(parts));
}

MatrixC shifted(const MatrixC& x, const Gaussian& lambda)
{
    MatrixC a = x;
    for (std::size_t i = 0; i < a.rows(); ++i)
        a(i, i) -= lambda;
    return a;
}

std::map<std::size_t, std::size_t, std::greater<>> block_counts(const MatrixC& a, std::size_t alg_mult)
{
    const std::size_t dim = a.rows();
    std::vector<std::size_t> rank{dim};
    MatrixC power = MatrixC::identity(dim);
    while (rank.back() > dim - alg_mult) {
        power = power * a;
        rank.push_back(exact_rank(power));
    }
    rank.push_back(rank.back());
    std::map<std::size_t, std::size_t, std::greater<>> counts;
    for (std::size_t k = 1; k + 1 < rank.size(); ++k)
        if (const auto b = rank[k - 1] - 2 * rank[k] + rank[k + 1])
            counts[k] = b;
    return counts;
}

std::vector<std::pair<Gaussian, std::size_t>> sorted_roots(std::vector<std::pair<Gaussian, std::size_t>> roots)
{
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    return roots;
}

} // namespace

JordanData jordan_form_C(const MatrixC& x, const std::vector<Gaussian>& hints)
{
    x.require_square("jordan_form_C");
    const std::size_t n = x.rows();
    JordanData jd;
    jd.field = Field::C;
    jd.n = n;

    std::vector<Vec> columns;
    for (const auto& [lambda, mult] : sorted_roots(split_over_gaussian_rationals(characteristic_polynomial(x), hints))) {
        const MatrixC a = shifted(x, lambda);
        const ChainResult chains = build_chains(a, mult, false);
        jd.data.push_back({lambda, mult, partition_from_counts(chains.counts, 1)});
        for (const auto& c : chains.chains)
            for (auto& col : chain_columns(a, c))
                columns.push_back(std::move(col));
    }

    MatrixC p(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            p(i, j) = columns[j][i];
    jd.base_change_c = inverse_C(p);
    if (jd.base_change_c * x * p != canonical_form_C(jd))
        throw Error("jordan_form_C: reconstruction failed (internal error)");
    return jd;
}

JordanData jordan_form_H(const MatrixH& x, const std::vector<Gaussian>& hints)
{
    x.require_square("jordan_form_H");
    const std::size_t n = x.rows();
    const MatrixC phi = phi_embed(x);

    std::vector<Gaussian> all_hints;
    for (const auto& h : hints) {
        all_hints.push_back(h);
        if (!h.is_real())
            all_hints.push_back(h.conj());
    }
    const auto roots = sorted_roots(split_over_gaussian_rationals(characteristic_polynomial(phi), all_hints));
    auto mult_of = [&](const Gaussian& z) {
        for (const auto& [r, m] : roots)
            if (r == z)
                return m;
        return std::size_t{0};
    };

    JordanData jd;
    jd.field = Field::H;
    jd.n = n;
    std::vector<Vec> columns;
    for (const auto& [lambda, mult] : roots) {
        if (sgn(lambda.im) < 0)
            continue;
        const MatrixC a = shifted(phi, lambda);
        if (lambda.is_real()) {
            if (mult % 2 != 0)
                throw DoublingViolation("real eigenvalue " + to_string(lambda) + " of Phi(X) has odd multiplicity");
            const ChainResult chains = build_chains(a, mult, true);
            jd.data.push_back({lambda, mult / 2, partition_from_counts(chains.counts, 2)});
            for (const auto& c : chains.chains)
                if (!c.partner)
                    for (auto& col : chain_columns(a, c))
                        columns.push_back(std::move(col));
        } else {
            if (mult_of(lambda.conj()) != mult)
                throw DoublingViolation("eigenvalue " + to_string(lambda) + " of Phi(X) is not paired with its conjugate");
            const ChainResult chains = build_chains(a, mult, false);
            if (block_counts(shifted(phi, lambda.conj()), mult) != chains.counts)
                throw DoublingViolation("conjugate eigenvalues of Phi(X) have different partitions");
            jd.data.push_back({lambda, mult, partition_from_counts(chains.counts, 1)});
            for (const auto& c : chains.chains)
                for (auto& col : chain_columns(a, c))
                    columns.push_back(std::move(col));
        }
    }
    if (columns.size() != n)
        throw DoublingViolation("quaternionic Jordan basis has " + std::to_string(columns.size()) +
                                " vectors, expected " + std::to_string(n));

    MatrixH p(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            p(i, j) = Quaternion::from_split(columns[j][i], -columns[j][i + n].conj());
    jd.base_change_h = inverse_H(p);
    if (jd.base_change_h * x * p != canonical_form_H(jd))
        throw Error("jordan_form_H: reconstruction failed (internal error)");
    return jd;
}

// ---------------------------------------------------------------------------

OrderedJordanBasis ordered_basis(const Partition& d)
{
    OrderedJordanBasis b;
    b.partition = d;
    const auto& parts = d.parts();

    // Chain numbers and standard-basis offsets per (part index, copy).
    std::vector<std::vector<std::size_t>> vector_no(parts.size());
    std::vector<std::vector<std::size_t>> offset(parts.size());
    std::size_t number = 1;
    std::size_t at = 0;
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (std::size_t i = 0; i < parts[k].multiplicity; ++i) {
            vector_no[k].push_back(number++);
            offset[k].push_back(at);
            at += parts[k].part;
        }

    for (std::size_t j = 1; j <= d.largest(); ++j)
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (parts[k].part < j)
                continue;
            const std::size_t l = parts[k].part - j;
            for (std::size_t i = 0; i < parts[k].multiplicity; ++i) {
                b.order.push_back({vector_no[k][i], k, i, l});
                b.standard_positions.push_back(offset[k][i] + parts[k].part - 1 - l);
            }
            b.group_sizes.push_back(parts[k].multiplicity);
        }
    return b;
}

MatrixC OrderedJordanBasis::permutation() const
{
    const std::size_t n = order.size();
    MatrixC p(n, n);
    for (std::size_t m = 0; m < n; ++m)
        p(standard_positions[m], m) = Gaussian(1);
    return p;
}

std::string OrderedJordanBasis::label(std::size_t m) const
{
    const auto& c = order.at(m);
    std::string s;
    if (c.power == 1)
        s = "X";
    else if (c.power > 1)
        s = "X^" + std::to_string(c.power);
    return s + "v" + std::to_string(c.vector);
}

} // namespace adreal
