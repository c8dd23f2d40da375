// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "../oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace adreal;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        if (ok)
            return;
        pass = false;
        if (failures.size() < 10)
            failures.push_back(what);
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

MatrixC diag_C(std::initializer_list<const char*> entries)
{
    MatrixC m(entries.size(), entries.size());
    std::size_t i = 0;
    for (const char* e : entries)
        m(i, i++) = parse_gaussian(e);
    return m;
}

MatrixH quaternionic(std::initializer_list<std::initializer_list<const char*>> rows)
{
    MatrixH m(rows.size(), rows.size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const char* e : r)
            m(i, j++) = parse_quaternion(e);
        ++i;
    }
    return m;
}

const CertificateFlags kAll{true, true, true};

// ---------------------------------------------------------------------------

Outcome phi_homomorphism()
{
    Outcome out;
    const auto start = Clock::now();
    oracle::Random rng(1001);
    std::size_t pairs = 0;
    for (; pairs < 1000; ++pairs) {
        const std::size_t n = 1 + pairs % 5;
        const MatrixH a = rng.matrix_H(n);
        const MatrixH b = rng.matrix_H(n);
        const std::string tag = "pair " + std::to_string(pairs) + " (" + std::to_string(n) + "x" + std::to_string(n) + ")";
        out.expect(phi_embed(a * b) == phi_embed(a) * phi_embed(b), tag + ": product");
        out.expect(phi_embed(a + b) == phi_embed(a) + phi_embed(b), tag + ": sum");
        out.expect(sgn(det_H(a)) >= 0 && sgn(det_H(b)) >= 0, tag + ": det_H sign");
    }
    const double t = seconds_since(start);
    out.expect(t < 10.0, "took " + std::to_string(t) + " s");
    std::ostringstream os;
    os << pairs << " pairs up to 5x5, " << t << " s";
    out.detail = os.str();
    return out;
}

struct Instance {
    oracle::LatticeCase spec;
    MatrixC x_c;
    MatrixH x_h;
    JordanData jd;
};

std::vector<Instance> conjugated_lattice(const std::vector<oracle::LatticeCase>& cases, std::uint64_t seed)
{
    oracle::Random rng(seed);
    std::vector<Instance> out;
    for (const auto& c : cases) {
        Instance inst;
        inst.spec = c;
        const JordanData spec = jordan_data_from_spec(c.field, c.data);
        if (c.field == Field::C) {
            const MatrixC p = rng.invertible_C(spec.n);
            inst.x_c = inverse_C(p) * canonical_form_C(spec) * p;
        } else {
            const MatrixH p = rng.invertible_H(spec.n);
            inst.x_h = inverse_H(p) * canonical_form_H(spec) * p;
        }
        out.push_back(std::move(inst));
    }
    return out;
}

Outcome jordan_round_trip(std::vector<Instance>& lattice)
{
    Outcome out;
    const auto start = Clock::now();
    std::size_t c_count = 0;
    std::size_t h_count = 0;
    for (auto& inst : lattice) {
        const JordanData spec = jordan_data_from_spec(inst.spec.field, inst.spec.data);
        try {
            if (inst.spec.field == Field::C) {
                ++c_count;
                inst.jd = jordan_form_C(inst.x_c);
                out.expect(inst.jd.same_spectrum(spec), inst.spec.label + ": data differ");
                out.expect(inst.jd.base_change_c * inst.x_c * inverse_C(inst.jd.base_change_c) == canonical_form_C(spec),
                           inst.spec.label + ": reconstruction");
            } else {
                ++h_count;
                inst.jd = jordan_form_H(inst.x_h);
                out.expect(inst.jd.same_spectrum(spec), inst.spec.label + ": data differ");
                out.expect(inst.jd.base_change_h * inst.x_h * inverse_H(inst.jd.base_change_h) == canonical_form_H(spec),
                           inst.spec.label + ": reconstruction");
            }
        } catch (const std::exception& e) {
            out.expect(false, inst.spec.label + ": " + e.what());
        }
    }
    const double t = seconds_since(start);
    out.expect(t < 60.0, "took " + std::to_string(t) + " s");
    std::ostringstream os;
    os << c_count << " spectra over C (n <= 6), " << h_count << " over H (n <= 4), " << t << " s";
    out.detail = os.str();
    return out;
}

template <class Build>
void check_builder(Outcome& out, const std::string& label, bool verdict, Build build,
                   const std::function<Certificate(const Certificate&)>& reverify, bool strong)
{
    try {
        const Certificate c = build();
        out.expect(verdict, label + ": builder succeeded on a negative verdict");
        const Certificate v = reverify(c);
        out.expect(v.flags == c.flags, label + ": claimed flags differ from verify");
        out.expect(c.flags.conjugates_to_negative && c.flags.special, label + ": not a special reverser");
        if (strong)
            out.expect(c.flags.involutive, label + ": strong certificate not involutive");
    } catch (const NoWitness&) {
        out.expect(!verdict, label + ": builder refused a positive verdict");
    }
}

Outcome builder_completeness(const std::vector<Instance>& lattice)
{
    Outcome out;
    std::size_t certificates = 0;
    std::size_t searched = 0;
    for (const auto& inst : lattice) {
        const std::string& label = inst.spec.label;
        if (inst.jd.data.empty()) {
            out.expect(false, label + ": no Jordan data (round trip failed)");
            continue;
        }
        try {
            const ClassificationReport r = classify(inst.jd);
            if (inst.spec.field == Field::C) {
                auto reverify = [&](const Certificate& c) { return verify(c.g_c, inst.x_c); };
                check_builder(out, label + " real", r.is_real, [&] { return build_real_witness_C(inst.x_c, inst.jd); },
                              reverify, false);
                check_builder(out, label + " strong", r.is_strongly_real,
                              [&] { return build_strong_witness_C(inst.x_c, inst.jd); }, reverify, true);
                const auto found = negative_search_oracle(canonical_form_C(inst.jd));
                out.expect(found.has_value() == r.is_strongly_real, label + ": monomial search disagrees");
            } else {
                auto reverify = [&](const Certificate& c) { return verify(c.g_h, inst.x_h); };
                check_builder(out, label + " real", r.is_real, [&] { return build_real_witness_H(inst.x_h, inst.jd); },
                              reverify, false);
                check_builder(out, label + " strong", r.is_strongly_real,
                              [&] { return build_strong_witness_H(inst.x_h, inst.jd); }, reverify, true);
                const auto found = negative_search_oracle(canonical_form_H(inst.jd));
                out.expect(found.has_value() == r.is_strongly_real, label + ": monomial search disagrees");
            }
            certificates += r.is_real + r.is_strongly_real;
            ++searched;
        } catch (const std::exception& e) {
            out.expect(false, label + ": " + e.what());
        }
    }
    std::ostringstream os;
    os << lattice.size() << " spectra, " << certificates << " certificates verified, " << searched
       << " monomial searches agree";
    out.detail = os.str();
    return out;
}

Outcome exemplars()
{
    Outcome out;
    try {
        // (a) the 2x2 quaternionic example
        const MatrixH x = quaternionic({{"i", "1"}, {"0", "i"}});
        const JordanData jd = jordan_form_H(x);
        const ClassificationReport r = classify(jd);
        out.expect(r.is_real && !r.is_strongly_real && r.reason == Reason::OddImaginaryMultiplicity,
                   "(a) verdict " + to_string(r.reason));
        const auto split = split_semisimple_nilpotent(x, jd);
        out.expect(split.semisimple == quaternionic({{"i", "0"}, {"0", "i"}}), "(a) semisimple part");
        out.expect(split.nilpotent == quaternionic({{"0", "1"}, {"0", "0"}}), "(a) nilpotent part");
        const MatrixH sigma = quaternionic({{"0", "j"}, {"-j", "0"}});
        const MatrixH tau = quaternionic({{"1", "0"}, {"0", "-1"}});
        out.expect(verify(sigma, split.semisimple).flags == kAll, "(a) sigma on X_s");
        out.expect(verify(tau, split.nilpotent).flags == kAll, "(a) tau on X_n");
        const Certificate real = build_real_witness_H(x, jd);
        out.expect(real.flags.conjugates_to_negative && real.flags.special, "(a) real witness");
        bool refused = false;
        try {
            build_strong_witness_H(x, jd);
        } catch (const NoWitness&) {
            refused = true;
        }
        out.expect(refused, "(a) strong builder accepted");

        // (b) J(n, a i) (+) J(n, a i) and (c) J(n, a i) alone
        for (std::size_t n = 1; n <= 5; ++n)
            for (long a : {1L, 2L}) {
                const Gaussian lambda(Rational(0), Rational(a));
                const MatrixC block = jordan_block(n, lambda);
                const std::string tag = "n=" + std::to_string(n) + " a=" + std::to_string(a);

                const MatrixH doubled = to_quaternionic(block_diag({block, block}));
                const JordanData jd2 = jordan_form_H(doubled);
                out.expect(classify(jd2).is_strongly_real, "(b) " + tag + " verdict");
                const Certificate c = build_strong_witness_H(doubled, jd2);
                out.expect(c.flags == kAll && verify(c.g_h, doubled).flags == kAll, "(b) " + tag + " certificate");

                const MatrixH single = to_quaternionic(block);
                const JordanData jd1 = jordan_form_H(single);
                out.expect(classify(jd1).is_real && !classify(jd1).is_strongly_real, "(c) " + tag + " verdict");
                bool no_witness = false;
                try {
                    build_strong_witness_H(single, jd1);
                } catch (const NoWitness&) {
                    no_witness = true;
                }
                out.expect(no_witness, "(c) " + tag + " builder accepted");
                if (n <= 4)
                    out.expect(!negative_search_oracle(single).has_value(), "(c) " + tag + " monomial search found one");
            }

        // (d) nilpotent [2]
        const Partition two = Partition::from_parts({2});
        bool refused_c = false;
        try {
            build_strong_witness_nilpotent_C(two);
        } catch (const NoWitness& e) {
            refused_c = e.reason() == "ZeroPartitionObstruction";
        }
        out.expect(refused_c, "(d) [2] over C not refused");
        const MatrixH n2 = to_quaternionic(nilpotent_assembly(two));
        const JordanData jn = jordan_form_H(n2);
        out.expect(classify(jn).is_strongly_real, "(d) [2] over H verdict");
        out.expect(build_strong_witness_H(n2, jn).flags == kAll, "(d) [2] over H certificate");
    } catch (const std::exception& e) {
        out.expect(false, std::string("exception: ") + e.what());
    }
    out.detail = "2x2 example, doubled and single J(n, a i) for n <= 5, a in {1, 2}, nilpotent [2]";
    return out;
}

Outcome census_against_enumerator()
{
    Outcome out;
    const auto start = Clock::now();
    std::istringstream csv(atlas_csv(30));
    std::string line;
    std::getline(csv, line);
    out.expect(line == "n,total,even,very_even,p_tilde_e,strong_nilpotent_C,strong_nilpotent_H", "header " + line);
    std::vector<std::size_t> tilde(31, 0);
    std::size_t rows = 0;
    while (std::getline(csv, line)) {
        std::size_t n, total, even, very, pte, sc, sh;
        if (std::sscanf(line.c_str(), "%zu,%zu,%zu,%zu,%zu,%zu,%zu", &n, &total, &even, &very, &pte, &sc, &sh) != 7) {
            out.expect(false, "unparsable row " + line);
            continue;
        }
        ++rows;
        std::size_t e_total = 0, e_even = 0, e_very = 0, e_pte = 0;
        for (const auto& p : oracle::flat_partitions(n)) {
            ++e_total;
            e_even += oracle::flat_is_even(p);
            e_very += oracle::flat_is_very_even(p);
            e_pte += oracle::flat_in_p_tilde_e(p);
        }
        const std::string tag = "n=" + std::to_string(n);
        out.expect(total == e_total && total == oracle::partition_count(n), tag + " total");
        out.expect(even == e_even, tag + " even");
        out.expect(very == e_very, tag + " very even");
        out.expect(pte == e_pte, tag + " p_tilde_e");
        out.expect(sc == e_total - e_pte && sh == e_total, tag + " strong counts");
        if (n % 4 != 2)
            out.expect(pte == 0, tag + " p_tilde_e should vanish");
        if (n <= 30)
            tilde[n] = pte;
    }
    out.expect(rows == 30, "row count " + std::to_string(rows));
    out.expect(tilde[2] == 1 && tilde[4] == 0 && tilde[6] == 3, "small p_tilde_e values");
    const double t = seconds_since(start);
    out.expect(t < 5.0, "took " + std::to_string(t) + " s");
    std::ostringstream os;
    os << rows << " rows, P~e(2,4,6) = " << tilde[2] << "," << tilde[4] << "," << tilde[6] << ", " << t << " s";
    out.detail = os.str();
    return out;
}

Outcome determinant_law()
{
    Outcome out;
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 12; ++n)
        for (const auto& flat : oracle::flat_partitions(n)) {
            std::size_t t = 0;
            for (auto p : flat)
                t += p % 4 == 2;
            const Partition d = Partition::from_parts(flat);
            const MatrixC g = sign_basis_involution(d);
            const MatrixC x = nilpotent_assembly(d);
            const std::string tag = d.to_string();
            out.expect(det_C(g) == Gaussian(t % 2 == 0 ? 1 : -1), tag + " determinant");
            out.expect(g * x + x * g == MatrixC(n, n), tag + " not a reverser");
            out.expect(g * g == MatrixC::identity(n), tag + " not involutive");
            ++count;
        }
    out.detail = std::to_string(count) + " partitions of n <= 12";
    return out;
}

Outcome transfer(const std::vector<Instance>& lattice)
{
    Outcome out;
    std::size_t positives = 0;
    for (const auto& inst : lattice) {
        if (inst.spec.field != Field::H || inst.jd.data.empty())
            continue;
        try {
            const ClassificationReport h = classify(inst.jd);
            const ClassificationReport c = classify(jordan_form_C(phi_embed(inst.x_h)));
            if (h.is_real) {
                out.expect(c.is_real, inst.spec.label + ": real over H, not over C");
                ++positives;
            }
            if (h.is_strongly_real) {
                out.expect(c.is_strongly_real, inst.spec.label + ": strongly real over H, not over C");
                ++positives;
            }
        } catch (const std::exception& e) {
            out.expect(false, inst.spec.label + ": " + e.what());
        }
    }
    try {
        const MatrixH x = quaternionic({{"i", "1"}, {"0", "i"}});
        const MatrixC phi = phi_embed(x);
        const JordanData jc = jordan_form_C(phi);
        out.expect(!classify(jordan_form_H(x)).is_strongly_real, "2x2 example strongly real over H");
        out.expect(classify(jc).is_strongly_real, "Phi of the 2x2 example not strongly real over C");
        out.expect(build_strong_witness_C(phi, jc).flags == kAll, "Phi of the 2x2 example certificate");
    } catch (const std::exception& e) {
        out.expect(false, std::string("2x2 example: ") + e.what());
    }
    out.detail = std::to_string(positives) + " positive H verdicts carried to C; converse fails on the 2x2 example";
    return out;
}

} // namespace

int main()
{
    auto cases = oracle::lattice_C(6);
    const auto cases_h = oracle::lattice_H(4);
    cases.insert(cases.end(), cases_h.begin(), cases_h.end());
    auto lattice = conjugated_lattice(cases, 2002);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Phi homomorphism and det_H >= 0", phi_homomorphism},
        {"Jordan round trip on the lattice", [&] { return jordan_round_trip(lattice); }},
        {"builder succeeds iff classifier says yes", [&] { return builder_completeness(lattice); }},
        {"worked exemplars", exemplars},
        {"partition census against brute force", census_against_enumerator},
        {"sign-basis involution determinant law", determinant_law},
        {"one-way transfer from H to C", [&] { return transfer(lattice); }},
    };

    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.expect(false, std::string("uncaught: ") + e.what());
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first << " ("
                  << o.detail << ")\n";
        for (const auto& f : o.failures)
            std::cout << "    " << f << "\n";
    }
    return all ? 0 : 1;
}
