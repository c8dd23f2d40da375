#include "helpers.hpp"

#include <doctest.h>

using namespace adreal;
using helpers::datum;
using helpers::mc;
using helpers::mh;
using helpers::part;

TEST_CASE("jordan blocks and assemblies")
{
    CHECK(jordan_block(2, Gaussian(0)) == mc({{"0", "1"}, {"0", "0"}}));
    CHECK(jordan_block(1, parse_gaussian("3-i")) == mc({{"3-i"}}));
    const MatrixC n = nilpotent_assembly(part({4, 2, 2}));
    CHECK(n == block_diag({jordan_block(4, Gaussian(0)), jordan_block(2, Gaussian(0)), jordan_block(2, Gaussian(0))}));
    CHECK(jordan_assembly(part({2, 1}), Gaussian(2)) ==
          mc({{"2", "1", "0"}, {"0", "2", "0"}, {"0", "0", "2"}}));
}

TEST_CASE("rank of powers of a nilpotent assembly")
{
    for (std::size_t total = 1; total <= 8; ++total)
        for (const auto& d : enumerate_partitions(total)) {
            const MatrixC n = nilpotent_assembly(d);
            for (unsigned k = 0; k <= d.largest(); ++k) {
                std::size_t expected = 0;
                for (auto p : d.flatten())
                    expected += p > k ? p - k : 0;
                CHECK(exact_rank(power(n, k)) == expected);
            }
        }
}

TEST_CASE("characteristic polynomial and splitting")
{
    const auto c = characteristic_polynomial(mc({{"0", "1"}, {"-1", "0"}}));
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Gaussian(1));
    CHECK(c[1] == Gaussian(0));
    CHECK(c[2] == Gaussian(1));
    const auto roots = split_over_gaussian_rationals(c, {});
    REQUIRE(roots.size() == 2);
    // x^3 - x^2/2: roots 0 (double) and 1/2
    const auto r2 = split_over_gaussian_rationals({Gaussian(0), Gaussian(0), parse_gaussian("-1/2"), Gaussian(1)}, {});
    REQUIRE(r2.size() == 2);
    CHECK_THROWS_AS(split_over_gaussian_rationals({Gaussian(-2), Gaussian(0), Gaussian(1)}, {}), NonSplittingSpectrum);
    CHECK_THROWS_AS(split_over_gaussian_rationals({Gaussian(1), Gaussian(0), Gaussian(1)}, {Gaussian(1)}), DefectiveHint);
    CHECK_THROWS_AS(split_over_gaussian_rationals({Gaussian(1), Gaussian(2)}, {}), std::invalid_argument);
}

TEST_CASE("jordan_form_C examples")
{
    const JordanData a = jordan_form_C(mc({{"1", "0"}, {"0", "-1"}}));
    REQUIRE(a.data.size() == 2);
    CHECK(a.data[0] == datum("-1", {1}));
    CHECK(a.data[1] == datum("1", {1}));

    const JordanData b = jordan_form_C(nilpotent_assembly(part({4, 2, 2})));
    REQUIRE(b.data.size() == 1);
    CHECK(b.data[0] == datum("0", {4, 2, 2}));
    CHECK(b.n == 8);

    const JordanData c = jordan_form_C(mc({{"0", "1"}, {"-1", "0"}}), {Gaussian::unit_i(), -Gaussian::unit_i()});
    REQUIRE(c.data.size() == 2);
    CHECK(c.data[0] == datum("-i", {1}));
    CHECK(c.data[1] == datum("i", {1}));

    CHECK_THROWS_AS(jordan_form_C(mc({{"0", "1"}, {"2", "0"}})), NonSplittingSpectrum);
    CHECK_THROWS_AS(jordan_form_C(mc({{"0", "1"}, {"-1", "0"}}), {Gaussian(3)}), DefectiveHint);
    CHECK_THROWS_AS(jordan_form_C(MatrixC(2, 3)), DimensionMismatch);
}

TEST_CASE("jordan_form_C reconstructs after random conjugation")
{
    oracle::Random rng(31);
    const JordanData spec = jordan_data_from_spec(
        Field::C, {datum("0", {2, 1}), datum("1+i", {2}), datum("-1-i", {1, 1}), datum("1/2", {1})});
    const MatrixC canon = canonical_form_C(spec);
    for (int t = 0; t < 5; ++t) {
        const MatrixC p = rng.invertible_C(spec.n);
        const MatrixC x = inverse_C(p) * canon * p;
        const JordanData jd = jordan_form_C(x);
        CHECK(jd.same_spectrum(spec));
        CHECK(jd.base_change_c * x * inverse_C(jd.base_change_c) == canon);
    }
}

TEST_CASE("jordan_form_H examples")
{
    const JordanData a = jordan_form_H(mh({{"i"}}));
    REQUIRE(a.data.size() == 1);
    CHECK(a.data[0] == datum("i", {1}));

    const JordanData b = jordan_form_H(mh({{"i", "1"}, {"0", "i"}}));
    REQUIRE(b.data.size() == 1);
    CHECK(b.data[0] == datum("i", {2}));

    const JordanData c = jordan_form_H(MatrixH::identity(1));
    REQUIRE(c.data.size() == 1);
    CHECK(c.data[0] == datum("1", {1}));

    // -i is in the class of i
    const JordanData d = jordan_form_H(mh({{"-i"}}));
    CHECK(d.data[0].lambda == Gaussian::unit_i());

    const JordanData e = jordan_form_H(mh({{"j"}}));
    CHECK(e.data[0] == datum("i", {1}));
}

TEST_CASE("jordan_form_H reconstructs after random conjugation")
{
    oracle::Random rng(32);
    const JordanData spec = jordan_data_from_spec(Field::H, {datum("i", {2}), datum("1", {1}), datum("-1+i", {1})});
    const MatrixH canon = canonical_form_H(spec);
    for (int t = 0; t < 5; ++t) {
        const MatrixH p = rng.invertible_H(spec.n);
        const MatrixH x = inverse_H(p) * canon * p;
        const JordanData jd = jordan_form_H(x);
        CHECK(jd.same_spectrum(spec));
        CHECK(jd.base_change_h * x * inverse_H(jd.base_change_h) == canon);
    }
}

TEST_CASE("spectral specifications are canonicalized")
{
    const JordanData jd = jordan_data_from_spec(Field::H, {datum("1-i", {1}), datum("-i", {2})});
    REQUIRE(jd.data.size() == 2);
    CHECK(jd.data[0].lambda == Gaussian::unit_i());
    CHECK(jd.data[1].lambda == parse_gaussian("1+i"));
    CHECK(jd.n == 3);
    CHECK_THROWS_AS(jordan_data_from_spec(Field::H, {datum("i", {1}), datum("-i", {1})}), std::invalid_argument);
    CHECK_THROWS_AS(jordan_data_from_spec(Field::C, {{Gaussian(0), 0, Partition{}}}), std::invalid_argument);
    CHECK(parse_field("H") == Field::H);
    CHECK_THROWS_AS(parse_field("R"), ParseError);
}

TEST_CASE("ordered basis of [4,2^2]")
{
    const OrderedJordanBasis b = ordered_basis(part({4, 2, 2}));
    std::vector<std::string> labels;
    for (std::size_t m = 0; m < b.order.size(); ++m)
        labels.push_back(b.label(m));
    CHECK(labels == std::vector<std::string>{"X^3v1", "Xv2", "Xv3", "X^2v1", "v2", "v3", "Xv1", "v1"});
    CHECK(b.group_sizes == std::vector<std::size_t>{1, 2, 1, 2, 1, 1});
}

TEST_CASE("ordered basis of small partitions")
{
    const OrderedJordanBasis one = ordered_basis(part({1}));
    REQUIRE(one.order.size() == 1);
    CHECK(one.label(0) == "v1");
    CHECK(one.permutation() == MatrixC::identity(1));

    const OrderedJordanBasis b = ordered_basis(part({2, 1}));
    std::vector<std::string> labels;
    for (std::size_t m = 0; m < b.order.size(); ++m)
        labels.push_back(b.label(m));
    CHECK(labels == std::vector<std::string>{"Xv1", "v2", "v1"});
}

TEST_CASE("reversers are block triangular in the ordered basis")
{
    for (std::size_t total = 1; total <= 6; ++total)
        for (const auto& d : enumerate_partitions(total)) {
            const OrderedJordanBasis b = ordered_basis(d);
            const MatrixC p = b.permutation();
            const MatrixC x = nilpotent_assembly(d);
            // X in the ordered basis maps level j to level j-1
            std::vector<std::size_t> level;
            for (const auto& c : b.order)
                level.push_back(d.parts()[c.part_index].part - c.power);
            for (const auto& g : oracle::anticommutant_basis(x)) {
                const MatrixC h = p.transpose() * g * p;
                for (std::size_t r = 0; r < total; ++r)
                    for (std::size_t c = 0; c < total; ++c)
                        if (level[r] > level[c])
                            CHECK(h(r, c).is_zero());
            }
        }
}
