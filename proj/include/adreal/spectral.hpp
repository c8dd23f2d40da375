#pragma once

// Jordan structure over C and H with exact base changes.

#include "adreal/linalg.hpp"
#include "adreal/partitions.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adreal {

enum class Field { C, H };

std::string to_string(Field f);
Field parse_field(std::string_view text);

/// Similarity-class representative. Over H it is the complex member with Im >= 0.
struct EigenvalueClass {
    Gaussian representative;
    Field field = Field::C;

    /// Canonicalizes the representative for the field (conjugates when Im < 0 over H).
    static EigenvalueClass of(const Gaussian& lambda, Field field);

    /// The class of -lambda.
    EigenvalueClass negated() const { return of(-representative, field); }

    friend bool operator==(const EigenvalueClass&, const EigenvalueClass&) = default;
};

struct SpectralDatum {
    Gaussian lambda;
    std::size_t multiplicity = 0;
    Partition partition;

    friend bool operator==(const SpectralDatum&, const SpectralDatum&) = default;
};

/// Jordan data of X. Over C, `base_change_c` satisfies g X g^{-1} = canonical form;
/// over H the same holds for `base_change_h`. Only the field's member is populated.
struct JordanData {
    Field field = Field::C;
    std::size_t n = 0;
    std::vector<SpectralDatum> data;
    MatrixC base_change_c;
    MatrixH base_change_h;

    const SpectralDatum* find(const Gaussian& lambda) const;
    /// Data only, ignoring the base change.
    bool same_spectrum(const JordanData& other) const { return field == other.field && n == other.n && data == other.data; }
};

MatrixC jordan_block(std::size_t m, const Gaussian& lambda);
/// J(d, lambda) = lambda I + N(d): blocks largest part first, each repeated by its multiplicity.
MatrixC jordan_assembly(const Partition& d, const Gaussian& lambda);
/// N(d, 0).
MatrixC nilpotent_assembly(const Partition& d);

/// Sorts data into canonical order: classes by (Re, Im) of the representative.
void sort_spectrum(std::vector<SpectralDatum>& data);

/// Jordan data built straight from a spectral specification: canonicalized, identity base change.
JordanData jordan_data_from_spec(Field field, std::vector<SpectralDatum> data);

/// The canonical Jordan form as a complex matrix (only meaningful over C).
MatrixC canonical_form_C(const JordanData& jd);
/// The canonical Jordan form as a quaternionic matrix with complex entries.
MatrixH canonical_form_H(const JordanData& jd);

/// Coefficients c_0..c_n of det(x I - A), c_n = 1.
std::vector<Gaussian> characteristic_polynomial(const MatrixC& a);

/// Roots of a monic polynomial with multiplicities, all in Q(i). Hints are tried first.
/// Throws DefectiveHint for a hint that is not a root, NonSplittingSpectrum when roots remain unfound.
std::vector<std::pair<Gaussian, std::size_t>> split_over_gaussian_rationals(std::vector<Gaussian> coeffs,
                                                                           const std::vector<Gaussian>& hints);

JordanData jordan_form_C(const MatrixC& x, const std::vector<Gaussian>& hints = {});
JordanData jordan_form_H(const MatrixH& x, const std::vector<Gaussian>& hints = {});

/// Generalized eigenvector index: chain number, part index into Partition::parts(), copy, power of X.
struct ChainIndex {
    std::size_t vector = 0; // 1-based global chain number v_1, v_2, ...
    std::size_t part_index = 0;
    std::size_t copy = 0;
    std::size_t power = 0;

    friend bool operator==(const ChainIndex&, const ChainIndex&) = default;
};

/// The ordering B = B(1) v ... v B(d_1) with B(j) = B^{d_1-j}(d_1) v ... v B^{d_s-j}(d_s).
struct OrderedJordanBasis {
    Partition partition;
    std::vector<ChainIndex> order;
    /// Sizes of the successive groups B^{d_k - j}(d_k); each equals some t_{d_k}.
    std::vector<std::size_t> group_sizes;
    /// Position of order[m] in the standard Jordan basis of N(d) (chains listed as X^{L-1}v, ..., v).
    std::vector<std::size_t> standard_positions;

    /// Columns e_{standard_positions[m]}; the matrix of g in B is P^T g P.
    MatrixC permutation() const;
    std::string label(std::size_t m) const;
};

OrderedJordanBasis ordered_basis(const Partition& d);

} // namespace adreal
