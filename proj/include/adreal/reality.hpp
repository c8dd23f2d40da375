#pragma once

// Decision procedures for Ad-reality and strong Ad-reality in sl(n, C) and sl(n, H).

#include "adreal/spectral.hpp"

#include <string>
#include <vector>

namespace adreal {

enum class Reason {
    PairingFailure,
    PartitionMismatch,
    ZeroPartitionObstruction,
    ModFourObstruction,
    OddImaginaryMultiplicity,
    AllConditionsMet,
};

std::string to_string(Reason r);
Reason parse_reason(std::string_view text);

struct Verdict {
    bool holds = false;
    Reason reason = Reason::AllConditionsMet;
};

struct ClassificationReport {
    Field field = Field::C;
    std::size_t n = 0;
    bool is_real = false;
    bool is_strongly_real = false;
    /// The strong verdict's reason when real, else the reality failure.
    Reason reason = Reason::AllConditionsMet;
    std::vector<SpectralDatum> spectrum;
};

/// Without gl_mode these throw NonZeroTrace outside sl(n, F).
Verdict is_real_C(const JordanData& jd, bool gl_mode = false);
Verdict is_real_H(const JordanData& jd, bool gl_mode = false);
/// A non-real input yields false with the reality failure as reason.
Verdict is_strongly_real_C(const JordanData& jd, bool gl_mode = false);
Verdict is_strongly_real_H(const JordanData& jd, bool gl_mode = false);

ClassificationReport classify(const JordanData& jd, bool gl_mode = false);

template <class M>
struct SemisimpleNilpotentSplit {
    M semisimple;
    M nilpotent;
};

/// X_s = g^{-1} D g with D the diagonal of the canonical form; X_n = X - X_s.
SemisimpleNilpotentSplit<MatrixC> split_semisimple_nilpotent(const MatrixC& x, const JordanData& jd);
SemisimpleNilpotentSplit<MatrixH> split_semisimple_nilpotent(const MatrixH& x, const JordanData& jd);

/// Eigenvalue multiplicities of a semisimple spectrum, in canonical order.
/// Throws std::invalid_argument when some partition is not [1^m].
std::vector<std::size_t> centralizer_block_structure(const JordanData& jd);

/// Block layout of the arrangement O_{p_o} (+) (+)lambda_i I (+) (+)(-lambda_i) I of a paired semisimple spectrum.
struct PairedArrangement {
    std::size_t zero_size = 0;
    std::vector<Gaussian> lambdas; // the member of each pair with -lambda lexicographically smaller
    std::vector<std::size_t> sizes;

    std::size_t n() const;
    MatrixC semisimple_form() const;
};

/// Throws std::invalid_argument unless jd is semisimple over C with every nonzero eigenvalue paired with its negative.
PairedArrangement paired_arrangement(const JordanData& jd);

enum class ShapeStatus { Conforms, ShapeViolation, NotAReverser, NotSpecial };
std::string to_string(ShapeStatus s);

struct ShapeCheck {
    bool conforms = false;
    ShapeStatus status = ShapeStatus::ShapeViolation;
};

/// Checks sigma = alpha (+) [[0, (+)f_i], [(+)g_i, 0]] with invertible blocks, relative to
/// arrangement.semisimple_form(). Failed preconditions (sigma not special, not a reverser) are
/// reported through `status`; nothing is thrown for them.
ShapeCheck reverser_shape_check(const MatrixC& sigma, const PairedArrangement& arrangement);

} // namespace adreal
