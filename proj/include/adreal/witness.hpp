#pragma once

// Conjugating certificates g with g X g^{-1} = -X: exact verification and constructive builders.

#include "adreal/reality.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adreal {

struct CertificateFlags {
    bool conjugates_to_negative = false;
    bool involutive = false;
    bool special = false;

    friend bool operator==(const CertificateFlags&, const CertificateFlags&) = default;
};

/// Exactly one of g_c / g_h is meaningful, selected by `field`.
struct Certificate {
    Field field = Field::C;
    MatrixC g_c;
    MatrixH g_h;
    CertificateFlags flags;
    std::vector<std::string> transcript;
};

/// Exact checks of g X + X g = 0, g^2 = I and det g = 1. Throws SingularMatrix for singular g.
Certificate verify(const MatrixC& g, const MatrixC& x);
Certificate verify(const MatrixH& g, const MatrixH& x);

/// The diagonal involution (-1)^l on X^l v for parts in E and O^1, (-1)^{l+1} for parts in O^3,
/// written in the Jordan basis of N(d) (chains listed X^{L-1} v, ..., v). Its determinant is
/// (-1)^{sum of t_eta over eta = 2 mod 4}.
MatrixC sign_basis_involution(const Partition& d);

/// sign_basis_involution(d) with one full odd chain negated when needed to reach det = target_det
/// (+1 or -1). Empty when d has no odd part and the sign cannot be changed.
std::optional<MatrixC> nilpotent_involution(const Partition& d, int target_det);

/// Involutive special reverser of N(d). Throws NoWitness for d in the P~e class.
Certificate build_strong_witness_nilpotent_C(const Partition& d);

/// jd must be the Jordan data of x (as returned by jordan_form_*). These throw NoWitness with
/// the classifier's reason when the verdict is negative.
Certificate build_real_witness_C(const MatrixC& x, const JordanData& jd);
Certificate build_strong_witness_C(const MatrixC& x, const JordanData& jd);
Certificate build_real_witness_H(const MatrixH& x, const JordanData& jd);
Certificate build_strong_witness_H(const MatrixH& x, const JordanData& jd);

/// alpha g with det = 1. Over C alpha is an n-th root of 1/det g in Q(i); over H a positive
/// rational (2n)-th root of 1/det_H g. Throws RootNotRepresentable otherwise.
MatrixC scale_to_special(const MatrixC& g);
MatrixH scale_to_special(const MatrixH& g);

inline constexpr std::size_t kMonomialSearchBound = 8;

/// Exhaustive search over involutive monomial matrices (entries +-1 over C, unit quaternions
/// +-1, +-i, +-j, +-k over H) for a special reverser of x. Throws BoundExceeded for n > 8.
std::optional<Certificate> negative_search_oracle(const MatrixC& x);
std::optional<Certificate> negative_search_oracle(const MatrixH& x);

} // namespace adreal
