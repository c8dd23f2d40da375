#pragma once

// Document-level operations shared by the command line tool and the Python module.

#include "adreal/io.hpp"

#include <optional>
#include <vector>

namespace adreal::jobs {

struct Options {
    std::optional<Field> field; // overrides the document's field
    std::vector<Gaussian> hints;
    bool gl_mode = false;
    bool strong = false;
};

struct LoadedInput {
    Field field = Field::C;
    MatrixC x_c;
    MatrixH x_h;
    JordanData jd;
    io::Json x_doc;
};

/// Accepts a matrix document or a spectral document; the spectral data wins when both are present.
LoadedInput load_input(const io::Json& doc, const Options& opts);

io::Json classify(const io::Json& doc, const Options& opts);

/// Certificate document. Throws NoWitness on a negative verdict.
io::Json witness(const io::Json& doc, const Options& opts);

struct VerifyOutcome {
    CertificateFlags flags;
    /// Every flag claimed true in the input verified; with no claims, conjugation must hold.
    bool claims_hold = false;
    io::Json document;
};

/// Input {"X": matrix, "g": matrix, "flags": {...} (optional claims)}.
VerifyOutcome verify(const io::Json& doc);

} // namespace adreal::jobs
