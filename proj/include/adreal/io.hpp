#pragma once

// JSON documents: matrices, spectral specifications, reports and certificates.

#include "adreal/witness.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace adreal::io {

using Json = nlohmann::ordered_json;

/// {"field", "n", "entries": [[str]]}
Json matrix_to_json(const MatrixC& m);
Json matrix_to_json(const MatrixH& m);

MatrixC parse_matrix_C(const Json& doc);
MatrixH parse_matrix_H(const Json& doc);

/// Field named by a document, or `fallback` when the key is absent.
Field document_field(const Json& doc, Field fallback);

/// Partition from [[d, t], ...]; pairs may come in any order, repeated parts are merged.
Partition parse_partition(const Json& pairs);
Json partition_to_json(const Partition& p);

/// {"field", "data": [{"lambda", "partition"}]} -> canonicalized Jordan data with identity base change.
JordanData parse_spectral_document(const Json& doc, Field field);

Json spectrum_to_json(const std::vector<SpectralDatum>& data);
Json report_to_json(const ClassificationReport& r);
/// {"X", "g", "flags", "transcript"}
Json certificate_to_json(const Certificate& c, const Json& x_doc);
Json flags_to_json(const CertificateFlags& f);

std::vector<Gaussian> parse_hints(const std::string& comma_separated);

/// Parses text as JSON, rethrowing syntax errors as ParseError.
Json parse_json(const std::string& text);

} // namespace adreal::io
