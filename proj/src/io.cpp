#include "adreal/io.hpp"

#include <map>
#include <sstream>

namespace adreal::io {

namespace {

template <class T>
Json entries_to_json(const Matrix<T>& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string entry_text(const Json& e)
{
    if (e.is_string())
        return e.get<std::string>();
    if (e.is_number_integer())
        return std::to_string(e.get<long long>());
    throw ParseError("matrix entries must be strings or integers");
}

template <class T, class Parse>
Matrix<T> parse_entries(const Json& doc, Parse parse)
{
    if (!doc.is_object() || !doc.contains("entries"))
        throw ParseError("matrix document needs an \"entries\" array");
    const Json& rows = doc.at("entries");
    if (!rows.is_array() || rows.empty())
        throw ParseError("\"entries\" must be a non-empty array of rows");
    const std::size_t n = rows.size();
    if (doc.contains("n") && doc.at("n") != Json(n))
        throw ParseError("\"n\" does not match the number of rows");
    Matrix<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw ParseError("matrix must be square: row " + std::to_string(i) + " has the wrong length");
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = parse(entry_text(rows[i][j]));
    }
    return m;
}

} // namespace

Json matrix_to_json(const MatrixC& m)
{
    Json doc;
    doc["field"] = "C";
    doc["n"] = m.rows();
    doc["entries"] = entries_to_json(m);
    return doc;
}

Json matrix_to_json(const MatrixH& m)
{
    Json doc;
    doc["field"] = "H";
    doc["n"] = m.rows();
    doc["entries"] = entries_to_json(m);
    return doc;
}

MatrixC parse_matrix_C(const Json& doc)
{
    return parse_entries<Gaussian>(doc, [](const std::string& s) { return parse_gaussian(s); });
}

MatrixH parse_matrix_H(const Json& doc)
{
    return parse_entries<Quaternion>(doc, [](const std::string& s) { return parse_quaternion(s); });
}

Field document_field(const Json& doc, Field fallback)
{
    if (!doc.is_object() || !doc.contains("field"))
        return fallback;
    if (!doc.at("field").is_string())
        throw ParseError("\"field\" must be \"C\" or \"H\"");
    return parse_field(doc.at("field").get<std::string>());
}

Partition parse_partition(const Json& pairs)
{
    if (!pairs.is_array() || pairs.empty())
        throw ParseError("partition must be a non-empty array of [part, multiplicity] pairs");
    std::map<std::size_t, std::size_t, std::greater<>> counts;
    for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
            throw ParseError("partition entries must be [part, multiplicity] with positive integers");
        const auto part = p[0].get<std::size_t>();
        const auto mult = p[1].get<std::size_t>();
        if (part == 0 || mult == 0)
            throw ParseError("partition parts and multiplicities must be positive");
        counts[part] += mult;
    }
    std::vector<PartWithMultiplicity> parts;
    for (const auto& [part, mult] : counts)
        parts.push_back({part, mult});
    return Partition(std::move(parts));
}

Json partition_to_json(const Partition& p)
{
    Json out = Json::array();
    for (const auto& pm : p.parts())
        out.push_back(Json::array({pm.part, pm.multiplicity}));
    return out;
}

JordanData parse_spectral_document(const Json& doc, Field field)
{
    if (!doc.is_object() || !doc.contains("data") || !doc.at("data").is_array() || doc.at("data").empty())
        throw ParseError("spectral document needs a non-empty \"data\" array");
    std::vector<SpectralDatum> data;
    for (const auto& d : doc.at("data")) {
        if (!d.is_object() || !d.contains("lambda") || !d.contains("partition"))
            throw ParseError("spectral data entries need \"lambda\" and \"partition\"");
        SpectralDatum s;
        s.lambda = parse_gaussian(entry_text(d.at("lambda")));
        s.partition = parse_partition(d.at("partition"));
        if (d.contains("multiplicity") && d.at("multiplicity") != Json(s.partition.total()))
            throw ParseError("\"multiplicity\" does not match the partition of " + to_string(s.lambda));
        data.push_back(std::move(s));
    }
    try {
        return jordan_data_from_spec(field, std::move(data));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Json spectrum_to_json(const std::vector<SpectralDatum>& data)
{
    Json out = Json::array();
    for (const auto& d : data) {
        Json e;
        e["lambda"] = to_string(d.lambda);
        e["multiplicity"] = d.multiplicity;
        e["partition"] = partition_to_json(d.partition);
        out.push_back(std::move(e));
    }
    return out;
}

Json report_to_json(const ClassificationReport& r)
{
    Json doc;
    doc["field"] = to_string(r.field);
    doc["n"] = r.n;
    doc["real"] = r.is_real;
    doc["stronglyReal"] = r.is_strongly_real;
    doc["reason"] = to_string(r.reason);
    doc["spectrum"] = spectrum_to_json(r.spectrum);
    return doc;
}

Json flags_to_json(const CertificateFlags& f)
{
    Json doc;
    doc["conjugatesToNegative"] = f.conjugates_to_negative;
    doc["involutive"] = f.involutive;
    doc["special"] = f.special;
    return doc;
}

Json certificate_to_json(const Certificate& c, const Json& x_doc)
{
    Json doc;
    doc["X"] = x_doc;
    doc["g"] = c.field == Field::C ? matrix_to_json(c.g_c) : matrix_to_json(c.g_h);
    doc["flags"] = flags_to_json(c.flags);
    doc["transcript"] = c.transcript;
    return doc;
}

std::vector<Gaussian> parse_hints(const std::string& comma_separated)
{
    std::vector<Gaussian> out;
    std::stringstream ss(comma_separated);
    std::string item;
    while (std::getline(ss, item, ','))
        if (item.find_first_not_of(" \t") != std::string::npos)
            out.push_back(parse_gaussian(item));
    return out;
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace adreal::io
