#include "adreal/jobs.hpp"

namespace adreal::jobs {

LoadedInput load_input(const io::Json& doc, const Options& opts)
{
    if (!doc.is_object())
        throw ParseError("input must be a JSON object");
    LoadedInput in;
    in.field = opts.field ? *opts.field : io::document_field(doc, Field::C);
    if (doc.contains("data")) {
        in.jd = io::parse_spectral_document(doc, in.field);
        if (in.field == Field::C) {
            in.x_c = canonical_form_C(in.jd);
            in.x_doc = io::matrix_to_json(in.x_c);
        } else {
            in.x_h = canonical_form_H(in.jd);
            in.x_doc = io::matrix_to_json(in.x_h);
        }
        return in;
    }
    if (in.field == Field::C) {
        in.x_c = io::parse_matrix_C(doc);
        in.jd = jordan_form_C(in.x_c, opts.hints);
        in.x_doc = io::matrix_to_json(in.x_c);
    } else {
        in.x_h = io::parse_matrix_H(doc);
        in.jd = jordan_form_H(in.x_h, opts.hints);
        in.x_doc = io::matrix_to_json(in.x_h);
    }
    return in;
}

io::Json classify(const io::Json& doc, const Options& opts)
{
    const LoadedInput in = load_input(doc, opts);
    return io::report_to_json(adreal::classify(in.jd, opts.gl_mode));
}

io::Json witness(const io::Json& doc, const Options& opts)
{
    const LoadedInput in = load_input(doc, opts);
    // Runs the trace gate before any builder.
    const ClassificationReport report = adreal::classify(in.jd, opts.gl_mode);
    if (!report.is_real || (opts.strong && !report.is_strongly_real))
        throw NoWitness(std::string(opts.strong ? "not strongly real: " : "not real: ") + to_string(report.reason),
                        to_string(report.reason));
    Certificate c;
    if (in.field == Field::C)
        c = opts.strong ? build_strong_witness_C(in.x_c, in.jd) : build_real_witness_C(in.x_c, in.jd);
    else
        c = opts.strong ? build_strong_witness_H(in.x_h, in.jd) : build_real_witness_H(in.x_h, in.jd);
    return io::certificate_to_json(c, in.x_doc);
}

VerifyOutcome verify(const io::Json& doc)
{
    if (!doc.is_object() || !doc.contains("X") || !doc.contains("g"))
        throw ParseError("verify input needs \"X\" and \"g\" matrix documents");
    const Field fx = io::document_field(doc.at("X"), Field::C);
    const Field fg = io::document_field(doc.at("g"), fx);
    if (fx != fg)
        throw DimensionMismatch("X is over " + to_string(fx) + " but g is over " + to_string(fg));

    Certificate c;
    if (fx == Field::C)
        c = adreal::verify(io::parse_matrix_C(doc.at("g")), io::parse_matrix_C(doc.at("X")));
    else
        c = adreal::verify(io::parse_matrix_H(doc.at("g")), io::parse_matrix_H(doc.at("X")));

    VerifyOutcome out;
    out.flags = c.flags;
    out.claims_hold = true;
    if (doc.contains("flags")) {
        const io::Json& claims = doc.at("flags");
        if (!claims.is_object())
            throw ParseError("\"flags\" must be an object of booleans");
        const std::pair<const char*, bool> checks[] = {
            {"conjugatesToNegative", c.flags.conjugates_to_negative},
            {"involutive", c.flags.involutive},
            {"special", c.flags.special},
        };
        for (const auto& [key, value] : checks) {
            if (!claims.contains(key))
                continue;
            if (!claims.at(key).is_boolean())
                throw ParseError(std::string("claimed flag \"") + key + "\" must be a boolean");
            if (claims.at(key).get<bool>() && !value)
                out.claims_hold = false;
        }
    } else {
        out.claims_hold = c.flags.conjugates_to_negative;
    }
    out.document["flags"] = io::flags_to_json(c.flags);
    out.document["claimsHold"] = out.claims_hold;
    out.document["transcript"] = c.transcript;
    return out;
}

} // namespace adreal::jobs
