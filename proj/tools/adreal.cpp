// adreal: classify, witness, verify and atlas subcommands.

#include "adreal/jobs.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace fs = std::filesystem;
using adreal::io::Json;

namespace {

enum Exit : int {
    kOk = 0,
    kFailure = 1,
    kInputError = 2,
    kNegativeVerdict = 3,
    kExactnessRefusal = 4,
};

struct Config {
    std::string input = "-";
    std::string field;
    std::string hints;
    std::string batch;
    std::string format = "json";
    std::size_t bound = 30;
    bool strong = false;
    bool gl_mode = false;
};

std::string read_all(const std::string& path)
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in)
        throw adreal::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

adreal::jobs::Options options(const Config& cfg)
{
    adreal::jobs::Options o;
    if (!cfg.field.empty())
        o.field = adreal::parse_field(cfg.field);
    o.hints = adreal::io::parse_hints(cfg.hints);
    o.gl_mode = cfg.gl_mode;
    o.strong = cfg.strong;
    return o;
}

std::string spectrum_text(const Json& spectrum)
{
    std::string s;
    for (const auto& d : spectrum) {
        std::string part = "[";
        for (const auto& pm : d["partition"]) {
            if (part.size() > 1)
                part += ",";
            part += std::to_string(pm[0].get<std::size_t>());
            if (pm[1].get<std::size_t>() > 1)
                part += "^" + std::to_string(pm[1].get<std::size_t>());
        }
        s += (s.empty() ? "" : "; ") + d["lambda"].get<std::string>() + " " + part + "]";
    }
    return s;
}

void print_report(const Json& r, const std::string& format)
{
    if (format == "table") {
        std::cout << "field         " << r["field"].get<std::string>() << '\n'
                  << "n             " << r["n"] << '\n'
                  << "real          " << r["real"] << '\n'
                  << "strongly real " << r["stronglyReal"] << '\n'
                  << "reason        " << r["reason"].get<std::string>() << '\n'
                  << "spectrum      " << spectrum_text(r["spectrum"]) << '\n';
    } else {
        std::cout << r.dump(2) << '\n';
    }
}

void print_matrix_table(const Json& m)
{
    std::size_t width = 1;
    for (const auto& row : m["entries"])
        for (const auto& e : row)
            width = std::max(width, e.get<std::string>().size());
    for (const auto& row : m["entries"]) {
        for (const auto& e : row) {
            const auto s = e.get<std::string>();
            std::cout << std::string(width + 2 - s.size(), ' ') << s;
        }
        std::cout << '\n';
    }
}

void print_certificate(const Json& c, const std::string& format)
{
    if (format != "table") {
        std::cout << c.dump(2) << '\n';
        return;
    }
    std::cout << "g (" << c["g"]["field"].get<std::string>() << "):\n";
    print_matrix_table(c["g"]);
    for (const auto& [k, v] : c["flags"].items())
        std::cout << k << ": " << v << '\n';
    for (const auto& line : c["transcript"])
        std::cout << "  " << line.get<std::string>() << '\n';
}

// Maps library errors to exit codes; prints the message on stderr.
template <class F>
int guarded(F&& body)
{
    try {
        return body();
    } catch (const adreal::NoWitness& e) {
        std::cerr << "no witness: " << e.what() << '\n';
        std::cout << Json{{"reason", e.reason()}}.dump(2) << '\n';
        return kNegativeVerdict;
    } catch (const adreal::ExactnessRefusal& e) {
        std::cerr << "exactness refusal: " << e.what() << '\n';
        return kExactnessRefusal;
    } catch (const adreal::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const adreal::NonZeroTrace& e) {
        std::cerr << "input error: " << e.what() << " (use --gl-mode to classify anyway)\n";
        return kInputError;
    } catch (const adreal::DefectiveHint& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const adreal::DimensionMismatch& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const adreal::BoundExceeded& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const adreal::SingularMatrix& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
}

int run_classify(const Config& cfg)
{
    if (cfg.batch.empty())
        return guarded([&] {
            print_report(adreal::jobs::classify(adreal::io::parse_json(read_all(cfg.input)), options(cfg)), cfg.format);
            return int(kOk);
        });

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(cfg.batch))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    int status = kOk;
    Json results = Json::array();
    for (const auto& f : files) {
        Json item;
        item["file"] = f.filename().string();
        const int code = guarded([&] {
            item["report"] = adreal::jobs::classify(adreal::io::parse_json(read_all(f.string())), options(cfg));
            return int(kOk);
        });
        if (code != kOk) {
            item["exitCode"] = code;
            if (status == kOk)
                status = code;
        }
        results.push_back(std::move(item));
    }
    if (cfg.format == "table") {
        for (const auto& item : results) {
            std::cout << "== " << item["file"].get<std::string>() << '\n';
            if (item.contains("report"))
                print_report(item["report"], "table");
            else
                std::cout << "exit code " << item["exitCode"] << '\n';
        }
    } else {
        std::cout << results.dump(2) << '\n';
    }
    return status;
}

int run_witness(const Config& cfg)
{
    return guarded([&] {
        print_certificate(adreal::jobs::witness(adreal::io::parse_json(read_all(cfg.input)), options(cfg)), cfg.format);
        return int(kOk);
    });
}

int run_verify(const Config& cfg)
{
    return guarded([&] {
        const auto out = adreal::jobs::verify(adreal::io::parse_json(read_all(cfg.input)));
        if (cfg.format == "table") {
            for (const auto& [k, v] : out.document["flags"].items())
                std::cout << k << ": " << v << '\n';
            std::cout << "claims hold: " << (out.claims_hold ? "true" : "false") << '\n';
        } else {
            std::cout << out.document.dump(2) << '\n';
        }
        return int(out.claims_hold ? kOk : kFailure);
    });
}

int run_atlas(const Config& cfg)
{
    return guarded([&] {
        const std::string csv = adreal::atlas_csv(cfg.bound);
        if (cfg.format != "table") {
            std::cout << csv;
            return int(kOk);
        }
        std::istringstream in(csv);
        std::string line;
        while (std::getline(in, line)) {
            std::replace(line.begin(), line.end(), ',', '\t');
            std::cout << line << '\n';
        }
        return int(kOk);
    });
}

void add_common(CLI::App* sub, Config& cfg, bool matrix_input)
{
    sub->add_option("input", cfg.input, "input JSON document (default: stdin)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
    if (!matrix_input)
        return;
    sub->add_option("--field", cfg.field, "field override")->check(CLI::IsMember({"C", "H"}));
    sub->add_option("--hint", cfg.hints, "comma-separated eigenvalue hints, e.g. i,-i");
    sub->add_flag("--gl-mode", cfg.gl_mode, "skip the trace-zero gate");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact classification of Ad-real and strongly Ad-real elements of sl(n, C) and sl(n, H)"};
    app.require_subcommand(1);
    Config cfg;

    auto* classify = app.add_subcommand("classify", "classify X as real / strongly real");
    add_common(classify, cfg, true);
    classify->add_option("--batch", cfg.batch, "classify every *.json file in a directory")
        ->check(CLI::ExistingDirectory);

    auto* witness = app.add_subcommand("witness", "construct a certificate g with g X g^-1 = -X and det g = 1");
    add_common(witness, cfg, true);
    witness->add_flag("--strong", cfg.strong, "require an involutive certificate");

    auto* verify = app.add_subcommand("verify", "check a certificate {X, g, flags}");
    add_common(verify, cfg, false);

    auto* atlas = app.add_subcommand("atlas", "partition census as CSV");
    atlas->add_option("--bound", cfg.bound, "largest n")->check(CLI::Range(std::size_t{1}, std::size_t{40}));
    atlas->add_option("--format", cfg.format, "csv by default; table aligns columns")
        ->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    if (*classify)
        return run_classify(cfg);
    if (*witness)
        return run_witness(cfg);
    if (*verify)
        return run_verify(cfg);
    return run_atlas(cfg);
}
