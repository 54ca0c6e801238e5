// mdlie — exact-arithmetic toolkit for finite-dimensional real Lie algebras
// given by rational structure constants: coadjoint-orbit dimensions, the
// MD property (every orbit has dimension 0 or the maximal one), and
// classification of 5-dimensional algebras with 3-dimensional commutative
// derived ideal.
//
// Exit codes:
//   0   success (validate: algebra valid; md-check: certified;
//       distinct: all pairs distinct)
//   1   negative result (validate: Jacobi violation; md-check: refuted;
//       distinct: some pair potentially isomorphic)
//   2   md-check: inconclusive
//   64  command-line usage error
//   65  data or constraint violation (malformed algebra file, bad label
//       parameters, malformed functional, dimension mismatch)
//   66  cannot open or write a file
//   70  internal error

#include <CLI11.hpp>

#include "mdlie/algebra_io.hpp"
#include "mdlie/classify.hpp"
#include "mdlie/families.hpp"
#include "mdlie/kirillov.hpp"
#include "mdlie/md_verifier.hpp"
#include "mdlie/report.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitFile = 66;
constexpr int kExitInternal = 70;

struct CliError {
    int code;
    std::string message;
};

// Input selection shared by the verbs that consume one algebra.
struct InputSpec {
    std::string positional;
    std::string file;
    std::string label;
};

void add_input_options(CLI::App* sub, InputSpec& in) {
    sub->add_option("input", in.positional, "Path to an algebra JSON file");
    sub->add_option("--file", in.file, "Path to an algebra JSON file");
    sub->add_option("--label", in.label,
                    "Catalog family label, e.g. \"5.3.1(2,3)\" or \"5.3.8(2; 3/5, 4/5)\"");
}

std::string read_file(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        throw CliError{kExitFile, "cannot open file: " + path};
    }
    std::ostringstream text;
    text << stream.rdbuf();
    return text.str();
}

mdlie::LieAlgebra algebra_from_label(const std::string& text) {
    auto label = mdlie::FamilyLabel::parse(text);
    if (!label) {
        throw CliError{kExitData, "unrecognized family label: " + text};
    }
    return mdlie::make_family(*label);  // std::invalid_argument -> kExitData
}

// Loads the requested algebra, preserving a Jacobi violation as a value so
// `validate` can report it; every other verb converts it to an error.
std::variant<mdlie::LieAlgebra, mdlie::JacobiViolation> load_raw(const InputSpec& in) {
    int sources = 0;
    sources += in.positional.empty() ? 0 : 1;
    sources += in.file.empty() ? 0 : 1;
    sources += in.label.empty() ? 0 : 1;
    if (sources != 1) {
        throw CliError{kExitUsage,
                       "provide exactly one input: a file path (positional or --file) or --label"};
    }
    if (!in.label.empty()) {
        return algebra_from_label(in.label);
    }
    const std::string& path = in.positional.empty() ? in.file : in.positional;
    return mdlie::read_algebra_json(read_file(path));  // AlgebraFormatError -> kExitData
}

mdlie::LieAlgebra load_algebra(const InputSpec& in) {
    auto raw = load_raw(in);
    if (std::holds_alternative<mdlie::JacobiViolation>(raw)) {
        throw CliError{kExitData, "input algebra violates the Jacobi identity"};
    }
    return std::get<mdlie::LieAlgebra>(std::move(raw));
}

mdlie::Functional parse_functional_or_fail(const std::string& text, std::size_t dim) {
    auto f = mdlie::parse_functional(text, dim);
    if (!f) {
        std::ostringstream msg;
        msg << "functional must be " << dim << " comma-separated rationals, got: " << text;
        throw CliError{kExitData, msg.str()};
    }
    return *f;
}

int exit_code_for(mdlie::MDStatus status) {
    switch (status) {
        case mdlie::MDStatus::Certified:
            return 0;
        case mdlie::MDStatus::Refuted:
            return 1;
        case mdlie::MDStatus::Inconclusive:
            return 2;
    }
    return kExitInternal;
}

int run(int argc, char** argv) {
    CLI::App app{
        "Exact toolkit for real Lie algebras with rational structure constants:\n"
        "coadjoint-orbit dimensions, MD certification, and classification of\n"
        "5-dimensional algebras with 3-dimensional commutative derived ideal."};
    app.require_subcommand(1);

    int exit_code = 0;

    // validate ---------------------------------------------------------
    InputSpec validate_in;
    bool validate_json_flag = false;
    auto* validate_cmd =
        app.add_subcommand("validate", "Check an algebra file: shape, ranges, Jacobi identity");
    add_input_options(validate_cmd, validate_in);
    validate_cmd->add_flag("--json", validate_json_flag, "Emit JSON instead of text");
    validate_cmd->callback([&]() {
        auto raw = load_raw(validate_in);
        std::cout << (validate_json_flag ? mdlie::validate_json(raw) : mdlie::validate_text(raw));
        exit_code = std::holds_alternative<mdlie::LieAlgebra>(raw) ? 0 : 1;
    });

    // invariants -------------------------------------------------------
    InputSpec invariants_in;
    bool invariants_json_flag = false;
    auto* invariants_cmd = app.add_subcommand(
        "invariants", "Dimension, derived and lower central series, center, solvability");
    add_input_options(invariants_cmd, invariants_in);
    invariants_cmd->add_flag("--json", invariants_json_flag, "Emit JSON instead of text");
    invariants_cmd->callback([&]() {
        auto g = load_algebra(invariants_in);
        std::cout << (invariants_json_flag ? mdlie::invariants_json(g) : mdlie::invariants_text(g));
    });

    // orbit-dim --------------------------------------------------------
    InputSpec orbit_in;
    std::string orbit_functional;
    bool orbit_json_flag = false;
    auto* orbit_cmd = app.add_subcommand(
        "orbit-dim", "Coadjoint-orbit and stabilizer dimension at one functional");
    add_input_options(orbit_cmd, orbit_in);
    orbit_cmd->add_option("--functional", orbit_functional, "Comma-separated rationals, one per basis vector")
        ->required();
    orbit_cmd->add_flag("--json", orbit_json_flag, "Emit JSON instead of text");
    orbit_cmd->callback([&]() {
        auto g = load_algebra(orbit_in);
        auto f = parse_functional_or_fail(orbit_functional, g.dim());
        std::cout << (orbit_json_flag ? mdlie::orbit_dim_json(g, f) : mdlie::orbit_dim_text(g, f));
    });

    // md-check ---------------------------------------------------------
    InputSpec md_in;
    std::size_t md_samples = 500;
    std::uint64_t md_seed = 0;
    bool md_json_flag = false;
    auto* md_cmd = app.add_subcommand(
        "md-check", "Certify or refute that every orbit has dimension 0 or the maximum");
    add_input_options(md_cmd, md_in);
    md_cmd->add_option("--samples", md_samples, "Random functionals to evaluate (default 500)");
    md_cmd->add_option("--seed", md_seed, "Random seed (default 0)");
    md_cmd->add_flag("--json", md_json_flag, "Emit JSON instead of text");
    md_cmd->callback([&]() {
        auto g = load_algebra(md_in);
        auto v = mdlie::md_check(g, md_samples, md_seed);
        std::cout << (md_json_flag ? mdlie::verdict_json(v, md_seed)
                                   : mdlie::verdict_text(v, md_seed));
        exit_code = exit_code_for(v.status);
    });

    // classify ---------------------------------------------------------
    InputSpec classify_in;
    bool classify_json_flag = false;
    auto* classify_cmd = app.add_subcommand(
        "classify", "Identify a 5-dimensional algebra with 3-dimensional commutative "
                    "derived ideal within the eight-family catalog");
    add_input_options(classify_cmd, classify_in);
    classify_cmd->add_flag("--json", classify_json_flag, "Emit JSON instead of text");
    classify_cmd->callback([&]() {
        auto g = load_algebra(classify_in);
        auto r = mdlie::classify(g);
        std::cout << (classify_json_flag ? mdlie::classify_json(r) : mdlie::classify_text(r));
    });

    // family -----------------------------------------------------------
    std::string family_label;
    std::string family_emit;
    auto* family_cmd =
        app.add_subcommand("family", "Print a catalog family's structure constants as JSON");
    family_cmd->add_option("--label", family_label, "Catalog family label")->required();
    family_cmd->add_option("--emit", family_emit, "Also write the JSON document to this path");
    family_cmd->callback([&]() {
        auto g = algebra_from_label(family_label);
        std::string doc = mdlie::write_algebra_json(g);
        if (!family_emit.empty()) {
            std::ofstream out(family_emit, std::ios::binary);
            if (!out || !(out << doc) || !out.flush()) {
                throw CliError{kExitFile, "cannot write file: " + family_emit};
            }
        }
        std::cout << doc;
    });

    // spectrum ----------------------------------------------------------
    InputSpec spectrum_in;
    std::size_t spectrum_samples = 500;
    std::uint64_t spectrum_seed = 0;
    bool spectrum_json_flag = false;
    auto* spectrum_cmd = app.add_subcommand(
        "spectrum", "Orbit dimensions over the {0,1} battery plus random functionals");
    add_input_options(spectrum_cmd, spectrum_in);
    spectrum_cmd->add_option("--samples", spectrum_samples,
                             "Random functionals to evaluate (default 500)");
    spectrum_cmd->add_option("--seed", spectrum_seed, "Random seed (default 0)");
    spectrum_cmd->add_flag("--json", spectrum_json_flag, "Emit JSON instead of text");
    spectrum_cmd->callback([&]() {
        auto g = load_algebra(spectrum_in);
        auto rs = mdlie::rank_spectrum(g, spectrum_samples, spectrum_seed);
        std::cout << (spectrum_json_flag ? mdlie::spectrum_json(rs, spectrum_seed)
                                         : mdlie::spectrum_text(rs, spectrum_seed));
    });

    // distinct -----------------------------------------------------------
    std::vector<std::string> distinct_labels;
    bool distinct_json_flag = false;
    auto* distinct_cmd = app.add_subcommand(
        "distinct", "Decide pairwise non-isomorphism between catalog family members");
    distinct_cmd->add_option("labels", distinct_labels, "Two or more catalog family labels")
        ->required();
    distinct_cmd->add_flag("--json", distinct_json_flag, "Emit JSON instead of text");
    distinct_cmd->callback([&]() {
        if (distinct_labels.size() < 2) {
            throw CliError{kExitUsage, "distinct needs at least two labels"};
        }
        std::vector<mdlie::FamilyLabel> labels;
        labels.reserve(distinct_labels.size());
        for (const auto& text : distinct_labels) {
            auto label = mdlie::FamilyLabel::parse(text);
            if (!label) {
                throw CliError{kExitData, "unrecognized family label: " + text};
            }
            labels.push_back(*label);
        }
        auto pairs = mdlie::pairwise_distinct(labels);  // std::invalid_argument -> kExitData
        std::cout << (distinct_json_flag ? mdlie::distinct_json(pairs)
                                         : mdlie::distinct_text(pairs));
        for (const auto& p : pairs) {
            if (!p.distinct) {
                exit_code = 1;
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n"
                  << "run 'mdlie --help' or 'mdlie <verb> --help' for usage\n";
        return kExitUsage;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const mdlie::AlgebraFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
