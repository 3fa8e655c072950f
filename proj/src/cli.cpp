#include "ipr/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "ipr/colouring.hpp"
#include "ipr/columns.hpp"
#include "ipr/linalg.hpp"
#include "ipr/report_json.hpp"
#include "ipr/search.hpp"
#include "ipr/systems.hpp"
#include "ipr/verify.hpp"

namespace ipr {

namespace {

struct ColourRange {
    std::uint64_t first = 1;
    std::uint64_t last = 1;
};

ColourRange parse_range(const std::string& text) {
    auto to_u64 = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad range '" + text + "' (expected m..n)");
        return std::stoull(s);
    };
    ColourRange r;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.first = r.last = to_u64(text);
    } else {
        r.first = to_u64(text.substr(0, dots));
        r.last = to_u64(text.substr(dots + 2));
    }
    if (r.first < 1 || r.last < r.first)
        throw std::invalid_argument("bad range '" + text + "' (need 1 <= m <= n)");
    return r;
}

ColouringSpec load_spec(const std::string& source) {
    if (source == "staged")
        return Staged2Adic{};
    return read_colouring_spec_file(source);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write '" + path + "'");
    f << content;
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for the divisibility-constrained image partition regularity counterexample",
                 "iprcheck"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    const auto positive = CLI::PositiveNumber;
    std::function<int()> action;

    // coeffs
    std::uint64_t coeff_n = 0;
    auto* coeffs = app.add_subcommand("coeffs", "Least positive c_1..c_n with c_n n = 2^(n-1) mod 2^n");
    coeffs->add_option("n", coeff_n)->required()->check(positive);
    coeffs->callback([&] {
        action = [&] {
            const auto seq = CoefficientSequence::canonical(coeff_n);
            if (format == "json") {
                Json j = Json::array();
                for (const auto& c : seq.values)
                    j.push_back(c.get_str());
                out << j.dump() << '\n';
            } else {
                for (std::size_t i = 0; i < seq.size(); ++i)
                    out << (i ? " " : "") << seq.values[i].get_str();
                out << '\n';
            }
            return kExitOk;
        };
    });

    // colour
    std::string range_text;
    std::string colour_source = "staged";
    auto* colour = app.add_subcommand("colour", "Print colours of m..n");
    colour->add_option("range", range_text, "m..n or a single m")->required();
    colour->add_option("--colouring", colour_source, "`staged` or a residue-table JSON file");
    colour->callback([&] {
        action = [&] {
            const ColourRange r = parse_range(range_text);
            const ColouringSpec spec = load_spec(colour_source);
            Json j = Json::array();
            for (std::uint64_t m = r.first;; ++m) {
                const Colour c = colour_of(spec, m);
                if (format == "json")
                    j.push_back({{"m", m}, {"colour", colour_symbol(c)}});
                else
                    out << m << ' ' << colour_symbol(c) << '\n';
                if (m == r.last)
                    break;
            }
            if (format == "json")
                out << j.dump() << '\n';
            return kExitOk;
        };
    });

    // build / bmatrix
    std::string kind_text;
    std::size_t depth = 0;
    std::string matrix_out;
    std::string sidecar_out;
    auto* build = app.add_subcommand("build", "Emit the depth-d system (1 = x, 2 = z) in matrix text format");
    build->add_option("kind", kind_text)->required();
    build->add_option("depth", depth)->required()->check(positive);
    build->add_option("--matrix-out", matrix_out, "Also write the matrix text to this file");
    build->add_option("--sidecar-out", sidecar_out, "Also write the JSON sidecar to this file");
    build->callback([&] {
        action = [&] {
            const auto sys = build_system(parse_system_kind(kind_text), depth, CoefficientSequence::canonical(depth));
            const std::string text = to_text(sys.matrix);
            const std::string sidecar = sidecar_json(sys).dump(2) + "\n";
            if (!matrix_out.empty())
                write_file(matrix_out, text);
            if (!sidecar_out.empty())
                write_file(sidecar_out, sidecar);
            out << (format == "json" ? sidecar : text);
            return kExitOk;
        };
    });

    auto* bmatrix = app.add_subcommand("bmatrix", "Emit the dependence matrix B(A) of the depth-d system");
    bmatrix->add_option("kind", kind_text)->required();
    bmatrix->add_option("depth", depth)->required()->check(positive);
    bmatrix->callback([&] {
        action = [&] {
            const auto sys = build_system(parse_system_kind(kind_text), depth, CoefficientSequence::canonical(depth));
            const ExactMatrix b = dependence_matrix(sys.matrix);
            if (format == "json") {
                Json j;
                j["rows"] = b.rows();
                j["cols"] = b.cols();
                j["row_labels"] = b.row_labels();
                j["col_labels"] = b.col_labels();
                Json entries = Json::array();
                for (const auto& e : b.entries())
                    entries.push_back(e.to_string());
                j["entries"] = std::move(entries);
                out << j.dump() << '\n';
            } else {
                write_matrix(out, b);
            }
            return kExitOk;
        };
    });

    // search
    std::string search_kind;
    std::size_t search_depth = 0;
    std::string search_matrix;
    std::vector<std::string> divisibility_text;
    std::string search_colouring = "staged";
    SearchBounds bounds;
    std::uint64_t image_max = 0;
    int workers = 0;
    bool serial = false;
    std::string expect = "witness";
    auto* search = app.add_subcommand("search", "Bounded search for a monochromatic image");
    auto* kind_opt = search->add_option("--kind", search_kind, "System kind (1 or 2)");
    auto* depth_opt = search->add_option("--depth", search_depth, "System depth")->check(positive);
    auto* matrix_opt = search->add_option("--matrix", search_matrix, "Matrix text file (last column is y)");
    search->add_option("--divisibility", divisibility_text, "Per-variable moduli for --matrix")->delimiter(',');
    search->add_option("--colouring", search_colouring, "`staged` or a residue-table JSON file");
    search->add_option("--y-bound", bounds.y_bound)->required()->check(positive);
    search->add_option("--var-bound", bounds.var_bound)->required()->check(positive);
    search->add_option("--image-max", image_max, "Cap on image entries")->check(positive);
    search->add_option("--workers", workers, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);
    search->add_flag("--serial", serial, "Use the single-threaded reference search");
    search->add_option("--expect", expect, "Outcome that yields exit 0")->check(CLI::IsMember({"witness", "exhausted"}));
    kind_opt->needs(depth_opt);
    depth_opt->needs(kind_opt);
    kind_opt->excludes(matrix_opt);
    matrix_opt->excludes(kind_opt);
    search->callback([&] {
        action = [&] {
            SearchProblem problem;
            if (!search_matrix.empty()) {
                std::vector<BigInt> div;
                for (const auto& d : divisibility_text)
                    div.push_back(BigInt(d, 10));
                problem = SearchProblem::from_matrix(read_matrix_file(search_matrix), std::move(div));
            } else if (!search_kind.empty()) {
                problem = SearchProblem::from_system(build_system(
                    parse_system_kind(search_kind), search_depth, CoefficientSequence::canonical(search_depth)));
            } else {
                throw CLI::ValidationError("search", "one of --kind/--depth or --matrix is required");
            }
            if (image_max > 0)
                bounds.image_max = image_max;
            const ColouringSpec spec = load_spec(search_colouring);
            const SearchOutcome outcome = serial ? find_monochromatic_image_serial(problem, spec, bounds)
                                                 : find_monochromatic_image(problem, spec, bounds, {workers});
            if (format == "json") {
                out << to_json(outcome).dump() << '\n';
            } else if (const auto* w = std::get_if<Witness>(&outcome)) {
                out << "witness colour " << colour_symbol(w->colour) << '\n';
                for (const auto& [label, value] : w->assignment)
                    out << "  " << label << " = " << value << '\n';
                out << "  image";
                for (auto v : w->image)
                    out << ' ' << v;
                out << '\n';
            } else {
                out << "exhausted y_bound " << bounds.y_bound << " var_bound " << bounds.var_bound << '\n';
            }
            const bool wanted = expect == "witness";
            return is_witness(outcome) == wanted ? kExitOk : kExitFailed;
        };
    });

    // verifiers
    std::uint64_t range_limit = 0;
    auto* obstruction = app.add_subcommand("verify-obstruction", "Check the per-stage obstruction for n = 1..N");
    obstruction->add_option("N", range_limit)->required()->check(positive);
    obstruction->callback([&] {
        action = [&] {
            const auto report = verify_obstruction(range_limit);
            if (format == "json") {
                out << to_json(report).dump() << '\n';
            } else {
                out << bool_word(report.passed()) << '\n';
                if (!report.passed())
                    out << "first failure at n = " << report.first_failure() << '\n';
            }
            return report.passed() ? kExitOk : kExitFailed;
        };
    });

    auto bool_check = [&](const char* name, const char* help, std::function<bool(std::size_t)> check) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("d", depth)->required()->check(positive);
        sub->callback([&, check, name] {
            action = [&, check, name] {
                const bool ok = check(depth);
                if (format == "json")
                    out << Json{{"check", name}, {"depth", depth}, {"holds", ok}}.dump() << '\n';
                else
                    out << bool_word(ok) << '\n';
                return ok ? kExitOk : kExitFailed;
            };
        });
    };
    bool_check("verify-b-equality", "B(A) of both systems agree at depth d", verify_B_equality);
    bool_check("verify-q-images", "Both systems have equal column spaces over Q at depth d",
               verify_image_equality_over_Q);

    std::string columns_file;
    std::size_t column_limit = kDefaultColumnsLimit;
    auto* columns = app.add_subcommand("columns-condition", "Rado's columns condition for a matrix file");
    columns->add_option("file", columns_file)->required();
    columns->add_option("--limit", column_limit, "Maximum column count")->check(positive);
    columns->callback([&] {
        action = [&] {
            const ExactMatrix m = read_matrix_file(columns_file);
            const auto cert = columns_condition(m, column_limit);
            if (format == "json") {
                out << to_json(cert).dump() << '\n';
            } else if (cert) {
                out << "satisfied\n";
                for (std::size_t b = 0; b < cert->blocks.size(); ++b) {
                    out << "  B" << b + 1 << ":";
                    for (auto c : cert->blocks[b].columns)
                        out << ' ' << c;
                    out << '\n';
                }
            } else {
                out << "not satisfied\n";
            }
            return cert ? kExitOk : kExitFailed;
        };
    });

    std::uint64_t schur_n = 0;
    std::uint64_t schur_k = 0;
    SchurOptions schur_options;
    auto* schur = app.add_subcommand("schur", "Does every k-colouring of [1..N] contain x, y, x+y monochromatic?");
    schur->add_option("N", schur_n)->required()->check(positive);
    schur->add_option("k", schur_k)->required()->check(positive);
    schur->add_option("--limit", schur_options.enumeration_limit, "Maximum number of colourings")->check(positive);
    schur->callback([&] {
        action = [&] {
            const bool ok = schur_exhaustive(schur_n, schur_k, schur_options);
            if (format == "json")
                out << Json{{"N", schur_n}, {"k", schur_k}, {"holds", ok}}.dump() << '\n';
            else
                out << bool_word(ok) << '\n';
            return ok ? kExitOk : kExitFailed;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "iprcheck: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const CLI::Error& e) {
        err << "iprcheck: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "iprcheck: " << e.what() << '\n';
    }
    return kExitUsage;
}

} // namespace ipr
