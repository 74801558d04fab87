// axtk: exact-arithmetic toolkit for 2-generated axial algebras of Monster
// type and their C2-axets. Subcommands: verify, catalog, axet, replicate.
//
// Exit codes: 0 all checks passed, 1 verdict failure, 2 input/usage error.

#include <unistd.h>

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "axtk/io.hpp"
#include "axtk/replicate.hpp"

namespace {

struct Output {
    std::string format = "text";  // text | machine
    void emit(const axtk::Report& rep) const {
        if (format == "machine")
            std::cout << rep.render_machine() << "\n";
        else
            std::cout << rep.render_text(axtk::color_enabled(isatty(fileno(stdout)) != 0));
    }
};

int report_exit(const axtk::Report& rep) { return rep.pass() ? 0 : 1; }

void add_format_flag(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "report rendering: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for dihedral axial algebras and C2-axets"};
    app.require_subcommand(1);
    Output out;
    int exit_code = 0;

    // verify <file>
    std::string verify_path;
    bool allow_np = false;
    auto* verify = app.add_subcommand("verify", "run the axis axioms over an .axalg document");
    verify->add_option("file", verify_path, "algebra document (.axalg)")->required();
    verify->add_flag("--allow-non-primitive", allow_np, "A4 failures become warnings");
    add_format_flag(verify, out);
    verify->callback([&] {
        axtk::Report rep = axtk::replicate::verify_document(verify_path, {allow_np});
        out.emit(rep);
        exit_code = report_exit(rep);
    });

    // catalog list | catalog build <name>
    auto* cat = app.add_subcommand("catalog", "built-in algebras");
    auto* cat_list = cat->add_subcommand("list", "list catalog entries");
    cat_list->callback([&] {
        for (const auto& n : axtk::catalog::entry_names()) {
            axtk::catalog::CatalogEntry e = axtk::catalog::build(n, std::nullopt);
            std::cout << n << ": dim " << e.algebra->dim() << " over "
                      << e.algebra->field()->describe() << ", axet " << e.expected_axet.str()
                      << "\n";
        }
    });
    std::string cat_name, cat_alpha, cat_output;
    unsigned long cat_char = 0;
    auto* cat_build = cat->add_subcommand("build", "build an entry and print/serialize it");
    cat_build->add_option("name", cat_name, "2B, 3C or 6A")->required();
    cat_build->add_option("--alpha", cat_alpha, "parameter value (expression; eta for 3C)");
    cat_build->add_option("--char", cat_char, "odd prime characteristic");
    cat_build->add_option("-o,--output", cat_output, "write the .axalg document here");
    add_format_flag(cat_build, out);
    cat_build->callback([&] {
        axtk::catalog::CatalogEntry e = [&] {
            std::optional<axtk::Scalar> alpha;
            if (!cat_alpha.empty()) {
                axtk::FieldPtr base = cat_char == 0 ? axtk::Field::rationals()
                                                    : axtk::Field::prime(cat_char);
                alpha = axtk::io::parse_scalar(cat_alpha, base);
                return axtk::catalog::build(cat_name, alpha);
            }
            if (cat_char != 0) {
                // generic build at prime characteristic
                axtk::FieldPtr base = axtk::Field::prime(cat_char);
                if (cat_name == "2B") {
                    axtk::FieldPtr f = axtk::Field::function(base, {"alpha", "beta"});
                    return axtk::catalog::build_2B(f, f->variable("alpha"),
                                                   f->variable("beta"));
                }
                std::string var = cat_name == "3C" ? "eta" : "alpha";
                axtk::FieldPtr f = axtk::Field::function(base, {var});
                return axtk::catalog::build(cat_name, f->variable(var));
            }
            return axtk::catalog::build(cat_name, std::nullopt);
        }();
        axtk::io::AlgebraBundle bundle = axtk::io::bundle_of(e);
        if (!cat_output.empty()) {
            axtk::io::save_algebra(bundle, cat_output);
            std::cout << "wrote " << cat_output << "\n";
        } else {
            std::cout << axtk::io::serialize_algebra(bundle) << "\n";
        }
    });

    // axet build/closure/classify
    auto* ax = app.add_subcommand("axet", "C2-axet operations");
    unsigned long ax_regular = 0, ax_skew = 0;
    std::string ax_output;
    auto* ax_build = ax->add_subcommand("build", "construct a regular or skew axet");
    auto* opt_reg = ax_build->add_option("--regular", ax_regular, "regular axet X(n)");
    auto* opt_skew = ax_build->add_option("--skew", ax_skew, "skew axet X'(k+2k)");
    ax_build->add_option("-o,--output", ax_output, "write the .axet document here");
    ax_build->callback([&] {
        if ((ax_regular == 0) == (ax_skew == 0))
            throw CLI::ValidationError("axet build", "give exactly one of --regular/--skew");
        axtk::axet::C2Axet x = ax_regular ? axtk::axet::C2Axet::regular(ax_regular)
                                          : axtk::axet::C2Axet::skew(ax_skew);
        if (!ax_output.empty()) {
            axtk::io::save_axet(x, ax_output);
            std::cout << "wrote " << ax_output << "\n";
        } else {
            std::cout << axtk::io::serialize_axet(x) << "\n";
        }
    });
    opt_reg->excludes(opt_skew);

    std::string ax_file, ax_points;
    auto* ax_closure = ax->add_subcommand("closure", "closure of points in an .axet document");
    ax_closure->add_option("file", ax_file, "axet document")->required();
    ax_closure->add_option("--points", ax_points, "comma-separated point indices")->required();
    ax_closure->add_option("-o,--output", ax_output, "write the induced .axet document here");
    ax_closure->callback([&] {
        axtk::axet::C2Axet x = axtk::io::load_axet(ax_file);
        std::vector<unsigned> pts;
        std::size_t pos = 0;
        while (pos < ax_points.size()) {
            std::size_t comma = ax_points.find(',', pos);
            if (comma == std::string::npos) comma = ax_points.size();
            pts.push_back(static_cast<unsigned>(std::stoul(ax_points.substr(pos, comma - pos))));
            pos = comma + 1;
        }
        axtk::axet::Subaxet sub = axtk::axet::closure(x, pts);
        std::cout << "closure has " << sub.axet.size() << " points\n";
        if (!ax_output.empty()) {
            axtk::io::save_axet(sub.axet, ax_output);
            std::cout << "wrote " << ax_output << "\n";
        }
    });

    std::string ax_cls_file;
    auto* ax_classify = ax->add_subcommand("classify", "regular-vs-skew decision");
    ax_classify->add_option("file", ax_cls_file, "axet document")->required();
    ax_classify->callback([&] {
        axtk::axet::C2Axet x = axtk::io::load_axet(ax_cls_file);
        std::cout << axtk::axet::classify_2gen(x).str() << "\n";
    });

    // replicate ...
    auto* repl = app.add_subcommand("replicate", "re-run the verified computations");
    unsigned long repl_char = 0;
    unsigned long kmax = 16, qmax = 16;

    auto* r_quot = repl->add_subcommand("lemma-6Aquot", "6A quotient parameter arithmetic");
    add_format_flag(r_quot, out);
    r_quot->callback([&] {
        axtk::Report rep = axtk::replicate::lemma_6Aquot();
        out.emit(rep);
        exit_code = report_exit(rep);
    });

    auto* r_6a = repl->add_subcommand("lemma-6A", "6A residual coefficient extraction");
    r_6a->add_option("--char", repl_char, "rerun at this odd prime characteristic");
    add_format_flag(r_6a, out);
    r_6a->callback([&] {
        axtk::Report rep = axtk::replicate::lemma_6A({repl_char});
        out.emit(rep);
        exit_code = report_exit(rep);
    });

    auto* r_ax = repl->add_subcommand("axets", "skew axet census and subaxets");
    r_ax->add_option("--kmax", kmax, "largest k (default 16)");
    add_format_flag(r_ax, out);
    r_ax->callback([&] {
        axtk::Report rep = axtk::replicate::axets(kmax);
        out.emit(rep);
        exit_code = report_exit(rep);
    });

    auto* r_even = repl->add_subcommand("even-case", "power-of-two witnesses and label traces");
    r_even->add_option("--qmax", qmax, "largest q, a power of two (default 16)");
    add_format_flag(r_even, out);
    r_even->callback([&] {
        axtk::Report rep = axtk::replicate::even_case(qmax);
        out.emit(rep);
        exit_code = report_exit(rep);
    });

    auto* r_fam = repl->add_subcommand("family-lemmas", "6A family identities");
    r_fam->add_option("--char", repl_char, "rerun at this odd prime characteristic");
    add_format_flag(r_fam, out);
    r_fam->callback([&] {
        axtk::Report rep = axtk::replicate::family_lemmas({repl_char});
        out.emit(rep);
        exit_code = report_exit(rep);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const axtk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
