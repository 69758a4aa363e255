#include "lgcoh/cli.hpp"

#include "lgcoh/collections.hpp"
#include "lgcoh/expr.hpp"
#include "lgcoh/ktheory.hpp"
#include "lgcoh/lemmas.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <sstream>

namespace lgcoh::cli {

namespace {

constexpr const char* kEngineVersion = "lgcoh 1.0.0";
constexpr const char* kRegistryVersion = "registry 1";

using nlohmann::json;

json weight_json(const std::vector<int>& e) { return json(e); }

json graded_json(const GradedSpRep& rep) {
    json degrees = json::object();
    for (const auto& [d, comp] : rep.components()) {
        json arr = json::array();
        for (const auto& [w, m] : comp) {
            arr.push_back({{"weight", weight_json(w.entries())},
                           {"mult", m},
                           {"dim", to_ll(sp_dim(w))}});
        }
        degrees[std::to_string(d)] = std::move(arr);
    }
    return json{{"degrees", std::move(degrees)}};
}

void print_graded_text(const GradedSpRep& rep, std::ostream& out) {
    if (rep.is_zero()) {
        out << "0\n";
        return;
    }
    for (const auto& [d, comp] : rep.components()) {
        out << "H^" << d << ":";
        for (const auto& [w, m] : comp) {
            out << " " << w.str();
            if (m != 1) out << " x" << m;
            out << " (dim " << sp_dim(w).str() << ")";
        }
        out << "\n";
    }
}

json repsum_json(const RepSum& s) {
    json arr = json::array();
    for (const auto& [w, m] : s.terms())
        arr.push_back({{"weight", weight_json(w.entries())}, {"mult", m}});
    return arr;
}

json report_json(const VerificationReport& rep) {
    json pairs = json::array();
    for (const auto& p : rep.pairs)
        pairs.push_back({{"src", p.src},
                         {"dst", p.dst},
                         {"status", to_string(p.status)},
                         {"euler", p.euler}});
    return json{{"collection", rep.collection},
                {"n", rep.n},
                {"pairs", std::move(pairs)},
                {"gram", rep.gram},
                {"unitriangular", rep.unitriangular}};
}

int exit_code_of(const VerificationReport& rep) {
    return rep.asserted_matches_golden ? 0 : 2;
}

struct Options {
    int n = 0;
    std::string format = "text";
    int parallel = 0;
};

int cmd_verify(const std::string& name, const Options& opt, std::ostream& out) {
    VerificationReport rep = verify_semiorthogonality(name, opt.parallel);
    if (opt.format == "json") {
        out << report_json(rep).dump(2) << "\n";
    } else {
        out << rep.collection << ": " << rep.pairs.size() << " claims, " << rep.certified
            << " certified, " << rep.asserted << " asserted\n";
        out << "unitriangular: " << (rep.unitriangular ? "true" : "false") << "\n";
        out << "asserted set matches golden: "
            << (rep.asserted_matches_golden ? "true" : "false") << "\n";
        if (!rep.asserted_matches_golden) {
            out << "asserted pairs:\n";
            for (const auto& k : rep.asserted_pairs) out << "  " << k << "\n";
        }
    }
    return exit_code_of(rep);
}

int cmd_gram(const std::string& name, const Options& opt, std::ostream& out) {
    GramResult g = gram_matrix(name);
    if (opt.format == "json") {
        json j{{"collection", name},
               {"gram", g.matrix},
               {"unitriangular", g.unitriangular},
               {"determinant", to_ll(g.determinant)}};
        out << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        for (const auto& row : g.matrix) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) out << ',';
                out << row[i];
            }
            out << "\n";
        }
    } else {
        out << name << " gram " << g.matrix.size() << "x" << g.matrix.size()
            << ", unitriangular: " << (g.unitriangular ? "true" : "false")
            << ", det: " << g.determinant.str() << "\n";
    }
    return 0;
}

int cmd_suite(const std::string& id, const Options& opt, std::ostream& out) {
    SuiteReport rep = lemma_suite(id);
    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"label", r.label},
                            {"pass", r.pass},
                            {"asserted", r.asserted},
                            {"detail", r.detail}});
        json j{{"id", rep.id},
               {"rows", std::move(rows)},
               {"passed", rep.passed},
               {"failed", rep.failed},
               {"asserted", rep.asserted}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : rep.rows) {
            out << (r.pass ? (r.asserted ? "[PASS*]" : "[PASS] ") : "[FAIL] ") << r.label << "\n";
            if (!r.pass && !r.detail.empty()) out << "        " << r.detail << "\n";
        }
        out << rep.passed << " passed (" << rep.asserted << " via asserted bounds), "
            << rep.failed << " failed\n";
    }
    return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cohomology of homogeneous bundles on Lagrangian Grassmannians"};
    app.set_version_flag("--version", std::string(kEngineVersion) + " (" + kRegistryVersion + ")");
    bool no_cache = false;
    app.add_flag("--no-cache", no_cache, "disable memoization of tensor decompositions");

    Options opt;

    // bott
    auto* bott = app.add_subcommand("bott", "cohomology of a Schur bundle");
    std::string weight_text;
    bott->add_option("--n", opt.n, "rank")->required();
    bott->add_option("--weight", weight_text, "weight, e.g. \"(1,1,0,0)\"")->required();
    bott->add_option("--format", opt.format, "text|json");

    // lr
    auto* lr = app.add_subcommand("lr", "tensor product decomposition");
    std::string a_text, b_text;
    lr->add_option("--n", opt.n, "rank")->required();
    lr->add_option("--a", a_text, "first weight")->required();
    lr->add_option("--b", b_text, "second weight")->required();
    lr->add_option("--format", opt.format, "text|json");

    // hom
    auto* hom = app.add_subcommand("hom", "graded Hom between bundle expressions");
    std::string src_text, dst_text;
    hom->add_option("--n", opt.n, "rank")->required();
    hom->add_option("--src", src_text, "source expression")->required();
    hom->add_option("--dst", dst_text, "target expression")->required();
    hom->add_option("--format", opt.format, "text|json");

    // object
    auto* object = app.add_subcommand("object", "registry objects");
    auto* object_show = object->add_subcommand("show", "print pieces and K-class");
    std::string obj_name, obj_a, obj_b;
    object_show->add_option("name", obj_name, "object name, e.g. E_1 or F_1(2)")->required();
    object_show->add_option("--n", opt.n, "rank")->required();
    object_show->add_option("--format", opt.format, "text|json");
    auto* object_hom = object->add_subcommand("hom", "Hom bounds between objects");
    object_hom->add_option("src", obj_a, "source object")->required();
    object_hom->add_option("dst", obj_b, "target object")->required();
    object_hom->add_option("--n", opt.n, "rank")->required();
    auto* object_hom_fmt = object_hom->add_option("--format", opt.format, "json|text");
    object->require_subcommand(1);

    // seq
    auto* seq = app.add_subcommand("seq", "registered exact sequences");
    auto* seq_list = seq->add_subcommand("list", "list registered sequences");
    auto* seq_verify = seq->add_subcommand("verify", "verify one sequence");
    std::string seq_id;
    seq_verify->add_option("id", seq_id, "sequence id")->required();
    seq_verify->add_option("--n", opt.n, "rank")->required();
    seq->require_subcommand(1);

    // verify / gram / suite
    auto* verify = app.add_subcommand("verify", "verify a collection");
    std::string coll_name;
    verify->add_option("name", coll_name, "lg48 or lg510")->required();
    verify->add_option("--format", opt.format, "text|json");
    verify->add_option("--parallel", opt.parallel, "max concurrent pair evaluations");

    auto* gram = app.add_subcommand("gram", "Euler Gram matrix of a collection");
    gram->add_option("name", coll_name, "lg48 or lg510")->required();
    gram->add_option("--format", opt.format, "text|json|csv");

    auto* suite = app.add_subcommand("suite", "run the verification suite");
    std::string suite_id;
    suite->add_option("id", suite_id, "suite id, part id, or 'all'")->required();
    suite->add_option("--format", opt.format, "text|json");

    app.require_subcommand(0, 1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help() << std::flush;
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help() << std::flush;
        return 64;
    }

    if (opt.format != "text" && opt.format != "json" && opt.format != "csv") {
        err << "error: unknown format '" << opt.format << "'\n";
        return 64;
    }

    set_lr_cache_enabled(!no_cache);

    try {
        try {
            if (bott->parsed()) {
                const GradedSpRep rep = cohomology_weight(parse_gl_weight(weight_text));
                if (rep.rank() != opt.n)
                    throw std::invalid_argument("weight rank does not match --n");
                if (opt.format == "json")
                    out << graded_json(rep).dump(2) << "\n";
                else
                    print_graded_text(rep, out);
                return 0;
            }
            if (lr->parsed()) {
                const GLWeight a = parse_gl_weight(a_text);
                const GLWeight b = parse_gl_weight(b_text);
                if (a.rank() != opt.n || b.rank() != opt.n)
                    throw std::invalid_argument("weight rank does not match --n");
                const RepSum prod = lr_general(a, b);
                if (opt.format == "json")
                    out << json{{"terms", repsum_json(prod)}}.dump(2) << "\n";
                else
                    out << prod.str() << "\n";
                return 0;
            }
            if (hom->parsed()) {
                const BundleExpr src = parse_bundle_expr(src_text, opt.n);
                const BundleExpr dst = parse_bundle_expr(dst_text, opt.n);
                const GradedSpRep rep = hom_graded(src, dst);
                if (opt.format == "json")
                    out << graded_json(rep).dump(2) << "\n";
                else
                    print_graded_text(rep, out);
                return 0;
            }
            if (object_show->parsed()) {
                const FilteredObject obj = registry(opt.n).get(obj_name);
                if (opt.format == "json") {
                    json pieces = json::array();
                    for (const auto& p : obj.pieces) pieces.push_back(repsum_json(p.sum));
                    out << json{{"name", obj.name},
                                {"pieces", std::move(pieces)},
                                {"k_class", repsum_json(obj.k_class())}}
                               .dump(2)
                        << "\n";
                } else {
                    out << obj.name << "\n";
                    for (const auto& p : obj.pieces)
                        out << "  piece: " << p.display() << " = " << p.sum.str() << "\n";
                    out << "  K-class: " << obj.k_class().str() << "\n";
                }
                return 0;
            }
            if (object_hom->parsed()) {
                const Registry& reg = registry(opt.n);
                const HomBoundReport rep = hom_bounds(reg.get(obj_a), reg.get(obj_b));
                json upper = json::object();
                for (const auto& [d, dim] : rep.upper) upper[std::to_string(d)] = to_ll(dim);
                const json j{{"upper", std::move(upper)},
                             {"euler", to_ll(rep.euler)},
                             {"status", to_string(rep.status)}};
                if (opt.format == "json" || object_hom_fmt->count() == 0) {
                    out << j.dump(2) << "\n";
                } else {
                    out << "status: " << to_string(rep.status) << ", euler: " << rep.euler.str()
                        << "\n";
                    for (const auto& [d, dim] : rep.upper)
                        out << "  bound H^" << d << " <= " << dim.str() << "\n";
                }
                return 0;
            }
            if (seq_list->parsed()) {
                for (const auto& rec : sequence_registry())
                    out << rec.id << "  [n " << rec.n_min << ".." << rec.n_max << "]  "
                        << rec.note << "\n";
                return 0;
            }
            if (seq_verify->parsed()) {
                const SequenceReport rep = verify_sequence(seq_id, opt.n);
                out << rep.id << " at n=" << rep.n << ": " << (rep.ok ? "true" : "FALSE") << "\n";
                return rep.ok ? 0 : 1;
            }
            if (verify->parsed()) return cmd_verify(coll_name, opt, out);
            if (gram->parsed()) return cmd_gram(coll_name, opt, out);
            if (suite->parsed()) return cmd_suite(suite_id, opt, out);
            out << app.help() << std::flush;
            return 0;
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            return 64;
        }
    } catch (const Error& e) {
        err << "failure: " << e.what() << "\n";
        return verify->parsed() ? 1 : 70;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    }
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace lgcoh::cli
