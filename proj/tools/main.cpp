#include <CLI11.hpp>

#include <iostream>

#include "vweyl/json_io.hpp"

namespace {

using cartan::ExtensionSpec;
using cartan::FiniteType;
using exactform::Rational;
using vwio::json;

constexpr int kExitMember = 0;
constexpr int kExitNegative = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitResource = 4;

constexpr int kMaxTotalRank = 10;  // up to E8++
constexpr int kMaxWordLen = 10;

struct Settings {
    std::string type = "A";
    int rank = 1;
    std::string out;
    std::string space_file, matrix_file, isometry_file;
    int max_len = 0;
    bool order = false, plus = false, even = false;
    bool text = false;
    bool unsafe_limits = false;
};

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        vwio::save_file(out_path, j);
}

FiniteType parse_type(const std::string& t) {
    if (t.size() != 1) throw std::invalid_argument("type must be one of A..G");
    return cartan::finite_type_from_char(t[0]);
}

ExtensionSpec build_extension(const Settings& s) {
    FiniteType t = parse_type(s.type);
    if (!cartan::valid_finite_rank(t, s.rank))
        throw std::invalid_argument("invalid rank for type " + s.type);
    if (s.rank + 2 > kMaxTotalRank && !s.unsafe_limits)
        throw vahlen::resource_limit("extension rank above the default bound; "
                                     "pass --unsafe-limits to override");
    return cartan::double_extend(t, s.rank);
}

int cmd_extend(const Settings& s) {
    ExtensionSpec ext = build_extension(s);
    if (s.text) {
        std::cout << "C++ for " << s.type << s.rank << "++ (m = " << ext.m << ")\n";
        for (std::size_t i = 0; i < ext.total_rank(); ++i) {
            for (std::size_t j = 0; j < ext.total_rank(); ++j)
                std::cout << (j ? " " : "") << ext.cpp(i, j);
            std::cout << "\n";
        }
        if (!s.out.empty()) vwio::save_file(s.out, vwio::extension_json(ext));
        return kExitMember;
    }
    emit(vwio::extension_json(ext), s.out);
    return kExitMember;
}

int cmd_spinor_outer(const Settings& s) {
    ExtensionSpec ext = build_extension(s);
    if (!ext.simply_laced())
        throw exactform::unsupported_space("spinor-outer needs a symmetric Cartan matrix");
    cartan::OuterSpinorTable table = cartan::spinor_outer(ext);
    json rows = json::array();
    for (const auto& row : table.rows)
        rows.push_back(json{{"automorphism", row.cycles},
                            {"spinor_a", row.theta_a.str()},
                            {"spinor_minus_a", row.theta_minus_a.str()}});
    json out{{"type", s.type},
             {"rank", s.rank},
             {"outer_count", table.rows.size()},
             {"rows", rows},
             {"spinor_minus_id", table.theta_minus_id.str()}};
    if (s.text) {
        std::cout << s.type << s.rank << "++:";
        if (table.rows.empty()) std::cout << " no outer automorphisms;";
        for (const auto& row : table.rows)
            std::cout << "  " << row.cycles << " -> " << row.theta_a.str()
                      << ", -: " << row.theta_minus_a.str() << ";";
        std::cout << "  theta(-id) = " << table.theta_minus_id.str() << "\n";
        if (!s.out.empty()) vwio::save_file(s.out, out);
        return kExitMember;
    }
    emit(out, s.out);
    return kExitMember;
}

int cmd_check_vahlen(const Settings& s) {
    exactform::SpacePtr space = vwio::space_from(vwio::load_file(s.space_file));
    vahlen::CliffMat2 mat = vwio::cliffmat_from(vwio::load_file(s.matrix_file));
    if (!mat.algebra()->space().same_as(*space))
        throw vwio::parse_error("matrix space does not match the space file");

    vahlen::VahlenVerdict verdict =
        s.order ? vahlen::is_vahlen_order(mat) : vahlen::is_vahlen(mat);
    bool ok = verdict.member;
    json out{{"member", verdict.member}};
    if (verdict.member) {
        out["lambda"] = verdict.lambda.str();
        if (s.plus && verdict.lambda != Rational(1)) {
            out["member"] = false;
            out["failed"] = "plus: lambda != 1";
            ok = false;
        }
        if (s.even && !vahlen::is_even(mat)) {
            out["member"] = false;
            out["failed"] = "even: grading condition";
            ok = false;
        }
    } else {
        out["failed_condition"] = verdict.failed;
        if (verdict.failed == 0) out["failed"] = "integrality: entries outside the order";
    }
    emit(out, s.out);
    return ok ? kExitMember : kExitNegative;
}

int cmd_enumerate(const Settings& s) {
    ExtensionSpec ext = build_extension(s);
    if (!ext.simply_laced())
        throw exactform::unsupported_space("enumerate needs a simply-laced extension");
    int cap = s.unsafe_limits ? s.max_len : kMaxWordLen;
    std::vector<vahlen::WeylElement> elements = vahlen::enumerate_weyl(ext, s.max_len, cap);
    exactform::QVector witness = exactform::timelike_witness(*ext.W);
    json arr = json::array();
    for (const auto& e : elements) {
        json word = json::array();
        for (int w : e.word) word.push_back(w);
        arr.push_back(json{{"word", word},
                           {"isometry", vwio::matrix_json(e.iso.mat)},
                           {"vahlen", vwio::cliffmat_json(e.vahlen_rep)},
                           {"spinor", exactform::spinor_norm(e.iso).str()},
                           {"o_plus", exactform::o_plus_member(e.iso, witness)}});
    }
    emit(json{{"type", s.type},
              {"rank", s.rank},
              {"max_len", s.max_len},
              {"count", elements.size()},
              {"elements", arr}},
         s.out);
    return kExitMember;
}

int cmd_decompose(const Settings& s) {
    exactform::SpacePtr space = vwio::space_from(vwio::load_file(s.space_file));
    json jiso = vwio::load_file(s.isometry_file);
    exactform::RatMat m =
        vwio::matrix_from(jiso.is_object() ? jiso.at("matrix") : jiso);
    if (!space->nonsingular()) throw vwio::parse_error("space is singular");
    if (!exactform::is_isometry_matrix(*space, m))
        throw vwio::parse_error("matrix is not an isometry of the space");
    exactform::Isometry sigma{space, std::move(m)};
    std::vector<exactform::QVector> mirrors = exactform::cartan_dieudonne(sigma);
    bool recomposes = exactform::recompose(space, mirrors) == sigma;

    Rational product(1);
    json jmirrors = json::array();
    for (const auto& v : mirrors) {
        product *= space->quadratic(v);
        jmirrors.push_back(vwio::qvector_json(v));
    }
    json out{{"mirrors", jmirrors},
             {"mirror_count", mirrors.size()},
             {"recomposes", recomposes},
             {"spinor_class", exactform::squarefree_class(
                                  mirrors.empty() ? Rational(1) : product)
                                  .str()}};
    exactform::Signature sig = space->signature();
    if (sig.neg == 1 && sig.zero == 0)
        out["o_plus"] =
            exactform::o_plus_member(sigma, exactform::timelike_witness(*space));
    else
        out["o_plus"] = nullptr;
    emit(out, s.out);
    return recomposes ? kExitMember : kExitNegative;
}

int cmd_examples(const Settings& s) {
    json reports = json::array();
    bool all = true;
    bool run_a1 = false, run_a2 = false;
    if (s.rank == 0)
        run_a1 = run_a2 = true;  // default: both worked examples
    else if (s.type == "A" && s.rank == 1)
        run_a1 = true;
    else if (s.type == "A" && s.rank == 2)
        run_a2 = true;
    else
        throw exactform::unsupported_space("examples exist for A1++ and A2++ only");
    if (run_a1) {
        paravector::Report r = paravector::worked_example_a1(cartan::double_extend(FiniteType::A, 1));
        all = all && r.all_pass();
        reports.push_back(vwio::report_json(r));
    }
    if (run_a2) {
        paravector::Report r = paravector::worked_example_a2(cartan::double_extend(FiniteType::A, 2));
        all = all && r.all_pass();
        reports.push_back(vwio::report_json(r));
    }
    emit(json{{"reports", reports}, {"all_pass", all}}, s.out);
    return all ? kExitMember : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Clifford/Vahlen realization of doubly extended Weyl groups"};
    app.require_subcommand(1);
    Settings s;

    auto* extend = app.add_subcommand("extend", "Build the double extension T_n++");
    extend->add_option("--type", s.type, "Finite type A..G")->required();
    extend->add_option("--rank", s.rank, "Rank of the finite type")->required();
    extend->add_option("--out", s.out, "Output path (stdout if omitted)");
    extend->add_flag("--text", s.text, "Human-readable table");
    extend->add_flag("--unsafe-limits", s.unsafe_limits, "Lift the rank bound");

    auto* spinor = app.add_subcommand("spinor-outer", "Spinor norms of the outer automorphisms");
    spinor->add_option("--type", s.type)->required();
    spinor->add_option("--rank", s.rank)->required();
    spinor->add_option("--out", s.out);
    spinor->add_flag("--text", s.text);
    spinor->add_flag("--unsafe-limits", s.unsafe_limits);

    auto* check = app.add_subcommand("check-vahlen", "Vahlen membership conditions");
    check->add_option("--space", s.space_file, "QuadSpace JSON file")->required();
    check->add_option("--matrix", s.matrix_file, "CliffMat2 JSON file")->required();
    check->add_flag("--order", s.order, "Integral conditions over the order");
    check->add_flag("--plus", s.plus, "Require lambda = 1");
    check->add_flag("--even", s.even, "Require the even grading");
    check->add_option("--out", s.out);

    auto* enumerate = app.add_subcommand("enumerate", "Weyl ball with Vahlen representatives");
    enumerate->add_option("--type", s.type)->required();
    enumerate->add_option("--rank", s.rank)->required();
    enumerate->add_option("--max-len", s.max_len, "Word length bound")->required();
    enumerate->add_option("--out", s.out);
    enumerate->add_flag("--unsafe-limits", s.unsafe_limits);

    auto* decompose = app.add_subcommand("decompose", "Reflection decomposition + spinor class");
    decompose->add_option("--space", s.space_file)->required();
    decompose->add_option("--isometry", s.isometry_file)->required();
    decompose->add_option("--out", s.out);

    auto* examples = app.add_subcommand("examples", "Worked A1++/A2++ correspondence reports");
    examples->add_option("--type", s.type)->default_val("A");
    examples->add_option("--rank", s.rank, "1 or 2; omit for both")->default_val(0);
    examples->add_option("--out", s.out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (extend->parsed()) return cmd_extend(s);
        if (spinor->parsed()) return cmd_spinor_outer(s);
        if (check->parsed()) return cmd_check_vahlen(s);
        if (enumerate->parsed()) return cmd_enumerate(s);
        if (decompose->parsed()) return cmd_decompose(s);
        if (examples->parsed()) return cmd_examples(s);
    } catch (const vahlen::resource_limit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const exactform::unsupported_space& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const vwio::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitMalformed;
}
