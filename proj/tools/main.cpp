// SPDX-License-Identifier: Apache-2.0
//
// nilsum: exact-arithmetic workbench for two-nilpotent decompositions.
//
// Exit codes: 0 success / all checks consistent, 2 proven mathematical
// obstruction, 1 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilsum/errors.hpp"
#include "nilsum/finite_ring.hpp"
#include "nilsum/io.hpp"
#include "nilsum/limit_ring.hpp"
#include "nilsum/nilsum_field.hpp"

using json = nlohmann::json;
using namespace nilsum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitObstruction = 2;

struct Options {
    bool json_output = false;
    std::uint64_t seed = 0;
    std::uint32_t max_level = kDefaultMaxLevel;
};

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::uint32_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::uint32_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"domain", m.domain()->spec()},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", std::move(rows)}};
}

json limit_element_json(const LimitElement& e) {
    return json{{"level", e.level()}, {"matrix", matrix_json(e.matrix())}};
}

void emit(const Options& opt, const json& report, const std::string& text) {
    if (opt.json_output)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

// Deterministic choices baked into reports so golden outputs stay stable.
json algorithm_notes() {
    return json{{"pivot_rule", "first nonzero scanning down"},
                {"basis_scan", "standard basis vectors, then pairs e_i+e_j"},
                {"row_operations", "left multiplication only"}};
}

int cmd_decompose(const Options& opt, const std::string& path,
                  std::optional<std::uint32_t> single_row) {
    const Matrix a = read_matrix_file(path);
    json report{{"command", "decompose"},
                {"inputs", json{{"file", path}, {"matrix", matrix_json(a)}}},
                {"algorithm", algorithm_notes()}};

    if (single_row) {
        if (!a.is_square()) throw PreconditionError("decompose: matrix must be square");
        if (*single_row < 1 || *single_row > a.rows())
            throw PreconditionError("decompose: --single-row index out of range");
        const std::uint32_t k = *single_row - 1;
        auto dec = single_row_decide(a, k);
        if (dec.decomposable) {
            const auto& w = *dec.witness;
            if (!verify_witness(a, w)) throw std::logic_error("witness failed re-verification");
            report["result"] = json{{"status", "witness"},
                                    {"n1", matrix_json(w.n1)},
                                    {"n2", matrix_json(w.n2)},
                                    {"index1", w.cert1.index},
                                    {"index2", w.cert2.index}};
            report["verification"] = json{{"sum_matches", true},
                                          {"n1_nilpotent", true},
                                          {"n2_nilpotent", true}};
            std::ostringstream os;
            os << "decomposable: single nonzero row " << *single_row
               << " has zero diagonal entry\n"
               << "N1 =\n" << format_rows(w.n1) << "N2 =\n" << format_rows(w.n2)
               << "nilpotency indices: " << w.cert1.index << ", " << w.cert2.index << "\n";
            emit(opt, report, os.str());
            return kExitOk;
        }
        report["result"] = json{{"status", "obstruction"},
                                {"reason", "diagonal entry in the nonzero row is not zero"},
                                {"diagonal_entry", dec.obstruction->str()}};
        report["verification"] = json{{"re_checked", true}};
        std::ostringstream os;
        os << "not decomposable: a_" << *single_row << *single_row << " = "
           << dec.obstruction->str() << " is nonzero\n";
        emit(opt, report, os.str());
        return kExitObstruction;
    }

    if (!a.domain()->is_field())
        throw PreconditionError(
            "decompose: needs a field domain (gf or rat); use --single-row for "
            "division-ring inputs");
    if (!a.is_square()) throw PreconditionError("decompose: matrix must be square");

    if (trace_obstruction(a) == TraceVerdict::Obstructed) {
        report["result"] = json{{"status", "obstruction"},
                                {"reason", "trace is not nilpotent in the scalar domain"},
                                {"trace", a.trace().str()}};
        report["verification"] = json{{"re_checked", true}};
        std::ostringstream os;
        os << "not a sum of two nilpotents: trace = " << a.trace().str()
           << " is nonzero over a field\n";
        emit(opt, report, os.str());
        return kExitObstruction;
    }
    if (a.is_scalar())
        throw PreconditionError("decompose: scalar matrix (no decomposition route)");

    auto w = decompose_trace_zero(a);
    if (!verify_witness(a, w)) throw std::logic_error("witness failed re-verification");
    auto sim = zero_diagonal_similarity(a);
    report["result"] = json{{"status", "witness"},
                            {"n1", matrix_json(w.n1)},
                            {"n2", matrix_json(w.n2)},
                            {"index1", w.cert1.index},
                            {"index2", w.cert2.index},
                            {"similarity", json{{"p", matrix_json(sim.p)},
                                                {"zero_diagonal", matrix_json(sim.b)}}}};
    report["verification"] =
        json{{"sum_matches", true}, {"n1_nilpotent", true}, {"n2_nilpotent", true}};
    std::ostringstream os;
    os << "decomposed into two nilpotents\n"
       << "N1 =\n" << format_rows(w.n1) << "N2 =\n" << format_rows(w.n2)
       << "nilpotency indices: " << w.cert1.index << ", " << w.cert2.index << "\n";
    emit(opt, report, os.str());
    return kExitOk;
}

int cmd_hessenberg(const Options& opt, const std::string& path) {
    const Matrix x = read_matrix_file(path);
    auto hr = hessenberg_reduce(x);
    json report{{"command", "hessenberg"},
                {"inputs", json{{"file", path}, {"matrix", matrix_json(x)}}},
                {"algorithm", algorithm_notes()},
                {"result", json{{"u", matrix_json(hr.u)},
                                {"u_inverse", matrix_json(hr.u_inverse)},
                                {"reduced", matrix_json(hr.reduced)},
                                {"block_size", hr.block_size}}},
                {"verification", json{{"conjugation_matches", true},
                                      {"shape_ok", true},
                                      {"u_block_form", true}}}};
    std::ostringstream os;
    os << "reduced with block size k = " << hr.block_size << "\n"
       << "U =\n" << format_rows(hr.u) << "U X U^-1 =\n" << format_rows(hr.reduced);
    emit(opt, report, os.str());
    return kExitOk;
}

LimitElement load_limit_element(const std::string& path,
                                std::optional<std::uint32_t> level) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    if (level) {
        Matrix m = read_matrix(in);
        return LimitElement::canonical(*level, std::move(m));
    }
    return read_limit_element(in);
}

int cmd_limit_canon(const Options& opt, const std::string& path,
                    std::optional<std::uint32_t> level) {
    const LimitElement e = load_limit_element(path, level);
    json report{{"command", "limit canon"},
                {"inputs", json{{"file", path}}},
                {"result", limit_element_json(e)}};
    std::ostringstream os;
    os << "canonical level " << e.level() << "\n" << format_rows(e.matrix());
    emit(opt, report, os.str());
    return kExitOk;
}

int cmd_limit_mul(const Options& opt, const std::string& path_a,
                  std::optional<std::uint32_t> level_a, const std::string& path_b,
                  std::optional<std::uint32_t> level_b) {
    const LimitElement a = load_limit_element(path_a, level_a);
    const LimitElement b = load_limit_element(path_b, level_b);
    const LimitElement c = limit_mul(a, b, opt.max_level);
    json report{{"command", "limit mul"},
                {"inputs", json{{"a", limit_element_json(a)}, {"b", limit_element_json(b)}}},
                {"result", limit_element_json(c)}};
    std::ostringstream os;
    os << "product at canonical level " << c.level() << "\n" << format_rows(c.matrix());
    emit(opt, report, os.str());
    return kExitOk;
}

int cmd_limit_decompose(const Options& opt, const std::string& path,
                        std::optional<std::uint32_t> level) {
    const LimitElement e = load_limit_element(path, level);
    auto [n1, n2] = two_nilgood_decompose(e, opt.max_level);
    if (!(limit_add(n1, n2, opt.max_level) == e))
        throw std::logic_error("limit witness failed re-verification");
    auto c1 = is_nilpotent(n1.matrix());
    auto c2 = is_nilpotent(n2.matrix());
    if (!c1 || !c2) throw std::logic_error("limit witness parts not nilpotent");
    json report{{"command", "limit decompose"},
                {"inputs", json{{"element", limit_element_json(e)}}},
                {"result", json{{"n1", limit_element_json(n1)},
                                {"n2", limit_element_json(n2)},
                                {"index1", c1->index},
                                {"index2", c2->index}}},
                {"verification", json{{"sum_matches", true},
                                      {"n1_nilpotent", true},
                                      {"n2_nilpotent", true}}}};
    std::ostringstream os;
    os << "decomposed at level " << std::max(n1.level(), n2.level()) << "\n"
       << "N1 (level " << n1.level() << "):\n" << format_rows(n1.matrix())
       << "N2 (level " << n2.level() << "):\n" << format_rows(n2.matrix())
       << "nilpotency indices: " << c1->index << ", " << c2->index << "\n";
    emit(opt, report, os.str());
    return kExitOk;
}

json checklist_json(const ConsistencyChecklist& cl) {
    auto s = [](CheckResult c) {
        switch (c) {
            case CheckResult::Pass: return "pass";
            case CheckResult::Fail: return "fail";
            default: return "skipped";
        }
    };
    return json{{"applicable", cl.applicable},
                {"central_nonunits_nilpotent", s(cl.central_nonunits_nilpotent)},
                {"center_local", s(cl.center_local)},
                {"ideals_central_nilpotent", s(cl.ideals_central_nilpotent)},
                {"ideals_in_jacobson", s(cl.ideals_in_jacobson)},
                {"jacobson_nil_central", s(cl.jacobson_nil_central)},
                {"quotient_units_lift", s(cl.quotient_units_lift)},
                {"passed", cl.passed()}};
}

int cmd_corpus(const Options& opt, const std::string& config_path,
               std::uint32_t search_p, const std::string& search_q) {
    std::vector<FiniteRing> corpus;
    if (config_path.empty()) {
        corpus = default_corpus();
    } else {
        std::ifstream in(config_path);
        if (!in) throw ParseError("cannot open corpus config: " + config_path);
        corpus = parse_corpus_config(in, opt.seed);
    }

    const std::uint32_t q_index =
        search_q == "inf" ? kInfiniteIndex
                          : static_cast<std::uint32_t>(std::stoul(search_q));

    json rings = json::array();
    std::ostringstream table;
    table << "ring                              size  holds  types             checks  consistent\n";
    bool all_consistent = true;

    for (const auto& r : corpus) {
        const RingAnalysis an = analyze(r);
        const auto prop = has_two_nil_sum_property(r, an);
        const auto sig = minimal_types(r, an);
        const auto cl = consistency_checklist(r, an);
        const auto verdict = check_structure_theorem(r, an);
        all_consistent = all_consistent && verdict.consistent;

        json jr{{"ring", r.name()},
                {"size", r.size()},
                {"holds", prop.holds},
                {"minimal_types", json::array()},
                {"lemma21", checklist_json(cl)},
                {"structure_consistent", verdict.consistent}};
        for (auto [p, q] : sig.pairs) jr["minimal_types"].push_back({p, q});
        if (prop.counterexample)
            jr["counterexample"] = r.element_name(*prop.counterexample);
        rings.push_back(std::move(jr));

        std::ostringstream types;
        for (auto [p, q] : sig.pairs) types << "(" << p << "," << q << ")";
        std::ostringstream name;
        name << r.name();
        table << name.str();
        for (std::size_t i = name.str().size(); i < 34; ++i) table << ' ';
        table << r.size() << "\t" << (prop.holds ? "yes" : "no ") << "\t"
              << (types.str().empty() ? "-" : types.str()) << "\t"
              << (cl.applicable ? (cl.passed() ? "pass" : "FAIL") : "n/a") << "\t"
              << (verdict.consistent ? "ok" : "INCONSISTENT") << "\n";
    }

    const auto findings = search_noncommutative_type(corpus, search_p, q_index);
    json jfind = json::array();
    for (const auto& f : findings)
        jfind.push_back(json{{"ring", f.ring}, {"p", f.p}, {"q", f.q}});

    json report{{"command", "corpus"},
                {"inputs", json{{"config", config_path.empty() ? "<default>" : config_path},
                                {"type_search", json{{"p", search_p}, {"q", search_q}}}}},
                {"rings", std::move(rings)},
                {"noncommutative_type_findings", std::move(jfind)},
                {"all_consistent", all_consistent}};

    table << "noncommutative rings of type (" << search_p << "," << search_q
          << "): " << (findings.empty() ? "none" : std::to_string(findings.size()))
          << "\n"
          << (all_consistent ? "all structure checks consistent\n"
                             : "STRUCTURE INCONSISTENCY DETECTED\n");
    emit(opt, report, table.str());
    return all_consistent ? kExitOk : kExitError;
}

int cmd_quaternion_demo(const Options& opt) {
    const auto d = Domain::quaternions();
    const Scalar qi = Scalar::quaternion(0, 1, 0, 0);
    const Scalar qj = Scalar::quaternion(0, 0, 1, 0);
    const Scalar qk = Scalar::quaternion(0, 0, 0, 1);

    Matrix a(d, 2, 2);
    a.set(0, 0, qi);
    a.set(0, 1, qj);
    a.set(1, 0, qj.negated());
    a.set(1, 1, qi);

    Matrix u = Matrix::identity(d, 2);
    u.set(1, 0, qk);
    auto u_inv = u.inverse();
    if (!u_inv) throw std::logic_error("quaternion demo: U not invertible");

    const Matrix a2 = a * a;
    const Scalar tr = a.trace();
    const Matrix conj = u * a * *u_inv;

    Matrix expected(d, 2, 2);
    expected.set(0, 1, qj);

    const bool square_zero = a2.is_zero();
    const bool trace_2i = tr == Scalar::quaternion(0, 2, 0, 0);
    const bool conj_matches = conj == expected;
    if (!square_zero || !trace_2i || !conj_matches)
        throw std::logic_error("quaternion demo: assertion failed");

    json report{{"command", "quaternion-demo"},
                {"inputs", json{{"a", matrix_json(a)}, {"u", matrix_json(u)}}},
                {"result", json{{"a_squared_zero", true},
                                {"trace", tr.str()},
                                {"conjugate", matrix_json(conj)},
                                {"conjugate_trace", conj.trace().str()}}},
                {"verification", json{{"a_squared_zero", square_zero},
                                      {"trace_is_2i", trace_2i},
                                      {"conjugate_matches", conj_matches}}}};
    std::ostringstream os;
    os << "A =\n" << format_rows(a)
       << "A^2 = 0: yes\n"
       << "trace(A) = " << tr.str() << " (nonzero although A is nilpotent)\n"
       << "U A U^-1 =\n" << format_rows(conj)
       << "trace(U A U^-1) = " << conj.trace().str()
       << " (trace is not similarity-invariant here)\n";
    emit(opt, report, os.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for two-nilpotent decompositions"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json_output, "emit a JSON report on stdout");
    app.add_option("--seed", opt.seed, "seed for randomized axiom sampling");
    app.add_option("--max-level", opt.max_level, "limit-ring level cap (default 6)");

    std::string dec_file;
    std::optional<std::uint32_t> dec_single_row;
    auto* dec = app.add_subcommand("decompose", "split a matrix into two nilpotents");
    dec->add_option("--in", dec_file, "matrix file")->required();
    std::uint32_t single_row_val = 0;
    auto* sropt = dec->add_option("--single-row", single_row_val,
                                  "decide the single-nonzero-row case (1-based row)");

    std::string hes_file;
    auto* hes = app.add_subcommand("hessenberg", "unit-subdiagonal block reduction");
    hes->add_option("--in", hes_file, "matrix file")->required();

    auto* limit = app.add_subcommand("limit", "operations in the matrix tower over GF(2)");
    limit->require_subcommand(1);

    std::string lc_file;
    std::optional<std::uint32_t> lc_level;
    std::uint32_t lc_level_val = 0;
    auto* lcanon = limit->add_subcommand("canon", "canonical (minimal-level) form");
    lcanon->add_option("--matrix", lc_file, "matrix or element file")->required();
    auto* lc_lvl_opt = lcanon->add_option("--level", lc_level_val, "level of the input matrix");

    std::string lm_a, lm_b;
    std::uint32_t lm_la = 0, lm_lb = 0;
    auto* lmul = limit->add_subcommand("mul", "multiply two elements");
    lmul->add_option("--a", lm_a, "left factor file")->required();
    lmul->add_option("--b", lm_b, "right factor file")->required();
    auto* lm_la_opt = lmul->add_option("--level-a", lm_la, "level of --a");
    auto* lm_lb_opt = lmul->add_option("--level-b", lm_lb, "level of --b");

    std::string ld_file;
    std::uint32_t ld_level_val = 0;
    auto* ldec = limit->add_subcommand("decompose", "split an element into two nilpotents");
    ldec->add_option("--matrix", ld_file, "matrix or element file")->required();
    auto* ld_lvl_opt = ldec->add_option("--level", ld_level_val, "level of the input matrix");

    std::string corpus_config;
    std::uint32_t search_p = 2;
    std::string search_q = "inf";
    auto* corpus = app.add_subcommand("corpus", "analyze a corpus of finite rings");
    corpus->add_option("--config", corpus_config, "ring corpus config file");
    corpus->add_option("--type-p", search_p, "noncommutative type search: p");
    corpus->add_option("--type-q", search_q, "noncommutative type search: q or 'inf'");

    app.add_subcommand("quaternion-demo",
                       "square-zero quaternion matrix with nonzero trace");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    try {
        if (dec->parsed()) {
            if (sropt->count()) dec_single_row = single_row_val;
            return cmd_decompose(opt, dec_file, dec_single_row);
        }
        if (hes->parsed()) return cmd_hessenberg(opt, hes_file);
        if (limit->parsed()) {
            if (lcanon->parsed()) {
                if (lc_lvl_opt->count()) lc_level = lc_level_val;
                return cmd_limit_canon(opt, lc_file, lc_level);
            }
            if (lmul->parsed()) {
                std::optional<std::uint32_t> la, lb;
                if (lm_la_opt->count()) la = lm_la;
                if (lm_lb_opt->count()) lb = lm_lb;
                return cmd_limit_mul(opt, lm_a, la, lm_b, lb);
            }
            if (ldec->parsed()) {
                std::optional<std::uint32_t> lvl;
                if (ld_lvl_opt->count()) lvl = ld_level_val;
                return cmd_limit_decompose(opt, ld_file, lvl);
            }
        }
        if (corpus->parsed()) return cmd_corpus(opt, corpus_config, search_p, search_q);
        if (app.get_subcommand("quaternion-demo")->parsed()) return cmd_quaternion_demo(opt);
        std::cerr << "no subcommand\n";
        return kExitError;
    } catch (const CentralUnitError& e) {
        std::cerr << "obstruction: " << e.what() << "\n";
        return kExitObstruction;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
