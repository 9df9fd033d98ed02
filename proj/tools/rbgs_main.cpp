#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rbgs/jsonio.hpp"
#include "rbgs/oracle.hpp"
#include "rbgs/selftest.hpp"
#include "rbgs/textio.hpp"

using namespace rbgs;

namespace {

// Exit codes: 0 success/verified, 1 nontrivial composition found,
// 2 inconclusive (a cap fired), 3 usage or parse error.
constexpr int kOk = 0, kNontrivial = 1, kInconclusive = 2, kUsage = 3;

struct Options {
    int k = 1, l = 1, m_max = 3;
    std::string lambda = "L";
    int threads = 1;
    std::string format = "text";
    std::string input, output;
    uint64_t seed = 0;
    Caps caps;
    bool set_deg_x = false, set_deg_r = false, set_arity = false, set_steps = false;
};

LambdaMode lambda_mode(const Options& o) {
    if (o.lambda == "L") return LambdaMode::symbolic();
    Rat v = parse_rational(o.lambda);
    if (v == 0) return LambdaMode::zero();
    return LambdaMode::numeric(v);
}

GenParams gen_params(const Options& o) {
    GenParams p;
    p.k = o.k;
    p.l = o.l;
    p.m_max = o.m_max;
    p.mode = lambda_mode(o);
    return p;
}

Caps effective_caps(const Options& o) {
    Caps c = Caps::defaults(o.k, o.l, o.m_max);
    if (o.set_deg_x) c.max_deg_x = o.caps.max_deg_x;
    if (o.set_deg_r) c.max_deg_r = o.caps.max_deg_r;
    if (o.set_arity) c.max_arity = o.caps.max_arity;
    if (o.set_steps) c.max_steps = o.caps.max_steps;
    return c;
}

void emit(const Options& o, const std::string& text, const Json& j) {
    std::string out = o.format == "json" ? j.dump(2) + "\n" : text;
    if (o.output.empty()) {
        std::cout << out;
    } else {
        std::ofstream f(o.output);
        f << out;
    }
}

RuleSet load_or_generate(const Options& o) {
    if (!o.input.empty()) {
        std::ifstream f(o.input);
        if (!f) throw Error(Errc::InvalidParams, "cannot open " + o.input);
        Json j;
        f >> j;
        return ruleset_from_json(j);
    }
    return gen_ruleset(gen_params(o)).rules;
}

std::string report_text(const VerifyReport& rep) {
    std::string s;
    s += "pairs checked:        " + std::to_string(rep.pairs_checked) + "\n";
    s += "compositions checked: " + std::to_string(rep.compositions_checked) + "\n";
    s += "beyond caps:          " + std::to_string(rep.beyond_caps) + "\n";
    s += "trivial:              " + std::to_string(rep.trivial) + "\n";
    s += "nontrivial:           " + std::to_string(rep.nontrivial.size()) + "\n";
    for (const auto& c : rep.nontrivial)
        s += "  (" + c.f_name + ", " + c.g_name + ") at w = " + print_word(c.witness) +
             "\n    remainder: " + print_poly(c.remainder) + "\n";
    s += "inconclusive:         " + std::to_string(rep.inconclusive.size()) + "\n";
    for (const auto& c : rep.inconclusive)
        s += "  (" + c.f_name + ", " + c.g_name + ") at w = " + print_word(c.witness) +
             " cap " + c.cap + "\n";
    if (rep.all_trivial()) s += "all compositions trivial\n";
    return s;
}

int verify_exit(const VerifyReport& rep) {
    if (!rep.nontrivial.empty()) return kNontrivial;
    if (!rep.inconclusive.empty()) return kInconclusive;
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner-Shirshov engine for operated algebras with R^k(R+L)^l = 0"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--k", o.k, "tower parameter k (>= 1)");
    app.add_option("--l", o.l, "tower parameter l (>= 1)");
    app.add_option("--m-max", o.m_max, "largest arity for the m-indexed families");
    app.add_option("--lambda", o.lambda, "lambda: 'L' (symbolic), 0, or a nonzero rational");
    app.add_option("--threads", o.threads, "worker threads for verification");
    app.add_option("--format", o.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--input", o.input, "rule set JSON file (instead of generating)");
    app.add_option("--output", o.output, "write output to file");
    app.add_option("--seed", o.seed, "random seed for sampling commands");
    auto capopt = [&](const char* name, auto& field, bool& flag, const char* help) {
        app.add_option(name, field, help)->each([&flag](const std::string&) { flag = true; });
    };
    capopt("--max-deg-x", o.caps.max_deg_x, o.set_deg_x, "cap on generator degree");
    capopt("--max-deg-r", o.caps.max_deg_r, o.set_deg_r, "cap on R degree");
    capopt("--max-arity", o.caps.max_arity, o.set_arity, "cap on witness arity");
    capopt("--max-steps", o.caps.max_steps, o.set_steps, "cap on rewrite steps");

    std::string rel_name, term_text;
    int rel_m = 0;
    auto* gen = app.add_subcommand("gen", "generate relations");
    gen->add_option("--rel", rel_name, "single relation R1..R10 (default: whole set)");
    gen->add_option("--m", rel_m, "arity for R4/R6/R8/R10");

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a term modulo the rule set");
    reduce_cmd->add_option("term", term_text, "term to reduce")->required();
    std::string trace_file;
    reduce_cmd->add_option("--trace", trace_file, "write the rewrite certificate as JSON");

    auto* expand_cmd = app.add_subcommand("expand", "free Rota-Baxter normal form (R1 only)");
    expand_cmd->add_option("term", term_text, "term to expand")->required();

    auto* verify_cmd = app.add_subcommand("verify", "check all compositions within caps");
    auto* complete_cmd = app.add_subcommand("complete", "Shirshov completion within caps");
    auto* irr_cmd = app.add_subcommand("irr", "enumerate irreducible words within bounds");
    int xsize = 1, bound_dx = 4, bound_dr = 4;
    irr_cmd->add_option("--xsize", xsize, "number of generators");
    irr_cmd->add_option("--deg-x", bound_dx, "generator-degree bound");
    irr_cmd->add_option("--deg-r", bound_dr, "R-degree bound");
    auto* dim_cmd = app.add_subcommand("dim", "dimension oracle per bidegree cell");
    dim_cmd->add_option("--xsize", xsize, "number of generators");
    dim_cmd->add_option("--deg-x", bound_dx, "generator-degree bound");
    dim_cmd->add_option("--deg-r", bound_dr, "R-degree bound");
    auto* check_cmd = app.add_subcommand("check-identities", "verify eq1-eq5 and rel2 by expansion");
    int n_max = 5, id_m_max = 4;
    check_cmd->add_option("--n-max", n_max, "largest n");
    check_cmd->add_option("--m-max", id_m_max, "largest m");
    auto* selftest_cmd = app.add_subcommand("selftest", "run the randomized property suites");
    long long st_samples = 10000;
    selftest_cmd->add_option("--samples", st_samples, "sample count for the order properties");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (o.k < 1 || o.l < 1) throw Error(Errc::InvalidParams, "k and l must be >= 1");

        if (gen->parsed()) {
            GenParams p = gen_params(o);
            if (!rel_name.empty()) {
                int fam = 0;
                if (rel_name.size() >= 2 && rel_name[0] == 'R')
                    fam = std::stoi(rel_name.substr(1));
                RelId id{fam, 0};
                bool m_indexed = fam == 4 || fam == 6 || fam == 8 || fam == 10;
                if (m_indexed) id.m = rel_m > 0 ? rel_m : 3;
                Json jparams{{"k", o.k}, {"l", o.l}, {"lambda", o.lambda}};
                auto r = gen_relation(id, p);
                if (!r) {
                    emit(o, id.str() + " is trivial for these parameters\n",
                         Json{{"rel", id.str()}, {"params", jparams}, {"trivial", true}});
                    return kOk;
                }
                Json j = rule_to_json(*r);
                j["params"] = jparams;
                if (id.m > 0) j["params"]["m"] = id.m;
                emit(o, id.str() + ": " + print_poly(r->poly) + " = 0\n", j);
                return kOk;
            }
            GeneratedSet g = gen_ruleset(p);
            std::string text;
            for (size_t i = 0; i < g.rules.size(); ++i)
                text += g.ids[i].str() + ": " + print_poly(g.rules[i].poly) + " = 0\n";
            Json j = ruleset_to_json(g.rules);
            j["params"] =
                Json{{"k", o.k}, {"l", o.l}, {"m_max", o.m_max}, {"lambda", o.lambda}};
            emit(o, text, j);
            return kOk;
        }

        if (reduce_cmd->parsed() || expand_cmd->parsed()) {
            Poly input = parse_poly(term_text);
            if (expand_cmd->parsed()) {
                Poly nf = expand_rb(input, Coeff::lambda().specialize(lambda_mode(o)));
                emit(o, print_poly(nf) + "\n", poly_to_json(nf));
                return kOk;
            }
            RuleSet rules = load_or_generate(o);
            ReduceResult rr = reduce(input, rules, effective_caps(o));
            if (!trace_file.empty()) {
                std::ofstream f(trace_file);
                f << certificate_to_json(rr.cert, rules).dump(2) << "\n";
            }
            emit(o, print_poly(rr.normal_form) + "\n",
                 Json{{"normal_form", poly_to_json(rr.normal_form)},
                      {"complete", rr.complete},
                      {"steps", rr.steps}});
            return rr.complete ? kOk : kInconclusive;
        }

        if (verify_cmd->parsed()) {
            RuleSet rules = load_or_generate(o);
            VerifyReport rep = verify_gsb(rules, effective_caps(o), o.threads);
            rep.k = o.k;
            rep.l = o.l;
            rep.m_max = o.m_max;
            rep.mode = o.lambda;
            emit(o, report_text(rep), verify_report_to_json(rep));
            return verify_exit(rep);
        }

        if (complete_cmd->parsed()) {
            RuleSet rules = load_or_generate(o);
            CompleteResult res = complete(rules, effective_caps(o));
            std::string text;
            text += "rules added: " + std::to_string(res.added.size()) + "\n";
            for (size_t i = rules.size(); i < res.rules.size(); ++i)
                text += "  " + res.rules[i].name + ": " + print_poly(res.rules[i].poly) + " = 0\n";
            text += report_text(res.report);
            Json j = ruleset_to_json(res.rules);
            j["report"] = verify_report_to_json(res.report);
            emit(o, text, j);
            if (res.capped) return kInconclusive;
            return res.added.empty() ? kOk : kNontrivial;
        }

        if (irr_cmd->parsed()) {
            RuleSet rules = load_or_generate(o);
            auto words = irr_enumerate(rules, xsize, bound_dx, bound_dr);
            std::string text;
            Json arr = Json::array();
            for (const auto& w : words) {
                text += print_word(w) + "\n";
                arr.push_back(print_word(w));
            }
            emit(o, text, Json{{"irr", arr}});
            return kOk;
        }

        if (dim_cmd->parsed()) {
            RuleSet rules = load_or_generate(o);
            DimReport rep = dimension_oracle(rules, xsize, bound_dx, bound_dr);
            auto irr = irr_enumerate(rules, xsize, bound_dx, bound_dr);
            std::map<CellKey, size_t> irr_cells;
            for (const auto& w : irr) ++irr_cells[CellKey{w.deg_x(), w.deg_r()}];
            std::string text = "deg_x deg_r words relations dim |Irr|\n";
            bool mismatch = false;
            for (const auto& [key, cell] : rep.cells) {
                size_t irr_n = irr_cells.count(key) ? irr_cells[key] : 0;
                text += std::to_string(key.deg_x) + " " + std::to_string(key.deg_r) + " " +
                        std::to_string(cell.words) + " " + std::to_string(cell.pivots) + " " +
                        std::to_string(cell.dim()) + " " + std::to_string(irr_n) +
                        (cell.dim() == irr_n ? "" : "  MISMATCH") + "\n";
                if (cell.dim() != irr_n) mismatch = true;
            }
            Json j = dim_report_to_json(rep);
            j["irr_match"] = !mismatch;
            emit(o, text, j);
            return mismatch ? kNontrivial : kOk;
        }

        if (selftest_cmd->parsed()) {
            auto results =
                run_property_suite(o.seed, st_samples, st_samples / 10, st_samples / 10);
            std::string text;
            bool all_ok = true;
            Json arr = Json::array();
            for (const auto& r : results) {
                text += r.name + ": " + std::to_string(r.samples) + " samples, " +
                        std::to_string(r.failures) + " failures\n";
                arr.push_back(
                    Json{{"name", r.name}, {"samples", r.samples}, {"failures", r.failures}});
                all_ok = all_ok && r.ok();
            }
            emit(o, text, Json{{"properties", arr}});
            return all_ok ? kOk : kNontrivial;
        }

        if (check_cmd->parsed()) {
            auto results = check_identities(n_max, id_m_max, Coeff::lambda().specialize(lambda_mode(o)));
            std::string text;
            bool all_ok = true;
            Json arr = Json::array();
            for (const auto& r : results) {
                text += r.name + ": " + (r.ok ? "ok" : "FAIL") + "\n";
                arr.push_back(Json{{"name", r.name}, {"ok", r.ok}});
                all_ok = all_ok && r.ok;
            }
            emit(o, text, Json{{"identities", arr}});
            return all_ok ? kOk : kNontrivial;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::CapExceeded ? kInconclusive : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
