#include "rbgs/jsonio.hpp"

#include "rbgs/textio.hpp"

namespace rbgs {

Json word_to_json(const Word& w) {
    Json letters = Json::array();
    for (const auto& l : w.letters()) {
        if (l.is_gen()) {
            if (l.gen() == kStar)
                letters.push_back("*");
            else if (is_var_id(l.gen()))
                letters.push_back(Json{{"v", l.gen() - kVarBase}});
            else
                letters.push_back(Json{{"x", l.gen()}});
        } else {
            letters.push_back(Json{{"R", word_to_json(l.inner())}});
        }
    }
    return letters;
}

Word word_from_json(const Json& j) {
    std::vector<Letter> ls;
    for (const auto& e : j) {
        if (e.is_string()) {
            RBGS_CHECK(e.get<std::string>() == "*", "bad letter");
            ls.push_back(Letter(kStar));
        } else if (e.contains("x")) {
            ls.push_back(Letter(e["x"].get<int32_t>()));
        } else if (e.contains("v")) {
            ls.push_back(Letter(kVarBase + e["v"].get<int32_t>()));
        } else {
            ls.push_back(Letter(std::make_shared<const Word>(word_from_json(e["R"]))));
        }
    }
    return Word(std::move(ls));
}

Json coeff_to_json(const Coeff& c) {
    auto poly_arr = [](const LPoly& p) {
        Json a = Json::array();
        for (int i = 0; i <= p.degree(); ++i) a.push_back(p[i].str());
        return a;
    };
    return Json{{"num", poly_arr(c.num())}, {"den", poly_arr(c.den())}};
}

Coeff coeff_from_json(const Json& j) {
    auto arr_poly = [](const Json& a) {
        std::vector<Int> c;
        for (const auto& e : a) c.emplace_back(e.get<std::string>());
        return LPoly::from_coeffs(std::move(c));
    };
    return Coeff(arr_poly(j["num"]), arr_poly(j["den"]));
}

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [w, c] : p.terms())
        terms.push_back(Json{{"coeff", coeff_to_json(c)}, {"word", word_to_json(w)}});
    return terms;
}

Poly poly_from_json(const Json& j) {
    Poly p;
    for (const auto& t : j) p.add_term(coeff_from_json(t["coeff"]), word_from_json(t["word"]));
    return p;
}

Json rule_to_json(const Rule& r) {
    // lhs is the leading word; rhs the replacement it rewrites to.
    Poly rhs = Poly::word(r.leading()) - r.poly;
    return Json{{"name", r.name},
                {"lhs", word_to_json(r.leading())},
                {"rhs", poly_to_json(rhs)},
                {"leading", word_to_json(r.leading())},
                {"poly", poly_to_json(r.poly)},
                {"text", print_poly(r.poly)}};
}

Rule rule_from_json(const Json& j) {
    return make_rule(j["name"].get<std::string>(), poly_from_json(j["poly"]));
}

Json ruleset_to_json(const RuleSet& rs) {
    Json rules = Json::array();
    for (const auto& r : rs.rules) rules.push_back(rule_to_json(r));
    return Json{{"rules", rules}};
}

RuleSet ruleset_from_json(const Json& j) {
    RuleSet rs;
    for (const auto& e : j["rules"]) rs.rules.push_back(rule_from_json(e));
    return rs;
}

Json certificate_to_json(const Certificate& cert, const RuleSet& rules) {
    Json entries = Json::array();
    for (const auto& e : cert) {
        Json subst = Json::object();
        for (const auto& [v, w] : e.subst.map())
            subst["x" + std::to_string(v - kVarBase)] = word_to_json(w);
        entries.push_back(Json{{"coeff", coeff_to_json(e.coeff)},
                               {"context", word_to_json(e.context)},
                               {"context_text", print_word(e.context)},
                               {"rule", rules[e.rule_index].name},
                               {"subst", subst},
                               {"rewritten", print_word(e.rewritten)}});
    }
    return entries;
}

namespace {

Json caps_to_json(const Caps& c) {
    return Json{{"max_deg_x", c.max_deg_x},
                {"max_deg_r", c.max_deg_r},
                {"max_arity", c.max_arity},
                {"max_steps", c.max_steps},
                {"max_monomials", c.max_monomials}};
}

Json composition_to_json(const Composition& c) {
    return Json{{"kind", c.kind == CompKind::Inclusion ? "inclusion" : "intersection"},
                {"f", c.f_name},
                {"g", c.g_name},
                {"w", print_word(c.witness)},
                {"remainder", print_poly(c.remainder)},
                {"cap", c.cap}};
}

} // namespace

Json verify_report_to_json(const VerifyReport& rep) {
    Json nt = Json::array(), inc = Json::array();
    for (const auto& c : rep.nontrivial) nt.push_back(composition_to_json(c));
    for (const auto& c : rep.inconclusive) inc.push_back(composition_to_json(c));
    return Json{{"params", Json{{"k", rep.k}, {"l", rep.l}, {"m_max", rep.m_max}, {"mode", rep.mode}}},
                {"caps", caps_to_json(rep.caps)},
                {"pairs_checked", rep.pairs_checked},
                {"compositions_checked", rep.compositions_checked},
                {"beyond_caps", rep.beyond_caps},
                {"trivial", rep.trivial},
                {"nontrivial", nt},
                {"inconclusive", inc}};
}

Json dim_report_to_json(const DimReport& rep) {
    Json cells = Json::array();
    for (const auto& [key, cell] : rep.cells)
        cells.push_back(Json{{"deg_x", key.deg_x},
                             {"deg_r", key.deg_r},
                             {"words", cell.words},
                             {"relations", cell.pivots},
                             {"dim", cell.dim()}});
    return Json{{"rows", rep.rows}, {"cells", cells}};
}

} // namespace rbgs
