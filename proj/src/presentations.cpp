#include "ht/presentations.hpp"

#include "ht/sp_form.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ht {

std::vector<SpGenerator> sp_generators(int g) {
    if (g < 3) throw std::invalid_argument("sp_generators: genus must be at least 3");
    const int n = 2 * g + 1;
    auto c = [n](std::vector<int> pts) { return ConvexCurve::from_points(pts, n); };
    std::vector<SpGenerator> out;
    out.push_back({"a0", c({1, 2, 3, 4})});
    for (int i = 1; i <= 2 * g; ++i) out.push_back({"a" + std::to_string(i), c({i, i + 1})});
    out.push_back({"a0'", c({1, 2, 4, 5})});
    out.push_back({"b1", c({1, 2, 5, 6})});
    out.push_back({"b1'", c({2, 3, 5, 6})});
    out.push_back({"b2", c({3, 4, 5, 6})});
    out.push_back({"b3", c({1, 2, 3, 4, 5, 6})});
    out.push_back({"u", c({1, 2, 6, 7})});
    out.push_back({"u'", c({2, 3, 4, 5})});
    out.push_back({"v", c({1, 3, 4, 5, 6, 7})});
    out.push_back({"v'", c({1, 2, 3, 5, 6, 7})});
    out.push_back({"v''", c({1, 2, 3, 4, 6, 7})});
    return out;
}

int sp_generator_index(int g, const std::string& name) {
    const auto gens = sp_generators(g);
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("sp_generator_index: unknown generator " + name);
}

std::vector<ConvexCurve> q_generators(int g) {
    if (g < 1) throw std::invalid_argument("q_generators: genus must be positive");
    return all_chords(2 * g + 1);
}

int q_generator_index(int g, int i, int j) {
    const ConvexCurve c = chord(i, j, 2 * g + 1);
    const auto gens = q_generators(g);
    return static_cast<int>(std::find(gens.begin(), gens.end(), c) - gens.begin());
}

std::string to_string(RelatorFamily f) {
    switch (f) {
        case RelatorFamily::disjointness_q: return "disjointness_q";
        case RelatorFamily::triangle: return "triangle";
        case RelatorFamily::crossing: return "crossing";
        case RelatorFamily::odd_twist: return "odd_twist";
        case RelatorFamily::disjointness_sp: return "disjointness_sp";
        case RelatorFamily::braid: return "braid";
        case RelatorFamily::chain3: return "chain3";
        case RelatorFamily::lantern: return "lantern";
        case RelatorFamily::auxiliary: return "auxiliary";
        case RelatorFamily::bounding_pair: return "bounding_pair";
        case RelatorFamily::inverse_pair: return "inverse_pair";
    }
    return "?";
}

FreeWord inverse(const FreeWord& w) {
    FreeWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

FreeWord concat(std::initializer_list<FreeWord> parts) {
    FreeWord out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::string format_word(const FreeWord& w, const std::vector<std::string>& names) {
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        s += names.at(l.gen);
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

std::set<int> involved(const Relator& r) {
    std::set<int> s;
    for (const auto& l : r.word) s.insert(l.gen);
    return s;
}

namespace {

FreeWord commutator(const FreeWord& x, const FreeWord& y) { return concat({x, y, inverse(x), inverse(y)}); }

// w1 = w2 as the relator w1 w2^-1.
FreeWord equation(const FreeWord& lhs, const FreeWord& rhs) { return concat({lhs, inverse(rhs)}); }

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int p = from; p <= n; ++p) {
            cur.push_back(p);
            self(self, p + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

}  // namespace

std::vector<Relator> generate_RQ(int g) {
    if (g < 2) throw std::invalid_argument("generate_RQ: genus must be at least 2");
    const int n = 2 * g + 1;
    auto s = [g](int i, int j) { return FreeWord{{q_generator_index(g, i, j), 1}}; };
    std::vector<Relator> R;
    for (const auto& p : subsets(n, 4)) {
        // Two non-crossing pairings per 4-set; the other two rotations repeat them.
        for (int rot = 0; rot < 2; ++rot) {
            const int i = p[rot], j = p[rot + 1], r = p[(rot + 2) % 4], t = p[(rot + 3) % 4];
            R.push_back({RelatorFamily::disjointness_q, "disjointness(" + join({i, j, r, t}) + ")", {i, j, r, t},
                         commutator(s(i, j), s(r, t))});
        }
    }
    for (const auto& p : subsets(n, 3)) {
        const int i = p[0], j = p[1], k = p[2];
        const FreeWord w1 = concat({s(i, j), s(j, k), s(k, i)});
        const FreeWord w2 = concat({s(j, k), s(k, i), s(i, j)});
        const FreeWord w3 = concat({s(k, i), s(i, j), s(j, k)});
        R.push_back({RelatorFamily::triangle, "triangle(" + join(p) + ")#1", p, equation(w1, w2)});
        R.push_back({RelatorFamily::triangle, "triangle(" + join(p) + ")#2", p, equation(w2, w3)});
    }
    for (const auto& p : subsets(n, 4)) {
        for (int rot = 0; rot < 4; ++rot) {
            const int i = p[rot], r = p[(rot + 1) % 4], j = p[(rot + 2) % 4], t = p[(rot + 3) % 4];
            const FreeWord X = concat({s(j, t), s(r, t), inverse(s(j, t))});
            R.push_back({RelatorFamily::crossing, "crossing(" + join({i, r, j, t}) + ")", {i, r, j, t},
                         commutator(s(i, j), X)});
        }
    }
    for (int m = 3; m <= n; m += 2)
        for (auto B : subsets(n, m)) {
            std::reverse(B.begin(), B.end());
            FreeWord w;
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b) w.push_back(s(B[a], B[b])[0]);
            std::reverse(B.begin(), B.end());
            R.push_back({RelatorFamily::odd_twist, "odd_twist(" + join(B) + ")", B, concat({w, w})});
        }
    return R;
}

std::vector<Relator> generate_RSp(int g) {
    const auto gens = sp_generators(g);
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < gens.size(); ++i) idx[gens[i].name] = static_cast<int>(i);
    auto t = [&](const std::string& name) { return FreeWord{{idx.at(name), 1}}; };
    auto W = [&](std::initializer_list<const char*> names) {
        FreeWord w;
        for (const char* nm : names) w.push_back({idx.at(nm), 1});
        return w;
    };
    auto conj = [](const FreeWord& x, const FreeWord& y) { return concat({x, y, inverse(x)}); };

    std::vector<Relator> R;
    for (int i = 0; i <= 2 * g; ++i)
        for (int j = i + 1; j <= 2 * g; ++j) {
            const std::string x = "a" + std::to_string(i), y = "a" + std::to_string(j);
            const int gi = geometric_intersection(gens[idx.at(x)].curve, gens[idx.at(y)].curve);
            if (gi == 0)
                R.push_back({RelatorFamily::disjointness_sp, "disjointness(" + x + "," + y + ")", {i, j},
                             commutator(t(x), t(y))});
            else if (gi == 2)
                R.push_back({RelatorFamily::braid, "braid(" + x + "," + y + ")", {i, j},
                             equation(concat({t(x), t(y), t(x)}), concat({t(y), t(x), t(y)}))});
        }
    const FreeWord b0 = conj(W({"a4", "a3", "a2", "a1", "a1", "a2", "a3", "a4"}), t("a0"));
    const FreeWord a123 = W({"a1", "a2", "a3"});
    R.push_back({RelatorFamily::chain3, "chain3", {}, equation(concat({a123, a123, a123, a123}), concat({t("a0"), b0}))});
    R.push_back({RelatorFamily::lantern, "lantern", {}, equation(W({"a0", "b2", "b1"}), W({"a1", "a3", "a5", "b3"}))});

    struct Aux {
        const char* label;
        const char* lhs;
        FreeWord rhs;
    };
    const std::vector<Aux> aux{
        {"i", "a0'", conj(inverse(W({"a4", "a3"})), t("a0"))},
        {"ii", "b1", conj(inverse(W({"a5", "a4"})), t("a0'"))},
        {"iii", "b1'", conj(inverse(W({"a2", "a1"})), t("b1"))},
        {"iv", "b2", conj(inverse(W({"a3", "a2"})), t("b1'"))},
        {"v", "u", conj(inverse(W({"a6", "a5"})), t("b1"))},
        {"vi", "u'", conj(inverse(W({"a4", "a3", "a2", "a1"})), t("a0"))},
        {"vii", "v", conj(t("u"), t("u'"))},
        {"viii", "v'", conj(W({"a3", "a2"}), t("v"))},
        {"ix", "v''", conj(t("a4"), t("v'"))},
        {"x", "b3", conj(W({"a6", "a5"}), t("v''"))},
    };
    for (std::size_t k = 0; k < aux.size(); ++k)
        R.push_back({RelatorFamily::auxiliary, std::string("auxiliary (") + aux[k].label + ")",
                     {static_cast<int>(k) + 1}, equation(t(aux[k].lhs), aux[k].rhs)});
    R.push_back({RelatorFamily::bounding_pair, "bounding_pair", {}, equation(t("a0"), b0)});
    return R;
}

std::vector<Relator> generate_RSp_hat(int g) {
    auto R = generate_RSp(g);
    const auto gens = sp_generators(g);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const int k = static_cast<int>(i);
        R.push_back({RelatorFamily::inverse_pair, "inverse_pair(" + gens[i].name + ")", {k}, {{k, 1}, {k, -1}}});
    }
    return R;
}

IntMatrix sp_eval(const FreeWord& w, int g) {
    const auto gens = sp_generators(g);
    const SymplecticForm form = SymplecticForm::chain(g);
    std::vector<IntVector> cls;
    for (const auto& s : gens) cls.push_back(lift_class(s.curve).vec());
    IntMatrix M = IntMatrix::identity(form.dim());
    for (const auto& l : w) multiply_by_transvection(M, cls.at(l.gen), form, l.exp);
    return M;
}

IntMatrix shadow_pi(const FreeWord& w, int g) {
    const auto gens = q_generators(g);
    const SymplecticForm form = SymplecticForm::chain(g);
    IntMatrix M = IntMatrix::identity(form.dim());
    for (const auto& l : w) multiply_by_transvection(M, lift_class(gens.at(l.gen)).vec(), form, 2 * l.exp);
    if (!is_level_two(M) || !form.preserves(M)) throw std::logic_error("shadow_pi: image left Sp[2]");
    return M;
}

IntVector surgery_class(const ConvexCurve& a, int eps, const ConvexCurve& c, int g, const AbsIntersectionRule& rule) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("surgery_class: sign must be +-1");
    const SymplecticForm form = SymplecticForm::chain(g);
    const IntVector va = lift_class(a).vec(), vc = lift_class(c).vec();
    const int k = rule(a, c);
    const LaxVector target(transvection(va, form, eps) * vc);
    for (int s : {1, -1}) {
        const IntVector cand = add(vc, scale(Int(s * k), va));
        if (!is_zero(cand) && LaxVector(cand) == target) return cand;
    }
    throw std::runtime_error("surgery_class: no candidate matches the transvection image of " + c.to_string() +
                             " under " + a.to_string());
}

IntMatrix surgery_shadow(const Letter& t, const ConvexCurve& c, int g) {
    const auto gens = sp_generators(g);
    if (t.exp != 1 && t.exp != -1) throw std::invalid_argument("surgery_shadow: letter must have exponent +-1");
    return transvection(surgery_class(gens.at(t.gen).curve, t.exp, c, g), SymplecticForm::chain(g), 2);
}

FreeWord s_cijk_word(int i, int j, int k, int g) {
    if (i == j || j == k || i == k) throw std::invalid_argument("s_cijk_word: indices must be distinct");
    return {{q_generator_index(g, i, j), 1}, {q_generator_index(g, j, k), 1}, {q_generator_index(g, i, k), 1}};
}

ReducibilityVerdict reducibility_criterion(const std::vector<ConvexCurve>& curves, const ConvexCurve& c) {
    const int n = c.n();
    ReducibilityVerdict v;
    if (std::all_of(curves.begin(), curves.end(), [&](const ConvexCurve& a) { return geometric_intersection(a, c) == 0; })) {
        v.condition = 1;
        return v;
    }
    std::vector<ConvexCurve> all = curves;
    all.push_back(c);
    for (int p = 1; p <= n; ++p)
        if (std::none_of(all.begin(), all.end(), [p](const ConvexCurve& a) { return a.contains(p); })) {
            v.condition = 2;
            v.witness = {p};
            return v;
        }
    for (int k = 1; k <= n; ++k) {
        const int k2 = k % n + 1;
        if (std::all_of(all.begin(), all.end(), [&](const ConvexCurve& a) { return a.contains(k) == a.contains(k2); })) {
            v.condition = 3;
            v.witness = {k, k2};
            return v;
        }
    }
    return v;
}

ReducibilityVerdict reducibility_criterion(const Relator& r, const ConvexCurve& c, int g) {
    const auto gens = sp_generators(g);
    std::vector<ConvexCurve> curves;
    for (int i : involved(r)) curves.push_back(gens.at(i).curve);
    return reducibility_criterion(curves, c);
}

int max_convex_intersection(const ConvexCurve& a) {
    int m = 0;
    for (const auto& d : all_convex_curves(a.n())) m = std::max(m, geometric_intersection(a, d));
    return m;
}

namespace {

std::vector<std::string> sp_names(int g) {
    std::vector<std::string> names;
    for (const auto& s : sp_generators(g)) names.push_back("t_" + s.name);
    return names;
}

std::vector<std::string> q_names(int g) {
    std::vector<std::string> names;
    for (const auto& c : q_generators(g)) names.push_back("s_" + c.to_string());
    return names;
}

}  // namespace

SuiteReport verify_sp_relations(int g) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "sp-relations";
    rep.g = g;
    const auto names = sp_names(g);
    std::map<std::string, int> fam;
    for (const auto& r : generate_RSp(g)) {
        ++fam[to_string(r.family)];
        const IntMatrix M = sp_eval(r.word, g);
        rep.check(M.is_identity(), r.label, {{"word", format_word(r.word, names)}}, "identity", to_json(M));
    }
    rep.notes["families"] = fam;
    rep.elapsed_ms = sw.ms();
    return rep;
}

SuiteReport verify_q_shadow(int g, const AbsIntersectionRule& rule) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "q-shadow";
    rep.g = g;
    const SymplecticForm form = SymplecticForm::chain(g);
    const auto chords = q_generators(g);
    const auto gens = sp_generators(g);
    const auto R = generate_RQ(g);
    const auto qn = q_names(g);

    auto evaluate = [&](const Relator& r, const std::vector<IntVector>& cls) {
        IntMatrix M = IntMatrix::identity(form.dim());
        for (const auto& l : r.word) multiply_by_transvection(M, cls[l.gen], form, 2 * l.exp);
        return M;
    };

    std::vector<IntVector> base;
    for (const auto& c : chords) base.push_back(lift_class(c).vec());
    for (const auto& r : R) {
        const IntMatrix M = evaluate(r, base);
        rep.check(M.is_identity(), "untwisted/" + r.label, {{"word", format_word(r.word, qn)}}, "identity", to_json(M));
    }

    std::size_t selections = 0;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (int eps : {1, -1}) {
            const std::string tname = gens[a].name + (eps == 1 ? "" : "^-1");
            std::vector<IntVector> cls(chords.size());
            std::vector<bool> bad(chords.size(), false);
            for (std::size_t c = 0; c < chords.size(); ++c) {
                ++selections;
                try {
                    cls[c] = surgery_class(gens[a].curve, eps, chords[c], g, rule);
                } catch (const std::runtime_error& e) {
                    bad[c] = true;
                    rep.fail("select/" + tname + "/" + chords[c].to_string(),
                             {{"t", tname}, {"chord", chords[c].to_string()}}, "candidate class", e.what());
                }
            }
            for (const auto& r : R) {
                const std::string id = "t=" + tname + "/" + r.label;
                if (std::any_of(r.word.begin(), r.word.end(), [&](const Letter& l) { return bad[l.gen]; })) {
                    rep.check(false, id, {{"t", tname}}, "identity", "surgery class selection failed");
                    continue;
                }
                const IntMatrix M = evaluate(r, cls);
                rep.check(M.is_identity(), id, {{"t", tname}, {"word", format_word(r.word, qn)}}, "identity", to_json(M));
            }
        }
    rep.notes["relators"] = R.size();
    rep.notes["twists"] = 2 * gens.size();
    rep.notes["class_selections"] = selections;
    rep.elapsed_ms = sw.ms();
    return rep;
}

SuiteReport verify_reducibility_sweep(int g) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "reducibility";
    rep.g = g;
    const int n = 2 * g + 1;
    const auto chords = q_generators(g);
    std::set<std::pair<std::string, ConvexCurve>> expected;
    if (g == 3) expected.insert({"auxiliary (vii)", chord(4, 7, n)});
    std::map<int, std::size_t> by_condition;
    nlohmann::json exceptions = nlohmann::json::array();
    for (const auto& r : generate_RSp_hat(g))
        for (const auto& c : chords) {
            const auto v = reducibility_criterion(r, c, g);
            ++by_condition[v.condition];
            const bool exc = v.condition == 0;
            if (exc) exceptions.push_back({{"relator", r.label}, {"chord", c.to_string()}});
            const bool want = expected.count({r.label, c}) > 0;
            rep.check(exc == want, r.label + "/" + c.to_string(), {{"relator", r.label}, {"chord", c.to_string()}},
                      want ? "exception" : "criterion holds",
                      exc ? nlohmann::json("exception") : nlohmann::json({{"condition", v.condition}}));
        }
    rep.notes["exceptions"] = exceptions;
    rep.notes["expected_exceptions"] = expected.size();
    nlohmann::json conds;
    for (const auto& [k, cnt] : by_condition) conds[std::to_string(k)] = cnt;
    rep.notes["by_condition"] = conds;
    rep.elapsed_ms = sw.ms();
    return rep;
}

SuiteReport verify_lemma_the_fact(int g) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "the-fact";
    rep.g = g;
    const int n = 2 * g + 1;
    const auto all = all_convex_curves(n);
    int worst = 0;
    for (const auto& a : sp_generators(g))
        for (const auto& d : all) {
            const int i = geometric_intersection(a.curve, d);
            worst = std::max(worst, i);
            rep.check(i <= 4, a.name + "/" + d.to_string(), {{"a", a.curve.to_string()}, {"d", d.to_string()}}, "<= 4", i);
        }
    const ConvexCurve non_example = ConvexCurve::from_points({1, 2, 4, 6}, n);
    const int m = max_convex_intersection(non_example);
    rep.check(m > 4, "non-example/" + non_example.to_string(), {{"a", non_example.to_string()}}, "> 4", m);
    rep.notes["max_over_generators"] = worst;
    rep.notes["non_example_max"] = m;
    rep.elapsed_ms = sw.ms();
    return rep;
}

}  // namespace ht
