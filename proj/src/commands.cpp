#include "lya/commands.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lya/deform.hpp"

namespace lya {
namespace {

using ojson = nlohmann::ordered_json;

ojson scalars_json(const Vec& v) {
    ojson a = ojson::array();
    for (const Scalar& c : v) a.push_back(c.str());
    return a;
}

ojson matrix_json(const Matrix& m) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(scalars_json(m.row(i)));
    return rows;
}

// machine indices are 1-based throughout
ojson witness_json(const std::vector<std::size_t>& w) {
    ojson a = ojson::array();
    for (std::size_t i : w) a.push_back(i + 1);
    return a;
}

ojson check_entry(const std::string& target, const CheckFailure& f,
                  std::optional<std::size_t> order = {}) {
    ojson e;
    e["target"] = target;
    e["ok"] = false;
    if (order) e["order"] = *order;
    e["rule"] = f.rule;
    if (!f.witness.empty()) e["witness"] = witness_json(f.witness);
    if (f.residual.rows() > 0) e["residual"] = matrix_json(f.residual);
    return e;
}

ojson check_entry(const std::string& target, const CheckReport& r) {
    if (!r.ok) return check_entry(target, *r.failure);
    return ojson{{"target", target}, {"ok", true}};
}

ojson check_entry(const std::string& target, const JetReport& r) {
    if (!r.ok) return check_entry(target, *r.failure, r.order);
    return ojson{{"target", target}, {"ok", true}};
}

ojson skip_entry(const std::string& target) {
    return ojson{{"target", target}, {"skipped", true}};
}

std::string vec_text(const ojson& coords) {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += coords[i].get<std::string>();
    }
    return s + ")";
}

std::string residual_text(const ojson& rows) {
    if (rows.size() == 1) return vec_text(rows[0]);
    std::string s = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += "; ";
        s += vec_text(rows[i]);
    }
    return s + "]";
}

std::string check_line(const ojson& e) {
    std::string s = e["target"].get<std::string>() + ": ";
    if (e.contains("skipped")) return s + "skipped";
    if (e["ok"].get<bool>()) return s + "ok";
    std::string msg = "violated " + e["rule"].get<std::string>();
    if (e.contains("witness")) {
        msg += " at (";
        const ojson& w = e["witness"];
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) msg += ",";
            msg += std::to_string(w[i].get<std::size_t>());
        }
        msg += ")";
    }
    if (e.contains("residual")) msg += ", residual " + residual_text(e["residual"]);
    if (e.contains("order"))
        msg = "order " + std::to_string(e["order"].get<std::size_t>()) + ": " + msg;
    return s + msg;
}

Report assemble(const std::string& command, const std::string& subcommand,
                const std::string& verdict, int exit_code, const ojson& checks,
                const ojson& payload, const std::vector<std::string>& body) {
    Report r;
    r.machine["command"] = command;
    if (!subcommand.empty()) r.machine["subcommand"] = subcommand;
    r.machine["verdict"] = verdict;
    r.machine["exit"] = exit_code;
    r.machine["checks"] = checks;
    for (const auto& [k, v] : payload.items()) r.machine[k] = v;
    std::string head = command;
    if (!subcommand.empty()) head += " " + subcommand;
    r.text = head + ": " + verdict + "\n";
    for (const ojson& e : checks) r.text += "  " + check_line(e) + "\n";
    for (const std::string& line : body) r.text += "  " + line + "\n";
    r.exit_code = exit_code;
    return r;
}

Report structural_fail(const std::string& command, const std::string& subcommand,
                       const ojson& checks) {
    return assemble(command, subcommand, "fail", 1, checks, ojson::object(), {});
}

// prerequisite pipeline: each stage records a check entry, failed stages make
// dependents report as skipped instead of silently vanishing
struct Loaded {
    ojson checks = ojson::array();
    std::optional<LyAlgebra> alg;
    std::optional<Representation> rep;
    std::optional<GroupAction> act;
    std::optional<EquivariantModuleAction> mod;
    bool alg_ok = false, rep_ok = false, act_ok = false, mod_ok = false;
};

bool load_algebra(const Manifest& m, Loaded& L) {
    if (m.leibniz) {
        LeibnizAlgebra lz(m.field, m.leibniz->dim, m.leibniz->entries, m.leibniz->labels);
        CheckReport lr = check_leibniz(lz);
        L.checks.push_back(check_entry("leibniz", lr));
        if (!lr.ok) {
            L.checks.push_back(skip_entry("algebra"));
            return false;
        }
        L.alg = leibniz_to_lya(lz);
    } else {
        L.alg = manifest_algebra(m);
    }
    CheckReport ar = check_lya(*L.alg);
    L.checks.push_back(check_entry("algebra", ar));
    L.alg_ok = ar.ok;
    return ar.ok;
}

bool load_representation(const Manifest& m, Loaded& L, bool force_adjoint) {
    if (!L.alg_ok) {
        L.checks.push_back(skip_entry("representation"));
        return false;
    }
    L.rep = force_adjoint ? adjoint_rep(*L.alg) : manifest_representation(m, *L.alg);
    CheckReport rr = check_representation(*L.rep);
    L.checks.push_back(check_entry("representation", rr));
    L.rep_ok = rr.ok;
    return rr.ok;
}

// group first; the action checker refuses unverified inputs
bool load_action(const Manifest& m, Loaded& L) {
    if (!L.alg_ok) {
        L.checks.push_back(skip_entry("group"));
        L.checks.push_back(skip_entry("action"));
        return false;
    }
    const ActionBlock& b = *m.action;
    FiniteGroup g = b.cyclic ? FiniteGroup::cyclic(*b.cyclic) : FiniteGroup::from_table(b.table);
    CheckReport gr = check_group(g);
    L.checks.push_back(check_entry("group", gr));
    if (!gr.ok) {
        L.checks.push_back(skip_entry("action"));
        return false;
    }
    L.act.emplace(std::move(g), *L.alg, b.matrices);
    CheckReport ar = check_action(*L.act);
    L.checks.push_back(check_entry("action", ar));
    L.act_ok = ar.ok;
    return ar.ok;
}

bool load_module(Loaded& L) {
    if (!L.act_ok) {
        L.checks.push_back(skip_entry("module"));
        return false;
    }
    L.mod = EquivariantModuleAction::adjoint(*L.act);
    CheckReport mr = check_equivariant_compat(*L.mod);
    L.checks.push_back(check_entry("module", mr));
    L.mod_ok = mr.ok;
    return mr.ok;
}

void reject_nonadjoint_rep(const Manifest& m, const std::string& command) {
    if (m.representation && !m.representation->adjoint)
        throw UnsupportedConfig(command + " works in adjoint coefficients; drop the " +
                                "representation block or set it to \"adjoint\"");
}

std::string label_of(const std::vector<std::string>& labels, std::size_t i,
                     const std::string& stem) {
    if (i < labels.size() && !labels[i].empty()) return labels[i];
    return stem + std::to_string(i + 1);
}

// "e1 - 1/2*e2" from (coefficient, label) terms; "0" when empty
std::string combo_text(const std::vector<std::pair<std::string, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [c, lab] : terms) {
        bool neg = !c.empty() && c[0] == '-';
        std::string mag = neg ? c.substr(1) : c;
        std::string t = mag == "1" ? lab : mag + "*" + lab;
        if (s.empty())
            s = (neg ? "-" : "") + t;
        else
            s += (neg ? " - " : " + ") + t;
    }
    return s;
}

std::string column_combo(const Matrix& m, std::size_t col, const std::vector<std::string>& labels,
                         const std::string& stem) {
    std::vector<std::pair<std::string, std::string>> terms;
    for (std::size_t q = 0; q < m.rows(); ++q)
        if (!m.at(q, col).is_zero())
            terms.push_back({m.at(q, col).str(), label_of(labels, q, stem)});
    return combo_text(terms);
}

}  // namespace

Report error_report(const std::string& command, const std::string& message) {
    Report r;
    r.machine["command"] = command;
    r.machine["verdict"] = "error";
    r.machine["exit"] = 2;
    r.machine["message"] = message;
    r.text = command + ": error\n  " + message + "\n";
    r.exit_code = 2;
    return r;
}

Report cmd_check(const Manifest& m) {
    Loaded L;
    load_algebra(m, L);
    if (m.representation) load_representation(m, L, false);
    if (m.action) {
        load_action(m, L);
        load_module(L);
    }
    bool all_ok = true;
    for (const ojson& e : L.checks)
        if (!e.contains("ok") || !e["ok"].get<bool>()) all_ok = false;
    return assemble("check", "", all_ok ? "pass" : "fail", all_ok ? 0 : 1, L.checks,
                    ojson::object(), {});
}

Report cmd_cohomology(const Manifest& m, bool equivariant) {
    const std::string name = equivariant ? "equivariant-cohomology" : "cohomology";
    const std::size_t level = m.options.level.value_or(1);
    Loaded L;
    if (!load_algebra(m, L)) return structural_fail(name, "", L.checks);

    CohomologyResult r;
    const Representation* rep = nullptr;
    if (equivariant) {
        reject_nonadjoint_rep(m, name);
        if (!m.action) throw UnsupportedConfig(name + " requires an action block");
        if (!load_action(m, L) || !load_module(L)) return structural_fail(name, "", L.checks);
        r = equivariant_cohomology(*L.mod, level);
        rep = &L.mod->rep();
    } else {
        if (!load_representation(m, L, false)) return structural_fail(name, "", L.checks);
        r = cohomology(*L.rep, level);
        rep = &*L.rep;
    }

    // representatives are stacked in full-complex coordinates even when the
    // reported cochain dims are the invariant ones
    const std::size_t full_even = CochainSpace(*rep, 2 * level).dim();
    ojson payload;
    payload["level"] = level;
    payload["arities"] = ojson::array({2 * level, 2 * level + 1});
    payload["dims"] = ojson{{"even_cochains", r.dim_even_space},
                            {"odd_cochains", r.dim_odd_space},
                            {"cocycles", r.Z.dim()},
                            {"coboundaries", r.B.dim()},
                            {"even_classes", r.h_even},
                            {"odd_classes", r.h_odd}};
    ojson reps = ojson::array();
    for (const Vec& v : r.reps) {
        Vec e(v.begin(), v.begin() + full_even);
        Vec o(v.begin() + full_even, v.end());
        reps.push_back(ojson{{"even", scalars_json(e)}, {"odd", scalars_json(o)}});
    }
    payload["representatives"] = reps;

    std::vector<std::string> body;
    body.push_back("level " + std::to_string(level) + ": cochain dims (" +
                   std::to_string(r.dim_even_space) + ", " + std::to_string(r.dim_odd_space) +
                   "), cocycles " + std::to_string(r.Z.dim()) + ", coboundaries " +
                   std::to_string(r.B.dim()) + ", classes (" + std::to_string(r.h_even) + ", " +
                   std::to_string(r.h_odd) + ")");
    for (std::size_t i = 0; i < reps.size(); ++i)
        body.push_back("representative " + std::to_string(i + 1) + ": even " +
                       vec_text(reps[i]["even"]) + ", odd " + vec_text(reps[i]["odd"]));
    return assemble(name, "", "pass", 0, L.checks, payload, body);
}

Report cmd_fixed_subalgebra(const Manifest& m) {
    const std::string name = "fixed-subalgebra";
    Loaded L;
    if (!load_algebra(m, L)) return structural_fail(name, "", L.checks);
    if (!m.action) throw UnsupportedConfig(name + " requires an action block");
    if (!load_action(m, L)) return structural_fail(name, "", L.checks);

    const std::vector<std::size_t> sub = manifest_subgroup(m);
    ojson sub_json = witness_json(sub);

    std::optional<FixedSubalgebra> fs;
    try {
        fs = fixed_subalgebra(*L.act, sub);
    } catch (const CheckError& err) {
        L.checks.push_back(check_entry("subgroup", err.failure));
        return assemble(name, "", "fail", 1, L.checks, ojson{{"subgroup", sub_json}}, {});
    }

    CheckReport ir = check_lya(fs->induced);
    L.checks.push_back(check_entry("induced-algebra", ir));
    CheckReport mr = check_morphism(fs->induced, L.act->algebra(), fs->inclusion);
    L.checks.push_back(check_entry("inclusion-morphism", mr));

    const std::size_t md = fs->induced.dim();
    const std::vector<std::string>& alab = L.act->algebra().labels();
    // the induced basis is new; fixed names avoid colliding with the ambient labels
    auto ind_label = [](std::size_t i) { return "u" + std::to_string(i + 1); };
    ojson bin = ojson::array(), ter = ojson::array();
    for (std::size_t i = 0; i < md; ++i)
        for (std::size_t j = i + 1; j < md; ++j)
            for (std::size_t k = 0; k < md; ++k) {
                const Scalar& c = fs->induced.b(i, j, k);
                if (!c.is_zero()) bin.push_back(ojson::array({i + 1, j + 1, k + 1, c.str()}));
            }
    for (std::size_t i = 0; i < md; ++i)
        for (std::size_t j = i + 1; j < md; ++j)
            for (std::size_t k = 0; k < md; ++k)
                for (std::size_t l = 0; l < md; ++l) {
                    const Scalar& c = fs->induced.t(i, j, k, l);
                    if (!c.is_zero())
                        ter.push_back(ojson::array({i + 1, j + 1, k + 1, l + 1, c.str()}));
                }

    ojson payload;
    payload["subgroup"] = sub_json;
    payload["fixed_dim"] = fs->fixed.dim();
    ojson labels = ojson::array();
    for (std::size_t i = 0; i < md; ++i) labels.push_back(ind_label(i));
    payload["induced"] =
        ojson{{"dim", md}, {"labels", labels}, {"binary", bin}, {"ternary", ter}};
    payload["inclusion"] = matrix_json(fs->inclusion);

    std::vector<std::string> body;
    std::string subs;
    for (std::size_t i = 0; i < sub_json.size(); ++i)
        subs += (i ? ", " : "") + std::to_string(sub_json[i].get<std::size_t>());
    body.push_back("subgroup {" + subs + "}: fixed dimension " + std::to_string(fs->fixed.dim()));
    for (std::size_t k = 0; k < md; ++k)
        body.push_back(ind_label(k) + " = " + column_combo(fs->inclusion, k, alab, "e"));
    for (std::size_t i = 0; i < md; ++i)
        for (std::size_t j = i + 1; j < md; ++j) {
            std::vector<std::pair<std::string, std::string>> terms;
            for (std::size_t k = 0; k < md; ++k)
                if (!fs->induced.b(i, j, k).is_zero())
                    terms.push_back({fs->induced.b(i, j, k).str(), ind_label(k)});
            if (!terms.empty())
                body.push_back("[" + ind_label(i) + "," + ind_label(j) + "] = " +
                               combo_text(terms));
        }
    for (std::size_t i = 0; i < md; ++i)
        for (std::size_t j = i + 1; j < md; ++j)
            for (std::size_t k = 0; k < md; ++k) {
                std::vector<std::pair<std::string, std::string>> terms;
                for (std::size_t l = 0; l < md; ++l)
                    if (!fs->induced.t(i, j, k, l).is_zero())
                        terms.push_back({fs->induced.t(i, j, k, l).str(), ind_label(l)});
                if (!terms.empty())
                    body.push_back("{" + ind_label(i) + "," + ind_label(j) + "," + ind_label(k) +
                                   "} = " + combo_text(terms));
            }

    const bool ok = ir.ok && mr.ok;
    return assemble(name, "", ok ? "pass" : "fail", ok ? 0 : 1, L.checks, payload, body);
}

Report cmd_deformation(const Manifest& m, const std::string& subcommand) {
    const std::string name = "deformation";
    if (subcommand != "check" && subcommand != "trivialize" && subcommand != "compare")
        throw UnsupportedConfig("unknown deformation subcommand: " + subcommand);
    if (!m.jet) throw UnsupportedConfig("deformation commands require a jet block");
    reject_nonadjoint_rep(m, name);

    Loaded L;
    if (!load_algebra(m, L)) return structural_fail(name, subcommand, L.checks);
    if (!load_representation(m, L, true)) return structural_fail(name, subcommand, L.checks);
    const bool equivariant = m.action.has_value() && subcommand != "compare";
    if (equivariant && (!load_action(m, L) || !load_module(L)))
        return structural_fail(name, subcommand, L.checks);

    DeformationJet jet = manifest_jet(*m.jet, *L.rep, m.options.order);
    const std::size_t full_even = CochainSpace(*L.rep, 2).dim();

    if (subcommand == "compare") {
        if (!m.jet2)
            throw UnsupportedConfig("deformation compare needs a second jet in \"jet2\"");
        DeformationJet jet2 = manifest_jet(*m.jet2, *L.rep, m.options.order);
        std::optional<Matrix> phi;
        try {
            phi = equivalent_first_order(jet, jet2);
        } catch (const CheckError& err) {
            L.checks.push_back(check_entry("jet", err.failure));
            return structural_fail(name, subcommand, L.checks);
        }
        if (phi) {
            ojson payload{{"phi", matrix_json(*phi)}};
            std::vector<std::string> body{"phi = " + residual_text(payload["phi"])};
            return assemble(name, subcommand, "equivalent", 0, L.checks, payload, body);
        }
        CohomologyResult h = cohomology(*L.rep, 1);
        Vec diff =
            h.B.reduce(vec_sub(infinitesimal(jet2).stacked(), infinitesimal(jet).stacked()));
        ojson even = scalars_json(Vec(diff.begin(), diff.begin() + full_even));
        ojson odd = scalars_json(Vec(diff.begin() + full_even, diff.end()));
        ojson payload{{"class_difference", ojson{{"even", even}, {"odd", odd}}}};
        std::vector<std::string> body{"class difference: even " + vec_text(even) + ", odd " +
                                      vec_text(odd)};
        return assemble(name, subcommand, "inequivalent", 1, L.checks, payload, body);
    }

    JetReport jr = equivariant ? check_equivariant_jet(jet, *L.act) : check_jet(jet);
    L.checks.push_back(check_entry("jet", jr));
    ojson payload;
    payload["order"] = jet.order();
    payload["equivariant"] = equivariant;

    if (subcommand == "check") {
        std::vector<std::string> body{"truncation order " + std::to_string(jet.order()) +
                                      (equivariant ? ", equivariant constraints on" : "")};
        return assemble(name, subcommand, jr.ok ? "pass" : "fail", jr.ok ? 0 : 1, L.checks,
                        payload, body);
    }

    // trivialize
    if (!jr.ok) return assemble(name, subcommand, "fail", 1, L.checks, payload, {});
    TrivializeOutcome out = equivariant ? trivialize(jet, *L.act) : trivialize(jet);
    if (out.trivialized) {
        ojson mats = ojson::array();
        for (std::size_t n = 1; n <= out.iso->order(); ++n)
            mats.push_back(matrix_json(out.iso->phi(n)));
        payload["iso"] = mats;
        payload["null_after_gauge"] = gauge_transform(jet, *out.iso).is_null();
        std::vector<std::string> body;
        for (std::size_t n = 1; n <= out.iso->order(); ++n)
            body.push_back("phi_" + std::to_string(n) + " = " +
                           residual_text(payload["iso"][n - 1]));
        body.push_back(payload["null_after_gauge"].get<bool>()
                           ? "transformed jet is null through order " +
                                 std::to_string(jet.order())
                           : "transformed jet is NOT null");
        return assemble(name, subcommand, "trivialized", 0, L.checks, payload, body);
    }
    payload["blocked_at"] = out.order;
    ojson even = scalars_json(Vec(out.obstruction->even.coords()));
    ojson odd = scalars_json(Vec(out.obstruction->odd.coords()));
    payload["obstruction"] = ojson{{"even", even}, {"odd", odd}};
    std::vector<std::string> body{
        "blocked at order " + std::to_string(out.order) + "; obstruction class: even " +
        vec_text(even) + ", odd " + vec_text(odd)};
    return assemble(name, subcommand, "obstructed", 1, L.checks, payload, body);
}

}  // namespace lya
