#include "lya/manifest.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>

namespace lya {

using ojson = nlohmann::ordered_json;

namespace {

ParseError at(const std::string& path, const std::string& what) {
    return ParseError("manifest " + path + ": " + what);
}

const ojson* find(const ojson& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

void check_keys(const ojson& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) known = known || it.key() == k;
        if (!known) throw at(path.empty() ? "top level" : path, "unknown key '" + it.key() + "'");
    }
}

std::size_t get_uint(const ojson& j, const std::string& path, std::size_t min_value = 0) {
    if (!j.is_number_unsigned()) throw at(path, "expected a nonnegative integer");
    std::size_t v = j.get<std::size_t>();
    if (v < min_value) throw at(path, "value must be at least " + std::to_string(min_value));
    return v;
}

std::string get_str(const ojson& j, const std::string& path) {
    if (!j.is_string()) throw at(path, "expected a string");
    return j.get<std::string>();
}

Scalar get_scalar(const Field& f, const ojson& j, const std::string& path) {
    if (!j.is_string()) throw at(path, "scalars are strings like \"3/7\"");
    try {
        return Scalar::parse(f, j.get<std::string>());
    } catch (const ParseError& e) {
        throw at(path, e.what());
    }
}

// 1-based basis index against dim
std::size_t get_index(const ojson& j, const std::string& path, std::size_t dim) {
    std::size_t v = get_uint(j, path, 1);
    if (v > dim) throw at(path, "index " + std::to_string(v) + " exceeds dimension");
    return v - 1;
}

std::vector<std::string> get_labels(const ojson* j, const std::string& path, std::size_t count,
                                    const char* stem) {
    std::vector<std::string> out;
    if (j) {
        if (!j->is_array() || j->size() != count)
            throw at(path, "expected an array of " + std::to_string(count) + " labels");
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(get_str((*j)[i], path + "[" + std::to_string(i) + "]"));
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t k = i + 1; k < count; ++k)
                if (out[i] == out[k]) throw at(path, "duplicate label '" + out[i] + "'");
    } else {
        for (std::size_t i = 0; i < count; ++i) out.push_back(stem + std::to_string(i + 1));
    }
    return out;
}

Matrix get_matrix(const Field& f, const ojson& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw at(path, "expected a nonempty array of rows");
    std::size_t rows = j.size(), cols = 0;
    for (std::size_t r = 0; r < rows; ++r)
        if (!j[r].is_array() || j[r].empty())
            throw at(path, "row " + std::to_string(r + 1) + " must be a nonempty array");
        else if (r == 0)
            cols = j[r].size();
        else if (j[r].size() != cols)
            throw at(path, "rows differ in length");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = get_scalar(f, j[r][c], path + "[" + std::to_string(r + 1) + "][" +
                                                    std::to_string(c + 1) + "]");
    return m;
}

std::vector<Matrix> get_matrices(const Field& f, const ojson& j, const std::string& path,
                                 std::size_t count) {
    if (!j.is_array() || j.size() != count)
        throw at(path, "expected an array of " + std::to_string(count) + " matrices");
    std::vector<Matrix> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(get_matrix(f, j[i], path + "[" + std::to_string(i + 1) + "]"));
    return out;
}

LyAlgebra::BinaryEntry get_bin_entry(const Field& f, std::size_t dim, const ojson& j,
                                     const std::string& path, bool pair_slot) {
    if (!j.is_array() || j.size() != 4) throw at(path, "expected [i, j, k, \"c\"]");
    LyAlgebra::BinaryEntry e{get_index(j[0], path, dim), get_index(j[1], path, dim),
                             get_index(j[2], path, dim), get_scalar(f, j[3], path)};
    if (pair_slot && e.i >= e.j) throw at(path, "first two indices must satisfy i < j");
    return e;
}

LyAlgebra::TernaryEntry get_tern_entry(const Field& f, std::size_t dim, const ojson& j,
                                       const std::string& path) {
    if (!j.is_array() || j.size() != 5) throw at(path, "expected [i, j, k, l, \"c\"]");
    LyAlgebra::TernaryEntry e{get_index(j[0], path, dim), get_index(j[1], path, dim),
                              get_index(j[2], path, dim), get_index(j[3], path, dim),
                              get_scalar(f, j[4], path)};
    if (e.i >= e.j) throw at(path, "first two indices must satisfy i < j");
    return e;
}

// full nested table [i]...[last] of scalars, depth levels of size dim each
std::vector<Scalar> get_raw_table(const Field& f, const ojson& j, const std::string& path,
                                  std::size_t dim, std::size_t depth) {
    std::vector<Scalar> flat;
    auto rec = [&](auto&& self, const ojson& node, const std::string& p, std::size_t level) -> void {
        if (level == depth) {
            flat.push_back(get_scalar(f, node, p));
            return;
        }
        if (!node.is_array() || node.size() != dim)
            throw at(p, "expected an array of " + std::to_string(dim) + " entries");
        for (std::size_t i = 0; i < dim; ++i)
            self(self, node[i], p + "[" + std::to_string(i + 1) + "]", level + 1);
    };
    rec(rec, j, path, 0);
    return flat;
}

AlgebraBlock parse_algebra(const Field& f, const ojson& j) {
    if (!j.is_object()) throw at("algebra", "expected an object");
    check_keys(j, "algebra", {"dim", "labels", "binary", "ternary", "binary_raw", "ternary_raw"});
    const ojson* dim = find(j, "dim");
    if (!dim) throw at("algebra", "missing 'dim'");
    AlgebraBlock b;
    b.dim = get_uint(*dim, "algebra.dim", 1);
    b.labels = get_labels(find(j, "labels"), "algebra.labels", b.dim, "e");
    b.raw = find(j, "binary_raw") || find(j, "ternary_raw");
    if (b.raw && (find(j, "binary") || find(j, "ternary")))
        throw at("algebra", "raw tables and sparse entries cannot be mixed");
    if (b.raw) {
        b.binary_raw.assign(b.dim * b.dim * b.dim, Scalar(f));
        b.ternary_raw.assign(b.dim * b.dim * b.dim * b.dim, Scalar(f));
        if (const ojson* r = find(j, "binary_raw"))
            b.binary_raw = get_raw_table(f, *r, "algebra.binary_raw", b.dim, 3);
        if (const ojson* r = find(j, "ternary_raw"))
            b.ternary_raw = get_raw_table(f, *r, "algebra.ternary_raw", b.dim, 4);
        return b;
    }
    if (const ojson* e = find(j, "binary")) {
        if (!e->is_array()) throw at("algebra.binary", "expected an array of entries");
        for (std::size_t i = 0; i < e->size(); ++i)
            b.binary.push_back(get_bin_entry(
                f, b.dim, (*e)[i], "algebra.binary[" + std::to_string(i + 1) + "]", true));
    }
    if (const ojson* e = find(j, "ternary")) {
        if (!e->is_array()) throw at("algebra.ternary", "expected an array of entries");
        for (std::size_t i = 0; i < e->size(); ++i)
            b.ternary.push_back(
                get_tern_entry(f, b.dim, (*e)[i], "algebra.ternary[" + std::to_string(i + 1) + "]"));
    }
    return b;
}

LeibnizBlock parse_leibniz(const Field& f, const ojson& j) {
    if (!j.is_object()) throw at("leibniz", "expected an object");
    check_keys(j, "leibniz", {"dim", "labels", "entries"});
    const ojson* dim = find(j, "dim");
    if (!dim) throw at("leibniz", "missing 'dim'");
    LeibnizBlock b;
    b.dim = get_uint(*dim, "leibniz.dim", 1);
    b.labels = get_labels(find(j, "labels"), "leibniz.labels", b.dim, "e");
    if (const ojson* e = find(j, "entries")) {
        if (!e->is_array()) throw at("leibniz.entries", "expected an array of entries");
        for (std::size_t i = 0; i < e->size(); ++i) {
            LyAlgebra::BinaryEntry raw = get_bin_entry(
                f, b.dim, (*e)[i], "leibniz.entries[" + std::to_string(i + 1) + "]", false);
            b.entries.push_back(LeibnizAlgebra::Entry{raw.i, raw.j, raw.k, raw.c});
        }
    }
    return b;
}

RepBlock parse_representation(const Field& f, const ojson& j, std::size_t alg_dim) {
    RepBlock b;
    if (j.is_string()) {
        if (j.get<std::string>() != "adjoint")
            throw at("representation", "expected \"adjoint\" or an explicit object");
        return b;
    }
    if (!j.is_object()) throw at("representation", "expected \"adjoint\" or an object");
    check_keys(j, "representation", {"dim", "rho", "d", "theta"});
    const ojson *dim = find(j, "dim"), *rho = find(j, "rho"), *dop = find(j, "d"),
                *th = find(j, "theta");
    if (!dim || !rho || !dop || !th)
        throw at("representation", "explicit form needs 'dim', 'rho', 'd', 'theta'");
    b.adjoint = false;
    b.dim = get_uint(*dim, "representation.dim", 1);
    b.rho = get_matrices(f, *rho, "representation.rho", alg_dim);
    b.d_ops = get_matrices(f, *dop, "representation.d", alg_dim * alg_dim);
    b.theta_ops = get_matrices(f, *th, "representation.theta", alg_dim * alg_dim);
    return b;
}

ActionBlock parse_action(const Field& f, const ojson& j) {
    if (!j.is_object()) throw at("action", "expected an object");
    check_keys(j, "action", {"group", "labels", "matrices"});
    const ojson* g = find(j, "group");
    if (!g || !g->is_object()) throw at("action.group", "expected an object");
    check_keys(*g, "action.group", {"cyclic", "table"});
    ActionBlock b;
    const ojson *cyc = find(*g, "cyclic"), *tab = find(*g, "table");
    if (!!cyc == !!tab) throw at("action.group", "give exactly one of 'cyclic' or 'table'");
    std::size_t order = 0;
    if (cyc) {
        b.cyclic = get_uint(*cyc, "action.group.cyclic", 1);
        order = *b.cyclic;
    } else {
        if (!tab->is_array() || tab->empty()) throw at("action.group.table", "expected rows");
        order = tab->size();
        for (std::size_t r = 0; r < order; ++r) {
            const ojson& row = (*tab)[r];
            std::string p = "action.group.table[" + std::to_string(r + 1) + "]";
            if (!row.is_array() || row.size() != order)
                throw at(p, "expected " + std::to_string(order) + " entries");
            std::vector<std::size_t> out;
            for (std::size_t c = 0; c < order; ++c)
                out.push_back(get_index(row[c], p + "[" + std::to_string(c + 1) + "]", order));
            b.table.push_back(std::move(out));
        }
    }
    b.labels = get_labels(find(j, "labels"), "action.labels", order, "g");
    const ojson* mats = find(j, "matrices");
    if (!mats) throw at("action", "missing 'matrices'");
    b.matrices = get_matrices(f, *mats, "action.matrices", order);
    return b;
}

JetBlock parse_jet(const Field& f, const ojson& j, const std::string& path, std::size_t alg_dim) {
    if (!j.is_object()) throw at(path, "expected an object");
    check_keys(j, path, {"terms"});
    const ojson* terms = find(j, "terms");
    if (!terms || !terms->is_array() || terms->empty())
        throw at(path + ".terms", "expected a nonempty array of per-order terms");
    JetBlock b;
    for (std::size_t n = 0; n < terms->size(); ++n) {
        const ojson& t = (*terms)[n];
        std::string p = path + ".terms[" + std::to_string(n + 1) + "]";
        if (!t.is_object()) throw at(p, "expected an object");
        check_keys(t, p, {"even", "odd"});
        JetTerm term;
        if (const ojson* e = find(t, "even")) {
            if (!e->is_array()) throw at(p + ".even", "expected an array of entries");
            for (std::size_t i = 0; i < e->size(); ++i)
                term.even.push_back(get_bin_entry(
                    f, alg_dim, (*e)[i], p + ".even[" + std::to_string(i + 1) + "]", true));
        }
        if (const ojson* o = find(t, "odd")) {
            if (!o->is_array()) throw at(p + ".odd", "expected an array of entries");
            for (std::size_t i = 0; i < o->size(); ++i)
                term.odd.push_back(
                    get_tern_entry(f, alg_dim, (*o)[i], p + ".odd[" + std::to_string(i + 1) + "]"));
        }
        b.terms.push_back(std::move(term));
    }
    return b;
}

OptionsBlock parse_options(const ojson& j) {
    if (!j.is_object()) throw at("options", "expected an object");
    check_keys(j, "options", {"level", "order", "subgroup"});
    OptionsBlock b;
    if (const ojson* v = find(j, "level")) b.level = get_uint(*v, "options.level", 1);
    if (const ojson* v = find(j, "order")) b.order = get_uint(*v, "options.order", 1);
    if (const ojson* v = find(j, "subgroup")) {
        if (!v->is_array() || v->empty())
            throw at("options.subgroup", "expected a nonempty array of element labels");
        std::vector<std::string> s;
        for (std::size_t i = 0; i < v->size(); ++i)
            s.push_back(get_str((*v)[i], "options.subgroup[" + std::to_string(i + 1) + "]"));
        b.subgroup = std::move(s);
    }
    return b;
}

std::size_t entry_l(const LyAlgebra::TernaryEntry& e) { return e.l; }
std::size_t entry_l(const LyAlgebra::BinaryEntry&) { return 0; }
std::size_t entry_l(const LeibnizAlgebra::Entry&) { return 0; }

// canonical order and merged duplicates for sparse entry lists
template <typename E>
std::vector<E> tidy_entries(std::vector<E> es, bool ternary) {
    auto key = [ternary](const E& e) {
        return std::array<std::size_t, 4>{e.i, e.j, e.k, ternary ? entry_l(e) : 0};
    };
    std::sort(es.begin(), es.end(), [&](const E& a, const E& b) { return key(a) < key(b); });
    std::vector<E> out;
    for (E& e : es) {
        if (!out.empty() && key(out.back()) == key(e))
            out.back().c = out.back().c + e.c;
        else
            out.push_back(std::move(e));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    return out;
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
    ojson root;
    try {
        root = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("manifest: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("manifest: top level must be an object");
    check_keys(root, "",
               {"field", "algebra", "leibniz", "representation", "action", "jet", "jet2",
                "options"});

    Manifest m;
    if (const ojson* f = find(root, "field")) {
        if (f->is_string()) {
            if (f->get<std::string>() != "rational")
                throw at("field", "expected \"rational\" or {\"prime\": p}");
            m.field = Field::rationals();
        } else if (f->is_object()) {
            check_keys(*f, "field", {"prime"});
            const ojson* p = find(*f, "prime");
            if (!p) throw at("field", "missing 'prime'");
            m.field = Field::prime(get_uint(*p, "field.prime", 2));
        } else {
            throw at("field", "expected \"rational\" or {\"prime\": p}");
        }
    }

    if (const ojson* a = find(root, "algebra")) m.algebra = parse_algebra(m.field, *a);
    if (const ojson* l = find(root, "leibniz")) m.leibniz = parse_leibniz(m.field, *l);
    if (m.algebra && m.leibniz)
        throw ParseError("manifest: give only one of 'algebra' and 'leibniz'");

    std::size_t dim = m.algebra ? m.algebra->dim : (m.leibniz ? m.leibniz->dim : 0);
    auto need_dim = [&](const char* block) {
        if (dim == 0)
            throw ParseError(std::string("manifest ") + block +
                             ": requires an algebra or leibniz block");
    };
    if (const ojson* r = find(root, "representation")) {
        need_dim("representation");
        m.representation = parse_representation(m.field, *r, dim);
    }
    if (const ojson* a = find(root, "action")) {
        need_dim("action");
        m.action = parse_action(m.field, *a);
    }
    if (const ojson* j = find(root, "jet")) {
        need_dim("jet");
        m.jet = parse_jet(m.field, *j, "jet", dim);
    }
    if (const ojson* j = find(root, "jet2")) {
        need_dim("jet2");
        m.jet2 = parse_jet(m.field, *j, "jet2", dim);
    }
    if (const ojson* o = find(root, "options")) m.options = parse_options(*o);
    return m;
}

namespace {

ojson field_json(const Field& f) {
    if (f.is_rational()) return "rational";
    return ojson{{"prime", f.p}};
}

ojson entry_json(const LyAlgebra::BinaryEntry& e) {
    return ojson::array({e.i + 1, e.j + 1, e.k + 1, e.c.str()});
}
ojson entry_json(const LyAlgebra::TernaryEntry& e) {
    return ojson::array({e.i + 1, e.j + 1, e.k + 1, e.l + 1, e.c.str()});
}
ojson entry_json(const LeibnizAlgebra::Entry& e) {
    return ojson::array({e.i + 1, e.j + 1, e.k + 1, e.c.str()});
}

template <typename E>
ojson entries_json(const std::vector<E>& es, bool ternary) {
    ojson out = ojson::array();
    for (const E& e : tidy_entries(es, ternary)) out.push_back(entry_json(e));
    return out;
}

ojson matrix_json(const Matrix& m) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

// nested table of depth levels over a flat scalar list
ojson raw_json(const std::vector<Scalar>& flat, std::size_t dim, std::size_t depth) {
    std::size_t pos = 0;
    auto rec = [&](auto&& self, std::size_t level) -> ojson {
        if (level == depth) return flat[pos++].str();
        ojson arr = ojson::array();
        for (std::size_t i = 0; i < dim; ++i) arr.push_back(self(self, level + 1));
        return arr;
    };
    return rec(rec, 0);
}

ojson labels_json(const std::vector<std::string>& ls) {
    ojson out = ojson::array();
    for (const std::string& s : ls) out.push_back(s);
    return out;
}

}  // namespace

std::string serialize_manifest(const Manifest& m) {
    ojson root;
    root["field"] = field_json(m.field);
    if (m.algebra) {
        const AlgebraBlock& b = *m.algebra;
        ojson a;
        a["dim"] = b.dim;
        a["labels"] = labels_json(b.labels);
        if (b.raw) {
            a["binary_raw"] = raw_json(b.binary_raw, b.dim, 3);
            a["ternary_raw"] = raw_json(b.ternary_raw, b.dim, 4);
        } else {
            ojson bin = entries_json(b.binary, false), ter = entries_json(b.ternary, true);
            if (!bin.empty()) a["binary"] = std::move(bin);
            if (!ter.empty()) a["ternary"] = std::move(ter);
        }
        root["algebra"] = std::move(a);
    }
    if (m.leibniz) {
        ojson l;
        l["dim"] = m.leibniz->dim;
        l["labels"] = labels_json(m.leibniz->labels);
        ojson es = entries_json(m.leibniz->entries, false);
        if (!es.empty()) l["entries"] = std::move(es);
        root["leibniz"] = std::move(l);
    }
    if (m.representation) {
        const RepBlock& r = *m.representation;
        if (r.adjoint) {
            root["representation"] = "adjoint";
        } else {
            ojson rep;
            rep["dim"] = r.dim;
            ojson rho = ojson::array(), dop = ojson::array(), th = ojson::array();
            for (const Matrix& x : r.rho) rho.push_back(matrix_json(x));
            for (const Matrix& x : r.d_ops) dop.push_back(matrix_json(x));
            for (const Matrix& x : r.theta_ops) th.push_back(matrix_json(x));
            rep["rho"] = std::move(rho);
            rep["d"] = std::move(dop);
            rep["theta"] = std::move(th);
            root["representation"] = std::move(rep);
        }
    }
    if (m.action) {
        const ActionBlock& b = *m.action;
        ojson act;
        if (b.cyclic) {
            act["group"] = ojson{{"cyclic", *b.cyclic}};
        } else {
            ojson tab = ojson::array();
            for (const auto& row : b.table) {
                ojson r = ojson::array();
                for (std::size_t v : row) r.push_back(v + 1);
                tab.push_back(std::move(r));
            }
            act["group"] = ojson{{"table", std::move(tab)}};
        }
        act["labels"] = labels_json(b.labels);
        ojson mats = ojson::array();
        for (const Matrix& x : b.matrices) mats.push_back(matrix_json(x));
        act["matrices"] = std::move(mats);
        root["action"] = std::move(act);
    }
    auto jet_json = [](const JetBlock& b) {
        ojson terms = ojson::array();
        for (const JetTerm& t : b.terms) {
            ojson term = ojson::object();
            ojson e = entries_json(t.even, false), o = entries_json(t.odd, true);
            if (!e.empty()) term["even"] = std::move(e);
            if (!o.empty()) term["odd"] = std::move(o);
            terms.push_back(std::move(term));
        }
        return ojson{{"terms", std::move(terms)}};
    };
    if (m.jet) root["jet"] = jet_json(*m.jet);
    if (m.jet2) root["jet2"] = jet_json(*m.jet2);
    if (m.options.level || m.options.order || m.options.subgroup) {
        ojson o;
        if (m.options.level) o["level"] = *m.options.level;
        if (m.options.order) o["order"] = *m.options.order;
        if (m.options.subgroup) o["subgroup"] = labels_json(*m.options.subgroup);
        root["options"] = std::move(o);
    }
    return root.dump(2) + "\n";
}

LyAlgebra manifest_algebra(const Manifest& m) {
    if (m.algebra) {
        const AlgebraBlock& b = *m.algebra;
        if (b.raw) return LyAlgebra::from_raw(m.field, b.dim, b.binary_raw, b.ternary_raw, b.labels);
        return LyAlgebra::from_independent(m.field, b.dim, b.binary, b.ternary, b.labels);
    }
    if (m.leibniz) {
        LeibnizAlgebra lz(m.field, m.leibniz->dim, m.leibniz->entries, m.leibniz->labels);
        return leibniz_to_lya(lz);  // CheckError when the defining identity fails
    }
    throw UnsupportedConfig("manifest has no algebra or leibniz block");
}

Representation manifest_representation(const Manifest& m, const LyAlgebra& a) {
    if (!m.representation || m.representation->adjoint) return adjoint_rep(a);
    const RepBlock& r = *m.representation;
    return Representation(a, r.dim, r.rho, r.d_ops, r.theta_ops);
}

GroupAction manifest_action(const Manifest& m, const LyAlgebra& a) {
    if (!m.action) throw UnsupportedConfig("manifest has no action block");
    const ActionBlock& b = *m.action;
    FiniteGroup g = b.cyclic ? FiniteGroup::cyclic(*b.cyclic) : FiniteGroup::from_table(b.table);
    return GroupAction(std::move(g), a, b.matrices);
}

DeformationJet manifest_jet(const JetBlock& b, const Representation& adj,
                            std::optional<std::size_t> order) {
    const Field f = adj.field();
    CochainSpace c2(adj, 2), c3(adj, 3);
    std::size_t n = order.value_or(b.terms.size());
    std::vector<CochainPair> terms;
    terms.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec e = vec_zero(f, c2.dim()), o = vec_zero(f, c3.dim());
        if (k < b.terms.size()) {
            for (const auto& en : b.terms[k].even)
                e[c2.coord({c2.pair_index(en.i, en.j)}, 0, en.k)] += en.c;
            for (const auto& on : b.terms[k].odd)
                o[c3.coord({c3.pair_index(on.i, on.j)}, on.k, on.l)] += on.c;
        }
        terms.emplace_back(Cochain(c2, std::move(e)), Cochain(c3, std::move(o)));
    }
    return DeformationJet(adj, std::move(terms));
}

std::vector<std::size_t> manifest_subgroup(const Manifest& m) {
    if (!m.action) throw UnsupportedConfig("manifest has no action block");
    const ActionBlock& b = *m.action;
    std::size_t order = b.cyclic ? *b.cyclic : b.table.size();
    std::vector<std::size_t> out;
    if (!m.options.subgroup) {
        for (std::size_t g = 0; g < order; ++g) out.push_back(g);
        return out;
    }
    for (const std::string& want : *m.options.subgroup) {
        auto it = std::find(b.labels.begin(), b.labels.end(), want);
        if (it == b.labels.end())
            throw ParseError("unknown group element label '" + want + "'");
        out.push_back(static_cast<std::size_t>(it - b.labels.begin()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace lya
