#include "g2sub/render.hpp"

#include <sstream>

namespace g2sub {

Json to_json(const Rational& x) { return to_string(x); }

namespace {

template <class Form>
Json coeffs(const Form& f) {
    Json a = Json::array();
    for (int i = 0; i < 4; ++i) a.push_back(to_string(f[i]));
    return a;
}

std::string cell(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string stalk_entry(const std::vector<StalkTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += "+";
        out += name(t.system) + "[" + std::to_string(t.shift) + "]";
    }
    return out;
}

std::vector<std::string> object_names() {
    std::vector<std::string> out;
    for (SimpleObject o : kSimpleObjects) out.push_back(name(o));
    return out;
}

Table int_table(std::vector<std::string> rows, std::vector<std::string> cols, const IntMatrix6& m) {
    Table t{std::move(rows), std::move(cols), {}};
    for (const auto& row : m) {
        std::vector<Json> r;
        for (int v : row) r.emplace_back(v);
        t.entries.push_back(std::move(r));
    }
    return t;
}

Table microlocal_table(const MicrolocalTable& m) {
    Table t{object_names(), {"Lambda0", "Lambda1", "Lambda2", "Lambda3"}, {}};
    for (const auto& row : m) {
        std::vector<Json> r;
        for (LocalSystem l : row) r.emplace_back(name(l));
        t.entries.push_back(std::move(r));
    }
    return t;
}

}  // namespace

Json to_json(const BinaryCubic& r) { return coeffs(r); }
Json to_json(const DualCubic& s) { return coeffs(s); }

Json to_json(const GroupElement& h) {
    return Json::array({Json::array({to_string(h.a()), to_string(h.b())}), Json::array({to_string(h.c()), to_string(h.d())})});
}

Json to_json(const Line& u) { return Json::array({to_string(u.u1()), to_string(u.u2())}); }

Json to_json(const MatrixQ& m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        out.push_back(row);
    }
    return out;
}

Json to_json(const PolynomialZ& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_string(c));
    return out;
}

Json to_json(const RationalFunctionQ& f) {
    return Json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}, {"text", to_string(f)}};
}

Json to_json(const GroupElementT<QuadraticNumber>& h) {
    const auto& m = h.matrix();
    return Json::array({Json::array({to_string(m(0, 0)), to_string(m(0, 1))}),
                        Json::array({to_string(m(1, 0)), to_string(m(1, 1))})});
}

Json to_json(const StabilizerDescription& st) {
    Json elems = Json::array();
    for (const auto& h : st.elements) elems.push_back(to_json(h));
    for (const auto& h : st.extension_elements) elems.push_back(to_json(h));
    const std::string field = st.radicand == 1 ? "Q" : "Q(sqrt(" + to_string(st.radicand) + "))";
    return Json{{"dimension", st.dimension},
                {"component_group", name(st.component_group)},
                {"order", st.order()},
                {"field", field},
                {"elements", elems}};
}

Json to_json(const Root& r) {
    return Json{{"a", r.a}, {"b", r.b}, {"side", r.side == Side::Dual ? "dual" : "G2"}, {"name", name(r)}};
}

Table sheaf_table(const std::string& which, const SheafData& data) {
    if (which == "stalks") {
        Table t{object_names(), {"C0", "C1", "C2", "C3"}, {}};
        for (const auto& row : data.stalks) {
            std::vector<Json> r;
            for (const auto& terms : row) r.emplace_back(stalk_entry(terms));
            t.entries.push_back(std::move(r));
        }
        return t;
    }
    if (which == "geomult")
        return int_table(object_names(), {"1!_C0", "1!_C1", "1!_C2", "1!_C3", "R!_C3", "E!_C3"},
                         geometric_multiplicity_matrix(data));
    if (which == "repmult") {
        std::vector<std::string> cols;
        for (Irreducible p : kIrreducibles) cols.push_back(name(p));
        return int_table({"M0", "M1", "M2", "M3", "M3rho", "M3eps"}, cols, rep_multiplicity_matrix(data));
    }
    if (which == "evs") return microlocal_table(data.evs);
    if (which == "nevs") {
        MicrolocalTable m;
        for (SimpleObject o : kSimpleObjects) m[static_cast<size_t>(index(o))] = nevs(o, data);
        return microlocal_table(m);
    }
    if (which == "fourier") {
        Table t{object_names(), {"dual", "primal"}, {}};
        for (SimpleObject o : kSimpleObjects) {
            const FourierImage f = fourier(o, data);
            const char* sys = f.label == LocalSystemLabel::triv ? "1" : (f.label == LocalSystemLabel::refl ? "R" : "E");
            t.entries.push_back({std::string("IC(") + sys + "_C" + std::to_string(f.dual_orbit) + "*)", name(f.primal)});
        }
        return t;
    }
    throw std::invalid_argument("unknown table '" + which + "' (expected stalks, geomult, repmult, evs, nevs, fourier)");
}

std::string render_markdown(const Table& t) {
    std::ostringstream out;
    out << "|  |";
    for (const auto& c : t.cols) out << " " << c << " |";
    out << "\n|---|";
    for (size_t i = 0; i < t.cols.size(); ++i) out << "---|";
    out << "\n";
    for (size_t i = 0; i < t.rows.size(); ++i) {
        out << "| " << t.rows[i] << " |";
        for (const auto& e : t.entries[i]) out << " " << cell(e) << " |";
        out << "\n";
    }
    return out.str();
}

std::string render_csv(const Table& t) {
    std::ostringstream out;
    for (const auto& c : t.cols) out << "," << c;
    out << "\n";
    for (size_t i = 0; i < t.rows.size(); ++i) {
        out << t.rows[i];
        for (const auto& e : t.entries[i]) out << "," << cell(e);
        out << "\n";
    }
    return out.str();
}

Json to_json(const Table& t) {
    Json entries = Json::array();
    for (const auto& row : t.entries) entries.push_back(Json(row));
    return Json{{"rows", t.rows}, {"cols", t.cols}, {"entries", entries}};
}

}  // namespace g2sub
