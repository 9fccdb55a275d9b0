#include "g2sub/conormal.hpp"
#include "g2sub/cubic_forms.hpp"
#include "g2sub/packets.hpp"
#include "g2sub/render.hpp"
#include "g2sub/root_data.hpp"
#include "g2sub/sheaves.hpp"
#include "g2sub/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace g2sub;

namespace {

enum class Status { ok = 0, check_failed = 1, input_error = 2 };

struct CommandResult {
    Status status = Status::ok;
    Json payload;
    std::string human_text;
    std::optional<Table> table;  // for md/csv output
};

std::array<Rational, 4> parse4(const std::vector<std::string>& xs, const char* what) {
    if (xs.size() != 4) throw ParseError(std::string(what) + " needs exactly 4 coefficients");
    return {parse_rational(xs[0]), parse_rational(xs[1]), parse_rational(xs[2]), parse_rational(xs[3])};
}

BinaryCubic cubic_arg(const std::vector<std::string>& xs) {
    const auto c = parse4(xs, "r");
    return BinaryCubic(c[0], c[1], c[2], c[3]);
}

DualCubic dual_arg(const std::vector<std::string>& xs) {
    const auto c = parse4(xs, "s");
    return DualCubic(c[0], c[1], c[2], c[3]);
}

std::string coeff_text(const Json& a) {
    std::string out = "(";
    for (size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + a[i].get<std::string>();
    return out + ")";
}

std::string matrix_text(const Json& m) {
    std::string out = "[";
    for (size_t i = 0; i < m.size(); ++i) {
        out += i ? ", [" : "[";
        for (size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + m[i][j].get<std::string>();
        out += "]";
    }
    return out + "]";
}

std::string stabilizer_text(const StabilizerDescription& st) {
    std::ostringstream out;
    const Json j = to_json(st);
    out << "stabilizer: dimension " << st.dimension << ", component group " << name(st.component_group)
        << ", elements over " << j["field"].get<std::string>() << "\n";
    for (const auto& h : j["elements"]) out << "  " << matrix_text(h) << "\n";
    return out.str();
}

CommandResult cmd_classify(const BinaryCubic& r) {
    CommandResult res;
    const OrbitClass o = classify(r);
    const auto d = hessian_quadratic(r);
    res.payload = {{"r", to_json(r)},
                   {"orbit", name(o)},
                   {"orbit_dimension", dimension(o)},
                   {"hessian", Json::array({to_string(d[0]), to_string(d[1]), to_string(d[2])})},
                   {"hessian_identically_zero", d[0] == 0 && d[1] == 0 && d[2] == 0},
                   {"discriminant", to_string(discriminant(r))},
                   {"multiplicity_structure", name(multiplicity_structure(r))}};
    std::ostringstream out;
    out << "r = " << coeff_text(to_json(r)) << "\n"
        << "orbit: " << name(o) << " (dimension " << dimension(o) << ")\n"
        << "hessian quadratic (d0, d1, d2): (" << to_string(d[0]) << ", " << to_string(d[1]) << ", " << to_string(d[2]) << ")\n"
        << "discriminant: " << to_string(discriminant(r)) << "\n"
        << "multiplicity structure: " << name(multiplicity_structure(r)) << "\n";
    if (!r.is_zero()) {
        const auto rl = rational_lines(r);
        Json lines = Json::array();
        for (const auto& [l, m] : rl.lines) lines.push_back({{"line", to_json(l)}, {"multiplicity", m}});
        res.payload["rational_lines"] = lines;
        res.payload["residual_degree"] = rl.residual_degree;
        out << "rational lines:";
        for (const auto& [l, m] : rl.lines) out << " [" << to_string(l.u1()) << ":" << to_string(l.u2()) << "]^" << m;
        if (rl.residual_degree) out << " (irreducible factor of degree " << rl.residual_degree << ")";
        out << "\n";
    }
    try {
        const auto st = stabilizer_of_cubic(r);
        res.payload["stabilizer"] = to_json(st);
        out << stabilizer_text(st);
    } catch (const IrrationalSplitting&) {
        res.payload["stabilizer"] = nullptr;
        out << "stabilizer: not computed (lines are not rational)\n";
    }
    res.human_text = out.str();
    return res;
}

CommandResult cmd_pair(const BinaryCubic& r, const DualCubic& s) {
    const Rational p = pairing(r, s);
    return {Status::ok, {{"r", to_json(r)}, {"s", to_json(s)}, {"pairing", to_string(p)}}, "pairing: " + to_string(p) + "\n", {}};
}

CommandResult cmd_moment(const BinaryCubic& r, const DualCubic& s) {
    const MatrixQ m = moment(r, s);
    const Json mj = to_json(m);
    return {Status::ok,
            {{"r", to_json(r)}, {"s", to_json(s)}, {"moment", mj}, {"trace", to_string(m.trace())}},
            "moment: " + matrix_text(mj) + "\ntrace: " + to_string(m.trace()) + "\n",
            {}};
}

CommandResult cmd_kernel(const BinaryCubic& r) {
    const auto k = conormal_kernel(r);
    Json basis = Json::array();
    std::string text = "conormal kernel of " + coeff_text(to_json(r)) + ": dimension " + std::to_string(k.size()) + "\n";
    for (const auto& s : k) {
        basis.push_back(to_json(s));
        text += "  " + coeff_text(to_json(s)) + "\n";
    }
    return {Status::ok, {{"r", to_json(r)}, {"dimension", k.size()}, {"basis", basis}}, text, {}};
}

CommandResult cmd_stabilizer(const BinaryCubic& r, const std::optional<DualCubic>& s) {
    const StabilizerDescription st = s ? microlocal_stabilizer({r, *s}) : stabilizer_of_cubic(r);
    Json p = {{"r", to_json(r)}};
    if (s) p["s"] = to_json(*s);
    p["stabilizer"] = to_json(st);
    return {Status::ok, p, stabilizer_text(st), {}};
}

CommandResult cmd_lambda_regular(const BinaryCubic& r, const DualCubic& s) {
    const auto k = in_lambda_regular(ConormalPoint{r, s});
    Json p = {{"r", to_json(r)}, {"s", to_json(s)}, {"stratum", k ? Json(*k) : Json(nullptr)}};
    return {Status::ok, p, k ? "regular stratum: Lambda" + std::to_string(*k) + "\n" : "not in a regular stratum\n", {}};
}

CommandResult cmd_tables(const std::string& which, const SheafData& data) {
    const Table t = sheaf_table(which, data);
    return {Status::ok, to_json(t), render_markdown(t), t};
}

Json packet_json(const Packet& p) {
    Json a = Json::array();
    for (Irreducible x : p) a.push_back(name(x));
    return a;
}

std::string packet_text(const Packet& p) {
    std::string out = "{";
    bool first = true;
    for (Irreducible x : p) {
        out += (first ? "" : ", ") + name(x);
        first = false;
    }
    return out + "}";
}

CommandResult cmd_packets_show(int psi) {
    const Packet a = packet(psi);
    const ArthurParamMeta meta = arthur_parameters()[static_cast<size_t>(psi)];
    Json members = Json::array();
    Table t{{}, {"A_psi character"}, {}};
    std::ostringstream out;
    out << "psi" << psi << ": A_psi = " << name(meta.component_group) << ", s_psi = " << meta.s_psi << "\n"
        << "A-packet: " << packet_text(a) << "\n"
        << "L-packet: " << packet_text(l_packet(psi)) << "\n";
    for (Irreducible p : a) {
        const std::string chr = name(*pairing_character(psi, p));
        members.push_back({{"rep", name(p)}, {"character", chr}});
        t.rows.push_back(name(p));
        t.entries.push_back({chr});
        out << "  " << name(p) << " -> " << chr << "\n";
    }
    Json payload = {{"psi", psi},
                    {"component_group", name(meta.component_group)},
                    {"s_psi", meta.s_psi},
                    {"packet", packet_json(a)},
                    {"l_packet", packet_json(l_packet(psi))},
                    {"characters", members}};
    return {Status::ok, payload, out.str(), t};
}

CommandResult cmd_stable(int psi, const std::string& basis) {
    const VirtualCharacter v = stable_virtual_character(psi);
    Json payload = {{"psi", psi}, {"basis", basis}};
    std::ostringstream out;
    Table t;
    if (basis == "irred") {
        payload["coefficients"] = v.coeffs;
        for (Irreducible p : kIrreducibles) t.cols.push_back(name(p));
        out << "Theta_psi" << psi << " = " << to_string(v) << "\n";
        t.entries.push_back({});
        for (int c : v.coeffs) t.entries.back().emplace_back(c);
    } else if (basis == "standard") {
        const auto x = express_in_standard_modules(v);
        Json coeffs = Json::array();
        for (const auto& c : x) coeffs.push_back(to_string(c));
        payload["basis_vectors"] = {"M0", "M1", "M2", "Theta_psi3"};
        payload["coefficients"] = coeffs;
        t.cols = {"M0", "M1", "M2", "Theta_psi3"};
        t.entries.push_back({});
        for (const auto& c : x) t.entries.back().emplace_back(to_string(c));
        out << "Theta_psi" << psi << " = (" << to_string(x[0]) << ") M0 + (" << to_string(x[1]) << ") M1 + ("
            << to_string(x[2]) << ") M2 + (" << to_string(x[3]) << ") Theta_psi3\n";
    } else {
        throw std::invalid_argument("basis must be irred or standard");
    }
    t.rows = {"Theta_psi" + std::to_string(psi)};
    return {Status::ok, payload, out.str(), t};
}

CommandResult cmd_aubert() {
    Json pairs = Json::array();
    Table t{{}, {"aubert", "via_fourier"}, {}};
    std::ostringstream out;
    for (Irreducible p : kIrreducibles) {
        pairs.push_back({{"rep", name(p)}, {"aubert", name(aubert(p))}, {"via_fourier", name(aubert_from_fourier(p))}});
        t.rows.push_back(name(p));
        t.entries.push_back({name(aubert(p)), name(aubert_from_fourier(p))});
        out << name(p) << " -> " << name(aubert(p)) << "\n";
    }
    return {Status::ok, {{"involution", pairs}}, out.str(), t};
}

CommandResult cmd_formal_degree(long q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    const auto d = adjoint_gamma_data();
    const Rational dim = eval_q(d.dim_sigma, Rational(q));
    const Rational g0 = eval_q(d.gamma0, Rational(q));
    Json payload = {{"q", q},
                    {"dim_sigma", to_string(dim)},
                    {"gamma0", to_string(g0)},
                    {"L_factor", d.L_factor},
                    {"dim_sigma_formula", to_json(d.dim_sigma)},
                    {"gamma0_formula", to_json(d.gamma0)}};
    std::ostringstream out;
    out << "q = " << q << "\n"
        << "dim sigma = " << to_string(dim) << "\n"
        << "gamma(0) = " << to_string(g0) << "\n";
    return {Status::ok, payload, out.str(), {}};
}

CommandResult cmd_roots() {
    Json dual = Json::array(), g2 = Json::array();
    Table t{{}, {"weight", "coroot"}, {}};
    std::ostringstream out;
    for (const auto& r : all_roots(Side::Dual)) {
        Json j = to_json(r);
        j["weight"] = root_weight(r, kLambdaSub);
        if (r.a >= 0 && r.b >= 0) {
            const auto [n, m] = coroot(r);
            j["coroot"] = {n, m};
        }
        dual.push_back(j);
        t.rows.push_back(name(r));
        t.entries.push_back({j["weight"], j.contains("coroot") ? Json(j["coroot"].dump()) : Json("")});
        out << name(r) << ": weight " << root_weight(r, kLambdaSub) << "\n";
    }
    for (const auto& r : all_roots(Side::G2)) g2.push_back(to_json(r));
    auto cartan = [](Side s) {
        const Eigen::Matrix2i c = cartan_matrix(s);
        return Json::array({Json::array({c(0, 0), c(0, 1)}), Json::array({c(1, 0), c(1, 1)})});
    };
    Json spaces = Json::object();
    for (int e = -2; e <= 2; ++e) {
        Json names = Json::array();
        for (const auto& r : weight_space(e)) names.push_back(name(r));
        spaces[std::to_string(e)] = names;
    }
    Json payload = {{"dual_roots", dual},
                    {"g2_roots", g2},
                    {"cartan_g2", cartan(Side::G2)},
                    {"cartan_dual", cartan(Side::Dual)},
                    {"lambda_sub", {kLambdaSub.e1, kLambdaSub.e2}},
                    {"weight_spaces", spaces}};
    return {Status::ok, payload, out.str(), t};
}

CommandResult cmd_verify(Scope scope, const SheafData& data) {
    const auto results = run_checks(scope, data);
    Json checks = Json::array();
    Table t{{}, {"status", "witness"}, {}};
    std::ostringstream out;
    int failed = 0;
    for (const auto& r : results) {
        checks.push_back({{"name", r.name}, {"scope", r.scope}, {"passed", r.passed}, {"witness", r.witness}});
        t.rows.push_back(r.name);
        t.entries.push_back({r.passed ? "pass" : "FAIL", r.witness});
        out << (r.passed ? "pass  " : "FAIL  ") << r.name;
        if (!r.witness.empty()) out << "  (" << r.witness << ")";
        out << "\n";
        if (!r.passed) ++failed;
    }
    out << results.size() - static_cast<size_t>(failed) << "/" << results.size() << " checks passed\n";
    Json payload = {{"scope", name(scope)},
                    {"total", results.size()},
                    {"failed", failed},
                    {"status", failed ? "check_failed" : "ok"},
                    {"checks", checks}};
    return {failed ? Status::check_failed : Status::ok, payload, out.str(), t};
}

int emit(const CommandResult& res, const std::string& format, const std::string& output) {
    std::string text;
    if (format == "json") text = res.payload.dump(2) + "\n";
    else if (format == "md" && res.table) text = render_markdown(*res.table);
    else if (format == "csv" && res.table) text = render_csv(*res.table);
    else text = res.human_text;
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output);
        if (!f) {
            std::cerr << "error: cannot write " << output << "\n";
            return static_cast<int>(Status::input_error);
        }
        f << text;
    }
    return static_cast<int>(res.status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for the subregular unipotent parameters of G2"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text", output;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "md", "csv", "text"}));
    app.add_option("--output", output, "write output to FILE");

    std::vector<std::string> r_args, s_args;
    int psi = 0;
    long q = 0;
    std::string which, basis = "irred", scope_arg = "all", fault;
    bool roots_json = false;

    auto* classify_cmd = app.add_subcommand("classify", "orbit, invariants and stabilizer of a cubic");
    classify_cmd->add_option("r", r_args, "r0 r1 r2 r3")->required()->expected(4);

    auto* pair_cmd = app.add_subcommand("pair", "pairing <r,s>");
    auto* moment_cmd = app.add_subcommand("moment", "moment map [r,s]");
    auto* lambda_cmd = app.add_subcommand("lambda-regular", "regular conormal stratum of (r,s)");
    for (auto* c : {pair_cmd, moment_cmd, lambda_cmd}) {
        c->add_option("--r", r_args, "r0 r1 r2 r3")->required()->expected(4);
        c->add_option("--s", s_args, "s0 s1 s2 s3")->required()->expected(4);
    }

    auto* kernel_cmd = app.add_subcommand("kernel", "basis of {s : [r,s] = 0}");
    kernel_cmd->add_option("r", r_args, "r0 r1 r2 r3")->required()->expected(4);

    auto* stab_cmd = app.add_subcommand("stabilizer", "stabilizer of r, or microlocal stabilizer of (r,s)");
    stab_cmd->add_option("r", r_args, "r0 r1 r2 r3")->required()->expected(4);
    stab_cmd->add_option("--s", s_args, "s0 s1 s2 s3")->expected(4);

    auto* tables_cmd = app.add_subcommand("tables", "encoded and derived sheaf tables");
    auto* emit_cmd = tables_cmd->add_subcommand("emit", "print one table");
    tables_cmd->require_subcommand(1);
    emit_cmd->add_option("--which", which, "stalks|geomult|repmult|evs|nevs|fourier")->required();
    emit_cmd->add_option("--inject-fault", fault, "perturb an encoded table (test mode)");

    auto* packets_cmd = app.add_subcommand("packets", "A-packets, stable characters, Aubert involution");
    packets_cmd->require_subcommand(1);
    auto* show_cmd = packets_cmd->add_subcommand("show", "members of the A-packet");
    show_cmd->add_option("--psi", psi, "0..3")->required()->check(CLI::Range(0, 3));
    auto* pstable_cmd = packets_cmd->add_subcommand("stable", "stable virtual character");
    pstable_cmd->add_option("--psi", psi, "0..3")->required()->check(CLI::Range(0, 3));
    pstable_cmd->add_option("--basis", basis, "irred|standard")->check(CLI::IsMember({"irred", "standard"}));
    auto* paubert_cmd = packets_cmd->add_subcommand("aubert", "Aubert involution");

    auto* aubert_cmd = app.add_subcommand("aubert", "Aubert involution");
    auto* stable_cmd = app.add_subcommand("stable", "stable virtual character");
    stable_cmd->add_option("--psi", psi, "0..3")->required()->check(CLI::Range(0, 3));
    stable_cmd->add_option("--basis", basis, "irred|standard")->check(CLI::IsMember({"irred", "standard"}));

    auto* fd_cmd = app.add_subcommand("formal-degree", "dim sigma and gamma(0) at q");
    fd_cmd->add_option("--q", q, "residue field size")->required();

    auto* roots_cmd = app.add_subcommand("roots", "root data of G2 and its dual");
    roots_cmd->add_flag("--json", roots_json, "same as --format json");

    auto* verify_cmd = app.add_subcommand("verify", "run the consistency checks");
    verify_cmd->add_option("scope", scope_arg, "all|geometry|sheaves|packets|g2");
    verify_cmd->add_option("--inject-fault", fault, "perturb an encoded table (test mode): evs|repmult|fiber|stalks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(Status::input_error);
    }

    try {
        const SheafData data = fault.empty() ? SheafData::encoded() : with_fault(fault);
        CommandResult res;
        if (classify_cmd->parsed()) res = cmd_classify(cubic_arg(r_args));
        else if (pair_cmd->parsed()) res = cmd_pair(cubic_arg(r_args), dual_arg(s_args));
        else if (moment_cmd->parsed()) res = cmd_moment(cubic_arg(r_args), dual_arg(s_args));
        else if (lambda_cmd->parsed()) res = cmd_lambda_regular(cubic_arg(r_args), dual_arg(s_args));
        else if (kernel_cmd->parsed()) res = cmd_kernel(cubic_arg(r_args));
        else if (stab_cmd->parsed())
            res = cmd_stabilizer(cubic_arg(r_args), s_args.empty() ? std::nullopt : std::optional(dual_arg(s_args)));
        else if (emit_cmd->parsed()) res = cmd_tables(which, data);
        else if (show_cmd->parsed()) res = cmd_packets_show(psi);
        else if (pstable_cmd->parsed() || stable_cmd->parsed()) res = cmd_stable(psi, basis);
        else if (paubert_cmd->parsed() || aubert_cmd->parsed()) res = cmd_aubert();
        else if (fd_cmd->parsed()) res = cmd_formal_degree(q);
        else if (roots_cmd->parsed()) {
            res = cmd_roots();
            if (roots_json) format = "json";
        } else if (verify_cmd->parsed()) {
            const auto scope = parse_scope(scope_arg);
            if (!scope) throw std::invalid_argument("unknown scope '" + scope_arg + "'");
            res = cmd_verify(*scope, data);
        }
        return emit(res, format, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(Status::input_error);
    }
}
