#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "json_value.hpp"
#include "sl2optics/chain.hpp"
#include "sl2optics/errors.hpp"
#include "sl2optics/format.hpp"
#include "sl2optics/lens.hpp"
#include "sl2optics/lorentz.hpp"
#include "sl2optics/polarization.hpp"
#include "sl2optics/sl2c.hpp"

namespace {

using namespace sl2optics;
using sl2cli::JValue;

constexpr double kTolLorentz = 1e-9;
constexpr double kTolRecon = 1e-9;

struct GlobalFlags {
    std::string format = "json";
    bool degrees = false;
    double tol_det = kTolDet;
    double tol_cls = kTolClass;
};

void require_json(const GlobalFlags& g, const char* command) {
    if (g.format != "json") {
        throw std::invalid_argument(std::string(command) +
                                    ": --format csv is only available for table "
                                    "output (stokes, contract)");
    }
}

std::string chain_text(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

std::vector<double> parse_number_list(const std::string& text, const char* flag,
                                      std::size_t expected) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string token = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto from = token.find_first_not_of(" \t");
        const auto to = token.find_last_not_of(" \t");
        token = from == std::string::npos ? std::string() : token.substr(from, to - from + 1);
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size() || !std::isfinite(v)) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(flag) + ": expected a comma-separated "
                                        "list of finite numbers, got '" + token + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (expected != 0 && out.size() != expected) {
        throw std::invalid_argument(std::string(flag) + ": expected " +
                                    std::to_string(expected) + " numbers, got " +
                                    std::to_string(out.size()));
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

JValue jnum(double v) { return JValue::number(v); }
JValue jstr(std::string s) { return JValue::string(std::move(s)); }

JValue complex_json(const Complex& v) {
    return JValue::object().set("re", jnum(v.real())).set("im", jnum(v.imag()));
}

JValue matrix2c_json(const SL2CMatrix& m) {
    JValue re = JValue::array();
    re.push(JValue::array().push(jnum(m.a.real())).push(jnum(m.b.real())));
    re.push(JValue::array().push(jnum(m.c.real())).push(jnum(m.d.real())));
    JValue im = JValue::array();
    im.push(JValue::array().push(jnum(m.a.imag())).push(jnum(m.b.imag())));
    im.push(JValue::array().push(jnum(m.c.imag())).push(jnum(m.d.imag())));
    return JValue::object().set("re", std::move(re)).set("im", std::move(im));
}

JValue ray_json(const RayMatrix& m) {
    JValue rows = JValue::array();
    rows.push(JValue::array().push(jnum(m.a)).push(jnum(m.b)));
    rows.push(JValue::array().push(jnum(m.c)).push(jnum(m.d)));
    return rows;
}

JValue lorentz_json(const LorentzMatrix& l) {
    JValue rows = JValue::array();
    for (int i = 0; i < 4; ++i) {
        JValue row = JValue::array();
        for (int j = 0; j < 4; ++j) row.push(jnum(l.m[i][j]));
        rows.push(std::move(row));
    }
    return rows;
}

JValue stokes_json(const StokesVector& s) {
    return JValue::array().push(jnum(s.s0)).push(jnum(s.s1)).push(jnum(s.s2)).push(jnum(s.s3));
}

JValue decomposition_json(const WignerDecomposition& d) {
    JValue o = JValue::object();
    o.set("tag", jstr(to_string(d.tag())));
    o.set("particle_label", jstr(to_string(d.particle_label())));
    if (const auto* e = std::get_if<EllipticPart>(&d.part)) {
        o.set("eta", jnum(e->eta)).set("phi", jnum(e->phi));
    } else if (const auto* h = std::get_if<HyperbolicPart>(&d.part)) {
        o.set("eta", jnum(h->eta)).set("chi", jnum(h->chi));
    } else {
        o.set("gamma", jnum(std::get<ParabolicPart>(d.part).gamma));
    }
    return o;
}

JValue envelope(const char* command, JValue inputs, JValue results, JValue tolerances) {
    return JValue::object()
        .set("command", jstr(command))
        .set("inputs", std::move(inputs))
        .set("results", std::move(results))
        .set("tolerances", std::move(tolerances));
}

std::vector<SL2CMatrix> chain_matrices(const ChainSpec& spec, const GlobalFlags& g) {
    std::vector<SL2CMatrix> mats = spec.matrices(g.degrees);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (!mats[i].has_unit_det(g.tol_det)) {
            throw std::domain_error("chain element " + std::to_string(i + 1) + " (" +
                                    render(spec.elements[i]) +
                                    ") determinant differs from 1");
        }
    }
    return mats;
}

void run_compose(const GlobalFlags& g, const std::string& chain_arg) {
    require_json(g, "compose");
    const ChainSpec spec = parse_chain(chain_text(chain_arg));
    const std::vector<SL2CMatrix> mats = chain_matrices(spec, g);
    const SL2CMatrix m = compose(mats, g.tol_det);
    if (!m.has_unit_det(g.tol_det)) {
        throw IntegrityError("composed matrix failed determinant validation");
    }

    JValue results = JValue::object();
    results.set("matrix", matrix2c_json(m));
    results.set("det", complex_json(m.det()));
    if (m.is_real(g.tol_det)) {
        const ConjugacyClass cls = classify_real(m, g.tol_cls, g.tol_det);
        results.set("conjugacy", JValue::object()
                                     .set("tag", jstr(to_string(cls.tag)))
                                     .set("trace", jnum(cls.trace)));
    }

    JValue inputs = JValue::object()
                        .set("chain", jstr(render(spec)))
                        .set("degrees", JValue::boolean(g.degrees));
    JValue tols = JValue::object()
                      .set("tol_det", jnum(g.tol_det))
                      .set("tol_cls", jnum(g.tol_cls));
    std::cout << envelope("compose", std::move(inputs), std::move(results), std::move(tols)).dump();
}

void run_lift(const GlobalFlags& g, const std::string& chain_arg) {
    require_json(g, "lift");
    const ChainSpec spec = parse_chain(chain_text(chain_arg));
    const std::vector<SL2CMatrix> mats = chain_matrices(spec, g);
    const SL2CMatrix m = compose(mats, g.tol_det);
    const LorentzMatrix l = lift(m, g.tol_det);
    if (!l.is_lorentz(kTolLorentz)) {
        throw IntegrityError("lifted matrix failed Lorentz validation");
    }

    JValue inputs = JValue::object()
                        .set("chain", jstr(render(spec)))
                        .set("degrees", JValue::boolean(g.degrees));
    JValue results = JValue::object().set("matrix", lorentz_json(l));
    JValue tols = JValue::object()
                      .set("tol_det", jnum(g.tol_det))
                      .set("tol_lorentz", jnum(kTolLorentz));
    std::cout << envelope("lift", std::move(inputs), std::move(results), std::move(tols)).dump();
}

struct TrajectoryRow {
    std::size_t step;
    std::string element;
    StokesVector stokes;
    MixednessReport report;
};

void run_stokes(const GlobalFlags& g, const std::string& chain_arg,
                const std::string& in_arg, std::optional<double> decohere_r) {
    const std::vector<double> in = parse_number_list(in_arg, "--in", 4);
    if (decohere_r && !(*decohere_r >= 0.0 && *decohere_r <= 1.0)) {
        throw std::domain_error("--decohere must lie in [0, 1]");
    }

    const ChainSpec spec = parse_chain(chain_text(chain_arg));
    const std::vector<SL2CMatrix> mats = chain_matrices(spec, g);

    StokesVector s{in[0], in[1], in[2], in[3]};
    CoherencyMatrix c = coherency_from_stokes(s);  // rejects unphysical input

    std::vector<TrajectoryRow> rows;
    rows.reserve(mats.size() + 1);
    rows.push_back({0, "input", s, mixedness(s)});
    for (std::size_t i = 0; i < mats.size(); ++i) {
        try {
            c = transform_coherency(mats[i], c);
            if (decohere_r) c = decohere(c, *decohere_r);
            s = stokes_from_coherency(c);
            rows.push_back({i + 1, render(spec.elements[i]), s, mixedness(s)});
        } catch (const std::domain_error& e) {
            throw IntegrityError("propagation left the physical domain at step " +
                                 std::to_string(i + 1) + ": " + e.what());
        }
    }

    if (g.format == "csv") {
        std::cout << "step,element,s0,s1,s2,s3,m_squared,ratio,class\n";
        for (const TrajectoryRow& row : rows) {
            std::cout << row.step << ',' << csv_field(row.element) << ','
                      << format_double(row.stokes.s0) << ',' << format_double(row.stokes.s1)
                      << ',' << format_double(row.stokes.s2) << ','
                      << format_double(row.stokes.s3) << ','
                      << format_double(row.report.m_squared) << ','
                      << format_double(row.report.ratio) << ','
                      << to_string(row.report.cls) << '\n';
        }
        return;
    }

    JValue traj = JValue::array();
    for (const TrajectoryRow& row : rows) {
        traj.push(JValue::object()
                      .set("step", jnum(static_cast<double>(row.step)))
                      .set("element", jstr(row.element))
                      .set("stokes", stokes_json(row.stokes))
                      .set("m_squared", jnum(row.report.m_squared))
                      .set("ratio", jnum(row.report.ratio))
                      .set("class", jstr(to_string(row.report.cls))));
    }
    JValue inputs = JValue::object();
    inputs.set("chain", jstr(render(spec)));
    inputs.set("stokes_in", JValue::array()
                                .push(jnum(in[0]))
                                .push(jnum(in[1]))
                                .push(jnum(in[2]))
                                .push(jnum(in[3])));
    if (decohere_r) inputs.set("decohere", jnum(*decohere_r));
    inputs.set("degrees", JValue::boolean(g.degrees));
    JValue results = JValue::object().set("trajectory", std::move(traj));
    JValue tols = JValue::object()
                      .set("tol_det", jnum(g.tol_det))
                      .set("tol_mix", jnum(kTolMix));
    std::cout << envelope("stokes", std::move(inputs), std::move(results), std::move(tols)).dump();
}

void run_lens(const GlobalFlags& g, double z1, double z2, double f,
              bool want_decompose, std::optional<double> tol_focus_arg) {
    require_json(g, "lens");
    const OneLensSystem sys{z1, z2, f};
    const RayMatrix m = one_lens_chain(sys);  // validates the system
    const double tol_focus = tol_focus_arg ? *tol_focus_arg : 1e-9 * (z1 + z2);
    const bool focused = is_focused(sys, tol_focus);
    if (!m.has_unit_det(kTolDet)) {
        throw IntegrityError("one-lens matrix failed determinant validation");
    }
    if (want_decompose && z1 != z2) {
        throw std::invalid_argument("--decompose requires equal arms (z1 == z2)");
    }

    JValue results = JValue::object();
    results.set("matrix", ray_json(m));
    results.set("focused", JValue::boolean(focused));
    if (z1 == z2) {
        const RenormalizedCore rc = renormalize_core(z1, f);
        const RayMatrix core = core_matrix(rc.x).matrix();
        results.set("x", jnum(rc.x));
        results.set("scale", jnum(rc.scale));
        results.set("core", ray_json(core));
        if (rc.x > 0.0) {
            const WignerDecomposition d = decompose_core(rc.x, g.tol_cls);
            const RayMatrix rec = reconstruct(d);
            const double err = std::max({std::abs(rec.a - core.a), std::abs(rec.b - core.b),
                                         std::abs(rec.c - core.c), std::abs(rec.d - core.d)});
            if (err > kTolRecon * std::max(1.0, core.max_abs())) {
                throw IntegrityError("decomposition failed reconstruction validation");
            }
            results.set("decomposition", decomposition_json(d));
        } else if (want_decompose) {
            decompose_core(rc.x, g.tol_cls);  // surfaces the domain error
        }
    }

    JValue inputs = JValue::object()
                        .set("z1", jnum(z1))
                        .set("z2", jnum(z2))
                        .set("f", jnum(f))
                        .set("decompose", JValue::boolean(want_decompose));
    JValue tols = JValue::object()
                      .set("tol_focus", jnum(tol_focus))
                      .set("tol_cls", jnum(g.tol_cls));
    std::cout << envelope("lens", std::move(inputs), std::move(results), std::move(tols)).dump();
}

void run_contract(const GlobalFlags& g, const std::string& side_arg,
                  const std::string& eps_arg) {
    ContractionSide side;
    if (side_arg == "below") {
        side = ContractionSide::Below;
    } else if (side_arg == "above") {
        side = ContractionSide::Above;
    } else {
        throw std::invalid_argument("--side must be 'below' or 'above'");
    }
    const std::vector<double> eps = parse_number_list(eps_arg, "--eps", 0);
    const std::vector<ContractionRow> rows = contraction_sweep(eps, side);
    for (const ContractionRow& row : rows) {
        if (!(std::isfinite(row.eta) && std::isfinite(row.angle) &&
              std::isfinite(row.lower_left))) {
            throw IntegrityError("contraction row overflowed");
        }
    }

    if (g.format == "csv") {
        std::cout << "x,eta,angle,lower_left,upper_right\n";
        for (const ContractionRow& row : rows) {
            std::cout << format_double(row.x) << ',' << format_double(row.eta) << ','
                      << format_double(row.angle) << ',' << format_double(row.lower_left)
                      << ',' << format_double(row.upper_right) << '\n';
        }
        return;
    }

    JValue table = JValue::array();
    for (const ContractionRow& row : rows) {
        table.push(JValue::object()
                       .set("x", jnum(row.x))
                       .set("eta", jnum(row.eta))
                       .set("angle", jnum(row.angle))
                       .set("lower_left", jnum(row.lower_left))
                       .set("upper_right", jnum(row.upper_right)));
    }
    JValue eps_list = JValue::array();
    for (double e : eps) eps_list.push(jnum(e));
    JValue inputs = JValue::object()
                        .set("side", jstr(side_arg))
                        .set("eps", std::move(eps_list));
    JValue results = JValue::object().set("rows", std::move(table));
    std::cout << envelope("contract", std::move(inputs), std::move(results), JValue::object()).dump();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-by-two matrix optics as Lorentz-group arithmetic"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--format", g.format, "Output format: json or csv (tables only)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--degrees", g.degrees, "Interpret phase/rot arguments as degrees");
    app.add_option("--tol-det", g.tol_det, "Unit-determinant tolerance")
        ->capture_default_str();
    app.add_option("--tol-cls", g.tol_cls, "Conjugacy classification tolerance")
        ->capture_default_str();

    std::string compose_chain;
    auto* compose_cmd =
        app.add_subcommand("compose", "Multiply an optical chain into its 2x2 matrix");
    compose_cmd->add_option("chain", compose_chain, "Chain text, or - for stdin")->required();
    compose_cmd->fallthrough();

    std::string lift_chain;
    auto* lift_cmd =
        app.add_subcommand("lift", "Lift the composed chain to its 4x4 Lorentz matrix");
    lift_cmd->add_option("chain", lift_chain, "Chain text, or - for stdin")->required();
    lift_cmd->fallthrough();

    std::string stokes_chain;
    std::string stokes_in;
    double stokes_decohere = 0.0;
    auto* stokes_cmd = app.add_subcommand(
        "stokes", "Propagate a Stokes vector through the chain, element by element");
    stokes_cmd->add_option("chain", stokes_chain, "Chain text, or - for stdin")->required();
    stokes_cmd->add_option("--in", stokes_in, "Input Stokes vector S0,S1,S2,S3")->required();
    auto* decohere_opt = stokes_cmd->add_option(
        "--decohere", stokes_decohere, "Scale off-diagonal coherence by r after each element");
    stokes_cmd->fallthrough();

    double lens_z1 = 0.0, lens_z2 = 0.0, lens_f = 0.0, lens_tol_focus = 0.0;
    bool lens_decompose = false;
    auto* lens_cmd = app.add_subcommand(
        "lens", "One-lens system: chain matrix, focus verdict, core decomposition");
    lens_cmd->add_option("--z1", lens_z1, "Object-lens distance")->required();
    lens_cmd->add_option("--z2", lens_z2, "Lens-image distance")->required();
    lens_cmd->add_option("--f", lens_f, "Focal length")->required();
    lens_cmd->add_flag("--decompose", lens_decompose,
                       "Require the core decomposition (equal arms only)");
    auto* tol_focus_opt = lens_cmd->add_option(
        "--tol-focus", lens_tol_focus, "Focus tolerance (default 1e-9*(z1+z2))");
    lens_cmd->fallthrough();

    std::string contract_side;
    std::string contract_eps;
    auto* contract_cmd = app.add_subcommand(
        "contract", "Sweep the group-contraction limit x -> 2 from one side");
    contract_cmd->add_option("--side", contract_side, "below or above")->required();
    contract_cmd->add_option("--eps", contract_eps, "Comma-separated offsets in (0, 1)")
        ->required();
    contract_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compose_cmd->parsed()) {
            run_compose(g, compose_chain);
        } else if (lift_cmd->parsed()) {
            run_lift(g, lift_chain);
        } else if (stokes_cmd->parsed()) {
            run_stokes(g, stokes_chain, stokes_in,
                       decohere_opt->count() ? std::optional<double>(stokes_decohere)
                                             : std::nullopt);
        } else if (lens_cmd->parsed()) {
            run_lens(g, lens_z1, lens_z2, lens_f, lens_decompose,
                     tol_focus_opt->count() ? std::optional<double>(lens_tol_focus)
                                            : std::nullopt);
        } else if (contract_cmd->parsed()) {
            run_contract(g, contract_side, contract_eps);
        }
        return 0;
    } catch (const sl2optics::ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const sl2optics::IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << '\n';
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
