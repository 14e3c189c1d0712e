// lietrans: command-line front end for tables, grids, orbits, orbit-function
// evaluation, discrete transforms and the Gaussian interpolation demo.
//
// Exit codes: 0 success, 2 usage error, 3 data error, 1 anything else.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lietrans/lietrans.hpp"

using namespace lietrans;
namespace fs = std::filesystem;

namespace {

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class T> Vec3<T> parse_triple(const std::string& text, const char* what) {
    std::stringstream ss(text);
    std::string item;
    Vec3<T> v{};
    int n = 0;
    while (std::getline(ss, item, ',')) {
        if (n == 3) throw usage_error(std::string(what) + " needs three comma-separated values");
        std::size_t used = 0;
        try {
            if constexpr (std::is_floating_point_v<T>)
                v[n] = std::stod(item, &used);
            else
                v[n] = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw usage_error(std::string(what) + ": bad value '" + item + "'");
        ++n;
    }
    if (n != 3) throw usage_error(std::string(what) + " needs three comma-separated values");
    return v;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            out.push_back(std::stoi(item, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw usage_error(std::string(what) + ": bad value '" + item + "'");
    }
    if (out.empty()) throw usage_error(std::string(what) + " is empty");
    return out;
}

// Output goes to --out when given, else stdout.
class Output {
  public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw data_error("cannot write " + path);
    }
    std::ostream& operator*() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot read " + path);
    return in;
}

std::string rational_text(const Rational& q) {
    return q.denominator() == 1 ? std::to_string(q.numerator())
                                : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string volume_text(AlgebraId id) {
    switch (id) {
    case AlgebraId::A1xA1xA1: return "1/(2*sqrt2)";
    case AlgebraId::A2xA1: return "1/(2*sqrt6)";
    case AlgebraId::C2xA1: return "1/(4*sqrt2)";
    case AlgebraId::G2xA1: return "sqrt6/24";
    case AlgebraId::A3: return "1/12";
    case AlgebraId::B3: return "1/24";
    case AlgebraId::C3: return "sqrt2/24";
    }
    return "";
}

const std::array<std::pair<int, const char*>, 8> kPatternRows{{{7, "(a,b,c)"},
                                                               {6, "(a,b,0)"},
                                                               {5, "(a,0,c)"},
                                                               {3, "(0,b,c)"},
                                                               {4, "(a,0,0)"},
                                                               {2, "(0,b,0)"},
                                                               {1, "(0,0,c)"},
                                                               {0, "(0,0,0)"}}};

std::string marks_text(const Vec3<int>& m) {
    return "(" + std::to_string(m[0]) + ";" + std::to_string(m[1]) + ";" + std::to_string(m[2]) + ")";
}

// ---- subcommands -----------------------------------------------------------

void run_info(AlgebraId id, std::ostream& out) {
    const auto& d = cartan(id);
    out << "algebra " << name(id) << "\n";
    out << "factors";
    for (const auto& f : d.factors) out << " " << f.name;
    out << "\nCartan matrix C\n";
    for (const auto& row : d.C) out << "  " << row[0] << " " << row[1] << " " << row[2] << "\n";
    out << "inverse Cartan matrix\n";
    for (const auto& row : d.Cinv)
        out << "  " << rational_text(row[0]) << " " << rational_text(row[1]) << " " << rational_text(row[2]) << "\n";
    out << "root lengths <alpha_i,alpha_i> " << format_vec(d.rootlen2) << "\n";
    out << "marks " << marks_text(d.marks) << "\n";
    out << "comarks " << marks_text(d.comarks) << "\n";
    out << "dual marks " << marks_text(d.dual_marks) << "\n";
    for (int f = 0; f < d.factor_count(); ++f)
        out << "highest root of " << d.factors[static_cast<std::size_t>(f)].name << " (omega-check) "
            << format_vec(highest_root_omegacheck(id, f)) << "\n";
    out << "Weyl group order " << d.weyl_order << "\n";
    out << "vertices of F (omega-check)\n";
    for (const auto& v : fundamental_region_vertices(id)) out << "  " << format_vec(v) << "\n";
    out << "|F| = " << volume_text(id) << " = " << std::setprecision(12) << d.volF << "\n";
    out << "orbit sizes\n";
    for (const auto& [mask, label] : kPatternRows) out << "  " << label << " -> " << d.orbit_sizes[mask] << "\n";
}

io::json tables_json() {
    io::json all = io::json::array();
    const auto qmat = [](const Mat3q& m) {
        io::json j = io::json::array();
        for (const auto& row : m) j.push_back({rational_text(row[0]), rational_text(row[1]), rational_text(row[2])});
        return j;
    };
    for (AlgebraId id : kAllAlgebras) {
        const auto& d = cartan(id);
        const auto g = gram(id);
        io::json verts = io::json::array();
        for (const auto& v : fundamental_region_vertices(id))
            verts.push_back({rational_text(v[0]), rational_text(v[1]), rational_text(v[2])});
        io::json sizes = io::json::object();
        for (const auto& [mask, label] : kPatternRows) sizes[label] = d.orbit_sizes[mask];
        std::vector<std::string> factors;
        for (const auto& f : d.factors) factors.emplace_back(f.name);
        all.push_back({{"algebra", name(id)},
                       {"factors", factors},
                       {"cartan", d.C},
                       {"cartan_inverse", qmat(d.Cinv)},
                       {"root_lengths", {rational_text(d.rootlen2[0]), rational_text(d.rootlen2[1]),
                                         rational_text(d.rootlen2[2])}},
                       {"marks", d.marks},
                       {"comarks", d.comarks},
                       {"dual_marks", d.dual_marks},
                       {"gram_omega", qmat(g.gram_omega)},
                       {"gram_alpha", qmat(g.gram_alpha)},
                       {"weyl_order", d.weyl_order},
                       {"vertices", verts},
                       {"volume", d.volF},
                       {"volume_exact", volume_text(id)},
                       {"orbit_sizes", sizes}});
    }
    return all;
}

void run_grid(AlgebraId id, const GridSpec& spec, Family fam, bool weights, bool json, std::ostream& out) {
    if (weights) {
        DiscreteTransform t(id, spec, fam);
        if (json)
            out << io::lambda_json(id, spec, fam, t.weights(), t.norms()).dump(2) << "\n";
        else
            io::write_lambda_csv(out, t.weights(), t.norms());
        return;
    }
    const auto grid = grid_points(id, spec, fam);
    if (json)
        out << io::grid_json(id, spec, fam, grid).dump(2) << "\n";
    else
        io::write_grid_csv(out, grid);
}

void run_orbit(AlgebraId id, const Weight& w, bool even, bool coweight, std::ostream& out) {
    const Action a = coweight ? Action::Coweight : Action::Weight;
    const auto o = even ? even_orbit(w, id, a) : orbit(w, id, a);
    out << "t1,t2,t3,parity\n";
    for (const auto& p : o.points)
        out << p.coords[0] << ',' << p.coords[1] << ',' << p.coords[2] << ','
            << (o.parity_defined ? std::to_string(p.parity) : std::string("")) << '\n';
}

std::vector<Vec3d> read_points(const std::string& path, const std::optional<GridSpec>& spec, AlgebraId id) {
    auto in = open_input(path);
    std::optional<Vec3<int>> M;
    if (spec) M = spec->per_coordinate(id);
    return io::read_points_csv(in, M);
}

void run_eval(AlgebraId id, Family fam, const Weight& w, const std::vector<Vec3d>& xs, std::ostream& out) {
    OrbitFunction f(id, fam, w);
    std::vector<Complex> values;
    for (const auto& x : xs) values.push_back(f(x));
    io::write_values_csv(out, xs, values);
}

Spectrum read_spectrum(const std::string& path, std::optional<AlgebraId> id, std::optional<Family> fam,
                       const std::optional<GridSpec>& spec) {
    auto in = open_input(path);
    in >> std::ws;
    if (in.peek() == '{') {
        try {
            return io::spectrum_from_json(io::json::parse(in));
        } catch (const io::json::parse_error& e) {
            throw data_error(std::string("malformed spectrum JSON: ") + e.what());
        }
    }
    if (!id || !fam) throw usage_error("a CSV spectrum carries no metadata; pass --algebra and --family");
    return io::read_spectrum_csv(in, *id, *fam, spec.value_or(GridSpec{}));
}

void write_spectrum(const Spectrum& s, bool json, std::ostream& out) {
    if (json)
        out << io::spectrum_json(s).dump(2) << "\n";
    else
        io::write_spectrum_csv(out, s);
}

Spectrum run_transform(AlgebraId id, Family fam, const GridSpec& spec, const std::string& in_path,
                       const std::string& cache) {
    spec.validate(id);
    if (lambda_set(id, spec, fam).weights.empty())
        throw data_error("empty interior: no admissible " + std::string(name(fam)) + "-weights for M = " +
                         spec.to_string());
    auto in = open_input(in_path);
    const auto samples = io::read_samples(in);
    const auto grid = grid_points(id, spec, fam);
    const auto values = io::align_samples(samples, grid);
    if (!cache.empty()) return io::cached_matrix(cache, id, spec, fam).apply(values);
    return DiscreteTransform(id, spec, fam).forward(values);
}

void write_table(std::ostream& out, const std::vector<demo::CutValue>& cut, bool surface) {
    out << std::setprecision(17) << (surface ? "k,l," : "k,") << "x1,x2,x3,T_re,T_im,g\n";
    for (const auto& c : cut) {
        out << c.k << ',';
        if (surface) out << c.l << ',';
        out << c.x[0] << ',' << c.x[1] << ',' << c.x[2] << ',' << c.T.real() << ',' << c.T.imag() << ',' << c.g
            << '\n';
    }
}

struct DemoOptions {
    AlgebraId id = AlgebraId::A1xA1xA1;
    std::vector<int> Ms{4, 6, 8, 10};
    std::optional<Vec3d> p;
    std::uint64_t seed = 1;
    std::size_t n = 10000;
    std::optional<Vec3i> shift;
    int shift_M = 6;
    int cut_M = 0;
    int line_steps = 100;
    int surface_steps = 20;
    std::string out_dir;
};

void run_demo(const DemoOptions& o) {
    const Vec3d p = o.p.value_or(fundamental_region_barycenter(o.id));
    if (!in_fundamental_region(p, o.id, 1e-12)) throw usage_error("p = " + format_vec(p) + " is outside F");
    for (int M : o.Ms)
        if (M < 1) throw usage_error("--M-list entries must be positive");
    const auto g = demo::gaussian(o.id, p);

    std::unique_ptr<std::ofstream> files[4];
    const char* names[4] = {"errors.csv", "line_cut.csv", "surface_cut.csv", "shifted.csv"};
    const auto section = [&](int k) -> std::ostream& {
        if (o.out_dir.empty()) {
            std::cout << "# " << names[k] << "\n";
            return std::cout;
        }
        fs::create_directories(o.out_dir);
        const auto path = (fs::path(o.out_dir) / names[k]).string();
        files[k] = std::make_unique<std::ofstream>(path);
        if (!*files[k]) throw data_error("cannot write " + path);
        return *files[k];
    };

    auto& err = section(0);
    err << std::setprecision(17) << "M,grid_points,error,stderr\n";
    for (const auto& r : demo::error_table(o.id, g, o.Ms, o.n, o.seed))
        err << r.M << ',' << r.grid_size << ',' << r.error.value << ',' << r.error.stderr_ << '\n';

    const int cut_M = o.cut_M > 0 ? o.cut_M : o.Ms.back();
    const auto run = demo::interpolate(o.id, g, cut_M);
    write_table(section(1), demo::line_cut(run.spectrum, g, o.line_steps), false);
    write_table(section(2), demo::surface_cut(run.spectrum, g, o.surface_steps), true);

    if (o.shift) {
        const auto base = error_integral(g, run.spectrum.spec == demo::uniform_spec(o.id, o.shift_M)
                                                ? run.spectrum
                                                : demo::interpolate(o.id, g, o.shift_M).spectrum,
                                         o.n, o.seed);
        const auto shifted = error_integral(g, demo::interpolate(o.id, g, o.shift_M, *o.shift).spectrum, o.n, o.seed);
        auto& sh = section(3);
        sh << std::setprecision(17) << "M,shift,error_fundamental,error_shifted,ratio\n";
        sh << o.shift_M << ",\"" << (*o.shift)[0] << ',' << (*o.shift)[1] << ',' << (*o.shift)[2] << "\","
           << base.value << ',' << shifted.value << ',' << shifted.value / base.value << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl-group orbit functions and their discrete transforms on rank-3 Lie algebras"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string algebra, family = "C", M, in_path, out_path, weight, point, points_path, cache, shift, M_list, p;
    std::uint64_t seed = 1;
    std::size_t mc = 10000;
    bool json = false, even = false, coweight = false, weights = false, on_grid = false;
    DemoOptions demo_opts;

    const auto add_algebra = [&](CLI::App* c, bool required) {
        auto* o = c->add_option("--algebra,-a", algebra, "A1xA1xA1, A2xA1, C2xA1, G2xA1, A3, B3 or C3");
        if (required) o->required();
    };
    const auto add_family = [&](CLI::App* c) { c->add_option("--family,-f", family, "C, S or E")->capture_default_str(); };
    const auto add_M = [&](CLI::App* c, bool required) {
        auto* o = c->add_option("--M", M, "grid density per simple factor, e.g. 4 or 3,2");
        if (required) o->required();
    };
    const auto add_out = [&](CLI::App* c) { c->add_option("--out,-o", out_path, "output file (default stdout)"); };
    const auto add_json = [&](CLI::App* c) { c->add_flag("--json", json, "write JSON instead of CSV"); };

    auto* info = app.add_subcommand("info", "Cartan data, marks, fundamental region and orbit sizes");
    add_algebra(info, true);
    add_out(info);

    auto* dump = app.add_subcommand("dump-tables", "All algebra tables as JSON");
    add_out(dump);

    auto* grid = app.add_subcommand("grid", "Grid F_M (or the weight set with --weights)");
    add_algebra(grid, true);
    add_family(grid);
    add_M(grid, true);
    grid->add_flag("--weights", weights, "list the weight set Lambda_M with discrete norms instead");
    add_json(grid);
    add_out(grid);

    auto* orb = app.add_subcommand("orbit", "Weyl group orbit of a weight (omega coordinates)");
    add_algebra(orb, true);
    orb->add_option("--weight,-w", weight, "a,b,c")->required();
    orb->add_flag("--even", even, "orbit of the even subgroup");
    orb->add_flag("--coweight", coweight, "act on omega-check coordinates");
    add_out(orb);

    auto* eval = app.add_subcommand("eval", "Evaluate an orbit function");
    add_algebra(eval, true);
    add_family(eval);
    eval->add_option("--weight,-w", weight, "a,b,c")->required();
    auto* eval_point = eval->add_option("--point", point, "x1,x2,x3 in omega-check coordinates");
    auto* eval_in = eval->add_option("--in,-i", points_path, "CSV with x1,x2,x3 (or s1,s2,s3 with --M)");
    eval_point->excludes(eval_in);
    add_M(eval, false);
    add_out(eval);

    auto* transform = app.add_subcommand("transform", "Forward discrete transform of grid samples");
    add_algebra(transform, true);
    add_family(transform);
    add_M(transform, true);
    transform->add_option("--in,-i", in_path, "samples (CSV s1,s2,s3,re,im or JSON)")->required();
    transform->add_option("--matrix-cache", cache, "load or store the dense transform matrix here");
    add_json(transform);
    add_out(transform);

    auto* synth = app.add_subcommand("synth", "Evaluate a spectrum at arbitrary points");
    add_algebra(synth, false);
    auto* synth_family = synth->add_option("--family,-f", family, "C, S or E (needed for CSV spectra)");
    add_M(synth, false);
    synth->add_option("--in,-i", in_path, "spectrum (CSV t1,t2,t3,re,im,norm or JSON)")->required();
    auto* synth_points = synth->add_option("--points", points_path, "CSV with x1,x2,x3 (or s1,s2,s3 with --M)");
    auto* synth_grid = synth->add_flag("--grid", on_grid, "evaluate on the grid of --M");
    synth_points->excludes(synth_grid);
    add_out(synth);

    auto* demo_cmd = app.add_subcommand("demo-gauss", "Interpolate a Gaussian and report errors and cuts");
    add_algebra(demo_cmd, false);
    demo_cmd->add_option("--M-list", M_list, "grid densities to tabulate (default 4,6,8,10)");
    demo_cmd->add_option("--p", p, "Gaussian centre x1,x2,x3 (default: barycenter of F)");
    demo_cmd->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
    demo_cmd->add_option("--mc-samples", mc, "Monte Carlo points per error integral")->capture_default_str();
    demo_cmd->add_option("--shift", shift, "also compare against the weight system shifted by t1,t2,t3");
    demo_cmd->add_option("--shift-M", demo_opts.shift_M, "grid density for the shifted comparison")
        ->capture_default_str();
    demo_cmd->add_option("--cut-M", demo_opts.cut_M, "grid density for the cuts (default: last of --M-list)");
    demo_cmd->add_option("--out,-o", demo_opts.out_dir, "directory for the CSV files (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const auto alg = [&]() -> std::optional<AlgebraId> {
            if (algebra.empty()) return std::nullopt;
            return parse_algebra(algebra);
        }();
        const auto need_alg = [&] {
            if (!alg) throw usage_error("--algebra is required");
            return *alg;
        };
        const auto spec = [&]() -> std::optional<GridSpec> {
            if (M.empty()) return std::nullopt;
            GridSpec s = parse_grid_spec(M);
            if (alg) s.validate(*alg);
            return s;
        }();
        const Family fam = parse_family(family);

        if (*info) {
            Output out(out_path);
            run_info(need_alg(), *out);
        } else if (*dump) {
            Output out(out_path);
            *out << tables_json().dump(2) << "\n";
        } else if (*grid) {
            Output out(out_path);
            run_grid(need_alg(), *spec, fam, weights, json, *out);
        } else if (*orb) {
            Output out(out_path);
            run_orbit(need_alg(), parse_triple<std::int64_t>(weight, "--weight"), even, coweight, *out);
        } else if (*eval) {
            std::vector<Vec3d> xs;
            if (!point.empty())
                xs.push_back(parse_triple<double>(point, "--point"));
            else if (!points_path.empty())
                xs = read_points(points_path, spec, need_alg());
            else
                throw usage_error("eval needs --point or --in");
            Output out(out_path);
            run_eval(need_alg(), fam, parse_triple<std::int64_t>(weight, "--weight"), xs, *out);
        } else if (*transform) {
            const Spectrum s = run_transform(need_alg(), fam, *spec, in_path, cache);
            Output out(out_path);
            write_spectrum(s, json, *out);
        } else if (*synth) {
            const std::optional<Family> sfam = synth_family->count() ? std::optional(fam) : std::nullopt;
            Spectrum s = read_spectrum(in_path, alg, sfam, spec);
            if (alg && *alg != s.algebra) throw usage_error("--algebra does not match the spectrum");
            if (sfam && *sfam != s.family) throw usage_error("--family does not match the spectrum");
            std::vector<Vec3d> xs;
            if (on_grid) {
                if (!spec) throw usage_error("--grid needs --M");
                for (const auto& q : grid_points(s.algebra, *spec, s.family)) xs.push_back(q.point());
            } else if (!points_path.empty()) {
                xs = read_points(points_path, spec, s.algebra);
            } else {
                throw usage_error("synth needs --points or --grid");
            }
            const Synthesizer T(s);
            std::vector<Complex> values;
            for (const auto& x : xs) values.push_back(T(x));
            Output out(out_path);
            io::write_values_csv(*out, xs, values);
        } else if (*demo_cmd) {
            if (alg) demo_opts.id = *alg;
            if (!M_list.empty()) demo_opts.Ms = parse_int_list(M_list, "--M-list");
            if (!p.empty()) demo_opts.p = parse_triple<double>(p, "--p");
            if (!shift.empty()) demo_opts.shift = parse_triple<std::int64_t>(shift, "--shift");
            demo_opts.seed = seed;
            demo_opts.n = mc;
            run_demo(demo_opts);
        }
        return 0;
    } catch (const data_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) { // includes usage_error and bad option values
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_operation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
